//! Finite normal-form games, correlated strategies and the basic queries on
//! them: conditional payoffs, the correlated-equilibrium test, recommendation
//! marginals, product supports and weak dominance.
//!
//! Profiles are stored densely. A profile is addressed by its flat index in
//! lexicographic order of `(s_0, s_1, ..., s_{n-1})`, so the last player's
//! strategy varies fastest.

use std::collections::HashSet;
use std::fmt;

use crate::error::{invalid, Result};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::rational::Rational;

/// Strategy counts per player plus the strides of the dense profile layout.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    counts: Vec<usize>,
    strides: Vec<usize>,
    total: usize,
}

impl Shape {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return invalid("a game needs at least one player");
        }
        if let Some(i) = counts.iter().position(|&c| c == 0) {
            return invalid(format!("player {i} has no strategies"));
        }
        let mut strides = vec![1usize; counts.len()];
        for i in (0..counts.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1]
                .checked_mul(counts[i + 1])
                .ok_or_else(|| crate::Error::InvalidArgument("profile space too large".into()))?;
        }
        let total = strides[0]
            .checked_mul(counts[0])
            .ok_or_else(|| crate::Error::InvalidArgument("profile space too large".into()))?;
        Ok(Shape {
            counts,
            strides,
            total,
        })
    }

    pub fn player_count(&self) -> usize {
        self.counts.len()
    }

    pub fn strategy_count(&self, player: usize) -> usize {
        self.counts[player]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn profile_count(&self) -> usize {
        self.total
    }

    /// Strategy of `player` in the profile at `index`.
    #[inline]
    pub fn strategy_of(&self, index: usize, player: usize) -> usize {
        (index / self.strides[player]) % self.counts[player]
    }

    /// Index of the profile obtained from `index` by switching `player` to `strategy`.
    #[inline]
    pub fn deviate(&self, index: usize, player: usize, strategy: usize) -> usize {
        let current = self.strategy_of(index, player);
        index + strategy * self.strides[player] - current * self.strides[player]
    }

    pub fn encode(&self, profile: &[usize]) -> Result<usize> {
        if profile.len() != self.counts.len() {
            return invalid(format!(
                "profile has {} entries, game has {} players",
                profile.len(),
                self.counts.len()
            ));
        }
        let mut index = 0;
        for (i, (&s, &count)) in profile.iter().zip(&self.counts).enumerate() {
            if s >= count {
                return invalid(format!("strategy {s} out of range for player {i}"));
            }
            index += s * self.strides[i];
        }
        Ok(index)
    }

    pub fn decode(&self, index: usize) -> Vec<usize> {
        (0..self.counts.len())
            .map(|i| self.strategy_of(index, i))
            .collect()
    }

    /// Indices of all profiles in which `player` plays `strategy`, in increasing order.
    pub fn profiles_with(&self, player: usize, strategy: usize) -> impl Iterator<Item = usize> + '_ {
        let stride = self.strides[player];
        let block = stride * self.counts[player];
        let outer = self.total / block;
        (0..outer).flat_map(move |o| {
            let base = o * block + strategy * stride;
            base..base + stride
        })
    }

    pub(crate) fn check_player(&self, player: usize) -> Result<()> {
        if player >= self.counts.len() {
            return invalid(format!(
                "player index {player} out of range (game has {} players)",
                self.counts.len()
            ));
        }
        Ok(())
    }

    pub(crate) fn check_strategy(&self, player: usize, strategy: usize) -> Result<()> {
        self.check_player(player)?;
        if strategy >= self.counts[player] {
            return invalid(format!(
                "strategy index {strategy} out of range for player {player} ({} strategies)",
                self.counts[player]
            ));
        }
        Ok(())
    }
}

/// A finite game in normal form with exact rational payoffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    players: Vec<String>,
    strategies: Vec<Vec<String>>,
    shape: Shape,
    /// `payoffs[profile][player]`.
    payoffs: Vec<Vec<Rational>>,
}

impl Game {
    /// `payoffs` is indexed by flat profile index and holds one payoff per player.
    pub fn new(
        players: Vec<String>,
        strategies: Vec<Vec<String>>,
        payoffs: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        if players.len() != strategies.len() {
            return invalid(format!(
                "{} player labels but {} strategy lists",
                players.len(),
                strategies.len()
            ));
        }
        let mut seen = HashSet::new();
        for p in &players {
            if !seen.insert(p) {
                return invalid(format!("duplicate player label {p:?}"));
            }
        }
        for (i, names) in strategies.iter().enumerate() {
            let mut seen = HashSet::new();
            for name in names {
                if !seen.insert(name) {
                    return invalid(format!("duplicate strategy label {name:?} for player {i}"));
                }
            }
        }
        let shape = Shape::new(strategies.iter().map(Vec::len).collect())?;
        if payoffs.len() != shape.profile_count() {
            return invalid(format!(
                "payoff table has {} entries, expected {}",
                payoffs.len(),
                shape.profile_count()
            ));
        }
        if let Some(k) = payoffs.iter().position(|v| v.len() != players.len()) {
            return invalid(format!(
                "payoff vector at profile {k} has {} entries, expected {}",
                payoffs[k].len(),
                players.len()
            ));
        }
        Ok(Game {
            players,
            strategies,
            shape,
            payoffs,
        })
    }

    /// Builds a game with generated labels (`"1"`, `"2"`, ... for players and
    /// `"s0"`, `"s1"`, ... for strategies) from a payoff function on profiles.
    pub fn from_fn(
        counts: &[usize],
        mut payoff: impl FnMut(&[usize]) -> Vec<Rational>,
    ) -> Result<Self> {
        let shape = Shape::new(counts.to_vec())?;
        let players = (1..=counts.len()).map(|i| i.to_string()).collect();
        let strategies = counts
            .iter()
            .map(|&c| (0..c).map(|s| format!("s{s}")).collect())
            .collect();
        let payoffs = (0..shape.profile_count())
            .map(|k| payoff(&shape.decode(k)))
            .collect();
        Game::new(players, strategies, payoffs)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn player_count(&self) -> usize {
        self.players.len()
    }

    pub fn player_labels(&self) -> &[String] {
        &self.players
    }

    pub fn strategy_count(&self, player: usize) -> usize {
        self.shape.strategy_count(player)
    }

    pub fn strategy_labels(&self, player: usize) -> &[String] {
        &self.strategies[player]
    }

    pub fn profile_count(&self) -> usize {
        self.shape.profile_count()
    }

    #[inline]
    pub fn payoff(&self, player: usize, profile: usize) -> &Rational {
        &self.payoffs[profile][player]
    }

    pub fn payoff_vector(&self, profile: usize) -> &[Rational] {
        &self.payoffs[profile]
    }

    pub fn player_index(&self, label: &str) -> Option<usize> {
        self.players.iter().position(|p| p == label)
    }

    pub fn strategy_index(&self, player: usize, label: &str) -> Option<usize> {
        self.strategies.get(player)?.iter().position(|s| s == label)
    }

    /// Resolves a list of strategy labels (one per player) to a profile index.
    pub fn profile_index<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        if labels.len() != self.player_count() {
            return invalid(format!(
                "profile has {} labels, game has {} players",
                labels.len(),
                self.player_count()
            ));
        }
        let mut profile = Vec::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            let label = label.as_ref();
            match self.strategy_index(i, label) {
                Some(s) => profile.push(s),
                None => {
                    return invalid(format!(
                        "unknown strategy {label:?} for player {:?}",
                        self.players[i]
                    ))
                }
            }
        }
        self.shape.encode(&profile)
    }

    pub fn profile_labels(&self, profile: usize) -> Vec<&str> {
        (0..self.player_count())
            .map(|i| self.strategies[i][self.shape.strategy_of(profile, i)].as_str())
            .collect()
    }

    /// Comma-joined labels, the key format used by game and distribution files.
    pub fn profile_key(&self, profile: usize) -> String {
        self.profile_labels(profile).join(",")
    }

    /// Payoff change for `player` when moving from `profile` to `strategy`,
    /// everybody else fixed: `u_i(t_i, s_{-i}) - u_i(s)`.
    #[inline]
    pub fn deviation_difference(&self, player: usize, profile: usize, strategy: usize) -> Rational {
        let target = self.shape.deviate(profile, player, strategy);
        self.payoff(player, target) - self.payoff(player, profile)
    }

    /// Copy of the game in which `player` gets an extra strategy `label`
    /// whose payoffs (for everyone) equal those of `original`.
    pub fn with_duplicate_strategy(&self, player: usize, original: usize, label: &str) -> Result<Game> {
        self.shape.check_strategy(player, original)?;
        let mut strategies = self.strategies.clone();
        strategies[player].push(label.to_string());
        let mut counts = self.shape.counts.clone();
        counts[player] += 1;
        let shape = Shape::new(counts)?;
        let payoffs = (0..shape.profile_count())
            .map(|k| {
                let mut profile = shape.decode(k);
                if profile[player] == self.shape.counts[player] {
                    profile[player] = original;
                }
                let source = self.shape.encode(&profile).expect("in range");
                self.payoffs[source].clone()
            })
            .collect();
        Game::new(self.players.clone(), strategies, payoffs)
    }
}

/// A probability distribution over the strategy profiles of a game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelatedStrategy {
    shape: Shape,
    probabilities: Vec<Rational>,
}

impl CorrelatedStrategy {
    /// Checks nonnegativity and that the masses sum to exactly one.
    pub fn new(shape: &Shape, probabilities: Vec<Rational>) -> Result<Self> {
        if probabilities.len() != shape.profile_count() {
            return invalid(format!(
                "distribution has {} entries, game has {} profiles",
                probabilities.len(),
                shape.profile_count()
            ));
        }
        if let Some(k) = probabilities.iter().position(Rational::is_negative) {
            return invalid(format!("negative probability at profile {k}"));
        }
        let total: Rational = probabilities.iter().sum();
        if !total.is_one() {
            return invalid(format!("probabilities sum to {total}, not 1"));
        }
        Ok(CorrelatedStrategy {
            shape: shape.clone(),
            probabilities,
        })
    }

    /// Sparse constructor; unlisted profiles get probability zero.
    pub fn from_entries(shape: &Shape, entries: &[(usize, Rational)]) -> Result<Self> {
        let mut probabilities = vec![Rational::zero(); shape.profile_count()];
        for (profile, p) in entries {
            if *profile >= probabilities.len() {
                return invalid(format!("profile index {profile} out of range"));
            }
            probabilities[*profile] += p;
        }
        Self::new(shape, probabilities)
    }

    pub fn point_mass(shape: &Shape, profile: usize) -> Result<Self> {
        Self::from_entries(shape, &[(profile, Rational::one())])
    }

    pub fn uniform(shape: &Shape) -> Self {
        let p = Rational::one() / Rational::from(shape.profile_count());
        CorrelatedStrategy {
            shape: shape.clone(),
            probabilities: vec![p; shape.profile_count()],
        }
    }

    /// Convex combination `Σ w_k ρ_k`. Weights must be nonnegative and sum to one.
    pub fn mixture(parts: &[(Rational, &CorrelatedStrategy)]) -> Result<Self> {
        let Some((_, first)) = parts.first() else {
            return invalid("empty mixture");
        };
        let shape = first.shape.clone();
        let mut probabilities = vec![Rational::zero(); shape.profile_count()];
        for (w, rho) in parts {
            if rho.shape != shape {
                return invalid("mixture components over different games");
            }
            for (acc, p) in probabilities.iter_mut().zip(&rho.probabilities) {
                *acc += w * p;
            }
        }
        Self::new(&shape, probabilities)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    #[inline]
    pub fn probability(&self, profile: usize) -> &Rational {
        &self.probabilities[profile]
    }

    pub fn probabilities(&self) -> &[Rational] {
        &self.probabilities
    }

    /// Profiles with strictly positive probability.
    pub fn support(&self) -> Vec<usize> {
        (0..self.probabilities.len())
            .filter(|&k| self.probabilities[k].is_positive())
            .collect()
    }

    pub(crate) fn check_game(&self, game: &Game) -> Result<()> {
        if &self.shape != game.shape() {
            return invalid(format!(
                "distribution shape {:?} does not match game shape {:?}",
                self.shape.counts(),
                game.shape().counts()
            ));
        }
        Ok(())
    }
}

/// One nonempty subset of strategies per player; stands for the product set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductSupport {
    sets: Vec<Vec<usize>>,
}

impl ProductSupport {
    pub fn new(shape: &Shape, mut sets: Vec<Vec<usize>>) -> Result<Self> {
        if sets.len() != shape.player_count() {
            return invalid(format!(
                "support lists {} players, game has {}",
                sets.len(),
                shape.player_count()
            ));
        }
        for (i, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return invalid(format!("empty support for player {i}"));
            }
            if let Some(&s) = set.iter().find(|&&s| s >= shape.strategy_count(i)) {
                return invalid(format!("strategy {s} out of range for player {i}"));
            }
        }
        Ok(ProductSupport { sets })
    }

    pub fn full(shape: &Shape) -> Self {
        ProductSupport {
            sets: shape.counts().iter().map(|&c| (0..c).collect()).collect(),
        }
    }

    pub fn of_profile(shape: &Shape, profile: usize) -> Self {
        ProductSupport {
            sets: shape.decode(profile).into_iter().map(|s| vec![s]).collect(),
        }
    }

    /// Builds the support whose player-`i` set is the bit pattern `masks[i]`.
    pub fn from_masks(shape: &Shape, masks: &[u64]) -> Result<Self> {
        let sets = masks
            .iter()
            .map(|&m| (0..64).filter(|b| m >> b & 1 == 1).collect())
            .collect();
        Self::new(shape, sets)
    }

    /// Resolves labels per player against `game`.
    pub fn from_labels<S: AsRef<str>>(game: &Game, labels: &[Vec<S>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(labels.len());
        for (i, names) in labels.iter().enumerate() {
            let mut set = Vec::new();
            for name in names {
                let name = name.as_ref();
                match game.strategy_index(i, name) {
                    Some(s) => set.push(s),
                    None => return invalid(format!("unknown strategy {name:?} for player {i}")),
                }
            }
            sets.push(set);
        }
        Self::new(game.shape(), sets)
    }

    pub fn player_count(&self) -> usize {
        self.sets.len()
    }

    pub fn strategies(&self, player: usize) -> &[usize] {
        &self.sets[player]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn contains(&self, player: usize, strategy: usize) -> bool {
        self.sets[player].binary_search(&strategy).is_ok()
    }

    pub fn contains_profile(&self, shape: &Shape, profile: usize) -> bool {
        (0..self.sets.len()).all(|i| self.contains(i, shape.strategy_of(profile, i)))
    }

    /// Componentwise inclusion.
    pub fn is_subset_of(&self, other: &ProductSupport) -> bool {
        self.sets.len() == other.sets.len()
            && self
                .sets
                .iter()
                .zip(&other.sets)
                .all(|(a, b)| a.iter().all(|s| b.binary_search(s).is_ok()))
    }

    /// Sum of per-player set sizes.
    pub fn total_size(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    /// Number of profiles in the product set.
    pub fn profile_count(&self) -> usize {
        self.sets.iter().map(Vec::len).product()
    }

    /// Flat indices of every profile in the product set, in increasing order.
    pub fn profiles(&self, shape: &Shape) -> Vec<usize> {
        (0..shape.profile_count())
            .filter(|&k| self.contains_profile(shape, k))
            .collect()
    }

    pub fn masks(&self) -> Vec<u64> {
        self.sets
            .iter()
            .map(|set| set.iter().fold(0u64, |m, &s| m | 1 << s))
            .collect()
    }

    pub(crate) fn check_game(&self, game: &Game) -> Result<()> {
        if self.sets.len() != game.player_count() {
            return invalid("support does not match the game's player count");
        }
        for (i, set) in self.sets.iter().enumerate() {
            if set.is_empty() {
                return invalid(format!("empty support for player {i}"));
            }
            if set.iter().any(|&s| s >= game.strategy_count(i)) {
                return invalid(format!("support strategy out of range for player {i}"));
            }
        }
        Ok(())
    }

    /// Human-readable form such as `{y1,z1}x{y2}x{y3}`.
    pub fn describe(&self, game: &Game) -> String {
        self.sets
            .iter()
            .enumerate()
            .map(|(i, set)| {
                let names: Vec<&str> = set
                    .iter()
                    .map(|&s| game.strategy_labels(i)[s].as_str())
                    .collect();
                format!("{{{}}}", names.join(","))
            })
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// Independent mixed strategy for every player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedProfile {
    strategies: Vec<Vec<Rational>>,
}

impl MixedProfile {
    pub fn new(strategies: Vec<Vec<Rational>>) -> Result<Self> {
        if strategies.is_empty() {
            return invalid("mixed profile without players");
        }
        for (i, sigma) in strategies.iter().enumerate() {
            if sigma.is_empty() {
                return invalid(format!("player {i} has an empty mixed strategy"));
            }
            if sigma.iter().any(Rational::is_negative) {
                return invalid(format!("player {i} has a negative probability"));
            }
            let total: Rational = sigma.iter().sum();
            if !total.is_one() {
                return invalid(format!("player {i} probabilities sum to {total}"));
            }
        }
        Ok(MixedProfile { strategies })
    }

    pub fn player(&self, i: usize) -> &[Rational] {
        &self.strategies[i]
    }

    pub fn is_completely_mixed(&self) -> bool {
        self.strategies
            .iter()
            .all(|s| s.iter().all(Rational::is_positive))
    }
}

/// A violated obedience inequality: the player does strictly better by
/// switching from `recommended` to `deviation` when recommended `recommended`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeViolation {
    pub player: usize,
    pub recommended: usize,
    pub deviation: usize,
    /// Unnormalized expected payoff of obeying.
    pub obey_value: Rational,
    /// Unnormalized expected payoff of deviating.
    pub deviation_value: Rational,
}

impl fmt::Display for CeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "player {} recommended strategy {} gains by switching to {} ({} > {})",
            self.player, self.recommended, self.deviation, self.deviation_value, self.obey_value
        )
    }
}

/// `Σ_{s_{-i}} ρ(s_i, s_{-i}) · u_i(s_i', s_{-i})`.
pub fn conditional_deviation_value(
    game: &Game,
    rho: &CorrelatedStrategy,
    player: usize,
    recommended: usize,
    deviation: usize,
) -> Result<Rational> {
    rho.check_game(game)?;
    game.shape().check_strategy(player, recommended)?;
    game.shape().check_strategy(player, deviation)?;
    Ok(conditional_value_unchecked(game, rho.probabilities(), player, recommended, deviation))
}

pub(crate) fn conditional_value_unchecked(
    game: &Game,
    weights: &[Rational],
    player: usize,
    recommended: usize,
    deviation: usize,
) -> Rational {
    let shape = game.shape();
    let mut total = Rational::zero();
    for k in shape.profiles_with(player, recommended) {
        let w = &weights[k];
        if w.is_zero() {
            continue;
        }
        let target = shape.deviate(k, player, deviation);
        total += w * game.payoff(player, target);
    }
    total
}

/// First violated obedience inequality, scanning players, recommendations
/// and deviations in index order; `None` if `rho` is a correlated equilibrium.
pub fn find_ce_violation(game: &Game, rho: &CorrelatedStrategy) -> Result<Option<CeViolation>> {
    rho.check_game(game)?;
    for player in 0..game.player_count() {
        for recommended in 0..game.strategy_count(player) {
            let obey = conditional_value_unchecked(game, rho.probabilities(), player, recommended, recommended);
            for deviation in 0..game.strategy_count(player) {
                if deviation == recommended {
                    continue;
                }
                let value =
                    conditional_value_unchecked(game, rho.probabilities(), player, recommended, deviation);
                if value > obey {
                    return Ok(Some(CeViolation {
                        player,
                        recommended,
                        deviation,
                        obey_value: obey,
                        deviation_value: value,
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_correlated_equilibrium(game: &Game, rho: &CorrelatedStrategy) -> Result<bool> {
    Ok(find_ce_violation(game, rho)?.is_none())
}

/// Probability that `player` is recommended each of their strategies.
pub fn marginal(rho: &CorrelatedStrategy, player: usize) -> Result<Vec<Rational>> {
    let shape = rho.shape();
    shape.check_player(player)?;
    Ok((0..shape.strategy_count(player))
        .map(|s| shape.profiles_with(player, s).map(|k| rho.probability(k)).sum())
        .collect())
}

/// Smallest product set containing the support of `rho`.
pub fn product_support(rho: &CorrelatedStrategy) -> ProductSupport {
    let shape = rho.shape();
    let sets = (0..shape.player_count())
        .map(|i| {
            marginal(rho, i)
                .expect("player in range")
                .iter()
                .enumerate()
                .filter(|(_, p)| p.is_positive())
                .map(|(s, _)| s)
                .collect()
        })
        .collect();
    ProductSupport { sets }
}

pub fn is_completely_mixed(rho: &CorrelatedStrategy) -> bool {
    rho.probabilities().iter().all(Rational::is_positive)
}

/// A mixture over `player`'s strategies that weakly dominates `strategy`,
/// if one exists. The returned mixture maximizes the total slack
/// `Σ_{s_{-i}} [Σ σ(t) u_i(t, s_{-i}) - u_i(s_i, s_{-i})]`.
pub fn dominating_mixture(game: &Game, player: usize, strategy: usize) -> Result<Option<Vec<Rational>>> {
    game.shape().check_strategy(player, strategy)?;
    let shape = game.shape();
    let n = game.strategy_count(player);
    let mut lp = LinearProgram::new(n);
    let mut objective = vec![Rational::zero(); n];
    let mut offset = Rational::zero();
    for k in shape.profiles_with(player, strategy) {
        let coeffs: Vec<Rational> = (0..n)
            .map(|t| game.payoff(player, shape.deviate(k, player, t)).clone())
            .collect();
        for (o, c) in objective.iter_mut().zip(&coeffs) {
            *o += c;
        }
        offset += game.payoff(player, k);
        lp.add_constraint(coeffs, Relation::Ge, game.payoff(player, k).clone());
    }
    lp.add_constraint(vec![Rational::one(); n], Relation::Eq, Rational::one());
    lp.set_objective(objective);
    match lp.solve()? {
        LpOutcome::Optimal { value, point } => {
            if value > offset {
                Ok(Some(point))
            } else {
                Ok(None)
            }
        }
        // σ = δ_{s_i} is always feasible and the objective is bounded on the simplex.
        other => unreachable!("weak dominance LP cannot be {other:?}"),
    }
}

/// Strategies of `player` that are weakly dominated by some mixture.
pub fn weakly_dominated_strategies(game: &Game, player: usize) -> Result<Vec<usize>> {
    game.shape().check_player(player)?;
    let mut out = Vec::new();
    for s in 0..game.strategy_count(player) {
        if dominating_mixture(game, player, s)?.is_some() {
            out.push(s);
        }
    }
    Ok(out)
}

/// The independent product distribution `ρ(s) = Π_i σ_i(s_i)`.
pub fn product_distribution(shape: &Shape, sigma: &MixedProfile) -> Result<CorrelatedStrategy> {
    if sigma.strategies.len() != shape.player_count() {
        return invalid("mixed profile does not match the game's player count");
    }
    for i in 0..shape.player_count() {
        if sigma.player(i).len() != shape.strategy_count(i) {
            return invalid(format!("mixed strategy of player {i} has the wrong length"));
        }
    }
    let probabilities = (0..shape.profile_count())
        .map(|k| {
            (0..shape.player_count())
                .map(|i| &sigma.player(i)[shape.strategy_of(k, i)])
                .product()
        })
        .collect();
    CorrelatedStrategy::new(shape, probabilities)
}
