//! Deviation plans, dual vectors and the support-level perfection test.
//!
//! A correlated equilibrium is correlated perfect exactly when no dual vector
//! restricted to its product support yields a strictly positive aggregate
//! gain at some profile. Because each profile's aggregate gain is constrained
//! to be nonnegative, that universal statement reduces to one LP: maximize
//! the total gain and compare the optimum with zero.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::game::{find_ce_violation, product_support, CorrelatedStrategy, Game, ProductSupport, Shape};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::rational::Rational;

/// Row-stochastic matrix `α_i(t | s)`: when recommended `s`, switch to `t`
/// with probability `rows[s][t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeviationPlan {
    rows: Vec<Vec<Rational>>,
}

impl DeviationPlan {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return invalid("deviation plan without strategies");
        }
        for (s, row) in rows.iter().enumerate() {
            if row.len() != n {
                return invalid(format!("deviation plan row {s} has {} entries, expected {n}", row.len()));
            }
            if row.iter().any(Rational::is_negative) {
                return invalid(format!("deviation plan row {s} has a negative entry"));
            }
            let total: Rational = row.iter().sum();
            if !total.is_one() {
                return invalid(format!("deviation plan row {s} sums to {total}"));
            }
        }
        Ok(DeviationPlan { rows })
    }

    /// Always obey.
    pub fn identity(strategy_count: usize) -> Self {
        let rows = (0..strategy_count)
            .map(|s| unit_row(strategy_count, s))
            .collect();
        DeviationPlan { rows }
    }

    /// Pure plan: recommendation `from` switches to `to` for each listed
    /// pair, every other recommendation is obeyed.
    pub fn pure(strategy_count: usize, moves: &[(usize, usize)]) -> Result<Self> {
        let mut plan = Self::identity(strategy_count);
        for &(from, to) in moves {
            if from >= strategy_count || to >= strategy_count {
                return invalid(format!("move {from} -> {to} out of range"));
            }
            plan.rows[from] = unit_row(strategy_count, to);
        }
        Ok(plan)
    }

    pub fn strategy_count(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, recommended: usize) -> &[Rational] {
        &self.rows[recommended]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn is_identity_row(&self, recommended: usize) -> bool {
        self.rows[recommended]
            .iter()
            .enumerate()
            .all(|(t, a)| if t == recommended { a.is_one() } else { a.is_zero() })
    }
}

fn unit_row(n: usize, at: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); n];
    row[at] = Rational::one();
    row
}

/// One deviation plan per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualVectorProfile {
    plans: Vec<DeviationPlan>,
}

impl DualVectorProfile {
    pub fn new(shape: &Shape, plans: Vec<DeviationPlan>) -> Result<Self> {
        if plans.len() != shape.player_count() {
            return invalid(format!(
                "{} deviation plans for {} players",
                plans.len(),
                shape.player_count()
            ));
        }
        for (i, plan) in plans.iter().enumerate() {
            if plan.strategy_count() != shape.strategy_count(i) {
                return invalid(format!("deviation plan of player {i} has the wrong size"));
            }
        }
        Ok(DualVectorProfile { plans })
    }

    pub fn identity(shape: &Shape) -> Self {
        DualVectorProfile {
            plans: shape.counts().iter().map(|&c| DeviationPlan::identity(c)).collect(),
        }
    }

    pub fn plan(&self, player: usize) -> &DeviationPlan {
        &self.plans[player]
    }

    pub fn plans(&self) -> &[DeviationPlan] {
        &self.plans
    }

    fn check_game(&self, game: &Game) -> Result<()> {
        if self.plans.len() != game.player_count()
            || self
                .plans
                .iter()
                .enumerate()
                .any(|(i, p)| p.strategy_count() != game.strategy_count(i))
        {
            return invalid("dual vector does not match the game");
        }
        Ok(())
    }
}

/// `D_i(s, α_i) = Σ_t α_i(t | s_i) (u_i(t, s_{-i}) - u_i(s))`.
pub fn deviation_gain(game: &Game, profile: usize, player: usize, plan: &DeviationPlan) -> Result<Rational> {
    game.shape().check_player(player)?;
    if profile >= game.profile_count() {
        return invalid(format!("profile index {profile} out of range"));
    }
    if plan.strategy_count() != game.strategy_count(player) {
        return invalid("deviation plan does not match the player's strategy count");
    }
    Ok(gain_unchecked(game, profile, player, plan))
}

fn gain_unchecked(game: &Game, profile: usize, player: usize, plan: &DeviationPlan) -> Rational {
    let recommended = game.shape().strategy_of(profile, player);
    let mut total = Rational::zero();
    for (t, a) in plan.row(recommended).iter().enumerate() {
        if t != recommended && !a.is_zero() {
            total += a * game.deviation_difference(player, profile, t);
        }
    }
    total
}

/// `Σ_i D_i(s, α_i)`.
pub fn aggregate_gain(game: &Game, alpha: &DualVectorProfile, profile: usize) -> Result<Rational> {
    alpha.check_game(game)?;
    if profile >= game.profile_count() {
        return invalid(format!("profile index {profile} out of range"));
    }
    Ok(aggregate_unchecked(game, alpha, profile))
}

fn aggregate_unchecked(game: &Game, alpha: &DualVectorProfile, profile: usize) -> Rational {
    (0..game.player_count())
        .map(|i| gain_unchecked(game, profile, i, alpha.plan(i)))
        .sum()
}

/// First profile where the aggregate gain is negative, with that gain.
pub fn find_dual_violation(game: &Game, alpha: &DualVectorProfile) -> Result<Option<(usize, Rational)>> {
    alpha.check_game(game)?;
    for k in 0..game.profile_count() {
        let g = aggregate_unchecked(game, alpha, k);
        if g.is_negative() {
            return Ok(Some((k, g)));
        }
    }
    Ok(None)
}

pub fn is_dual_vector(game: &Game, alpha: &DualVectorProfile) -> Result<bool> {
    Ok(find_dual_violation(game, alpha)?.is_none())
}

/// Every recommendation outside the support is obeyed.
pub fn is_restricted(alpha: &DualVectorProfile, support: &ProductSupport) -> bool {
    alpha.plans.len() == support.player_count()
        && alpha.plans.iter().enumerate().all(|(i, plan)| {
            (0..plan.strategy_count()).all(|s| support.contains(i, s) || plan.is_identity_row(s))
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GainWitness {
    pub profile: usize,
    pub gain: Rational,
}

/// A restricted dual vector with strictly positive aggregate gain at the
/// listed profiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub alpha: DualVectorProfile,
    pub witnesses: Vec<GainWitness>,
}

impl Refutation {
    /// Collects every profile with positive aggregate gain under `alpha`.
    pub fn from_alpha(game: &Game, alpha: DualVectorProfile) -> Result<Self> {
        alpha.check_game(game)?;
        let witnesses = (0..game.profile_count())
            .filter_map(|k| {
                let gain = aggregate_unchecked(game, &alpha, k);
                gain.is_positive().then_some(GainWitness { profile: k, gain })
            })
            .collect();
        Ok(Refutation { alpha, witnesses })
    }

    /// Rechecks everything the refutation claims: `alpha` is a dual vector,
    /// restricted to `support`, and each witness gain recomputes exactly and
    /// is positive. At least one witness is required.
    pub fn verify(&self, game: &Game, support: &ProductSupport) -> bool {
        matches!(is_dual_vector(game, &self.alpha), Ok(true))
            && is_restricted(&self.alpha, support)
            && !self.witnesses.is_empty()
            && self.witnesses.iter().all(|w| {
                w.gain.is_positive()
                    && aggregate_gain(game, &self.alpha, w.profile).is_ok_and(|g| g == w.gain)
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CpeVerdict {
    /// The maximal total gain over restricted dual vectors is zero.
    Perfect { optimum: Rational },
    Refuted(Refutation),
}

impl CpeVerdict {
    pub fn is_perfect(&self) -> bool {
        matches!(self, CpeVerdict::Perfect { .. })
    }

    pub fn refutation(&self) -> Option<&Refutation> {
        match self {
            CpeVerdict::Perfect { .. } => None,
            CpeVerdict::Refuted(r) => Some(r),
        }
    }
}

impl fmt::Display for CpeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CpeVerdict::Perfect { .. } => write!(f, "perfect"),
            CpeVerdict::Refuted(r) => write!(f, "refuted ({} witness profiles)", r.witnesses.len()),
        }
    }
}

/// Decides the equality condition for every dual vector restricted to `support`.
///
/// Variables are the off-diagonal entries `α_i(t | s)` for `s` in the
/// support; the diagonal absorbs the remaining row mass, so the row
/// constraints read `Σ_{t≠s} α_i(t | s) ≤ 1`. Each profile's aggregate gain
/// is constrained nonnegative and their sum is maximized.
pub fn certify_support(game: &Game, support: &ProductSupport) -> Result<CpeVerdict> {
    support.check_game(game)?;
    let shape = game.shape();
    let n = game.player_count();

    // variable index of α_i(t | s)
    let mut index = vec![Vec::new(); n];
    let mut keys = Vec::new();
    for i in 0..n {
        let count = game.strategy_count(i);
        index[i] = vec![vec![usize::MAX; count]; count];
        for &s in support.strategies(i) {
            for t in 0..count {
                if t != s {
                    index[i][s][t] = keys.len();
                    keys.push((i, s, t));
                }
            }
        }
    }
    if keys.is_empty() {
        // Every player has a single strategy: no deviation exists.
        return Ok(CpeVerdict::Perfect {
            optimum: Rational::zero(),
        });
    }

    let mut lp = LinearProgram::new(keys.len());
    for i in 0..n {
        for &s in support.strategies(i) {
            let terms: Vec<(usize, Rational)> = (0..game.strategy_count(i))
                .filter(|&t| t != s)
                .map(|t| (index[i][s][t], Rational::one()))
                .collect();
            if !terms.is_empty() {
                lp.add_sparse_constraint(&terms, Relation::Le, Rational::one());
            }
        }
    }
    let mut objective = vec![Rational::zero(); keys.len()];
    for k in 0..game.profile_count() {
        let mut terms = Vec::new();
        for i in 0..n {
            let s = shape.strategy_of(k, i);
            if !support.contains(i, s) {
                continue;
            }
            for t in 0..game.strategy_count(i) {
                if t == s {
                    continue;
                }
                let d = game.deviation_difference(i, k, t);
                if !d.is_zero() {
                    let var = index[i][s][t];
                    objective[var] += &d;
                    terms.push((var, d));
                }
            }
        }
        if !terms.is_empty() {
            lp.add_sparse_constraint(&terms, Relation::Ge, Rational::zero());
        }
    }
    lp.set_objective(objective);

    let (optimum, point) = match lp.solve()? {
        LpOutcome::Optimal { value, point } => (value, point),
        // α = identity is feasible and all variables lie in [0, 1].
        other => unreachable!("dual vector LP cannot be {other:?}"),
    };
    if optimum.is_zero() {
        return Ok(CpeVerdict::Perfect { optimum });
    }

    let plans = (0..n)
        .map(|i| {
            let count = game.strategy_count(i);
            let rows = (0..count)
                .map(|s| {
                    if !support.contains(i, s) {
                        return unit_row(count, s);
                    }
                    let mut row: Vec<Rational> = (0..count)
                        .map(|t| if t == s { Rational::zero() } else { point[index[i][s][t]].clone() })
                        .collect();
                    let off: Rational = row.iter().sum();
                    row[s] = Rational::one() - off;
                    row
                })
                .collect();
            DeviationPlan::new(rows).expect("LP rows are stochastic")
        })
        .collect();
    let alpha = DualVectorProfile { plans };
    let refutation = Refutation::from_alpha(game, alpha)?;
    debug_assert!(refutation.verify(game, support));
    Ok(CpeVerdict::Refuted(refutation))
}

/// Correlated perfection of a correlated equilibrium. Fails with
/// [`Error::NotCorrelatedEquilibrium`] when `rho` violates obedience.
pub fn is_cpe(game: &Game, rho: &CorrelatedStrategy) -> Result<CpeVerdict> {
    if let Some(violation) = find_ce_violation(game, rho)? {
        return Err(Error::NotCorrelatedEquilibrium(Box::new(violation)));
    }
    certify_support(game, &product_support(rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::q;

    #[test]
    fn identity_plans_have_zero_gain() {
        let game = fixtures::example1_game();
        let alpha = DualVectorProfile::identity(game.shape());
        for k in 0..game.profile_count() {
            for i in 0..3 {
                assert_eq!(deviation_gain(&game, k, i, alpha.plan(i)).unwrap(), 0);
            }
        }
        assert!(is_dual_vector(&game, &alpha).unwrap());
        let support = ProductSupport::of_profile(game.shape(), 0);
        assert!(is_restricted(&alpha, &support));
    }

    #[test]
    fn pdce_game_gains_at_named_profile() {
        let game = fixtures::pdce_game();
        let alpha = fixtures::pdce_refuting_alpha(&game);
        let s = game.profile_index(&["y1", "y2", "x3"]).unwrap();
        assert_eq!(deviation_gain(&game, s, 0, alpha.plan(0)).unwrap(), -1);
        assert_eq!(deviation_gain(&game, s, 1, alpha.plan(1)).unwrap(), 3);
        assert_eq!(aggregate_gain(&game, &alpha, s).unwrap(), 2);
    }

    #[test]
    fn nonconvexity_alpha_is_restricted_dual_vector() {
        let game = fixtures::example1_game();
        let alpha = fixtures::example1_nonconvexity_alpha(&game);
        assert!(is_dual_vector(&game, &alpha).unwrap());
        let wide = ProductSupport::from_labels(&game, &[vec!["y1", "z1"], vec!["y2", "z2"], vec!["y3"]]).unwrap();
        let narrow = ProductSupport::from_labels(&game, &[vec!["y1"], vec!["y2"], vec!["y3"]]).unwrap();
        assert!(is_restricted(&alpha, &wide));
        assert!(!is_restricted(&alpha, &narrow));
    }

    #[test]
    fn losing_plan_is_not_a_dual_vector() {
        // Player 1 strictly prefers a to b; player 2 is indifferent.
        let game = Game::from_fn(&[2, 2], |p| vec![q(if p[0] == 0 { 1 } else { 0 }, 1), q(0, 1)]).unwrap();
        let alpha = DualVectorProfile::new(
            game.shape(),
            vec![DeviationPlan::pure(2, &[(0, 1)]).unwrap(), DeviationPlan::identity(2)],
        )
        .unwrap();
        let (profile, gain) = find_dual_violation(&game, &alpha).unwrap().unwrap();
        assert_eq!(game.shape().strategy_of(profile, 0), 0);
        assert_eq!(gain, -1);
    }

    #[test]
    fn plan_validation() {
        assert!(DeviationPlan::new(vec![vec![q(1, 2), q(1, 3)], vec![q(0, 1), q(1, 1)]]).is_err());
        assert!(DeviationPlan::new(vec![vec![q(3, 2), q(-1, 2)], vec![q(0, 1), q(1, 1)]]).is_err());
        assert!(DeviationPlan::pure(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn example1_supports() {
        let game = fixtures::example1_game();
        let y = ProductSupport::from_labels(&game, &[vec!["y1"], vec!["y2"], vec!["y3"]]).unwrap();
        assert!(certify_support(&game, &y).unwrap().is_perfect());
        let wide = ProductSupport::from_labels(&game, &[vec!["y1", "z1"], vec!["y2", "z2"], vec!["y3"]]).unwrap();
        let verdict = certify_support(&game, &wide).unwrap();
        let refutation = verdict.refutation().expect("mixture support is refuted");
        assert!(refutation.verify(&game, &wide));
    }

    #[test]
    fn not_a_ce_is_an_error() {
        let game = fixtures::example1_game();
        let k = game.profile_index(&["y1", "x2", "x3"]).unwrap();
        let rho = CorrelatedStrategy::point_mass(game.shape(), k).unwrap();
        assert!(matches!(is_cpe(&game, &rho), Err(Error::NotCorrelatedEquilibrium(_))));
    }

    #[test]
    fn trivial_game_is_perfect() {
        let game = Game::from_fn(&[1, 1], |_| vec![q(0, 1), q(0, 1)]).unwrap();
        let support = ProductSupport::full(game.shape());
        assert!(certify_support(&game, &support).unwrap().is_perfect());
    }
}
