//! Supporting sequences: the primal side of the perfection test.
//!
//! A support is perfect exactly when some weighting `μ ≥ 1` of all profiles
//! makes every supported recommendation a best response against the
//! `μ`-weighted conditional distribution. Then `ρ^k ∝ ρ + μ/k` is a
//! completely mixed sequence converging to `ρ` along which obedience holds.
//! When no such `μ` exists the Farkas certificate is itself a refuting dual
//! vector.

use std::fmt;

use crate::certify::{DeviationPlan, DualVectorProfile, Refutation};
use crate::error::{invalid, Result};
use crate::game::{CorrelatedStrategy, Game, ProductSupport, Shape};
use crate::lp::{FarkasCertificate, Feasibility, LinearProgram, Relation};
use crate::poly::EpsPolynomial;
use crate::rational::Rational;

/// Positive weights on every profile, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuVector {
    weights: Vec<Rational>,
}

impl MuVector {
    pub fn new(shape: &Shape, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != shape.profile_count() {
            return invalid(format!(
                "mu has {} entries, expected {}",
                weights.len(),
                shape.profile_count()
            ));
        }
        if let Some(k) = weights.iter().position(|w| *w < 1) {
            return invalid(format!("mu entry {k} is below 1"));
        }
        Ok(MuVector { weights })
    }

    pub fn ones(shape: &Shape) -> Self {
        MuVector {
            weights: vec![Rational::one(); shape.profile_count()],
        }
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, profile: usize) -> &Rational {
        &self.weights[profile]
    }

    /// Rechecks the best-response inequalities for `support`.
    pub fn satisfies(&self, game: &Game, support: &ProductSupport) -> bool {
        self.weights.len() == game.profile_count()
            && support.check_game(game).is_ok()
            && find_margin_violation(game, &self.weights, support).is_none()
    }
}

/// Row of the `μ` system: recommendation `recommended` of `player` must beat
/// `deviation`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MuRow {
    pub player: usize,
    pub recommended: usize,
    pub deviation: usize,
}

/// Proof that no `μ` exists for a support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuCertificate {
    pub rows: Vec<MuRow>,
    pub farkas: FarkasCertificate,
}

impl MuCertificate {
    /// Translates the Farkas multipliers into a restricted dual vector.
    ///
    /// With row multipliers `y` and bound multipliers `z`, the certificate
    /// reads `Σ_i Σ_t y(i, s_i, t) (u_i(t, s_{-i}) - u_i(s)) = z(s) ≥ 0` with
    /// `Σ_s z(s) = 1`. Scaling `y` by the largest row total gives deviation
    /// probabilities whose aggregate gain is `z / M`.
    pub fn to_refutation(&self, game: &Game) -> Result<Refutation> {
        let n = game.player_count();
        let mut off: Vec<Vec<Vec<Rational>>> = (0..n)
            .map(|i| {
                let c = game.strategy_count(i);
                vec![vec![Rational::zero(); c]; c]
            })
            .collect();
        for (row, y) in self.rows.iter().zip(&self.farkas.constraint_multipliers) {
            off[row.player][row.recommended][row.deviation] += y;
        }
        let scale = off
            .iter()
            .flatten()
            .map(|r| r.iter().sum::<Rational>())
            .max()
            .unwrap_or_else(Rational::zero);
        if !scale.is_positive() {
            return invalid("certificate has no positive row multiplier");
        }
        let plans = off
            .into_iter()
            .map(|rows| {
                let rows = rows
                    .into_iter()
                    .enumerate()
                    .map(|(s, mut row)| {
                        for a in row.iter_mut() {
                            *a = &*a / &scale;
                        }
                        let moved: Rational = row.iter().sum();
                        row[s] = Rational::one() - moved;
                        row
                    })
                    .collect();
                DeviationPlan::new(rows)
            })
            .collect::<Result<Vec<_>>>()?;
        let alpha = DualVectorProfile::new(game.shape(), plans)?;
        Refutation::from_alpha(game, alpha)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MuOutcome {
    Feasible(MuVector),
    Infeasible(MuCertificate),
}

impl MuOutcome {
    pub fn mu(&self) -> Option<&MuVector> {
        match self {
            MuOutcome::Feasible(mu) => Some(mu),
            MuOutcome::Infeasible(_) => None,
        }
    }
}

/// Builds the `μ` system for `support`: `μ(s) ≥ 1` everywhere and for each
/// player `i`, `s̃ ∈ support_i`, `t ≠ s̃`:
/// `Σ_{s_{-i}} μ(s̃, s_{-i}) (u_i(s̃, s_{-i}) - u_i(t, s_{-i})) ≥ 0`.
pub fn mu_system(game: &Game, support: &ProductSupport) -> Result<(LinearProgram, Vec<MuRow>)> {
    support.check_game(game)?;
    let shape = game.shape();
    let mut lp = LinearProgram::new(game.profile_count());
    for k in 0..game.profile_count() {
        lp.set_lower_bound(k, Some(Rational::one()));
    }
    let mut rows = Vec::new();
    for i in 0..game.player_count() {
        for &s in support.strategies(i) {
            for t in 0..game.strategy_count(i) {
                if t == s {
                    continue;
                }
                let terms: Vec<(usize, Rational)> = shape
                    .profiles_with(i, s)
                    .map(|k| (k, -game.deviation_difference(i, k, t)))
                    .filter(|(_, d)| !d.is_zero())
                    .collect();
                lp.add_sparse_constraint(&terms, Relation::Ge, Rational::zero());
                rows.push(MuRow {
                    player: i,
                    recommended: s,
                    deviation: t,
                });
            }
        }
    }
    Ok((lp, rows))
}

pub fn find_mu(game: &Game, support: &ProductSupport) -> Result<MuOutcome> {
    let (lp, rows) = mu_system(game, support)?;
    if rows.is_empty() {
        return Ok(MuOutcome::Feasible(MuVector::ones(game.shape())));
    }
    match lp.feasible_point()? {
        Feasibility::Feasible(weights) => {
            debug_assert!(lp.is_feasible_point(&weights));
            Ok(MuOutcome::Feasible(MuVector { weights }))
        }
        Feasibility::Infeasible(farkas) => {
            debug_assert!(farkas.verify(&lp));
            Ok(MuOutcome::Infeasible(MuCertificate { rows, farkas }))
        }
    }
}

/// `ρ^k(s) = (ρ(s) + μ(s)/k) / Σ_τ (ρ(τ) + μ(τ)/k)`.
pub fn supporting_sequence_term(rho: &CorrelatedStrategy, mu: &MuVector, k: u64) -> Result<CorrelatedStrategy> {
    if k == 0 {
        return invalid("sequence index k must be at least 1");
    }
    if mu.weights.len() != rho.shape().profile_count() {
        return invalid("mu does not match the distribution");
    }
    let k = Rational::from_integer(k as i64);
    let raw: Vec<Rational> = rho
        .probabilities()
        .iter()
        .zip(&mu.weights)
        .map(|(p, m)| p + m / &k)
        .collect();
    let total: Rational = raw.iter().sum();
    CorrelatedStrategy::new(rho.shape(), raw.into_iter().map(|x| x / &total).collect())
}

/// A supported recommendation that is not a best response.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceViolation {
    pub player: usize,
    pub recommended: usize,
    pub deviation: usize,
    /// Obedience value minus deviation value; negative.
    pub margin: Rational,
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "player {} recommended {} gains {} by playing {}",
            self.player, self.recommended, -&self.margin, self.deviation
        )
    }
}

fn find_margin_violation(game: &Game, weights: &[Rational], support: &ProductSupport) -> Option<SequenceViolation> {
    let shape = game.shape();
    for i in 0..game.player_count() {
        for &s in support.strategies(i) {
            for t in 0..game.strategy_count(i) {
                if t == s {
                    continue;
                }
                let mut margin = Rational::zero();
                for k in shape.profiles_with(i, s) {
                    let w = &weights[k];
                    if !w.is_zero() {
                        margin -= w * game.deviation_difference(i, k, t);
                    }
                }
                if margin.is_negative() {
                    return Some(SequenceViolation {
                        player: i,
                        recommended: s,
                        deviation: t,
                        margin,
                    });
                }
            }
        }
    }
    None
}

/// First supported recommendation that fails to be a best response under
/// `rho_k`. `rho_k` must be completely mixed.
pub fn find_sequence_violation(
    game: &Game,
    rho_k: &CorrelatedStrategy,
    support: &ProductSupport,
) -> Result<Option<SequenceViolation>> {
    rho_k.check_game(game)?;
    support.check_game(game)?;
    if rho_k.probabilities().iter().any(|p| !p.is_positive()) {
        return invalid("sequence term is not completely mixed");
    }
    Ok(find_margin_violation(game, rho_k.probabilities(), support))
}

pub fn verify_sequence_term(game: &Game, rho_k: &CorrelatedStrategy, support: &ProductSupport) -> Result<bool> {
    Ok(find_sequence_violation(game, rho_k, support)?.is_none())
}

/// Unnormalized masses `f_s(ε)`, each positive for small `ε > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricDistribution {
    shape: Shape,
    masses: Vec<EpsPolynomial>,
}

impl ParametricDistribution {
    pub fn new(shape: &Shape, masses: Vec<EpsPolynomial>) -> Result<Self> {
        if masses.len() != shape.profile_count() {
            return invalid(format!(
                "family has {} entries, expected {}",
                masses.len(),
                shape.profile_count()
            ));
        }
        if let Some(k) = masses.iter().position(|m| !m.is_positive_near_zero()) {
            return invalid(format!("mass of profile {k} is not positive near zero"));
        }
        Ok(ParametricDistribution {
            shape: shape.clone(),
            masses,
        })
    }

    /// `ρ(s) + μ(s) ε`, the symbolic form of the constructed sequence.
    pub fn from_mu(rho: &CorrelatedStrategy, mu: &MuVector) -> Result<Self> {
        let masses = rho
            .probabilities()
            .iter()
            .zip(mu.weights())
            .map(|(p, m)| EpsPolynomial::new(vec![p.clone(), m.clone()]))
            .collect();
        Self::new(rho.shape(), masses)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn masses(&self) -> &[EpsPolynomial] {
        &self.masses
    }

    pub fn mass(&self, profile: usize) -> &EpsPolynomial {
        &self.masses[profile]
    }

    pub fn total(&self) -> EpsPolynomial {
        self.masses
            .iter()
            .fold(EpsPolynomial::zero(), |acc, m| &acc + m)
    }

    /// Normalized distribution at `ε → 0⁺`: coefficients at the lowest power
    /// present in the total mass, divided by the total's coefficient there.
    pub fn limit(&self) -> CorrelatedStrategy {
        let total = self.total();
        let (power, lead) = total
            .leading_term_near_zero()
            .expect("positive masses have a nonzero total");
        let probabilities = self.masses.iter().map(|m| m.coeff(power) / lead).collect();
        CorrelatedStrategy::new(&self.shape, probabilities).expect("limit of positive masses is a distribution")
    }

    /// Normalized distribution at a concrete `ε`, which must keep every mass positive.
    pub fn at(&self, eps: &Rational) -> Result<CorrelatedStrategy> {
        let raw: Vec<Rational> = self.masses.iter().map(|m| m.eval(eps)).collect();
        if raw.iter().any(|x| !x.is_positive()) {
            return invalid(format!("some mass is not positive at ε = {eps}"));
        }
        let total: Rational = raw.iter().sum();
        CorrelatedStrategy::new(&self.shape, raw.into_iter().map(|x| x / &total).collect())
    }
}

/// One best-response constraint evaluated symbolically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricConstraint {
    pub player: usize,
    pub recommended: usize,
    pub deviation: usize,
    pub obey_value: EpsPolynomial,
    pub deviation_value: EpsPolynomial,
    /// `obey_value - deviation_value`; must be nonnegative near zero.
    pub margin: EpsPolynomial,
}

impl ParametricConstraint {
    pub fn holds(&self) -> bool {
        self.margin.is_nonnegative_near_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricReport {
    pub limit: CorrelatedStrategy,
    pub limit_matches: bool,
    pub constraints: Vec<ParametricConstraint>,
}

impl ParametricReport {
    pub fn holds(&self) -> bool {
        self.limit_matches && self.constraints.iter().all(ParametricConstraint::holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &ParametricConstraint> {
        self.constraints.iter().filter(|c| !c.holds())
    }

    pub fn constraint(&self, player: usize, recommended: usize, deviation: usize) -> Option<&ParametricConstraint> {
        self.constraints
            .iter()
            .find(|c| c.player == player && c.recommended == recommended && c.deviation == deviation)
    }
}

/// Checks symbolically that `family` is a supporting sequence for `target`:
/// its limit is `target` and every recommendation in `support` is a best
/// response for all small `ε > 0`.
pub fn verify_parametric_sequence(
    game: &Game,
    family: &ParametricDistribution,
    target: &CorrelatedStrategy,
    support: &ProductSupport,
) -> Result<ParametricReport> {
    target.check_game(game)?;
    support.check_game(game)?;
    if family.shape != *game.shape() {
        return invalid("family does not match the game");
    }
    let shape = game.shape();
    let limit = family.limit();
    let limit_matches = limit == *target;
    let mut constraints = Vec::new();
    for i in 0..game.player_count() {
        for &s in support.strategies(i) {
            let mut obey = EpsPolynomial::zero();
            for k in shape.profiles_with(i, s) {
                obey.add_scaled(family.mass(k), game.payoff(i, k));
            }
            for t in 0..game.strategy_count(i) {
                if t == s {
                    continue;
                }
                let mut deviate = EpsPolynomial::zero();
                for k in shape.profiles_with(i, s) {
                    deviate.add_scaled(family.mass(k), game.payoff(i, shape.deviate(k, i, t)));
                }
                let margin = &obey - &deviate;
                constraints.push(ParametricConstraint {
                    player: i,
                    recommended: s,
                    deviation: t,
                    obey_value: obey.clone(),
                    deviation_value: deviate,
                    margin,
                });
            }
        }
    }
    Ok(ParametricReport {
        limit,
        limit_matches,
        constraints,
    })
}
