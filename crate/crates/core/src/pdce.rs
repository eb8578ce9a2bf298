//! Robustness of a correlated equilibrium to independent player trembles.
//!
//! Each player `j` executes recommendation `s'_j` but plays `s_j` with
//! probability `σ_j(s_j | s'_j)`, a polynomial in `ε`. A player who does not
//! tremble sees the distribution the mediator draws from, distorted by the
//! others' trembles, and must still find obedience optimal for all small
//! `ε > 0`.

use std::fmt;

use crate::error::{invalid, Result};
use crate::game::{CorrelatedStrategy, Game, Shape};
use crate::poly::EpsPolynomial;
use crate::rational::Rational;

/// `rows[i][s][t] = σ_i(t | s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrembleFamily {
    rows: Vec<Vec<Vec<EpsPolynomial>>>,
}

impl TrembleFamily {
    /// Checks that every row sums to the constant 1, every entry is
    /// nonnegative near zero and the diagonal tends to 1.
    pub fn new(shape: &Shape, rows: Vec<Vec<Vec<EpsPolynomial>>>) -> Result<Self> {
        if rows.len() != shape.player_count() {
            return invalid(format!(
                "tremble family covers {} players, expected {}",
                rows.len(),
                shape.player_count()
            ));
        }
        for (i, matrix) in rows.iter().enumerate() {
            let n = shape.strategy_count(i);
            if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
                return invalid(format!("tremble matrix of player {i} is not {n}x{n}"));
            }
            for (s, row) in matrix.iter().enumerate() {
                let total = row.iter().fold(EpsPolynomial::zero(), |acc, p| &acc + p);
                if total != EpsPolynomial::one() {
                    return invalid(format!("tremble row {s} of player {i} sums to {total}, not 1"));
                }
                if let Some(t) = row.iter().position(|p| !p.is_nonnegative_near_zero()) {
                    return invalid(format!(
                        "tremble entry ({s} -> {t}) of player {i} is negative near zero: {}",
                        row[t]
                    ));
                }
                if !row[s].constant_term().is_one() {
                    return invalid(format!(
                        "diagonal tremble entry {s} of player {i} does not tend to 1: {}",
                        row[s]
                    ));
                }
            }
        }
        Ok(TrembleFamily { rows })
    }

    /// No trembles at all.
    pub fn identity(shape: &Shape) -> Self {
        let rows = shape
            .counts()
            .iter()
            .map(|&n| {
                (0..n)
                    .map(|s| {
                        (0..n)
                            .map(|t| if s == t { EpsPolynomial::one() } else { EpsPolynomial::zero() })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        TrembleFamily { rows }
    }

    pub fn player_count(&self) -> usize {
        self.rows.len()
    }

    pub fn strategy_count(&self, player: usize) -> usize {
        self.rows[player].len()
    }

    /// `σ_player(played | recommended)`.
    pub fn entry(&self, player: usize, recommended: usize, played: usize) -> &EpsPolynomial {
        &self.rows[player][recommended][played]
    }

    pub fn rows(&self) -> &[Vec<Vec<EpsPolynomial>>] {
        &self.rows
    }

    /// Every tremble has positive probability for small `ε > 0`.
    pub fn is_completely_mixed(&self) -> bool {
        self.rows
            .iter()
            .flatten()
            .flatten()
            .all(EpsPolynomial::is_positive_near_zero)
    }

    fn check_shape(&self, shape: &Shape) -> Result<()> {
        if self.rows.len() != shape.player_count()
            || self
                .rows
                .iter()
                .enumerate()
                .any(|(i, m)| m.len() != shape.strategy_count(i))
        {
            return invalid("tremble family does not match the game");
        }
        Ok(())
    }
}

/// What `player` faces: `masses[s]` is the probability that `player` is
/// recommended `s_i` and the others end up playing `s_{-i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerceivedDistribution {
    pub player: usize,
    pub masses: Vec<EpsPolynomial>,
}

impl PerceivedDistribution {
    pub fn mass(&self, profile: usize) -> &EpsPolynomial {
        &self.masses[profile]
    }
}

/// `ρ^i(s) = Σ_{s'_{-i}} ρ(s_i, s'_{-i}) Π_{j≠i} σ_j(s_j | s'_j)`.
pub fn perceived_distribution(
    game: &Game,
    rho: &CorrelatedStrategy,
    trembles: &TrembleFamily,
    player: usize,
) -> Result<PerceivedDistribution> {
    rho.check_game(game)?;
    trembles.check_shape(game.shape())?;
    game.shape().check_player(player)?;
    Ok(perceived_unchecked(game.shape(), rho, trembles, player))
}

fn perceived_unchecked(
    shape: &Shape,
    rho: &CorrelatedStrategy,
    trembles: &TrembleFamily,
    player: usize,
) -> PerceivedDistribution {
    let mut masses = vec![EpsPolynomial::zero(); shape.profile_count()];
    for source in rho.support() {
        let weight = rho.probability(source);
        let recommended = shape.decode(source);
        for target in shape.profiles_with(player, recommended[player]) {
            let played = shape.decode(target);
            let mut product = EpsPolynomial::one();
            for j in (0..shape.player_count()).filter(|&j| j != player) {
                let entry = trembles.entry(j, recommended[j], played[j]);
                if entry.is_zero() {
                    product = EpsPolynomial::zero();
                    break;
                }
                product = &product * entry;
            }
            masses[target].add_scaled(&product, weight);
        }
    }
    PerceivedDistribution { player, masses }
}

/// Expected gain of playing `deviation` instead of `recommended` under the
/// perceived distribution; must be nonpositive near zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrembleGain {
    pub player: usize,
    pub recommended: usize,
    pub deviation: usize,
    pub gain: EpsPolynomial,
}

impl TrembleGain {
    pub fn holds(&self) -> bool {
        self.gain.is_nonpositive_near_zero()
    }
}

impl fmt::Display for TrembleGain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "player {} {} -> {}: {}",
            self.player, self.recommended, self.deviation, self.gain
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdceReport {
    /// Whether every tremble entry is positive for small `ε`. The verdict
    /// does not depend on it, so degenerate families can still be checked.
    pub completely_mixed: bool,
    pub gains: Vec<TrembleGain>,
}

impl PdceReport {
    pub fn holds(&self) -> bool {
        self.gains.iter().all(TrembleGain::holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &TrembleGain> {
        self.gains.iter().filter(|g| !g.holds())
    }

    pub fn gain(&self, player: usize, recommended: usize, deviation: usize) -> Option<&TrembleGain> {
        self.gains
            .iter()
            .find(|g| g.player == player && g.recommended == recommended && g.deviation == deviation)
    }
}

/// Deviation gain polynomials for every player, recommendation and
/// alternative. Recommendations that are never made have zero gains.
pub fn pdce_check(game: &Game, rho: &CorrelatedStrategy, trembles: &TrembleFamily) -> Result<PdceReport> {
    rho.check_game(game)?;
    trembles.check_shape(game.shape())?;
    let shape = game.shape();
    let mut gains = Vec::new();
    for i in 0..game.player_count() {
        let perceived = perceived_unchecked(shape, rho, trembles, i);
        for s in 0..game.strategy_count(i) {
            for t in (0..game.strategy_count(i)).filter(|&t| t != s) {
                let mut gain = EpsPolynomial::zero();
                for k in shape.profiles_with(i, s) {
                    let d: Rational = game.deviation_difference(i, k, t);
                    gain.add_scaled(perceived.mass(k), &d);
                }
                gains.push(TrembleGain {
                    player: i,
                    recommended: s,
                    deviation: t,
                    gain,
                });
            }
        }
    }
    Ok(PdceReport {
        completely_mixed: trembles.is_completely_mixed(),
        gains,
    })
}
