//! Classification of every product support of a game.
//!
//! Supports are visited from the largest down. A support inside one already
//! certified inherits the certificate, and one containing a refuted support
//! inherits the refutation, since a dual vector restricted to the smaller set
//! is restricted to the larger one too.

use crate::certify::{certify_support, CpeVerdict, Refutation};
use crate::error::{invalid, Error, Result};
use crate::game::{CorrelatedStrategy, Game, ProductSupport};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::rational::Rational;

pub const DEFAULT_SUPPORT_CAP: usize = 20_000;

/// A correlated equilibrium whose recommendation marginals are positive on
/// exactly `support`, chosen to maximize the smallest such marginal.
///
/// Returns `None` when every correlated equilibrium concentrated on the
/// support leaves some supported strategy unrecommended.
pub fn ce_with_exact_support(game: &Game, support: &ProductSupport) -> Result<Option<CorrelatedStrategy>> {
    support.check_game(game)?;
    let shape = game.shape();
    let profiles = support.profiles(shape);
    let mut column = vec![usize::MAX; shape.profile_count()];
    for (j, &k) in profiles.iter().enumerate() {
        column[k] = j;
    }
    let t = profiles.len();
    let mut lp = LinearProgram::new(t + 1);

    for i in 0..game.player_count() {
        for &s in support.strategies(i) {
            let inside: Vec<usize> = shape.profiles_with(i, s).filter(|&k| column[k] != usize::MAX).collect();
            for dev in (0..game.strategy_count(i)).filter(|&d| d != s) {
                let terms: Vec<(usize, Rational)> = inside
                    .iter()
                    .map(|&k| (column[k], -game.deviation_difference(i, k, dev)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    lp.add_sparse_constraint(&terms, Relation::Ge, Rational::zero());
                }
            }
            let mut marginal: Vec<(usize, Rational)> = inside.iter().map(|&k| (column[k], Rational::one())).collect();
            marginal.push((t, -Rational::one()));
            lp.add_sparse_constraint(&marginal, Relation::Ge, Rational::zero());
        }
    }
    let all: Vec<(usize, Rational)> = (0..t).map(|j| (j, Rational::one())).collect();
    lp.add_sparse_constraint(&all, Relation::Eq, Rational::one());
    let mut objective = vec![Rational::zero(); t + 1];
    objective[t] = Rational::one();
    lp.set_objective(objective);

    match lp.solve()? {
        LpOutcome::Optimal { value, point } if value.is_positive() => {
            let mut probabilities = vec![Rational::zero(); shape.profile_count()];
            for (j, &k) in profiles.iter().enumerate() {
                probabilities[k] = point[j].clone();
            }
            Ok(Some(CorrelatedStrategy::new(shape, probabilities)?))
        }
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible(_) => Ok(None),
        LpOutcome::Unbounded { .. } => unreachable!("marginals are bounded by 1"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportClassification {
    pub support: ProductSupport,
    /// No restricted dual vector has a strictly positive aggregate gain.
    pub equality_holds: bool,
    pub ce_exists: bool,
    pub sample_ce: Option<CorrelatedStrategy>,
    pub refutation: Option<Refutation>,
    /// The equality verdict was copied from a comparable support instead of
    /// solved directly.
    pub inherited: bool,
}

impl SupportClassification {
    /// A correlated perfect equilibrium with exactly this support exists.
    pub fn is_cpe_support(&self) -> bool {
        self.equality_holds && self.ce_exists
    }
}

/// Number of nonempty product supports, saturating.
pub fn support_count(game: &Game) -> u128 {
    game.shape()
        .counts()
        .iter()
        .map(|&c| if c >= 127 { u128::MAX } else { (1u128 << c) - 1 })
        .fold(1u128, |acc, c| acc.saturating_mul(c))
}

/// Every nonempty product support, largest total size first, ties broken
/// lexicographically by the sorted strategy lists.
pub fn all_supports(game: &Game, cap: usize) -> Result<Vec<ProductSupport>> {
    let required = support_count(game);
    if required > cap as u128 {
        return Err(Error::CapExceeded { required, cap });
    }
    let shape = game.shape();
    let mut supports = Vec::with_capacity(required as usize);
    let mut masks = vec![1u64; shape.player_count()];
    loop {
        supports.push(ProductSupport::from_masks(shape, &masks)?);
        let mut i = shape.player_count();
        loop {
            if i == 0 {
                supports.sort_by(|a, b| b.total_size().cmp(&a.total_size()).then_with(|| a.sets().cmp(b.sets())));
                return Ok(supports);
            }
            i -= 1;
            let limit = (1u64 << shape.strategy_count(i)) - 1;
            if masks[i] < limit {
                masks[i] += 1;
                break;
            }
            masks[i] = 1;
        }
    }
}

/// Classifies every nonempty product support. Fails with
/// [`Error::CapExceeded`] when there are more than `cap` of them.
pub fn classify_all_supports(game: &Game, cap: usize) -> Result<Vec<SupportClassification>> {
    if game.shape().counts().iter().any(|&c| c > 63) {
        return invalid("support enumeration handles at most 63 strategies per player");
    }
    let supports = all_supports(game, cap)?;
    let mut certified: Vec<Vec<u64>> = Vec::new();
    let mut refuted: Vec<(Vec<u64>, usize)> = Vec::new();
    let mut out: Vec<SupportClassification> = Vec::with_capacity(supports.len());

    for support in supports {
        let masks = support.masks();
        let below_certified = certified.iter().any(|big| is_mask_subset(&masks, big));
        let above_refuted = refuted.iter().find(|(small, _)| is_mask_subset(small, &masks)).map(|(_, idx)| *idx);

        let (equality_holds, refutation, inherited) = if below_certified {
            (true, None, true)
        } else if let Some(idx) = above_refuted {
            (false, out[idx].refutation.clone(), true)
        } else {
            match certify_support(game, &support)? {
                CpeVerdict::Perfect { .. } => (true, None, false),
                CpeVerdict::Refuted(r) => (false, Some(r), false),
            }
        };
        if !inherited {
            if equality_holds {
                certified.push(masks);
            } else {
                refuted.push((masks, out.len()));
            }
        }
        let sample_ce = ce_with_exact_support(game, &support)?;
        out.push(SupportClassification {
            support,
            equality_holds,
            ce_exists: sample_ce.is_some(),
            sample_ce,
            refutation,
            inherited,
        });
    }
    Ok(out)
}

fn is_mask_subset(small: &[u64], big: &[u64]) -> bool {
    small.iter().zip(big).all(|(a, b)| a & !b == 0)
}

/// Maximal supports, under inclusion, that carry a correlated perfect equilibrium.
pub fn maximal_elements(classifications: &[SupportClassification]) -> Vec<ProductSupport> {
    let good: Vec<&ProductSupport> = classifications
        .iter()
        .filter(|c| c.is_cpe_support())
        .map(|c| &c.support)
        .collect();
    good.iter()
        .filter(|s| !good.iter().any(|other| other != *s && s.is_subset_of(other)))
        .map(|s| (*s).clone())
        .collect()
}

pub fn maximal_cpe_supports(game: &Game, cap: usize) -> Result<Vec<ProductSupport>> {
    Ok(maximal_elements(&classify_all_supports(game, cap)?))
}
