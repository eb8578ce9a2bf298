//! Independent reference computations used by the integration tests.
//!
//! Each oracle recomputes a quantity from its definition with plain loops,
//! sharing nothing with the library beyond the `Rational` and `Game` types.

#![allow(dead_code)]

use cpe::lp::{Constraint, LinearProgram, Relation};
use cpe::{CorrelatedStrategy, Game, ProductSupport, Rational};
use rand::Rng;

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// All profiles as strategy-index vectors, last player fastest.
pub fn profiles(counts: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &c in counts {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..c).map(move |s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn index_of(counts: &[usize], profile: &[usize]) -> usize {
    profile.iter().zip(counts).fold(0, |acc, (&s, &c)| acc * c + s)
}

pub fn counts(game: &Game) -> Vec<usize> {
    (0..game.player_count()).map(|i| game.strategy_count(i)).collect()
}

pub fn payoff(game: &Game, player: usize, profile: &[usize]) -> Rational {
    game.payoff(player, index_of(&counts(game), profile)).clone()
}

fn replaced(profile: &[usize], player: usize, strategy: usize) -> Vec<usize> {
    let mut p = profile.to_vec();
    p[player] = strategy;
    p
}

/// `Σ_{s_{-i}} w(s_i, s_{-i}) u_i(t, s_{-i})` straight from the definition.
pub fn conditional_value(game: &Game, weights: &[Rational], player: usize, rec: usize, t: usize) -> Rational {
    let c = counts(game);
    profiles(&c)
        .iter()
        .filter(|p| p[player] == rec)
        .map(|p| &weights[index_of(&c, p)] * payoff(game, player, &replaced(p, player, t)))
        .sum()
}

/// Obedience check over every player, recommendation and alternative.
pub fn is_ce_oracle(game: &Game, weights: &[Rational]) -> bool {
    (0..game.player_count()).all(|i| {
        (0..game.strategy_count(i)).all(|s| {
            let obey = conditional_value(game, weights, i, s, s);
            (0..game.strategy_count(i)).all(|t| conditional_value(game, weights, i, s, t) <= obey)
        })
    })
}

/// Obedience restricted to recommendations in `support`.
pub fn obedient_on(game: &Game, weights: &[Rational], support: &ProductSupport) -> bool {
    (0..game.player_count()).all(|i| {
        support.strategies(i).iter().all(|&s| {
            let obey = conditional_value(game, weights, i, s, s);
            (0..game.strategy_count(i)).all(|t| conditional_value(game, weights, i, s, t) <= obey)
        })
    })
}

/// Aggregate gain of a dual vector given as dense row-stochastic matrices.
pub fn aggregate_gain_oracle(game: &Game, plans: &[Vec<Vec<Rational>>], profile: &[usize]) -> Rational {
    let mut total = Rational::zero();
    for (i, plan) in plans.iter().enumerate() {
        let base = payoff(game, i, profile);
        for (t, a) in plan[profile[i]].iter().enumerate() {
            total += a * (payoff(game, i, &replaced(profile, i, t)) - &base);
        }
    }
    total
}

/// Solves a square system exactly; `None` when singular.
pub fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn satisfies(c: &Constraint, x: &[Rational]) -> bool {
    let lhs: Rational = c.coefficients.iter().zip(x).map(|(a, v)| a * v).sum();
    match c.relation {
        Relation::Le => lhs <= c.rhs,
        Relation::Eq => lhs == c.rhs,
        Relation::Ge => lhs >= c.rhs,
    }
}

/// Best objective over all feasible basic solutions of an LP whose variables
/// all have finite lower bounds (so the feasible set, if nonempty, has a
/// vertex). `None` when no vertex is feasible.
pub fn brute_force_vertices(lp: &LinearProgram) -> Option<(Rational, Vec<Rational>)> {
    let n = lp.variable_count();
    let mut hyperplanes: Vec<(Vec<Rational>, Rational)> = lp
        .constraints()
        .iter()
        .map(|c| (c.coefficients.clone(), c.rhs.clone()))
        .collect();
    for (j, bound) in lp.lower_bounds().iter().enumerate() {
        let l = bound.clone().expect("brute force needs finite lower bounds");
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        hyperplanes.push((e, l));
    }
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for pick in combinations(hyperplanes.len(), n) {
        let a = pick.iter().map(|&h| hyperplanes[h].0.clone()).collect();
        let b = pick.iter().map(|&h| hyperplanes[h].1.clone()).collect();
        let Some(x) = solve_square(a, b) else { continue };
        let bounds_ok = lp
            .lower_bounds()
            .iter()
            .zip(&x)
            .all(|(l, v)| v >= l.as_ref().unwrap());
        if !bounds_ok || !lp.constraints().iter().all(|c| satisfies(c, &x)) {
            continue;
        }
        let value: Rational = lp.objective().iter().zip(&x).map(|(c, v)| c * v).sum();
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, x));
        }
    }
    best
}

/// Random LP with `1..=4` variables, `1..=6` constraints and small integer data.
pub fn random_lp<R: Rng>(rng: &mut R) -> LinearProgram {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=6);
    let mut lp = LinearProgram::new(n);
    lp.set_objective((0..n).map(|_| r(rng.gen_range(-3..=3))).collect());
    for _ in 0..m {
        let coefficients = (0..n).map(|_| r(rng.gen_range(-3..=3))).collect();
        let relation = match rng.gen_range(0..5) {
            0 | 1 => Relation::Le,
            2 | 3 => Relation::Ge,
            _ => Relation::Eq,
        };
        lp.add_constraint(coefficients, relation, r(rng.gen_range(-4..=4)));
    }
    for j in 0..n {
        if rng.gen_bool(0.25) {
            lp.set_lower_bound(j, Some(r(rng.gen_range(-2..=2))));
        }
    }
    lp
}

/// Whether `sigma` (a mixture over player `i`'s strategies) weakly dominates `s`.
pub fn mixture_dominates(game: &Game, player: usize, s: usize, sigma: &[Rational]) -> bool {
    let c = counts(game);
    let mut strict = false;
    for p in profiles(&c).iter().filter(|p| p[player] == s) {
        let mixed: Rational = sigma
            .iter()
            .enumerate()
            .map(|(t, w)| w * payoff(game, player, &replaced(p, player, t)))
            .sum();
        let own = payoff(game, player, p);
        if mixed < own {
            return false;
        }
        if mixed > own {
            strict = true;
        }
    }
    strict
}

/// Searches mixtures with denominator `denom` for one dominating `s`.
pub fn grid_dominated(game: &Game, player: usize, s: usize, denom: i64) -> bool {
    let n = game.strategy_count(player);
    let mut weights = vec![0i64; n];
    fn rec(game: &Game, player: usize, s: usize, denom: i64, idx: usize, left: i64, w: &mut Vec<i64>) -> bool {
        if idx + 1 == w.len() {
            w[idx] = left;
            let sigma: Vec<Rational> = w.iter().map(|&x| Rational::new(x, denom)).collect();
            return mixture_dominates(game, player, s, &sigma);
        }
        for x in 0..=left {
            w[idx] = x;
            if rec(game, player, s, denom, idx + 1, left - x, w) {
                return true;
            }
        }
        false
    }
    rec(game, player, s, denom, 0, denom, &mut weights)
}

/// A correlated equilibrium maximizing its smallest profile probability;
/// positive minimum means a completely mixed equilibrium exists.
pub fn max_min_probability_ce(game: &Game) -> Option<(Rational, CorrelatedStrategy)> {
    let c = counts(game);
    let all = profiles(&c);
    let t = all.len();
    let mut lp = LinearProgram::new(t + 1);
    for i in 0..game.player_count() {
        for s in 0..game.strategy_count(i) {
            for dev in 0..game.strategy_count(i) {
                if dev == s {
                    continue;
                }
                let mut row = vec![Rational::zero(); t + 1];
                for p in all.iter().filter(|p| p[i] == s) {
                    row[index_of(&c, p)] = payoff(game, i, p) - payoff(game, i, &replaced(p, i, dev));
                }
                lp.add_constraint(row, Relation::Ge, Rational::zero());
            }
        }
    }
    for k in 0..t {
        let mut row = vec![Rational::zero(); t + 1];
        row[k] = Rational::one();
        row[t] = -Rational::one();
        lp.add_constraint(row, Relation::Ge, Rational::zero());
    }
    let mut total = vec![Rational::one(); t + 1];
    total[t] = Rational::zero();
    lp.add_constraint(total, Relation::Eq, Rational::one());
    let mut objective = vec![Rational::zero(); t + 1];
    objective[t] = Rational::one();
    lp.set_objective(objective);
    match lp.solve().ok()? {
        cpe::LpOutcome::Optimal { value, point } => {
            let rho = CorrelatedStrategy::new(game.shape(), point[..t].to_vec()).ok()?;
            Some((value, rho))
        }
        _ => None,
    }
}

/// Random distribution with support exactly `profiles`.
pub fn random_distribution_on<R: Rng>(rng: &mut R, game: &Game, profiles: &[usize]) -> CorrelatedStrategy {
    let weights: Vec<i64> = profiles.iter().map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = weights.iter().sum();
    let entries: Vec<(usize, Rational)> = profiles
        .iter()
        .zip(&weights)
        .map(|(&k, &w)| (k, Rational::new(w, total)))
        .collect();
    CorrelatedStrategy::from_entries(game.shape(), &entries).unwrap()
}

/// Random subset (nonempty per player) of `support`.
pub fn random_subset<R: Rng>(rng: &mut R, game: &Game, support: &ProductSupport) -> ProductSupport {
    let sets = (0..game.player_count())
        .map(|i| {
            let options = support.strategies(i);
            loop {
                let pick: Vec<usize> = options.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                if !pick.is_empty() {
                    return pick;
                }
            }
        })
        .collect();
    ProductSupport::new(game.shape(), sets).unwrap()
}

/// Random superset of `support`.
pub fn random_superset<R: Rng>(rng: &mut R, game: &Game, support: &ProductSupport) -> ProductSupport {
    let sets = (0..game.player_count())
        .map(|i| {
            (0..game.strategy_count(i))
                .filter(|&s| support.contains(i, s) || rng.gen_bool(0.5))
                .collect()
        })
        .collect();
    ProductSupport::new(game.shape(), sets).unwrap()
}

/// Random restricted deviation plans with small-denominator entries.
pub fn random_restricted_plans<R: Rng>(rng: &mut R, game: &Game, support: &ProductSupport) -> Vec<Vec<Vec<Rational>>> {
    (0..game.player_count())
        .map(|i| {
            let n = game.strategy_count(i);
            (0..n)
                .map(|s| {
                    let mut row = vec![Rational::zero(); n];
                    if !support.contains(i, s) {
                        row[s] = Rational::one();
                        return row;
                    }
                    let w: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
                    let total: i64 = w.iter().sum();
                    if total == 0 {
                        row[s] = Rational::one();
                    } else {
                        for t in 0..n {
                            row[t] = Rational::new(w[t], total);
                        }
                    }
                    row
                })
                .collect()
        })
        .collect()
}
