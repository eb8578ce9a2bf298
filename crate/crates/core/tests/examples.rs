//! Worked examples for every public operation, on the shipped fixture games.

mod common;

use cpe::classify::{maximal_elements, support_count};
use cpe::fixtures;
use cpe::lp::{Feasibility, LinearProgram, LpOutcome, Relation};
use cpe::pdce::TrembleFamily;
use cpe::rational::q;
use cpe::sequence::{supporting_sequence_term, MuVector, ParametricDistribution};
use cpe::{
    aggregate_gain, ce_with_exact_support, certify_support, classify_all_supports, conditional_deviation_value,
    deviation_gain, find_dual_violation, find_mu, is_completely_mixed, is_correlated_equilibrium, is_cpe,
    is_dual_vector, is_restricted, marginal, maximal_cpe_supports, pdce_check, perceived_distribution,
    product_distribution, product_support, verify_parametric_sequence, verify_sequence_term,
    weakly_dominated_strategies, CorrelatedStrategy, DeviationPlan, DualVectorProfile, EpsPolynomial, Error, Game,
    MixedProfile, MuOutcome, ProductSupport, Rational, Shape, DEFAULT_SUPPORT_CAP,
};

use common::*;

fn sup(game: &Game, labels: &[&[&str]]) -> ProductSupport {
    let labels: Vec<Vec<&str>> = labels.iter().map(|l| l.to_vec()).collect();
    ProductSupport::from_labels(game, &labels).unwrap()
}

fn s(game: &Game, player: usize, label: &str) -> usize {
    game.strategy_index(player, label).unwrap()
}

// game-core

#[test]
fn conditional_values_under_the_supporting_family() {
    let game = fixtures::example1_game();
    let family = fixtures::example1_supporting_family(&game);
    let eps = q(1, 100);
    let rho = family.at(&eps).unwrap();
    let total = family.total().eval(&eps);
    let y1 = s(&game, 0, "y1");
    for (dev, scaled) in [("x1", 15), ("y1", 15), ("z1", 9)] {
        let value = conditional_deviation_value(&game, &rho, 0, y1, s(&game, 0, dev)).unwrap();
        assert_eq!(value * &total, &eps * Rational::from(scaled) + r(3), "deviation to {dev}");
    }
}

#[test]
fn correlated_equilibrium_membership() {
    let mp = fixtures::matching_pennies();
    assert!(is_correlated_equilibrium(&mp, &CorrelatedStrategy::uniform(mp.shape())).unwrap());
    let game = fixtures::example1_game();
    assert!(is_correlated_equilibrium(&game, &fixtures::example1_delta_y(&game)).unwrap());
    let pdce = fixtures::pdce_game();
    let rho = fixtures::pdce_distribution(&pdce);
    assert!(is_correlated_equilibrium(&pdce, &rho).unwrap());
    assert!(is_ce_oracle(&pdce, rho.probabilities()));
}

#[test]
fn marginals() {
    let game = fixtures::pdce_game();
    let rho = fixtures::pdce_distribution(&game);
    let c = counts(&game);
    for i in 0..3 {
        let oracle: Vec<Rational> = (0..c[i])
            .map(|si| {
                profiles(&c)
                    .iter()
                    .filter(|p| p[i] == si)
                    .map(|p| rho.probability(index_of(&c, p)).clone())
                    .sum()
            })
            .collect();
        assert_eq!(marginal(&rho, i).unwrap(), oracle);
    }
    assert_eq!(marginal(&rho, 0).unwrap(), vec![q(1, 4); 4]);
    let example1 = fixtures::example1_game();
    assert_eq!(marginal(&fixtures::example1_delta_y(&example1), 2).unwrap(), vec![q(0, 1), q(1, 1)]);
}

#[test]
fn product_supports() {
    let game = fixtures::example1_game();
    assert_eq!(
        product_support(&fixtures::example1_delta_y(&game)),
        sup(&game, &[&["y1"], &["y2"], &["y3"]])
    );
    assert_eq!(
        product_support(&fixtures::example1_mixture(&game)),
        sup(&game, &[&["y1", "z1"], &["y2", "z2"], &["y3"]])
    );
    let pdce = fixtures::pdce_game();
    assert_eq!(
        product_support(&fixtures::pdce_distribution(&pdce)),
        ProductSupport::full(pdce.shape())
    );
}

#[test]
fn complete_mixing() {
    let game = fixtures::example1_game();
    assert!(is_completely_mixed(&CorrelatedStrategy::uniform(game.shape())));
    assert!(!is_completely_mixed(&fixtures::example1_delta_y(&game)));
    let family = fixtures::example1_supporting_family(&game);
    for eps in [q(1, 10), q(1, 1000), q(1, 1_000_000)] {
        assert!(is_completely_mixed(&family.at(&eps).unwrap()));
    }
}

#[test]
fn weak_dominance() {
    let game = Game::from_fn(&[2, 2], |p| {
        let u1 = if p[0] == 0 || p[1] == 0 { 1 } else { 0 };
        vec![r(u1), r(0)]
    })
    .unwrap();
    assert_eq!(weakly_dominated_strategies(&game, 0).unwrap(), vec![1]);
    let mp = fixtures::matching_pennies();
    assert!(weakly_dominated_strategies(&mp, 0).unwrap().is_empty());
    assert!(weakly_dominated_strategies(&mp, 1).unwrap().is_empty());
    let pdce = fixtures::pdce_game();
    assert!(weakly_dominated_strategies(&pdce, 2).unwrap().is_empty());
    for t in 0..2 {
        assert!(!grid_dominated(&pdce, 2, t, 12));
    }
}

#[test]
fn product_distributions() {
    let shape = Shape::new(vec![2, 2]).unwrap();
    let sigma = MixedProfile::new(vec![vec![q(1, 3), q(2, 3)], vec![q(1, 4), q(3, 4)]]).unwrap();
    assert_eq!(
        product_distribution(&shape, &sigma).unwrap().probabilities(),
        &[q(1, 12), q(1, 4), q(1, 6), q(1, 2)]
    );
}

// rational-lp

#[test]
fn lp_examples() {
    let mut lp = LinearProgram::new(1);
    lp.set_objective(vec![r(1)]);
    lp.add_constraint(vec![r(1)], Relation::Le, r(3));
    assert_eq!(
        lp.solve().unwrap(),
        LpOutcome::Optimal {
            value: r(3),
            point: vec![r(3)]
        }
    );

    let mut lp = LinearProgram::new(1);
    lp.set_lower_bound(0, None);
    lp.add_constraint(vec![r(1)], Relation::Ge, r(1));
    lp.add_constraint(vec![r(-1)], Relation::Ge, r(0));
    match lp.solve().unwrap() {
        LpOutcome::Infeasible(cert) => {
            assert!(cert.verify(&lp));
            // y = (1, 1) up to scaling
            assert_eq!(cert.constraint_multipliers[0], cert.constraint_multipliers[1]);
        }
        other => panic!("expected infeasible, got {other:?}"),
    }

    let mut lp = LinearProgram::new(1);
    lp.set_objective(vec![r(1)]);
    assert!(matches!(lp.solve().unwrap(), LpOutcome::Unbounded { .. }));

    let mut lp = LinearProgram::new(1);
    lp.add_constraint(vec![r(1)], Relation::Ge, r(1));
    lp.add_constraint(vec![r(1)], Relation::Le, r(2));
    match lp.feasible_point().unwrap() {
        Feasibility::Feasible(x) => assert!(x[0] >= 1 && x[0] <= 2),
        Feasibility::Infeasible(_) => panic!("interval is nonempty"),
    }
}

#[test]
fn malformed_lp_is_rejected() {
    let mut lp = LinearProgram::new(2);
    lp.add_constraint(vec![r(1)], Relation::Le, r(1));
    assert!(matches!(lp.solve(), Err(Error::InvalidArgument(_))));
    assert!(matches!(LinearProgram::new(0).solve(), Err(Error::InvalidArgument(_))));
}

// cpe-certification

#[test]
fn deviation_gains() {
    let game = fixtures::pdce_game();
    let alpha = fixtures::pdce_refuting_alpha(&game);
    let k = game.profile_index(&["y1", "y2", "x3"]).unwrap();
    assert_eq!(deviation_gain(&game, k, 0, alpha.plan(0)).unwrap(), -1);
    assert_eq!(deviation_gain(&game, k, 1, alpha.plan(1)).unwrap(), 3);
    let identity = DualVectorProfile::identity(game.shape());
    for k in 0..game.profile_count() {
        assert_eq!(aggregate_gain(&game, &identity, k).unwrap(), 0);
    }
    assert!(deviation_gain(&game, game.profile_count(), 0, alpha.plan(0)).is_err());
}

#[test]
fn dual_vectors() {
    let game = fixtures::example1_game();
    assert!(is_dual_vector(&game, &DualVectorProfile::identity(game.shape())).unwrap());
    assert!(is_dual_vector(&game, &fixtures::example1_nonconvexity_alpha(&game)).unwrap());

    // Player 1 loses by switching a to b; player 2's payoff is constant.
    let lossy = Game::from_fn(&[2, 2], |p| vec![r(if p[0] == 0 { 2 } else { 1 }), r(5)]).unwrap();
    let alpha = DualVectorProfile::new(
        lossy.shape(),
        vec![DeviationPlan::pure(2, &[(0, 1)]).unwrap(), DeviationPlan::identity(2)],
    )
    .unwrap();
    let (k, gain) = find_dual_violation(&lossy, &alpha).unwrap().unwrap();
    assert_eq!(lossy.shape().decode(k)[0], 0);
    assert_eq!(gain, -1);
}

#[test]
fn restriction() {
    let game = fixtures::example1_game();
    let alpha = fixtures::example1_nonconvexity_alpha(&game);
    assert!(is_restricted(&DualVectorProfile::identity(game.shape()), &sup(&game, &[&["x1"], &["x2"], &["x3"]])));
    assert!(is_restricted(&alpha, &sup(&game, &[&["y1", "z1"], &["y2", "z2"], &["y3"]])));
    assert!(!is_restricted(&alpha, &sup(&game, &[&["y1"], &["y2"], &["y3"]])));
}

#[test]
fn certify_supports() {
    let game = fixtures::example1_game();
    assert!(certify_support(&game, &sup(&game, &[&["y1"], &["y2"], &["y3"]])).unwrap().is_perfect());
    let wide = sup(&game, &[&["y1", "z1"], &["y2", "z2"], &["y3"]]);
    let verdict = certify_support(&game, &wide).unwrap();
    assert!(verdict.refutation().unwrap().verify(&game, &wide));

    let pdce = fixtures::pdce_game();
    let full = ProductSupport::full(pdce.shape());
    let verdict = certify_support(&pdce, &full).unwrap();
    let refutation = verdict.refutation().unwrap();
    assert!(refutation.verify(&pdce, &full));
    assert!(!refutation.witnesses.is_empty());
}

#[test]
fn is_cpe_examples() {
    let game = fixtures::example1_game();
    assert!(is_cpe(&game, &fixtures::example1_delta_y(&game)).unwrap().is_perfect());
    assert!(!is_cpe(&game, &fixtures::example1_mixture(&game)).unwrap().is_perfect());
    let pdce = fixtures::pdce_game();
    assert!(!is_cpe(&pdce, &fixtures::pdce_distribution(&pdce)).unwrap().is_perfect());
    let k = game.profile_index(&["y1", "x2", "x3"]).unwrap();
    let not_ce = CorrelatedStrategy::point_mass(game.shape(), k).unwrap();
    match is_cpe(&game, &not_ce) {
        Err(Error::NotCorrelatedEquilibrium(v)) => {
            let rho = not_ce.probabilities();
            assert!(conditional_value(&game, rho, v.player, v.recommended, v.deviation)
                > conditional_value(&game, rho, v.player, v.recommended, v.recommended));
        }
        other => panic!("expected a CE violation, got {other:?}"),
    }
}

// sequence-construction

#[test]
fn mu_examples() {
    let single = Game::from_fn(&[1], |_| vec![r(0)]).unwrap();
    let outcome = find_mu(&single, &ProductSupport::full(single.shape())).unwrap();
    assert_eq!(outcome.mu().unwrap().weights(), &[r(1)]);

    // One player, all strategies equally good: the uniform weighting works.
    let flat = Game::from_fn(&[3], |_| vec![r(2)]).unwrap();
    let full = ProductSupport::full(flat.shape());
    assert!(find_mu(&flat, &full).unwrap().mu().unwrap().satisfies(&flat, &full));

    let game = fixtures::example1_game();
    let y = sup(&game, &[&["y1"], &["y2"], &["y3"]]);
    let mu = find_mu(&game, &y).unwrap();
    let mu = mu.mu().unwrap();
    assert!(mu.satisfies(&game, &y));
    assert!(mu.weights().iter().all(|w| *w >= 1));

    let pdce = fixtures::pdce_game();
    let full = ProductSupport::full(pdce.shape());
    match find_mu(&pdce, &full).unwrap() {
        MuOutcome::Infeasible(cert) => {
            let (lp, _) = cpe::sequence::mu_system(&pdce, &full).unwrap();
            assert!(cert.farkas.verify(&lp));
            assert!(cert.to_refutation(&pdce).unwrap().verify(&pdce, &full));
        }
        MuOutcome::Feasible(_) => panic!("refuted support has a mu"),
    }
}

#[test]
fn sequence_terms() {
    let shape = Shape::new(vec![2, 2]).unwrap();
    let delta = CorrelatedStrategy::point_mass(&shape, 3).unwrap();
    let term = supporting_sequence_term(&delta, &MuVector::ones(&shape), 1).unwrap();
    assert_eq!(term.probabilities(), &[q(1, 5), q(1, 5), q(1, 5), q(2, 5)]);

    let game = fixtures::example1_game();
    let rho = fixtures::example1_delta_y(&game);
    let support = product_support(&rho);
    let mu = find_mu(&game, &support).unwrap().mu().unwrap().clone();
    let total: Rational = mu.weights().iter().sum();
    let k = 1_000_000u64;
    let term = supporting_sequence_term(&rho, &mu, k).unwrap();
    let bound = &total / Rational::from_integer(k as i64);
    for (a, b) in term.probabilities().iter().zip(rho.probabilities()) {
        assert!(a.is_positive());
        assert!((a - b).abs() <= bound);
    }
}

#[test]
fn sequence_term_verification() {
    let game = fixtures::example1_game();
    let family = fixtures::example1_supporting_family(&game);
    let y = sup(&game, &[&["y1"], &["y2"], &["y3"]]);
    assert!(verify_sequence_term(&game, &family.at(&q(1, 100)).unwrap(), &y).unwrap());

    let mp = fixtures::matching_pennies();
    let uniform = CorrelatedStrategy::uniform(mp.shape());
    assert!(verify_sequence_term(&mp, &uniform, &product_support(&uniform)).unwrap());

    let rho = fixtures::example1_delta_y(&game);
    let mu = find_mu(&game, &y).unwrap().mu().unwrap().clone();
    for k in [1, 2, 10, 1000] {
        let term = supporting_sequence_term(&rho, &mu, k).unwrap();
        assert!(verify_sequence_term(&game, &term, &y).unwrap());
        assert!(obedient_on(&game, term.probabilities(), &y));
    }
    assert!(matches!(
        verify_sequence_term(&game, &rho, &y),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn parametric_families() {
    let game = fixtures::example1_game();
    let target = fixtures::example1_delta_y(&game);
    let y = product_support(&target);
    let family = fixtures::example1_supporting_family(&game);
    assert!(verify_parametric_sequence(&game, &family, &target, &y).unwrap().holds());

    let mp = fixtures::matching_pennies();
    let uniform = CorrelatedStrategy::uniform(mp.shape());
    let constant = ParametricDistribution::new(
        mp.shape(),
        uniform.probabilities().iter().cloned().map(EpsPolynomial::constant).collect(),
    )
    .unwrap();
    assert!(verify_parametric_sequence(&mp, &constant, &uniform, &ProductSupport::full(mp.shape()))
        .unwrap()
        .holds());

    // Move the unit mass from (y1,y2,y3) to (z1,y2,y3).
    let from = game.profile_index(&["y1", "y2", "y3"]).unwrap();
    let to = game.profile_index(&["z1", "y2", "y3"]).unwrap();
    let mut masses = family.masses().to_vec();
    masses.swap(from, to);
    let moved = ParametricDistribution::new(game.shape(), masses).unwrap();
    let report = verify_parametric_sequence(&game, &moved, &target, &y).unwrap();
    assert!(!report.limit_matches);
    assert!(!report.holds());
    // Exact evaluation at a small ε agrees with every symbolic sign.
    let eps = q(1, 1_000_000);
    let weights: Vec<Rational> = moved.masses().iter().map(|m| m.eval(&eps)).collect();
    for c in &report.constraints {
        let margin = conditional_value(&game, &weights, c.player, c.recommended, c.recommended)
            - conditional_value(&game, &weights, c.player, c.recommended, c.deviation);
        assert_eq!(margin, c.margin.eval(&eps));
        assert_eq!(margin.is_negative(), !c.holds());
    }
}

// support-classifier

#[test]
fn exact_support_equilibria() {
    let game = fixtures::example1_game();
    let y = sup(&game, &[&["y1"], &["y2"], &["y3"]]);
    assert_eq!(ce_with_exact_support(&game, &y).unwrap().unwrap(), fixtures::example1_delta_y(&game));
    let mp = fixtures::matching_pennies();
    assert_eq!(
        ce_with_exact_support(&mp, &ProductSupport::full(mp.shape())).unwrap().unwrap(),
        CorrelatedStrategy::uniform(mp.shape())
    );
    let dominant = Game::from_fn(&[2, 2], |p| {
        let v = p.iter().filter(|&&x| x == 0).count() as i64;
        vec![r(v), r(v)]
    })
    .unwrap();
    let bb = ProductSupport::new(dominant.shape(), vec![vec![1], vec![1]]).unwrap();
    assert!(ce_with_exact_support(&dominant, &bb).unwrap().is_none());
}

#[test]
fn classification_examples() {
    let game = fixtures::example1_game();
    let all = classify_all_supports(&game, DEFAULT_SUPPORT_CAP).unwrap();
    let get = |labels: &[&[&str]]| {
        let target = sup(&game, labels);
        all.iter().find(|c| c.support == target).unwrap().clone()
    };
    assert!(get(&[&["y1"], &["y2"], &["y3"]]).equality_holds);
    assert!(get(&[&["z1"], &["z2"], &["y3"]]).equality_holds);
    assert!(!get(&[&["y1", "z1"], &["y2", "z2"], &["y3"]]).equality_holds);
    let maximal = maximal_elements(&all);
    for point in [sup(&game, &[&["y1"], &["y2"], &["y3"]]), sup(&game, &[&["z1"], &["z2"], &["y3"]])] {
        assert!(maximal.iter().any(|m| point.is_subset_of(m)));
    }

    let pdce = fixtures::pdce_game();
    assert_eq!(support_count(&pdce), 15 * 15 * 3);
    let all = classify_all_supports(&pdce, DEFAULT_SUPPORT_CAP).unwrap();
    let full = all.iter().find(|c| c.support == ProductSupport::full(pdce.shape())).unwrap();
    assert!(!full.equality_holds);

    let mp = fixtures::matching_pennies();
    let all = classify_all_supports(&mp, DEFAULT_SUPPORT_CAP).unwrap();
    let full = all.iter().find(|c| c.support == ProductSupport::full(mp.shape())).unwrap();
    assert!(full.equality_holds);
    assert_eq!(full.sample_ce.as_ref().unwrap(), &CorrelatedStrategy::uniform(mp.shape()));
    assert_eq!(maximal_cpe_supports(&mp, DEFAULT_SUPPORT_CAP).unwrap(), vec![ProductSupport::full(mp.shape())]);
}

#[test]
fn classification_cap() {
    let game = fixtures::example1_game();
    assert!(matches!(classify_all_supports(&game, 1), Err(Error::CapExceeded { cap: 1, .. })));
}

// pdce-checker

fn rational_trembles(trembles: &TrembleFamily, eps: &Rational) -> Vec<Vec<Vec<Rational>>> {
    trembles
        .rows()
        .iter()
        .map(|m| m.iter().map(|row| row.iter().map(|p| p.eval(eps)).collect()).collect())
        .collect()
}

/// Perceived probabilities at a concrete ε, summed straight from the definition.
fn perceived_oracle(game: &Game, rho: &CorrelatedStrategy, sigma: &[Vec<Vec<Rational>>], player: usize) -> Vec<Rational> {
    let c = counts(game);
    let all = profiles(&c);
    all.iter()
        .map(|target| {
            all.iter()
                .filter(|src| src[player] == target[player])
                .map(|src| {
                    let mut w = rho.probability(index_of(&c, src)).clone();
                    for j in (0..c.len()).filter(|&j| j != player) {
                        w *= &sigma[j][src[j]][target[j]];
                    }
                    w
                })
                .sum()
        })
        .collect()
}

#[test]
fn perceived_distributions() {
    let game = fixtures::pdce_game();
    let rho = fixtures::pdce_distribution(&game);
    let identity = TrembleFamily::identity(game.shape());
    let w1 = s(&game, 0, "w1");
    for i in 0..3 {
        let table = perceived_distribution(&game, &rho, &identity, i).unwrap();
        for k in 0..game.profile_count() {
            assert_eq!(table.mass(k), &EpsPolynomial::constant(rho.probability(k).clone()));
        }
    }
    let trembles = fixtures::pdce_trembles(&game);
    let table = perceived_distribution(&game, &rho, &trembles, 0).unwrap();
    let at = |labels: [&str; 3]| table.mass(game.profile_index(&labels).unwrap()).clone();
    assert_eq!(at(["w1", "y2", "x3"]), EpsPolynomial::new(vec![q(0, 1), q(1, 16)]));
    assert_eq!(at(["w1", "z2", "y3"]), EpsPolynomial::new(vec![q(3, 16), q(-11, 16), q(1, 2)]));
    for eps in [q(1, 10), q(1, 1000)] {
        let oracle = perceived_oracle(&game, &rho, &rational_trembles(&trembles, &eps), 0);
        for k in game.shape().profiles_with(0, w1) {
            assert_eq!(table.mass(k).eval(&eps), oracle[k]);
        }
    }
    let example1 = fixtures::example1_game();
    let table = perceived_distribution(
        &example1,
        &fixtures::example1_delta_y(&example1),
        &TrembleFamily::identity(example1.shape()),
        0,
    )
    .unwrap();
    for k in example1.shape().profiles_with(0, s(&example1, 0, "x1")) {
        assert!(table.mass(k).is_zero());
    }
}

#[test]
fn tremble_check_examples() {
    let game = fixtures::pdce_game();
    let rho = fixtures::pdce_distribution(&game);
    let report = pdce_check(&game, &rho, &fixtures::pdce_trembles(&game)).unwrap();
    assert!(report.holds());
    let w1 = s(&game, 0, "w1");
    assert_eq!(
        report.gain(0, w1, s(&game, 0, "y1")).unwrap().gain,
        EpsPolynomial::new(vec![q(-9, 16), q(7, 4), q(-1, 2)])
    );
    assert_eq!(
        report.gain(0, w1, s(&game, 0, "z1")).unwrap().gain,
        EpsPolynomial::new(vec![q(-3, 16), q(1, 4), q(-1, 2)])
    );

    let mp = fixtures::matching_pennies();
    let uniform = CorrelatedStrategy::uniform(mp.shape());
    assert!(pdce_check(&mp, &uniform, &TrembleFamily::identity(mp.shape())).unwrap().holds());
}

/// With every tremble of order ε the checker still runs; its verdict must
/// agree with gains evaluated from the definition at tiny concrete ε.
#[test]
fn symmetric_tremble_variant() {
    let game = fixtures::pdce_game();
    let rho = fixtures::pdce_distribution(&game);
    let trembles = fixtures::pdce_trembles_with(&game, false);
    let report = pdce_check(&game, &rho, &trembles).unwrap();
    let eps = q(1, 1_000_000_000);
    let sigma = rational_trembles(&trembles, &eps);
    let mut oracle_holds = true;
    for g in &report.gains {
        let perceived = perceived_oracle(&game, &rho, &sigma, g.player);
        let gain = conditional_value(&game, &perceived, g.player, g.recommended, g.deviation)
            - conditional_value(&game, &perceived, g.player, g.recommended, g.recommended);
        assert_eq!(gain, g.gain.eval(&eps));
        oracle_holds &= !gain.is_positive();
    }
    assert_eq!(report.holds(), oracle_holds);
    assert!(report.completely_mixed);
}
