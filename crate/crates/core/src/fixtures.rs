//! Small games with known answers, shared by tests, the CLI corpus and docs.

use crate::certify::{DeviationPlan, DualVectorProfile};
use crate::game::{CorrelatedStrategy, Game};
use crate::pdce::TrembleFamily;
use crate::poly::EpsPolynomial;
use crate::rational::{q, Rational};
use crate::sequence::ParametricDistribution;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn build(players: &[&str], strategies: &[&[&str]], table: impl Fn(&[usize]) -> [i64; 3]) -> Game {
    let strategies: Vec<Vec<String>> = strategies.iter().map(|s| labels(s)).collect();
    let counts: Vec<usize> = strategies.iter().map(Vec::len).collect();
    let shape = crate::game::Shape::new(counts).expect("nonempty strategy sets");
    let payoffs = (0..shape.profile_count())
        .map(|k| {
            let p = shape.decode(k);
            table(&p)[..players.len()].iter().map(|&v| Rational::from(v)).collect()
        })
        .collect();
    Game::new(labels(players), strategies, payoffs).expect("fixture game is well formed")
}

/// Two players, heads/tails; player 1 wins on a match.
pub fn matching_pennies() -> Game {
    build(&["1", "2"], &[&["H", "T"], &["H", "T"]], |p| {
        if p[0] == p[1] {
            [1, -1, 0]
        } else {
            [-1, 1, 0]
        }
    })
}

/// Three-player game where a point mass on `(y1,y2,y3)` or
/// `(z1,z2,y3)` is correlated perfect, their mixtures are not.
pub fn example1_game() -> Game {
    const LAYER_X3: [[[i64; 3]; 3]; 3] = [
        [[1, 1, 2], [2, 0, 0], [2, 0, 0]],
        [[0, 2, 0], [3, 0, 0], [0, 3, 0]],
        [[0, 2, 0], [0, 3, 0], [3, 0, 0]],
    ];
    build(
        &["1", "2", "3"],
        &[&["x1", "y1", "z1"], &["x2", "y2", "z2"], &["x3", "y3"]],
        |p| if p[2] == 0 { LAYER_X3[p[0]][p[1]] } else { [3, 3, 1] },
    )
}

fn point_mass(game: &Game, profile: &[&str]) -> CorrelatedStrategy {
    let k = game.profile_index(profile).expect("fixture profile exists");
    CorrelatedStrategy::point_mass(game.shape(), k).expect("valid profile")
}

pub fn example1_delta_y(game: &Game) -> CorrelatedStrategy {
    point_mass(game, &["y1", "y2", "y3"])
}

pub fn example1_delta_z(game: &Game) -> CorrelatedStrategy {
    point_mass(game, &["z1", "z2", "y3"])
}

/// Equal mixture of the two point masses above.
pub fn example1_mixture(game: &Game) -> CorrelatedStrategy {
    let y = example1_delta_y(game);
    let z = example1_delta_z(game);
    CorrelatedStrategy::mixture(&[(q(1, 2), &y), (q(1, 2), &z)]).expect("valid mixture")
}

/// Unnormalized masses converging to the point mass on `(y1,y2,y3)`.
pub fn example1_supporting_family(game: &Game) -> ParametricDistribution {
    const LAYER_X3: [[i64; 3]; 3] = [[1, 1, 1], [1, 3, 1], [1, 7, 1]];
    let shape = game.shape();
    let masses = (0..shape.profile_count())
        .map(|k| {
            let p = shape.decode(k);
            if p[2] == 0 {
                EpsPolynomial::monomial(Rational::from(LAYER_X3[p[0]][p[1]]), 1)
            } else if p[0] == 1 && p[1] == 1 {
                EpsPolynomial::one()
            } else {
                EpsPolynomial::eps()
            }
        })
        .collect();
    ParametricDistribution::new(shape, masses).expect("positive masses")
}

/// Players 1 and 2 switch from `y`/`z` to `x`; player 3 obeys.
pub fn example1_nonconvexity_alpha(game: &Game) -> DualVectorProfile {
    let to_x = || DeviationPlan::pure(3, &[(1, 0), (2, 0)]).expect("valid moves");
    DualVectorProfile::new(game.shape(), vec![to_x(), to_x(), DeviationPlan::identity(2)]).expect("matching sizes")
}

/// Four strategies for players 1 and 2, two for player 3 whose payoffs are
/// all zero. Has a correlated equilibrium that survives the tremble family
/// below but is not correlated perfect.
pub fn pdce_game() -> Game {
    // [layer][row][column] -> (u1, u2)
    const TABLE: [[[[i64; 2]; 4]; 4]; 2] = [
        [
            [[0, 0], [0, 0], [0, 0], [0, 0]],
            [[0, 0], [0, 0], [0, 0], [0, 0]],
            [[0, 1], [0, 1], [1, -2], [-2, 1]],
            [[0, 1], [0, 1], [-2, 1], [1, -2]],
        ],
        [
            [[0, 0], [0, 0], [1, 0], [1, 0]],
            [[0, 0], [0, 0], [1, 0], [1, 0]],
            [[0, 0], [0, 0], [1, -2], [-2, 1]],
            [[0, 0], [0, 0], [-2, 1], [1, -2]],
        ],
    ];
    build(
        &["1", "2", "3"],
        &[&["w1", "x1", "y1", "z1"], &["w2", "x2", "y2", "z2"], &["x3", "y3"]],
        |p| {
            let [a, b] = TABLE[p[2]][p[0]][p[1]];
            [a, b, 0]
        },
    )
}

pub fn pdce_distribution(game: &Game) -> CorrelatedStrategy {
    let entries = [
        (["y1", "w2", "x3"], 3),
        (["y1", "x2", "x3"], 1),
        (["z1", "w2", "x3"], 1),
        (["z1", "x2", "x3"], 3),
        (["w1", "y2", "y3"], 1),
        (["w1", "z2", "y3"], 3),
        (["x1", "y2", "y3"], 3),
        (["x1", "z2", "y3"], 1),
    ];
    let entries: Vec<(usize, Rational)> = entries
        .iter()
        .map(|(p, n)| (game.profile_index(p).expect("fixture profile"), q(*n, 16)))
        .collect();
    CorrelatedStrategy::from_entries(game.shape(), &entries).expect("valid distribution")
}

/// Independent trembles under which [`pdce_distribution`] stays obedient.
/// `eps_squared_rare` selects the asymmetric variant where trembling from `w`
/// to `z` and from `x` to `y` happens with probability `ε²`; otherwise those
/// entries are `ε` like every other tremble.
pub fn pdce_trembles_with(game: &Game, eps_squared_rare: bool) -> TrembleFamily {
    let eps = EpsPolynomial::eps;
    let rare = || {
        if eps_squared_rare {
            EpsPolynomial::monomial(Rational::one(), 2)
        } else {
            eps()
        }
    };
    let four = |s: usize, t: usize| -> EpsPolynomial {
        match (s, t) {
            (0, 3) | (1, 2) => rare(),
            _ if s != t => eps(),
            _ => EpsPolynomial::zero(),
        }
    };
    let player = || {
        (0..4)
            .map(|s| {
                let mut row: Vec<EpsPolynomial> = (0..4).map(|t| four(s, t)).collect();
                let off = row.iter().fold(EpsPolynomial::zero(), |acc, p| &acc + p);
                row[s] = &EpsPolynomial::one() - &off;
                row
            })
            .collect::<Vec<_>>()
    };
    let third = vec![
        vec![EpsPolynomial::from_integers(&[1, -1]), eps()],
        vec![eps(), EpsPolynomial::from_integers(&[1, -1])],
    ];
    TrembleFamily::new(game.shape(), vec![player(), player(), third]).expect("valid tremble family")
}

pub fn pdce_trembles(game: &Game) -> TrembleFamily {
    pdce_trembles_with(game, true)
}

/// Players 1 and 2 switch from `y`/`z` to `w`; player 3 obeys.
pub fn pdce_refuting_alpha(game: &Game) -> DualVectorProfile {
    let to_w = || DeviationPlan::pure(4, &[(2, 0), (3, 0)]).expect("valid moves");
    DualVectorProfile::new(game.shape(), vec![to_w(), to_w(), DeviationPlan::identity(2)]).expect("matching sizes")
}
