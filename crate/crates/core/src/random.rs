//! Random small games for property checks.

use rand::Rng;

use crate::game::Game;
use crate::rational::Rational;

/// A game with the given strategy counts and integer payoffs drawn
/// uniformly from `[low, high]`.
pub fn random_integer_game<R: Rng + ?Sized>(rng: &mut R, counts: &[usize], low: i64, high: i64) -> Game {
    let n = counts.len();
    Game::from_fn(counts, |_| (0..n).map(|_| Rational::from(rng.gen_range(low..=high))).collect())
        .expect("nonempty strategy counts")
}

/// 2 to `max_players` players with 2 to `max_strategies` strategies each.
pub fn random_small_game<R: Rng + ?Sized>(
    rng: &mut R,
    max_players: usize,
    max_strategies: usize,
    low: i64,
    high: i64,
) -> Game {
    let players = rng.gen_range(2..=max_players.max(2));
    let counts: Vec<usize> = (0..players).map(|_| rng.gen_range(2..=max_strategies.max(2))).collect();
    random_integer_game(rng, &counts, low, high)
}
