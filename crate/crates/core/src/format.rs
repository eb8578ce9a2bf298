//! JSON file formats for games, distributions, deviation plans, tremble
//! families and parametric distributions.
//!
//! Profiles are keyed by comma-joined strategy labels (`"x1,y2,x3"`), numbers
//! are exact rational strings (`"3/16"`) and polynomials in `ε` are written
//! as `{"coeffs": ["a0", "a1", ...]}`. Maps keep their file order, and
//! duplicate keys are rejected.

use std::fmt;
use std::marker::PhantomData;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::certify::{DeviationPlan, DualVectorProfile};
use crate::game::{CorrelatedStrategy, Game};
use crate::pdce::TrembleFamily;
use crate::poly::EpsPolynomial;
use crate::rational::Rational;
use crate::sequence::ParametricDistribution;

#[derive(Debug, Error)]
pub enum FormatError {
    /// Malformed JSON or wrong value types; carries line and column.
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{0}")]
    Content(String),
    #[error(transparent)]
    Model(#[from] crate::error::Error),
}

fn content<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Content(msg.into()))
}

/// String-keyed map that keeps insertion order and refuses duplicate keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedMap<V>(pub Vec<(String, V)>);

impl<V> Default for OrderedMap<V> {
    fn default() -> Self {
        OrderedMap(Vec::new())
    }
}

impl<V> OrderedMap<V> {
    pub fn get(&self, key: &str) -> Option<&V> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &V)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }
}

impl<V: Serialize> Serialize for OrderedMap<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for OrderedMap<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct MapVisitor<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for MapVisitor<V> {
            type Value = OrderedMap<V>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut entries: Vec<(String, V)> = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, V>()? {
                    if entries.iter().any(|(seen, _)| *seen == k) {
                        return Err(serde::de::Error::custom(format!("duplicate key {k:?}")));
                    }
                    entries.push((k, v));
                }
                Ok(OrderedMap(entries))
            }
        }

        deserializer.deserialize_map(MapVisitor(PhantomData))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub players: Vec<String>,
    pub strategies: Vec<Vec<String>>,
    pub payoffs: OrderedMap<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionFile {
    pub probabilities: OrderedMap<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialEntry {
    pub coeffs: EpsPolynomial,
}

/// `trembles[player][recommended][played]`; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrembleFile {
    pub trembles: OrderedMap<OrderedMap<OrderedMap<PolynomialEntry>>>,
}

/// Unnormalized mass per profile; every profile must be listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub masses: OrderedMap<PolynomialEntry>,
}

/// `plans[player][recommended][target]`; absent rows are obeyed and absent
/// entries within a listed row are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanFile {
    pub plans: OrderedMap<OrderedMap<OrderedMap<Rational>>>,
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("file types serialize")
}

fn player_index(game: &Game, label: &str) -> Result<usize, FormatError> {
    game.player_index(label)
        .map_or_else(|| content(format!("unknown player {label:?}")), Ok)
}

fn strategy_index(game: &Game, player: usize, label: &str) -> Result<usize, FormatError> {
    game.strategy_index(player, label).map_or_else(
        || {
            content(format!(
                "unknown strategy {label:?} for player {:?}",
                game.player_labels()[player]
            ))
        },
        Ok,
    )
}

fn profile_from_key(game: &Game, key: &str) -> Result<usize, FormatError> {
    let parts: Vec<&str> = key.split(',').map(str::trim).collect();
    if parts.len() != game.player_count() {
        return content(format!(
            "profile {key:?} names {} strategies, expected {}",
            parts.len(),
            game.player_count()
        ));
    }
    let mut profile = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        profile.push(strategy_index(game, i, part)?);
    }
    Ok(game.shape().encode(&profile)?)
}

impl GameFile {
    pub fn into_game(self) -> Result<Game, FormatError> {
        let template = Game::new(
            self.players.clone(),
            self.strategies.clone(),
            vec![vec![Rational::zero(); self.players.len()]; self.strategies.iter().map(Vec::len).product()],
        )?;
        let mut payoffs: Vec<Option<Vec<Rational>>> = vec![None; template.profile_count()];
        for (key, values) in self.payoffs.0 {
            let k = profile_from_key(&template, &key)?;
            if payoffs[k].is_some() {
                return content(format!("profile {key:?} is listed twice"));
            }
            if values.len() != template.player_count() {
                return content(format!(
                    "profile {key:?} has {} payoffs, expected {}",
                    values.len(),
                    template.player_count()
                ));
            }
            payoffs[k] = Some(values);
        }
        if let Some(missing) = payoffs.iter().position(Option::is_none) {
            return content(format!("no payoffs for profile {:?}", template.profile_key(missing)));
        }
        Ok(Game::new(
            self.players,
            self.strategies,
            payoffs.into_iter().map(Option::unwrap).collect(),
        )?)
    }

    pub fn from_game(game: &Game) -> Self {
        GameFile {
            players: game.player_labels().to_vec(),
            strategies: (0..game.player_count())
                .map(|i| game.strategy_labels(i).to_vec())
                .collect(),
            payoffs: OrderedMap(
                (0..game.profile_count())
                    .map(|k| (game.profile_key(k), game.payoff_vector(k).to_vec()))
                    .collect(),
            ),
        }
    }
}

impl DistributionFile {
    pub fn into_distribution(self, game: &Game) -> Result<CorrelatedStrategy, FormatError> {
        let mut probabilities = vec![Rational::zero(); game.profile_count()];
        for (key, p) in self.probabilities.0 {
            let k = profile_from_key(game, &key)?;
            if p.is_negative() {
                return content(format!("negative probability {p} at {key:?}"));
            }
            probabilities[k] = p;
        }
        let total: Rational = probabilities.iter().sum();
        if !total.is_one() {
            return content(format!("probabilities sum to {total}, not 1"));
        }
        Ok(CorrelatedStrategy::new(game.shape(), probabilities)?)
    }

    /// Lists the profiles with positive probability.
    pub fn from_distribution(game: &Game, rho: &CorrelatedStrategy) -> Self {
        DistributionFile {
            probabilities: OrderedMap(
                rho.support()
                    .into_iter()
                    .map(|k| (game.profile_key(k), rho.probability(k).clone()))
                    .collect(),
            ),
        }
    }
}

impl TrembleFile {
    pub fn into_trembles(self, game: &Game) -> Result<TrembleFamily, FormatError> {
        let mut rows: Vec<Vec<Vec<EpsPolynomial>>> = (0..game.player_count())
            .map(|i| {
                let n = game.strategy_count(i);
                vec![vec![EpsPolynomial::zero(); n]; n]
            })
            .collect();
        for (player, matrix) in self.trembles.0 {
            let i = player_index(game, &player)?;
            for (rec, row) in matrix.0 {
                let s = strategy_index(game, i, &rec)?;
                for (played, entry) in row.0 {
                    let t = strategy_index(game, i, &played)?;
                    rows[i][s][t] = entry.coeffs;
                }
            }
        }
        Ok(TrembleFamily::new(game.shape(), rows)?)
    }

    /// Omits zero entries.
    pub fn from_trembles(game: &Game, trembles: &TrembleFamily) -> Self {
        let players = (0..game.player_count())
            .map(|i| {
                let labels = game.strategy_labels(i);
                let matrix = (0..game.strategy_count(i))
                    .map(|s| {
                        let row = (0..game.strategy_count(i))
                            .filter(|&t| !trembles.entry(i, s, t).is_zero())
                            .map(|t| {
                                (
                                    labels[t].clone(),
                                    PolynomialEntry {
                                        coeffs: trembles.entry(i, s, t).clone(),
                                    },
                                )
                            })
                            .collect();
                        (labels[s].clone(), OrderedMap(row))
                    })
                    .collect();
                (game.player_labels()[i].clone(), OrderedMap(matrix))
            })
            .collect();
        TrembleFile {
            trembles: OrderedMap(players),
        }
    }
}

impl FamilyFile {
    pub fn into_family(self, game: &Game) -> Result<ParametricDistribution, FormatError> {
        let mut masses: Vec<Option<EpsPolynomial>> = vec![None; game.profile_count()];
        for (key, entry) in self.masses.0 {
            let k = profile_from_key(game, &key)?;
            masses[k] = Some(entry.coeffs);
        }
        if let Some(missing) = masses.iter().position(Option::is_none) {
            return content(format!("no mass for profile {:?}", game.profile_key(missing)));
        }
        Ok(ParametricDistribution::new(
            game.shape(),
            masses.into_iter().map(Option::unwrap).collect(),
        )?)
    }

    pub fn from_family(game: &Game, family: &ParametricDistribution) -> Self {
        FamilyFile {
            masses: OrderedMap(
                family
                    .masses()
                    .iter()
                    .enumerate()
                    .map(|(k, m)| (game.profile_key(k), PolynomialEntry { coeffs: m.clone() }))
                    .collect(),
            ),
        }
    }
}

impl PlanFile {
    pub fn into_dual_vector(self, game: &Game) -> Result<DualVectorProfile, FormatError> {
        let mut rows: Vec<Vec<Vec<Rational>>> = (0..game.player_count())
            .map(|i| {
                let n = game.strategy_count(i);
                DeviationPlan::identity(n).rows().to_vec()
            })
            .collect();
        for (player, matrix) in self.plans.0 {
            let i = player_index(game, &player)?;
            for (rec, row) in matrix.0 {
                let s = strategy_index(game, i, &rec)?;
                let mut dense = vec![Rational::zero(); game.strategy_count(i)];
                for (target, a) in row.0 {
                    dense[strategy_index(game, i, &target)?] = a;
                }
                rows[i][s] = dense;
            }
        }
        let plans = rows
            .into_iter()
            .map(DeviationPlan::new)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DualVectorProfile::new(game.shape(), plans)?)
    }

    /// Lists every row, omitting zero entries.
    pub fn from_dual_vector(game: &Game, alpha: &DualVectorProfile) -> Self {
        let players = (0..game.player_count())
            .map(|i| {
                let labels = game.strategy_labels(i);
                let plan = alpha.plan(i);
                let matrix = (0..plan.strategy_count())
                    .map(|s| {
                        let row = plan
                            .row(s)
                            .iter()
                            .enumerate()
                            .filter(|(_, a)| !a.is_zero())
                            .map(|(t, a)| (labels[t].clone(), a.clone()))
                            .collect();
                        (labels[s].clone(), OrderedMap(row))
                    })
                    .collect();
                (game.player_labels()[i].clone(), OrderedMap(matrix))
            })
            .collect();
        PlanFile {
            plans: OrderedMap(players),
        }
    }
}

pub fn parse_game(text: &str) -> Result<Game, FormatError> {
    parse_json::<GameFile>(text)?.into_game()
}

pub fn parse_distribution(game: &Game, text: &str) -> Result<CorrelatedStrategy, FormatError> {
    parse_json::<DistributionFile>(text)?.into_distribution(game)
}

pub fn parse_trembles(game: &Game, text: &str) -> Result<TrembleFamily, FormatError> {
    parse_json::<TrembleFile>(text)?.into_trembles(game)
}

pub fn parse_family(game: &Game, text: &str) -> Result<ParametricDistribution, FormatError> {
    parse_json::<FamilyFile>(text)?.into_family(game)
}

pub fn parse_dual_vector(game: &Game, text: &str) -> Result<DualVectorProfile, FormatError> {
    parse_json::<PlanFile>(text)?.into_dual_vector(game)
}
