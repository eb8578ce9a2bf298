use std::fmt::Write as _;
use std::time::Duration;

use cpe::format::{DistributionFile, OrderedMap, PlanFile};
use cpe::{CorrelatedStrategy, DualVectorProfile, Game, ProductSupport, Rational, Refutation};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    Negative = 1,
    Input = 2,
    NotCe = 3,
    Cap = 4,
}

/// One command's result. `body` is the structured payload, `lines` its
/// human rendering.
pub struct Report {
    pub command: &'static str,
    pub verdict: &'static str,
    pub exit: Exit,
    pub body: Value,
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, verdict: &'static str, exit: Exit) -> Self {
        Report {
            command,
            verdict,
            exit,
            body: json!({}),
            lines: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.body[key] = serde_json::to_value(value).expect("report values serialize");
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn structured(&self, elapsed: Duration) -> String {
        let mut doc = json!({
            "command": self.command,
            "verdict": self.verdict,
            "exit_code": self.exit as u8,
        });
        if let (Value::Object(out), Value::Object(body)) = (&mut doc, &self.body) {
            for (k, v) in body {
                out.insert(k.clone(), v.clone());
            }
        }
        doc["timing"] = json!({ "elapsed_micros": elapsed.as_micros().to_string() });
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    pub fn human(&self, elapsed: Duration) -> String {
        let mut out = format!("{}: {}\n", self.command, self.verdict);
        for l in &self.lines {
            let _ = writeln!(out, "  {l}");
        }
        let _ = writeln!(out, "  ({} ms)", elapsed.as_millis());
        out
    }
}

pub fn support_json(game: &Game, support: &ProductSupport) -> OrderedMap<Vec<String>> {
    OrderedMap(
        (0..game.player_count())
            .map(|i| {
                let labels = game.strategy_labels(i);
                (
                    game.player_labels()[i].clone(),
                    support.strategies(i).iter().map(|&s| labels[s].clone()).collect(),
                )
            })
            .collect(),
    )
}

pub fn distribution_json(game: &Game, rho: &CorrelatedStrategy) -> OrderedMap<Rational> {
    DistributionFile::from_distribution(game, rho).probabilities
}

pub fn alpha_json(game: &Game, alpha: &DualVectorProfile) -> Value {
    serde_json::to_value(PlanFile::from_dual_vector(game, alpha).plans).expect("plans serialize")
}

pub fn witnesses_json(game: &Game, refutation: &Refutation) -> Value {
    refutation
        .witnesses
        .iter()
        .map(|w| json!({ "profile": game.profile_key(w.profile), "gain": w.gain }))
        .collect()
}

pub fn refutation_json(game: &Game, refutation: &Refutation) -> Value {
    json!({
        "alpha": alpha_json(game, &refutation.alpha),
        "witnesses": witnesses_json(game, refutation),
    })
}

pub fn refutation_lines(report: &mut Report, game: &Game, refutation: &Refutation) {
    for w in &refutation.witnesses {
        report.line(format!("gain {} at ({})", w.gain, game.profile_key(w.profile)));
    }
}
