use std::path::Path;

use anyhow::{anyhow, Context};
use cpe::classify::all_supports;
use cpe::format::{self, OrderedMap};
use cpe::game::dominating_mixture;
use cpe::random::random_small_game;
use cpe::{
    aggregate_gain, certify_support, classify_all_supports, find_ce_violation, find_mu, is_cpe, is_dual_vector,
    is_restricted, maximal_elements, pdce_check, product_support, supporting_sequence_term, verify_parametric_sequence,
    verify_sequence_term, CeViolation, CorrelatedStrategy, CpeVerdict, Game, MuOutcome, MuVector,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{
    distribution_json, refutation_json, refutation_lines, support_json, Exit, Report,
};

/// Failures that end a command without a verdict.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Cap { required: u128, cap: usize },
}

impl Failure {
    pub fn exit(&self) -> Exit {
        match self {
            Failure::Input(_) => Exit::Input,
            Failure::Cap { .. } => Exit::Cap,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Input(e) => format!("{e:#}"),
            Failure::Cap { required, cap } => {
                format!("{required} product supports exceed the enumeration cap of {cap}")
            }
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<cpe::Error> for Failure {
    fn from(e: cpe::Error) -> Self {
        match e {
            cpe::Error::CapExceeded { required, cap } => Failure::Cap { required, cap },
            other => Failure::Input(other.into()),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn located<T>(path: &Path, r: Result<T, format::FormatError>) -> anyhow::Result<T> {
    r.map_err(|e| anyhow!("{}: {e}", path.display()))
}

pub fn load_game(path: &Path) -> anyhow::Result<Game> {
    located(path, format::parse_game(&read(path)?))
}

pub fn load_distribution(game: &Game, path: &Path) -> anyhow::Result<CorrelatedStrategy> {
    located(path, format::parse_distribution(game, &read(path)?))
}

fn violation_json(game: &Game, v: &CeViolation) -> serde_json::Value {
    let labels = game.strategy_labels(v.player);
    json!({
        "player": game.player_labels()[v.player],
        "recommended": labels[v.recommended],
        "deviation": labels[v.deviation],
        "obey_value": v.obey_value,
        "deviation_value": v.deviation_value,
    })
}

fn violation_line(game: &Game, v: &CeViolation) -> String {
    let labels = game.strategy_labels(v.player);
    format!(
        "player {} told {} gains by playing {} ({} > {}, unnormalized)",
        game.player_labels()[v.player],
        labels[v.recommended],
        labels[v.deviation],
        v.deviation_value,
        v.obey_value
    )
}

fn not_ce(command: &'static str, game: &Game, v: &CeViolation) -> Report {
    let mut report = Report::new(command, "not-correlated-equilibrium", Exit::NotCe);
    report.set("violation", violation_json(game, v));
    report.line(violation_line(game, v));
    report
}

fn mu_json(game: &Game, mu: &MuVector) -> OrderedMap<cpe::Rational> {
    OrderedMap(
        mu.weights()
            .iter()
            .enumerate()
            .map(|(k, w)| (game.profile_key(k), w.clone()))
            .collect(),
    )
}

pub fn check_ce(game_path: &Path, dist_path: &Path) -> Outcome {
    let game = load_game(game_path)?;
    let rho = load_distribution(&game, dist_path)?;
    Ok(match find_ce_violation(&game, &rho)? {
        None => {
            let mut report = Report::new("check-ce", "correlated-equilibrium", Exit::Pass);
            report.set("support", support_json(&game, &product_support(&rho)));
            report
        }
        Some(v) => {
            let mut report = Report::new("check-ce", "not-correlated-equilibrium", Exit::Negative);
            report.set("violation", violation_json(&game, &v));
            report.line(violation_line(&game, &v));
            report
        }
    })
}

pub fn check_cpe(game_path: &Path, dist_path: &Path, alpha_path: Option<&Path>) -> Outcome {
    let game = load_game(game_path)?;
    let rho = load_distribution(&game, dist_path)?;
    let support = product_support(&rho);
    let verdict = match is_cpe(&game, &rho) {
        Err(cpe::Error::NotCorrelatedEquilibrium(v)) => return Ok(not_ce("check-cpe", &game, &v)),
        other => other?,
    };
    let mut report = match &verdict {
        CpeVerdict::Perfect { optimum } => {
            let mut report = Report::new("check-cpe", "perfect", Exit::Pass);
            report.set("optimum", optimum);
            if let MuOutcome::Feasible(mu) = find_mu(&game, &support)? {
                report.set("mu", mu_json(&game, &mu));
            }
            report
        }
        CpeVerdict::Refuted(r) => {
            let mut report = Report::new("check-cpe", "refuted", Exit::Negative);
            report.set("refutation", refutation_json(&game, r));
            refutation_lines(&mut report, &game, r);
            report
        }
    };
    report.set("support", support_json(&game, &support));
    report.lines.insert(0, format!("product support {}", support.describe(&game)));

    if let Some(path) = alpha_path {
        let alpha = located(path, format::parse_dual_vector(&game, &read(path)?))?;
        let dual = is_dual_vector(&game, &alpha)?;
        let restricted = is_restricted(&alpha, &support);
        let mut witnesses = Vec::new();
        for k in 0..game.profile_count() {
            let gain = aggregate_gain(&game, &alpha, k)?;
            if gain.is_positive() {
                report.line(format!("supplied plans: gain {gain} at ({})", game.profile_key(k)));
                witnesses.push(json!({ "profile": game.profile_key(k), "gain": gain }));
            }
        }
        let refutes = dual && restricted && !witnesses.is_empty();
        report.line(format!(
            "supplied plans: dual vector {dual}, restricted {restricted}, refutes {refutes}"
        ));
        report.set(
            "supplied_alpha",
            json!({
                "dual_vector": dual,
                "restricted": restricted,
                "refutes": refutes,
                "witnesses": witnesses,
            }),
        );
    }
    Ok(report)
}

pub fn sequence(game_path: &Path, dist_path: &Path, ks: &[u64]) -> Outcome {
    let game = load_game(game_path)?;
    let rho = load_distribution(&game, dist_path)?;
    if let Some(v) = find_ce_violation(&game, &rho)? {
        return Ok(not_ce("sequence", &game, &v));
    }
    let support = product_support(&rho);
    let mu = match find_mu(&game, &support)? {
        MuOutcome::Feasible(mu) => mu,
        MuOutcome::Infeasible(cert) => {
            let refutation = cert.to_refutation(&game)?;
            let mut report = Report::new("sequence", "refuted", Exit::Negative);
            report.set("refutation", refutation_json(&game, &refutation));
            refutation_lines(&mut report, &game, &refutation);
            return Ok(report);
        }
    };
    let mut terms = Vec::new();
    let mut all_ok = true;
    let mut lines = Vec::new();
    for &k in ks {
        let term = supporting_sequence_term(&rho, &mu, k)?;
        let ok = verify_sequence_term(&game, &term, &support)?;
        all_ok &= ok;
        lines.push(format!("k = {k}: {}", if ok { "verified" } else { "VIOLATED" }));
        terms.push(json!({
            "k": k.to_string(),
            "verified": ok,
            "probabilities": distribution_json(&game, &term),
        }));
    }
    let (verdict, exit) = if all_ok {
        ("supported", Exit::Pass)
    } else {
        ("term-violated", Exit::Negative)
    };
    let mut report = Report::new("sequence", verdict, exit);
    report.set("support", support_json(&game, &support));
    report.set("mu", mu_json(&game, &mu));
    report.set("terms", terms);
    report.lines = lines;
    Ok(report)
}

pub fn enumerate(game_path: &Path, cap: usize) -> Outcome {
    let game = load_game(game_path)?;
    let all = classify_all_supports(&game, cap)?;
    let maximal = maximal_elements(&all);
    let mut report = Report::new("enumerate", "classified", Exit::Pass);
    let entries: Vec<_> = all
        .iter()
        .map(|c| {
            let mut entry = json!({
                "support": support_json(&game, &c.support),
                "equality_holds": c.equality_holds,
                "ce_exists": c.ce_exists,
                "inherited": c.inherited,
            });
            if let Some(rho) = &c.sample_ce {
                entry["sample_ce"] = serde_json::to_value(distribution_json(&game, rho)).unwrap();
            }
            if let Some(r) = &c.refutation {
                entry["refutation"] = refutation_json(&game, r);
            }
            entry
        })
        .collect();
    let perfect = all.iter().filter(|c| c.equality_holds).count();
    report.line(format!(
        "{} product supports: {perfect} satisfy the equality condition, {} of them with an exact-support CE",
        all.len(),
        all.iter().filter(|c| c.is_cpe_support()).count()
    ));
    for c in &all {
        report.line(format!(
            "{}: {}{}",
            c.support.describe(&game),
            if c.equality_holds { "perfect" } else { "refuted" },
            if c.ce_exists { ", CE with exact support" } else { "" }
        ));
    }
    for m in &maximal {
        report.line(format!("maximal CPE support {}", m.describe(&game)));
    }
    report.set("supports", entries);
    report.set(
        "maximal_cpe_supports",
        maximal.iter().map(|m| support_json(&game, m)).collect::<Vec<_>>(),
    );
    Ok(report)
}

pub fn check_pdce(game_path: &Path, dist_path: &Path, trembles_path: &Path) -> Outcome {
    let game = load_game(game_path)?;
    let rho = load_distribution(&game, dist_path)?;
    let trembles = located(trembles_path, format::parse_trembles(&game, &read(trembles_path)?))?;
    let result = pdce_check(&game, &rho, &trembles)?;
    let (verdict, exit) = if result.holds() {
        ("holds", Exit::Pass)
    } else {
        ("violated", Exit::Negative)
    };
    let mut report = Report::new("check-pdce", verdict, exit);
    let mut gains = Vec::new();
    for g in &result.gains {
        let labels = game.strategy_labels(g.player);
        report.line(format!(
            "player {} told {}, playing {}: gain {}{}",
            game.player_labels()[g.player],
            labels[g.recommended],
            labels[g.deviation],
            g.gain,
            if g.holds() { "" } else { "  (positive near 0)" }
        ));
        gains.push(json!({
            "player": game.player_labels()[g.player],
            "recommended": labels[g.recommended],
            "deviation": labels[g.deviation],
            "gain": { "coeffs": g.gain },
            "holds": g.holds(),
        }));
    }
    report.set("completely_mixed_trembles", result.completely_mixed);
    report.set("gains", gains);
    Ok(report)
}

pub fn dominated(game_path: &Path) -> Outcome {
    let game = load_game(game_path)?;
    let mut report = Report::new("dominated", "listed", Exit::Pass);
    let mut players = Vec::new();
    for i in 0..game.player_count() {
        let labels = game.strategy_labels(i);
        let mut entries = Vec::new();
        for s in 0..game.strategy_count(i) {
            if let Some(sigma) = dominating_mixture(&game, i, s)? {
                let mixture = OrderedMap(
                    sigma
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| !p.is_zero())
                        .map(|(t, p)| (labels[t].clone(), p.clone()))
                        .collect(),
                );
                let parts: Vec<String> = mixture.iter().map(|(t, p)| format!("{p} {t}")).collect();
                report.line(format!(
                    "player {}: {} is weakly dominated by {}",
                    game.player_labels()[i],
                    labels[s],
                    parts.join(" + ")
                ));
                entries.push(json!({ "strategy": labels[s], "dominated_by": mixture }));
            }
        }
        players.push((game.player_labels()[i].clone(), entries));
    }
    if report.lines.is_empty() {
        report.line("no weakly dominated strategies");
    }
    report.set("dominated", OrderedMap(players));
    Ok(report)
}

pub fn check_family(game_path: &Path, dist_path: &Path, family_path: &Path) -> Outcome {
    let game = load_game(game_path)?;
    let rho = load_distribution(&game, dist_path)?;
    let family = located(family_path, format::parse_family(&game, &read(family_path)?))?;
    let support = product_support(&rho);
    let result = verify_parametric_sequence(&game, &family, &rho, &support)?;
    let (verdict, exit) = if result.holds() {
        ("supported", Exit::Pass)
    } else {
        ("not-supported", Exit::Negative)
    };
    let mut report = Report::new("check-family", verdict, exit);
    report.line(format!("limit matches the distribution: {}", result.limit_matches));
    let mut constraints = Vec::new();
    for c in &result.constraints {
        let labels = game.strategy_labels(c.player);
        report.line(format!(
            "player {} told {}, deviating to {}: margin {}{}",
            game.player_labels()[c.player],
            labels[c.recommended],
            labels[c.deviation],
            c.margin,
            if c.holds() { "" } else { "  (negative near 0)" }
        ));
        constraints.push(json!({
            "player": game.player_labels()[c.player],
            "recommended": labels[c.recommended],
            "deviation": labels[c.deviation],
            "obey_value": { "coeffs": c.obey_value },
            "deviation_value": { "coeffs": c.deviation_value },
            "margin": { "coeffs": c.margin },
            "holds": c.holds(),
        }));
    }
    report.set("limit_matches", result.limit_matches);
    report.set("limit", distribution_json(&game, &result.limit));
    report.set("constraints", constraints);
    Ok(report)
}

/// Random games: the dual LP and the weighting system must agree on every
/// product support, and each certificate must recheck.
pub fn cross_check(seed: u64, games: usize, cap: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut perfect, mut refuted) = (0usize, 0usize);
    let mut disagreements = Vec::new();
    for g in 0..games {
        let game = random_small_game(&mut rng, 3, 3, -3, 3);
        for support in all_supports(&game, cap)? {
            let verdict = certify_support(&game, &support)?;
            let agrees = match (&verdict, find_mu(&game, &support)?) {
                (CpeVerdict::Perfect { .. }, MuOutcome::Feasible(mu)) => {
                    perfect += 1;
                    mu.satisfies(&game, &support)
                }
                (CpeVerdict::Refuted(r), MuOutcome::Infeasible(_)) => {
                    refuted += 1;
                    r.verify(&game, &support)
                }
                _ => false,
            };
            if !agrees {
                disagreements.push(json!({
                    "game": g.to_string(),
                    "payoffs": format::GameFile::from_game(&game),
                    "support": support_json(&game, &support),
                }));
            }
        }
    }
    let (verdict, exit) = if disagreements.is_empty() {
        ("agree", Exit::Pass)
    } else {
        ("disagree", Exit::Negative)
    };
    let mut report = Report::new("cross-check", verdict, exit);
    report.line(format!(
        "{games} random games from seed {seed}: {perfect} perfect, {refuted} refuted supports, {} disagreements",
        disagreements.len()
    ));
    report.set("seed", seed.to_string());
    report.set("games", games.to_string());
    report.set("perfect_supports", perfect.to_string());
    report.set("refuted_supports", refuted.to_string());
    report.set("disagreements", disagreements);
    Ok(report)
}
