//! Text and JSON renderings of reports.

use std::fmt::Write as _;

use lexraf_core::axioms::{AxiomResult, AxiomViolation, ScanMode};
use lexraf_core::{AxiomReport, CharacterizationReport, ComparisonOutcome, Raf};
use serde_json::{json, Value};

fn raf_json(raf: &Raf) -> Value {
    Value::Array(raf.values().iter().map(|v| Value::String(v.to_string())).collect())
}

fn outcome_name(o: ComparisonOutcome) -> &'static str {
    match o {
        ComparisonOutcome::FirstPreferred => "FirstPreferred",
        ComparisonOutcome::SecondPreferred => "SecondPreferred",
        ComparisonOutcome::Indifferent => "Indifferent",
    }
}

/// Names for sample points: document names when present, else `#index`.
pub struct PointNames<'a>(pub Option<&'a [String]>);

impl PointNames<'_> {
    fn get(&self, i: usize) -> String {
        match self.0 {
            Some(names) => names[i].clone(),
            None => format!("#{i}"),
        }
    }
}

fn violation_json(v: &AxiomViolation, names: &PointNames<'_>) -> Value {
    json!({
        "points": v.points,
        "names": v.points.iter().map(|&i| names.get(i)).collect::<Vec<_>>(),
        "rafs": v.witness.iter().map(raf_json).collect::<Vec<_>>(),
        "k": v.k,
        "observed": v.observed.iter().map(|o| json!({
            "first": o.first,
            "second": o.second,
            "outcome": outcome_name(o.outcome),
        })).collect::<Vec<_>>(),
    })
}

fn mode_json(mode: ScanMode) -> Value {
    match mode {
        ScanMode::Exhaustive => json!("exhaustive"),
        ScanMode::Sampled { draws, seed } => json!({"sampled": {"draws": draws, "seed": seed}}),
    }
}

fn result_json(r: &AxiomResult, names: &PointNames<'_>) -> Value {
    json!({
        "axiom": r.axiom.name(),
        "status": r.status().as_str(),
        "mode": mode_json(r.mode),
        "tuples_examined": r.tuples_examined,
        "qualifying": r.qualifying,
        "violation_count": r.violation_count,
        "witness": r.first_violation().map(|v| violation_json(v, names)),
        "violations": r.violations.iter().map(|v| violation_json(v, names)).collect::<Vec<_>>(),
    })
}

pub fn check_json(relation: &str, sample_size: usize, report: &AxiomReport, names: &PointNames<'_>) -> Value {
    json!({
        "relation": relation,
        "sample_size": sample_size,
        "passed": report.passed(),
        "results": report.results.iter().map(|r| result_json(r, names)).collect::<Vec<_>>(),
    })
}

fn violation_text(out: &mut String, v: &AxiomViolation, names: &PointNames<'_>) {
    const LETTERS: [&str; 4] = ["A", "B", "C", "D"];
    let parts: Vec<String> = v
        .witness
        .iter()
        .zip(&v.points)
        .enumerate()
        .map(|(slot, (raf, &i))| format!("{} = {} {raf}", LETTERS[slot], names.get(i)))
        .collect();
    let _ = write!(out, "    witness: {}", parts.join(", "));
    if let Some(k) = v.k {
        let _ = write!(out, "; k = {k}");
    }
    let observed: Vec<String> = v
        .observed
        .iter()
        .map(|o| format!("{} {} {}", LETTERS[o.first], o.outcome.symbol(), LETTERS[o.second]))
        .collect();
    let _ = writeln!(out, "; observed {}", observed.join(", "));
}

pub fn check_text(relation: &str, sample_desc: &str, report: &AxiomReport, names: &PointNames<'_>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "relation {relation} on {sample_desc}");
    for r in &report.results {
        let mode = match r.mode {
            ScanMode::Exhaustive => "exhaustive".to_string(),
            ScanMode::Sampled { draws, seed } => format!("sampled: {draws} draws, seed {seed}"),
        };
        let _ = writeln!(
            out,
            "{:<20} {:<13} {} tuples examined, {} qualifying, {} violations ({mode})",
            r.axiom.name(),
            r.status().as_str(),
            r.tuples_examined,
            r.qualifying,
            r.violation_count,
        );
        for v in &r.violations {
            violation_text(&mut out, v, names);
        }
    }
    let _ = writeln!(out, "{}", if report.passed() { "all checks passed" } else { "violations found" });
    out
}

pub fn verify_json(report: &CharacterizationReport, workers: usize, elapsed_ms: Option<u128>) -> Value {
    let mut v = json!({
        "grid": report.grid,
        "points": report.points,
        "axioms": report.axioms.iter().map(|a| a.name()).collect::<Vec<_>>(),
        "prune": report.pruned,
        "enumerated": report.enumerated as u64,
        "examined": report.examined,
        "pruned": report.pruned_candidates as u64,
        "axiom_counts": report.axiom_counts.iter()
            .map(|(a, c)| (a.name().to_string(), json!(c)))
            .collect::<serde_json::Map<_, _>>(),
        "survivor_count": report.survivor_count,
        "survivors": report.survivors.iter().map(|s| json!({
            "index": s.index as u64,
            "ranks": s.relation.ranks(),
            "chain": s.relation.chain(),
            "equals_lex": s.equals_lex,
        })).collect::<Vec<_>>(),
        "lex_unique": report.lex_unique(),
        "workers": workers,
    });
    if let Some(ms) = elapsed_ms {
        v["elapsed_ms"] = json!(ms as u64);
    }
    v
}

pub fn verify_text(report: &CharacterizationReport, workers: usize, elapsed_ms: Option<u128>) -> String {
    let mut out = String::new();
    let axioms: Vec<&str> = report.axioms.iter().map(|a| a.name()).collect();
    let _ = writeln!(
        out,
        "grid {} ({} points), axioms {}, pruning {}, {} worker(s)",
        report.grid,
        report.points,
        axioms.join(", "),
        if report.pruned { "on" } else { "off" },
        workers,
    );
    let plural = if report.survivor_count == 1 { "survivor" } else { "survivors" };
    let verdict = if report.lex_unique() {
        " = lex".to_string()
    } else if report.survivors.iter().any(|s| s.equals_lex) {
        " (lex among them)".to_string()
    } else {
        String::new()
    };
    let _ = writeln!(
        out,
        "{} enumerated, {} {plural}{verdict}",
        report.enumerated, report.survivor_count
    );
    let _ = writeln!(
        out,
        "  examined {}, pruned {}",
        report.examined, report.pruned_candidates
    );
    for (axiom, count) in &report.axiom_counts {
        let _ = writeln!(out, "  {:<20} {count}", axiom.name());
    }
    if report.survivor_count as usize > report.survivors.len() {
        let _ = writeln!(out, "first {} survivors:", report.survivors.len());
    }
    for s in &report.survivors {
        let tag = if s.equals_lex { "  [lex]" } else { "" };
        let _ = writeln!(out, "  #{} {}{tag}", s.index, s.relation.chain());
    }
    if let Some(ms) = elapsed_ms {
        let _ = writeln!(out, "elapsed {ms} ms");
    }
    out
}
