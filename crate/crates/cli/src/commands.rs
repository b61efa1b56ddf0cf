use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use lexraf_core::axioms::{check_axioms, AxiomId};
use lexraf_core::characterization::construct_proof_witness;
use lexraf_core::relations::{
    mep_utility, Lexicographic, MaxExpectedPayoff, WeightVector, WeightedLogProduct,
};
use lexraf_core::{
    CheckConfig, ComparisonOutcome, GridSpec, PreferenceRelation, PriorityContext, Raf, Rational,
    Search, VerifyOptions,
};

use crate::document::{InputDocument, Resolved};
use crate::render::{self, PointNames};
use crate::{CheckArgs, CliError, Format, NormalizeArgs, RankArgs, RelationName, VerifyArgs};

fn io(e: std::io::Error) -> CliError {
    CliError::Input(format!("write failed: {e}"))
}

fn relation_label(name: RelationName) -> &'static str {
    match name {
        RelationName::Lex => "lex",
        RelationName::Mep => "mep",
        RelationName::Wlog => "wlog",
    }
}

fn build_relation(
    name: RelationName,
    ctx: &PriorityContext,
    weights: Option<WeightVector>,
) -> Result<Box<dyn PreferenceRelation>, CliError> {
    Ok(match name {
        RelationName::Lex => Box::new(Lexicographic::new()),
        RelationName::Mep => {
            if ctx.payoffs().is_none() {
                return Err(CliError::Input("payoffs: required by relation mep".into()));
            }
            Box::new(MaxExpectedPayoff)
        }
        RelationName::Wlog => {
            let w = weights
                .ok_or_else(|| CliError::Input("weights: required by relation wlog".into()))?;
            Box::new(WeightedLogProduct::new(w))
        }
    })
}

fn parse_list<T, E: std::fmt::Display>(
    field: &str,
    text: &str,
    parse: impl Fn(&str) -> Result<T, E>,
) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|s| parse(s.trim()).map_err(|e| CliError::Input(format!("{field}: {e}"))))
        .collect()
}

fn parse_rationals(field: &str, text: &str) -> Result<Vec<Rational>, CliError> {
    parse_list(field, text, str::parse::<Rational>)
}

fn parse_axioms(text: &str) -> Result<Vec<AxiomId>, CliError> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(AxiomId::ALL.to_vec());
    }
    let mut axioms = parse_list("axioms", text, str::parse::<AxiomId>)?;
    let mut seen = Vec::new();
    axioms.retain(|a| {
        let fresh = !seen.contains(a);
        seen.push(*a);
        fresh
    });
    Ok(axioms)
}

/// Groups `items` into indifference classes, best first. Ties keep input order.
fn rank_groups(
    rel: &dyn PreferenceRelation,
    items: &[(String, Raf)],
) -> Result<Vec<Vec<usize>>, CliError> {
    let n = items.len();
    let mut table = vec![vec![ComparisonOutcome::Indifferent; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                table[i][j] = rel.compare(&items[i].1, &items[j].1)?;
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| match table[i][j] {
        ComparisonOutcome::FirstPreferred => std::cmp::Ordering::Less,
        ComparisonOutcome::SecondPreferred => std::cmp::Ordering::Greater,
        ComparisonOutcome::Indifferent => std::cmp::Ordering::Equal,
    });
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match groups.last_mut() {
            Some(g) if table[g[0]][i] == ComparisonOutcome::Indifferent => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    Ok(groups)
}

pub fn rank(args: &RankArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let resolved = InputDocument::load(&args.input)?.resolve()?;
    if resolved.rafs.is_empty() {
        return Err(CliError::Input("rafs: the document has no RAFs".into()));
    }
    let rel = build_relation(args.relation, &resolved.ctx, resolved.weights.clone())?;
    let groups = rank_groups(rel.as_ref(), &resolved.rafs)?;
    let names: Vec<Vec<&str>> = groups
        .iter()
        .map(|g| g.iter().map(|&i| resolved.rafs[i].0.as_str()).collect())
        .collect();
    match args.format {
        Format::Text => {
            let line: Vec<String> = names.iter().map(|g| g.join(" ∼ ")).collect();
            writeln!(out, "{}", line.join(" ≻ ")).map_err(io)?;
        }
        Format::Json => {
            let doc = serde_json::json!({
                "relation": relation_label(args.relation),
                "ranking": names,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json")).map_err(io)?;
        }
    }
    Ok(0)
}

/// Default grid pay-offs: 40, 10, 5/2, ... in priority order.
fn default_payoffs(arity: usize) -> Vec<Rational> {
    let mut p = Rational::integer(40);
    let quarter = Rational::from_ratio(1, 4).expect("nonzero denominator");
    (0..arity)
        .map(|_| {
            let current = p.clone();
            p = &p * &quarter;
            current
        })
        .collect()
}

struct Sample {
    rafs: Vec<Raf>,
    names: Option<Vec<String>>,
    description: String,
    ctx: Arc<PriorityContext>,
    weights: Option<WeightVector>,
}

fn grid_sample(args: &CheckArgs, levels: &str) -> Result<Sample, CliError> {
    let arity = args
        .arity
        .ok_or_else(|| CliError::Input("arity: required with --grid".into()))?;
    let spec = GridSpec::new(parse_rationals("grid", levels)?, arity)
        .map_err(|e| CliError::Input(format!("grid: {e}")))?;
    let payoffs = match &args.payoffs {
        Some(text) => parse_rationals("payoffs", text)?,
        None => default_payoffs(arity),
    };
    let labels: Vec<String> = (1..=arity).map(|i| format!("x{i}")).collect();
    let ctx = PriorityContext::with_payoffs(labels, payoffs)
        .map_err(|e| CliError::Input(format!("payoffs: {e}")))?;
    let weights = match &args.weights {
        Some(text) => {
            let w = parse_list("weights", text, str::parse::<u32>)?;
            WeightVector::new(w).map_err(|e| CliError::Input(format!("weights: {e}")))?
        }
        None => WeightVector::uniform(arity),
    };
    if weights.as_slice().len() != arity {
        return Err(CliError::Input(format!(
            "weights: expected {arity} values, found {}",
            weights.as_slice().len()
        )));
    }
    Ok(Sample {
        rafs: spec.points(&ctx)?,
        names: None,
        description: format!("grid {}", spec.describe()),
        ctx,
        weights: Some(weights),
    })
}

fn document_sample(resolved: Resolved, path: &std::path::Path) -> Sample {
    Sample {
        rafs: resolved.points(),
        names: Some(resolved.rafs.iter().map(|(n, _)| n.clone()).collect()),
        description: format!("{} ({} RAFs)", path.display(), resolved.rafs.len()),
        ctx: resolved.ctx,
        weights: resolved.weights,
    }
}

pub fn check(args: &CheckArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let sample = match (&args.input, &args.grid) {
        (Some(path), None) => document_sample(InputDocument::load(path)?.resolve()?, path),
        (None, Some(levels)) => grid_sample(args, levels)?,
        _ => return Err(CliError::Input("sample: give a document or --grid".into())),
    };
    let axioms = parse_axioms(&args.axioms)?;
    let rel = build_relation(args.relation, &sample.ctx, sample.weights.clone())?;
    let cfg = CheckConfig {
        exhaustive_cap: args.exhaustive_cap,
        draws: args.samples,
        seed: args.seed,
        all_violations: args.all_violations,
    };
    let report = check_axioms(rel.as_ref(), &sample.rafs, &axioms, &cfg)?;
    let names = PointNames(sample.names.as_deref());
    let label = relation_label(args.relation);
    match args.format {
        Format::Text => {
            write!(out, "{}", render::check_text(label, &sample.description, &report, &names))
                .map_err(io)?
        }
        Format::Json => {
            let doc = render::check_json(label, sample.rafs.len(), &report, &names);
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json")).map_err(io)?
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let spec = GridSpec::new(parse_rationals("levels", &args.levels)?, args.arity)
        .map_err(|e| CliError::Input(format!("levels: {e}")))?;
    let axioms = parse_axioms(&args.axioms)?;
    let opts = VerifyOptions {
        prune: args.prune,
        max_points: args.max_points,
    };
    let search = Search::new(&spec, &axioms, &opts)?;
    let workers = args.workers.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    let started = Instant::now();
    let tally = crate::parallel::run_search(&search, workers);
    let elapsed = (!args.no_timing).then(|| started.elapsed().as_millis());
    let report = search.report(tally);
    match args.format {
        Format::Text => write!(out, "{}", render::verify_text(&report, workers, elapsed)).map_err(io)?,
        Format::Json => {
            let doc = render::verify_json(&report, workers, elapsed);
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json")).map_err(io)?
        }
    }
    Ok(if report.lex_unique() { 0 } else { 1 })
}

pub fn demo(out: &mut dyn Write) -> Result<u8, CliError> {
    let r = |p, q| Rational::from_ratio(p, q).expect("nonzero denominator");
    let ctx = PriorityContext::with_payoffs(["$40", "$10"], vec![r(40, 1), r(10, 1)])?;
    let a = Raf::new(vec![r(1, 5), r(4, 5)], &ctx)?;
    let b = Raf::new(vec![r(1, 10), r(9, 10)], &ctx)?;
    let c = construct_proof_witness(&a, &b)?;
    let verdict = |o: ComparisonOutcome| format!("A {} B", o.symbol());
    let mep = MaxExpectedPayoff.compare(&a, &b)?;
    let lex = Lexicographic::new().compare(&a, &b)?;
    let mep_line = match mep {
        ComparisonOutcome::SecondPreferred => "B ≻ A".to_string(),
        other => verdict(other),
    };

    let mut text = String::new();
    use std::fmt::Write as _;
    let _ = writeln!(text, "X = {{$40, $10}}, priority $40 first");
    let _ = writeln!(text, "π($40) = 40, π($10) = 10");
    let _ = writeln!(text, "A = {a}");
    let _ = writeln!(text, "B = {b}");
    let _ = writeln!(text);
    let _ = writeln!(text, "maximum expected pay-off, u(R) = max π(x)R(x):");
    let _ = writeln!(text, "  u(A) = {}", mep_utility(&a)?);
    let _ = writeln!(text, "  u(B) = {}", mep_utility(&b)?);
    let _ = writeln!(text, "  mep: {mep_line}");
    let _ = writeln!(text);
    let _ = writeln!(text, "lexicographic, $40 first:");
    let _ = writeln!(text, "  lex: {}", verdict(lex));
    let _ = writeln!(text, "  witness C = {c}: B on $40, A on $10");
    let _ = writeln!(text);
    let _ = writeln!(
        text,
        "note: regret over what stays available after a choice is left as prose; nothing above models it."
    );
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(0)
}

pub fn normalize(args: &NormalizeArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let doc = InputDocument::load(&args.input)?;
    doc.resolve()?;
    writeln!(out, "{}", doc.to_json()).map_err(io)?;
    Ok(0)
}
