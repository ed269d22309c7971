use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use perfcode::bitstrings::{
    count_weight_level, enumerate_family, BitWord, CubeFamily, LevelFilter,
};
use perfcode::engine::{
    find_perfect_code, is_perfect_code, search_constrained, CodeSet, SearchConfig,
};
use perfcode::graph::InducedGraph;
use perfcode::hamming::{construct_gen_lucas_code, RunBound};
use perfcode::verify::{render_table, run_claims, ClaimParams, SearchSettings, Verdict};
use serde_json::{json, Value};

use crate::args::{
    Cli, Command, ConstructArgs, EnumerateArgs, ExportArgs, GraphFormat, ReportFormat, SearchArgs,
    VerifyArgs,
};
use crate::highlight::parse_code_file;
use crate::{DataError, EXIT_BUDGET, EXIT_FAILED};

pub fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Enumerate(a) => enumerate(a),
        Command::Search(a) => search(a, &command_line(cli)),
        Command::Verify(a) => verify(a, &command_line(cli)),
        Command::Export(a) => export(a),
        Command::Construct(a) => construct(a),
    }
}

/// Echoed into JSON reports so each one records how it was produced.
fn command_line(cli: &Cli) -> String {
    cli.canonical_args().join(" ")
}

fn emit(output: Option<&Path>, content: &str) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(content.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn family_size(family: CubeFamily, n: u32) -> Result<u64> {
    match family {
        // closed forms, no enumeration needed
        CubeFamily::Hypercube | CubeFamily::Fibonacci | CubeFamily::Lucas => (0..=n)
            .map(|k| count_weight_level(family, n, k, LevelFilter::All))
            .sum::<perfcode::Result<u64>>()
            .map_err(Into::into),
        _ => Ok(enumerate_family(family, n)?.len() as u64),
    }
}

fn enumerate(a: &EnumerateArgs) -> Result<u8> {
    let (family, n) = (a.graph.family, a.graph.n);
    family.validate()?;
    if a.count {
        println!("{}", family_size(family, n)?);
        return Ok(0);
    }
    let words = enumerate_family(family, n)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for w in &words {
        writeln!(out, "{w}")?;
    }
    out.flush()?;
    Ok(0)
}

fn search(a: &SearchArgs, command: &str) -> Result<u8> {
    let graph = InducedGraph::build(a.graph.family, a.graph.n)?;
    let config = SearchConfig::new(a.mode.into())
        .with_budget(a.budget.budget())
        .with_seed(a.seed)
        .with_threads(a.budget.threads);
    let outcome = match a.avoid_circular_run {
        Some(s) => search_constrained(&graph, |w| w.has_circular_ones_run(s), &config),
        None => find_perfect_code(&graph, &config),
    };
    let mut record = serde_json::to_value(outcome.to_record(&graph))?;
    let extra = json!({
        "family": a.graph.family,
        "n": a.graph.n,
        "mode": config.mode,
        "avoid_circular_run": a.avoid_circular_run,
        "command": command,
    });
    if let (Value::Object(r), Value::Object(e)) = (&mut record, extra) {
        r.extend(e);
    }
    println!("{}", serde_json::to_string(&record)?);
    Ok(outcome.exit_code() as u8)
}

fn verify(a: &VerifyArgs, command: &str) -> Result<u8> {
    let params = ClaimParams {
        n_max: a.n_max,
        p: (!a.p.is_empty()).then(|| a.p.clone()),
        n: (!a.n.is_empty()).then(|| a.n.clone()),
        search: SearchSettings {
            budget: a.budget.budget(),
            threads: a.budget.threads,
        },
    };
    let reports = run_claims(&a.claim.claims(), &params)?;
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
    let skipped = reports.iter().any(|r| r.verdict == Verdict::Skipped);
    let text = match a.format {
        ReportFormat::Text => render_table(&reports),
        ReportFormat::Json => {
            let all = json!({
                "all_passed": !failed && !skipped,
                "command": command,
                "reports": reports,
            });
            serde_json::to_string_pretty(&all)? + "\n"
        }
    };
    emit(a.output.as_deref(), &text)?;
    Ok(if failed {
        EXIT_FAILED
    } else if skipped {
        EXIT_BUDGET
    } else {
        0
    })
}

fn load_highlight(graph: &InducedGraph, path: &Path) -> Result<CodeSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let words =
        parse_code_file(&text).map_err(|e| DataError(format!("{}: {e}", path.display())))?;
    for w in &words {
        if graph.id_of(w).is_none() {
            return Err(DataError(format!(
                "word {w} is not a vertex of {} at n = {}",
                graph.family(),
                graph.n()
            ))
            .into());
        }
    }
    Ok(CodeSet::from_words(graph, &words)?)
}

fn export(a: &ExportArgs) -> Result<u8> {
    let graph = InducedGraph::build(a.graph.family, a.graph.n)?;
    let code = match &a.highlight_code {
        Some(path) => {
            let code = load_highlight(&graph, path)?;
            let perfect = is_perfect_code(&graph, &code)?;
            eprintln!(
                "highlighting {} words; perfect code: {}",
                code.len(),
                if perfect { "yes" } else { "no" }
            );
            Some(code)
        }
        None => None,
    };
    let highlight = code.as_ref().map(CodeSet::members);
    let mut text = match a.format {
        GraphFormat::Dot => graph.to_dot(highlight)?,
        GraphFormat::Json => graph.to_json(highlight)?,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    emit(a.output.as_deref(), &text)?;
    Ok(0)
}

fn construct(a: &ConstructArgs) -> Result<u8> {
    let bound: RunBound = a.run.into();
    let built = construct_gen_lucas_code(a.p, bound)?;
    let (graph, code) = (&built.graph, &built.code);
    let perfect = is_perfect_code(graph, code)?;
    let words: Vec<BitWord> = code.words(graph);
    let text = match a.format {
        ReportFormat::Json => {
            let record = json!({
                "p": a.p,
                "run": bound.label(),
                "family": graph.family(),
                "n": graph.n(),
                "size": words.len(),
                "perfect": perfect,
                "witness": words,
            });
            serde_json::to_string(&record)? + "\n"
        }
        ReportFormat::Text => {
            let mut t = format!(
                "# {} n={} size={} perfect={perfect}\n",
                graph.family(),
                graph.n(),
                words.len()
            );
            for w in &words {
                t.push_str(&format!("{w}\n"));
            }
            t
        }
    };
    emit(a.output.as_deref(), &text)?;
    Ok(if perfect { 0 } else { EXIT_FAILED })
}
