use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use r2reduce::catalog::find_rule;
use r2reduce::reducer::{format_number, select_rules, sweep, VerificationRecord, VerifySettings};
use serde_json::json;

use crate::{Exit, Format};

#[derive(Args)]
pub struct VerifyArgs {
    /// Comma-separated rule ids or aliases, or "all" for every trusted rule.
    #[arg(long, default_value = "all")]
    rules: String,

    /// Random instances per rule.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,

    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Relative agreement required between the two sides.
    #[arg(long)]
    rel: Option<f64>,
    /// Absolute agreement that also counts as a pass.
    #[arg(long)]
    abs: Option<f64>,

    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Worker threads; 0 means one per core.
    #[arg(long, env = "R2REDUCE_JOBS", default_value_t = 0)]
    jobs: usize,

    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

struct Summary {
    cases: usize,
    passed: usize,
    oracle_failures: usize,
}

impl Summary {
    fn of(records: &[VerificationRecord]) -> Self {
        Summary {
            cases: records.len(),
            passed: records.iter().filter(|r| r.pass).count(),
            oracle_failures: records.iter().filter(|r| r.oracle_failed()).count(),
        }
    }

    fn failed(&self) -> usize {
        self.cases - self.passed
    }
}

pub fn run(args: &VerifyArgs) -> Result<u8, Exit> {
    let rules = select_rules(&args.rules)?;
    let mut settings = VerifySettings::default();
    if let Some(rel) = args.rel {
        if !(rel > 0.0 && rel.is_finite()) {
            return Err(Exit::usage(format!("--rel {rel} must be positive")));
        }
        settings.compare.rel = rel;
    }
    if let Some(abs) = args.abs {
        if !(abs >= 0.0 && abs.is_finite()) {
            return Err(Exit::usage(format!("--abs {abs} must be nonnegative")));
        }
        settings.compare.abs = abs;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Exit::io(format!("thread pool: {e}")))?;
    let records = pool.install(|| sweep(&rules, args.samples as usize, args.seed, &settings));
    let summary = Summary::of(&records);
    let ids: Vec<&str> = rules.iter().map(|r| r.id).collect();

    let report = match args.format {
        Format::Json => render_json(args, &ids, &settings, &summary, &records),
        Format::Csv => render_csv(&records),
        Format::Human => render_human(args, &settings, &summary, &records),
    };
    match &args.output {
        Some(path) => std::fs::write(path, report)
            .map_err(|e| Exit::io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{report}"),
    }
    eprintln!(
        "verify: {} cases, {} passed, {} failed, {} oracle non-convergence (seed {})",
        summary.cases,
        summary.passed,
        summary.failed(),
        summary.oracle_failures,
        args.seed
    );
    Ok(if summary.oracle_failures > 0 {
        3
    } else if summary.failed() > 0 {
        1
    } else {
        0
    })
}

fn render_json(
    args: &VerifyArgs,
    ids: &[&str],
    settings: &VerifySettings,
    summary: &Summary,
    records: &[VerificationRecord],
) -> String {
    let v = json!({
        "seed": args.seed,
        "samples": args.samples,
        "rules": ids,
        "settings": settings,
        "summary": {
            "cases": summary.cases,
            "passed": summary.passed,
            "failed": summary.failed(),
            "oracle_failures": summary.oracle_failures,
        },
        "records": records,
    });
    format!("{}\n", serde_json::to_string_pretty(&v).expect("records serialize"))
}

fn render_csv(records: &[VerificationRecord]) -> String {
    let mut s = format!("{}\n", VerificationRecord::CSV_HEADER);
    for r in records {
        s.push_str(&r.csv_row());
        s.push('\n');
    }
    s
}

fn render_human(args: &VerifyArgs, settings: &VerifySettings, summary: &Summary, records: &[VerificationRecord]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "verify rules={} samples={} seed={} rel={} abs={}",
        args.rules,
        args.samples,
        args.seed,
        format_number(settings.compare.rel),
        format_number(settings.compare.abs)
    );
    let mut current = "";
    for (i, r) in records.iter().enumerate() {
        if r.rule_id != current {
            current = &r.rule_id;
            let rule = find_rule(current).expect("records come from the registry");
            let _ = writeln!(s, "\n{} ({}, {}): {}", rule.id, rule.alias, rule.status.as_str(), rule.note);
        }
        let p = &r.params;
        let _ = write!(
            s,
            "{} #{:<3} ({},{},{}) mu={} sigma={}",
            if r.pass { "PASS" } else { "FAIL" },
            i % args.samples as usize,
            p.n,
            p.m,
            p.nu,
            format_number(r.f.mu),
            format_number(r.f.sigma)
        );
        if let (Some(l), Some(h)) = (r.lhs, r.rhs) {
            let _ = write!(
                s,
                " oracle={} reduced={}",
                format_number(l.value.re),
                format_number(h.value.re)
            );
        }
        if let Some(d) = r.rel_diff {
            let _ = write!(s, " rel_diff={}", format_number(d));
        }
        if !r.pass {
            if let Some(ratio) = r.ratio() {
                let _ = write!(s, " ratio={}", format_number(ratio.re));
            }
            if let Some(reason) = &r.reason {
                let _ = write!(s, " [{reason}]");
            }
        }
        s.push('\n');
    }
    let _ = writeln!(
        s,
        "\n{} cases, {} passed, {} failed, {} oracle non-convergence",
        summary.cases,
        summary.passed,
        summary.failed(),
        summary.oracle_failures
    );
    s
}
