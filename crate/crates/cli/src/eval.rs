use clap::Args;
use num_complex::Complex64;
use r2reduce::applications::{
    cheshire_overlap, fourier_pair_erfi, fourier_pair_tau, hydrogenic_pair, hydrogenic_pair_equal,
    yukawa_pair, yukawa_pair_equal, yukawa_pair_oracle, yukawa_pair_reduced, FourierSpec, YukawaPairSpec,
};
use r2reduce::catalog::{find_rule, reduce_to_1d, Params, TestIntegrand, TriplePattern};
use r2reduce::quadrature::{QuadResult, Tolerance};
use r2reduce::reducer::{direct_2d, format_number};
use serde_json::json;

use crate::{Exit, Format};

/// Named applications accepted in place of a rule id.
pub const APPLICATIONS: [&str; 9] = [
    "yukawa-pair",
    "yukawa-pair-equal",
    "yukawa-pair-reduced",
    "yukawa-pair-oracle",
    "hydrogenic-pair",
    "hydrogenic-pair-equal",
    "fourier-pair-erfi",
    "fourier-pair-tau",
    "cheshire-overlap",
];

#[derive(Args)]
pub struct EvalArgs {
    /// Rule id or alias (see `list`), or an application name.
    target: String,

    /// Exponent triple; defaults to the rule's own when it fixes one.
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i32>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i32>,
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<i32>,

    #[arg(long, default_value_t = 0.0)]
    a: f64,
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    #[arg(long, default_value_t = 0.0)]
    c: f64,
    /// Real part of h.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    h: f64,
    /// Imaginary part of h.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    h_im: f64,
    #[arg(long, default_value_t = 0.0)]
    j: f64,
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    #[arg(long, default_value_t = 0.0)]
    q: f64,

    /// f(t) = coeff·t^mu·e^(−sigma·t).
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    f_coeff: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    f_mu: f64,
    #[arg(long, default_value_t = 0.0)]
    f_sigma: f64,

    /// Evaluate the 2D oracle instead of the reduced integral.
    #[arg(long)]
    oracle: bool,

    #[arg(long)]
    eta1: Option<f64>,
    #[arg(long)]
    eta2: Option<f64>,
    #[arg(long)]
    x2: Option<f64>,
    /// Wave number; the Fermi wave number for cheshire-overlap.
    #[arg(long)]
    k: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    k_dot_x2: f64,

    #[arg(long, default_value_t = 1e-10)]
    rel: f64,
    #[arg(long, default_value_t = 1e-14)]
    abs: f64,
    #[arg(long, default_value_t = 2_000_000)]
    max_evaluations: u64,

    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

struct Evaluation {
    target: String,
    method: &'static str,
    result: QuadResult,
}

fn need(v: Option<f64>, name: &str, target: &str) -> Result<f64, Exit> {
    v.ok_or_else(|| Exit::usage(format!("{target} needs --{name}")))
}

fn exact(value: f64) -> QuadResult {
    QuadResult {
        value: Complex64::new(value, 0.0),
        abs_error_estimate: 0.0,
        evaluations: 0,
        converged: true,
    }
}

fn application(args: &EvalArgs, tol: &Tolerance) -> Result<Evaluation, Exit> {
    let name = args.target.as_str();
    let eta1 = || need(args.eta1, "eta1", name);
    let eta2 = || need(args.eta2, "eta2", name);
    let x2 = || need(args.x2, "x2", name);
    let k = || need(args.k, "k", name);
    let pair = || -> Result<YukawaPairSpec, Exit> { Ok(YukawaPairSpec::new(eta1()?, eta2()?, x2()?)?) };
    let fourier = || -> Result<FourierSpec, Exit> {
        Ok(FourierSpec::new(k()?, args.k_dot_x2, eta1()?, eta2()?, x2()?)?)
    };
    let (method, result) = match name {
        "yukawa-pair" => ("closed-form", exact(yukawa_pair(&pair()?)?)),
        "yukawa-pair-equal" => ("closed-form", exact(yukawa_pair_equal(eta1()?, x2()?)?)),
        "yukawa-pair-reduced" => ("reduced", yukawa_pair_reduced(&pair()?, tol)?),
        "yukawa-pair-oracle" => ("oracle", yukawa_pair_oracle(&pair()?, tol)?),
        "hydrogenic-pair" => ("closed-form", exact(hydrogenic_pair(&pair()?)?)),
        "hydrogenic-pair-equal" => ("closed-form", exact(hydrogenic_pair_equal(eta1()?, x2()?)?)),
        "fourier-pair-erfi" => ("reduced", fourier_pair_erfi(&fourier()?, tol)?),
        "fourier-pair-tau" => ("tau-form", fourier_pair_tau(&fourier()?, tol)?),
        "cheshire-overlap" => ("tau-form", cheshire_overlap(k()?, args.k_dot_x2, x2()?, tol)?),
        _ => unreachable!("caller checked the application name"),
    };
    Ok(Evaluation {
        target: name.to_string(),
        method,
        result,
    })
}

fn rule_eval(args: &EvalArgs, tol: &Tolerance) -> Result<Evaluation, Exit> {
    let rule = find_rule(&args.target)?;
    let (n, m, nu) = match rule.pattern {
        TriplePattern::Fixed { triple } => (
            args.n.unwrap_or(triple.n),
            args.m.unwrap_or(triple.m),
            args.nu.unwrap_or(triple.nu),
        ),
        TriplePattern::NuFamily { n0, m0 } => {
            let nu = args.nu.unwrap_or(0);
            (args.n.unwrap_or(n0 - nu), args.m.unwrap_or(m0 - nu), nu)
        }
        TriplePattern::General => match (args.n, args.m, args.nu) {
            (Some(n), Some(m), Some(nu)) => (n, m, nu),
            _ => return Err(Exit::usage(format!("{} needs --n, --m and --nu", rule.id))),
        },
    };
    let params = Params {
        n,
        m,
        nu,
        a: args.a,
        b: args.b,
        c: args.c,
        h: Complex64::new(args.h, args.h_im),
        j: args.j,
        p: args.p,
        q: args.q,
        tilde: rule.tilde,
    };
    let f = TestIntegrand {
        coeff: args.f_coeff,
        mu: args.f_mu,
        sigma: args.f_sigma,
    };
    let (method, result) = if args.oracle {
        rule.check_applicable(&params)?;
        ("oracle", direct_2d(&params, &f, tol)?)
    } else {
        ("reduced", reduce_to_1d(rule, &params, &f, tol)?)
    };
    Ok(Evaluation {
        target: rule.id.to_string(),
        method,
        result,
    })
}

pub fn run(args: &EvalArgs) -> Result<u8, Exit> {
    let tol = Tolerance::new(args.rel, args.abs, args.max_evaluations)?;
    let ev = if APPLICATIONS.contains(&args.target.as_str()) {
        application(args, &tol)?
    } else {
        rule_eval(args, &tol)?
    };
    print!("{}", render(&ev, args.format));
    if ev.result.converged {
        Ok(0)
    } else {
        eprintln!("warning: quadrature did not reach the requested tolerance");
        Ok(3)
    }
}

pub const CSV_HEADER: &str = "target,method,value_re,value_im,abs_error_estimate,evaluations,converged";

fn render(ev: &Evaluation, format: Format) -> String {
    let r = &ev.result;
    match format {
        Format::Json => {
            let v = json!({
                "target": ev.target,
                "method": ev.method,
                "value_re": r.value.re,
                "value_im": r.value.im,
                "abs_error_estimate": r.abs_error_estimate,
                "evaluations": r.evaluations,
                "converged": r.converged,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("plain values"))
        }
        Format::Csv => format!(
            "{CSV_HEADER}\n{},{},{},{},{},{},{}\n",
            ev.target,
            ev.method,
            format_number(r.value.re),
            format_number(r.value.im),
            format_number(r.abs_error_estimate),
            r.evaluations,
            r.converged
        ),
        Format::Human => {
            let mut s = format!("target             {} ({})\n", ev.target, ev.method);
            s.push_str(&format!("value              {}\n", format_number(r.value.re)));
            if r.value.im != 0.0 {
                s.push_str(&format!("value_im           {}\n", format_number(r.value.im)));
            }
            s.push_str(&format!("abs_error_estimate {}\n", format_number(r.abs_error_estimate)));
            s.push_str(&format!("evaluations        {}\n", r.evaluations));
            s.push_str(&format!("converged          {}\n", r.converged));
            s
        }
    }
}
