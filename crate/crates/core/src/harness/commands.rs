//! The CLI commands, each producing a [`Report`].

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::corpus::{family, FunctionFamily, CUBIC, QUADRATIC};
use crate::error::Error;
use crate::identity::{check_identity, EvalParams};
use crate::kernels::{audit, KernelName, KernelParams};
use crate::quad::{integrate, integrate_endpoint_power, SingularEnd};
use crate::specfun::{beta, beta_value, gamma_value, hyp2f1_value, inc_beta_value};
use crate::theorems::{
    check_inequality_tol, compare, park_lambda, reduction_check, BoundId, ReductionKind,
};

use super::config::{
    audit_lambda, SweepConfig, AUDIT_ALPHA, AUDIT_P, AUDIT_S, BOUND_Q, DEFAULT_IDENTITY_TOL, IDENTITY_ALPHA,
    IDENTITY_LAMBDA, IDENTITY_X_FRACTION,
};
use super::report::{fmt_num, write_report, ComparisonEntry, FailureRecord, IdentityRecord, Record, Report, SpecialRecord};
use super::sampling::{soundness_points, CERTIFIED_FAMILIES, SWEEP_UPPER};
use super::{HarnessError, EXIT_USAGE};

/// Equality tolerance for the claimed reductions.
pub const REDUCTION_TOL: f64 = 1e-10;

/// Equality tolerance for the q = 1 Simpson/Sarikaya tie.
pub const SIMPSON_TIE_TOL: f64 = 1e-12;

/// Agreement required between ₂F₁ and its Euler integral.
pub const HYP2F1_ORACLE_TOL: f64 = 1e-9;

fn failure(id: impl Into<String>, label: impl Into<String>, err: &Error) -> Record {
    Record::Failure(FailureRecord {
        id: id.into(),
        function_label: label.into(),
        detail: err.to_string(),
    })
}

fn describe(p: &EvalParams) -> String {
    format!(
        "a={} b={} x={} lambda={} alpha={} s={} q={}",
        p.a, p.b, p.x, p.lambda, p.alpha, p.s, p.q
    )
}

fn families_for(cfg: &SweepConfig, domain: (f64, f64), s: f64, q: f64) -> Vec<FunctionFamily> {
    cfg.families
        .iter()
        .filter_map(|l| family(l, domain, s, q))
        .collect()
}

/// Every (kernel, parameters) pair of the audit grid.
pub fn audit_grid(cfg: &SweepConfig) -> Vec<(KernelName, KernelParams)> {
    let alphas = cfg.alpha_or(&AUDIT_ALPHA);
    let lambdas = cfg.lambda_or(&audit_lambda());
    let ss = cfg.s_or(&AUDIT_S);
    let ps = cfg.p_or(&AUDIT_P);
    let mut out = Vec::new();
    for &alpha in &alphas {
        for &lambda in &lambdas {
            let base = KernelParams::new(alpha, lambda);
            out.push((KernelName::C1, base));
            for &s in &ss {
                out.push((KernelName::C2, base.with_s(s)));
                out.push((KernelName::C3, base.with_s(s)));
            }
            for &p in &ps {
                out.push((KernelName::C4, base.with_p(p)));
            }
        }
    }
    for &lambda in &lambdas {
        let base = KernelParams::new(1.0, lambda);
        out.push((KernelName::H1, base));
        for &s in &ss {
            for name in [KernelName::H2, KernelName::H3, KernelName::H3Flipped] {
                out.push((name, base.with_s(s)));
            }
        }
    }
    for &p in &ps {
        out.push((KernelName::C4SimpsonUnnormalized, KernelParams::new(1.0, 1.0 / 3.0).with_p(p)));
    }
    out.push((KernelName::C3SimpsonTabulated, KernelParams::new(1.0, 1.0 / 3.0).with_s(1.0)));
    out
}

fn audit_records(points: &[(KernelName, KernelParams)], tol: f64) -> Vec<Record> {
    points
        .par_iter()
        .map(|(name, params)| match audit(*name, params, tol) {
            Ok(a) => Record::Kernel(a),
            Err(e) => failure(name.as_str(), "", &e),
        })
        .collect()
}

/// Closed forms against oracles over the audit grid.
pub fn audit_kernels(cfg: &SweepConfig) -> Report {
    Report::new("audit-kernels", cfg.echo(), audit_records(&audit_grid(cfg), cfg.audit_tolerance))
}

/// C1–C4 (and H1–H3 at α = 1) at the configured points.
pub fn kernel_constants(cfg: &SweepConfig) -> Report {
    let mut points = Vec::new();
    for &alpha in &cfg.alpha_or(&[1.0]) {
        for &lambda in &cfg.lambda_or(&[1.0 / 3.0]) {
            let base = KernelParams::new(alpha, lambda);
            points.push((KernelName::C1, base));
            for &s in &cfg.s_or(&[1.0]) {
                points.push((KernelName::C2, base.with_s(s)));
                points.push((KernelName::C3, base.with_s(s)));
                if alpha == 1.0 {
                    points.push((KernelName::H2, base.with_s(s)));
                    points.push((KernelName::H3, base.with_s(s)));
                }
            }
            for &p in &cfg.p_or(&[2.0]) {
                points.push((KernelName::C4, base.with_p(p)));
            }
            if alpha == 1.0 {
                points.push((KernelName::H1, base));
            }
        }
    }
    Report::new("constants", cfg.echo(), audit_records(&points, cfg.audit_tolerance))
}

/// The identity on every configured family over the (x, λ, α) grid.
pub fn verify_identity(cfg: &SweepConfig) -> Report {
    let (a, b) = cfg.interval;
    let fams = families_for(cfg, cfg.interval, 0.5, 2.0);
    let mut jobs = Vec::new();
    for fam in &fams {
        for &frac in &cfg.x_fraction_or(&IDENTITY_X_FRACTION) {
            for &lambda in &cfg.lambda_or(&IDENTITY_LAMBDA) {
                for &alpha in &cfg.alpha_or(&IDENTITY_ALPHA) {
                    let x = if frac == 1.0 { b } else { a + frac * (b - a) };
                    jobs.push((fam, EvalParams { a, b, x, lambda, alpha, s: 1.0, q: 1.0 }));
                }
            }
        }
    }
    let records = jobs
        .par_iter()
        .map(|(fam, params)| match check_identity(&fam.triple, params, DEFAULT_IDENTITY_TOL) {
            Ok(check) => Record::Identity(IdentityRecord {
                family: fam.label.clone(),
                params: *params,
                check,
            }),
            Err(e) => failure("identity", fam.label.clone(), &e),
        })
        .collect();
    Report::new("verify-identity", cfg.echo(), records)
}

fn inapplicable(e: &Error) -> bool {
    matches!(e, Error::Precondition(_) | Error::MissingData(_))
}

/// Seeded soundness sweep of `bounds` over the certified families.
pub fn verify_bounds(cfg: &SweepConfig, bounds: &[BoundId]) -> Report {
    let fams: Vec<&'static str> = CERTIFIED_FAMILIES
        .iter()
        .copied()
        .filter(|f| cfg.families.iter().any(|c| c == f))
        .collect();
    let points = if fams.is_empty() {
        Vec::new()
    } else {
        soundness_points(cfg.seed, cfg.samples, &fams)
    };
    let records: Vec<Record> = points
        .par_iter()
        .flat_map_iter(|pt| {
            let fam = family(pt.family, (0.0, SWEEP_UPPER), pt.params.s, pt.params.q).expect("certified label");
            bounds
                .iter()
                .filter(|id| !(id.is_holder() && pt.params.q == 1.0))
                .filter_map(|&id| match check_inequality_tol(&fam, &pt.params, id, cfg.tolerance) {
                    Ok(r) => Some(Record::Verification(r)),
                    Err(e) if inapplicable(&e) => None,
                    Err(e) => Some(Record::Failure(FailureRecord {
                        id: id.as_str().into(),
                        function_label: pt.family.into(),
                        detail: format!("{e} at {}", describe(&pt.params)),
                    })),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Report::new("verify-bounds", cfg.echo(), records)
}

/// Values of two bounds at x = midpoint over the configured grids.
pub fn compare_bounds(cfg: &SweepConfig, a: BoundId, b: BoundId) -> Report {
    let (lo, hi) = cfg.interval;
    let mut records = Vec::new();
    for &q in &cfg.q_or(&BOUND_Q) {
        if (a.is_holder() || b.is_holder()) && q == 1.0 {
            continue;
        }
        for &s in &cfg.s_or(&[1.0]) {
            for fam in families_for(cfg, cfg.interval, s, q) {
                if fam.is_identity_only() {
                    continue;
                }
                for &alpha in &cfg.alpha_or(&[1.0]) {
                    for &lambda in &cfg.lambda_or(&[1.0 / 3.0]) {
                        let params = EvalParams {
                            a: lo,
                            b: hi,
                            x: 0.5 * (lo + hi),
                            lambda,
                            alpha,
                            s,
                            q,
                        };
                        records.push(match compare(&fam, &params, a, b) {
                            Ok(record) => Record::Comparison(ComparisonEntry {
                                kind: "compare".into(),
                                record,
                                equal_within: None,
                            }),
                            Err(e) => failure(format!("{a}~{b}"), fam.label.clone(), &e),
                        });
                    }
                }
            }
        }
    }
    Report::new("compare", cfg.echo(), records)
}

fn unit_point(lambda: f64, s: f64, q: f64) -> EvalParams {
    EvalParams {
        a: 0.0,
        b: 1.0,
        x: 0.5,
        lambda,
        alpha: 1.0,
        s,
        q,
    }
}

/// The three claimed reductions on their default grids.
pub fn reduce(cfg: &SweepConfig, kinds: &[ReductionKind]) -> Report {
    let mut records = Vec::new();
    let mut push = |kind: ReductionKind, fam: &FunctionFamily, pts: &[EvalParams], tol: &dyn Fn(&EvalParams, &str) -> Option<f64>| {
        match reduction_check(kind, fam, pts) {
            Ok(recs) => records.extend(recs.into_iter().map(|record| {
                let equal_within = tol(&record.params, &record.bound_a);
                Record::Comparison(ComparisonEntry {
                    kind: kind.as_str().into(),
                    record,
                    equal_within,
                })
            })),
            Err(e) => records.push(failure(kind.as_str(), fam.label.clone(), &e)),
        }
    };
    for &kind in kinds {
        match kind {
            ReductionKind::CToXiQi => {
                let mut pts = Vec::new();
                for &lambda in &cfg.lambda_or(&[0.0, 0.25, 0.5, 0.75, 1.0]) {
                    for &s in &cfg.s_or(&[0.5, 1.0]) {
                        for &q in &cfg.q_or(&[1.0, 2.0]) {
                            pts.push(unit_point(lambda, s, q));
                        }
                    }
                }
                let fam = family(CUBIC, (0.0, 1.0), 1.0, 1.0).expect("builtin");
                push(kind, &fam, &pts, &|_, _| Some(REDUCTION_TOL));
            }
            ReductionKind::SimpsonToSarikaya => {
                let pts: Vec<_> = cfg.q_or(&BOUND_Q).iter().map(|&q| unit_point(1.0 / 3.0, 1.0, q)).collect();
                for label in [QUADRATIC, CUBIC] {
                    let fam = family(label, (0.0, 1.0), 1.0, 1.0).expect("builtin");
                    let constant = label == QUADRATIC;
                    push(kind, &fam, &pts, &|p, bound_a| {
                        (constant && p.q == 1.0 && bound_a == BoundId::PowerMeanSimpson.as_str()).then_some(SIMPSON_TIE_TOL)
                    });
                }
            }
            ReductionKind::HolderToPark => {
                let mut pts = Vec::new();
                for r in [2.5, 3.0, 4.0, 8.0] {
                    for p in cfg.p_or(&[1.5, 2.0, 3.0]) {
                        pts.push(unit_point(park_lambda(r), 1.0, p / (p - 1.0)));
                    }
                }
                let fam = family(QUADRATIC, (0.0, 1.0), 1.0, 1.0).expect("builtin");
                push(kind, &fam, &pts, &|_, _| Some(REDUCTION_TOL));
            }
        }
    }
    Report::new("reduce", cfg.echo(), records)
}

/// `(1/β(b,c−b)) ∫₀¹ t^(b−1)(1−t)^(c−b−1)(1−zt)^(−a) dt`, with b = 1.
fn euler_integral_b1(a: f64, c: f64, z: f64) -> crate::Result<f64> {
    let v = integrate_endpoint_power(|t| (1.0 - z * t).powf(-a), 0.0, 1.0, c - 2.0, SingularEnd::Upper, 1e-13)?;
    Ok(v.value / beta(1.0, c - 1.0)?)
}

/// Special-function values at reference points, each with an
/// independent check where one exists.
pub fn specfun_table(cfg: &SweepConfig) -> Report {
    let mut records = Vec::new();
    let mut add = |function: &str, args: String, value: crate::Result<crate::specfun::SpecialValue>, reference: Option<f64>, tolerance: f64| {
        records.push(match value {
            Ok(v) => Record::Special(SpecialRecord {
                function: function.into(),
                args,
                value: v.value,
                abs_error_bound: v.abs_error_bound,
                reference,
                tolerance,
            }),
            Err(e) => failure(function, args, &e),
        })
    };
    let sqrt_pi = std::f64::consts::PI.sqrt();
    for (x, r) in [(0.5, Some(sqrt_pi)), (1.0, Some(1.0)), (1.5, Some(0.5 * sqrt_pi)), (2.5, Some(0.75 * sqrt_pi)), (5.0, Some(24.0)), (10.0, Some(362_880.0))] {
        add("gamma", format!("x={x}"), gamma_value(x), r, 1e-13 * r.unwrap_or(1.0));
    }
    for (x, y, r) in [(1.0, 1.0, 1.0), (2.0, 2.0, 1.0 / 6.0), (0.5, 0.5, std::f64::consts::PI), (3.0, 2.0, 1.0 / 12.0)] {
        add("beta", format!("x={x} y={y}"), beta_value(x, y), Some(r), 1e-13);
    }
    for (a0, x, y) in [(0.5, 1.0, 1.0), (2.0 / 3.0, 2.0, 2.0), (2.0 / 3.0, 3.0, 2.0), (0.3, 0.5, 2.5), (0.9, 4.0, 1.5)] {
        let oracle = integrate(|t: f64| t.powf(x - 1.0) * (1.0 - t).powf(y - 1.0), 0.0, a0, 1e-14)
            .ok()
            .map(|r| r.value);
        let oracle = if x < 1.0 {
            integrate_endpoint_power(|t: f64| (1.0 - t).powf(y - 1.0), 0.0, a0, x - 1.0, SingularEnd::Lower, 1e-14)
                .ok()
                .map(|r| r.value)
        } else {
            oracle
        };
        add("inc_beta", format!("a0={} x={x} y={y}", fmt_num(a0)), inc_beta_value(a0, x, y), oracle, 1e-12);
    }
    for a in [-0.5, -1.5, -3.0] {
        for c in [2.5, 4.0] {
            for z in [-0.9, -0.5, 0.0, 0.3, 0.9] {
                add(
                    "hyp2f1",
                    format!("a={a} b=1 c={c} z={z}"),
                    hyp2f1_value(a, 1.0, c, z),
                    euler_integral_b1(a, c, z).ok(),
                    HYP2F1_ORACLE_TOL,
                );
            }
        }
    }
    Report::new("specfun-table", cfg.echo(), records)
}

#[derive(Debug, Parser)]
#[command(name = "fracineq", version, about = "Fractional Hermite–Hadamard/Simpson inequality laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Default)]
struct Common {
    /// Flat `key = value` configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Report path (default: $FRACINEQ_OUT_DIR/<command>.<format>).
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// json or csv.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Margin tolerance for inequality checks.
    #[arg(long)]
    tolerance: Option<String>,
    /// Closed-form/oracle tolerance for kernel audits.
    #[arg(long)]
    audit_tolerance: Option<String>,
    /// `a,b`
    #[arg(long)]
    interval: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long = "s")]
    s: Option<String>,
    #[arg(long = "q")]
    q: Option<String>,
    #[arg(long = "p")]
    p: Option<String>,
    #[arg(long)]
    x_fraction: Option<String>,
    /// Function family label; repeat or separate with commas.
    #[arg(long = "family")]
    families: Vec<String>,
    /// Suppress the summary on stdout.
    #[arg(long)]
    quiet: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print kernel constants with their oracle values.
    Constants(Common),
    /// Audit every closed-form kernel against its defining integral.
    AuditKernels(Common),
    /// Check the integral identity over a grid.
    VerifyIdentity {
        /// Use the built-in (x, λ, α) grid regardless of overrides.
        #[arg(long)]
        default_grid: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Seeded soundness sweep of the bounds.
    VerifyBounds {
        /// Bound identifier; repeat for several (default: power-mean and holder).
        #[arg(long = "bound")]
        bounds: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare two bounds over the configured grid.
    Compare {
        #[arg(long, default_value = "power-mean-simpson")]
        bound_a: String,
        #[arg(long, default_value = "sarikaya")]
        bound_b: String,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the claimed reductions to earlier bounds.
    Reduce {
        /// c-to-xi-qi, simpson-to-sarikaya or holder-to-park; repeat for several (default: all).
        #[arg(long = "kind")]
        kinds: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate the special functions against reference values.
    SpecfunTable(Common),
}

fn build_config(common: &Common) -> Result<SweepConfig, HarnessError> {
    let mut cfg = match &common.config {
        Some(path) => SweepConfig::from_file(path)?,
        None => SweepConfig::default(),
    };
    let overrides: [(&str, &Option<String>); 10] = [
        ("format", &common.format),
        ("tolerance", &common.tolerance),
        ("audit_tolerance", &common.audit_tolerance),
        ("interval", &common.interval),
        ("alpha", &common.alpha),
        ("lambda", &common.lambda),
        ("s", &common.s),
        ("q", &common.q),
        ("p", &common.p),
        ("x_fraction", &common.x_fraction),
    ];
    for (key, value) in overrides {
        if let Some(v) = value {
            cfg.set(key, v)?;
        }
    }
    if let Some(seed) = common.seed {
        cfg.seed = seed;
    }
    if let Some(n) = common.samples {
        cfg.samples = n;
    }
    if let Some(out) = &common.output {
        cfg.output = Some(out.clone());
    }
    if !common.families.is_empty() {
        cfg.set("families", &common.families.join(","))?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn parse_all<T: std::str::FromStr<Err = Error>>(names: &[String]) -> Result<Vec<T>, HarnessError> {
    names
        .iter()
        .flat_map(|n| n.split(','))
        .map(|n| n.trim().parse::<T>().map_err(|e| HarnessError::Usage(e.to_string())))
        .collect()
}

fn print_constants(report: &Report) {
    println!("{:<24} {:>6} {:>8} {:>6} {:>6} {:>24} {:>24} {:>10}", "kernel", "alpha", "lambda", "s", "p", "closed_form", "oracle", "abs_diff");
    for r in &report.records {
        if let Record::Kernel(k) = r {
            let opt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x}"));
            println!(
                "{:<24} {:>6} {:>8.6} {:>6} {:>6} {:>24.17} {:>24.17} {:>10.2e}",
                k.kernel_name.as_str(),
                k.params.alpha,
                k.params.lambda,
                opt(k.params.s),
                opt(k.params.p),
                k.closed_form,
                k.oracle,
                k.abs_diff
            );
        }
    }
}

fn execute(cli: Cli) -> Result<i32, HarnessError> {
    let (report, common) = match &cli.command {
        Command::Constants(c) => (kernel_constants(&build_config(c)?), c),
        Command::AuditKernels(c) => (audit_kernels(&build_config(c)?), c),
        Command::VerifyIdentity { default_grid, common } => {
            let mut cfg = build_config(common)?;
            if *default_grid {
                cfg.alpha = None;
                cfg.lambda = None;
                cfg.x_fraction = None;
            }
            (verify_identity(&cfg), common)
        }
        Command::VerifyBounds { bounds, common } => {
            let cfg = build_config(common)?;
            let ids = if bounds.is_empty() {
                vec![BoundId::PowerMean, BoundId::Holder]
            } else {
                parse_all::<BoundId>(bounds)?
            };
            (verify_bounds(&cfg, &ids), common)
        }
        Command::Compare { bound_a, bound_b, common } => {
            let cfg = build_config(common)?;
            let a = bound_a.parse::<BoundId>().map_err(|e| HarnessError::Usage(e.to_string()))?;
            let b = bound_b.parse::<BoundId>().map_err(|e| HarnessError::Usage(e.to_string()))?;
            (compare_bounds(&cfg, a, b), common)
        }
        Command::Reduce { kinds, common } => {
            let cfg = build_config(common)?;
            let kinds = if kinds.is_empty() {
                ReductionKind::ALL.to_vec()
            } else {
                parse_all::<ReductionKind>(kinds)?
            };
            (reduce(&cfg, &kinds), common)
        }
        Command::SpecfunTable(c) => (specfun_table(&build_config(c)?), c),
    };
    let cfg = build_config(common)?;
    let path = cfg.output_path(&report.command);
    write_report(&report, cfg.format, &path)?;
    if !common.quiet {
        if report.command == "constants" {
            print_constants(&report);
        }
        let s = &report.summary;
        println!(
            "{}: total={} holds={} violated={} indeterminate={} passed={} failed={} flagged={} (undocumented {}) errors={} -> {}",
            report.command,
            s.total,
            s.holds,
            s.violated,
            s.indeterminate,
            s.passed,
            s.failed,
            s.flagged,
            s.undocumented_flags,
            s.errors,
            path.display()
        );
        for f in report.flags.iter().filter(|f| !f.documented) {
            println!("undocumented flag: {} at {:?}", f.kernel, f.params);
        }
    }
    Ok(report.exit_code())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e @ (HarnessError::Usage(_) | HarnessError::Io(_))) => {
            eprintln!("fracineq: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("fracineq: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::POWER_MATCH;
    use crate::theorems::Status;

    #[test]
    fn statuses_in_small_sweep() {
        let cfg = SweepConfig {
            samples: 60,
            ..SweepConfig::default()
        };
        let r = verify_bounds(&cfg, &[BoundId::PowerMean, BoundId::Holder]);
        assert!(r.summary.total >= 60);
        assert_eq!(r.summary.violated, 0);
        assert_eq!(r.summary.errors, 0);
        assert!(r.records.iter().all(|x| matches!(x, Record::Verification(v) if v.status == Status::Holds)));
    }

    #[test]
    fn usage_errors_exit_3() {
        assert_eq!(run(["fracineq", "no-such-command"]), EXIT_USAGE);
        assert_eq!(run(["fracineq", "verify-bounds", "--bound", "nope", "--quiet"]), EXIT_USAGE);
        assert_eq!(run(["fracineq", "audit-kernels", "--lambda", "2", "--quiet"]), EXIT_USAGE);
    }

    #[test]
    fn default_audit_grid_size() {
        let g = audit_grid(&SweepConfig::default());
        // C1 44, C2/C3/C4 176 each, H1 11, H2/H3/H3-flipped 44 each, 4 + 1 alternatives
        assert_eq!(g.len(), 44 + 3 * 176 + 11 + 3 * 44 + 5);
    }

    #[test]
    fn power_match_label_is_certified_family() {
        assert!(CERTIFIED_FAMILIES.contains(&POWER_MATCH));
    }
}
