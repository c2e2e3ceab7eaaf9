//! Report assembly and JSON/CSV serialisation.
//!
//! Numbers are written with 17 significant digits. Records are sorted into
//! a canonical order, so output does not depend on evaluation order.

use std::cmp::Ordering;
use std::path::Path;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::identity::{EvalParams, IdentityCheck};
use crate::kernels::{KernelAudit, KernelName, KernelParams};
use crate::theorems::{ComparisonRecord, Status, VerificationRecord};

use super::config::Format;
use super::HarnessError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const CSV_COLUMNS: [&str; 15] = [
    "record_type",
    "id",
    "function_label",
    "a",
    "b",
    "x",
    "lambda",
    "alpha",
    "s",
    "q",
    "p",
    "lhs",
    "rhs",
    "margin",
    "status",
];

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRecord {
    pub family: String,
    pub params: EvalParams,
    pub check: IdentityCheck,
}

/// One special-function evaluation, optionally with an independent value.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialRecord {
    pub function: String,
    pub args: String,
    pub value: f64,
    pub abs_error_bound: f64,
    pub reference: Option<f64>,
    pub tolerance: f64,
}

impl SpecialRecord {
    pub fn passed(&self) -> bool {
        self.reference.is_none_or(|r| (self.value - r).abs() <= self.tolerance)
    }
}

/// A comparison, optionally expected to be an equality within `tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonEntry {
    pub kind: String,
    pub record: ComparisonRecord,
    pub equal_within: Option<f64>,
}

impl ComparisonEntry {
    pub fn passed(&self) -> bool {
        self.equal_within.is_none_or(|t| self.record.difference() <= t)
    }
}

/// A point where evaluation itself failed.
#[derive(Debug, Clone, PartialEq)]
pub struct FailureRecord {
    pub id: String,
    pub function_label: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Record {
    Verification(VerificationRecord),
    Kernel(KernelAudit),
    Comparison(ComparisonEntry),
    Identity(IdentityRecord),
    Special(SpecialRecord),
    Failure(FailureRecord),
}

/// A closed form that disagrees with its defining integral.
#[derive(Debug, Clone, PartialEq)]
pub struct Flag {
    pub kernel: KernelName,
    pub params: KernelParams,
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_diff: f64,
    pub documented: bool,
    pub finding: &'static str,
}

pub fn finding(kernel: KernelName) -> &'static str {
    match kernel {
        KernelName::C3SimpsonTabulated => "tabulated C3(1,1/3,1) = 27/972 but the defining integral gives 37/972",
        KernelName::H3Flipped => "H3 first branch with leading pair 2λβ(2,s+1) − β(3,s+1) disagrees with its defining integral",
        KernelName::C4SimpsonUnnormalized => "C4(1,1/3,p) without the 1/(p+1) factor disagrees with the general C4",
        _ => "closed form disagrees with its defining integral",
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub violated: usize,
    pub indeterminate: usize,
    pub passed: usize,
    pub failed: usize,
    pub flagged: usize,
    pub undocumented_flags: usize,
    pub errors: usize,
}

impl Summary {
    pub fn tally(records: &[Record]) -> Summary {
        let mut s = Summary {
            total: records.len(),
            ..Summary::default()
        };
        for r in records {
            match r {
                Record::Verification(v) => match v.status {
                    Status::Holds => s.holds += 1,
                    Status::Violated => s.violated += 1,
                    Status::Indeterminate => s.indeterminate += 1,
                },
                Record::Kernel(k) => {
                    if k.flagged {
                        s.flagged += 1;
                        if !k.kernel_name.is_known_discrepancy() {
                            s.undocumented_flags += 1;
                        }
                    } else {
                        s.passed += 1;
                    }
                }
                Record::Comparison(c) => bump(&mut s, c.passed()),
                Record::Identity(i) => bump(&mut s, i.check.passed),
                Record::Special(sp) => bump(&mut s, sp.passed()),
                Record::Failure(_) => s.errors += 1,
            }
        }
        s
    }

    /// 0 all clear; 1 a violation, failed check or undocumented flag;
    /// 2 indeterminate records or evaluation failures.
    pub fn exit_code(&self) -> i32 {
        if self.violated > 0 || self.failed > 0 || self.undocumented_flags > 0 {
            1
        } else if self.indeterminate > 0 || self.errors > 0 {
            2
        } else {
            0
        }
    }
}

fn bump(s: &mut Summary, ok: bool) {
    if ok {
        s.passed += 1;
    } else {
        s.failed += 1;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub version: String,
    pub command: String,
    pub config: Vec<(&'static str, String)>,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub flags: Vec<Flag>,
}

impl Report {
    /// Sorts `records` canonically and derives the summary and flag list.
    pub fn new(command: &str, config: Vec<(&'static str, String)>, mut records: Vec<Record>) -> Report {
        records.sort_by(compare_records);
        let flags = records
            .iter()
            .filter_map(|r| match r {
                Record::Kernel(k) if k.flagged => Some(Flag {
                    kernel: k.kernel_name,
                    params: k.params,
                    closed_form: k.closed_form,
                    oracle: k.oracle,
                    abs_diff: k.abs_diff,
                    documented: k.kernel_name.is_known_discrepancy(),
                    finding: finding(k.kernel_name),
                }),
                _ => None,
            })
            .collect();
        Report {
            version: VERSION.to_string(),
            command: command.to_string(),
            config,
            summary: Summary::tally(&records),
            records,
            flags,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code()
    }
}

/// 17 significant digits.
pub fn fmt_num(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt_num(v: Option<f64>) -> String {
    v.map(fmt_num).unwrap_or_default()
}

fn type_rank(r: &Record) -> u8 {
    match r {
        Record::Verification(_) => 0,
        Record::Kernel(_) => 1,
        Record::Comparison(_) => 2,
        Record::Identity(_) => 3,
        Record::Special(_) => 4,
        Record::Failure(_) => 5,
    }
}

pub fn record_type(r: &Record) -> &'static str {
    match r {
        Record::Verification(_) => "verification",
        Record::Kernel(_) => "kernel",
        Record::Comparison(_) => "comparison",
        Record::Identity(_) => "identity",
        Record::Special(_) => "special",
        Record::Failure(_) => "failure",
    }
}

fn eval_cells(p: &EvalParams) -> [Option<f64>; 8] {
    [
        Some(p.a),
        Some(p.b),
        Some(p.x),
        Some(p.lambda),
        Some(p.alpha),
        Some(p.s),
        Some(p.q),
        p.p(),
    ]
}

/// The id, label, parameter cells and value cells of a record.
struct Row {
    id: String,
    label: String,
    params: [Option<f64>; 8],
    lhs: Option<f64>,
    rhs: Option<f64>,
    margin: Option<f64>,
    status: String,
}

fn row(r: &Record) -> Row {
    match r {
        Record::Verification(v) => Row {
            id: v.which.to_string(),
            label: v.function_label.clone(),
            params: eval_cells(&v.params),
            lhs: Some(v.lhs),
            rhs: Some(v.rhs),
            margin: Some(v.margin),
            status: v.status.to_string(),
        },
        Record::Kernel(k) => Row {
            id: k.kernel_name.to_string(),
            label: String::new(),
            params: [None, None, None, Some(k.params.lambda), Some(k.params.alpha), k.params.s, None, k.params.p],
            lhs: Some(k.closed_form),
            rhs: Some(k.oracle),
            margin: Some(k.abs_diff),
            status: if k.flagged { "flagged" } else { "pass" }.to_string(),
        },
        Record::Comparison(c) => Row {
            id: format!("{}:{}~{}", c.kind, c.record.bound_a, c.record.bound_b),
            label: String::new(),
            params: eval_cells(&c.record.params),
            lhs: Some(c.record.values.0),
            rhs: Some(c.record.values.1),
            margin: Some(c.record.difference()),
            status: if c.passed() {
                c.record.tighter.as_str().to_string()
            } else {
                "mismatch".to_string()
            },
        },
        Record::Identity(i) => Row {
            id: "identity".to_string(),
            label: i.family.clone(),
            params: eval_cells(&i.params),
            lhs: Some(i.check.lhs),
            rhs: Some(i.check.rhs),
            margin: Some(i.check.residual),
            status: if i.check.passed { "pass" } else { "fail" }.to_string(),
        },
        Record::Special(s) => Row {
            id: s.function.clone(),
            label: s.args.clone(),
            params: [None; 8],
            lhs: Some(s.value),
            rhs: s.reference,
            margin: s.reference.map(|r| (s.value - r).abs()),
            status: if s.passed() { "pass" } else { "fail" }.to_string(),
        },
        Record::Failure(f) => Row {
            id: f.id.clone(),
            label: f.function_label.clone(),
            params: [None; 8],
            lhs: None,
            rhs: None,
            margin: None,
            status: "error".to_string(),
        },
    }
}

fn cmp_opt(a: &Option<f64>, b: &Option<f64>) -> Ordering {
    match (a, b) {
        (Some(x), Some(y)) => x.total_cmp(y),
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
    }
}

/// Type, id, label, then parameters, then values.
pub fn compare_records(a: &Record, b: &Record) -> Ordering {
    let (ra, rb) = (row(a), row(b));
    type_rank(a)
        .cmp(&type_rank(b))
        .then_with(|| ra.id.cmp(&rb.id))
        .then_with(|| ra.label.cmp(&rb.label))
        .then_with(|| {
            ra.params
                .iter()
                .zip(rb.params.iter())
                .map(|(x, y)| cmp_opt(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
        .then_with(|| cmp_opt(&ra.lhs, &rb.lhs))
        .then_with(|| cmp_opt(&ra.rhs, &rb.rhs))
        .then_with(|| ra.status.cmp(&rb.status))
}

pub fn render_csv(report: &Report) -> Result<String, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| HarnessError::Io(e.to_string());
    w.write_record(CSV_COLUMNS).map_err(io)?;
    for r in &report.records {
        let row = row(r);
        let mut cells = vec![record_type(r).to_string(), row.id, row.label];
        cells.extend(row.params.iter().map(|v| opt_num(*v)));
        cells.push(opt_num(row.lhs));
        cells.push(opt_num(row.rhs));
        cells.push(opt_num(row.margin));
        cells.push(row.status);
        w.write_record(&cells).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| HarnessError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| HarnessError::Io(e.to_string()))
}

fn num(v: f64) -> Value {
    if v.is_finite() {
        Value::Number(Number::from_str(&fmt_num(v)).expect("formatted float is valid JSON"))
    } else {
        Value::Null
    }
}

fn opt_value(v: Option<f64>) -> Value {
    v.map_or(Value::Null, num)
}

fn record_json(r: &Record) -> Value {
    let row = row(r);
    let mut m = Map::new();
    m.insert("record_type".into(), Value::from(record_type(r)));
    m.insert("id".into(), Value::from(row.id));
    m.insert("function_label".into(), Value::from(row.label));
    for (k, v) in CSV_COLUMNS[3..11].iter().zip(row.params.iter()) {
        m.insert((*k).into(), opt_value(*v));
    }
    m.insert("lhs".into(), opt_value(row.lhs));
    m.insert("rhs".into(), opt_value(row.rhs));
    m.insert("margin".into(), opt_value(row.margin));
    m.insert("status".into(), Value::from(row.status));
    match r {
        Record::Verification(v) => {
            m.insert("tolerance".into(), num(v.tolerance));
            m.insert("quad_error".into(), num(v.quad_error));
        }
        Record::Kernel(k) => {
            m.insert("oracle_error".into(), num(k.oracle_error));
        }
        Record::Comparison(c) => {
            m.insert("tighter".into(), Value::from(c.record.tighter.as_str()));
            m.insert("equal_within".into(), opt_value(c.equal_within));
        }
        Record::Identity(i) => {
            m.insert("threshold".into(), num(i.check.threshold));
        }
        Record::Special(s) => {
            m.insert("abs_error_bound".into(), num(s.abs_error_bound));
        }
        Record::Failure(f) => {
            m.insert("detail".into(), Value::from(f.detail.clone()));
        }
    }
    Value::Object(m)
}

pub fn render_json(report: &Report) -> Result<String, HarnessError> {
    let s = &report.summary;
    let mut summary = Map::new();
    for (k, v) in [
        ("total", s.total),
        ("holds", s.holds),
        ("violated", s.violated),
        ("indeterminate", s.indeterminate),
        ("passed", s.passed),
        ("failed", s.failed),
        ("flagged", s.flagged),
        ("undocumented_flags", s.undocumented_flags),
        ("errors", s.errors),
    ] {
        summary.insert(k.into(), Value::from(v));
    }
    let config: Map<String, Value> = report
        .config
        .iter()
        .map(|(k, v)| ((*k).to_string(), Value::from(v.clone())))
        .collect();
    let flags: Vec<Value> = report
        .flags
        .iter()
        .map(|f| {
            let mut m = Map::new();
            m.insert("kernel".into(), Value::from(f.kernel.as_str()));
            m.insert("alpha".into(), num(f.params.alpha));
            m.insert("lambda".into(), num(f.params.lambda));
            m.insert("s".into(), opt_value(f.params.s));
            m.insert("p".into(), opt_value(f.params.p));
            m.insert("closed_form".into(), num(f.closed_form));
            m.insert("oracle".into(), num(f.oracle));
            m.insert("abs_diff".into(), num(f.abs_diff));
            m.insert("documented".into(), Value::from(f.documented));
            m.insert("finding".into(), Value::from(f.finding));
            Value::Object(m)
        })
        .collect();
    let mut root = Map::new();
    root.insert("version".into(), Value::from(report.version.clone()));
    root.insert("command".into(), Value::from(report.command.clone()));
    root.insert("config".into(), Value::Object(config));
    root.insert("records".into(), Value::Array(report.records.iter().map(record_json).collect()));
    root.insert("summary".into(), Value::Object(summary));
    root.insert("flags".into(), Value::Array(flags));
    let mut text = serde_json::to_string_pretty(&Value::Object(root)).map_err(|e| HarnessError::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn render(report: &Report, format: Format) -> Result<String, HarnessError> {
    match format {
        Format::Json => render_json(report),
        Format::Csv => render_csv(report),
    }
}

/// Writes the report, creating parent directories as needed.
pub fn write_report(report: &Report, format: Format, path: &Path) -> Result<(), HarnessError> {
    let text = render(report, format)?;
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| HarnessError::Io(format!("{}: {e}", dir.display())))?;
    }
    std::fs::write(path, text).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::BoundId;

    fn verification(status: Status, margin: f64) -> Record {
        Record::Verification(VerificationRecord {
            which: BoundId::PowerMean,
            params: EvalParams::new(0.0, 1.0, 0.5, 0.5, 1.0, 1.0, 2.0).unwrap(),
            function_label: "cubic".into(),
            lhs: 0.1,
            rhs: 0.1 + margin,
            margin,
            status,
            tolerance: 1e-8,
            quad_error: 1e-14,
        })
    }

    #[test]
    fn empty_report_is_valid() {
        let r = Report::new("verify-bounds", vec![], vec![]);
        assert_eq!(r.summary, Summary::default());
        assert_eq!(r.exit_code(), 0);
        let json: Value = serde_json::from_str(&render_json(&r).unwrap()).unwrap();
        assert_eq!(json["summary"]["total"], 0);
        assert_eq!(json["records"].as_array().unwrap().len(), 0);
        let csv = render_csv(&r).unwrap();
        assert_eq!(csv.lines().count(), 1);
        assert!(csv.starts_with("record_type,id,function_label,a,b,x,lambda,alpha,s,q,p,lhs,rhs,margin,status"));
    }

    #[test]
    fn one_holds_record() {
        let r = Report::new("x", vec![], vec![verification(Status::Holds, 0.2)]);
        assert_eq!(r.summary.holds, 1);
        assert_eq!(r.summary.total, 1);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn exit_codes_follow_severity() {
        let ind = Report::new("x", vec![], vec![verification(Status::Holds, 0.1), verification(Status::Indeterminate, -1.0)]);
        assert_eq!(ind.exit_code(), 2);
        let vio = Report::new("x", vec![], vec![verification(Status::Indeterminate, -1.0), verification(Status::Violated, -2.0)]);
        assert_eq!(vio.exit_code(), 1);
    }

    #[test]
    fn numbers_have_seventeen_digits() {
        assert_eq!(fmt_num(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_num(8.0 / 81.0), format!("{:.16e}", 8.0 / 81.0));
        let r = Report::new("x", vec![], vec![verification(Status::Holds, 0.2)]);
        let json = render_json(&r).unwrap();
        assert!(json.contains("1.0000000000000001e-1"), "{json}");
    }
}
