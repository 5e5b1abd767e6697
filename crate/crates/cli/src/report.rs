//! JSON and CSV encodings of degree vectors and claim results.
//!
//! Both formats carry the same fields; rationals are written as decimal
//! strings for numerator and denominator plus a 12-place approximation.

use latdeg::claims::{ClaimResult, Skipped, Value, Witness};
use latdeg::Rational;
use serde::Serialize;

pub const APPROX_PLACES: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalOut {
    pub num: String,
    pub den: String,
    pub approx: String,
}

impl From<&Rational> for RationalOut {
    fn from(r: &Rational) -> Self {
        RationalOut {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
            approx: r.approx(APPROX_PLACES),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreesRecord {
    pub group: String,
    pub order: usize,
    pub lattice_size: usize,
    pub class_count: usize,
    pub d: RationalOut,
    pub sd: RationalOut,
    pub ssd: RationalOut,
    pub ssd_n: Vec<RationalOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ValueOut {
    Rational(RationalOut),
    Bool(bool),
}

impl From<&Value> for ValueOut {
    fn from(v: &Value) -> Self {
        match v {
            Value::Rational(r) => ValueOut::Rational(r.into()),
            Value::Integer(n) => ValueOut::Rational((&Rational::from_integer(*n)).into()),
            Value::Bool(b) => ValueOut::Bool(*b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub claim_id: String,
    pub group: String,
    pub instance: String,
    pub part: String,
    pub reading: String,
    pub applicable: bool,
    pub holds: bool,
    pub skipped: bool,
    pub lhs: Option<ValueOut>,
    pub rhs: Option<ValueOut>,
    pub strict_observed: Option<bool>,
    pub witnesses: Vec<String>,
    pub note: Option<String>,
}

fn witness(w: &Witness) -> String {
    match w {
        Witness::Subgroup(m) => format!("subgroup:0x{}", m.to_hex()),
        Witness::Element(e) => format!("element:{e}"),
    }
}

impl From<&ClaimResult> for ResultRecord {
    fn from(r: &ClaimResult) -> Self {
        ResultRecord {
            claim_id: r.claim_id.to_string(),
            group: r.group_label.clone(),
            instance: r.instance.clone(),
            part: r.part.to_string(),
            reading: r.reading.to_string(),
            applicable: r.applicable,
            holds: r.holds,
            skipped: false,
            lhs: r.lhs.as_ref().map(Into::into),
            rhs: r.rhs.as_ref().map(Into::into),
            strict_observed: r.strict_observed,
            witnesses: r.witnesses.iter().map(witness).collect(),
            note: r.note.clone(),
        }
    }
}

impl From<&Skipped> for ResultRecord {
    fn from(s: &Skipped) -> Self {
        ResultRecord {
            claim_id: s.claim_id.to_string(),
            group: s.group_label.clone(),
            instance: String::new(),
            part: String::new(),
            reading: latdeg::claims::STATEMENT.to_string(),
            applicable: false,
            holds: false,
            skipped: true,
            lhs: None,
            rhs: None,
            strict_observed: None,
            witnesses: Vec::new(),
            note: Some(s.reason.clone()),
        }
    }
}

pub fn to_json<T: Serialize>(records: &[T]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("report records serialize");
    s.push('\n');
    s
}

fn rational_cells(prefix: &str, header: &mut Vec<String>) {
    for f in ["num", "den", "approx"] {
        header.push(format!("{prefix}_{f}"));
    }
}

fn push_rational(row: &mut Vec<String>, r: &RationalOut) {
    row.extend([r.num.clone(), r.den.clone(), r.approx.clone()]);
}

fn push_value(row: &mut Vec<String>, v: &Option<ValueOut>) {
    match v {
        Some(ValueOut::Rational(r)) => push_rational(row, r),
        Some(ValueOut::Bool(b)) => row.extend([b.to_string(), String::new(), String::new()]),
        None => row.extend([String::new(), String::new(), String::new()]),
    }
}

fn opt_bool(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

fn write_csv(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("write to memory");
    for row in rows {
        w.write_record(&row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

/// One row per group; `ssd_n` expands to `ssd_1_num, ssd_1_den, ...`.
pub fn degrees_csv(records: &[DegreesRecord], n_max: usize) -> String {
    let mut header: Vec<String> = ["group", "order", "lattice_size", "class_count"]
        .map(String::from)
        .to_vec();
    for p in ["d", "sd", "ssd"] {
        rational_cells(p, &mut header);
    }
    for n in 1..=n_max {
        rational_cells(&format!("ssd_{n}"), &mut header);
    }
    let rows = records
        .iter()
        .map(|r| {
            let mut row = vec![
                r.group.clone(),
                r.order.to_string(),
                r.lattice_size.to_string(),
                r.class_count.to_string(),
            ];
            for v in [&r.d, &r.sd, &r.ssd].into_iter().chain(&r.ssd_n) {
                push_rational(&mut row, v);
            }
            row
        })
        .collect();
    write_csv(header, rows)
}

pub const RESULT_COLUMNS: [&str; 17] = [
    "claim_id",
    "group",
    "instance",
    "part",
    "reading",
    "applicable",
    "holds",
    "skipped",
    "lhs_num",
    "lhs_den",
    "lhs_approx",
    "rhs_num",
    "rhs_den",
    "rhs_approx",
    "strict_observed",
    "witnesses",
    "note",
];

/// Witnesses are joined with `;`.
pub fn results_csv(records: &[ResultRecord]) -> String {
    let header = RESULT_COLUMNS.map(String::from).to_vec();
    let rows = records
        .iter()
        .map(|r| {
            let mut row = vec![
                r.claim_id.clone(),
                r.group.clone(),
                r.instance.clone(),
                r.part.clone(),
                r.reading.clone(),
                r.applicable.to_string(),
                r.holds.to_string(),
                r.skipped.to_string(),
            ];
            push_value(&mut row, &r.lhs);
            push_value(&mut row, &r.rhs);
            row.push(opt_bool(r.strict_observed));
            row.push(r.witnesses.join(";"));
            row.push(r.note.clone().unwrap_or_default());
            row
        })
        .collect();
    write_csv(header, rows)
}
