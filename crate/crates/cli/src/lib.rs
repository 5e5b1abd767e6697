//! Library side of the `latdeg` command: spec parsing, the `degrees` and
//! `verify` commands, and report encoding.

pub mod report;
pub mod spec;

use latdeg::characters::class_count;
use latdeg::claims::{run_suite, ClaimId, Params};
use latdeg::degrees::{d_group, sd_group, ssd_group, ssd_multi, BracketTable};
use latdeg::{Exec, Group, Lattice};
use thiserror::Error;

use report::{DegreesRecord, ResultRecord};
pub use spec::{atoms_up_to, parse_group_spec, parse_spec_or_range, GroupSpec, SpecError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Core(#[from] latdeg::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spec(_) => EXIT_USAGE,
            CliError::Core(latdeg::Error::UnknownClaim(_) | latdeg::Error::InvalidParameter { .. }) => {
                EXIT_USAGE
            }
            CliError::Core(_) => EXIT_LIMIT,
            CliError::Io(_) => EXIT_CLAIM_FAILED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmdOutput {
    pub code: i32,
    pub text: String,
}

/// Comma- or whitespace-separated claim ids, e.g. `C2,C13`.
pub fn parse_claims(list: &str) -> Result<Vec<ClaimId>, CliError> {
    list.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<ClaimId>().map_err(CliError::from))
        .collect()
}

/// Expands `--group` arguments, each a spec or a range.
pub fn parse_specs<S: AsRef<str>>(args: &[S]) -> Result<Vec<GroupSpec>, CliError> {
    let mut out = Vec::new();
    for a in args {
        out.extend(parse_spec_or_range(a.as_ref())?);
    }
    Ok(out)
}

pub fn build_groups(specs: &[GroupSpec]) -> Result<Vec<Group>, CliError> {
    specs.iter().map(|s| s.build().map_err(CliError::from)).collect()
}

fn degrees_record(g: &Group, n_max: usize) -> latdeg::Result<DegreesRecord> {
    let l = Lattice::enumerate(g)?;
    let bt = BracketTable::new(&l);
    let ssd_n = (1..=n_max)
        .map(|n| ssd_multi(&l, &bt, &g.whole(), n).map(|r| (&r).into()))
        .collect::<latdeg::Result<Vec<_>>>()?;
    Ok(DegreesRecord {
        group: g.label().to_string(),
        order: g.order(),
        lattice_size: l.len(),
        class_count: class_count(g),
        d: (&d_group(g)).into(),
        sd: (&sd_group(&l)).into(),
        ssd: (&ssd_group(&l)).into(),
        ssd_n,
    })
}

/// Degree vector of each group, in input order.
pub fn cmd_degrees(specs: &[GroupSpec], n_max: usize, format: Format) -> Result<CmdOutput, CliError> {
    let groups = build_groups(specs)?;
    let records = Exec::default()
        .map(groups.len(), |i| degrees_record(&groups[i], n_max))
        .into_iter()
        .collect::<latdeg::Result<Vec<_>>>()?;
    let text = match format {
        Format::Json => report::to_json(&records),
        Format::Csv => report::degrees_csv(&records, n_max),
    };
    Ok(CmdOutput { code: EXIT_OK, text })
}

/// Runs the claim suite. Exit code 1 if any applicable statement fails,
/// otherwise 3 if some claim was skipped for exceeding a budget, otherwise 0.
pub fn cmd_verify(
    specs: &[GroupSpec],
    claims: Option<&[ClaimId]>,
    params: &Params,
    format: Format,
) -> Result<CmdOutput, CliError> {
    let groups = build_groups(specs)?;
    let report = run_suite(&groups, claims, params)?;
    let mut records: Vec<ResultRecord> = report.results.iter().map(Into::into).collect();
    records.extend(report.skipped.iter().map(ResultRecord::from));
    let code = if !report.all_hold() {
        EXIT_CLAIM_FAILED
    } else if !report.skipped.is_empty() {
        EXIT_LIMIT
    } else {
        EXIT_OK
    };
    let text = match format {
        Format::Json => report::to_json(&records),
        Format::Csv => report::results_csv(&records),
    };
    Ok(CmdOutput { code, text })
}
