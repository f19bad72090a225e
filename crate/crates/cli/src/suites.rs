//! Suite names, their parameter grids and the jobs that run them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use qtrunc_core::bijections::{a_set_counts, theorem12_report, verify_phi, verify_psi};
use qtrunc_core::partitions::{divisor_diff, m_k, PartitionTable};
use qtrunc_core::trunclab::{
    am_check, closed_form_check, conjecture_check, conjecture_series, corollary14_lhs,
    corollary14_report, decomposition_check, gz_check, gz_series, jacobi_cube_check, mao_check,
    mk_identity_report, pentagonal_check, recurrence117_lhs, recurrence117_report,
    theorem13_check, theorem13_series, wang_yee_check,
};
use qtrunc_core::{CheckReport, IntSeries, Params, TruncParams};

use crate::grid::{usage, Grid, UsageError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Pentagonal,
    JacobiCube,
    AmIdentity,
    Theorem12,
    MkIdentity,
    Phi,
    Psi,
    Conjecture,
    Theorem13,
    Corollary14,
    Gz,
    Mao,
    Decomposition,
    WangYee,
    Recurrence117,
}

const NAMES: [(&str, Suite); 15] = [
    ("pentagonal", Suite::Pentagonal),
    ("jacobi-cube", Suite::JacobiCube),
    ("am-identity", Suite::AmIdentity),
    ("theorem12", Suite::Theorem12),
    ("mk-identity", Suite::MkIdentity),
    ("phi", Suite::Phi),
    ("psi", Suite::Psi),
    ("conjecture", Suite::Conjecture),
    ("theorem13", Suite::Theorem13),
    ("corollary14", Suite::Corollary14),
    ("gz", Suite::Gz),
    ("mao", Suite::Mao),
    ("decomposition", Suite::Decomposition),
    ("wang-yee", Suite::WangYee),
    ("recurrence117", Suite::Recurrence117),
];

impl Suite {
    pub fn name(self) -> &'static str {
        NAMES.iter().find(|(_, s)| *s == self).map(|(n, _)| *n).unwrap()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES.iter().find(|(n, _)| *n == s).map(|(_, v)| *v).ok_or_else(|| {
            let known: Vec<_> = NAMES.iter().map(|(n, _)| *n).collect();
            usage!("unknown suite {s:?}; expected one of {}", known.join(", "))
        })
    }
}

/// One grid point of a `verify` run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Job {
    Pentagonal { r: u32, s: u32, order: usize },
    JacobiCube { order: usize },
    AmIdentity { k: u32, order: usize },
    Theorem12 { n: usize, k: u32 },
    MkIdentity { k: u32, nmax: usize },
    Phi { n: usize },
    Psi { n: usize, k: u32 },
    Trunc { suite: Suite, p: TruncParams },
    Corollary14 { k: u32, nmax: usize },
    Gz { k: u32, order: usize },
    Recurrence117 { nmax: usize },
}

/// A finished report plus any values worth printing alongside it.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: CheckReport,
    pub values: Vec<(String, String)>,
}

impl From<CheckReport> for Outcome {
    fn from(report: CheckReport) -> Self {
        Outcome { report, values: Vec::new() }
    }
}

fn trunc_jobs(suite: Suite, grid: &Grid, half: bool) -> Result<Vec<Job>, UsageError> {
    let order = grid.order()?;
    let ks = if half { grid.ms()? } else { grid.ks()? };
    let mut jobs = Vec::new();
    for (r, s) in grid.residues(half)? {
        for &k in &ks {
            jobs.push(Job::Trunc { suite, p: TruncParams::new(r, s, k, order) });
        }
    }
    Ok(jobs)
}

/// Expand the grid into jobs, rejecting bad parameters before any work.
pub fn jobs(suite: Suite, grid: &Grid) -> Result<Vec<Job>, UsageError> {
    let jobs = match suite {
        Suite::Pentagonal => {
            let order = grid.order()?;
            grid.residues(false)?.into_iter().map(|(r, s)| Job::Pentagonal { r, s, order }).collect()
        }
        Suite::JacobiCube => vec![Job::JacobiCube { order: grid.order()? }],
        Suite::AmIdentity => {
            let order = grid.order()?;
            grid.ks()?.into_iter().map(|k| Job::AmIdentity { k, order }).collect()
        }
        Suite::Theorem12 => {
            let ks = grid.ks()?;
            grid.ns()?
                .into_iter()
                .flat_map(|n| ks.iter().map(move |&k| Job::Theorem12 { n, k }))
                .collect()
        }
        Suite::MkIdentity => {
            let nmax = grid.nmax()?;
            grid.ks()?.into_iter().map(|k| Job::MkIdentity { k, nmax }).collect()
        }
        Suite::Phi => grid.ns()?.into_iter().map(|n| Job::Phi { n }).collect(),
        Suite::Psi => {
            let ks = grid.ks()?;
            grid.ns()?.into_iter().flat_map(|n| ks.iter().map(move |&k| Job::Psi { n, k })).collect()
        }
        Suite::Conjecture | Suite::Theorem13 | Suite::Mao | Suite::Decomposition => {
            trunc_jobs(suite, grid, false)?
        }
        Suite::WangYee => trunc_jobs(suite, grid, true)?,
        Suite::Corollary14 => {
            let nmax = grid.nmax()?;
            grid.ks()?.into_iter().map(|k| Job::Corollary14 { k, nmax }).collect()
        }
        Suite::Gz => {
            let order = grid.order()?;
            grid.ks()?.into_iter().map(|k| Job::Gz { k, order }).collect()
        }
        Suite::Recurrence117 => vec![Job::Recurrence117 { nmax: grid.nmax()? }],
    };
    Ok(jobs)
}

/// Largest `n` any job needs from the partition table.
pub fn table_size(jobs: &[Job]) -> usize {
    jobs.iter()
        .map(|j| match *j {
            Job::Theorem12 { n, .. } => n,
            Job::MkIdentity { nmax, .. }
            | Job::Corollary14 { nmax, .. }
            | Job::Recurrence117 { nmax } => nmax,
            _ => 0,
        })
        .max()
        .unwrap_or(0)
}

/// Run one job. Parameter errors were ruled out by [`jobs`]; any that slip
/// through are reported as usage errors.
pub fn run_job(job: &Job, table: &PartitionTable) -> Result<Vec<Outcome>, UsageError> {
    let err = |e: qtrunc_core::Error| usage!("{e}");
    let one = |r: CheckReport| vec![Outcome::from(r)];
    let out = match *job {
        Job::Pentagonal { r, s, order } => one(pentagonal_check(r, s, order).map_err(err)?),
        Job::JacobiCube { order } => one(jacobi_cube_check(order).map_err(err)?),
        Job::AmIdentity { k, order } => one(am_check(k, order).map_err(err)?),
        Job::Theorem12 { n, k } => {
            let report = theorem12_report(table, n, k as usize);
            let c = a_set_counts(table, n, k as usize);
            let values = vec![
                (format!("|A_{k}^(1)({n})|"), c.upper_low.to_string()),
                (format!("|A_{}^(2)({n})|", k as i64 - 1), c.upper.to_string()),
                (format!("|A_-{k}^(1)({n})|"), c.lower.to_string()),
                ("difference".to_string(), c.difference().to_string()),
                ("partial sum".to_string(), c.partial_sum.to_string()),
            ];
            vec![Outcome { report, values }]
        }
        Job::MkIdentity { k, nmax } => one(mk_identity_report(table, nmax, k).map_err(err)?),
        Job::Phi { n } => one(verify_phi(n)),
        Job::Psi { n, k } => one(verify_psi(n, k as usize)),
        Job::Trunc { suite, p } => match suite {
            Suite::Conjecture => one(conjecture_check(&p).map_err(err)?),
            Suite::Theorem13 => one(theorem13_check(&p).map_err(err)?),
            Suite::Mao => vec![
                mao_check(&p).map_err(err)?.into(),
                closed_form_check(&p).map_err(err)?.into(),
            ],
            Suite::Decomposition => one(decomposition_check(&p).map_err(err)?),
            Suite::WangYee => one(wang_yee_check(&p).map_err(err)?),
            other => unreachable!("{other} is not a truncated-series suite"),
        },
        Job::Corollary14 { k, nmax } => one(corollary14_report(table, k, nmax).map_err(err)?),
        Job::Gz { k, order } => one(gz_check(k, order).map_err(err)?),
        Job::Recurrence117 { nmax } => one(recurrence117_report(table, nmax).map_err(err)?),
    };
    Ok(out)
}

/// Rows of a `table` run. Series tables also keep the series themselves for
/// the JSON writer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub series: Vec<(Params, IntSeries)>,
}

impl Table {
    fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            series: Vec::new(),
        }
    }

    fn push_series(&mut self, lead: &[String], params: Params, series: IntSeries) {
        for (n, c) in series.to_vec().iter().enumerate() {
            let mut row = lead.to_vec();
            row.push(n.to_string());
            row.push(c.to_string());
            self.rows.push(row);
        }
        self.series.push((params, series));
    }
}

pub const TABLES: [&str; 7] =
    ["gz", "theorem13", "conjecture", "recurrence117", "mk", "theorem12", "corollary14"];

/// Build a coefficient or count table without pass/fail gating.
pub fn table(name: &str, grid: &Grid) -> Result<Table, UsageError> {
    let err = |e: qtrunc_core::Error| usage!("{e}");
    let table = match name {
        "gz" => {
            let order = grid.order()?;
            let mut t = Table::new(name, &["k", "n", "coefficient"]);
            for k in grid.ks()? {
                let s = gz_series(k, order).map_err(err)?;
                t.push_series(&[k.to_string()], Params::default().with_k(k).with_order(order), s);
            }
            t
        }
        "theorem13" | "conjecture" => {
            let order = grid.order()?;
            let mut t = Table::new(name, &["R", "S", "k", "n", "coefficient"]);
            for (r, s) in grid.residues(false)? {
                for k in grid.ks()? {
                    let p = TruncParams::new(r, s, k, order);
                    let series = if name == "theorem13" {
                        theorem13_series(&p)
                    } else {
                        conjecture_series(&p)
                    }
                    .map_err(err)?;
                    let lead = [r.to_string(), s.to_string(), k.to_string()];
                    t.push_series(&lead, p.params(), series);
                }
            }
            t
        }
        "recurrence117" => {
            let nmax = grid.nmax()?;
            let pt = PartitionTable::new(nmax);
            let mut t = Table::new(name, &["n", "lhs", "divisor_diff"]);
            for n in 1..=nmax {
                let d = divisor_diff(n, 3, 1).map_err(err)?;
                t.rows.push(vec![n.to_string(), recurrence117_lhs(&pt, n).to_string(), d.to_string()]);
            }
            t
        }
        "corollary14" => {
            let nmax = grid.nmax()?;
            let pt = PartitionTable::new(nmax);
            let mut t = Table::new(name, &["k", "n", "lhs", "divisor_diff"]);
            for k in grid.ks()? {
                for n in 1..=nmax {
                    let d = divisor_diff(n, 3, 1).map_err(err)?;
                    let lhs = corollary14_lhs(&pt, n, k);
                    t.rows.push(vec![k.to_string(), n.to_string(), lhs.to_string(), d.to_string()]);
                }
            }
            t
        }
        "mk" => {
            let pt = PartitionTable::new(grid.nmax()?);
            let mut t = Table::new(name, &["n", "k", "m_k", "a2", "a1"]);
            for n in grid.ns()? {
                for k in grid.ks()? {
                    let c = a_set_counts(&pt, n, k as usize);
                    let m = m_k(k as usize, n).map_err(err)?;
                    t.rows.push(vec![
                        n.to_string(),
                        k.to_string(),
                        m.to_string(),
                        c.upper.to_string(),
                        c.lower.to_string(),
                    ]);
                }
            }
            t
        }
        "theorem12" => {
            let pt = PartitionTable::new(grid.nmax()?);
            let cols = ["n", "k", "partial_sum", "a1_k", "a2_k_minus_1", "a1_minus_k", "difference"];
            let mut t = Table::new(name, &cols);
            for n in grid.ns()? {
                for k in grid.ks()? {
                    let c = a_set_counts(&pt, n, k as usize);
                    t.rows.push(vec![
                        n.to_string(),
                        k.to_string(),
                        c.partial_sum.to_string(),
                        c.upper_low.to_string(),
                        c.upper.to_string(),
                        c.lower.to_string(),
                        BigInt::from(c.difference()).to_string(),
                    ]);
                }
            }
            t
        }
        other => return Err(usage!("no table for {other:?}; expected one of {}", TABLES.join(", "))),
    };
    Ok(table)
}
