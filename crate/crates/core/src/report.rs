//! Verdicts produced by every checker in the crate.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::IntSeries;

/// Parameters a check ran with. Fields a suite does not use stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub k: Option<u32>,
    pub m: Option<u32>,
    pub n: Option<u64>,
    pub order: Option<usize>,
}

impl Params {
    pub fn rs(r: u32, s: u32) -> Self {
        Params { r: Some(r), s: Some(s), ..Params::default() }
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_n(mut self, n: u64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut field = |f: &mut fmt::Formatter<'_>, name: &str, v: Option<String>| {
            if let Some(v) = v {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{name}={v}")?;
            }
            Ok(())
        };
        field(f, "R", self.r.map(|v| v.to_string()))?;
        field(f, "S", self.s.map(|v| v.to_string()))?;
        field(f, "k", self.k.map(|v| v.to_string()))?;
        field(f, "m", self.m.map(|v| v.to_string()))?;
        field(f, "n", self.n.map(|v| v.to_string()))?;
        field(f, "N", self.order.map(|v| v.to_string()))
    }
}

/// Where a violation was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Coefficient of `q^degree`.
    Degree(usize),
    /// Coefficient of `q^degree` in a named auxiliary series.
    Term { series: String, degree: usize },
    /// A partition at pentagonal index `j`.
    Partition { parts: Vec<usize>, j: i64 },
    /// A named quantity (used for structural checks).
    Label(String),
}

impl Witness {
    /// The degree or weight a CSV row reports in its `n` column.
    pub fn degree(&self) -> Option<usize> {
        match self {
            Witness::Degree(d) | Witness::Term { degree: d, .. } => Some(*d),
            _ => None,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Degree(d) => write!(f, "q^{d}"),
            Witness::Term { series, degree } => write!(f, "{series} at q^{degree}"),
            Witness::Partition { parts, j } => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ") at j={j}")
            }
            Witness::Label(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub witness: Witness,
    pub expected: String,
    pub actual: String,
}

impl Violation {
    pub fn new(witness: Witness, expected: impl ToString, actual: impl ToString) -> Self {
        Violation { witness, expected: expected.to_string(), actual: actual.to_string() }
    }
}

/// Outcome of one check. A report passes exactly when it has no violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: String,
    pub params: Params,
    pub violations: Vec<Violation>,
    /// Conventions the run relied on that go beyond the classical
    /// definitions (empty-partition rank, `P(0) = {()}` and so on).
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, params: Params) -> Self {
        CheckReport { suite: suite.into(), params, violations: Vec::new(), notes: Vec::new() }
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    /// Append another report's violations and notes.
    pub fn absorb(&mut self, other: CheckReport) {
        for v in other.violations {
            let witness = match v.witness {
                Witness::Label(l) => Witness::Label(alloc::format!("{}: {l}", other.suite)),
                Witness::Degree(degree) => Witness::Term { series: other.suite.clone(), degree },
                w => w,
            };
            self.violations.push(Violation { witness, ..v });
        }
        for n in other.notes {
            self.note(n);
        }
    }

    /// Record every degree `<= order` where `lhs` and `rhs` differ.
    ///
    /// Both series must be valid through `order`; otherwise the comparison
    /// itself is recorded as a violation.
    pub fn compare_series(&mut self, lhs: &IntSeries, rhs: &IntSeries, order: usize) {
        if lhs.order() < order || rhs.order() < order {
            self.push(Violation::new(
                Witness::Label("truncation order".into()),
                order,
                core::cmp::min(lhs.order(), rhs.order()),
            ));
            return;
        }
        for d in 0..=order {
            let (a, b) = (lhs.coeff_ref(d), rhs.coeff_ref(d));
            if a != b {
                self.push(Violation::new(Witness::Degree(d), b, a));
            }
        }
    }

    /// Record every degree in `from..=order` with a negative coefficient.
    pub fn require_nonneg(&mut self, series: &IntSeries, from: usize, order: usize) {
        if series.order() < order {
            self.push(Violation::new(
                Witness::Label("truncation order".into()),
                order,
                series.order(),
            ));
            return;
        }
        let zero = BigInt::ZERO;
        for (d, c) in series.terms() {
            if d >= from && d <= order && *c < zero {
                self.push(Violation::new(Witness::Degree(d), ">= 0", c));
            }
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} [{}]", self.suite, self.params)?;
        if !self.pass() {
            write!(f, " ({} violations)", self.violations.len())?;
        }
        Ok(())
    }
}
