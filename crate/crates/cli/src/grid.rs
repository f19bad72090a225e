//! Parameter ranges from the command line, expanded per suite.

use std::fmt;
use std::str::FromStr;

pub const DEFAULT_ORDER: usize = 100;
const DEFAULT_K: (i64, i64) = (1, 3);
const DEFAULT_M: (i64, i64) = (1, 2);
const DEFAULT_N: (i64, i64) = (1, 20);
const DEFAULT_R: i64 = 3;

/// Bad flags or parameters. Maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

macro_rules! usage {
    ($($t:tt)*) => { UsageError(format!($($t)*)) };
}
pub(crate) use usage;

/// An inclusive integer range written `a` or `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub fn single(v: i64) -> Self {
        Span { lo: v, hi: v }
    }

    pub fn values(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}"));
        let span = match s.split_once("..") {
            Some((a, b)) => Span { lo: num(a)?, hi: num(b.strip_prefix('=').unwrap_or(b))? },
            None => Span::single(num(s)?),
        };
        if span.lo > span.hi {
            return Err(format!("empty range {s}"));
        }
        Ok(span)
    }
}

/// All ranges given on the command line. Unset fields fall back to
/// per-suite defaults.
#[derive(Debug, Clone, Default)]
pub struct Grid {
    pub r: Option<Span>,
    pub s: Option<Span>,
    pub k: Option<Span>,
    pub kmax: Option<i64>,
    pub m: Option<Span>,
    pub n: Option<Span>,
    pub nmax: Option<i64>,
    pub order: Option<i64>,
}

fn positive(name: &str, span: Span) -> Result<Vec<u32>, UsageError> {
    if span.lo < 1 {
        return Err(usage!("--{name} must be >= 1, got {}", span.lo));
    }
    span.values()
        .map(|v| u32::try_from(v).map_err(|_| usage!("--{name} too large: {v}")))
        .collect()
}

fn with_max(
    name: &str,
    span: Option<Span>,
    max: Option<i64>,
    default: (i64, i64),
) -> Result<Span, UsageError> {
    match (span, max) {
        (Some(_), Some(_)) => Err(usage!("--{name} and --{name}max are mutually exclusive")),
        (Some(s), None) => Ok(s),
        (None, Some(m)) if m < 1 => Err(usage!("--{name}max must be >= 1, got {m}")),
        (None, Some(m)) => Ok(Span { lo: 1, hi: m }),
        (None, None) => Ok(Span { lo: default.0, hi: default.1 }),
    }
}

impl Grid {
    /// Truncation order `N`, default 100.
    pub fn order(&self) -> Result<usize, UsageError> {
        match self.order {
            None => Ok(DEFAULT_ORDER),
            Some(v) if v < 0 => Err(usage!("--N must be >= 0, got {v}")),
            Some(v) => usize::try_from(v).map_err(|_| usage!("--N too large: {v}")),
        }
    }

    pub fn ks(&self) -> Result<Vec<u32>, UsageError> {
        positive("k", with_max("k", self.k, self.kmax, DEFAULT_K)?)
    }

    /// `m` for the wang-yee suite; `--k` is accepted as a synonym.
    pub fn ms(&self) -> Result<Vec<u32>, UsageError> {
        match (self.m, self.k.is_some() || self.kmax.is_some()) {
            (Some(_), true) => Err(usage!("give either --m or --k/--kmax, not both")),
            (Some(m), false) => positive("m", m),
            (None, true) => self.ks(),
            (None, false) => positive("m", Span { lo: DEFAULT_M.0, hi: DEFAULT_M.1 }),
        }
    }

    pub fn ns(&self) -> Result<Vec<usize>, UsageError> {
        let span = with_max("n", self.n, self.nmax, DEFAULT_N)?;
        Ok(positive("n", span)?.into_iter().map(|v| v as usize).collect())
    }

    /// Largest `n` of the grid, for suites that sweep `1..=nmax`.
    pub fn nmax(&self) -> Result<usize, UsageError> {
        Ok(*self.ns()?.last().expect("spans are nonempty"))
    }

    /// `(R, S)` pairs. Without `--S` every residue `1 <= S < R` is taken
    /// (`S <= R/2` when `half` is set); an explicit `--S` outside that range
    /// is an error.
    pub fn residues(&self, half: bool) -> Result<Vec<(u32, u32)>, UsageError> {
        let rs = positive("R", self.r.unwrap_or(Span::single(DEFAULT_R)))?;
        let mut out = Vec::new();
        for r in rs {
            let top = if half { r / 2 } else { r - 1 };
            let bound = if half { "1 <= S <= R/2" } else { "1 <= S < R" };
            match self.s {
                Some(span) => {
                    for s in span.values() {
                        if s < 1 || s > top as i64 {
                            return Err(usage!("R={r} S={s}: need {bound}"));
                        }
                        out.push((r, s as u32));
                    }
                }
                None if top == 0 => return Err(usage!("R={r}: no S with {bound}")),
                None => out.extend((1..=top).map(|s| (r, s))),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("4".parse::<Span>().unwrap(), Span::single(4));
        assert_eq!("2..5".parse::<Span>().unwrap(), Span { lo: 2, hi: 5 });
        assert_eq!("2..=5".parse::<Span>().unwrap(), Span { lo: 2, hi: 5 });
        assert_eq!("-5".parse::<Span>().unwrap(), Span::single(-5));
        assert!("5..2".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
    }

    #[test]
    fn defaults() {
        let g = Grid::default();
        assert_eq!(g.order().unwrap(), 100);
        assert_eq!(g.ks().unwrap(), vec![1, 2, 3]);
        assert_eq!(g.residues(false).unwrap(), vec![(3, 1), (3, 2)]);
        assert_eq!(g.residues(true).unwrap(), vec![(3, 1)]);
    }

    #[test]
    fn rejections() {
        let g = Grid { order: Some(-5), ..Grid::default() };
        assert!(g.order().is_err());
        let g = Grid { k: Some(Span::single(2)), kmax: Some(3), ..Grid::default() };
        assert!(g.ks().is_err());
        let g = Grid { r: Some(Span::single(4)), s: Some(Span::single(4)), ..Grid::default() };
        assert!(g.residues(false).is_err());
        let g = Grid { r: Some(Span::single(1)), ..Grid::default() };
        assert!(g.residues(false).is_err());
        let g = Grid { r: Some(Span::single(5)), s: Some(Span::single(3)), ..Grid::default() };
        assert!(g.residues(true).is_err());
        let g = Grid { k: Some(Span::single(0)), ..Grid::default() };
        assert!(g.ks().is_err());
    }

    #[test]
    fn kmax_and_nmax() {
        let g = Grid { kmax: Some(4), nmax: Some(12), ..Grid::default() };
        assert_eq!(g.ks().unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(g.nmax().unwrap(), 12);
        assert_eq!(g.ms().unwrap(), vec![1, 2, 3, 4]);
    }
}
