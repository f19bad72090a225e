//! Truncated theta-series constructions and their exact verdicts.
//!
//! Every op here builds an [`IntSeries`] to a stated order and applies any
//! `(-1)^{k-1}` or `(-1)^k` prefactor itself, so "nonnegative" is always the
//! literal coefficient check. Sums are cut by exponent, never by term count.
//!
//! [`IntSeries`]: crate::IntSeries

mod divisor;
mod identities;
mod mao;
mod wang_yee;

use num_bigint::BigInt;

pub use divisor::{
    corollary14_lhs, corollary14_report, d_series, recurrence117_lhs, recurrence117_report,
    theorem13_check, theorem13_series,
};
pub use identities::{
    am_check, am_lhs, am_rhs, conjecture_check, conjecture_series, gz_check, gz_series,
    jacobi_cube_check, mk_identity_report, pentagonal_check, q_binomial,
};
pub use mao::{
    closed_form_check, decomposition_check, decomposition_exponent, f_series, i_series,
    i_series_closed_form, mao_check, mao_key_check, mao_theta,
};
pub use wang_yee::{wang_yee_check, wang_yee_lhs, wang_yee_rhs};

use crate::qseries::check_residues;
use crate::report::Params;
use crate::{Error, IntSeries, Result};

/// The `(R, S, k, N)` tuple every truncated construction takes. `k` doubles
/// as the truncation depth `m` of the half-residue truncated identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncParams {
    pub r: u32,
    pub s: u32,
    pub k: u32,
    pub order: usize,
}

/// Which proven range a `(R, S)` pair sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueRegime {
    /// `1 <= S < R/2`: the range of the original conjecture.
    Conjectured,
    /// `R/2 <= S < R`: covered only by the extension to all `S < R`.
    Extended,
}

impl TruncParams {
    pub fn new(r: u32, s: u32, k: u32, order: usize) -> Self {
        TruncParams { r, s, k, order }
    }

    /// `1 <= S < R` and `k >= 1`.
    pub fn validate(&self) -> Result<()> {
        check_residues(self.r, self.s)?;
        if self.k == 0 {
            return Err(Error::ZeroParameter { name: "k" });
        }
        Ok(())
    }

    /// `1 <= S <= R/2` and `m = k >= 1`, as the half-residue truncated identity needs.
    pub fn validate_wang_yee(&self) -> Result<()> {
        if self.s == 0 || 2 * self.s > self.r {
            return Err(Error::ResidueRange { r: self.r, s: self.s, expected: "1 <= S <= R/2" });
        }
        if self.k == 0 {
            return Err(Error::ZeroParameter { name: "m" });
        }
        Ok(())
    }

    pub fn regime(&self) -> ResidueRegime {
        if 2 * self.s < self.r {
            ResidueRegime::Conjectured
        } else {
            ResidueRegime::Extended
        }
    }

    pub fn params(&self) -> Params {
        Params::rs(self.r, self.s).with_k(self.k).with_order(self.order)
    }

    pub(crate) fn ri(&self) -> i64 {
        self.r as i64
    }

    pub(crate) fn si(&self) -> i64 {
        self.s as i64
    }

    pub(crate) fn ki(&self) -> i64 {
        self.k as i64
    }
}

impl ResidueRegime {
    pub fn note(self) -> &'static str {
        match self {
            ResidueRegime::Conjectured => "regime: 1 <= S < R/2 (original conjectured range)",
            ResidueRegime::Extended => "regime: R/2 <= S < R (extended range)",
        }
    }
}

/// `(-1)^e`.
pub(crate) fn parity_sign(e: i64) -> BigInt {
    crate::qseries::sign(e)
}

/// `(-1)^e · series`.
pub(crate) fn with_sign(e: i64, series: IntSeries) -> IntSeries {
    if e.rem_euclid(2) == 0 {
        series
    } else {
        -series
    }
}

pub(crate) fn to_usize(e: i64) -> Result<usize> {
    usize::try_from(e).map_err(|_| Error::NegativeExponent { exponent: e })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(TruncParams::new(3, 1, 1, 10).validate().is_ok());
        assert!(TruncParams::new(3, 3, 1, 10).validate().is_err());
        assert!(TruncParams::new(3, 1, 0, 10).validate().is_err());
        assert!(TruncParams::new(4, 2, 1, 10).validate_wang_yee().is_ok());
        assert!(TruncParams::new(5, 3, 1, 10).validate_wang_yee().is_err());
    }

    #[test]
    fn regimes() {
        assert_eq!(TruncParams::new(5, 2, 1, 0).regime(), ResidueRegime::Conjectured);
        assert_eq!(TruncParams::new(4, 2, 1, 0).regime(), ResidueRegime::Extended);
        assert_eq!(TruncParams::new(5, 4, 1, 0).regime(), ResidueRegime::Extended);
    }
}
