//! Truncated infinite products and theta-type sums.

use num_bigint::BigInt;

use super::IntSeries;
use crate::{Error, Result};

pub(crate) fn check_residues(r: u32, s: u32) -> Result<()> {
    if s >= 1 && s < r {
        Ok(())
    } else {
        Err(Error::ResidueRange { r, s, expected: "1 <= S < R" })
    }
}

/// `(q^a; q^step)_∞` through `q^order`. Factors `1 - q^e` with `e > order`
/// are identically 1 at this order and are skipped.
pub fn pochhammer(a: usize, step: usize, order: usize) -> Result<IntSeries> {
    pochhammer_finite(a, step, usize::MAX, order)
}

/// `(q^a; q^step)_len`, the product of the first `len` factors.
pub fn pochhammer_finite(a: usize, step: usize, len: usize, order: usize) -> Result<IntSeries> {
    if a == 0 {
        return Err(Error::ZeroParameter { name: "a" });
    }
    if step == 0 {
        return Err(Error::ZeroParameter { name: "step" });
    }
    let mut acc = IntSeries::one(order);
    for e in (a..=order).step_by(step).take(len) {
        acc = acc.mul_one_minus_q_pow(e);
    }
    Ok(acc)
}

/// `1 / (q^a; q^step)_len` built only from `1/(1 - q^e)` factors, so every
/// coefficient is visibly a nonnegative count.
pub(crate) fn reciprocal_pochhammer(
    series: IntSeries,
    a: usize,
    step: usize,
    len: usize,
) -> IntSeries {
    debug_assert!(a >= 1 && step >= 1);
    let order = series.order();
    let mut acc = series;
    for e in (a..=order).step_by(step).take(len) {
        acc = acc.div_one_minus_q_pow(e);
    }
    acc
}

/// `(q^S, q^{R-S}, q^R; q^R)_∞`, the product side of the specialised
/// Jacobi triple product.
pub fn triple_product(r: u32, s: u32, order: usize) -> Result<IntSeries> {
    check_residues(r, s)?;
    let (r, s) = (r as usize, s as usize);
    let a = pochhammer(s, r, order)?;
    let b = pochhammer(r - s, r, order)?;
    let c = pochhammer(r, r, order)?;
    Ok(&(&a * &b) * &c)
}

/// Sum of `weight(j) q^{exponent(j)}` over integers `lo <= j <= hi`
/// (`None` meaning unbounded) keeping exponents `<= order`.
///
/// `exponent` must be a convex quadratic in `j` when a side is unbounded:
/// the walk out from the anchor stops once the exponent exceeds `order` and
/// is increasing in the walking direction.
pub(crate) fn theta_sum(
    order: usize,
    lo: Option<i64>,
    hi: Option<i64>,
    exponent: impl Fn(i64) -> i64,
    weight: impl Fn(i64) -> BigInt,
) -> Result<IntSeries> {
    let mut out = IntSeries::zero(order);
    let cap = order as i64;
    if let (Some(l), Some(h)) = (lo, hi) {
        if l > h {
            return Ok(out);
        }
    }
    let anchor = 0i64.clamp(lo.unwrap_or(i64::MIN), hi.unwrap_or(i64::MAX));
    let mut visit = |j: i64| -> Result<()> {
        let e = exponent(j);
        if e < 0 {
            return Err(Error::NegativeExponent { exponent: e });
        }
        if e <= cap {
            out.add_term(e as usize, weight(j));
        }
        Ok(())
    };
    let mut j = anchor;
    loop {
        if hi.is_some_and(|h| j > h) {
            break;
        }
        let e = exponent(j);
        if hi.is_none() && e > cap && exponent(j + 1) > e {
            break;
        }
        visit(j)?;
        j += 1;
    }
    let mut j = anchor - 1;
    loop {
        if lo.is_some_and(|l| j < l) {
            break;
        }
        let e = exponent(j);
        if lo.is_none() && e > cap && exponent(j - 1) > e {
            break;
        }
        visit(j)?;
        j -= 1;
    }
    Ok(out)
}

pub(crate) fn sign(j: i64) -> BigInt {
    if j.rem_euclid(2) == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `Σ_{j ∈ ℤ} (-1)^j q^{R j(j+1)/2 - S j}` through `q^order`.
pub fn bilateral_theta(r: u32, s: u32, order: usize) -> Result<IntSeries> {
    check_residues(r, s)?;
    let (r, s) = (r as i64, s as i64);
    theta_sum(order, None, None, |j| r * j * (j + 1) / 2 - s * j, sign)
}

/// The Lambert-type series
/// `Σ_{n>=0} q^{nR+S}/(1-q^{nR+S}) - q^{nR+R-S}/(1-q^{nR+R-S})`.
///
/// The coefficient of `q^m` is the number of divisors of `m` congruent to
/// `S` mod `R` minus the number congruent to `R - S`.
pub fn lambert_diff(r: u32, s: u32, order: usize) -> Result<IntSeries> {
    check_residues(r, s)?;
    let (r, s) = (r as usize, s as usize);
    let mut out = IntSeries::zero(order);
    for (base, c) in [(s, 1), (r - s, -1)] {
        for e in (base..=order).step_by(r) {
            for m in (e..=order).step_by(e) {
                out.add_term(m, BigInt::from(c));
            }
        }
    }
    Ok(out)
}
