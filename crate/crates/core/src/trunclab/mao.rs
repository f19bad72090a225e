//! `f_{R,±S,k}`, the four sums `I₁..I₄` that `D_k(q)` splits into, their
//! closed forms, and the factorisations that make each `I_i / (q^S, q^{R-S},
//! q^R; q^R)_∞` visibly nonnegative.
//!
//! The "positive" constructions below use only `1/(1 - q^e)` factors and
//! sums of such terms, never a subtraction, so every coefficient they produce
//! is a count. They are compared against the direct route `I_i · 1/tp`.

use alloc::format;

use num_bigint::BigInt;

use super::divisor::weighted_theta;
use super::{parity_sign, to_usize, with_sign, TruncParams};
use crate::qseries::{lambert_diff, pochhammer, reciprocal_pochhammer, theta_sum, triple_product};
use crate::report::{CheckReport, Params, Violation, Witness};
use crate::{Error, IntSeries, Result};

fn f_base(r: u32, s: i64, k: u32) -> Result<usize> {
    let base = r as i64 * k as i64 - s;
    if base < 1 {
        return Err(Error::Invalid(format!(
            "f needs Rk - S >= 1, got R={r}, S={s}, k={k} (Rk - S = {base})"
        )));
    }
    Ok(base as usize)
}

/// `f_{R,s,k} = (q^R, q^{Rk-s}; q^R)_∞ Σ_{n>=0} q^{Rn} / (q^R, q^{Rk-s}; q^R)_n`
/// for a signed shift `s` (pass `-S` for `f_{R,-S,k}`).
pub fn f_series(r: u32, s: i64, k: u32, order: usize) -> Result<IntSeries> {
    if r == 0 {
        return Err(Error::ZeroParameter { name: "R" });
    }
    let base = f_base(r, s, k)?;
    let r = r as usize;
    let mut term = IntSeries::one(order);
    let mut sum = IntSeries::one(order);
    for n in 1.. {
        if r * n > order {
            break;
        }
        term = term.div_one_minus_q_pow(r * n).div_one_minus_q_pow(base + r * (n - 1));
        sum = sum + term.shift_up(r * n);
    }
    let product = &pochhammer(r, r, order)? * &pochhammer(base, r, order)?;
    Ok(&product * &sum)
}

/// `Σ_{j>=1} (-1)^{j+1} q^{Rj(j-1)/2 + Rkj - sj}`, which equals
/// `1 - f_{R,s,k}`.
pub fn mao_theta(r: u32, s: i64, k: u32, order: usize) -> Result<IntSeries> {
    f_base(r, s, k)?;
    let (r, k) = (r as i64, k as i64);
    theta_sum(order, Some(1), None, |j| r * j * (j - 1) / 2 + r * k * j - s * j, |j| parity_sign(j + 1))
}

/// Both identities `1 - f_{R,S,k} = Σ ...` and `1 - f_{R,-S,k} = Σ ...`
/// through order `N`.
pub fn mao_check(p: &TruncParams) -> Result<CheckReport> {
    p.validate()?;
    let mut report = CheckReport::new("mao", p.params());
    for (label, s) in [("f(R,S,k)", p.si()), ("f(R,-S,k)", -p.si())] {
        let one_minus_f = IntSeries::one(p.order) - f_series(p.r, s, p.k, p.order)?;
        let theta = mao_theta(p.r, s, p.k, p.order)?;
        let mut sub = CheckReport::new(label, p.params());
        sub.compare_series(&one_minus_f, &theta, p.order);
        report.absorb(sub);
    }
    Ok(report)
}

/// The four alternating sums, by their definitions:
///
/// - `I₁ = Σ (-1)^j q^{Rj(j+1)/2 + (kR-S)j}`
/// - `I₂ = Σ (-1)^j q^{Rj(j+1)/2 + Rjk + Sj + S(2k+1)}`
/// - `I₃ = Σ (-1)^j (j+1) q^{Rj(j+1)/2 + Rjk - Sj}`
/// - `I₄ = Σ (-1)^j (j+1) q^{Rj(j+1)/2 + Rjk + Sj + S(2k+1)}`
///
/// all over `j >= 0`.
pub fn i_series(idx: u8, p: &TruncParams) -> Result<IntSeries> {
    p.validate()?;
    let (r, s, k) = (p.ri(), p.si(), p.ki());
    let tri = move |j: i64| r * j * (j + 1) / 2 + r * j * k;
    let plain = parity_sign;
    let weighted = |j: i64| parity_sign(j) * BigInt::from(j + 1);
    let order = p.order;
    match idx {
        1 => theta_sum(order, Some(0), None, |j| tri(j) - s * j, plain),
        2 => theta_sum(order, Some(0), None, |j| tri(j) + s * j + s * (2 * k + 1), plain),
        3 => theta_sum(order, Some(0), None, |j| tri(j) - s * j, weighted),
        4 => theta_sum(order, Some(0), None, |j| tri(j) + s * j + s * (2 * k + 1), weighted),
        _ => Err(Error::Invalid(format!("no sum I_{idx}; expected 1..=4"))),
    }
}

/// `Σ_{n,m>=0} q^{R(2n+m)} / ((q^a, q^R; q^R)_n (1 - q^{a + R(n+m)}))`.
fn double_sum(a: usize, r: usize, order: usize) -> IntSeries {
    let mut acc = IntSeries::zero(order);
    let mut inv = IntSeries::one(order);
    for n in 0.. {
        let lead = 2 * r * n;
        if lead > order {
            break;
        }
        if n > 0 {
            inv = inv.div_one_minus_q_pow(a + r * (n - 1)).div_one_minus_q_pow(r * n);
        }
        // Σ_m q^{lead + Rm} / (1 - q^{a + R(n+m)}), expanded geometrically
        let mut inner = IntSeries::zero(order);
        for m in 0.. {
            let start = lead + r * m;
            if start > order {
                break;
            }
            let step = a + r * (n + m);
            for e in (start..=order).step_by(step) {
                inner.add_term(e, BigInt::from(1));
            }
        }
        acc = acc + &inner * &inv;
    }
    acc
}

/// Check `Σ_j (-1)^j (j+1) a^j q^{R j(j+1)/2} = (a, q^R; q^R)_∞ · Σ_{n,m} ...`
/// at `a = q^{a_exp}`, base `q^R`.
pub fn mao_key_check(a_exp: usize, r: u32, order: usize) -> Result<CheckReport> {
    if a_exp == 0 || r == 0 {
        return Err(Error::ZeroParameter { name: if r == 0 { "R" } else { "a" } });
    }
    let (ai, ri) = (a_exp as i64, r as i64);
    let lhs = theta_sum(order, Some(0), None, |j| ri * j * (j + 1) / 2 + ai * j, |j| {
        parity_sign(j) * BigInt::from(j + 1)
    })?;
    let r = r as usize;
    let product = &pochhammer(a_exp, r, order)? * &pochhammer(r, r, order)?;
    let rhs = &product * &double_sum(a_exp, r, order);
    let mut params = Params::default().with_order(order);
    params.r = Some(r as u32);
    let mut report = CheckReport::new(format!("mao-key(a=q^{a_exp})"), params);
    report.compare_series(&lhs, &rhs, order);
    Ok(report)
}

/// `I_idx` from its closed form: `q^{S-kR}(1 - f_{R,S,k})`,
/// `q^{(2S-R)k}(1 - f_{R,-S,k})`, and the two double-sum products.
pub fn i_series_closed_form(idx: u8, p: &TruncParams) -> Result<IntSeries> {
    p.validate()?;
    let (r, s, k) = (p.ri(), p.si(), p.ki());
    let order = p.order;
    let ru = p.r as usize;
    match idx {
        1 => {
            let drop = to_usize(k * r - s)?;
            let work = order + drop;
            let one_minus_f = IntSeries::one(work) - f_series(p.r, s, p.k, work)?;
            one_minus_f.shift_down(drop)
        }
        2 => {
            let e = (2 * s - r) * k;
            let work = order + e.min(0).unsigned_abs() as usize;
            let one_minus_f = IntSeries::one(work) - f_series(p.r, -s, p.k, work)?;
            one_minus_f.shift(e)
        }
        3 | 4 => {
            let a = to_usize(if idx == 3 { k * r - s } else { k * r + s })?;
            let product = &pochhammer(a, ru, order)? * &pochhammer(ru, ru, order)?;
            let body = &product * &double_sum(a, ru, order);
            if idx == 3 {
                Ok(body)
            } else {
                Ok(body.shift_up(to_usize(s * (2 * k + 1))?))
            }
        }
        _ => Err(Error::Invalid(format!("no sum I_{idx}; expected 1..=4"))),
    }
}

/// `1/(q^a; q^step)_∞` with the factor `1 - q^skip` left out.
fn reciprocal_skipping(series: IntSeries, a: usize, step: usize, skip: usize) -> IntSeries {
    let order = series.order();
    let mut acc = series;
    for e in (a..=order).step_by(step).filter(|&e| e != skip) {
        acc = acc.div_one_minus_q_pow(e);
    }
    acc
}

/// `I_idx / (q^S, q^{R-S}, q^R; q^R)_∞` from its nonnegative factorisation.
fn i_over_tp_positive(idx: u8, p: &TruncParams) -> Result<IntSeries> {
    let (r, s, k) = (p.ri(), p.si(), p.ki());
    let (ru, su) = (p.r as usize, p.s as usize);
    let order = p.order;
    let infinite = usize::MAX;
    match idx {
        1 | 2 => {
            // Σ_j q^{(2j+1)(Rj + Rk ∓ S)} (1 - q^{R(2j+1) + Rk ∓ S}) / tp, where the
            // numerator factor cancels one factor of the matching Pochhammer.
            let sg = if idx == 1 { -s } else { s };
            let shift = if idx == 1 { s - k * r } else { (2 * s - r) * k };
            let work = order + shift.min(0).unsigned_abs() as usize;
            let mut acc = IntSeries::zero(work);
            for j in 0i64.. {
                let lead = (2 * j + 1) * (r * j + r * k + sg);
                if lead > work as i64 {
                    break;
                }
                let skip = to_usize(r * (2 * j + 1) + r * k + sg)?;
                let mut term = IntSeries::monomial(1, lead as usize, work);
                term = reciprocal_pochhammer(term, ru, ru, infinite);
                term = if idx == 1 {
                    let t = reciprocal_pochhammer(term, su, ru, infinite);
                    reciprocal_skipping(t, ru - su, ru, skip)
                } else {
                    let t = reciprocal_pochhammer(term, ru - su, ru, infinite);
                    reciprocal_skipping(t, su, ru, skip)
                };
                acc = acc + term;
            }
            acc.shift(shift)
        }
        3 => {
            let a = to_usize(k * r - s)?;
            let body = double_sum(a, ru, order);
            let body = reciprocal_pochhammer(body, su, ru, infinite);
            Ok(reciprocal_pochhammer(body, ru - su, ru, p.k as usize - 1))
        }
        4 => {
            let a = to_usize(k * r + s)?;
            let body = double_sum(a, ru, order).shift_up(to_usize(s * (2 * k + 1))?);
            let body = reciprocal_pochhammer(body, ru - su, ru, infinite);
            Ok(reciprocal_pochhammer(body, su, ru, p.k as usize))
        }
        _ => Err(Error::Invalid(format!("no sum I_{idx}; expected 1..=4"))),
    }
}

/// Exponent `(Rk² + (R - 2S)k) / 2` of the prefactor in the decomposition.
/// The numerator is checked for evenness rather than rounded.
pub fn decomposition_exponent(p: &TruncParams) -> Result<usize> {
    let (r, s, k) = (p.ri(), p.si(), p.ki());
    let twice = r * k * k + (r - 2 * s) * k;
    if twice % 2 != 0 {
        return Err(Error::Invalid(format!("prefactor exponent {twice}/2 is not an integer")));
    }
    to_usize(twice / 2)
}

/// Check `(-1)^{k-1} tp · D_k = q^{(Rk²+(R-2S)k)/2} ((k-1)I₁ + kI₂ + I₃ + I₄)`
/// through order `N`, and that each `I_i / tp` equals its factorised form,
/// which is nonnegative.
pub fn decomposition_check(p: &TruncParams) -> Result<CheckReport> {
    p.validate()?;
    let order = p.order;
    let mut report = CheckReport::new("decomposition", p.params());
    let e = match decomposition_exponent(p) {
        Ok(e) => e,
        Err(err) => {
            report.push(Violation::new(Witness::Label("prefactor exponent".into()), "even", err));
            return Ok(report);
        }
    };
    let tp = triple_product(p.r, p.s, order)?;
    let inv = tp.invert()?;

    let lhs = with_sign(
        p.ki() - 1,
        weighted_theta(p, order)? - &tp * &lambert_diff(p.r, p.s, order)?,
    );
    let sums = [1u8, 2, 3, 4].map(|i| i_series(i, p));
    let [i1, i2, i3, i4] = sums;
    let (i1, i2, i3, i4) = (i1?, i2?, i3?, i4?);
    let combo = i1.scale(&BigInt::from(p.k - 1)) + i2.scale(&BigInt::from(p.k)) + &i3 + &i4;
    let mut split = CheckReport::new("tp*D_k split", p.params());
    split.compare_series(&lhs, &combo.shift_up(e), order);
    report.absorb(split);

    for (idx, series) in [(1u8, &i1), (2, &i2), (3, &i3), (4, &i4)] {
        let direct = series * &inv;
        let positive = i_over_tp_positive(idx, p)?;
        let mut sub = CheckReport::new(format!("I{idx}/tp"), p.params());
        sub.compare_series(&direct, &positive, order);
        sub.require_nonneg(&positive, 0, order);
        report.absorb(sub);
    }
    Ok(report)
}

/// Each `I_i` against its closed form through order `N`.
pub fn closed_form_check(p: &TruncParams) -> Result<CheckReport> {
    p.validate()?;
    let mut report = CheckReport::new("closed-forms", p.params());
    for idx in 1..=4u8 {
        let mut sub = CheckReport::new(format!("I{idx}"), p.params());
        sub.compare_series(&i_series(idx, p)?, &i_series_closed_form(idx, p)?, p.order);
        report.absorb(sub);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_three_one_one() {
        let f = f_series(3, 1, 1, 10).unwrap();
        let want = IntSeries::from_terms([(0, 1), (2, -1), (7, 1)], 10);
        assert_eq!(f, want);
        assert_eq!(f.coeff(0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn f_rejects_nonpositive_base() {
        assert!(f_series(3, 3, 1, 10).is_err());
        assert!(mao_theta(2, 5, 2, 10).is_err());
    }

    #[test]
    fn mao_small() {
        for (r, s) in [(3, 1), (4, 3), (2, 1)] {
            for k in 1..=3 {
                let rep = mao_check(&TruncParams::new(r, s, k, 50)).unwrap();
                assert!(rep.pass(), "{rep} {:?}", rep.violations);
            }
        }
    }

    #[test]
    fn i_series_leading_terms() {
        let p = TruncParams::new(3, 1, 1, 20);
        assert_eq!(i_series(1, &p).unwrap().coeff(0).unwrap(), BigInt::from(1));
        assert_eq!(i_series(3, &p).unwrap().coeff(0).unwrap(), BigInt::from(1));
        assert!(i_series(5, &p).is_err());
    }

    #[test]
    fn mao_key_instance() {
        // a = q^{kR-S} with R = 3, S = 1, k = 1, 2
        for a in [2, 5] {
            let rep = mao_key_check(a, 3, 80).unwrap();
            assert!(rep.pass(), "{:?}", rep.violations);
        }
    }

    #[test]
    fn closed_forms_small() {
        for (r, s, k) in [(3, 1, 1), (4, 1, 2), (5, 4, 2), (2, 1, 3)] {
            let rep = closed_form_check(&TruncParams::new(r, s, k, 60)).unwrap();
            assert!(rep.pass(), "{rep} {:?}", rep.violations);
        }
    }

    #[test]
    fn decomposition_small() {
        for (r, s, k) in [(3, 1, 1), (4, 1, 2), (5, 3, 2), (2, 1, 1)] {
            let rep = decomposition_check(&TruncParams::new(r, s, k, 60)).unwrap();
            assert!(rep.pass(), "{rep} {:?}", rep.violations);
        }
    }

    #[test]
    fn prefactor_exponent_is_integral() {
        for r in 2..=8 {
            for s in 1..r {
                for k in 1..=6 {
                    assert!(decomposition_exponent(&TruncParams::new(r, s, k, 0)).is_ok());
                }
            }
        }
        assert_eq!(decomposition_exponent(&TruncParams::new(3, 1, 1, 0)).unwrap(), 2);
    }
}
