//! Both sides of the half-residue truncated identity for `1 <= S <= R/2`.

use alloc::vec::Vec;

use super::identities::{q_binomial, truncated_jtp_sum};
use super::{with_sign, TruncParams};
use crate::qseries::{reciprocal_pochhammer, triple_product};
use crate::report::CheckReport;
use crate::{IntSeries, Result};

/// `1/(q^R, q^S, q^{R-S}; q^R)_∞ Σ_{n=0}^{m-1} (-1)^n q^{C(n+1,2)R - nS}
/// (1 - q^{(2n+1)S})`, with `m = p.k`.
pub fn wang_yee_lhs(p: &TruncParams) -> Result<IntSeries> {
    p.validate_wang_yee()?;
    let sum = truncated_jtp_sum(p.ri(), p.si(), p.ki(), p.order)?;
    Ok(&triple_product(p.r, p.s, p.order)?.invert()? * &sum)
}

/// `1 + (-1)^{m-1} q^{C(m,2)R} Σ_{n>=m} T_n [n-1 choose m-1]_{q^R}` with
///
/// `T_n = Σ_{i+j+h+k=n} q^{(mj+hk)R + (h-k)S + nR} /
///        ((q^R;q^R)_i (q^R;q^R)_j (q^R;q^R)_h (q^R;q^R)_k)`.
///
/// The outer sum stops once `C(m,2)R + n(R-S) > N`, the least exponent
/// any `T_n` term can reach. `T_n` is assembled as a convolution over
/// `(i + j) + (h + k) = n`: the `nR` weight is split across the four
/// indices, which keeps every piece a power series.
pub fn wang_yee_rhs(p: &TruncParams) -> Result<IntSeries> {
    p.validate_wang_yee()?;
    let (r, s, m) = (p.r as usize, p.s as usize, p.k as usize);
    let order = p.order;
    let base = m * (m - 1) / 2 * r;
    if base > order {
        return Ok(IntSeries::one(order));
    }
    let nmax = (order - base) / (r - s);

    // 1/(q^R;q^R)_i for i <= nmax
    let mut inv_poch = Vec::with_capacity(nmax + 1);
    inv_poch.push(IntSeries::one(order));
    for i in 1..=nmax {
        let next = reciprocal_pochhammer(inv_poch[i - 1].clone(), r * i, r, 1);
        inv_poch.push(next);
    }

    // u[t] = Σ_{i+j=t} q^{iR + jR(m+1)} / ((q^R)_i (q^R)_j)
    // v[t] = Σ_{h+k=t} q^{hkR + h(R+S) + k(R-S)} / ((q^R)_h (q^R)_k)
    let mut u = Vec::with_capacity(nmax + 1);
    let mut v = Vec::with_capacity(nmax + 1);
    for t in 0..=nmax {
        let mut ut = IntSeries::zero(order);
        let mut vt = IntSeries::zero(order);
        for a in 0..=t {
            let b = t - a;
            let e_u = a * r + b * r * (m + 1);
            if e_u <= order {
                ut = ut + (&inv_poch[a] * &inv_poch[b]).shift_up(e_u);
            }
            let e_v = a * b * r + a * (r + s) + b * (r - s);
            if e_v <= order {
                vt = vt + (&inv_poch[a] * &inv_poch[b]).shift_up(e_v);
            }
        }
        u.push(ut);
        v.push(vt);
    }

    let mut outer = IntSeries::zero(order);
    for n in m..=nmax {
        let mut t_n = IntSeries::zero(order);
        for a in 0..=n {
            if !u[a].is_zero() && !v[n - a].is_zero() {
                t_n = t_n + &u[a] * &v[n - a];
            }
        }
        let binom = q_binomial(n - 1, m - 1, r).to_series(order);
        outer = outer + &t_n * &binom;
    }
    let tail = with_sign(p.ki() - 1, outer.shift_up(base));
    Ok(IntSeries::one(order) + tail)
}

/// Both sides agree through order `N`.
pub fn wang_yee_check(p: &TruncParams) -> Result<CheckReport> {
    let lhs = wang_yee_lhs(p)?;
    let rhs = wang_yee_rhs(p)?;
    let mut params = p.params();
    params.m = params.k.take();
    let mut report = CheckReport::new("wang-yee", params);
    report.compare_series(&lhs, &rhs, p.order);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::pochhammer_finite;

    /// The quadruple sum enumerated term by term over compositions of `n`
    /// into four parts, exactly as written, with signed exponents resolved
    /// per term.
    fn rhs_by_compositions(r: usize, s: usize, m: usize, order: usize) -> IntSeries {
        let inv = |i: usize| pochhammer_finite(r, r, i, order).unwrap().invert().unwrap();
        let base = m * (m - 1) / 2 * r;
        let mut outer = IntSeries::zero(order);
        let mut n = m;
        while base + n * (r - s) <= order {
            let mut t_n = IntSeries::zero(order);
            for i in 0..=n {
                for j in 0..=n - i {
                    for h in 0..=n - i - j {
                        let k = n - i - j - h;
                        let e = ((m * j + h * k) * r + n * r) as i64 + (h as i64 - k as i64) * s as i64;
                        assert!(e >= 0);
                        let e = e as usize;
                        if e > order {
                            continue;
                        }
                        let den = &(&inv(i) * &inv(j)) * &(&inv(h) * &inv(k));
                        t_n = t_n + den.shift_up(e);
                    }
                }
            }
            outer = outer + &t_n * &q_binomial(n - 1, m - 1, r).to_series(order);
            n += 1;
        }
        let tail = with_sign(m as i64 - 1, outer.shift_up(base));
        IntSeries::one(order) + tail
    }

    #[test]
    fn grouped_convolution_matches_compositions() {
        for (r, s, m) in [(3, 1, 1), (3, 1, 2), (4, 2, 2), (5, 2, 3)] {
            let p = TruncParams::new(r as u32, s as u32, m as u32, 24);
            assert_eq!(wang_yee_rhs(&p).unwrap(), rhs_by_compositions(r, s, m, 24), "({r},{s},{m})");
        }
    }

    #[test]
    fn identity_small() {
        for (r, s, m) in [(3, 1, 1), (3, 1, 2), (4, 2, 2), (2, 1, 2)] {
            let rep = wang_yee_check(&TruncParams::new(r, s, m, 40)).unwrap();
            assert!(rep.pass(), "{rep} {:?}", rep.violations);
        }
    }

    #[test]
    fn rejects_s_above_half() {
        assert!(wang_yee_check(&TruncParams::new(5, 3, 1, 10)).is_err());
        assert!(wang_yee_check(&TruncParams::new(4, 1, 0, 10)).is_err());
    }
}
