use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{parity_sign, with_sign, TruncParams};
use crate::bijections::{a_set_counts, EMPTY_RANK_NOTE};
use crate::partitions::{m_k, PartitionTable};
use crate::qseries::{
    bilateral_theta, pochhammer, reciprocal_pochhammer, theta_sum, triple_product,
};
use crate::report::{CheckReport, Params, Violation, Witness};
use crate::{Error, IntSeries, QPolynomial, Result};

/// Gaussian binomial `[n choose k]` in the variable `q^step`, by the Pascal
/// recurrence `[n,k] = [n-1,k-1] + q^{k·step} [n-1,k]`. Zero unless
/// `0 <= k <= n`.
pub fn q_binomial(n: usize, k: usize, step: usize) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    // row[i] = [row_n choose i] for i <= k
    let mut row: Vec<QPolynomial> = alloc::vec![QPolynomial::one()];
    for m in 1..=n {
        let width = k.min(m);
        let mut next = Vec::with_capacity(width + 1);
        for i in 0..=width {
            let left = if i == 0 { QPolynomial::zero() } else { row[i - 1].clone() };
            let up = row.get(i).map(|p| p.shift(i * step)).unwrap_or_default();
            next.push(&left + &up);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `Σ_{j=0}^{k-1} (-1)^j q^{Rj(j+1)/2 - Sj} (1 - q^{(2j+1)S})`, the
/// truncated theta sum shared by the conjecture and the half-residue truncated identity.
pub(crate) fn truncated_jtp_sum(r: i64, s: i64, k: i64, order: usize) -> Result<IntSeries> {
    let head = theta_sum(order, Some(0), Some(k - 1), |j| r * j * (j + 1) / 2 - s * j, parity_sign)?;
    let tail = theta_sum(order, Some(0), Some(k - 1), |j| r * j * (j + 1) / 2 + s * (j + 1), parity_sign)?;
    Ok(head - tail)
}

/// Left side of the truncated pentagonal identity:
/// `1/(q;q)_∞ · Σ_{j=0}^{k-1} (-1)^j q^{j(3j+1)/2} (1 - q^{2j+1})`.
pub fn am_lhs(k: u32, order: usize) -> Result<IntSeries> {
    if k == 0 {
        return Err(Error::ZeroParameter { name: "k" });
    }
    let sum = truncated_jtp_sum(3, 1, k as i64, order)?;
    Ok(&pochhammer(1, 1, order)?.invert()? * &sum)
}

/// Right side of the truncated pentagonal identity:
/// `1 + (-1)^{k-1} Σ_{n>=k} q^{C(k,2)+(k+1)n} [n-1 choose k-1] / (q;q)_n`,
/// with the sum cut once `C(k,2) + (k+1)n > order`.
pub fn am_rhs(k: u32, order: usize) -> Result<IntSeries> {
    if k == 0 {
        return Err(Error::ZeroParameter { name: "k" });
    }
    let k = k as usize;
    let base = k * (k - 1) / 2;
    let mut sum = IntSeries::zero(order);
    // 1/(q;q)_n, extended one factor per step
    let mut inv = reciprocal_pochhammer(IntSeries::one(order), 1, 1, k - 1);
    for n in k.. {
        let e = base + (k + 1) * n;
        if e > order {
            break;
        }
        inv = inv.div_one_minus_q_pow(n);
        let term = q_binomial(n - 1, k - 1, 1).shift(e).to_series(order);
        sum = sum + &inv * &term;
    }
    let tail = with_sign(k as i64 - 1, sum);
    Ok(IntSeries::one(order) + tail)
}

pub fn am_check(k: u32, order: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("am-identity", Params::default().with_k(k).with_order(order));
    report.compare_series(&am_lhs(k, order)?, &am_rhs(k, order)?, order);
    Ok(report)
}

/// `(-1)^{k-1} / (q^S, q^{R-S}, q^R; q^R)_∞ · Σ_{j=0}^{k-1} (-1)^j
/// q^{Rj(j+1)/2 - Sj} (1 - q^{(2j+1)S})`.
pub fn conjecture_series(p: &TruncParams) -> Result<IntSeries> {
    p.validate()?;
    let sum = truncated_jtp_sum(p.ri(), p.si(), p.ki(), p.order)?;
    let inv = triple_product(p.r, p.s, p.order)?.invert()?;
    Ok(with_sign(p.ki() - 1, &inv * &sum))
}

/// Nonnegativity of [`conjecture_series`] from `q^1` on.
pub fn conjecture_check(p: &TruncParams) -> Result<CheckReport> {
    let series = conjecture_series(p)?;
    let mut report = CheckReport::new("conjecture", p.params());
    report.note(p.regime().note());
    report.require_nonneg(&series, 1, p.order);
    Ok(report)
}

/// `(-1)^k / (q;q)_∞^3 · Σ_{j=0}^{k} (-1)^j (2j+1) q^{j(j+1)/2}`.
pub fn gz_series(k: u32, order: usize) -> Result<IntSeries> {
    if k == 0 {
        return Err(Error::ZeroParameter { name: "k" });
    }
    let sum = theta_sum(order, Some(0), Some(k as i64), |j| j * (j + 1) / 2, |j| {
        parity_sign(j) * BigInt::from(2 * j + 1)
    })?;
    let inv = pochhammer(1, 1, order)?.pow(3).invert()?;
    Ok(with_sign(k as i64, &inv * &sum))
}

pub fn gz_check(k: u32, order: usize) -> Result<CheckReport> {
    let series = gz_series(k, order)?;
    let mut report = CheckReport::new("gz", Params::default().with_k(k).with_order(order));
    report.require_nonneg(&series, 1, order);
    Ok(report)
}

/// `(q;q)_∞^3 = Σ_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}` through `order`.
pub fn jacobi_cube_check(order: usize) -> Result<CheckReport> {
    let lhs = pochhammer(1, 1, order)?.pow(3);
    let rhs = theta_sum(order, Some(0), None, |j| j * (j + 1) / 2, |j| {
        parity_sign(j) * BigInt::from(2 * j + 1)
    })?;
    let mut report = CheckReport::new("jacobi-cube", Params::default().with_order(order));
    report.compare_series(&lhs, &rhs, order);
    Ok(report)
}

/// Product side against sum side of the specialised triple product at
/// `(R, S)`; for `(3, 1)` the product is also checked against `(q;q)_∞`.
pub fn pentagonal_check(r: u32, s: u32, order: usize) -> Result<CheckReport> {
    let theta = bilateral_theta(r, s, order)?;
    let product = triple_product(r, s, order)?;
    let mut report = CheckReport::new("pentagonal", Params::rs(r, s).with_order(order));
    report.compare_series(&product, &theta, order);
    if (r, s) == (3, 1) {
        report.compare_series(&pochhammer(1, 1, order)?, &theta, order);
    }
    Ok(report)
}

/// For `1 <= n <= nmax`: the coefficient of `q^n` in `(-1)^{k-1} am_lhs(k)`,
/// the brute-force count `M_k(n)` and `|A_{k-1}^(2)(n)| - |A_{-k}^(1)(n)|`
/// must all agree.
pub fn mk_identity_report(table: &PartitionTable, nmax: usize, k: u32) -> Result<CheckReport> {
    let mut report =
        CheckReport::new("mk-identity", Params::default().with_k(k).with_n(nmax as u64));
    report.note(EMPTY_RANK_NOTE);
    let series = with_sign(k as i64 - 1, am_lhs(k, nmax)?);
    for n in 1..=nmax {
        let coeff = series.coeff(n)?;
        let count = BigInt::from(m_k(k as usize, n)?);
        let diff = BigInt::from(a_set_counts(table, n, k as usize).difference());
        if coeff != count {
            report.push(Violation::new(Witness::Degree(n), format!("M_k = {count}"), &coeff));
        }
        if diff != count {
            report.push(Violation::new(Witness::Degree(n), format!("M_k = {count}"), format!("A-set difference {diff}")));
        }
    }
    Ok(report)
}
