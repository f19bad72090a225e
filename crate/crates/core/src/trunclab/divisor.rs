//! The truncated log-derivative series `D_k(q)` and its `(3,1)`
//! specialisations in terms of `p(n)`.

use alloc::format;

use num_bigint::BigInt;

use super::{parity_sign, with_sign, TruncParams};
use crate::partitions::{divisor_diff, gpn, PartitionTable};
use crate::qseries::{lambert_diff, theta_sum, triple_product};
use crate::report::{CheckReport, Params, Violation, Witness};
use crate::{IntSeries, Result};

/// `Σ_{j=-k}^{k-1} (-1)^j j q^{Rj(j+1)/2 - Sj}`.
pub(crate) fn weighted_theta(p: &TruncParams, order: usize) -> Result<IntSeries> {
    let (r, s) = (p.ri(), p.si());
    theta_sum(order, Some(-p.ki()), Some(p.ki() - 1), |j| r * j * (j + 1) / 2 - s * j, |j| {
        parity_sign(j) * BigInt::from(j)
    })
}

/// `D_k(q)`: the weighted truncated theta sum over the triple product, minus
/// the Lambert divisor series.
pub fn d_series(p: &TruncParams) -> Result<IntSeries> {
    p.validate()?;
    let inv = triple_product(p.r, p.s, p.order)?.invert()?;
    let head = &weighted_theta(p, p.order)? * &inv;
    Ok(head - lambert_diff(p.r, p.s, p.order)?)
}

/// `(-1)^{k-1} D_k(q)`, claimed nonnegative from `q^1` on.
pub fn theorem13_series(p: &TruncParams) -> Result<IntSeries> {
    Ok(with_sign(p.ki() - 1, d_series(p)?))
}

/// Every coefficient of [`theorem13_series`] for `1 <= n <= N` is `>= 0`.
/// The constant term is not part of the claim.
pub fn theorem13_check(p: &TruncParams) -> Result<CheckReport> {
    let series = theorem13_series(p)?;
    let mut report = CheckReport::new("theorem13", p.params());
    report.note(p.regime().note());
    report.require_nonneg(&series, 1, p.order);
    Ok(report)
}

/// `Σ_{j=-k}^{k-1} (-1)^j j p(n - j(3j+1)/2)`.
pub fn corollary14_lhs(table: &PartitionTable, n: usize, k: u32) -> BigInt {
    let k = k as i64;
    (-k..k)
        .map(|j| parity_sign(j) * BigInt::from(j) * table.signed(n as i64 - gpn(j)))
        .sum()
}

/// The full sum `Σ_{b(j) <= n} (-1)^j j p(n - b(j))`.
pub fn recurrence117_lhs(table: &PartitionTable, n: usize) -> BigInt {
    let mut acc = BigInt::ZERO;
    for j in crate::bijections::pentagonal_indices(n) {
        acc += parity_sign(j) * BigInt::from(j) * table.signed(n as i64 - gpn(j));
    }
    acc
}

/// For `1 <= n <= nmax`: the truncated sum is `>=` the divisor difference
/// `d_{1,3}(n) - d_{2,3}(n)` when `k` is odd and `<=` it when `k` is even.
pub fn corollary14_report(table: &PartitionTable, k: u32, nmax: usize) -> Result<CheckReport> {
    let mut report =
        CheckReport::new("corollary14", Params::default().with_k(k).with_n(nmax as u64));
    for n in 1..=nmax {
        let lhs = corollary14_lhs(table, n, k);
        let rhs = BigInt::from(divisor_diff(n, 3, 1)?);
        let ok = if k % 2 == 1 { lhs >= rhs } else { lhs <= rhs };
        if !ok {
            let dir = if k % 2 == 1 { ">=" } else { "<=" };
            report.push(Violation::new(Witness::Degree(n), format!("{dir} {rhs}"), lhs));
        }
    }
    Ok(report)
}

/// `Σ_{b(j) <= n} (-1)^j j p(n - b(j)) = d_{1,3}(n) - d_{2,3}(n)` for
/// `1 <= n <= nmax`.
pub fn recurrence117_report(table: &PartitionTable, nmax: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("recurrence117", Params::default().with_n(nmax as u64));
    for n in 1..=nmax {
        let lhs = recurrence117_lhs(table, n);
        let rhs = BigInt::from(divisor_diff(n, 3, 1)?);
        if lhs != rhs {
            report.push(Violation::new(Witness::Degree(n), rhs, lhs));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_series_hand_values() {
        let d = d_series(&TruncParams::new(3, 1, 1, 20)).unwrap();
        assert_eq!(d.coeff(1).unwrap(), BigInt::from(0));
        assert_eq!(d.coeff(2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn d_series_symmetric_case_has_no_lambert_part() {
        let p = TruncParams::new(2, 1, 2, 40);
        let inv = triple_product(2, 1, 40).unwrap().invert().unwrap();
        assert_eq!(d_series(&p).unwrap(), &weighted_theta(&p, 40).unwrap() * &inv);
    }

    #[test]
    fn series_coefficients_match_p_sums() {
        let table = PartitionTable::new(60);
        for k in 1..=4 {
            let d = d_series(&TruncParams::new(3, 1, k, 60)).unwrap();
            for n in 1..=60 {
                let expected = corollary14_lhs(&table, n, k) - BigInt::from(divisor_diff(n, 3, 1).unwrap());
                assert_eq!(d.coeff(n).unwrap(), expected, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn corollary_hand_values() {
        let table = PartitionTable::new(10);
        assert_eq!(corollary14_lhs(&table, 7, 1), BigInt::from(11));
        assert_eq!(corollary14_lhs(&table, 7, 2), BigInt::from(0));
        assert!(corollary14_report(&table, 1, 10).unwrap().pass());
        assert!(corollary14_report(&table, 2, 10).unwrap().pass());
    }

    #[test]
    fn recurrence_small() {
        let table = PartitionTable::new(40);
        assert!(recurrence117_report(&table, 40).unwrap().pass());
    }

    #[test]
    fn theorem13_small_grid() {
        for (r, s) in [(3, 1), (4, 1), (5, 2), (2, 1), (6, 5)] {
            for k in 1..=3 {
                let rep = theorem13_check(&TruncParams::new(r, s, k, 80)).unwrap();
                assert!(rep.pass(), "{rep}");
            }
        }
    }
}
