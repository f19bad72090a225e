use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::report::{CheckReport, Params, Violation, Witness};
use crate::{Error, Result};

/// A power series in `q` with integer coefficients, known exactly through
/// `q^order`.
///
/// Coefficients are stored sparsely and zero coefficients are never stored,
/// so two series are equal exactly when they have the same order and the
/// same coefficients. Arithmetic between two series yields a result valid to
/// the smaller of the two orders.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSeries {
    coeffs: BTreeMap<usize, BigInt>,
    order: usize,
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        IntSeries { coeffs: BTreeMap::new(), order }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c * q^degree`, or zero when `degree > order`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.add_term(degree, c.into());
        s
    }

    /// Build from dense coefficients `c_0, c_1, ...`; anything past `order`
    /// is dropped.
    pub fn from_coeffs<I, C>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (d, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.add_term(d, c.into());
        }
        s
    }

    /// Build from `(degree, coefficient)` pairs; repeated degrees accumulate.
    pub fn from_terms<I, C>(terms: I, order: usize) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (d, c) in terms {
            s.add_term(d, c.into());
        }
        s
    }

    fn from_dense(dense: Vec<BigInt>, order: usize) -> Self {
        let coeffs = dense
            .into_iter()
            .enumerate()
            .take(order + 1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        IntSeries { coeffs, order }
    }

    /// Add `c * q^degree` in place; a no-op when `degree > order`.
    pub fn add_term(&mut self, degree: usize, c: BigInt) {
        if degree > self.order || c.is_zero() {
            return;
        }
        match self.coeffs.entry(degree) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Exact coefficient of `q^n`. Degrees past the order are unknown, not
    /// zero, and are rejected.
    pub fn coeff(&self, n: usize) -> Result<BigInt> {
        if n > self.order {
            return Err(Error::BeyondOrder { degree: n, order: self.order });
        }
        Ok(self.coeffs.get(&n).cloned().unwrap_or_default())
    }

    /// Coefficient of `q^n` by reference; callers must stay within the order.
    pub(crate) fn coeff_ref(&self, n: usize) -> &BigInt {
        debug_assert!(n <= self.order);
        static ZERO: BigInt = BigInt::ZERO;
        self.coeffs.get(&n).unwrap_or(&ZERO)
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coefficients `c_0 ..= c_order`.
    pub fn to_vec(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::ZERO; self.order + 1];
        for (d, c) in &self.coeffs {
            v[*d] = c.clone();
        }
        v
    }

    /// Same series, valid only to `min(order, self.order())`.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        IntSeries {
            coeffs: self.coeffs.range(..=order).map(|(d, c)| (*d, c.clone())).collect(),
            order,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        IntSeries {
            coeffs: self.coeffs.iter().map(|(d, v)| (*d, v * c)).collect(),
            order: self.order,
        }
    }

    /// Multiply by `q^d`. The order is unchanged; terms pushed past it drop.
    pub fn shift_up(&self, d: usize) -> Self {
        IntSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| **e + d <= self.order)
                .map(|(e, c)| (e + d, c.clone()))
                .collect(),
            order: self.order,
        }
    }

    /// Divide by `q^d`. Fails if a nonzero coefficient sits below `q^d`;
    /// the result is valid to `order - d`.
    pub fn shift_down(&self, d: usize) -> Result<Self> {
        if d > self.order {
            return Err(Error::BeyondOrder { degree: d, order: self.order });
        }
        if let Some((e, _)) = self.coeffs.range(..d).next() {
            return Err(Error::NonzeroBelowShift { degree: *e, shift: d });
        }
        Ok(IntSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (e - d, c.clone())).collect(),
            order: self.order - d,
        })
    }

    /// Multiply by `q^d` for a signed `d`, shifting down when `d < 0`.
    pub fn shift(&self, d: i64) -> Result<Self> {
        if d >= 0 {
            Ok(self.shift_up(d as usize))
        } else {
            self.shift_down(d.unsigned_abs() as usize)
        }
    }

    /// Multiply by the single factor `1 - q^m`.
    pub fn mul_one_minus_q_pow(&self, m: usize) -> Self {
        let mut out = self.clone();
        for (d, c) in &self.coeffs {
            out.add_term(d + m, -c);
        }
        out
    }

    /// Multiply by `1 / (1 - q^m)` (`m >= 1`): a strided running sum.
    pub fn div_one_minus_q_pow(&self, m: usize) -> Self {
        assert!(m >= 1, "1/(1 - q^0) is not a power series");
        let mut dense = self.to_vec();
        for d in m..dense.len() {
            let prev = dense[d - m].clone();
            dense[d] += prev;
        }
        Self::from_dense(dense, self.order)
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &IntSeries) -> Self {
        let order = self.order.min(other.order);
        let (small, large) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut dense = vec![BigInt::ZERO; order + 1];
        for (i, a) in small.coeffs.range(..=order) {
            for (j, b) in large.coeffs.range(..=order - i) {
                dense[i + j] += a * b;
            }
        }
        Self::from_dense(dense, order)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse through the same order.
    ///
    /// Needs constant term `1` or `-1` so the result stays integral.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeff_ref(0).clone();
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstant { constant: c0 });
        }
        let order = self.order;
        let mut inv = vec![BigInt::ZERO; order + 1];
        inv[0] = c0.clone();
        for n in 1..=order {
            let mut acc = BigInt::ZERO;
            for (i, a) in self.coeffs.range(1..=n) {
                acc += a * &inv[n - i];
            }
            // c0 = ±1, so dividing by c0 is multiplying by it.
            inv[n] = -(acc * &c0);
        }
        Ok(Self::from_dense(inv, order))
    }

    /// Check that every coefficient of `q^n`, `n0 <= n <= order`, is
    /// nonnegative. The report's first violation is the lowest failing degree.
    pub fn nonneg_from(&self, n0: usize) -> Result<CheckReport> {
        if n0 > self.order {
            return Err(Error::BeyondOrder { degree: n0, order: self.order });
        }
        let mut report = CheckReport::new("nonneg", Params::default().with_order(self.order));
        for (d, c) in self.coeffs.range(n0..) {
            if c.is_negative() {
                report.push(Violation::new(Witness::Degree(*d), ">= 0", c));
            }
        }
        Ok(report)
    }
}

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntSeries({self})")
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            f.write_str("0")?;
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match *d {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match *d {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&IntSeries> for &IntSeries {
            type Output = IntSeries;
            fn $method(self, rhs: &IntSeries) -> IntSeries {
                $body(self, rhs)
            }
        }
        impl $trait<IntSeries> for IntSeries {
            type Output = IntSeries;
            fn $method(self, rhs: IntSeries) -> IntSeries {
                $body(&self, &rhs)
            }
        }
        impl $trait<&IntSeries> for IntSeries {
            type Output = IntSeries;
            fn $method(self, rhs: &IntSeries) -> IntSeries {
                $body(&self, rhs)
            }
        }
    };
}

fn add_impl(a: &IntSeries, b: &IntSeries) -> IntSeries {
    let mut out = a.truncate(b.order);
    for (d, c) in b.coeffs.range(..=out.order) {
        out.add_term(*d, c.clone());
    }
    out
}

fn sub_impl(a: &IntSeries, b: &IntSeries) -> IntSeries {
    let mut out = a.truncate(b.order);
    for (d, c) in b.coeffs.range(..=out.order) {
        out.add_term(*d, -c);
    }
    out
}

binop!(Add, add, add_impl);
binop!(Sub, sub, sub_impl);
binop!(Mul, mul, |a: &IntSeries, b: &IntSeries| IntSeries::mul(a, b));

impl Neg for &IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        IntSeries {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
            order: self.order,
        }
    }
}

impl Neg for IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coeffs: &[i64], order: usize) -> IntSeries {
        IntSeries::from_coeffs(coeffs.iter().copied(), order)
    }

    #[test]
    fn add_cancels_to_one() {
        let a = s(&[1, -1], 5);
        let b = s(&[0, 1], 5);
        assert_eq!(&a + &b, IntSeries::one(5));
    }

    #[test]
    fn orders_take_the_minimum() {
        let a = s(&[1, 2, 3], 7);
        let b = s(&[1], 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a - &b).order(), 3);
        assert_eq!(a.scale(&BigInt::from(5)).order(), 7);
    }

    #[test]
    fn scale_by_zero_annihilates() {
        assert!(s(&[1, 1], 4).scale(&BigInt::ZERO).is_zero());
    }

    #[test]
    fn sub_self_is_zero() {
        let a = s(&[3, -1, 4, 1, -5], 4);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn telescoping_product() {
        let a = s(&[1, -1], 3);
        let b = s(&[1, 1, 1, 1], 3);
        assert_eq!(&a * &b, IntSeries::one(3));
    }

    #[test]
    fn mul_by_one() {
        let a = s(&[2, 0, -7, 1], 6);
        assert_eq!(&a * &IntSeries::one(6), a);
    }

    #[test]
    fn geometric_inverse() {
        let inv = s(&[1, -1], 3).invert().unwrap();
        assert_eq!(inv, s(&[1, 1, 1, 1], 3));
    }

    #[test]
    fn invert_negative_unit() {
        let a = s(&[-1, 2, 0, 1], 8);
        let inv = a.invert().unwrap();
        assert_eq!(&a * &inv, IntSeries::one(8));
        assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn invert_rejects_non_unit() {
        let err = s(&[2, 1], 4).invert().unwrap_err();
        assert_eq!(err, Error::NonUnitConstant { constant: BigInt::from(2) });
        assert!(IntSeries::zero(4).invert().is_err());
    }

    #[test]
    fn coeff_beyond_order_is_an_error() {
        let a = s(&[1, -1], 1);
        assert_eq!(a.coeff(1).unwrap(), BigInt::from(-1));
        assert_eq!(a.coeff(2), Err(Error::BeyondOrder { degree: 2, order: 1 }));
    }

    #[test]
    fn nonneg_reports_first_violation() {
        let r = s(&[1, -1], 1).nonneg_from(0).unwrap();
        assert!(!r.pass());
        assert_eq!(r.violations[0].witness, Witness::Degree(1));
        assert!(s(&[-1, 1], 1).nonneg_from(1).unwrap().pass());
        assert!(s(&[1], 1).nonneg_from(2).is_err());
    }

    #[test]
    fn one_minus_q_factor_round_trip() {
        let a = s(&[1, 4, -2, 0, 9, 3], 5);
        assert_eq!(a.mul_one_minus_q_pow(2).div_one_minus_q_pow(2), a);
        let geometric = IntSeries::one(5).mul_one_minus_q_pow(3).invert().unwrap();
        assert_eq!(a.div_one_minus_q_pow(3), &a * &geometric);
    }

    #[test]
    fn shifts() {
        let a = s(&[0, 0, 1, 2], 5);
        let down = a.shift_down(2).unwrap();
        assert_eq!(down, s(&[1, 2], 3));
        assert_eq!(down.shift_up(2).truncate(3), a.truncate(3));
        assert_eq!(a.shift_down(3), Err(Error::NonzeroBelowShift { degree: 2, shift: 3 }));
        assert_eq!(a.shift(-2).unwrap(), down);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", s(&[1, -1, 0, 3], 3)), "1 - q + 3*q^3 + O(q^4)");
        assert_eq!(alloc::format!("{}", IntSeries::zero(2)), "0 + O(q^3)");
    }
}
