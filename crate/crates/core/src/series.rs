//! Truncated power series over exact rationals, and the counting sequences
//! built from them.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    DivisionByZeroConstantTerm,
    #[error("square root needs constant term 1")]
    SqrtConstantTermNotOne,
    #[error("n! * [x^{index}] is {value}, not a nonnegative integer")]
    NonIntegerCoefficient { index: usize, value: String },
    #[error("{op} needs a second operand")]
    MissingOperand { op: &'static str },
}

/// `c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`.
///
/// Binary operations truncate to the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Series {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        Series { coeffs }
    }

    /// Integer coefficients, zero-padded (or truncated) to `order`.
    pub fn from_ints(values: &[i64], order: usize) -> Self {
        let coeffs = (0..=order).map(|k| rat(values.get(k).copied().unwrap_or(0))).collect();
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn div(&self, g: &Series) -> Result<Series, SeriesError> {
        let g0 = g.coeffs[0].clone();
        if g0.is_zero() {
            return Err(SeriesError::DivisionByZeroConstantTerm);
        }
        let order = self.order().min(g.order());
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                acc -= &g.coeffs[i] * &q[k - i];
            }
            q.push(acc / &g0);
        }
        Ok(Series { coeffs: q })
    }

    /// The square root with constant term `+1`.
    pub fn sqrt(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTermNotOne);
        }
        let two = rat(2);
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for k in 1..=self.order() {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc -= &b[i] * &b[k - i];
            }
            b.push(acc / &two);
        }
        Ok(Series { coeffs: b })
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series { coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series { coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k).fold(BigRational::zero(), |acc, i| acc + &self.coeffs[i] * &rhs.coeffs[k - i])
            })
            .collect();
        Series { coeffs }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Div,
    Sqrt,
}

/// Dispatches one truncated ring operation.
pub fn series_arith(op: SeriesOp, f: &Series, g: Option<&Series>) -> Result<Series, SeriesError> {
    let need = |name| g.ok_or(SeriesError::MissingOperand { op: name });
    match op {
        SeriesOp::Add => Ok(f + need("add")?),
        SeriesOp::Mul => Ok(f * need("mul")?),
        SeriesOp::Div => f.div(need("div")?),
        SeriesOp::Sqrt => f.sqrt(),
    }
}

/// `e^x` truncated at `order`.
pub fn series_exp_x(order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = BigRational::one();
    for k in 0..=order {
        if k > 0 {
            term /= rat(k as i64);
        }
        coeffs.push(term.clone());
    }
    Series { coeffs }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Reads `n! [x^n]` for every coefficient, insisting on nonnegative integers.
pub fn egf_coefficients(s: &Series) -> Result<Vec<BigInt>, SeriesError> {
    s.coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let v = c * BigRational::from_integer(factorial(n));
            if v.is_integer() && !v.is_negative() {
                Ok(v.to_integer())
            } else {
                Err(SeriesError::NonIntegerCoefficient { index: n, value: v.to_string() })
            }
        })
        .collect()
}

/// The series `sqrt(e^x / (2 - e^x))`.
pub fn b_series(order: usize) -> Series {
    let exp = series_exp_x(order);
    let denom = &Series::from_ints(&[2], order) - &exp;
    exp.div(&denom).and_then(|q| q.sqrt()).expect("constant terms are 1")
}

/// `b_0, ..., b_order` from the EGF `sqrt(e^x / (2 - e^x))`.
pub fn egf_b(order: usize) -> Result<Vec<BigInt>, SeriesError> {
    egf_coefficients(&b_series(order))
}

/// The series `sqrt((1 + x) / (1 - x))`.
pub fn p_series(order: usize) -> Series {
    let num = Series::from_ints(&[1, 1], order);
    let den = Series::from_ints(&[1, -1], order);
    num.div(&den).and_then(|q| q.sqrt()).expect("constant terms are 1")
}

/// `p_0, ..., p_order` from the EGF `sqrt((1 + x) / (1 - x))`.
pub fn egf_p(order: usize) -> Result<Vec<BigInt>, SeriesError> {
    egf_coefficients(&p_series(order))
}

/// `n!! = n (n-2) (n-4) ...`, with `m!! = 1` for `m <= 0` (so `(-1)!! = 1`).
pub fn double_factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// `((n-1)!!)^2` for even `n`, `n!! (n-2)!!` for odd `n`.
pub fn p_closed_form(n: usize) -> BigInt {
    let n = n as i64;
    if n % 2 == 0 {
        let d = double_factorial(n - 1);
        &d * &d
    } else {
        double_factorial(n) * double_factorial(n - 2)
    }
}

/// Stirling numbers of the second kind, `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()]; // S(0, 0)
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            let stay = if j < m { &row[j] * j } else { BigInt::zero() };
            next[j] = stay + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// `b_n = sum_k S(n, k) p_k`: group ordered partitions by their underlying
/// set partition.
pub fn b_via_composition(n: usize) -> BigInt {
    (0..=n).map(|k| stirling2(n, k) * p_closed_form(k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn sqrt_one_plus_x_matches_binomial_series() {
        // binom(1/2, k) computed independently by the product formula
        let order = 8;
        let s = Series::from_ints(&[1, 1], order).sqrt().unwrap();
        let mut binom = BigRational::one();
        for k in 0..=order {
            assert_eq!(s.coeff(k), &binom, "k = {k}");
            binom = binom * (q(1, 2) - rat(k as i64)) / rat(k as i64 + 1);
        }
        assert_eq!(s.coeff(1), &q(1, 2));
        assert_eq!(s.coeff(2), &q(-1, 8));
    }

    #[test]
    fn identities() {
        let f = Series::from_ints(&[3, 1, 4, 1, 5], 4);
        let one = Series::from_ints(&[1], 4);
        assert_eq!(&f * &one, f);
        let g = Series::from_ints(&[1, 1], 6);
        assert_eq!(g.div(&g).unwrap(), Series::from_ints(&[1], 6));
    }

    #[test]
    fn errors() {
        let f = Series::from_ints(&[0, 1], 3);
        assert_eq!(Series::from_ints(&[1], 3).div(&f), Err(SeriesError::DivisionByZeroConstantTerm));
        assert_eq!(f.sqrt(), Err(SeriesError::SqrtConstantTermNotOne));
        assert_eq!(Series::from_ints(&[4], 3).sqrt(), Err(SeriesError::SqrtConstantTermNotOne));
        assert!(matches!(
            series_arith(SeriesOp::Mul, &f, None),
            Err(SeriesError::MissingOperand { .. })
        ));
        let half = Series::new(vec![rat(1), q(1, 2)]);
        assert!(matches!(egf_coefficients(&half), Err(SeriesError::NonIntegerCoefficient { index: 1, .. })));
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = Series::from_ints(&[1, 1, 1], 2);
        let b = Series::from_ints(&[1, 1, 1, 1, 1], 4);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!(a.div(&b).unwrap().order(), 2);
    }

    #[test]
    fn exp_coefficients() {
        assert_eq!(series_exp_x(0).coeffs(), &[rat(1)]);
        assert_eq!(series_exp_x(2).coeffs(), &[rat(1), rat(1), q(1, 2)]);
        assert_eq!(series_exp_x(4).coeffs(), &[rat(1), rat(1), q(1, 2), q(1, 6), q(1, 24)]);
    }

    #[test]
    fn b_sequence() {
        assert_eq!(egf_b(7).unwrap(), ints(&[1, 1, 2, 7, 35, 226, 1787, 16717]));
        assert_eq!(egf_b(0).unwrap(), ints(&[1]));
        assert_eq!(egf_b(3).unwrap(), ints(&[1, 1, 2, 7]));
    }

    #[test]
    fn p_sequence() {
        assert_eq!(egf_p(5).unwrap(), ints(&[1, 1, 1, 3, 9, 45]));
        assert_eq!(egf_p(0).unwrap(), ints(&[1]));
        let p = egf_p(7).unwrap();
        assert_eq!(p[6], BigInt::from(225));
        assert_eq!(p[7], BigInt::from(1575));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(p_closed_form(4), BigInt::from(9));
        assert_eq!(p_closed_form(0), BigInt::from(1));
        assert_eq!(p_closed_form(5), BigInt::from(45));
        assert_eq!(double_factorial(-1), BigInt::from(1));
        assert_eq!(double_factorial(7), BigInt::from(105));
        assert_eq!(double_factorial(6), BigInt::from(48));
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(3, 0), BigInt::from(0));
        assert_eq!(stirling2(2, 3), BigInt::from(0));
        for n in 0..8 {
            assert_eq!(stirling2(n, n), BigInt::from(1));
        }
    }

    #[test]
    fn composition_values() {
        assert_eq!(b_via_composition(3), BigInt::from(7));
        assert_eq!(b_via_composition(0), BigInt::from(1));
        assert_eq!(b_via_composition(5), BigInt::from(226));
    }
}
