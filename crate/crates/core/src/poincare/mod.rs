//! Exact rational functions in one variable, their power-series expansions,
//! and the ratios of Poincaré series attached to `H¹` classes.

mod catalog;
mod poly;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::group::GroupError;
use crate::h1::H1Error;

pub use catalog::{sum_h1_ratios, Catalog, CatalogEntry, H1RatioSum, RatioRow};
pub use poly::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PoincareError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at t = 0; no power series expansion")]
    NoExpansion,
    #[error("pole of order {order} at t = 1")]
    PoleAtOne { order: usize },
    #[error("partial sum of the denominator series vanishes at index {index}")]
    ZeroPartialSum { index: usize },
    #[error("no catalog entry is isomorphic to {label}")]
    NotInCatalog { label: String },
    #[error("catalog line {line}: {reason}")]
    Catalog { line: usize, reason: String },
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("series check failed at degree {degree}")]
    ExpansionMismatch { degree: usize },
    #[error("ratio for class {class} has a pole of order {order} at t = 1")]
    RatioPole { class: String, order: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    H1(#[from] H1Error),
}

/// `num / den` in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, PoincareError> {
        if den.is_zero() {
            return Err(PoincareError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::from_polynomial(Polynomial::zero()));
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero").recip();
        Ok(RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self, PoincareError> {
        Self::new(Polynomial::from_ints(num), Polynomial::from_ints(den))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .expect("product of nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
            .expect("product of nonzero denominators")
    }

    pub fn div(&self, o: &Self) -> Result<Self, PoincareError> {
        if o.is_zero() {
            return Err(PoincareError::DivisionByZero);
        }
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    /// Order of the pole at `t = 1`, or `0` if there is none.
    pub fn pole_order_at_one(&self) -> usize {
        let (zeros, _) = self.num.split_root_one();
        let (poles, _) = self.den.split_root_one();
        poles.saturating_sub(zeros)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

pub fn rf_arith(
    op: Op,
    a: &RationalFunction,
    b: &RationalFunction,
) -> Result<RationalFunction, PoincareError> {
    Ok(match op {
        Op::Add => a.add(b),
        Op::Sub => a.sub(b),
        Op::Mul => a.mul(b),
        Op::Div => a.div(b)?,
    })
}

/// Coefficients `a_0 … a_n` of the expansion at `t = 0`, from
/// `den · Σ a_i t^i = num`. The result is checked by multiplying back.
pub fn series_coefficients(
    h: &RationalFunction,
    n: usize,
) -> Result<Vec<BigRational>, PoincareError> {
    let d0 = h.den.coeff(0);
    if d0.is_zero() {
        return Err(PoincareError::NoExpansion);
    }
    let den = h.den.coeffs();
    let inv0 = d0.recip();
    let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = h.num.coeff(k);
        for i in 1..den.len().min(k + 1) {
            acc -= &den[i] * &a[k - i];
        }
        a.push(acc * &inv0);
    }
    for k in 0..=n {
        let mut acc = BigRational::zero();
        for (i, d) in den.iter().enumerate().take(k + 1) {
            acc += d * &a[k - i];
        }
        if acc != h.num.coeff(k) {
            return Err(PoincareError::ExpansionMismatch { degree: k });
        }
    }
    Ok(a)
}

/// `h(1)` after cancelling every factor `t − 1` shared by numerator and
/// denominator.
pub fn evaluate_at_one(h: &RationalFunction) -> Result<BigRational, PoincareError> {
    let (zeros, num) = h.num.split_root_one();
    let (poles, den) = h.den.split_root_one();
    if h.num.is_zero() {
        return Ok(BigRational::zero());
    }
    if poles > zeros {
        return Err(PoincareError::PoleAtOne {
            order: poles - zeros,
        });
    }
    if zeros > poles {
        return Ok(BigRational::zero());
    }
    let one = BigRational::one();
    Ok(num.eval(&one) / den.eval(&one))
}

/// `C_n = (a_0 + … + a_n) / (b_0 + … + b_n)` for the expansions of `f` and `g`.
/// Every partial sum of `g` up to `n` must be nonzero.
pub fn partial_sum_ratio(
    f: &RationalFunction,
    g: &RationalFunction,
    n: usize,
) -> Result<BigRational, PoincareError> {
    let a = series_coefficients(f, n)?;
    let b = series_coefficients(g, n)?;
    let mut sa = BigRational::zero();
    let mut sb = BigRational::zero();
    for (index, (x, y)) in a.iter().zip(&b).enumerate() {
        sa += x;
        sb += y;
        if sb.is_zero() {
            return Err(PoincareError::ZeroPartialSum { index });
        }
    }
    Ok(sa / sb)
}

#[cfg(test)]
mod tests {
    use super::poly::int;
    use super::*;

    fn geometric() -> RationalFunction {
        RationalFunction::from_ints(&[1], &[1, -1]).unwrap()
    }

    fn p_s4() -> RationalFunction {
        RationalFunction::from_ints(&[1, 0, 1], &[1, -1, 0, -1, 1]).unwrap()
    }

    fn p_v4() -> RationalFunction {
        RationalFunction::from_ints(&[1], &[1, -2, 1]).unwrap()
    }

    #[test]
    fn canonical_form() {
        let g = geometric();
        assert_eq!(g.den().leading(), Some(&int(1)));
        let sq = g.mul(&g);
        assert_eq!(sq, p_v4());
        assert!(g.sub(&g).is_zero());
        assert_eq!(g.sub(&g).den(), &Polynomial::one());
        assert!(matches!(
            RationalFunction::from_ints(&[1], &[0]),
            Err(PoincareError::ZeroDenominator)
        ));
        assert!(matches!(
            rf_arith(Op::Div, &g, &g.sub(&g)),
            Err(PoincareError::DivisionByZero)
        ));
    }

    #[test]
    fn v4_over_s4() {
        let r = rf_arith(Op::Div, &p_v4(), &p_s4()).unwrap();
        assert_eq!(r, RationalFunction::from_ints(&[1, 1, 1], &[1, 0, 1]).unwrap());
        assert_eq!(evaluate_at_one(&r).unwrap(), int(3) / int(2));
    }

    #[test]
    fn expansions() {
        let sq = geometric().mul(&geometric());
        let c = series_coefficients(&sq, 5).unwrap();
        assert_eq!(c, (1..=6).map(int).collect::<Vec<_>>());
        let seven = RationalFunction::from_polynomial(Polynomial::from_ints(&[7]));
        assert_eq!(series_coefficients(&seven, 2).unwrap(), vec![int(7), int(0), int(0)]);
        let t_inv = RationalFunction::from_ints(&[1], &[0, 1]).unwrap();
        assert!(matches!(series_coefficients(&t_inv, 3), Err(PoincareError::NoExpansion)));
    }

    #[test]
    fn poles() {
        assert!(matches!(
            evaluate_at_one(&p_s4()),
            Err(PoincareError::PoleAtOne { order: 2 })
        ));
        assert_eq!(p_s4().pole_order_at_one(), 2);
        let one = RationalFunction::from_polynomial(Polynomial::one());
        assert_eq!(evaluate_at_one(&one).unwrap(), int(1));
        // (1 - t) / (1 - t^2) = 1 / (1 + t)
        let r = RationalFunction::from_ints(&[1, -1], &[1, 0, -1]).unwrap();
        assert_eq!(evaluate_at_one(&r).unwrap(), int(1) / int(2));
    }

    #[test]
    fn partial_sums() {
        let one = RationalFunction::from_polynomial(Polynomial::one());
        assert_eq!(partial_sum_ratio(&one, &geometric(), 3).unwrap(), int(1) / int(4));
        assert_eq!(partial_sum_ratio(&p_s4(), &p_s4(), 20).unwrap(), int(1));
        let alternating = RationalFunction::from_ints(&[1], &[1, 1]).unwrap();
        assert!(matches!(
            partial_sum_ratio(&one, &alternating, 3),
            Err(PoincareError::ZeroPartialSum { index: 1 })
        ));
    }
}
