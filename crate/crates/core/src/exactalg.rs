//! Exact univariate polynomial and rational-function arithmetic over
//! arbitrary-precision rationals.
//!
//! Provides:
//! - [`Rational`]: arbitrary-precision rational scalar (always in lowest
//!   terms, positive denominator)
//! - [`Poly`]: dense univariate polynomial in `t`
//! - [`RatFn`]: normalized quotient of two polynomials
//!
//! Every series in this crate is ultimately a [`Poly`], but intermediate
//! values (Weyl-group trace terms, per-cycle building blocks) live in the
//! field of rational functions, including Laurent-type terms with a pure
//! power of `t` in the denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient field: arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

/// Dense univariate polynomial in `t` with [`Rational`] coefficients.
///
/// Invariant: the highest-index stored coefficient is nonzero; the zero
/// polynomial stores no coefficients and has degree `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * t^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(coeffs)
    }

    /// `t^deg`.
    pub fn t_power(deg: usize) -> Self {
        Poly::monomial(Rational::one(), deg)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial. The sentinel keeps the
    /// "minus infinity" case from leaking into integer arithmetic.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of `t^d` (zero beyond the stored degree).
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Drop all terms of degree > `n`.
    pub fn truncated(&self, n: usize) -> Poly {
        if self.coeffs.len() <= n + 1 {
            self.clone()
        } else {
            Poly::from_coeffs(self.coeffs[..=n].to_vec())
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Poly) -> Result<(Poly, Poly)> {
        if div.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let dd = div.degree().unwrap();
        let lead = div.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut q = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for j in 0..dd {
                let v = &rem[i + j] - &(&c * &div.coeffs[j]);
                rem[i + j] = v;
            }
            rem[i + dd] = Rational::zero();
            q[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(rem)))
    }

    /// Exact division; errors with [`Error::NonPolynomialResult`] when a
    /// remainder is left.
    pub fn exact_div(&self, div: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(div)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonPolynomialResult)
        }
    }

    /// Monic polynomial gcd by the Euclidean algorithm over the rationals.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.into_monic()
    }

    fn into_monic(self) -> Poly {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Index and value of the lowest-degree nonzero coefficient.
    pub fn lowest_nonzero(&self) -> Option<(usize, &Rational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = v;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let unit_coeff = mag.is_one() && d != 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            match d {
                0 => {}
                1 => {
                    if !unit_coeff {
                        write!(f, " ")?;
                    }
                    write!(f, "t")?;
                }
                _ => {
                    if !unit_coeff {
                        write!(f, " ")?;
                    }
                    write!(f, "t^{}", d)?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// RatFn
// ---------------------------------------------------------------------------

/// Rational function `num/den`, kept in the canonical normal form: gcd
/// divided out and the denominator scaled so that its lowest-degree nonzero
/// coefficient is 1. Two equal fractions therefore compare equal field-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<RatFn> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFn::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> RatFn {
        if num.is_zero() {
            return RatFn {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let (_, low) = den.lowest_nonzero().expect("nonzero denominator");
        let inv = low.recip();
        RatFn {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> RatFn {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFn {
        RatFn::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    /// `c * t^k` for a possibly negative exponent `k`.
    pub fn laurent(c: Rational, k: i64) -> RatFn {
        if k >= 0 {
            RatFn::from_poly(Poly::monomial(c, k as usize))
        } else {
            RatFn::normalized(Poly::constant(c), Poly::t_power((-k) as usize))
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFn::normalized(num, den)
    }

    pub fn sub(&self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFn::normalized(num, den)
    }

    pub fn mul(&self, rhs: &RatFn) -> RatFn {
        RatFn::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn div(&self, rhs: &RatFn) -> Result<RatFn> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFn::normalized(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    pub fn scale(&self, c: &Rational) -> RatFn {
        RatFn::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> RatFn {
        let mut acc = RatFn::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Degree of a rational function: `deg num - deg den` (`None` for 0).
    pub fn fn_degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }

    /// Exact conversion to a polynomial; the denominator must divide the
    /// numerator exactly.
    pub fn to_poly(&self) -> Result<Poly> {
        self.num.exact_div(&self.den)
    }

    /// Power-series expansion truncated at degree `n`. Requires a nonzero
    /// constant term in the denominator.
    pub fn expand_truncated(&self, n: usize) -> Result<Poly> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        if self.num.is_zero() {
            return Ok(Poly::zero());
        }
        let mut inv = vec![Rational::zero(); n + 1];
        let d0_inv = d0.recip();
        inv[0] = d0_inv.clone();
        for k in 1..=n {
            let mut s = Rational::zero();
            for j in 1..=k {
                let dj = self.den.coeff(j);
                if !dj.is_zero() {
                    s += &dj * &inv[k - j];
                }
            }
            inv[k] = -(s * &d0_inv);
        }
        let inv = Poly::from_coeffs(inv);
        Ok((&self.num.truncated(n) * &inv).truncated(n))
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(coeffs)
    }

    #[test]
    fn mul_difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
    }

    #[test]
    fn add_zero_is_identity() {
        let a = p(&[3, 0, 7, 2]);
        assert_eq!(&a + &Poly::zero(), a);
    }

    #[test]
    fn repeated_mul_binomial_cube() {
        // (1+t)^3 expanded by hand: 1 + 3t + 3t^2 + t^3.
        let b = p(&[1, 1]);
        assert_eq!(&(&b * &b) * &b, p(&[1, 3, 3, 1]));
        assert_eq!(b.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn zero_poly_degree_is_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn display_formats() {
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[1, 0, 1, 2]).to_string(), "1 + t^2 + 2 t^3");
        assert_eq!(p(&[0, 1]).to_string(), "t");
        assert_eq!(p(&[-1, 2, 0, -3]).to_string(), "-1 + 2 t - 3 t^3");
        assert_eq!(
            RatFn::new(p(&[1, 1]), p(&[1, -1])).unwrap().to_string(),
            "(1 + t) / (1 - t)"
        );
    }

    #[test]
    fn ratfn_add_common_denominator() {
        // 1/(1-t) + 1/(1+t) = 2/(1-t^2)
        let a = RatFn::new(Poly::one(), p(&[1, -1])).unwrap();
        let b = RatFn::new(Poly::one(), p(&[1, 1])).unwrap();
        let expect = RatFn::new(p(&[2]), p(&[1, 0, -1])).unwrap();
        assert_eq!(a.add(&b), expect);
    }

    #[test]
    fn ratfn_sub_self_is_zero() {
        let a = RatFn::new(p(&[2, 5]), p(&[1, -1, 3])).unwrap();
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a), RatFn::zero());
    }

    #[test]
    fn ratfn_normalizes_by_gcd() {
        // (1+t)/(1-t^2) = 1/(1-t)
        let a = RatFn::new(p(&[1, 1]), p(&[1, 0, -1])).unwrap();
        let expect = RatFn::new(Poly::one(), p(&[1, -1])).unwrap();
        assert_eq!(a, expect);
    }

    #[test]
    fn to_poly_geometric_factors() {
        let a = RatFn::new(p(&[1, 0, -1]), p(&[1, -1])).unwrap();
        assert_eq!(a.to_poly().unwrap(), p(&[1, 1]));
        let b = RatFn::new(p(&[1, 0, 0, 0, -1]), p(&[1, 0, -1])).unwrap();
        assert_eq!(b.to_poly().unwrap(), p(&[1, 0, 1]));
    }

    #[test]
    fn to_poly_rejects_non_divisible() {
        let a = RatFn::new(p(&[1, 1]), p(&[1, -1])).unwrap();
        assert_eq!(a.to_poly(), Err(Error::NonPolynomialResult));
    }

    #[test]
    fn expand_geometric_series() {
        let a = RatFn::new(Poly::one(), p(&[1, 0, -1])).unwrap();
        assert_eq!(a.expand_truncated(5).unwrap(), p(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn expand_truncates_at_zero() {
        let a = RatFn::from_poly(p(&[1, 1]));
        assert_eq!(a.expand_truncated(0).unwrap(), p(&[1]));
    }

    #[test]
    fn expand_squared_geometric() {
        // 1/(1-t)^2 = sum (k+1) t^k, checked against the hand expansion.
        let a = RatFn::new(Poly::one(), p(&[1, -2, 1])).unwrap();
        assert_eq!(a.expand_truncated(3).unwrap(), p(&[1, 2, 3, 4]));
    }

    #[test]
    fn expand_rejects_zero_constant_term() {
        let a = RatFn::laurent(rat_int(1), -1);
        assert_eq!(a.expand_truncated(4), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn zero_denominators_rejected() {
        assert_eq!(
            RatFn::new(p(&[1]), Poly::zero()),
            Err(Error::ZeroDenominator)
        );
        let a = RatFn::new(p(&[1, 1]), p(&[1, -1])).unwrap();
        assert_eq!(a.div(&RatFn::zero()), Err(Error::ZeroDenominator));
        assert_eq!(
            p(&[1, 2]).divrem(&Poly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn laurent_negative_power() {
        let a = RatFn::laurent(rat_int(3), -2);
        assert_eq!(a.num(), &p(&[3]));
        assert_eq!(a.den(), &p(&[0, 0, 1]));
        // t^2 * (3/t^2) = 3
        let back = a.mul(&RatFn::from_poly(Poly::t_power(2)));
        assert_eq!(back.to_poly().unwrap(), p(&[3]));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-9i64..=9, 1i64..=4), 0..6)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn poly_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn expand_consistent_across_bounds(a in arb_poly(), b in arb_poly(), n1 in 0usize..12, n2 in 0usize..12) {
            let mut den = b;
            if den.coeff(0).is_zero() {
                den = &den + &Poly::one();
            }
            let f = RatFn::new(a, den).unwrap();
            let e1 = f.expand_truncated(n1).unwrap();
            let e2 = f.expand_truncated(n2).unwrap();
            let n = n1.min(n2);
            prop_assert_eq!(e1.truncated(n), e2.truncated(n));
        }

        #[test]
        fn exact_div_roundtrip(a in arb_poly(), b in arb_poly()) {
            if !b.is_zero() {
                let prod = &a * &b;
                let f = RatFn::new(prod.clone(), b.clone()).unwrap();
                let q = f.to_poly().unwrap();
                prop_assert_eq!(&q * &b, prod);
            }
        }

        #[test]
        fn ratfn_normal_form_is_canonical(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            if !b.is_zero() && !c.is_zero() {
                let f1 = RatFn::new(a.clone(), b.clone()).unwrap();
                let f2 = RatFn::new(&a * &c, &b * &c).unwrap();
                prop_assert_eq!(f1, f2);
            }
        }
    }
}
