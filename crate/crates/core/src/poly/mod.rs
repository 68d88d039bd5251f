//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty vector; its degree
//! is `None`, never a negative number.

mod gcd;
mod linear;
mod resultant;
mod sturm;

pub use gcd::{squarefree_decomposition, SquarefreeFactor};
pub use linear::LinearPoly;
pub use resultant::{resultant, sylvester_resultant, Bivariate, Eliminate};
pub use sturm::{real_root_count, RealRootCount};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, exponent: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); exponent + 1];
        coeffs[exponent] = c;
        Self { coeffs }
    }

    /// `x - root`.
    pub fn linear_factor(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for callers that have
    /// already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff_ref(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rational::int(x))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self(inner(x))`, by Horner's rule.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// `self(l(x))` for a degree-one substitution.
    pub fn affine_substitute(&self, l: &LinearPoly) -> Polynomial {
        self.compose(&l.to_polynomial())
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor
            .degree()
            .expect("polynomial division by the zero polynomial");
        let inv_lc = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        self.div_rem(divisor).1
    }

    /// Digits of `self` in base `h`: `self = sum a_i h^i` with `deg a_i < deg h`.
    pub fn h_adic_expansion(&self, h: &Polynomial) -> Result<Vec<Polynomial>> {
        if h.degree().unwrap_or(0) < 1 {
            return Err(Error::invalid("h-adic expansion needs deg h >= 1"));
        }
        let mut digits = Vec::new();
        let mut rest = self.clone();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(h);
            digits.push(r);
            rest = q;
        }
        if digits.is_empty() {
            digits.push(Polynomial::zero());
        }
        Ok(digits)
    }

    /// Returns `g` with `self = g(h)` if every `h`-adic digit is constant.
    pub fn outer_for(&self, h: &Polynomial) -> Result<Option<Polynomial>> {
        let digits = self.h_adic_expansion(h)?;
        if digits.iter().all(Polynomial::is_constant) {
            Ok(Some(Polynomial::new(
                digits.into_iter().map(|d| d.constant_term()).collect(),
            )))
        } else {
            Ok(None)
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        gcd::gcd(self, other)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// Rational content `c` and primitive integer part `p` with
    /// `self = c * p`, where `p` has coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn content_and_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if scaled.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim = scaled.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Sparse view: `(exponent, coefficient)` for every nonzero term,
    /// highest exponent first.
    pub fn terms(&self) -> Vec<(usize, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    /// Canonical text: descending exponents, explicit signs, reduced fractions.
    /// `parse(canonical_text(f)) == f`.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let var = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            if e == 0 {
                out.push_str(&rational::to_text(&mag));
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&rational::to_text(&mag));
                out.push('*');
                out.push_str(&var);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.canonical_text())
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(short.coeffs.iter()) {
            *a += b;
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Composes a chain outermost-first: `chain[0] ∘ chain[1] ∘ ...`.
pub fn compose_chain(chain: &[Polynomial]) -> Polynomial {
    let mut iter = chain.iter().rev();
    let Some(first) = iter.next() else {
        return Polynomial::x();
    };
    iter.fold(first.clone(), |acc, outer| outer.compose(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn compose_expands() {
        // x^2 ∘ (x^2 + x)
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[0, 1, 1])), p(&[0, 0, 1, 2, 1]));
        let f = p(&[3, -1, 4, 1]);
        assert_eq!(f.compose(&Polynomial::x()), f);
        assert_eq!(Polynomial::x().compose(&f), f);
    }

    #[test]
    fn h_adic_digits() {
        let f = p(&[0, 0, 1, 2, 1]);
        let h = p(&[0, 1, 1]);
        let digits = f.h_adic_expansion(&h).unwrap();
        assert_eq!(digits, vec![Polynomial::zero(), Polynomial::zero(), Polynomial::one()]);
        assert_eq!(f.outer_for(&h).unwrap(), Some(p(&[0, 0, 1])));

        let f = p(&[1, 0, 0, 1]);
        let digits = f.h_adic_expansion(&p(&[0, 0, 1])).unwrap();
        assert_eq!(digits, vec![p(&[1]), p(&[0, 1])]);
        assert_eq!(f.outer_for(&p(&[0, 0, 1])).unwrap(), None);

        assert_eq!(h.h_adic_expansion(&h).unwrap(), vec![Polynomial::zero(), Polynomial::one()]);
        assert!(f.h_adic_expansion(&p(&[5])).is_err());
    }

    #[test]
    fn affine_substitution() {
        let l = LinearPoly::new(int(2), int(1)).unwrap();
        assert_eq!(p(&[0, 0, 1]).affine_substitute(&l), p(&[1, 4, 4]));
        let f = p(&[7, 0, -2, 5]);
        assert_eq!(f.affine_substitute(&LinearPoly::identity()), f);
    }

    #[test]
    fn canonical_text_forms() {
        assert_eq!(p(&[0, 0, 1, 2, 1]).canonical_text(), "x^4 + 2*x^3 + x^2");
        assert_eq!(Polynomial::zero().canonical_text(), "0");
        assert_eq!(Polynomial::constant(frac(1, 2)).canonical_text(), "1/2");
        assert_eq!(p(&[-1, 0, -3]).canonical_text(), "-3*x^2 - 1");
        assert_eq!(p(&[0, -1]).canonical_text(), "-x");
    }

    #[test]
    fn content_split() {
        let f = Polynomial::new(vec![frac(1, 2), frac(-3, 4)]);
        let (c, prim) = f.content_and_primitive();
        assert_eq!(c, frac(-1, 4));
        assert_eq!(prim, vec![BigInt::from(-2), BigInt::from(3)]);
    }

    #[test]
    fn division_round_trip() {
        let a = p(&[1, 2, 3, 4, 5]);
        let b = p(&[1, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::one().degree(), Some(0));
        assert_ne!(Polynomial::zero(), Polynomial::constant(int(0) + int(1)));
    }
}
