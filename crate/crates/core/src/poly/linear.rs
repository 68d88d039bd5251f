use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Degree-one polynomial `slope*x + intercept` with `slope != 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Polynomial", into = "Polynomial")]
pub struct LinearPoly {
    slope: Rational,
    intercept: Rational,
}

impl LinearPoly {
    pub fn new(slope: Rational, intercept: Rational) -> Result<Self> {
        if slope.is_zero() {
            return Err(Error::invalid("linear polynomial needs a nonzero slope"));
        }
        Ok(Self { slope, intercept })
    }

    pub fn identity() -> Self {
        Self {
            slope: Rational::one(),
            intercept: Rational::zero(),
        }
    }

    pub fn shift(b: Rational) -> Self {
        Self {
            slope: Rational::one(),
            intercept: b,
        }
    }

    pub fn slope(&self) -> &Rational {
        &self.slope
    }

    pub fn intercept(&self) -> &Rational {
        &self.intercept
    }

    pub fn is_identity(&self) -> bool {
        self.slope.is_one() && self.intercept.is_zero()
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }

    /// Compositional inverse `(x - intercept) / slope`.
    pub fn invert(&self) -> Self {
        let s = self.slope.recip();
        Self {
            intercept: -(&self.intercept * &s),
            slope: s,
        }
    }

    /// `self ∘ inner`.
    pub fn then_after(&self, inner: &LinearPoly) -> LinearPoly {
        LinearPoly {
            slope: &self.slope * &inner.slope,
            intercept: &self.slope * &inner.intercept + &self.intercept,
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(vec![self.intercept.clone(), self.slope.clone()])
    }

    /// `self ∘ p`.
    pub fn apply_outer(&self, p: &Polynomial) -> Polynomial {
        &p.scale(&self.slope) + &Polynomial::constant(self.intercept.clone())
    }

    /// The unique `ℓ` with `ℓ ∘ from == to`, if one exists.
    pub fn solve_outer(from: &Polynomial, to: &Polynomial) -> Option<LinearPoly> {
        let d = from.degree()?;
        if d == 0 || to.degree() != Some(d) {
            return None;
        }
        let slope = to.leading_coeff() / from.leading_coeff();
        let intercept = to.constant_term() - &slope * from.constant_term();
        let l = LinearPoly::new(slope, intercept).ok()?;
        (l.apply_outer(from) == *to).then_some(l)
    }

    pub fn from_polynomial(p: &Polynomial) -> Option<LinearPoly> {
        (p.degree() == Some(1)).then(|| LinearPoly {
            slope: p.coeff(1),
            intercept: p.coeff(0),
        })
    }
}

impl TryFrom<Polynomial> for LinearPoly {
    type Error = String;
    fn try_from(p: Polynomial) -> std::result::Result<Self, String> {
        LinearPoly::from_polynomial(&p).ok_or_else(|| format!("{p} is not of degree one"))
    }
}

impl From<LinearPoly> for Polynomial {
    fn from(l: LinearPoly) -> Polynomial {
        l.to_polynomial()
    }
}

impl fmt::Display for LinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

impl fmt::Debug for LinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearPoly({})", self.to_polynomial())
    }
}
