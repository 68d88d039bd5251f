//! Dickson polynomials `D_m(x, a)`, defined by
//! `D_m(z + a/z, a) = z^m + (a/z)^m`, and recognition of their affine
//! conjugates `alpha * D_m(x + b, a) + c`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// `D_m(x, a)` by the three-term recurrence `D_m = x D_{m-1} - a D_{m-2}`
/// with `D_0 = 2`, `D_1 = x`.
pub fn dickson(m: usize, a: &Rational) -> Polynomial {
    let x = Polynomial::x();
    let mut prev = Polynomial::constant(rational::int(2));
    if m == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..m {
        let next = &(&x * &cur) - &prev.scale(a);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `D_m(x, a)` from the explicit sum
/// `sum_j m/(m-j) * C(m-j, j) * (-a)^j * x^(m-2j)`.
pub fn dickson_closed_form(m: usize, a: &Rational) -> Polynomial {
    if m == 0 {
        return Polynomial::constant(rational::int(2));
    }
    let mut coeffs = vec![Rational::zero(); m + 1];
    let minus_a = -a.clone();
    for j in 0..=m / 2 {
        let binom = Rational::from_integer(rational::binomial((m - j) as u64, j as u64));
        let weight = rational::frac(m as i64, (m - j) as i64);
        coeffs[m - 2 * j] = weight * binom * num_traits::pow(minus_a.clone(), j);
    }
    Polynomial::new(coeffs)
}

/// Both constructions, compared; disagreement is an internal error.
pub fn dickson_checked(m: usize, a: &Rational) -> Result<Polynomial> {
    let rec = dickson(m, a);
    if rec != dickson_closed_form(m, a) {
        return Err(Error::internal(format!(
            "Dickson recurrence and closed form disagree at m = {m}, a = {a}"
        )));
    }
    Ok(rec)
}

/// Checks `z^m D_m(z + a/z, a) = z^(2m) + a^m` as polynomials in `z`; for
/// `a = 0` checks `D_m(x, 0) = x^m` directly.
pub fn verify_functional_equation(m: usize, a: &Rational) -> bool {
    let d = dickson(m, a);
    if a.is_zero() {
        return d == Polynomial::monomial(Rational::one(), m);
    }
    // z^m * (z + a/z)^i = (z^2 + a)^i * z^(m - i)
    let z2a = Polynomial::new(vec![a.clone(), Rational::zero(), Rational::one()]);
    let mut lhs = Polynomial::zero();
    let mut power = Polynomial::one();
    for i in 0..=m {
        let c = d.coeff(i);
        if !c.is_zero() {
            lhs = &lhs + &power.shift_up(m - i).scale(&c);
        }
        power = &power * &z2a;
    }
    let mut rhs = vec![Rational::zero(); 2 * m + 1];
    rhs[0] = num_traits::pow(a.clone(), m);
    rhs[2 * m] += Rational::one();
    lhs == Polynomial::new(rhs)
}

/// `alpha * D_m(x + b, a) + c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DicksonForm {
    #[serde(with = "rational::text")]
    pub alpha: Rational,
    #[serde(with = "rational::text")]
    pub b: Rational,
    #[serde(with = "rational::text")]
    pub a: Rational,
    #[serde(with = "rational::text")]
    pub c: Rational,
    pub m: usize,
}

impl DicksonForm {
    pub fn to_polynomial(&self) -> Polynomial {
        let shifted = dickson(self.m, &self.a).compose(&Polynomial::new(vec![
            self.b.clone(),
            Rational::one(),
        ]));
        &shifted.scale(&self.alpha) + &Polynomial::constant(self.c.clone())
    }
}

/// First coefficient at which a polynomial differs from the best-fitting
/// Dickson conjugate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DicksonMismatch {
    pub candidate: DicksonForm,
    pub exponent: usize,
    #[serde(with = "rational::text")]
    pub expected: Rational,
    #[serde(with = "rational::text")]
    pub found: Rational,
}

/// Fits `alpha, b, a, c` from the top coefficients and the constant term,
/// then verifies. On failure reports the highest mismatching exponent.
pub fn recognize_detailed(f: &Polynomial) -> Option<Result<DicksonForm, DicksonMismatch>> {
    let m = f.degree().filter(|&m| m >= 2)?;
    let alpha = f.leading_coeff();
    let monic = f.monic();
    let m_q = rational::int(m as i64);
    // D_m(x + b) has x^(m-1) coefficient m*b
    let b = monic.coeff(m - 1) / &m_q;
    let centered = monic.compose(&Polynomial::new(vec![-b.clone(), Rational::one()]));
    // D_m has x^(m-2) coefficient -m*a
    let a = -centered.coeff(m - 2) / &m_q;
    let mut form = DicksonForm {
        alpha,
        b,
        a,
        c: Rational::zero(),
        m,
    };
    form.c = f.constant_term() - form.to_polynomial().constant_term();
    let built = form.to_polynomial();
    if built == *f {
        return Some(Ok(form));
    }
    let exponent = (0..=m)
        .rev()
        .find(|&i| built.coeff(i) != f.coeff(i))
        .expect("polynomials differ somewhere");
    Some(Err(DicksonMismatch {
        expected: built.coeff(exponent),
        found: f.coeff(exponent),
        candidate: form,
        exponent,
    }))
}

/// `f = alpha * D_m(x + b, a) + c` with `alpha = lc(f)`, if such a form exists.
/// For `m = 2` every quadratic qualifies and `c = 0` is chosen.
pub fn recognize(f: &Polynomial) -> Option<DicksonForm> {
    recognize_detailed(f)?.ok()
}
