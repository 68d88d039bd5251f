//! Resultants by the subresultant remainder sequence.
//!
//! Sign convention: `Res(A, B) = lc(A)^deg(B) * prod B(alpha)` over the roots
//! `alpha` of `A`, counted with multiplicity. This is the determinant of the
//! Sylvester matrix with the coefficients of `A` in the first rows.

use num_traits::{One, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which variable a bivariate resultant removes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eliminate {
    /// Eliminate `x`; the result is a polynomial in the parameter.
    X,
    /// Eliminate the parameter; the result is a polynomial in `x`.
    Param,
}

/// Polynomial in `x` whose coefficients are polynomials in a parameter
/// (written `γ` in the δ computation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bivariate {
    rows: Vec<Polynomial>,
}

impl Bivariate {
    pub fn new(mut rows: Vec<Polynomial>) -> Self {
        while rows.last().is_some_and(Polynomial::is_zero) {
            rows.pop();
        }
        Self { rows }
    }

    /// Embeds a univariate polynomial in `x` (constant in the parameter).
    pub fn from_x(p: &Polynomial) -> Self {
        Self::new(p.coeffs().iter().map(|c| Polynomial::constant(c.clone())).collect())
    }

    /// `p(x) - γ`.
    pub fn x_minus_param(p: &Polynomial) -> Self {
        let mut rows: Vec<Polynomial> =
            p.coeffs().iter().map(|c| Polynomial::constant(c.clone())).collect();
        if rows.is_empty() {
            rows.push(Polynomial::zero());
        }
        rows[0] = &rows[0] - &Polynomial::x();
        Self::new(rows)
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Swaps the roles of `x` and the parameter.
    pub fn transpose(&self) -> Self {
        let width = self.rows.iter().map(|r| r.coeffs().len()).max().unwrap_or(0);
        let rows = (0..width)
            .map(|j| Polynomial::new(self.rows.iter().map(|r| r.coeff(j)).collect()))
            .collect();
        Self::new(rows)
    }

    pub fn resultant(&self, other: &Bivariate, eliminate: Eliminate) -> Result<Polynomial> {
        match eliminate {
            Eliminate::X => subresultant(self.rows.clone(), other.rows.clone()),
            Eliminate::Param => {
                subresultant(self.transpose().rows, other.transpose().rows)
            }
        }
    }
}

fn degree(p: &[Polynomial]) -> usize {
    p.len().saturating_sub(1)
}

fn trim(mut p: Vec<Polynomial>) -> Vec<Polynomial> {
    while p.last().is_some_and(Polynomial::is_zero) {
        p.pop();
    }
    p
}

fn scale(p: &[Polynomial], c: &Polynomial) -> Vec<Polynomial> {
    trim(p.iter().map(|a| a * c).collect())
}

fn exact_div_scalar(p: &[Polynomial], c: &Polynomial) -> Result<Vec<Polynomial>> {
    p.iter()
        .map(|a| {
            a.exact_div(c)
                .ok_or_else(|| Error::internal("subresultant division was not exact"))
        })
        .collect::<Result<Vec<_>>>()
        .map(trim)
}

fn pseudo_remainder(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = degree(b);
    let lb = b.last().expect("nonzero divisor").clone();
    let mut r: Vec<Polynomial> = a.to_vec();
    let mut e = degree(a) as i64 - db as i64 + 1;
    while !r.is_empty() && degree(&r) >= db {
        let shift = degree(&r) - db;
        let lr = r.last().unwrap().clone();
        let mut next = scale(&r, &lb);
        next.resize(next.len().max(r.len()), Polynomial::zero());
        for (j, bj) in b.iter().enumerate() {
            next[j + shift] = &next[j + shift] - &(&lr * bj);
        }
        r = trim(next);
        e -= 1;
    }
    let factor = lb.pow(e.max(0) as usize);
    scale(&r, &factor)
}

fn subresultant(a: Vec<Polynomial>, b: Vec<Polynomial>) -> Result<Polynomial> {
    let (mut a, mut b) = (trim(a), trim(b));
    if a.is_empty() && b.is_empty() {
        return Err(Error::Degenerate("resultant of two zero polynomials".into()));
    }
    if a.is_empty() || b.is_empty() {
        return Ok(Polynomial::zero());
    }
    let mut sign_negative = false;
    if degree(&a) < degree(&b) {
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            sign_negative = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Polynomial::one();
    let mut h = Polynomial::one();
    while degree(&b) > 0 {
        let delta = degree(&a) - degree(&b);
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = pseudo_remainder(&a, &b);
        a = b;
        if r.is_empty() {
            return Ok(Polynomial::zero());
        }
        b = exact_div_scalar(&r, &(&g * &h.pow(delta)))?;
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .exact_div(&h.pow(delta - 1))
                .ok_or_else(|| Error::internal("subresultant h update was not exact"))?
        };
    }
    let da = degree(&a);
    let lb = b.last().unwrap().pow(da);
    let mut res = if da == 0 {
        lb
    } else {
        lb.exact_div(&h.pow(da - 1))
            .ok_or_else(|| Error::internal("final subresultant division was not exact"))?
    };
    if sign_negative {
        res = -res;
    }
    Ok(res)
}

/// Resultant of two univariate polynomials.
pub fn resultant(a: &Polynomial, b: &Polynomial) -> Result<Rational> {
    let r = Bivariate::from_x(a).resultant(&Bivariate::from_x(b), Eliminate::X)?;
    Ok(r.constant_term())
}

/// Determinant of the Sylvester matrix by plain Gaussian
/// elimination over the rationals. Independent of the remainder-sequence
/// route; used to cross-check it.
pub fn sylvester_resultant(a: &Polynomial, b: &Polynomial) -> Result<Rational> {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Degenerate("resultant of two zero polynomials".into()));
        }
        return Ok(Rational::zero());
    };
    let size = m + n;
    if size == 0 {
        return Ok(Rational::one());
    }
    let mut mat = vec![vec![Rational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.coeffs().iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.coeffs().iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    let mut det = Rational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
            return Ok(Rational::zero());
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let pv = mat[col][col].clone();
        det *= &pv;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pv;
            for c in col..size {
                let delta = &factor * &mat[col][c];
                mat[r][c] -= delta;
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn delta_resultant(f: &Polynomial) -> Polynomial {
        Bivariate::from_x(&f.derivative())
            .resultant(&Bivariate::x_minus_param(f), Eliminate::X)
            .unwrap()
    }

    #[test]
    fn cube_gives_27_gamma_squared() {
        // 3^3 * (0 - γ)^2 over the double root 0 of 3x^2
        assert_eq!(delta_resultant(&p(&[0, 0, 0, 1])), p(&[0, 0, 27]));
    }

    #[test]
    fn square_gives_minus_4_gamma() {
        // lc(2x)^2 * (0 - γ)
        assert_eq!(delta_resultant(&p(&[0, 0, 1])), p(&[0, -4]));
    }

    #[test]
    fn constant_resultant() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[1, 1])).unwrap(), int(2));
        assert!(resultant(&Polynomial::zero(), &Polynomial::zero()).is_err());
        assert_eq!(resultant(&Polynomial::zero(), &p(&[1, 1])).unwrap(), int(0));
    }

    #[test]
    fn agrees_with_sylvester_determinant() {
        let a = p(&[3, -1, 0, 2, 5]);
        let b = p(&[-7, 4, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b).unwrap());
        assert_eq!(resultant(&b, &a).unwrap(), sylvester_resultant(&b, &a).unwrap());
    }

    #[test]
    fn eliminating_the_parameter() {
        // Res_γ(x - γ, x^2 - γ) = x - x^2 up to sign
        let a = Bivariate::x_minus_param(&Polynomial::x());
        let b = Bivariate::x_minus_param(&p(&[0, 0, 1]));
        let r = a.resultant(&b, Eliminate::Param).unwrap();
        assert!(r == p(&[0, 1, -1]) || r == p(&[0, -1, 1]));
    }
}
