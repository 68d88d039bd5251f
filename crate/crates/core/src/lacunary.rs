//! Structure results for polynomials with few terms: the term-count bound
//! for compositions, the multiplicity bound on nonzero roots, and the
//! decompositions of trinomials and quadrinomials.

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::decompose::{self, NormalizedPair};
use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, Polynomial};
use crate::rational::{self, Rational};

/// Sparse view of a polynomial, terms by descending exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermList {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponent: usize,
    #[serde(with = "rational::text")]
    pub coefficient: Rational,
}

impl TermList {
    pub fn of(f: &Polynomial) -> Self {
        let terms = f
            .terms()
            .into_iter()
            .map(|(exponent, coefficient)| Term {
                exponent,
                coefficient,
            })
            .collect();
        Self { terms }
    }

    /// Number of nonconstant terms.
    pub fn l(&self) -> usize {
        self.terms.iter().filter(|t| t.exponent > 0).count()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponents(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.exponent).collect()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        self.terms.iter().fold(Polynomial::zero(), |acc, t| {
            &acc + &Polynomial::monomial(t.coefficient.clone(), t.exponent)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZannierReport {
    pub deg_f: usize,
    pub l: usize,
    pub deg_h: usize,
    /// `2 l (l - 1) deg h - (deg f + l - 1)`.
    pub slack: i64,
    pub holds: bool,
}

fn is_binomial_shape(h: &Polynomial) -> bool {
    let terms = TermList::of(h);
    terms.l() <= 1
}

/// Checks `deg f + l - 1 <= 2 l (l - 1) deg h` for `f = g ∘ h`, where `l`
/// counts the nonconstant terms of `f`.
pub fn zannier_bound_check(g: &Polynomial, h: &Polynomial) -> Result<ZannierReport> {
    if g.degree().unwrap_or(0) < 1 || h.degree().unwrap_or(0) < 1 {
        return Err(Error::invalid("both components need degree >= 1"));
    }
    if is_binomial_shape(h) {
        return Err(Error::ExcludedShape(h.to_string()));
    }
    let f = g.compose(h);
    let deg_f = f.deg();
    let l = TermList::of(&f).l();
    let deg_h = h.deg();
    let lhs = (deg_f + l) as i64 - 1;
    let rhs = (2 * l * l.saturating_sub(1) * deg_h) as i64;
    Ok(ZannierReport {
        deg_f,
        l,
        deg_h,
        slack: rhs - lhs,
        holds: lhs <= rhs,
    })
}

/// A polynomial with a nonzero root of multiplicity `m` has at least
/// `m + 1` terms. Returns whether that holds for `g`.
pub fn hajos_check(g: &Polynomial) -> Result<bool> {
    if g.degree().unwrap_or(0) < 1 {
        return Err(Error::invalid("hajos_check needs deg g >= 1"));
    }
    let mut core = g.clone();
    while core.constant_term().is_zero() {
        core = core.exact_div(&Polynomial::x()).expect("x divides");
    }
    if core.is_constant() {
        return Ok(true);
    }
    let m = squarefree_decomposition(&core)?
        .iter()
        .map(|sf| sf.multiplicity)
        .max()
        .unwrap_or(0);
    Ok(g.term_count() > m)
}

fn agree_with_engine(f: &Polynomial, found: &[NormalizedPair]) -> Result<()> {
    let engine = decompose::decompose_once(f)?;
    if engine != found {
        return Err(Error::internal(format!(
            "sparse decomposition of {f} disagrees with the general engine"
        )));
    }
    Ok(())
}

/// Pairs `(g, x^k)` with `g(x^k) = f`, over divisors `2 <= k <= n/2` of `e`.
fn power_inner(f: &Polynomial, e: usize) -> Vec<NormalizedPair> {
    let n = f.deg();
    rational::divisors(e)
        .into_iter()
        .filter(|&k| k >= 2 && k <= n / 2)
        .map(|k| {
            let g = Polynomial::new(
                (0..=n / k).map(|i| f.coeff(i * k)).collect::<Vec<_>>(),
            );
            NormalizedPair {
                g,
                h: Polynomial::monomial(rational::int(1), k),
            }
        })
        .collect()
}

/// Every decomposition of `a1 x^n1 + a2 x^n2 + a3` has inner component
/// `x^k` with `k | gcd(n1, n2)`. Checked against the general engine.
pub fn trinomial_decompositions(f: &Polynomial) -> Result<Vec<NormalizedPair>> {
    let terms = TermList::of(f);
    let e = terms.exponents();
    let shaped = e.len() == 3 && e[2] == 0 || e.len() == 2 && e[1] > 0;
    if !shaped {
        return Err(Error::invalid(format!(
            "{f} is not a trinomial a1 x^n1 + a2 x^n2 + a3 with n2 >= 1"
        )));
    }
    let out = power_inner(f, e[0].gcd(&e[1]));
    agree_with_engine(f, &out)?;
    Ok(out)
}

/// For `a1 x^n1 + a2 x^n2 + a3 x^n3 + a4` with `n1 + n3 > 2 n2`, every
/// decomposition has inner component `x^k`, `k | gcd(n1, n2, n3)`; the
/// outer component is `a1 x^(n1/k) + a2 x^(n2/k) + a3 x^(n3/k) + a4`.
pub fn quadrinomial_decompositions(f: &Polynomial) -> Result<Vec<NormalizedPair>> {
    let terms = TermList::of(f);
    let mut e = terms.exponents();
    if e.last() == Some(&0) {
        e.pop();
    }
    if e.len() != 3 || terms.len() > 4 {
        return Err(Error::invalid(format!(
            "{f} is not a quadrinomial a1 x^n1 + a2 x^n2 + a3 x^n3 + a4 with n3 >= 1"
        )));
    }
    let (n1, n2, n3) = (e[0], e[1], e[2]);
    if n1 + n3 <= 2 * n2 {
        return Err(Error::ConditionNotMet {
            lhs: (n1 + n3) as u64,
            rhs: (2 * n2) as u64,
        });
    }
    let out = power_inner(f, n1.gcd(&n2).gcd(&n3));
    for pair in &out {
        if pair.compose() != *f {
            return Err(Error::internal("quadrinomial component does not recompose"));
        }
    }
    agree_with_engine(f, &out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::testutil;
    use proptest::prelude::*;

    fn q(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn term_list_view() {
        let t = TermList::of(&q("3x^5 - x^2 + 7"));
        assert_eq!(t.exponents(), vec![5, 2, 0]);
        assert_eq!(t.l(), 2);
        assert_eq!(t.to_polynomial(), q("3x^5 - x^2 + 7"));
    }

    #[test]
    fn zannier_examples() {
        let r = zannier_bound_check(&q("x^3"), &q("x^2 + x")).unwrap();
        assert_eq!((r.deg_f, r.l, r.deg_h), (6, 4, 2));
        assert_eq!(r.slack, 48 - 9);
        let r = zannier_bound_check(&q("x^2"), &q("x^3 + x")).unwrap();
        assert_eq!((r.deg_f, r.l, r.slack), (6, 3, 36 - 8));
        assert!(matches!(
            zannier_bound_check(&q("x^3 + x"), &q("x^2 + 1")),
            Err(Error::ExcludedShape(_))
        ));
    }

    #[test]
    fn hajos_examples() {
        assert!(hajos_check(&q("(x-1)^2")).unwrap());
        assert!(hajos_check(&q("x^5")).unwrap());
        assert!(hajos_check(&q("(x-1)^3 (x+2)")).unwrap());
        assert!(hajos_check(&q("x^3 (x-1)^4")).unwrap());
    }

    #[test]
    fn trinomial_examples() {
        let d = trinomial_decompositions(&q("x^6 + x^2 + 1")).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].g.clone(), d[0].h.clone()), (q("x^3 + x + 1"), q("x^2")));
        let d = trinomial_decompositions(&q("x^6 + x^3 + 1")).unwrap();
        assert_eq!((d[0].g.clone(), d[0].h.clone()), (q("x^2 + x + 1"), q("x^3")));
        assert!(trinomial_decompositions(&q("x^5 + x^3 + 1")).unwrap().is_empty());
        // two-term inputs are trinomials with a3 = 0
        assert_eq!(trinomial_decompositions(&q("x^12 - 2x^4")).unwrap().len(), 2);
        assert!(trinomial_decompositions(&q("x^4 + x^3 + x + 1")).is_err());
    }

    #[test]
    fn quadrinomial_examples() {
        assert!(matches!(
            quadrinomial_decompositions(&q("x^8 + x^6 + x^2 + 5")),
            Err(Error::ConditionNotMet { lhs: 10, rhs: 12 })
        ));
        let d = quadrinomial_decompositions(&q("x^10 + x^4 + x^2 + 1")).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].g, q("x^5 + x^2 + x + 1"));
        assert_eq!(d[0].h, q("x^2"));
    }

    #[test]
    fn quadrinomial_boundary_is_sharp() {
        let f = q("x^4 + 2x^3 + x^2 + 1");
        assert!(matches!(
            quadrinomial_decompositions(&f),
            Err(Error::ConditionNotMet { lhs: 6, rhs: 6 })
        ));
        let pairs = decompose::decompose_once(&f).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].h, q("x^2 + x"));
        assert_eq!(pairs[0].g, q("x^2 + 1"));
    }

    fn sparse(exps: Vec<usize>, coeffs: Vec<i64>, a0: i64) -> Polynomial {
        let mut f = Polynomial::constant(rational::int(a0));
        for (e, c) in exps.into_iter().zip(coeffs) {
            f = &f + &Polynomial::monomial(rational::int(c), e);
        }
        f
    }

    fn nonzero() -> impl Strategy<Value = i64> {
        prop_oneof![-4i64..=-1, 1i64..=4]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn trinomials_match_engine(
            n1 in 2usize..=30, frac in 0.0f64..1.0,
            a1 in nonzero(), a2 in nonzero(), a3 in -4i64..=4,
        ) {
            let n2 = 1 + ((n1 - 1) as f64 * frac) as usize;
            prop_assume!(n2 < n1);
            let f = sparse(vec![n1, n2], vec![a1, a2], a3);
            // agreement with the engine is asserted inside
            let d = trinomial_decompositions(&f).unwrap();
            for pair in d {
                prop_assert_eq!(pair.compose(), f.clone());
            }
        }

        #[test]
        fn quadrinomials_match_engine(
            k in 1usize..=4, m1 in 3usize..=10, m2f in 0.0f64..1.0, m3f in 0.0f64..1.0,
            a in proptest::collection::vec(nonzero(), 3), a4 in -3i64..=3,
        ) {
            let m2 = 2 + ((m1 - 2) as f64 * m2f) as usize;
            let m3 = 1 + ((m2 - 1) as f64 * m3f) as usize;
            prop_assume!(m2 < m1 && m3 < m2 && m1 + m3 > 2 * m2 && k * m1 <= 30);
            let f = sparse(vec![k * m1, k * m2, k * m3], a, a4);
            let d = quadrinomial_decompositions(&f).unwrap();
            let e = (k * m1).gcd(&(k * m2)).gcd(&(k * m3));
            prop_assert_eq!(d.len(), rational::divisors(e).len() - 1);
        }

        #[test]
        fn zannier_holds(g in testutil::poly(1, 6, 4), h in testutil::poly(2, 6, 4)) {
            prop_assume!(!is_binomial_shape(&h));
            prop_assert!(zannier_bound_check(&g, &h).unwrap().holds);
        }

        #[test]
        fn hajos_holds(roots in proptest::collection::vec(-3i64..=3, 1..8)) {
            let g = roots.iter().fold(Polynomial::one(), |acc, &r| {
                &acc * &Polynomial::linear_factor(rational::int(r))
            });
            prop_assert!(hajos_check(&g).unwrap());
        }
    }
}
