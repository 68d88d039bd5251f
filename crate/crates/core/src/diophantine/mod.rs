//! Finiteness of integer solutions of `f(x) = g(y)` through representations
//! `f = phi ∘ f1 ∘ lambda`, `g = phi ∘ g1 ∘ mu` with `(f1, g1)` a standard
//! pair. The engine either exhibits such a representation or logs, for
//! every degree of `phi` and every kind, the identity that fails.

pub mod pairs;
pub mod pell;

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use pairs::{
    match_standard_pair, Elimination, PairMatch, PairParams, PairSearch, StandardPair, Tactic,
};

use crate::decompose;
use crate::error::{Error, Result};
use crate::parse::{binomial_poly, rising_factorial};
use crate::poly::{LinearPoly, Polynomial};
use crate::rational::{self, Rational};

/// Default cap on `deg f`, `deg g` for [`finiteness`].
pub const DEFAULT_DEGREE_CAP: usize = 64;

/// `sum of C(x, j)` over `j = 0, 2, 3, ..., m`.
pub fn build_h(m: usize) -> Result<Polynomial> {
    if m < 2 {
        return Err(Error::invalid("H_m needs m >= 2"));
    }
    let x = Polynomial::x();
    Ok(std::iter::once(0)
        .chain(2..=m)
        .fold(Polynomial::zero(), |acc, j| &acc + &binomial_poly(&x, j)))
}

/// `x (x + 1) ... (x + n - 1)`.
pub fn build_r(n: usize) -> Result<Polynomial> {
    if n < 1 {
        return Err(Error::invalid("R_n needs n >= 1"));
    }
    Ok(rising_factorial(&Polynomial::x(), n))
}

/// Degrees `k` of a possible common left component: common divisors of the
/// degrees for which `lc(f) / lc(g)` is a `k`-th power.
pub fn kth_power_filter(f: &Polynomial, g: &Polynomial) -> Result<Vec<usize>> {
    let (m, n) = nonconstant_degrees(f, g)?;
    let ratio = f.leading_coeff() / g.leading_coeff();
    Ok(rational::divisors(m.gcd(&n))
        .into_iter()
        .filter(|&k| rational::is_kth_power(&ratio, k as u32))
        .collect())
}

fn nonconstant_degrees(f: &Polynomial, g: &Polynomial) -> Result<(usize, usize)> {
    match (f.degree(), g.degree()) {
        (Some(m), Some(n)) if m >= 1 && n >= 1 => Ok((m, n)),
        _ => Err(Error::invalid("f and g must be nonconstant")),
    }
}

/// `(x, k, l, y)` with `x (x + 1) ... (x + k - 1) = y^l`.
pub type ProductPower = (u64, u64, u32, BigUint);

/// Brute-force search for `x (x+1) ... (x+k-1) = y^l` with `x >= 1`,
/// `2 <= k <= k_max`, `2 <= l <= l_max`, `y > 1`. Always empty.
pub fn erdos_selfridge_scan(x_max: u64, k_max: u64, l_max: u32) -> Vec<ProductPower> {
    let mut out = Vec::new();
    for x in 1..=x_max {
        let mut product = BigUint::from(x);
        for k in 2..=k_max {
            product *= x + k - 1;
            for l in 2..=l_max {
                if let Some(y) = rational::exact_root_uint(&product, l) {
                    if y > BigUint::one() {
                        out.push((x, k, l, y));
                    }
                }
            }
        }
    }
    out
}

/// Reduced pair for a common left component of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftFactor {
    pub phi: Polynomial,
    pub f_reduced: Polynomial,
    pub g_reduced: Polynomial,
}

/// Normalized right component of degree `d` and its outer component.
fn split(f: &Polynomial, d: usize) -> Result<Option<(Polynomial, Polynomial)>> {
    let n = f.deg();
    if d == 1 {
        return Ok(Some((f.clone(), Polynomial::x())));
    }
    if d == n {
        let nu = LinearPoly::new(f.leading_coeff(), f.constant_term())?;
        return Ok(Some((nu.to_polynomial(), nu.invert().apply_outer(f))));
    }
    Ok(decompose::right_component_candidate(f, d)?.map(|p| (p.g, p.h)))
}

/// Finds `phi` of degree `k` with `f = phi ∘ f_reduced`, `g = phi ∘ g_reduced`.
/// Right components of a given degree are unique up to a linear on the
/// left, so only the outer components need to be matched up to an inner
/// linear.
pub fn left_factor_search(f: &Polynomial, g: &Polynomial, k: usize) -> Result<Option<LeftFactor>> {
    let (m, n) = nonconstant_degrees(f, g)?;
    if k == 0 || m % k != 0 || n % k != 0 {
        return Err(Error::invalid(format!("k = {k} must divide {m} and {n}")));
    }
    if k == 1 {
        return Ok(Some(LeftFactor {
            phi: Polynomial::x(),
            f_reduced: f.clone(),
            g_reduced: g.clone(),
        }));
    }
    let (Some((phi_f, fr)), Some((phi_g, gr))) = (split(f, m / k)?, split(g, n / k)?) else {
        return Ok(None);
    };
    // phi_f = phi_g ∘ (s x + t)
    let ratio = phi_f.leading_coeff() / phi_g.leading_coeff();
    let Some(root) = rational::exact_root(&num_traits::abs(ratio.clone()), k as u32) else {
        return Ok(None);
    };
    let mut slopes = Vec::new();
    if k % 2 == 1 {
        slopes.push(if ratio < Rational::zero() { -root } else { root });
    } else if ratio > Rational::zero() {
        slopes.push(root.clone());
        slopes.push(-root);
    }
    let kq = rational::int(k as i64);
    for s in slopes {
        let s_pow = num_traits::pow(s.clone(), k - 1);
        let t = (phi_f.coeff(k - 1) - phi_g.coeff(k - 1) * &s_pow)
            / (phi_g.leading_coeff() * &kq * &s_pow);
        let ell = LinearPoly::new(s, t)?;
        if phi_g.affine_substitute(&ell) == phi_f {
            return Ok(Some(LeftFactor {
                phi: phi_g,
                f_reduced: ell.apply_outer(&fr),
                g_reduced: gr,
            }));
        }
    }
    Ok(None)
}

/// `f = phi ∘ f1 ∘ lambda`, `g = phi ∘ g1 ∘ mu`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub phi: Polynomial,
    pub pair: StandardPair,
    pub lambda: LinearPoly,
    pub mu: LinearPoly,
}

impl Representation {
    pub fn recomposes(&self, f: &Polynomial, g: &Polynomial) -> bool {
        let (f1, g1) = self.pair.instantiate();
        self.phi.compose(&f1.affine_substitute(&self.lambda)) == *f
            && self.phi.compose(&g1.affine_substitute(&self.mu)) == *g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FinitenessVerdict {
    Finite,
    RepresentationFound,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitenessCertificate {
    pub f: Polynomial,
    pub g: Polynomial,
    pub verdict: FinitenessVerdict,
    /// Ascending `k`, then kind.
    pub cases: Vec<Elimination>,
    pub witness: Option<Representation>,
    pub residual_note: Option<String>,
    pub pell: Option<pell::PellWitness>,
}

impl FinitenessCertificate {
    /// Every `k` up to the gcd of the degrees is ruled out, either as a
    /// whole or kind by kind.
    pub fn covers_all_branches(&self) -> bool {
        let gcd = self.f.deg().gcd(&self.g.deg());
        rational::divisors(gcd).into_iter().all(|k| {
            let of_k: Vec<_> = self.cases.iter().filter(|c| c.k == k).collect();
            (k > 1 && of_k.iter().any(|c| c.kind.is_none()))
                || (1..=5u8).all(|kind| of_k.iter().any(|c| c.kind == Some(kind)))
        })
    }
}

fn whole_branch(k: usize, tactic: Tactic, identity: String, lhs: String, rhs: String) -> Elimination {
    Elimination {
        k,
        kind: None,
        switched: false,
        tactic,
        identity,
        lhs,
        rhs,
    }
}

/// Whether `f1(x) = g1(y)` itself has infinitely many solutions with
/// bounded denominator, for the shapes where this is decided here.
fn confirm_infinitude(m: &PairMatch) -> (Option<String>, Option<pell::PellWitness>) {
    match &m.pair.params {
        PairParams::First { m: 1, .. } => (
            Some("f1 is linear: every integer y gives a solution with bounded denominator".into()),
            None,
        ),
        PairParams::First { m: deg, a, r, p } if p.is_constant() => {
            // x^deg = c y^r: y = c^s t^deg, x = c^((1 + s r)/deg) t^r with 1 + s r ≡ 0 mod deg
            let c = a * num_traits::pow(p.constant_term(), *deg);
            let s = (1..=*deg).find(|s| (1 + s * r) % deg == 0).expect("gcd(r, m) = 1");
            (
                Some(format!(
                    "parametric family y = ({})^{s} t^{deg}, x = ({})^{} t^{r}",
                    rational::to_text(&c),
                    rational::to_text(&c),
                    (1 + s * r) / deg
                )),
                None,
            )
        }
        PairParams::Second { a, b, p } if p.is_constant() => {
            // x^2 = A y^2 + B
            let c2 = num_traits::pow(p.constant_term(), 2);
            let big_a = a * &c2;
            let big_b = b * &c2;
            let (pa, qa) = (big_a.numer().clone(), big_a.denom().clone());
            let d = &pa * &qa;
            let nq = Rational::from_integer(&qa * &qa) * &big_b;
            let nint: BigInt = nq.numer() * nq.denom();
            match pell::solve(&d, &nint) {
                Ok(Some(w)) => (
                    Some(format!(
                        "Pell equation u^2 - {d} v^2 = {nint} has solution ({}, {}) and unit ({}, {}); infinitely many",
                        w.solution.0, w.solution.1, w.unit.0, w.unit.1
                    )),
                    Some(w),
                ),
                Ok(None) => (None, None),
                Err(()) => (None, None),
            }
        }
        _ => (None, None),
    }
}

/// Degree-capped [`finiteness`].
pub fn finiteness_capped(f: &Polynomial, g: &Polynomial, cap: usize) -> Result<FinitenessCertificate> {
    let (m, n) = nonconstant_degrees(f, g)?;
    for degree in [m, n] {
        if degree > cap {
            return Err(Error::DegreeCap { degree, cap });
        }
    }
    let ratio = f.leading_coeff() / g.leading_coeff();
    let admissible = kth_power_filter(f, g)?;
    let mut cases = Vec::new();
    let top = m.max(n);
    if (2..=top as u32).all(|k| !rational::is_kth_power(&ratio, k)) {
        cases.push(whole_branch(
            1,
            Tactic::LeadingPower,
            "lc(f)/lc(g) is a k-th power for some k >= 2".into(),
            rational::to_text(&ratio),
            format!("no k-th root for 2 <= k <= {top}, so k = 1"),
        ));
    }
    let mut found: Vec<Representation> = Vec::new();
    for k in rational::divisors(m.gcd(&n)) {
        if !admissible.contains(&k) {
            cases.push(whole_branch(
                k,
                Tactic::LeadingPower,
                format!("lc(f)/lc(g) is a {k}-th power"),
                rational::to_text(&ratio),
                format!("not a {k}-th power"),
            ));
            continue;
        }
        let Some(lf) = left_factor_search(f, g, k)? else {
            cases.push(whole_branch(
                k,
                Tactic::LeftFactor,
                format!("f and g share a left component of degree {k}"),
                format!("{f}"),
                format!("{g}"),
            ));
            continue;
        };
        let search = pairs::search_pairs(&lf.f_reduced, &lf.g_reduced, k)?;
        cases.extend(search.eliminations);
        for pm in search.matches {
            let rep = Representation {
                phi: lf.phi.compose(&pm.outer.to_polynomial()),
                pair: pm.pair.clone(),
                lambda: pm.lambda.clone(),
                mu: pm.mu.clone(),
            };
            if !rep.recomposes(f, g) {
                return Err(Error::internal("representation does not recompose"));
            }
            found.push(rep);
        }
    }
    cases.sort_by_key(|c| (c.k, c.kind.unwrap_or(0), c.switched));
    let mut cert = FinitenessCertificate {
        f: f.clone(),
        g: g.clone(),
        verdict: FinitenessVerdict::Finite,
        cases,
        witness: None,
        residual_note: None,
        pell: None,
    };
    for rep in &found {
        let pm = PairMatch {
            pair: rep.pair.clone(),
            outer: LinearPoly::identity(),
            lambda: rep.lambda.clone(),
            mu: rep.mu.clone(),
        };
        if let (Some(note), pell) = confirm_infinitude(&pm) {
            cert.verdict = FinitenessVerdict::RepresentationFound;
            cert.witness = Some(rep.clone());
            cert.residual_note = Some(note);
            cert.pell = pell;
            return Ok(cert);
        }
    }
    if let Some(rep) = found.into_iter().next() {
        cert.verdict = FinitenessVerdict::Undecided;
        cert.residual_note = Some(format!(
            "kind {} representation found; infinitude of f1(x) = g1(y) left open",
            rep.pair.kind()
        ));
        cert.witness = Some(rep);
    }
    Ok(cert)
}

/// Decides whether `f(x) = g(y)` has finitely many integer solutions, up to
/// the cases where infinitude of the standard-pair equation is not settled.
pub fn finiteness(f: &Polynomial, g: &Polynomial) -> Result<FinitenessCertificate> {
    finiteness_capped(f, g, DEFAULT_DEGREE_CAP)
}

/// Largest box accepted by [`solution_scan`].
pub const MAX_BOX: u64 = 1_000_000;

/// Integer-valued `scale * p(i / denominator)` as a polynomial in `i`.
fn integer_scaled(p: &Polynomial, denominator: &BigInt, top: usize, lcm: &BigInt) -> Vec<BigInt> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let s = c * Rational::from_integer(lcm * num_traits::pow(denominator.clone(), top - j));
            s.to_integer()
        })
        .collect()
}

fn horner(coeffs: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

/// All `(x, y)` with `x = i/d`, `y = j/d`, `|i|, |j| <= box_bound` and
/// `f(x) = g(y)`, where `d` is the denominator (1 for integer solutions).
/// Sorted by `x`, then `y`.
pub fn solution_scan(
    f: &Polynomial,
    g: &Polynomial,
    box_bound: u64,
    denominator: u64,
) -> Result<Vec<(Rational, Rational)>> {
    nonconstant_degrees(f, g)?;
    if box_bound > MAX_BOX {
        return Err(Error::invalid(format!("box {box_bound} exceeds {MAX_BOX}")));
    }
    if denominator == 0 {
        return Err(Error::invalid("denominator must be positive"));
    }
    let top = f.deg().max(g.deg());
    let lcm = f
        .coeffs()
        .iter()
        .chain(g.coeffs())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let d = BigInt::from(denominator);
    let fs = integer_scaled(f, &d, top, &lcm);
    let gs = integer_scaled(g, &d, top, &lcm);
    let b = box_bound as i64;
    let mut by_value: HashMap<BigInt, Vec<i64>> = HashMap::new();
    for j in -b..=b {
        by_value.entry(horner(&gs, j)).or_default().push(j);
    }
    let dq = Rational::from_integer(d);
    let mut out = Vec::new();
    for i in -b..=b {
        if let Some(js) = by_value.get(&horner(&fs, i)) {
            for &j in js {
                out.push((rational::int(i) / &dq, rational::int(j) / &dq));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::rational::{frac, int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn builders() {
        assert_eq!(
            build_h(4).unwrap(),
            q("1/24 x^4 - 1/12 x^3 + 11/24 x^2 - 5/12 x + 1")
        );
        assert_eq!(build_r(3).unwrap(), q("x^3 + 3x^2 + 2x"));
        assert_eq!(build_r(1).unwrap(), q("x"));
    }

    fn factorial(n: usize) -> Rational {
        Rational::from_integer(rational::factorial(n as u64))
    }

    /// Closed forms for the top coefficients of `H_m(a1 x + a0)`.
    fn c_top(m: usize, a1: &Rational, a0: &Rational) -> [Rational; 4] {
        let mq = int(m as i64);
        let p = |e: usize| num_traits::pow(a1.clone(), e);
        let a0_2 = a0 * a0;
        let a0_3 = &a0_2 * a0;
        let c_m = p(m) / factorial(m);
        let c_m1 = p(m - 1) * (int(2) * a0 - &mq + int(3)) / (int(2) * factorial(m - 1));
        let c_m2 = p(m - 2)
            * (int(3) * &mq * &mq - (int(19) + int(12) * a0) * &mq + int(12) * &a0_2
                + int(36) * a0
                + int(50))
            / (int(24) * factorial(m - 2));
        let c_m3 = p(m - 3)
            * (-(&mq * &mq * &mq) + (int(6) * a0 + int(10)) * &mq * &mq
                - (int(12) * &a0_2 + int(38) * a0 + int(53)) * &mq
                + int(8) * &a0_3
                + int(36) * &a0_2
                + int(100) * a0
                + int(144))
            / (int(48) * factorial(m - 3));
        [c_m, c_m1, c_m2, c_m3]
    }

    fn d_top(n: usize, b1: &Rational, b0: &Rational) -> [Rational; 3] {
        let nq = int(n as i64);
        let p = |e: usize| num_traits::pow(b1.clone(), e);
        [
            p(n),
            p(n - 1) * &nq * (int(2) * b0 + &nq - int(1)) / int(2),
            p(n - 2) * &nq * (&nq - int(1))
                * (int(3) * &nq * &nq + (int(12) * b0 - int(7)) * &nq + int(12) * b0 * b0
                    - int(12) * b0
                    + int(2))
                / int(24),
        ]
    }

    fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
        let n: i64 = rng.random_range(-9..=9);
        let d: i64 = rng.random_range(1..=9);
        frac(if n == 0 { 1 } else { n }, d)
    }

    #[test]
    fn coefficient_formula_lock() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in [5, 6, 7, 23] {
            for _ in 0..12 {
                let (a1, a0) = (random_rational(&mut rng), random_rational(&mut rng));
                let sub = build_h(m)
                    .unwrap()
                    .affine_substitute(&LinearPoly::new(a1.clone(), a0.clone()).unwrap());
                let want = c_top(m, &a1, &a0);
                for (i, w) in want.iter().enumerate() {
                    assert_eq!(sub.coeff(m - i), *w, "m = {m}, i = {i}");
                }
            }
        }
        for n in [3, 4, 5] {
            for _ in 0..12 {
                let (b1, b0) = (random_rational(&mut rng), random_rational(&mut rng));
                let sub = build_r(n)
                    .unwrap()
                    .affine_substitute(&LinearPoly::new(b1.clone(), b0.clone()).unwrap());
                for (i, w) in d_top(n, &b1, &b0).iter().enumerate() {
                    assert_eq!(sub.coeff(n - i), *w, "n = {n}, i = {i}");
                }
            }
        }
    }

    #[test]
    fn lock_is_off_by_the_missing_linear_term_at_m_4() {
        // for m = 4 the x^(m-3) coefficient would need C(x, 1), which H_m omits
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..8 {
            let (a1, a0) = (random_rational(&mut rng), random_rational(&mut rng));
            let sub = build_h(4)
                .unwrap()
                .affine_substitute(&LinearPoly::new(a1.clone(), a0.clone()).unwrap());
            let want = c_top(4, &a1, &a0);
            assert_eq!(sub.coeff(4), want[0]);
            assert_eq!(sub.coeff(3), want[1]);
            assert_eq!(sub.coeff(2), want[2]);
            assert_eq!(&sub.coeff(1) + &a1, want[3]);
        }
    }

    #[test]
    fn power_filter_examples() {
        assert_eq!(kth_power_filter(&q("x^4"), &q("x^6")).unwrap(), vec![1, 2]);
        assert_eq!(kth_power_filter(&q("2x^4"), &q("x^4")).unwrap(), vec![1]);
        assert_eq!(
            kth_power_filter(&build_h(4).unwrap(), &build_r(4).unwrap()).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn erdos_selfridge_examples() {
        assert!(erdos_selfridge_scan(10, 2, 2).is_empty());
        assert!(erdos_selfridge_scan(2, 2, 2).is_empty());
        assert!(erdos_selfridge_scan(200, 10, 5).is_empty());
    }

    #[test]
    fn left_factor_examples() {
        let f = q("x^2 + 1").compose(&q("x^3"));
        let g = q("x^2 + 1").compose(&q("x^2 + x"));
        let lf = left_factor_search(&f, &g, 2).unwrap().unwrap();
        assert_eq!(lf.phi.compose(&lf.f_reduced), f);
        assert_eq!(lf.phi.compose(&lf.g_reduced), g);
        assert_eq!(lf.g_reduced, q("x^2 + x"));
        assert!(LinearPoly::solve_outer(&q("x^2 + 1"), &lf.phi).is_some());

        let lf = left_factor_search(&q("x^4"), &q("x^6"), 2).unwrap().unwrap();
        assert_eq!(lf.phi, q("x^2"));
        assert_eq!((lf.f_reduced, lf.g_reduced), (q("x^2"), q("x^3")));

        assert!(left_factor_search(&q("x^4 + x^3 + 1"), &q("x^6"), 2).unwrap().is_none());
    }

    #[test]
    fn hyperplane_fixture_is_finite() {
        let cert = finiteness(&build_h(4).unwrap(), &build_r(3).unwrap()).unwrap();
        assert_eq!(cert.verdict, FinitenessVerdict::Finite);
        assert!(cert.covers_all_branches());
        assert!(cert
            .cases
            .iter()
            .any(|c| c.k == 1 && c.kind.is_none() && c.tactic == Tactic::LeadingPower));
        let kinds: Vec<_> = cert.cases.iter().filter_map(|c| c.kind).collect();
        for kind in 1..=5 {
            assert!(kinds.contains(&kind));
        }
    }

    #[test]
    fn hyperplane_grid_is_finite() {
        for m in 4..=6 {
            for n in 3..=5 {
                let cert = finiteness(&build_h(m).unwrap(), &build_r(n).unwrap()).unwrap();
                assert_eq!(cert.verdict, FinitenessVerdict::Finite, "m = {m}, n = {n}");
                assert!(cert.covers_all_branches(), "m = {m}, n = {n}");
                let ks: Vec<_> = cert.cases.iter().map(|c| c.k).collect();
                assert!(ks.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn m23_dead_end_is_recorded() {
        let cert = finiteness(&build_h(23).unwrap(), &build_r(3).unwrap()).unwrap();
        assert_eq!(cert.verdict, FinitenessVerdict::Finite);
        let rec = cert
            .cases
            .iter()
            .find(|c| c.kind == Some(1) && !c.switched)
            .unwrap();
        assert_eq!(rec.identity, "coefficient of x^20 in f1(x + 10)");
        assert_eq!(
            rec.lhs,
            rational::to_text(&(Rational::one() / factorial(20)))
        );
    }

    #[test]
    fn pell_positive_control() {
        let (f, g) = (q("x^2"), q("2x^2 + 1"));
        let cert = finiteness(&f, &g).unwrap();
        assert_eq!(cert.verdict, FinitenessVerdict::RepresentationFound);
        let w = cert.witness.as_ref().unwrap();
        assert_eq!(w.pair.kind(), 2);
        assert!(w.recomposes(&f, &g));
        assert_eq!(cert.pell.as_ref().unwrap().unit, ("3".into(), "2".into()));
        let sols = solution_scan(&f, &g, 100, 1).unwrap();
        for (x, y) in [(3, 2), (17, 12), (99, 70)] {
            assert!(sols.contains(&(int(x), int(y))));
        }
    }

    #[test]
    fn power_family_positive_control() {
        let cert = finiteness(&q("x^3"), &q("x^2")).unwrap();
        assert_eq!(cert.verdict, FinitenessVerdict::RepresentationFound);
        assert_eq!(cert.witness.unwrap().pair.kind(), 1);
    }

    #[test]
    fn scan_examples() {
        let sols = solution_scan(&q("x^2"), &q("x^2"), 3, 1).unwrap();
        assert_eq!(sols.len(), 13);
        let sols = solution_scan(&q("x^2"), &q("4x^2"), 2, 2).unwrap();
        assert!(sols.contains(&(int(1), frac(1, 2))));
        assert!(solution_scan(&q("x"), &q("x"), MAX_BOX + 1, 1).is_err());
    }

    #[test]
    fn certificate_round_trip() {
        use crate::certificate::{Certificate, CertificateKind};
        let cert = finiteness(&build_h(5).unwrap(), &build_r(3).unwrap()).unwrap();
        let c = Certificate::new(CertificateKind::Finiteness, vec!["H_5".into(), "R_3".into()], &cert)
            .unwrap();
        let text = c.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.payload_as::<FinitenessCertificate>().unwrap(), cert);
    }

    #[test]
    fn degree_cap() {
        let big = Polynomial::monomial(int(1), 65);
        assert!(matches!(
            finiteness(&big, &q("x^2")),
            Err(Error::DegreeCap { degree: 65, cap: 64 })
        ));
    }
}
