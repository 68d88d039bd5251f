//! Factorization over the rationals by the Zassenhaus method: factor modulo
//! a good prime, Hensel-lift, recombine. Irreducibility is first screened by
//! comparing distinct-degree patterns modulo several primes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Field, PolyP};
use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, Polynomial};

type ZPoly = Vec<BigInt>;

const SCREEN_PRIMES: usize = 8;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn primitive(f: &Polynomial) -> ZPoly {
    f.content_and_primitive().1
}

fn to_modp(f: &[BigInt], fp: &Field) -> PolyP {
    let p = BigInt::from(fp.p);
    fp.trim(
        f.iter()
            .map(|c| c.mod_floor(&p).to_u64().expect("residue fits"))
            .collect(),
    )
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Primes for which `f` stays squarefree of the same degree.
fn good_primes(f: &[BigInt]) -> impl Iterator<Item = Field> + '_ {
    let lc = f.last().cloned().expect("nonzero polynomial");
    small_primes()
        .take(2000)
        .map(Field::new)
        .filter(move |fp| {
            !(&lc % BigInt::from(fp.p)).is_zero() && fp.is_squarefree(&to_modp(f, fp))
        })
}

/// Degrees that a factor over the rationals could have, given the degrees
/// of the irreducible factors modulo one prime.
fn subset_sums(degrees: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0usize]);
    for &d in degrees {
        let next: Vec<usize> = sums.iter().map(|s| s + d).collect();
        sums.extend(next);
    }
    sums
}

/// True when the modular degree patterns leave no room for a proper factor.
fn screen_irreducible(f: &[BigInt]) -> bool {
    let n = f.len() - 1;
    let mut possible: BTreeSet<usize> = (1..n).collect();
    for fp in good_primes(f).take(SCREEN_PRIMES) {
        let mut degrees = Vec::new();
        for (g, d) in fp.distinct_degree(&to_modp(f, &fp)) {
            degrees.extend(std::iter::repeat_n(d, (g.len() - 1) / d));
        }
        let sums = subset_sums(&degrees);
        possible.retain(|d| sums.contains(d));
        if possible.is_empty() {
            return true;
        }
    }
    false
}

// Arithmetic on integer polynomials modulo m (symmetric residues not needed
// until recombination).

fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce(
        &(0..n)
            .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
            .collect::<Vec<_>>(),
        m,
    )
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce(
        &(0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect::<Vec<_>>(),
        m,
    )
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(&out, m)
}

/// Division by a monic `b` modulo `m`.
fn div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let mut r = reduce(a, m);
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = (&r[i + j] - &c * bj).mod_floor(m);
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn scale_mod(a: &[BigInt], c: &BigInt, m: &BigInt) -> ZPoly {
    reduce(&a.iter().map(|x| x * c).collect::<Vec<_>>(), m)
}

fn from_modp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Extended gcd modulo `p`: `s*a + t*b = 1`.
fn ext_gcd_modp(fp: &Field, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp.div_rem(&r0, &r1);
        let s2 = fp.sub_poly(&s0, &fp.mul_poly(&q, &s1));
        let t2 = fp.sub_poly(&t0, &fp.mul_poly(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = fp.inv(r0[0]);
    let scale = |v: &[u64]| fp.trim(v.iter().map(|&c| c * inv % fp.p).collect());
    (scale(&s0), scale(&t0))
}

/// Quadratic Hensel lifting of `f = g*h mod p` (with `h` monic) to `mod p^e`
/// for the smallest power exceeding `bound`.
fn hensel_lift(
    f: &[BigInt],
    g: &[u64],
    h: &[u64],
    fp: &Field,
    bound: &BigInt,
) -> (ZPoly, ZPoly, BigInt) {
    let (s, t) = ext_gcd_modp(fp, g, h);
    let (mut g, mut h) = (from_modp(g), from_modp(h));
    let (mut s, mut t) = (from_modp(&s), from_modp(&t));
    let mut m = BigInt::from(fp.p);
    while &m <= bound {
        let m2 = &m * &m;
        let e = sub_mod(f, &mul_mod(&g, &h, &m2), &m2);
        let (q, r) = div_rem_monic(&mul_mod(&s, &e, &m2), &h, &m2);
        let g_new = add_mod(&add_mod(&g, &mul_mod(&t, &e, &m2), &m2), &mul_mod(&q, &g, &m2), &m2);
        let h_new = add_mod(&h, &r, &m2);
        let b = sub_mod(
            &add_mod(&mul_mod(&s, &g_new, &m2), &mul_mod(&t, &h_new, &m2), &m2),
            &[BigInt::one()],
            &m2,
        );
        let (c, d) = div_rem_monic(&mul_mod(&s, &b, &m2), &h_new, &m2);
        s = sub_mod(&s, &d, &m2);
        t = sub_mod(&sub_mod(&t, &mul_mod(&t, &b, &m2), &m2), &mul_mod(&c, &g_new, &m2), &m2);
        g = g_new;
        h = h_new;
        m = m2;
    }
    (g, h, m)
}

/// Lifts `f = lc * u_1 * ... * u_r mod p` to monic lifts modulo `m > bound`.
fn multi_lift(f: &[BigInt], factors: &[PolyP], fp: &Field, bound: &BigInt) -> (Vec<ZPoly>, BigInt) {
    let lc = f.last().unwrap().clone();
    let mut lifted = Vec::new();
    let mut rest = f.to_vec();
    let mut modulus = BigInt::one();
    for i in 0..factors.len() - 1 {
        let rest_lc = rest.last().unwrap().clone();
        let lc_p = rest_lc.mod_floor(&BigInt::from(fp.p)).to_u64().unwrap();
        let g0: PolyP = fp.trim(factors[i].iter().map(|&c| c * lc_p % fp.p).collect());
        let h0 = factors[i + 1..]
            .iter()
            .fold(vec![1u64], |acc, u| fp.mul_poly(&acc, u));
        let (g, h, m) = hensel_lift(&rest, &g0, &h0, fp, bound);
        let inv = rest_lc
            .modinv(&m)
            .expect("leading coefficient is a unit modulo p^e");
        lifted.push(scale_mod(&g, &inv, &m));
        rest = h;
        modulus = m;
    }
    if factors.len() == 1 {
        let m = {
            let mut m = BigInt::from(fp.p);
            while &m <= bound {
                m = &m * &m;
            }
            m
        };
        let inv = lc.modinv(&m).unwrap();
        return (vec![scale_mod(f, &inv, &m)], m);
    }
    lifted.push(rest);
    (lifted, modulus)
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    trim(
        a.iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Exact division over the integers, if it exists.
fn exact_div_z(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let pa = Polynomial::from_bigints(a);
    let pb = Polynomial::from_bigints(b);
    let q = pa.exact_div(&pb)?;
    q.has_integer_coeffs()
        .then(|| q.coeffs().iter().map(|c| c.to_integer()).collect())
}

/// Coefficient bound for factors of `f`: `2^n * ||f||_2`, times `|lc|`.
fn factor_bound(f: &[BigInt]) -> BigInt {
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    let n = f.len() - 1;
    (BigInt::one() << n) * norm * f.last().unwrap().abs() * 2
}

fn choose_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Irreducible factors of a primitive squarefree integer polynomial.
fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let fp = good_primes(f).next().expect("some small prime keeps f squarefree");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let factors_p = fp.factor_squarefree(&to_modp(f, &fp), &mut rng);
    if factors_p.len() == 1 {
        return vec![f.to_vec()];
    }
    let bound = factor_bound(f);
    let (mut lifted, m) = multi_lift(f, &factors_p, &fp, &bound);
    let mut rest = f.to_vec();
    let mut out = Vec::new();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let mut found = false;
        for subset in choose_subsets(lifted.len(), k) {
            let lc = rest.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| mul_mod(&acc, &lifted[i], &m));
            let cand = symmetric(&prod, &m);
            let c = content(&cand);
            let cand: ZPoly = cand.iter().map(|x| x / &c).collect();
            if let Some(q) = exact_div_z(&rest, &cand) {
                out.push(cand);
                rest = q;
                let keep: Vec<ZPoly> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, u)| u.clone())
                    .collect();
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            k += 1;
        }
    }
    out.push(rest);
    out
}

fn normalize_sign(mut a: ZPoly) -> ZPoly {
    if a.last().is_some_and(Signed::is_negative) {
        a.iter_mut().for_each(|c| *c = -c.clone());
    }
    a
}

/// Irreducible factors over the rationals with multiplicities. Factors are
/// primitive integer polynomials with positive leading coefficient, sorted
/// by degree then text.
pub fn factor(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if f.is_constant() {
        return Err(Error::Degenerate("factorization of a constant".into()));
    }
    let mut out = Vec::new();
    for sf in squarefree_decomposition(f)? {
        let prim = primitive(&sf.factor);
        for g in zassenhaus(&prim) {
            out.push((Polynomial::from_bigints(&normalize_sign(g)), sf.multiplicity));
        }
    }
    out.sort_by(|a, b| {
        (a.0.deg(), a.0.canonical_text()).cmp(&(b.0.deg(), b.0.canonical_text()))
    });
    Ok(out)
}

/// Irreducibility over the rationals; constants are not irreducible.
pub fn is_irreducible(f: &Polynomial) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            if !f.is_squarefree() {
                return false;
            }
            let prim = primitive(f);
            screen_irreducible(&prim) || zassenhaus(&prim).len() == 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;
    use crate::testutil;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn small_factorizations() {
        let f = &p(&[-1, 0, 1]) * &p(&[1, 0, 1]);
        let fs = factor(&f).unwrap();
        assert_eq!(fs, vec![(p(&[1, 1]), 1), (p(&[-1, 1]), 1), (p(&[1, 0, 1]), 1)]);
        // x^4 + 1 is irreducible over Q but splits modulo every prime
        assert!(is_irreducible(&p(&[1, 0, 0, 0, 1])));
        assert_eq!(factor(&p(&[1, 0, 0, 0, 1])).unwrap().len(), 1);
        assert!(!is_irreducible(&p(&[0, 0, 4])));
        assert!(!is_irreducible(&p(&[4, 0, 1]).pow(2)));
        assert!(is_irreducible(&p(&[1, 0, 1])));
    }

    #[test]
    fn schur_exponential_truncations_are_irreducible() {
        let f = parse::parse("1 + x + 1/2 x^2 + 1/6 x^3 + 1/24 x^4").unwrap();
        assert!(is_irreducible(&f));
        let f = parse::parse("1 + x + 1/2 x^2 + 1/6 x^3 + 1/24 x^4 + 1/120 x^5 + 1/720 x^6 + 1/5040 x^7")
            .unwrap();
        assert!(is_irreducible(&f));
    }

    #[test]
    fn swinnerton_dyer_style_product() {
        // (x^4 - 10x^2 + 1) is irreducible and splits into quadratics mod every p
        let sd = p(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&sd));
        let f = &sd * &p(&[-2, 0, 1]);
        let fs = factor(&f).unwrap();
        assert_eq!(fs, vec![(p(&[-2, 0, 1]), 1), (sd, 1)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn factors_multiply_back(
            a in testutil::int_poly(1, 4, 9),
            b in testutil::int_poly(1, 4, 9),
            c in testutil::int_poly(1, 3, 9),
        ) {
            let f = &(&a * &b) * &c;
            let fs = factor(&f).unwrap();
            prop_assert!(fs.iter().map(|(_, m)| m).sum::<usize>() >= 3);
            let prod = fs.iter().fold(Polynomial::one(), |acc, (g, m)| &acc * &g.pow(*m));
            prop_assert_eq!(prod.monic(), f.monic());
            for (g, _) in &fs {
                prop_assert!(is_irreducible(g));
            }
        }
    }
}
