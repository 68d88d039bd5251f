//! Geometric monodromy of `f(x) - t` by numeric root continuation.
//!
//! Branch points are the critical values of `f`. Their number is fixed
//! exactly beforehand (distinct roots of `Res_x(f', f - t)`), so numeric
//! clustering either reproduces it or fails loudly. Each loop is a ray from
//! a basepoint on a large circle to a small counterclockwise circle around
//! one branch point; loops are ordered by the angle at which their ray
//! leaves the basepoint, which makes their product the counterclockwise
//! circle through the basepoint.

pub mod perm;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use perm::{analyze, GroupAnalysis, PermGroup, Permutation};

use crate::criteria::delta_report;
use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, Polynomial};
use crate::rational;

type C = Complex<f64>;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_SEED: u64 = 0;

const MIN_STEP: f64 = 1e-12;
const MAX_STEP: f64 = 0.05;
const BASEPOINT_ATTEMPTS: usize = 32;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchPoint {
    pub re: f64,
    pub im: f64,
    /// Spread of the critical values merged into this point.
    pub error_radius: f64,
    /// Number of critical points (with multiplicity) over this value.
    pub critical_points: usize,
}

impl BranchPoint {
    fn z(&self) -> C {
        C::new(self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonodromyReport {
    pub input: Polynomial,
    pub degree: usize,
    pub tolerance: f64,
    pub seed: u64,
    pub basepoint: (f64, f64),
    /// In loop order.
    pub branch_points: Vec<BranchPoint>,
    pub loop_permutations: Vec<Permutation>,
    /// Inverse of the counterclockwise circle through the basepoint.
    pub infinity_permutation: Permutation,
    pub group: PermGroup,
    pub order: String,
    pub transitive: bool,
    pub primitive: bool,
    pub doubly_transitive: bool,
    pub block_systems: Vec<Vec<Vec<usize>>>,
    /// Always true: results come from floating-point continuation.
    pub numeric: bool,
}

impl MonodromyReport {
    /// Ordered product of the loops followed by the infinity permutation.
    pub fn product_relation_holds(&self) -> bool {
        self.loop_permutations
            .iter()
            .fold(Permutation::identity(self.degree), |acc, p| acc.then(p))
            .then(&self.infinity_permutation)
            .is_identity()
    }
}

/// `f` made monic, with complex coefficients, lowest degree first.
struct Numeric {
    coeffs: Vec<C>,
    tol: f64,
}

impl Numeric {
    fn new(f: &Polynomial, tol: f64) -> Self {
        let monic = f.monic();
        Self {
            coeffs: monic.coeffs().iter().map(|c| C::new(rational::to_f64(c), 0.0)).collect(),
            tol,
        }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `(f(x), f'(x))`.
    fn eval(&self, x: C) -> (C, C) {
        let mut p = C::zero();
        let mut dp = C::zero();
        for c in self.coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    }

    /// Newton on `f(x) = t`; `None` without convergence.
    fn newton(&self, mut x: C, t: C, iterations: usize) -> Option<C> {
        for _ in 0..iterations {
            let (p, dp) = self.eval(x);
            if dp.norm() == 0.0 {
                return None;
            }
            let dx = (p - t) / dp;
            x -= dx;
            if !x.is_finite() {
                return None;
            }
            if dx.norm() <= self.tol * (1.0 + x.norm()) {
                return Some(x);
            }
        }
        None
    }

    fn roots_at(&self, t: C) -> Result<Vec<C>> {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] -= t;
        let roots = companion_roots(&coeffs)?
            .into_iter()
            .map(|r| self.newton(r, t, 50).unwrap_or(r))
            .collect::<Vec<_>>();
        if separation(&roots) <= 10.0 * self.tol * (1.0 + max_norm(&roots)) {
            return Err(precision(
                "roots of f(x) = t at the basepoint are not separated",
                "another seed",
            ));
        }
        Ok(roots)
    }

    /// Continues `roots` along `path(s)`, `s` from 0 to 1.
    fn track(&self, mut roots: Vec<C>, path: impl Fn(f64) -> C) -> Result<Vec<C>> {
        let (mut s, mut ds) = (0.0f64, 0.01f64);
        let mut t = path(0.0);
        while s < 1.0 {
            let step = ds.min(1.0 - s);
            let t_next = path(s + step);
            match self.step(&roots, t, t_next) {
                Some(next) => {
                    roots = next;
                    s += step;
                    t = t_next;
                    ds = (ds * 1.5).min(MAX_STEP);
                }
                None => {
                    ds /= 2.0;
                    if ds < MIN_STEP {
                        return Err(Error::StepCollapse(format!("step below {MIN_STEP} at s = {s:.6}")));
                    }
                }
            }
        }
        Ok(roots)
    }

    fn step(&self, roots: &[C], t: C, t_next: C) -> Option<Vec<C>> {
        let sep = separation(roots);
        let mut out = Vec::with_capacity(roots.len());
        for &x in roots {
            let (_, dp) = self.eval(x);
            let predicted = x + (t_next - t) / dp;
            let corrected = self.newton(predicted, t_next, 6)?;
            if (corrected - x).norm() > sep / 3.0 || (corrected - predicted).norm() > sep / 10.0 {
                return None;
            }
            out.push(corrected);
        }
        (separation(&out) > 10.0 * self.tol * (1.0 + max_norm(&out))).then_some(out)
    }
}

fn precision(message: &str, suggestion: &str) -> Error {
    Error::Precision {
        message: message.to_string(),
        suggestion: suggestion.to_string(),
    }
}

fn separation(points: &[C]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            best = best.min((a - b).norm());
        }
    }
    best
}

fn max_norm(points: &[C]) -> f64 {
    points.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Eigenvalues of the companion matrix of a monic polynomial (lowest
/// coefficient first). The shifted QR iteration can stall on highly
/// symmetric companions; Aberth iteration takes over in that case.
fn companion_roots(coeffs: &[C]) -> Result<Vec<C>> {
    let d = coeffs.len() - 1;
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut m = DMatrix::<C>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = C::new(1.0, 0.0);
    }
    for i in 0..d {
        m[(i, d - 1)] = -coeffs[i];
    }
    if let Some(eig) = Schur::try_new(m, f64::EPSILON, 2000).and_then(|s| s.eigenvalues()) {
        return Ok(eig.iter().copied().collect());
    }
    aberth(coeffs)
}

/// Simultaneous Aberth-Ehrlich iteration from points on a circle enclosing
/// all roots.
fn aberth(coeffs: &[C]) -> Result<Vec<C>> {
    let d = coeffs.len() - 1;
    let bound = 1.0 + coeffs[..d].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<C> = (0..d)
        .map(|k| C::from_polar(bound, 0.4 + std::f64::consts::TAU * k as f64 / d as f64))
        .collect();
    let eval = |x: C| {
        let (mut p, mut dp) = (C::zero(), C::zero());
        for c in coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut largest = 0.0f64;
        for i in 0..d {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: C = (0..d).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (C::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= w;
            largest = largest.max(w.norm() / (1.0 + z[i].norm()));
        }
        if largest < 1e-15 {
            return Ok(z);
        }
    }
    if z.iter().all(|x| x.is_finite()) {
        Ok(z)
    } else {
        Err(precision("polynomial root finder diverged", "a smaller tolerance"))
    }
}

/// Critical values of `f`, clustered into exactly the number of distinct
/// critical values known from exact arithmetic.
fn branch_points(f: &Polynomial, num: &Numeric) -> Result<Vec<BranchPoint>> {
    let expected: usize = delta_report(f)?
        .multiplicity_profile
        .iter()
        .map(|sf| sf.factor.deg())
        .sum();
    let mut values: Vec<(C, usize)> = Vec::new();
    for sf in squarefree_decomposition(&f.derivative())? {
        let factor = Numeric::new(&sf.factor, num.tol);
        for r in companion_roots(&factor.coeffs)? {
            let c = factor.newton(r, C::zero(), 50).unwrap_or(r);
            values.push((num.eval(c).0, sf.multiplicity));
        }
    }
    // single linkage down to `expected` clusters
    let mut cluster: Vec<usize> = (0..values.len()).collect();
    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            pairs.push(((values[i].0 - values[j].0).norm(), i, j));
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut count = values.len();
    let mut merge_radius = 0.0f64;
    let mut next_gap = f64::INFINITY;
    for &(d, i, j) in &pairs {
        let (ci, cj) = (cluster[i], cluster[j]);
        if ci == cj {
            continue;
        }
        if count == expected {
            next_gap = d;
            break;
        }
        merge_radius = d;
        for c in cluster.iter_mut() {
            if *c == cj {
                *c = ci;
            }
        }
        count -= 1;
    }
    let scale = 1.0 + values.iter().map(|v| v.0.norm()).fold(0.0, f64::max);
    if count != expected || next_gap <= 1e3 * merge_radius.max(num.tol * scale) {
        return Err(precision(
            &format!("cannot resolve {expected} distinct branch points numerically"),
            "a smaller tolerance",
        ));
    }
    let mut labels: Vec<usize> = cluster.clone();
    labels.sort_unstable();
    labels.dedup();
    Ok(labels
        .into_iter()
        .map(|label| {
            let members: Vec<&(C, usize)> = values
                .iter()
                .zip(&cluster)
                .filter(|(_, &c)| c == label)
                .map(|(v, _)| v)
                .collect();
            let center = members.iter().map(|m| m.0).sum::<C>() / members.len() as f64;
            let spread = members.iter().map(|m| (m.0 - center).norm()).fold(0.0, f64::max);
            BranchPoint {
                re: center.re,
                im: center.im,
                error_radius: spread + num.tol * scale,
                critical_points: members.iter().map(|m| m.1).sum(),
            }
        })
        .collect())
}

fn segment_distance(p: C, a: C, b: C) -> f64 {
    let ab = b - a;
    let s = ((p - a) * ab.conj()).re / ab.norm_sqr();
    (p - (a + ab * s.clamp(0.0, 1.0))).norm()
}

struct Layout {
    basepoint: C,
    /// `(branch point, loop radius)` in loop order.
    loops: Vec<(BranchPoint, f64)>,
}

/// Loop radii for a basepoint: a third of the distance to the nearest other
/// branch point, shrunk so that no ray to another branch point enters the
/// circle.
fn loop_radii(points: &[BranchPoint], t0: C) -> Vec<f64> {
    points
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let mut r = (t0 - b.z()).norm() / 3.0;
            for (j, c) in points.iter().enumerate() {
                if j != i {
                    r = r.min((b.z() - c.z()).norm() / 3.0);
                    r = r.min(segment_distance(b.z(), t0, c.z()) / 1.5);
                }
            }
            r
        })
        .collect()
}

/// Tries seeded basepoint angles and keeps the one whose smallest loop
/// radius, relative to the local spacing, is largest.
fn layout(points: Vec<BranchPoint>, seed: u64) -> Result<Layout> {
    let far = points.iter().map(|b| b.z().norm()).fold(0.0, f64::max);
    let radius = 2.0 * far + 1.0;
    let spacing: Vec<f64> = points
        .iter()
        .enumerate()
        .map(|(i, b)| {
            points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, c)| (b.z() - c.z()).norm())
                .fold(radius, f64::min)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, C, Vec<f64>)> = None;
    for _ in 0..BASEPOINT_ATTEMPTS {
        let t0 = C::from_polar(radius, rng.random::<f64>() * std::f64::consts::TAU);
        let rho = loop_radii(&points, t0);
        let clear = rho
            .iter()
            .zip(&points)
            .all(|(r, b)| *r > 100.0 * b.error_radius);
        let score = rho
            .iter()
            .zip(&spacing)
            .map(|(r, s)| r / s)
            .fold(f64::INFINITY, f64::min);
        if clear && best.as_ref().is_none_or(|(s, _, _)| score > *s) {
            best = Some((score, t0, rho));
        }
    }
    let Some((_, t0, rho)) = best else {
        return Err(precision(
            "no basepoint with rays clear of the other branch points",
            "another seed or a smaller tolerance",
        ));
    };
    let inward = -t0;
    let mut loops: Vec<(BranchPoint, f64)> = points.into_iter().zip(rho).collect();
    loops.sort_by(|a, b| {
        let ka = ((a.0.z() - t0) / inward).arg();
        let kb = ((b.0.z() - t0) / inward).arg();
        ka.total_cmp(&kb)
    });
    Ok(Layout { basepoint: t0, loops })
}

/// Permutation taking start root `i` to the end root it was continued into.
fn read_permutation(start: &[C], end: &[C]) -> Result<Permutation> {
    let sep = separation(start);
    let images = end
        .iter()
        .map(|e| {
            let (j, d) = start
                .iter()
                .enumerate()
                .map(|(j, s)| (j, (e - s).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("nonempty");
            if d < sep / 4.0 {
                Ok(j)
            } else {
                Err(precision(
                    "continued root does not return near a start root",
                    "a smaller tolerance",
                ))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images).map_err(|_| precision("two roots collided in continuation", "a smaller tolerance"))
}

fn track_loop(num: &Numeric, start: &[C], t0: C, center: C, rho: f64) -> Result<Permutation> {
    let offset = (t0 - center) / (t0 - center).norm() * rho;
    let entry = center + offset;
    let phase = offset.arg();
    let out = num.track(start.to_vec(), |s| t0 + (entry - t0) * s)?;
    let around = num.track(out, |s| {
        center + C::from_polar(rho, phase + std::f64::consts::TAU * s)
    })?;
    let back = num.track(around, |s| entry + (t0 - entry) * s)?;
    read_permutation(start, &back)
}

/// Monodromy group of `f(x) - t` over `C(t)`.
pub fn monodromy(f: &Polynomial, tolerance: f64, seed: u64) -> Result<MonodromyReport> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(Error::invalid("monodromy needs deg f >= 2")),
    };
    if !(tolerance > 0.0 && tolerance < 1e-2) {
        return Err(Error::invalid(format!("tolerance {tolerance} outside (0, 0.01)")));
    }
    let num = Numeric::new(f, tolerance);
    debug_assert_eq!(num.degree(), n);
    let Layout { basepoint, loops } = layout(branch_points(f, &num)?, seed)?;
    let start = num.roots_at(basepoint)?;
    let loop_permutations = loops
        .iter()
        .map(|(b, rho)| track_loop(&num, &start, basepoint, b.z(), *rho))
        .collect::<Result<Vec<_>>>()?;
    let (radius, phase) = (basepoint.norm(), basepoint.arg());
    let big = num.track(start.clone(), |s| {
        C::from_polar(radius, phase + std::f64::consts::TAU * s)
    })?;
    let infinity_permutation = read_permutation(&start, &big)?.inverse();
    let group = PermGroup::new(n, loop_permutations.clone())?;
    let analysis = analyze(&group);
    Ok(MonodromyReport {
        input: f.clone(),
        degree: n,
        tolerance,
        seed,
        basepoint: (basepoint.re, basepoint.im),
        branch_points: loops.into_iter().map(|(b, _)| b).collect(),
        loop_permutations,
        infinity_permutation,
        order: analysis.order,
        transitive: analysis.transitive,
        primitive: analysis.primitive,
        doubly_transitive: analysis.doubly_transitive,
        block_systems: analysis.block_systems.unwrap_or_default(),
        group,
        numeric: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{fried1_phi_classifier, PhiVerdict};
    use crate::decompose::decompose_once;
    use crate::parse::parse;

    fn run(s: &str) -> MonodromyReport {
        monodromy(&parse(s).unwrap(), DEFAULT_TOLERANCE, DEFAULT_SEED).unwrap()
    }

    #[test]
    fn pure_power_is_cyclic() {
        for n in 2..=7 {
            let r = run(&format!("x^{n}"));
            assert_eq!(r.branch_points.len(), 1);
            assert!(r.loop_permutations[0].is_full_cycle());
            assert_eq!(r.order, n.to_string());
            assert!(r.product_relation_holds());
        }
    }

    #[test]
    fn cubic_examples() {
        let r = run("x^3 + x");
        assert_eq!(r.order, "6");
        assert!(r.doubly_transitive);
        // D_3(x, 1): two simple branch points, still all of S_3
        let r = run("x^3 - 3x");
        assert_eq!(r.branch_points.len(), 2);
        assert_eq!(r.order, "6");
        assert!(r.doubly_transitive);
    }

    #[test]
    fn dickson_five_is_dihedral() {
        let r = run("x^5 - 5x^3 + 5x");
        assert_eq!(r.order, "10");
        assert!(r.primitive && !r.doubly_transitive);
        assert_eq!(
            fried1_phi_classifier(&parse("x^5 - 5x^3 + 5x").unwrap()).unwrap(),
            PhiVerdict::PhiReducible
        );
    }

    #[test]
    fn composite_blocks_match_decompositions() {
        for s in ["x^4 + x^2 + x", "(x^2 + x)^3 + 2(x^2 + x)", "x^6 + x^3", "x^8 - 8x^6 + 20x^4 - 16x^2 + 2"] {
            let f = parse(s).unwrap();
            let r = run(s);
            assert!(r.transitive && r.infinity_permutation.is_full_cycle(), "{s}");
            assert!(r.product_relation_holds(), "{s}");
            let d = decompose_once(&f).unwrap();
            assert_eq!(r.primitive, d.is_empty(), "{s}");
            assert_eq!(r.block_systems.len(), d.len(), "{s}");
        }
    }

    #[test]
    fn deterministic_by_seed() {
        let f = parse("x^5 + 2x^2 - x + 1").unwrap();
        let a = monodromy(&f, 1e-10, 3).unwrap();
        let b = monodromy(&f, 1e-10, 3).unwrap();
        assert_eq!(a, b);
        let c = monodromy(&f, 1e-10, 4).unwrap();
        assert_eq!(a.order, c.order);
        assert_eq!(a.order, "120");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(monodromy(&parse("x + 1").unwrap(), 1e-10, 0).is_err());
        assert!(monodromy(&parse("x^3").unwrap(), 0.0, 0).is_err());
    }

    #[test]
    fn report_serializes() {
        let r = run("x^4 + x");
        let json = serde_json::to_string(&r).unwrap();
        let back: MonodromyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
