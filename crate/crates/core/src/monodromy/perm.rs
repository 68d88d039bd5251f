//! Permutation groups on `{0, .., n-1}`: Schreier-Sims order and membership,
//! orbits, block systems, 2-transitivity.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::invalid(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// `0 -> 1 -> .. -> n-1 -> 0`.
    pub fn rotation(n: usize) -> Self {
        Self {
            images: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Self {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    /// Disjoint cycles, each starting at its smallest point, fixed points
    /// included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycles().len() == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if moved.is_empty() {
            return write!(f, "()");
        }
        for c in moved {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[base] = Some(Permutation::identity(n));
        Self {
            base,
            gens: Vec::new(),
            transversal,
        }
    }

    fn rebuild(&mut self) {
        let n = self.transversal.len();
        self.transversal = vec![None; n];
        self.transversal[self.base] = Some(Permutation::identity(n));
        let mut queue = vec![self.base];
        while let Some(x) = queue.pop() {
            let ux = self.transversal[x].clone().expect("orbit point");
            for g in &self.gens {
                let y = g.apply(x);
                if self.transversal[y].is_none() {
                    self.transversal[y] = Some(ux.then(g));
                    queue.push(y);
                }
            }
        }
    }

    fn orbit(&self) -> impl Iterator<Item = usize> + '_ {
        self.transversal
            .iter()
            .enumerate()
            .filter_map(|(i, t)| t.as_ref().map(|_| i))
    }
}

fn sift(levels: &[Level], from: usize, g: &Permutation) -> (Permutation, usize) {
    let mut h = g.clone();
    for (i, level) in levels.iter().enumerate().skip(from) {
        match &level.transversal[h.apply(level.base)] {
            Some(u) => h = h.then(&u.inverse()),
            None => return (h, i),
        }
    }
    (h, levels.len())
}

fn schreier_sims(n: usize, generators: &[Permutation]) -> Vec<Level> {
    let mut levels: Vec<Level> = Vec::new();
    let gens: Vec<_> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
    if gens.is_empty() {
        return levels;
    }
    let first = (0..n).find(|&i| gens.iter().any(|g| g.apply(i) != i)).expect("moved point");
    let mut top = Level::new(first, n);
    top.gens = gens;
    top.rebuild();
    levels.push(top);
    let mut i = 0;
    loop {
        let mut extended = None;
        'scan: for x in levels[i].orbit().collect::<Vec<_>>() {
            for g in levels[i].gens.clone() {
                let ux = levels[i].transversal[x].clone().expect("orbit point");
                let uy = levels[i].transversal[g.apply(x)].clone().expect("orbit closed");
                let schreier = ux.then(&g).then(&uy.inverse());
                let (h, j) = sift(&levels, i + 1, &schreier);
                if !h.is_identity() {
                    if j == levels.len() {
                        let b = (0..n).find(|&p| h.apply(p) != p).expect("moved point");
                        levels.push(Level::new(b, n));
                    }
                    for level in &mut levels[i + 1..=j] {
                        level.gens.push(h.clone());
                        level.rebuild();
                    }
                    extended = Some(j);
                    break 'scan;
                }
            }
        }
        match extended {
            Some(j) => i = j,
            None if i == 0 => break,
            None => i -= 1,
        }
    }
    levels
}

/// Group generated by a list of permutations, with its stabilizer chain.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(from = "GroupData", into = "GroupData")]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    base: Vec<usize>,
    order: String,
}

impl From<PermGroup> for GroupData {
    fn from(g: PermGroup) -> Self {
        Self {
            degree: g.degree,
            base: g.base(),
            order: g.order().to_string(),
            generators: g.generators,
        }
    }
}

impl From<GroupData> for PermGroup {
    fn from(d: GroupData) -> Self {
        Self::new(d.degree, d.generators).expect("generators were validated")
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators == other.generators
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::invalid(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        let levels = schreier_sims(degree, &generators);
        Ok(Self {
            degree,
            generators,
            levels,
        })
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = vec![Permutation::rotation(n)];
        if n > 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(Permutation { images: t });
        }
        Self::new(n, gens).expect("degrees agree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit().count()))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && {
            let (h, _) = sift(&self.levels, 0, p);
            h.is_identity()
        }
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// Finest block system in which all of `seeds` lie in one block.
    pub fn minimal_blocks(&self, seeds: &[usize]) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue = Vec::new();
        if let Some((&first, rest)) = seeds.split_first() {
            for &s in rest {
                queue.push((first, s));
            }
        }
        while let Some((a, b)) = queue.pop() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                continue;
            }
            parent[ra.max(rb)] = ra.min(rb);
            for g in &self.generators {
                queue.push((g.apply(ra), g.apply(rb)));
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; self.degree];
        for x in 0..self.degree {
            let r = find(&mut parent, x);
            if index[r] == usize::MAX {
                index[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[index[r]].push(x);
        }
        classes
    }

    /// Degree cap for [`PermGroup::block_systems`].
    pub const BLOCK_ENUMERATION_CAP: usize = 12;

    /// All nontrivial block systems of a transitive group, sorted by block
    /// size and then lexicographically.
    pub fn block_systems(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        let n = self.degree;
        if n > Self::BLOCK_ENUMERATION_CAP {
            return Err(Error::DegreeCap {
                degree: n,
                cap: Self::BLOCK_ENUMERATION_CAP,
            });
        }
        if !self.is_transitive() {
            return Err(Error::invalid("block systems need a transitive group"));
        }
        // every block through 0 is generated by itself; subsets of size > 1
        // through 0 cover all of them
        let mut found = BTreeSet::new();
        for mask in 1u32..(1u32 << (n.saturating_sub(1))) {
            let mut seeds = vec![0];
            seeds.extend((1..n).filter(|i| mask & (1 << (i - 1)) != 0));
            let blocks = self.minimal_blocks(&seeds);
            if blocks.len() > 1 && blocks.len() < n {
                found.insert((n / blocks.len(), blocks));
            }
        }
        Ok(found.into_iter().map(|(_, b)| b).collect())
    }

    pub fn is_primitive(&self) -> bool {
        self.is_transitive()
            && (1..self.degree).all(|j| self.minimal_blocks(&[0, j]).len() == 1)
    }

    /// Transitive with a transitive point stabilizer on the remaining points.
    pub fn is_doubly_transitive(&self) -> bool {
        let n = self.degree;
        if !self.is_transitive() || n < 2 {
            return false;
        }
        // Schreier generators of the stabilizer of 0
        let mut transversal: Vec<Option<Permutation>> = vec![None; n];
        transversal[0] = Some(Permutation::identity(n));
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            let ux = transversal[x].clone().expect("orbit point");
            for g in &self.generators {
                let y = g.apply(x);
                if transversal[y].is_none() {
                    transversal[y] = Some(ux.then(g));
                    queue.push(y);
                }
            }
        }
        let mut stab = Vec::new();
        for x in 0..n {
            let ux = transversal[x].as_ref().expect("transitive");
            for g in &self.generators {
                let uy = transversal[g.apply(x)].as_ref().expect("transitive");
                let s = ux.then(g).then(&uy.inverse());
                if !s.is_identity() {
                    stab.push(s);
                }
            }
        }
        let mut seen = vec![false; n];
        seen[1] = true;
        let mut frontier = vec![1];
        while let Some(x) = frontier.pop() {
            for s in &stab {
                let y = s.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        seen.iter().skip(1).all(|&b| b)
    }
}

/// Flags and block systems of a permutation group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAnalysis {
    pub order: String,
    pub orbits: Vec<Vec<usize>>,
    pub transitive: bool,
    pub primitive: bool,
    pub doubly_transitive: bool,
    /// `None` above the enumeration cap.
    pub block_systems: Option<Vec<Vec<Vec<usize>>>>,
}

pub fn analyze(group: &PermGroup) -> GroupAnalysis {
    let transitive = group.is_transitive();
    GroupAnalysis {
        order: group.order().to_string(),
        orbits: group.orbits(),
        transitive,
        primitive: group.is_primitive(),
        doubly_transitive: group.is_doubly_transitive(),
        block_systems: if transitive { group.block_systems().ok() } else { None },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    fn factorial(n: u32) -> BigUint {
        (1..=n).map(BigUint::from).product()
    }

    #[test]
    fn permutation_basics() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        let p = perm(&[1, 2, 0, 3]);
        assert_eq!(p.to_string(), "(0 1 2)");
        assert_eq!(p.then(&p.inverse()), Permutation::identity(4));
        assert_eq!(p.cycle_type(), vec![1, 3]);
        assert!(Permutation::rotation(5).is_full_cycle());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[1,2,0,3]");
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }

    #[test]
    fn cyclic_four() {
        let g = PermGroup::new(4, vec![Permutation::rotation(4)]).unwrap();
        let a = analyze(&g);
        assert_eq!(a.order, "4");
        assert!(a.transitive && !a.primitive && !a.doubly_transitive);
        assert_eq!(a.block_systems.unwrap(), vec![vec![vec![0, 2], vec![1, 3]]]);
    }

    #[test]
    fn symmetric_three() {
        let a = analyze(&PermGroup::symmetric(3));
        assert_eq!(a.order, "6");
        assert!(a.primitive && a.doubly_transitive);
        assert_eq!(a.block_systems.unwrap(), Vec::<Vec<Vec<usize>>>::new());
    }

    #[test]
    fn cyclic_six_has_two_systems() {
        let g = PermGroup::new(6, vec![Permutation::rotation(6)]).unwrap();
        let systems = g.block_systems().unwrap();
        assert_eq!(systems.len(), 2);
        assert_eq!(systems[0].len(), 3);
        assert_eq!(systems[1].len(), 2);
    }

    #[test]
    fn orders() {
        for n in 1..=9u32 {
            assert_eq!(PermGroup::symmetric(n as usize).order(), factorial(n));
        }
        // dihedral of the pentagon
        let d5 = PermGroup::new(5, vec![Permutation::rotation(5), perm(&[0, 4, 3, 2, 1])]).unwrap();
        assert_eq!(d5.order(), BigUint::from(10u32));
        assert!(d5.is_primitive() && !d5.is_doubly_transitive());
        // alternating A_5
        let a5 = PermGroup::new(5, vec![Permutation::rotation(5), perm(&[1, 2, 0, 3, 4])]).unwrap();
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert!(a5.is_doubly_transitive());
        assert!(!a5.contains(&perm(&[1, 0, 2, 3, 4])));
        assert!(a5.contains(&perm(&[1, 0, 3, 2, 4])));
        // wreath product S_2 wr S_3 acting on 6 points
        let w = PermGroup::new(
            6,
            vec![perm(&[1, 0, 2, 3, 4, 5]), perm(&[2, 3, 4, 5, 0, 1]), perm(&[2, 3, 0, 1, 4, 5])],
        )
        .unwrap();
        assert_eq!(w.order(), BigUint::from(48u32));
        assert_eq!(w.block_systems().unwrap().len(), 1);
    }

    #[test]
    fn trivial_and_intransitive() {
        let g = PermGroup::new(3, vec![]).unwrap();
        assert_eq!(g.order(), BigUint::one());
        assert!(!g.is_transitive());
        let h = PermGroup::new(4, vec![perm(&[1, 0, 2, 3])]).unwrap();
        assert_eq!(h.orbits(), vec![vec![0, 1], vec![2], vec![3]]);
        assert!(h.block_systems().is_err());
        let round: PermGroup = serde_json::from_str(&serde_json::to_string(&h).unwrap()).unwrap();
        assert_eq!(round, h);
    }

    fn brute_force_closure(n: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
        let mut seen = BTreeSet::from([Permutation::identity(n)]);
        let mut frontier = vec![Permutation::identity(n)];
        while let Some(p) = frontier.pop() {
            for g in gens {
                let q = p.then(g);
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        seen
    }

    fn random_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn order_matches_closure(gens in prop::collection::vec(random_perm(6), 1..3)) {
            let closure = brute_force_closure(6, &gens);
            let g = PermGroup::new(6, gens).unwrap();
            prop_assert_eq!(g.order(), BigUint::from(closure.len()));
            for p in closure.iter().take(50) {
                prop_assert!(g.contains(p));
            }
        }

        #[test]
        fn block_systems_are_invariant(gens in prop::collection::vec(random_perm(6), 1..3)) {
            let g = PermGroup::new(6, gens.clone()).unwrap();
            prop_assume!(g.is_transitive());
            for system in g.block_systems().unwrap() {
                let mut block_of = [0; 6];
                for (i, b) in system.iter().enumerate() {
                    for &x in b {
                        block_of[x] = i;
                    }
                }
                for p in &gens {
                    for b in &system {
                        let image: BTreeSet<_> = b.iter().map(|&x| block_of[p.apply(x)]).collect();
                        prop_assert_eq!(image.len(), 1);
                    }
                }
            }
        }
    }
}
