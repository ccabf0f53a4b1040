//! Permutations and permutation groups at desk scale.
//!
//! Everything acts on the right: `(x)(ab) = ((x)a)b`, so `a * b` means
//! "apply `a` first". Groups carry a base and strong generating set built by
//! Schreier–Sims, which gives exact orders, membership tests, and element
//! enumeration for the degrees this library needs (at most 32 points).

mod spherical;

pub use spherical::{
    enumerate_spherical, enumerate_spherical_ordered, hurwitz_classes, simultaneous_conjugator,
    HurwitzMode, HurwitzOrbit, SphericalTriple,
};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use std::fmt;
use std::sync::OnceLock;

/// Largest degree a [`PermGroup`] accepts; individual permutations may act
/// on more points (monodromy tuples do), but stabilizer-chain work is capped.
pub const MAX_GROUP_DEGREE: usize = 32;

/// Largest group order [`PermGroup::elements`] will materialize.
const MAX_ENUMERABLE_ORDER: u64 = 1_000_000;

/// A permutation of `{0, …, n-1}` (printed 1-based), acting on the right.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).map(|x| x as u8).collect(),
        }
    }

    /// Build from 0-based images; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize + 1 {
            return Err(Error::DegreeTooLarge(n, u8::MAX as usize + 1));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::invalid("images do not form a bijection"));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// Build from 1-based disjoint-or-not cycles, applied left to right.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        let mut acc = Perm::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut within = vec![false; degree];
            for k in 0..cycle.len() {
                let from = cycle[k];
                let to = cycle[(k + 1) % cycle.len()];
                if from == 0 || from > degree || to == 0 || to > degree {
                    return Err(Error::invalid(format!(
                        "cycle point out of range 1..={}",
                        degree
                    )));
                }
                if within[from - 1] {
                    return Err(Error::invalid("repeated point within a cycle"));
                }
                within[from - 1] = true;
                images[from - 1] = to - 1;
            }
            acc = acc.then(&Perm::from_images(images)?);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    /// `self` then `other` — the right-action product `self · other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Perm {
            images: self.images.iter().map(|&y| other.images[y as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u8;
        }
        Perm { images }
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugated_by(&self, c: &Perm) -> Perm {
        assert_eq!(self.degree(), c.degree(), "degree mismatch in conjugation");
        let mut images = vec![0u8; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[c.images[x] as usize] = c.images[y as usize];
        }
        Perm { images }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.then(other) == other.then(self)
    }

    /// Disjoint cycles (1-based), nontrivial only, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            loop {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            loop {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut acc: u64 = 1;
        for len in self.cycle_type() {
            acc = acc.lcm(&(len as u64));
        }
        acc
    }

    /// Length of the cycle through 0-based point `x`.
    pub fn cycle_length_through(&self, x: usize) -> usize {
        let mut len = 1;
        let mut y = self.apply(x);
        while y != x {
            len += 1;
            y = self.apply(y);
        }
        len
    }

    fn min_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(x, &y)| *x != y as usize)
            .map(|(x, _)| x)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parse cycle notation like `"(1,2)(3,4)"` (1-based). `"()"` and `"id"`
/// denote the identity. Cycles compose left to right.
pub fn parse_perm(s: &str, degree: usize) -> Result<Perm> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "()" || compact == "id" {
        return Ok(Perm::identity(degree));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::invalid(format!("expected '(' in permutation: {s}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::invalid(format!("unclosed cycle in permutation: {s}")))?;
        let body = &rest[1..close];
        if !body.is_empty() {
            let cycle: Vec<usize> = body
                .split(',')
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::invalid(format!("bad cycle entry {tok:?} in {s}")))
                })
                .collect::<Result<_>>()?;
            cycles.push(cycle);
        }
        rest = &rest[close + 1..];
    }
    Perm::from_cycles(&cycles, degree)
}

/// One level of a stabilizer chain.
#[derive(Clone)]
struct ChainLevel {
    point: usize,
    /// Transversal indexed by point: `u` with `point^u = γ`.
    transversal: Vec<Option<Perm>>,
    /// Orbit in discovery order.
    orbit: Vec<usize>,
}

/// Base and strong generating set, built by deterministic Schreier–Sims.
#[derive(Clone)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<ChainLevel>,
    /// Strong generators, each tagged with the deepest level it belongs to
    /// (it fixes the base points of all earlier levels).
    strong: Vec<(usize, Perm)>,
}

impl StabChain {
    pub(crate) fn build(degree: usize, gens: &[Perm]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
            strong: Vec::new(),
        };
        for g in gens {
            if !g.is_identity() {
                let (residue, level) = chain.sift_from(0, g);
                if !residue.is_identity() {
                    chain.add_strong(level, residue);
                }
            }
        }
        chain.close();
        chain
    }

    fn gens_for_level(&self, level: usize) -> Vec<&Perm> {
        self.strong
            .iter()
            .filter(|(l, _)| *l >= level)
            .map(|(_, g)| g)
            .collect()
    }

    fn recompute_orbit(&mut self, level: usize) {
        let gens: Vec<Perm> = self.gens_for_level(level).into_iter().cloned().collect();
        let point = self.levels[level].point;
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[point] = Some(Perm::identity(self.degree));
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let gamma = orbit[head];
            head += 1;
            let u = transversal[gamma].clone().unwrap();
            for g in &gens {
                let delta = g.apply(gamma);
                if transversal[delta].is_none() {
                    transversal[delta] = Some(u.then(g));
                    orbit.push(delta);
                }
            }
        }
        self.levels[level].transversal = transversal;
        self.levels[level].orbit = orbit;
    }

    fn add_strong(&mut self, level: usize, g: Perm) {
        debug_assert!(level <= self.levels.len());
        if level == self.levels.len() {
            let point = g.min_moved().expect("identity added to chain");
            self.levels.push(ChainLevel {
                point,
                transversal: Vec::new(),
                orbit: Vec::new(),
            });
        }
        self.strong.push((level, g));
        for l in (0..=level).rev() {
            self.recompute_orbit(l);
        }
    }

    /// Strip `p` through the chain starting at `start`; returns the residue
    /// and the level it got stuck at (`levels.len()` means fully sifted).
    fn sift_from(&self, start: usize, p: &Perm) -> (Perm, usize) {
        let mut cur = p.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            if cur.is_identity() {
                return (cur, i);
            }
            let img = cur.apply(lvl.point);
            match &lvl.transversal[img] {
                None => return (cur, i),
                Some(u) => cur = cur.then(&u.inverse()),
            }
        }
        let level = self.levels.len();
        (cur, level)
    }

    /// Verify strong generation: every Schreier generator at every level
    /// must sift to the identity through the deeper levels; any residue is
    /// adopted as a new strong generator and the affected levels re-checked.
    fn close(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        'levels: loop {
            let point = self.levels[i].point;
            let orbit = self.levels[i].orbit.clone();
            let gens: Vec<Perm> = self.gens_for_level(i).into_iter().cloned().collect();
            for &gamma in &orbit {
                let u = self.levels[i].transversal[gamma].clone().unwrap();
                for g in &gens {
                    let delta = g.apply(gamma);
                    let v = self.levels[i].transversal[delta].clone().unwrap();
                    let schreier = u.then(g).then(&v.inverse());
                    debug_assert_eq!(schreier.apply(point), point);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, level) = self.sift_from(i + 1, &schreier);
                    if !residue.is_identity() {
                        self.add_strong(level.max(i + 1), residue);
                        i = level.min(self.levels.len() - 1).max(i);
                        continue 'levels;
                    }
                }
            }
            if i == 0 {
                return;
            }
            i -= 1;
        }
    }

    pub(crate) fn order(&self) -> BigInt {
        let mut acc = BigInt::one();
        for lvl in &self.levels {
            acc *= BigInt::from(lvl.orbit.len());
        }
        acc
    }

    pub(crate) fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift_from(0, p);
        residue.is_identity()
    }

    /// Every element, as products of transversal representatives.
    fn elements(&self) -> Vec<Perm> {
        let mut acc = vec![Perm::identity(self.degree)];
        for lvl in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * lvl.orbit.len());
            for h in &acc {
                for &gamma in &lvl.orbit {
                    next.push(h.then(lvl.transversal[gamma].as_ref().unwrap()));
                }
            }
            acc = next;
        }
        acc
    }
}

/// Exact order of the subgroup generated by `perms` (all of degree
/// `degree`), via a throwaway stabilizer chain.
pub fn order_generated_by(degree: usize, perms: &[Perm]) -> BigInt {
    StabChain::build(degree, perms).order()
}

/// A permutation group with lazily built stabilizer chain, element list,
/// and conjugacy classes.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Vec<Perm>>,
    classes: OnceLock<Vec<Vec<Perm>>>,
}

impl Clone for PermGroup {
    /// Clones only the defining data; the memoized chain, element list, and
    /// classes are rebuilt on demand rather than copied.
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: OnceLock::new(),
            elements: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, ⟨", self.degree)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, "⟩)")
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree > MAX_GROUP_DEGREE {
            return Err(Error::DegreeTooLarge(degree, MAX_GROUP_DEGREE));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    /// The full symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(&[vec![1, 2]], n)?);
        }
        if n >= 3 {
            gens.push(Perm::from_cycles(&[(1..=n).collect()], n)?);
        }
        PermGroup::new(n, gens)
    }

    /// The alternating group on `n` points, generated by the 3-cycles
    /// `(1,2,k)`.
    pub fn alternating(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for k in 3..=n {
            gens.push(Perm::from_cycles(&[vec![1, 2, k]], n)?);
        }
        PermGroup::new(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigInt {
        self.chain().order()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.chain().contains(p)
    }

    /// All elements, sorted lexicographically by image tables. Guarded by
    /// [`MAX_ENUMERABLE_ORDER`].
    pub fn elements(&self) -> Result<&[Perm]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let order = self.order();
        if order > BigInt::from(MAX_ENUMERABLE_ORDER) {
            return Err(Error::OrderTooLarge(
                order.to_string(),
                MAX_ENUMERABLE_ORDER.to_string(),
            ));
        }
        let mut elems = self.chain().elements();
        elems.sort_unstable();
        debug_assert_eq!(BigInt::from(elems.len()), order);
        let _ = self.elements.set(elems);
        Ok(self.elements.get().unwrap())
    }

    /// Conjugacy classes as sorted element lists, ordered by their minimal
    /// members. Computed by closing under conjugation by the generators.
    pub fn conjugacy_classes(&self) -> Result<&[Vec<Perm>]> {
        if let Some(c) = self.classes.get() {
            return Ok(c);
        }
        let elems = self.elements()?;
        let index: std::collections::HashMap<&Perm, usize> =
            elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut assigned = vec![false; elems.len()];
        let mut classes = Vec::new();
        for start in 0..elems.len() {
            if assigned[start] {
                continue;
            }
            let mut members = vec![start];
            assigned[start] = true;
            let mut head = 0;
            while head < members.len() {
                let cur = &elems[members[head]];
                head += 1;
                for g in &self.generators {
                    let conj = cur.conjugated_by(g);
                    let j = *index.get(&conj).expect("conjugate escaped the group");
                    if !assigned[j] {
                        assigned[j] = true;
                        members.push(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members.into_iter().map(|i| elems[i].clone()).collect());
        }
        let _ = self.classes.set(classes);
        Ok(self.classes.get().unwrap())
    }

    /// Minimal representatives of the conjugacy classes whose elements have
    /// the given order.
    pub fn class_representatives_of_order(&self, order: u64) -> Result<Vec<Perm>> {
        Ok(self
            .conjugacy_classes()?
            .iter()
            .filter(|class| class[0].order() == order)
            .map(|class| class[0].clone())
            .collect())
    }

    /// All elements commuting with `p`.
    pub fn centralizer_elements(&self, p: &Perm) -> Result<Vec<Perm>> {
        Ok(self
            .elements()?
            .iter()
            .filter(|g| g.commutes_with(p))
            .cloned()
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(cycles: &str, degree: usize) -> Perm {
        parse_perm(cycles, degree).unwrap()
    }

    #[test]
    fn right_action_convention() {
        // (x)(ab) = ((x)a)b: with a = (1,2), b = (2,3), point 1 goes to 2
        // under a and then to 3 under b.
        let a = s("(1,2)", 3);
        let b = s("(2,3)", 3);
        let ab = a.then(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(format!("{}", ab), "(1,3,2)");
    }

    #[test]
    fn parse_and_print_round_trip() {
        for text in ["(1,2)(3,4)", "(1,7,5,2,4,6,3)", "(1,5,7)(2,3)(4,6)", "()"] {
            let p = s(text, 7);
            assert_eq!(format!("{}", p), text);
            assert_eq!(parse_perm(&format!("{}", p), 7).unwrap(), p);
        }
        assert_eq!(s("id", 5), Perm::identity(5));
        assert_eq!(s(" (1, 2) ( 3 ,4) ", 7), s("(1,2)(3,4)", 7));
        assert!(parse_perm("(1,2", 7).is_err());
        assert!(parse_perm("(1,1)", 7).is_err());
        assert!(parse_perm("(1,8)", 7).is_err());
    }

    #[test]
    fn cycle_type_pinned() {
        assert_eq!(s("(1,2)(3,4)", 7).cycle_type(), vec![2, 2, 1, 1, 1]);
        assert_eq!(Perm::identity(7).cycle_type(), vec![1; 7]);
        assert_eq!(s("(1,7,5,2,4,6,3)", 7).cycle_type(), vec![7]);
        assert_eq!(s("(1,5,7)(2,3)(4,6)", 7).order(), 6);
    }

    #[test]
    fn inverse_and_conjugation() {
        let p = s("(1,2,3)", 5);
        assert!(p.then(&p.inverse()).is_identity());
        let c = s("(3,4)", 5);
        // c⁻¹ (1,2,3) c relabels 3 to 4.
        assert_eq!(p.conjugated_by(&c), s("(1,2,4)", 5));
        // Conjugation agrees with the triple product.
        assert_eq!(
            p.conjugated_by(&c),
            c.inverse().then(&p).then(&c)
        );
    }

    #[test]
    fn group_orders_pinned() {
        assert_eq!(PermGroup::symmetric(7).unwrap().order(), BigInt::from(5040));
        assert_eq!(PermGroup::alternating(7).unwrap().order(), BigInt::from(2520));
        assert_eq!(PermGroup::new(4, vec![]).unwrap().order(), BigInt::one());
        assert_eq!(
            PermGroup::new(4, vec![Perm::identity(4)]).unwrap().order(),
            BigInt::one()
        );
        // Degree guard.
        assert!(matches!(
            PermGroup::symmetric(33),
            Err(Error::DegreeTooLarge(33, 32))
        ));
    }

    #[test]
    fn membership_matches_exhaustive_enumeration() {
        // Oracle: for S4, the chain's membership test must accept exactly
        // the 24 elements produced by multiplying generators exhaustively.
        let g = PermGroup::symmetric(4).unwrap();
        let mut all: std::collections::HashSet<Perm> =
            [Perm::identity(4)].into_iter().collect();
        loop {
            let mut grew = false;
            for p in all.clone() {
                for gen in g.generators() {
                    grew |= all.insert(p.then(gen));
                }
            }
            if !grew {
                break;
            }
        }
        assert_eq!(all.len(), 24);
        for p in &all {
            assert!(g.contains(p));
        }
        // Odd-degree check against A4.
        let a4 = PermGroup::alternating(4).unwrap();
        let inside = all.iter().filter(|p| a4.contains(p)).count();
        assert_eq!(inside, 12);
        assert_eq!(g.elements().unwrap().len(), 24);
    }

    #[test]
    fn alternating7_class_data() {
        let a7 = PermGroup::alternating(7).unwrap();
        let classes = a7.conjugacy_classes().unwrap();
        assert_eq!(classes.len(), 9);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 70, 105, 210, 280, 360, 360, 504, 630]);
        // 7-cycles split into two classes of 360; 5-cycles form one class
        // of 504.
        let sevens = a7.class_representatives_of_order(7).unwrap();
        assert_eq!(sevens.len(), 2);
        let fives = a7.class_representatives_of_order(5).unwrap();
        assert_eq!(fives.len(), 1);
        let five_class: usize = classes
            .iter()
            .filter(|c| c[0].order() == 5)
            .map(|c| c.len())
            .sum();
        assert_eq!(five_class, 504);
        // Order-6 elements have type (3,2,2) and form a single class of 210.
        let sixes = a7.class_representatives_of_order(6).unwrap();
        assert_eq!(sixes.len(), 1);
        assert_eq!(sixes[0].cycle_type(), vec![3, 2, 2]);
    }

    #[test]
    fn centralizer_orders() {
        let a7 = PermGroup::alternating(7).unwrap();
        let five = s("(1,2,3,4,5)", 7);
        assert_eq!(a7.centralizer_elements(&five).unwrap().len(), 5);
        let seven = s("(1,2,3,4,5,6,7)", 7);
        assert_eq!(a7.centralizer_elements(&seven).unwrap().len(), 7);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn products_of_generators_are_members(word in proptest::collection::vec(0usize..2, 0..12)) {
            let g = PermGroup::symmetric(5).unwrap();
            let mut p = Perm::identity(5);
            for i in word {
                p = p.then(&g.generators()[i]);
            }
            prop_assert!(g.contains(&p));
        }

        #[test]
        fn random_images_membership_matches_parity(seed in proptest::collection::vec(0u8..255, 8)) {
            // Fisher–Yates from the seed bytes; S5 contains everything,
            // A5 exactly the even ones.
            let mut images: Vec<usize> = (0..5).collect();
            for (i, &b) in seed.iter().take(4).enumerate() {
                let j = i + (b as usize) % (5 - i);
                images.swap(i, j);
            }
            let p = Perm::from_images(images).unwrap();
            let s5 = PermGroup::symmetric(5).unwrap();
            let a5 = PermGroup::alternating(5).unwrap();
            prop_assert!(s5.contains(&p));
            let parity_even = p
                .cycle_type()
                .iter()
                .map(|l| l - 1)
                .sum::<usize>()
                % 2
                == 0;
            prop_assert_eq!(a5.contains(&p), parity_even);
        }
    }
}
