//! Spherical systems of generators and their Hurwitz equivalence.
//!
//! A spherical system is a triple with `a1·a2·a3 = 1` generating the group;
//! its signature is the multiset of element orders. Two braid moves
//! (and optionally simultaneous conjugation) generate the equivalence:
//! `(a1,a2,a3) ≡ (a2, a2⁻¹a1a2, a3) ≡ (a1, a3, a3⁻¹a2a3)`.

use super::{order_generated_by, Perm, PermGroup};
use crate::{Error, Result};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::{HashMap, VecDeque};

/// A triple of permutations multiplying to the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SphericalTriple {
    a1: Perm,
    a2: Perm,
    a3: Perm,
}

impl SphericalTriple {
    pub fn new(a1: Perm, a2: Perm, a3: Perm) -> Result<Self> {
        if a1.degree() != a2.degree() || a1.degree() != a3.degree() {
            return Err(Error::DegreeMismatch(a1.degree(), a3.degree()));
        }
        if !a1.then(&a2).then(&a3).is_identity() {
            return Err(Error::NotSpherical(format!(
                "product {}·{}·{} is not the identity",
                a1, a2, a3
            )));
        }
        Ok(SphericalTriple { a1, a2, a3 })
    }

    /// Complete a pair to a triple: `a3 = (a1·a2)⁻¹`.
    pub fn from_pair(a1: Perm, a2: Perm) -> Result<Self> {
        let a3 = a1.then(&a2).inverse();
        SphericalTriple::new(a1, a2, a3)
    }

    pub fn a1(&self) -> &Perm {
        &self.a1
    }
    pub fn a2(&self) -> &Perm {
        &self.a2
    }
    pub fn a3(&self) -> &Perm {
        &self.a3
    }

    pub fn degree(&self) -> usize {
        self.a1.degree()
    }

    /// Element orders in triple position.
    pub fn orders(&self) -> [u64; 3] {
        [self.a1.order(), self.a2.order(), self.a3.order()]
    }

    /// The signature: orders as a sorted multiset.
    pub fn signature(&self) -> [u64; 3] {
        let mut s = self.orders();
        s.sort_unstable();
        s
    }

    /// Order of the subgroup the triple generates.
    pub fn generated_order(&self) -> BigInt {
        order_generated_by(self.degree(), &[self.a1.clone(), self.a2.clone()])
    }

    /// The braid move on the first pair and its inverse, the braid move on
    /// the second pair and its inverse.
    pub fn braid_neighbors(&self) -> [SphericalTriple; 4] {
        let m1 = SphericalTriple {
            a1: self.a2.clone(),
            a2: self.a1.conjugated_by(&self.a2),
            a3: self.a3.clone(),
        };
        let m1_inv = SphericalTriple {
            a1: self.a2.conjugated_by(&self.a1.inverse()),
            a2: self.a1.clone(),
            a3: self.a3.clone(),
        };
        let m2 = SphericalTriple {
            a1: self.a1.clone(),
            a2: self.a3.clone(),
            a3: self.a2.conjugated_by(&self.a3),
        };
        let m2_inv = SphericalTriple {
            a1: self.a1.clone(),
            a2: self.a3.conjugated_by(&self.a2.inverse()),
            a3: self.a2.clone(),
        };
        [m1, m1_inv, m2, m2_inv]
    }

    pub fn conjugated_by(&self, c: &Perm) -> SphericalTriple {
        SphericalTriple {
            a1: self.a1.conjugated_by(c),
            a2: self.a2.conjugated_by(c),
            a3: self.a3.conjugated_by(c),
        }
    }

    fn key(&self) -> Box<[u8]> {
        // a3 is determined by a1 and a2.
        let mut k = Vec::with_capacity(2 * self.degree());
        k.extend_from_slice(self.a1.images());
        k.extend_from_slice(self.a2.images());
        k.into_boxed_slice()
    }
}

/// All spherical systems of generators of `g` whose element orders are
/// exactly `(r1, r2, r3)` in triple position, up to simultaneous
/// conjugation in `g`.
///
/// `a1` runs over conjugacy-class representatives of order `r1` and `a2`
/// over all elements of order `r2`; classes with `a1` fixed correspond to
/// orbits of the centralizer of `a1` acting on `a2` by conjugation.
pub fn enumerate_spherical_ordered(
    g: &PermGroup,
    orders: [u64; 3],
) -> Result<Vec<SphericalTriple>> {
    let [r1, r2, r3] = orders;
    let elements = g.elements()?;
    let group_order = g.order();
    let degree = g.degree();

    let reps = g.class_representatives_of_order(r1)?;
    let candidates: Vec<&Perm> = elements.iter().filter(|p| p.order() == r2).collect();
    let mut per_rep: Vec<Vec<SphericalTriple>> = reps
        .par_iter()
        .map(|a1| {
            let centralizer: Vec<&Perm> = elements
                .iter()
                .filter(|c| c.commutes_with(a1))
                .collect();
            let survivors: Vec<&Perm> = candidates
                .iter()
                .copied()
                .filter(|a2| a1.then(a2).order() == r3)
                .collect();
            let mut seen: std::collections::HashSet<Perm> =
                std::collections::HashSet::new();
            let mut found = Vec::new();
            for &a2 in &survivors {
                if seen.contains(a2) {
                    continue;
                }
                for c in &centralizer {
                    seen.insert(a2.conjugated_by(c));
                }
                if order_generated_by(degree, &[a1.clone(), a2.clone()]) == group_order {
                    found.push(
                        SphericalTriple::from_pair(a1.clone(), a2.clone())
                            .expect("pair completion is spherical"),
                    );
                }
            }
            found
        })
        .collect();
    let mut out = Vec::new();
    for v in per_rep.drain(..) {
        out.extend(v);
    }
    Ok(out)
}

/// All spherical systems of generators of `g` with the given signature
/// (a multiset — every ordering of it is covered), up to simultaneous
/// conjugation in `g`.
pub fn enumerate_spherical(g: &PermGroup, signature: [u64; 3]) -> Result<Vec<SphericalTriple>> {
    let mut arrangements = vec![
        [signature[0], signature[1], signature[2]],
        [signature[0], signature[2], signature[1]],
        [signature[1], signature[0], signature[2]],
        [signature[1], signature[2], signature[0]],
        [signature[2], signature[0], signature[1]],
        [signature[2], signature[1], signature[0]],
    ];
    arrangements.sort_unstable();
    arrangements.dedup();

    let mut out = Vec::new();
    for arrangement in arrangements {
        out.extend(enumerate_spherical_ordered(g, arrangement)?);
    }
    Ok(out)
}

/// Which moves generate the equivalence.
#[derive(Clone, Copy)]
pub enum HurwitzMode<'a> {
    BraidOnly,
    /// Braid moves together with simultaneous conjugation by the given
    /// group (closing under its generators).
    BraidWithConjugation(&'a PermGroup),
}

/// One orbit of the Hurwitz action.
#[derive(Clone, Debug)]
pub struct HurwitzOrbit {
    /// Lexicographically smallest triple in the orbit.
    pub representative: SphericalTriple,
    /// Total number of triples in the orbit.
    pub size: u64,
    /// Indices into the input list of the triples this orbit contains.
    pub input_members: Vec<usize>,
}

/// Partition `triples` into orbits of the Hurwitz action, exploring each
/// orbit exhaustively by breadth-first closure. Every expanded triple is
/// checked to still be spherical, of the common signature, and to generate
/// a subgroup of the common order.
pub fn hurwitz_classes(
    triples: &[SphericalTriple],
    mode: HurwitzMode<'_>,
) -> Result<Vec<HurwitzOrbit>> {
    if triples.is_empty() {
        return Ok(Vec::new());
    }
    let degree = triples[0].degree();
    for t in triples {
        if t.degree() != degree {
            return Err(Error::DegreeMismatch(t.degree(), degree));
        }
    }
    let ref_signature = triples[0].signature();
    let ref_order = triples[0].generated_order();

    let mut conjugators: Vec<Perm> = Vec::new();
    if let HurwitzMode::BraidWithConjugation(g) = mode {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(g.degree(), degree));
        }
        for c in g.generators() {
            if !c.is_identity() {
                conjugators.push(c.clone());
                conjugators.push(c.inverse());
            }
        }
        conjugators.sort_unstable();
        conjugators.dedup();
    }

    let mut orbit_of: HashMap<Box<[u8]>, usize> = HashMap::new();
    let mut orbits: Vec<HurwitzOrbit> = Vec::new();

    for (idx, start) in triples.iter().enumerate() {
        if let Some(&oid) = orbit_of.get(&start.key()) {
            orbits[oid].input_members.push(idx);
            continue;
        }
        let oid = orbits.len();
        let mut queue = VecDeque::new();
        let mut size: u64 = 0;
        let mut representative = start.clone();
        orbit_of.insert(start.key(), oid);
        queue.push_back(start.clone());
        size += 1;
        while let Some(cur) = queue.pop_front() {
            assert!(
                cur.a1.then(&cur.a2).then(&cur.a3).is_identity(),
                "Hurwitz move broke sphericity"
            );
            assert_eq!(cur.signature(), ref_signature, "Hurwitz move changed the signature");
            assert_eq!(
                cur.generated_order(),
                ref_order,
                "Hurwitz move changed the generated subgroup order"
            );
            let mut visit = |t: SphericalTriple,
                             queue: &mut VecDeque<SphericalTriple>,
                             size: &mut u64,
                             representative: &mut SphericalTriple| {
                if !orbit_of.contains_key(&t.key()) {
                    orbit_of.insert(t.key(), oid);
                    if t < *representative {
                        *representative = t.clone();
                    }
                    queue.push_back(t);
                    *size += 1;
                }
            };
            for t in cur.braid_neighbors() {
                visit(t, &mut queue, &mut size, &mut representative);
            }
            for c in &conjugators {
                visit(cur.conjugated_by(c), &mut queue, &mut size, &mut representative);
            }
        }
        orbits.push(HurwitzOrbit {
            representative,
            size,
            input_members: vec![idx],
        });
    }
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(orbits)
}

/// Find `c` in `ambient` with `c⁻¹·t1[i]·c = t2[i]` for all `i`, if any.
///
/// Backtracking over point images with forced propagation: once `φ(y) = z`
/// is chosen, `φ(t1[i](y)) = t2[i](z)` for every `i`, transitively. Each
/// completed intertwiner is verified against the equations and then sifted
/// through `ambient`; the search continues past intertwiners that fall
/// outside it.
pub fn simultaneous_conjugator(
    t1: &[Perm],
    t2: &[Perm],
    ambient: &PermGroup,
) -> Result<Option<Perm>> {
    if t1.len() != t2.len() {
        return Err(Error::invalid(format!(
            "tuples have different lengths: {} vs {}",
            t1.len(),
            t2.len()
        )));
    }
    let n = ambient.degree();
    for p in t1.iter().chain(t2.iter()) {
        if p.degree() != n {
            return Err(Error::DegreeMismatch(p.degree(), n));
        }
    }
    for i in 0..t1.len() {
        if t1[i].cycle_type() != t2[i].cycle_type() {
            return Ok(None);
        }
    }
    // Local invariant per point: the cycle lengths through it in each
    // tuple entry must match between source and target.
    let profile = |tuple: &[Perm], x: usize| -> Vec<usize> {
        tuple.iter().map(|p| p.cycle_length_through(x)).collect()
    };
    let profiles1: Vec<Vec<usize>> = (0..n).map(|x| profile(t1, x)).collect();
    let profiles2: Vec<Vec<usize>> = (0..n).map(|x| profile(t2, x)).collect();

    struct Search<'a> {
        t1: &'a [Perm],
        t2: &'a [Perm],
        profiles1: &'a [Vec<usize>],
        profiles2: &'a [Vec<usize>],
        ambient: &'a PermGroup,
        n: usize,
    }

    impl Search<'_> {
        /// Assign φ(y) = z and propagate all consequences; false on clash.
        fn assign(&self, phi: &mut [Option<u8>], used: &mut [bool], y: usize, z: usize) -> bool {
            match phi[y] {
                Some(w) => return w as usize == z,
                None => {
                    if used[z] {
                        return false;
                    }
                }
            }
            phi[y] = Some(z as u8);
            used[z] = true;
            let mut stack = vec![(y, z)];
            while let Some((y, z)) = stack.pop() {
                for i in 0..self.t1.len() {
                    let y2 = self.t1[i].apply(y);
                    let z2 = self.t2[i].apply(z);
                    match phi[y2] {
                        Some(w) => {
                            if w as usize != z2 {
                                return false;
                            }
                        }
                        None => {
                            if used[z2] {
                                return false;
                            }
                            phi[y2] = Some(z2 as u8);
                            used[z2] = true;
                            stack.push((y2, z2));
                        }
                    }
                }
            }
            true
        }

        fn search(&self, phi: &[Option<u8>], used: &[bool]) -> Option<Perm> {
            let y = match (0..self.n).find(|&y| phi[y].is_none()) {
                None => {
                    let images: Vec<usize> =
                        phi.iter().map(|o| o.unwrap() as usize).collect();
                    let c = Perm::from_images(images).expect("propagation built a bijection");
                    let intertwines = self
                        .t1
                        .iter()
                        .zip(self.t2.iter())
                        .all(|(a, b)| a.conjugated_by(&c) == *b);
                    assert!(intertwines, "propagation produced a non-intertwiner");
                    return if self.ambient.contains(&c) { Some(c) } else { None };
                }
                Some(y) => y,
            };
            for z in 0..self.n {
                if used[z] || self.profiles1[y] != self.profiles2[z] {
                    continue;
                }
                let mut phi2 = phi.to_vec();
                let mut used2 = used.to_vec();
                if self.assign(&mut phi2, &mut used2, y, z) {
                    if let Some(c) = self.search(&phi2, &used2) {
                        return Some(c);
                    }
                }
            }
            None
        }
    }

    let s = Search {
        t1,
        t2,
        profiles1: &profiles1,
        profiles2: &profiles2,
        ambient,
        n,
    };
    Ok(s.search(&vec![None; n], &vec![false; n]))
}
