//! Unmixed Beauville structures: pairs of generating triples whose diagonal
//! action on the product of the two triangle curves is free.
//!
//! The stabilizer of any point of the triangle curve of `(a₁,a₂,a₃)` is a
//! conjugate of one of the cyclic groups `⟨aᵢ⟩`, so an element acts with a
//! fixed point iff it is a conjugate of a power of some `aᵢ`. Freeness of
//! the diagonal action on the product is exactly the disjointness (away
//! from the identity) of those two fixed-point sets.

use crate::dessins::triangle_genus;
use crate::perm::{Perm, PermGroup, SphericalTriple};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeSet;

/// All elements acting with fixed points on the triangle curve of a triple:
/// the conjugates of the powers of its entries, identity included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaSet {
    pub elements: BTreeSet<Perm>,
}

impl SigmaSet {
    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }

    /// True when the two sets share only the identity.
    pub fn intersects_trivially(&self, other: &SigmaSet) -> bool {
        let (small, large) = if self.elements.len() <= other.elements.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .elements
            .iter()
            .all(|p| p.is_identity() || !large.elements.contains(p))
    }

    /// Element orders represented in the set.
    pub fn orders(&self) -> BTreeSet<u64> {
        self.elements.iter().map(|p| p.order()).collect()
    }
}

pub fn sigma_set(t: &SphericalTriple, g: &PermGroup) -> Result<SigmaSet> {
    if t.degree() != g.degree() {
        return Err(Error::DegreeMismatch(t.degree(), g.degree()));
    }
    for a in [t.a1(), t.a2(), t.a3()] {
        if !g.contains(a) {
            return Err(Error::invalid(
                "triple entries must lie in the ambient group",
            ));
        }
    }
    let mut elements: BTreeSet<Perm> = BTreeSet::new();
    elements.insert(Perm::identity(g.degree()));
    for a in [t.a1(), t.a2(), t.a3()] {
        let mut power = a.clone();
        while !power.is_identity() {
            // Conjugacy class of this power: closure under conjugation by
            // the group generators.
            if elements.insert(power.clone()) {
                let mut stack = vec![power.clone()];
                while let Some(cur) = stack.pop() {
                    for c in g.generators() {
                        let conj = cur.conjugated_by(c);
                        if elements.insert(conj.clone()) {
                            stack.push(conj);
                        }
                    }
                }
            }
            power = power.then(a);
        }
    }
    Ok(SigmaSet { elements })
}

/// A quotient `(C₁ × C₂)/G` datum: one group, two generating triples.
#[derive(Clone, Debug)]
pub struct UnmixedStructure {
    pub group: PermGroup,
    pub triple1: SphericalTriple,
    pub triple2: SphericalTriple,
}

impl UnmixedStructure {
    pub fn new(
        group: PermGroup,
        triple1: SphericalTriple,
        triple2: SphericalTriple,
    ) -> Result<Self> {
        for t in [&triple1, &triple2] {
            if t.degree() != group.degree() {
                return Err(Error::DegreeMismatch(t.degree(), group.degree()));
            }
            if t.generated_order() != group.order() {
                return Err(Error::invalid(
                    "triple does not generate the ambient group",
                ));
            }
        }
        Ok(UnmixedStructure {
            group,
            triple1,
            triple2,
        })
    }
}

/// The freeness test: the two fixed-point sets must meet only in the
/// identity (both triples generate by construction, re-checked here).
pub fn is_unmixed_beauville(s: &UnmixedStructure) -> Result<bool> {
    let order = s.group.order();
    if s.triple1.generated_order() != order || s.triple2.generated_order() != order {
        return Ok(false);
    }
    let s1 = sigma_set(&s.triple1, &s.group)?;
    let s2 = sigma_set(&s.triple2, &s.group)?;
    Ok(s1.intersects_trivially(&s2))
}

/// Numerical invariants of the quotient surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub g1: BigInt,
    pub g2: BigInt,
    pub euler_e: BigInt,
    pub chi: BigInt,
    pub k2: BigInt,
}

/// Invariant arithmetic from the curve genera and the group order:
/// `χ = (g₁−1)(g₂−1)/|G|`, `e = 4χ`, `K² = 8χ`; the Noether identity
/// `χ = (K² + e)/12` is asserted.
pub fn invariants_from_genera(
    g1: &BigInt,
    g2: &BigInt,
    group_order: &BigInt,
) -> Result<SurfaceInvariants> {
    let chi_num = (g1 - BigInt::one()) * (g2 - BigInt::one());
    let chi = &chi_num / group_order;
    if &chi * group_order != chi_num {
        return Err(Error::invalid(
            "(g1-1)(g2-1) is not divisible by the group order",
        ));
    }
    let euler_e = &chi * BigInt::from(4);
    let k2 = &chi * BigInt::from(8);
    assert_eq!(&k2, &(&chi * BigInt::from(8)));
    assert_eq!((&k2 + &euler_e) / BigInt::from(12), chi, "Noether identity");
    Ok(SurfaceInvariants {
        g1: g1.clone(),
        g2: g2.clone(),
        euler_e,
        chi,
        k2,
    })
}

/// Invariants of a verified structure; genera come from the triangle-genus
/// formula applied to each triple's element orders.
pub fn surface_invariants(s: &UnmixedStructure) -> Result<SurfaceInvariants> {
    if !is_unmixed_beauville(s)? {
        return Err(Error::ActionNotFree);
    }
    let order = s.group.order();
    let orders_of = |t: &SphericalTriple| {
        let o = t.orders();
        (o[0], o[1], o[2])
    };
    let g1 = triangle_genus(&order, orders_of(&s.triple1))?;
    let g2 = triangle_genus(&order, orders_of(&s.triple2))?;
    invariants_from_genera(&g1, &g2, &order)
}

/// Exhaustive search for unmixed structures on `g`: all unordered pairs of
/// generating-triple classes with disjoint fixed-point sets, signatures
/// bounded by `signature_bound`.
///
/// Since the braid moves realize every ordering of a signature, triples are
/// canonicalized to weakly increasing element orders; classes are up to
/// simultaneous conjugation as usual.
pub fn search_beauville(
    g: &PermGroup,
    signature_bound: u64,
) -> Result<Vec<UnmixedStructure>> {
    let order = g.order();
    if order > BigInt::from(10_000u32) {
        return Err(Error::OrderTooLarge(order.to_string(), "10000".into()));
    }
    // Candidate branch orders: element orders of g, at least 2.
    let mut orders: BTreeSet<u64> = BTreeSet::new();
    for class in g.conjugacy_classes()? {
        let o = class[0].order();
        if o >= 2 && o <= signature_bound {
            orders.insert(o);
        }
    }
    let orders: Vec<u64> = orders.into_iter().collect();
    let mut signatures: Vec<[u64; 3]> = Vec::new();
    for (i, &r1) in orders.iter().enumerate() {
        for (j, &r2) in orders.iter().enumerate().skip(i) {
            for &r3 in orders.iter().skip(j) {
                signatures.push([r1, r2, r3]);
            }
        }
    }

    // Every braid-plus-conjugation class contains a representative with
    // weakly increasing orders, so enumerating ascending arrangements only
    // still sees every structure once.
    let elements = g.elements()?;
    let words = elements.len().div_ceil(64);
    let mask_of = |sigma: &SigmaSet| -> Vec<u64> {
        let mut mask = vec![0u64; words];
        for e in &sigma.elements {
            let idx = elements
                .binary_search(e)
                .expect("sigma elements belong to the group");
            mask[idx / 64] |= 1u64 << (idx % 64);
        }
        // The identity (always index 0 in the sorted element list) lies in
        // every sigma set; disjointness is only required away from it.
        mask[0] &= !1u64;
        mask
    };

    let mut per_signature: Vec<(usize, Vec<(SphericalTriple, Vec<u64>)>)> = Vec::new();
    for (si, sig) in signatures.iter().enumerate() {
        let classes = crate::perm::enumerate_spherical_ordered(g, *sig)?;
        let mut kept = Vec::new();
        for t in classes {
            let sigma = sigma_set(&t, g)?;
            kept.push((t, mask_of(&sigma)));
        }
        if !kept.is_empty() {
            per_signature.push((si, kept));
        }
    }

    let mut out = Vec::new();
    for (pi, (si, classes1)) in per_signature.iter().enumerate() {
        for (sj, classes2) in per_signature.iter().skip(pi).map(|(a, b)| (a, b)) {
            let same_signature = si == sj;
            for (i, (t1, mask1)) in classes1.iter().enumerate() {
                let start = if same_signature { i } else { 0 };
                for (t2, mask2) in classes2.iter().skip(start) {
                    if mask1.iter().zip(mask2).all(|(a, b)| a & b == 0) {
                        // Enumeration guarantees each triple is spherical
                        // and generates g, so no revalidation is needed.
                        out.push(UnmixedStructure {
                            group: g.clone(),
                            triple1: t1.clone(),
                            triple2: t2.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm;

    fn p(cycles: &str, degree: usize) -> Perm {
        parse_perm(cycles, degree).unwrap()
    }

    fn paper_267_triple() -> SphericalTriple {
        SphericalTriple::new(
            p("(1,2)(3,4)", 7),
            p("(1,5,7)(2,3)(4,6)", 7),
            p("(1,7,5,2,4,6,3)", 7),
        )
        .unwrap()
    }

    fn paper_555_triple() -> SphericalTriple {
        SphericalTriple::new(
            p("(1,7,6,5,4)", 7),
            p("(1,3,2,6,7)", 7),
            p("(2,3,4,5,6)", 7),
        )
        .unwrap()
    }

    #[test]
    fn sigma_set_orders_pinned() {
        let a7 = PermGroup::alternating(7).unwrap();
        let s267 = sigma_set(&paper_267_triple(), &a7).unwrap();
        let expected: BTreeSet<u64> = [1, 2, 3, 6, 7].into_iter().collect();
        assert_eq!(s267.orders(), expected);

        let s555 = sigma_set(&paper_555_triple(), &a7).unwrap();
        let expected: BTreeSet<u64> = [1, 5].into_iter().collect();
        assert_eq!(s555.orders(), expected);

        let trivial = PermGroup::new(1, vec![]).unwrap();
        let t = SphericalTriple::new(
            Perm::identity(1),
            Perm::identity(1),
            Perm::identity(1),
        )
        .unwrap();
        let s = sigma_set(&t, &trivial).unwrap();
        assert_eq!(s.elements.len(), 1);
    }

    #[test]
    fn sigma_set_is_conjugation_invariant() {
        let a7 = PermGroup::alternating(7).unwrap();
        let t = paper_267_triple();
        let base = sigma_set(&t, &a7).unwrap();
        for c in ["(1,2,3)", "(2,4,6)", "(1,3)(5,7)"] {
            let conj = t.conjugated_by(&p(c, 7));
            assert_eq!(sigma_set(&conj, &a7).unwrap(), base);
        }
    }

    /// Independent fixed-point oracle on the coset model: γ fixes a point
    /// over branch point i iff some coset h⟨aᵢ⟩ satisfies h⁻¹γh ∈ ⟨aᵢ⟩.
    fn sigma_oracle(t: &SphericalTriple, g: &PermGroup) -> BTreeSet<Perm> {
        let elements = g.elements().unwrap();
        let mut out = BTreeSet::new();
        for gamma in elements {
            let mut fixes = gamma.is_identity();
            'outer: for a in [t.a1(), t.a2(), t.a3()] {
                let mut cyclic = vec![Perm::identity(g.degree())];
                let mut pw = a.clone();
                while !pw.is_identity() {
                    cyclic.push(pw.clone());
                    pw = pw.then(a);
                }
                for h in elements {
                    let conj = gamma.conjugated_by(&h.inverse());
                    if cyclic.contains(&conj) {
                        fixes = true;
                        break 'outer;
                    }
                }
            }
            if fixes {
                out.insert(gamma.clone());
            }
        }
        out
    }

    #[test]
    fn sigma_set_matches_coset_oracle() {
        // A5 with a (2,3,5) triple.
        let a5 = PermGroup::alternating(5).unwrap();
        let t = SphericalTriple::from_pair(p("(1,2)(3,4)", 5), p("(1,3,5)", 5)).unwrap();
        assert_eq!(sigma_set(&t, &a5).unwrap().elements, sigma_oracle(&t, &a5));
        // S4 with a (2,3,4) triple.
        let s4 = PermGroup::symmetric(4).unwrap();
        let t = SphericalTriple::from_pair(p("(1,2)", 4), p("(2,3,4)", 4)).unwrap();
        assert_eq!(sigma_set(&t, &s4).unwrap().elements, sigma_oracle(&t, &s4));
    }

    #[test]
    fn reference_structure_is_beauville() {
        let a7 = PermGroup::alternating(7).unwrap();
        let s = UnmixedStructure::new(a7, paper_267_triple(), paper_555_triple()).unwrap();
        assert!(is_unmixed_beauville(&s).unwrap());
    }

    #[test]
    fn equal_triples_never_free() {
        let a7 = PermGroup::alternating(7).unwrap();
        let s = UnmixedStructure::new(a7, paper_555_triple(), paper_555_triple()).unwrap();
        assert!(!is_unmixed_beauville(&s).unwrap());
        assert!(matches!(surface_invariants(&s), Err(Error::ActionNotFree)));
    }

    #[test]
    fn freeness_invariant_under_braid_moves() {
        let a7 = PermGroup::alternating(7).unwrap();
        for moved in paper_267_triple().braid_neighbors() {
            let s =
                UnmixedStructure::new(a7.clone(), moved, paper_555_triple()).unwrap();
            assert!(is_unmixed_beauville(&s).unwrap());
        }
        for moved in paper_555_triple().braid_neighbors() {
            let s =
                UnmixedStructure::new(a7.clone(), paper_267_triple(), moved).unwrap();
            assert!(is_unmixed_beauville(&s).unwrap());
        }
    }

    #[test]
    fn reference_invariants_pinned() {
        let a7 = PermGroup::alternating(7).unwrap();
        let s = UnmixedStructure::new(a7, paper_267_triple(), paper_555_triple()).unwrap();
        let inv = surface_invariants(&s).unwrap();
        assert_eq!(inv.g1, BigInt::from(241));
        assert_eq!(inv.g2, BigInt::from(505));
        assert_eq!(inv.euler_e, BigInt::from(192));
        assert_eq!(inv.chi, BigInt::from(48));
        assert_eq!(inv.k2, BigInt::from(384));
    }

    #[test]
    fn invariant_arithmetic_product_surface() {
        let inv = invariants_from_genera(
            &BigInt::from(2),
            &BigInt::from(2),
            &BigInt::one(),
        )
        .unwrap();
        assert_eq!(inv.euler_e, BigInt::from(4));
        assert_eq!(inv.chi, BigInt::one());
        assert_eq!(inv.k2, BigInt::from(8));
        // Integrality guard.
        assert!(invariants_from_genera(
            &BigInt::from(3),
            &BigInt::from(2),
            &BigInt::from(7)
        )
        .is_err());
    }

    #[test]
    fn alternating5_admits_no_structure() {
        let a5 = PermGroup::alternating(5).unwrap();
        let found = search_beauville(&a5, 5).unwrap();
        assert!(found.is_empty());
        let trivial = PermGroup::new(1, vec![]).unwrap();
        assert!(search_beauville(&trivial, 5).unwrap().is_empty());
    }

    #[test]
    fn alternating7_search_includes_reference_signatures() {
        let a7 = PermGroup::alternating(7).unwrap();
        let found = search_beauville(&a7, 7).unwrap();
        assert_eq!(found.len(), 15608);
        let hit = found.iter().any(|s| {
            let sigs = [s.triple1.signature(), s.triple2.signature()];
            sigs == [[2, 6, 7], [5, 5, 5]] || sigs == [[5, 5, 5], [2, 6, 7]]
        });
        assert!(hit, "signature pair {{2,6,7}} x {{5,5,5}} missing from search");
        // Soundness spot-check: revalidating all 15608 hits from scratch
        // costs minutes, so sweep a fixed stride instead.
        for s in found.iter().step_by(97) {
            assert!(is_unmixed_beauville(s).unwrap());
        }
    }
}
