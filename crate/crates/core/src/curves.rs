//! Branch sets of a family of special hyperelliptic curves and their
//! equivalence under fractional linear maps.
//!
//! The curve of genus `g >= 3` with parameter `a` is branched over the
//! rational points `{-2g, 0, 1, ..., 2g-1, a}` (plus the marked point at
//! infinity); two such curves are isomorphic exactly when a Möbius map with
//! rational coefficients carries one branch set onto the other, and from
//! genus 6 on that happens only for equal parameters.

use crate::exact::{rational_roots, squarefree_part, Rational, UPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A point of the projective line over the rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ProjPoint {
    Finite(Rational),
    Infinity,
}

impl ProjPoint {
    pub fn finite(r: impl Into<Rational>) -> Self {
        ProjPoint::Finite(r.into())
    }

    /// Homogeneous coordinates (x : y), reduced, with y = 0 for infinity.
    fn coords(&self) -> (BigInt, BigInt) {
        match self {
            ProjPoint::Finite(r) => (r.numer().clone(), r.denom().clone()),
            ProjPoint::Infinity => (BigInt::one(), BigInt::zero()),
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(r) => write!(f, "{}", crate::exact::format_rational(r)),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// An invertible fractional linear map `z -> (az + b) / (cz + d)`.
///
/// Stored as a 2x2 integer matrix with content 1 (gcd of the entries) and
/// the first nonzero entry in row-major order positive, which makes the
/// representation of each projective class unique and hashable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MobiusMap {
    entries: [BigInt; 4], // row-major [a, b, c, d]
}

impl MobiusMap {
    fn normalized(entries: [BigInt; 4]) -> Self {
        let mut content = BigInt::zero();
        for e in &entries {
            content = content.gcd(e);
        }
        assert!(!content.is_zero(), "zero matrix is not a Möbius map");
        let mut out = entries.map(|e| e / &content);
        if let Some(first) = out.iter().find(|e| !e.is_zero()) {
            if first.is_negative() {
                out = out.map(|e| -e);
            }
        }
        let m = MobiusMap { entries: out };
        assert!(!m.det().is_zero(), "singular matrix is not a Möbius map");
        m
    }

    pub fn from_int_entries(a: i64, b: i64, c: i64, d: i64) -> Self {
        MobiusMap::normalized([BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d)])
    }

    pub fn identity() -> Self {
        MobiusMap::from_int_entries(1, 0, 0, 1)
    }

    pub fn entries(&self) -> &[BigInt; 4] {
        &self.entries
    }

    pub fn det(&self) -> BigInt {
        &self.entries[0] * &self.entries[3] - &self.entries[1] * &self.entries[2]
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let (x, y) = p.coords();
        let num = &self.entries[0] * &x + &self.entries[1] * &y;
        let den = &self.entries[2] * &x + &self.entries[3] * &y;
        if den.is_zero() {
            ProjPoint::Infinity
        } else {
            ProjPoint::Finite(Rational::new(num, den))
        }
    }

    /// `self.compose(&g)` is the map `z -> self(g(z))`.
    pub fn compose(&self, g: &MobiusMap) -> MobiusMap {
        let a = &self.entries;
        let b = &g.entries;
        MobiusMap::normalized([
            &a[0] * &b[0] + &a[1] * &b[2],
            &a[0] * &b[1] + &a[1] * &b[3],
            &a[2] * &b[0] + &a[3] * &b[2],
            &a[2] * &b[1] + &a[3] * &b[3],
        ])
    }

    pub fn inverse(&self) -> MobiusMap {
        let e = &self.entries;
        MobiusMap::normalized([e[3].clone(), -e[1].clone(), -e[2].clone(), e[0].clone()])
    }

    /// The unique map sending an ordered triple of distinct points to
    /// another. Built by composing the two cross-ratio maps onto
    /// (0, 1, inf).
    pub fn sending_triple(src: [&ProjPoint; 3], dst: [&ProjPoint; 3]) -> MobiusMap {
        let to_std_src = Self::triple_to_standard(src);
        let to_std_dst = Self::triple_to_standard(dst);
        to_std_dst.inverse().compose(&to_std_src)
    }

    /// The map carrying (p1, p2, p3) to (0, 1, inf).
    fn triple_to_standard(p: [&ProjPoint; 3]) -> MobiusMap {
        let (x1, y1) = p[0].coords();
        let (x2, y2) = p[1].coords();
        let (x3, y3) = p[2].coords();
        // Row one is a linear form vanishing at p1, row two one vanishing at
        // p3; the cross scalings land p2 on (1 : 1).
        let u = &y1 * &x2 - &x1 * &y2;
        let v = &y3 * &x2 - &x3 * &y2;
        assert!(!u.is_zero() && !v.is_zero(), "triple points must be distinct");
        MobiusMap::normalized([&v * &y1, -(&v * &x1), &u * &y3, -(&u * &x3)])
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
    }
}

/// The curve parameter: a rational number, or a root of a monic integer
/// minimal polynomial (the root index is a label only — the construction
/// treats all conjugate roots uniformly).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveParam {
    Rational(Rational),
    Algebraic { minpoly: UPoly, root_index: usize },
}

/// A member of the special hyperelliptic family: genus plus parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub genus: u32,
    pub param: CurveParam,
}

impl CurveSpec {
    pub fn rational(genus: u32, a: Rational) -> Self {
        CurveSpec { genus, param: CurveParam::Rational(a) }
    }

    pub fn algebraic(genus: u32, minpoly: UPoly) -> Self {
        CurveSpec { genus, param: CurveParam::Algebraic { minpoly, root_index: 0 } }
    }

    /// Check the defining constraints: genus at least 3, and a parameter
    /// that avoids the fixed branch locus. For an algebraic parameter the
    /// minimal polynomial must be monic and squarefree with no rational
    /// roots (irreducibility beyond that is the caller's contract; it is
    /// automatic up to degree 3).
    pub fn validate(&self) -> Result<()> {
        if self.genus < 3 {
            return Err(Error::invalid(format!(
                "genus must be at least 3 (got {})",
                self.genus
            )));
        }
        match &self.param {
            CurveParam::Rational(a) => {
                if fixed_branch_points(self.genus).contains(a) {
                    return Err(Error::SingularCurve(crate::exact::format_rational(a)));
                }
            }
            CurveParam::Algebraic { minpoly, .. } => {
                let deg = minpoly.degree().ok_or(Error::ZeroPolynomial)?;
                if deg < 2 {
                    return Err(Error::BadMinimalPolynomial(
                        "degree must be at least 2 (use a rational parameter instead)".into(),
                    ));
                }
                if !minpoly.is_monic() {
                    return Err(Error::BadMinimalPolynomial("not monic".into()));
                }
                if &squarefree_part(minpoly)? != minpoly {
                    return Err(Error::BadMinimalPolynomial("not squarefree".into()));
                }
                let (roots, _) = rational_roots(minpoly)?;
                if !roots.is_empty() {
                    return Err(Error::BadMinimalPolynomial("has a rational root".into()));
                }
            }
        }
        Ok(())
    }
}

/// The fixed branch points shared by every member of the genus-`g` family:
/// `{-2g, 0, 1, ..., 2g-1}`.
pub fn fixed_branch_points(g: u32) -> Vec<Rational> {
    let mut pts = vec![crate::exact::rat_int(-2 * g as i64)];
    pts.extend((0..2 * g as i64).map(crate::exact::rat_int));
    pts
}

/// Full branch set of the genus-`g` curve with rational parameter `a`:
/// the 2g+2 finite branch points together with the marked point at
/// infinity, 2g+3 points in all.
pub fn branch_set(g: u32, a: &Rational) -> Result<BTreeSet<ProjPoint>> {
    CurveSpec::rational(g, a.clone()).validate()?;
    let mut set: BTreeSet<ProjPoint> = fixed_branch_points(g)
        .into_iter()
        .map(ProjPoint::Finite)
        .collect();
    set.insert(ProjPoint::Finite(a.clone()));
    set.insert(ProjPoint::Infinity);
    Ok(set)
}

/// All Möbius maps with rational coefficients carrying `b1` bijectively
/// onto `b2`, sorted into a deterministic order.
///
/// A fractional linear map is determined by the images of three points, so
/// it suffices to fix one ordered triple of `b1` and let its image range
/// over all ordered triples of `b2`; every equivalence shows up exactly
/// once this way, and each candidate is tested on the whole set.
pub fn mobius_equivalences(b1: &BTreeSet<ProjPoint>, b2: &BTreeSet<ProjPoint>) -> Result<Vec<MobiusMap>> {
    if b1.len() < 3 || b2.len() < 3 {
        return Err(Error::invalid(
            "need at least three points for a rigid equivalence search",
        ));
    }
    if b1.len() != b2.len() {
        return Ok(vec![]);
    }
    let src: Vec<&ProjPoint> = b1.iter().take(3).collect();
    let targets: Vec<&ProjPoint> = b2.iter().collect();
    let mut found = BTreeSet::new();
    for q1 in &targets {
        for q2 in &targets {
            if q2 == q1 {
                continue;
            }
            for q3 in &targets {
                if q3 == q1 || q3 == q2 {
                    continue;
                }
                let m = MobiusMap::sending_triple([src[0], src[1], src[2]], [q1, q2, q3]);
                if b1.iter().all(|p| b2.contains(&m.apply(p))) {
                    found.insert(m);
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Equivalences between two parameter choices of the same genus, computed
/// both on the full marked branch sets (with infinity) and on the 2g+2
/// finite branch points alone. The finite sets are what the isomorphism
/// criterion actually compares; the marked variant is reported alongside.
pub struct BranchEquivalences {
    pub with_infinity: Vec<MobiusMap>,
    pub finite_only: Vec<MobiusMap>,
}

pub fn branch_equivalences(g: u32, a: &Rational, b: &Rational) -> Result<BranchEquivalences> {
    let full_a = branch_set(g, a)?;
    let full_b = branch_set(g, b)?;
    let finite_a: BTreeSet<ProjPoint> =
        full_a.iter().filter(|p| **p != ProjPoint::Infinity).cloned().collect();
    let finite_b: BTreeSet<ProjPoint> =
        full_b.iter().filter(|p| **p != ProjPoint::Infinity).cloned().collect();
    Ok(BranchEquivalences {
        with_infinity: mobius_equivalences(&full_a, &full_b)?,
        finite_only: mobius_equivalences(&finite_a, &finite_b)?,
    })
}

/// Whether the genus-`g` curves with parameters `a` and `b` are isomorphic.
///
/// Only valid from genus 6 on, where isomorphism is equivalent to a Möbius
/// equivalence of the finite branch sets and in fact forces `a = b`; lower
/// genus callers should use [`branch_equivalences`] directly and interpret
/// the result themselves.
pub fn curves_isomorphic(g: u32, a: &Rational, b: &Rational) -> Result<bool> {
    if g < 6 {
        return Err(Error::GenusTooSmall(g));
    }
    Ok(!branch_equivalences(g, a, b)?.finite_only.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use proptest::prelude::*;

    fn pt(n: i64) -> ProjPoint {
        ProjPoint::Finite(rat_int(n))
    }

    #[test]
    fn mobius_normal_form() {
        let m = MobiusMap::from_int_entries(-2, 4, 0, -6);
        assert_eq!(
            m.entries().clone().map(|e| e.to_string()),
            ["1", "-2", "0", "3"].map(String::from)
        );
    }

    #[test]
    fn apply_handles_infinity_and_poles() {
        // z -> 1/z swaps 0 and infinity.
        let inv = MobiusMap::from_int_entries(0, 1, 1, 0);
        assert_eq!(inv.apply(&ProjPoint::Infinity), pt(0));
        assert_eq!(inv.apply(&pt(0)), ProjPoint::Infinity);
        assert_eq!(inv.apply(&pt(2)), ProjPoint::Finite(rat(1, 2)));
    }

    #[test]
    fn sending_triple_hits_all_three_points() {
        let cases: Vec<([ProjPoint; 3], [ProjPoint; 3])> = vec![
            ([pt(0), pt(1), pt(2)], [pt(5), pt(-1), ProjPoint::Infinity]),
            ([pt(-3), ProjPoint::Infinity, pt(7)], [pt(0), pt(1), pt(2)]),
            (
                [ProjPoint::Finite(rat(1, 2)), pt(0), pt(1)],
                [ProjPoint::Infinity, ProjPoint::Finite(rat(-2, 3)), pt(4)],
            ),
        ];
        for (src, dst) in cases {
            let m = MobiusMap::sending_triple(
                [&src[0], &src[1], &src[2]],
                [&dst[0], &dst[1], &dst[2]],
            );
            for i in 0..3 {
                assert_eq!(m.apply(&src[i]), dst[i], "point {i} of {m}");
            }
        }
    }

    #[test]
    fn compose_and_inverse_are_consistent() {
        let f = MobiusMap::from_int_entries(2, 1, 1, 1);
        let g = MobiusMap::from_int_entries(0, -1, 1, 3);
        let fg = f.compose(&g);
        for p in [pt(0), pt(1), pt(-4), ProjPoint::Infinity] {
            assert_eq!(fg.apply(&p), f.apply(&g.apply(&p)));
            assert_eq!(f.inverse().apply(&f.apply(&p)), p);
        }
        assert_eq!(f.compose(&f.inverse()), MobiusMap::identity());
    }

    #[test]
    fn branch_set_layout() {
        let set = branch_set(3, &rat(7, 2)).unwrap();
        assert_eq!(set.len(), 9); // 2g+3 = 9
        for n in [-6, 0, 1, 2, 3, 4, 5] {
            assert!(set.contains(&pt(n)));
        }
        assert!(set.contains(&ProjPoint::Finite(rat(7, 2))));
        assert!(set.contains(&ProjPoint::Infinity));
    }

    #[test]
    fn singular_parameters_rejected() {
        for bad in [-6, 0, 3, 5] {
            assert!(matches!(
                branch_set(3, &rat_int(bad)),
                Err(Error::SingularCurve(_))
            ));
        }
        assert!(branch_set(3, &rat_int(6)).is_ok());
        assert!(matches!(
            branch_set(2, &rat_int(100)),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn self_equivalences_form_a_group() {
        let set = branch_set(3, &rat_int(100)).unwrap();
        let eqs = mobius_equivalences(&set, &set).unwrap();
        assert!(eqs.contains(&MobiusMap::identity()));
        for m in &eqs {
            assert!(eqs.contains(&m.inverse()));
            for m2 in &eqs {
                assert!(eqs.contains(&m.compose(m2)));
            }
        }
    }

    #[test]
    fn reflection_symmetry_at_special_parameter() {
        // a = 4g - 1 admits x -> -x + (2g - 1).
        for g in [3u32, 4] {
            let a = rat_int(4 * g as i64 - 1);
            let eq = branch_equivalences(g, &a, &a).unwrap();
            let refl = MobiusMap::from_int_entries(-1, 2 * g as i64 - 1, 0, 1);
            assert!(eq.with_infinity.contains(&refl), "g = {g}, marked set");
            assert!(eq.finite_only.contains(&refl), "g = {g}, finite set");
        }
    }

    #[test]
    fn distinct_parameters_of_genus_six_are_inequivalent() {
        let eq = branch_equivalences(6, &rat_int(100), &rat_int(101)).unwrap();
        assert!(eq.with_infinity.is_empty());
        assert!(eq.finite_only.is_empty());
        assert!(!curves_isomorphic(6, &rat_int(100), &rat_int(101)).unwrap());
        assert!(curves_isomorphic(6, &rat_int(100), &rat_int(100)).unwrap());
    }

    #[test]
    fn criterion_needs_genus_six() {
        assert!(matches!(
            curves_isomorphic(4, &rat_int(9), &rat_int(9)),
            Err(Error::GenusTooSmall(4))
        ));
        // The raw search is still available below genus 6.
        let eq = branch_equivalences(3, &rat_int(9), &rat_int(9)).unwrap();
        assert!(!eq.finite_only.is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// A planted equivalence is always recovered: transport a branch set
        /// by a random Möbius map and search for equivalences.
        #[test]
        fn planted_transport_is_found(
            a in 0i64..=3,
            b in -3i64..=3,
            c in -2i64..=2,
            d in -3i64..=3,
            param in 21i64..=40,
        ) {
            let m = [a, b, c, d];
            prop_assume!(a * d - b * c != 0);
            let map = MobiusMap::from_int_entries(m[0], m[1], m[2], m[3]);
            let src = branch_set(3, &rat_int(param)).unwrap();
            let dst: BTreeSet<ProjPoint> = src.iter().map(|p| map.apply(p)).collect();
            let eqs = mobius_equivalences(&src, &dst).unwrap();
            prop_assert!(eqs.contains(&map), "missing {map}");
            // And every reported equivalence really carries src onto dst.
            for e in &eqs {
                let image: BTreeSet<ProjPoint> = src.iter().map(|p| e.apply(p)).collect();
                prop_assert_eq!(&image, &dst);
            }
        }
    }
}
