//! Monodromy of polynomial coverings with two finite critical values, and
//! genus bookkeeping for the associated triangle curves.
//!
//! A degree-`n` polynomial with critical values in `{0, 1}` is encoded by a
//! pair of permutations `(σ₀, σ₁)` of the `n` sheets with `(σ₀σ₁)⁻¹` an
//! `n`-cycle (total ramification over infinity); equivalence of coverings
//! is simultaneous conjugation in `S_n`. Reality of the covering is the
//! existence of an intertwiner with the component-wise inverses, which is
//! what complex conjugation induces on the monodromy.

use crate::perm::{
    order_generated_by, simultaneous_conjugator, Perm, PermGroup,
};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashSet;

/// Monodromy of a three-point covering: the permutations over 0, 1, ∞.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyTriple {
    sigma0: Perm,
    sigma1: Perm,
    sigma_inf: Perm,
}

impl MonodromyTriple {
    pub fn new(sigma0: Perm, sigma1: Perm, sigma_inf: Perm) -> Result<Self> {
        let d = sigma0.degree();
        if sigma1.degree() != d || sigma_inf.degree() != d {
            return Err(Error::DegreeMismatch(sigma1.degree(), d));
        }
        if !sigma0.then(&sigma1).then(&sigma_inf).is_identity() {
            return Err(Error::invalid("monodromy product is not the identity"));
        }
        let t = MonodromyTriple {
            sigma0,
            sigma1,
            sigma_inf,
        };
        if !t.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok(t)
    }

    /// Complete a pair over 0 and 1 with `σ∞ = (σ₀σ₁)⁻¹`.
    pub fn from_pair(sigma0: Perm, sigma1: Perm) -> Result<Self> {
        let sigma_inf = sigma0.then(&sigma1).inverse();
        MonodromyTriple::new(sigma0, sigma1, sigma_inf)
    }

    pub fn sigma0(&self) -> &Perm {
        &self.sigma0
    }
    pub fn sigma1(&self) -> &Perm {
        &self.sigma1
    }
    pub fn sigma_inf(&self) -> &Perm {
        &self.sigma_inf
    }

    pub fn degree(&self) -> usize {
        self.sigma0.degree()
    }

    pub fn orders(&self) -> (u64, u64, u64) {
        (
            self.sigma0.order(),
            self.sigma1.order(),
            self.sigma_inf.order(),
        )
    }

    fn is_transitive(&self) -> bool {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for p in [&self.sigma0, &self.sigma1] {
                let y = p.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == d
    }

    pub fn monodromy_group_order(&self) -> BigInt {
        order_generated_by(
            self.degree(),
            &[self.sigma0.clone(), self.sigma1.clone()],
        )
    }
}

/// An equivalence class of polynomial monodromies.
#[derive(Clone, Debug)]
pub struct DessinClass {
    pub representative: MonodromyTriple,
    /// Number of pairs in the simultaneous-conjugation orbit.
    pub class_size: BigInt,
    pub monodromy_group_order: BigInt,
    pub is_real: bool,
}

fn validate_partition(n: usize, parts: &[usize], name: &str) -> Result<()> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(Error::invalid(format!(
            "{name} must consist of positive parts"
        )));
    }
    if parts.iter().sum::<usize>() != n {
        return Err(Error::invalid(format!("{name} must sum to {n}")));
    }
    Ok(())
}

/// The permutation `(1,…,m₁)(m₁+1,…,m₁+m₂)…` realizing a cycle type.
fn canonical_of_type(n: usize, parts: &[usize]) -> Perm {
    let mut cycles = Vec::new();
    let mut next = 1;
    for &m in parts {
        cycles.push((next..next + m).collect::<Vec<usize>>());
        next += m;
    }
    Perm::from_cycles(&cycles, n).expect("partition yields valid cycles")
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Classify the monodromies of degree-`n` polynomials whose permutations
/// over the two finite critical values have cycle types `mu` and `nu`, up
/// to simultaneous conjugation in `S_n`.
///
/// The count condition `len(mu) + len(nu) = n + 1` is Riemann–Hurwitz for a
/// genus-0 total space with an `n`-cycle over infinity; anything else is
/// rejected. σ₀ is pinned to a canonical representative of `mu` (legal,
/// since classification is up to conjugacy) and σ₁ sweeps all permutations
/// of type `nu`; classes correspond to orbits of the centralizer of σ₀.
pub fn classify_polynomial_monodromies(
    n: usize,
    mu: &[usize],
    nu: &[usize],
) -> Result<Vec<DessinClass>> {
    validate_partition(n, mu, "mu")?;
    validate_partition(n, nu, "nu")?;
    if mu.len() + nu.len() != n + 1 {
        return Err(Error::PolynomialTypeCount);
    }
    let sn = PermGroup::symmetric(n)?;
    let elements = sn.elements()?;
    let sigma0 = canonical_of_type(n, mu);
    let centralizer0: Vec<&Perm> = elements
        .iter()
        .filter(|c| c.commutes_with(&sigma0))
        .collect();
    let mut nu_sorted = nu.to_vec();
    nu_sorted.sort_unstable_by(|a, b| b.cmp(a));
    let n_cycle = vec![n];
    let nfact = factorial(n);

    let mut seen: HashSet<Perm> = HashSet::new();
    let mut classes = Vec::new();
    for sigma1 in elements.iter().filter(|p| p.cycle_type() == nu_sorted) {
        if seen.contains(sigma1) {
            continue;
        }
        if sigma0.then(sigma1).cycle_type() != n_cycle {
            continue;
        }
        for c in &centralizer0 {
            seen.insert(sigma1.conjugated_by(c));
        }
        let triple = MonodromyTriple::from_pair(sigma0.clone(), sigma1.clone())?;
        let pair_centralizer = centralizer0
            .iter()
            .filter(|c| c.commutes_with(sigma1))
            .count();
        let class_size = &nfact / BigInt::from(pair_centralizer);
        debug_assert!((&class_size * BigInt::from(pair_centralizer)) == nfact);
        let monodromy_group_order = triple.monodromy_group_order();
        let real = is_real(&triple)?;
        classes.push(DessinClass {
            representative: triple,
            class_size,
            monodromy_group_order,
            is_real: real,
        });
    }
    Ok(classes)
}

/// Whether the covering is definable over the reals: true iff some `τ ∈ S_d`
/// conjugates `(σ₀, σ₁)` to `(σ₀⁻¹, σ₁⁻¹)` simultaneously.
pub fn is_real(t: &MonodromyTriple) -> Result<bool> {
    let sd = PermGroup::symmetric(t.degree())?;
    let conj = simultaneous_conjugator(
        &[t.sigma0.clone(), t.sigma1.clone()],
        &[t.sigma0.inverse(), t.sigma1.inverse()],
        &sd,
    )?;
    Ok(conj.is_some())
}

/// Genus of the curve with a group action of the given order branched over
/// three points with the given local orders:
/// `|G|/2 · (1 − 1/r₁ − 1/r₂ − 1/r₃) + 1`, demanded to be an integer.
pub fn triangle_genus(group_order: &BigInt, orders: (u64, u64, u64)) -> Result<BigInt> {
    let (r1, r2, r3) = orders;
    if r1 < 2 || r2 < 2 || r3 < 2 {
        return Err(Error::invalid("branch orders must be at least 2"));
    }
    if group_order.is_zero() || group_order.is_negative() {
        return Err(Error::invalid("group order must be positive"));
    }
    let inv = |r: u64| BigRational::new(BigInt::one(), BigInt::from(r));
    let bracket = BigRational::one() - inv(r1) - inv(r2) - inv(r3);
    let g = BigRational::from_integer(group_order.clone())
        / BigRational::from_integer(BigInt::from(2))
        * bracket
        + BigRational::one();
    if !g.denom().is_one() {
        return Err(Error::BadTriangleGenus);
    }
    Ok(g.numer().clone())
}

/// Data of the normal closure of the covering encoded by a triple: the
/// Galois closure has one component per coset of the monodromy group in
/// `S_d`, carries the regular action of that group, and its genus follows
/// from the triangle formula applied to the element orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalClosureData {
    pub group_order: BigInt,
    /// Index of the point stabilizer: the degree of the original covering.
    pub stabilizer_index: usize,
    /// Number of components of the fibered-power model: `d!/|G|`.
    pub component_count: BigInt,
    pub genus_of_closure: BigInt,
}

pub fn normal_closure_data(t: &MonodromyTriple) -> Result<NormalClosureData> {
    for (name, p) in [
        ("sigma0", &t.sigma0),
        ("sigma1", &t.sigma1),
        ("sigma_inf", &t.sigma_inf),
    ] {
        if p.is_identity() {
            return Err(Error::DegenerateMonodromy(format!(
                "{name} is the identity, so it marks no branch point"
            )));
        }
    }
    let group_order = t.monodromy_group_order();
    let d = t.degree();
    let nfact = factorial(d);
    let component_count = &nfact / &group_order;
    assert!(
        &component_count * &group_order == nfact,
        "monodromy group order must divide d!"
    );
    let genus_of_closure = triangle_genus(&group_order, t.orders())?;
    debug_assert!(!genus_of_closure.is_negative());
    Ok(NormalClosureData {
        group_order,
        stabilizer_index: d,
        component_count,
        genus_of_closure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm;

    fn p(cycles: &str, degree: usize) -> Perm {
        parse_perm(cycles, degree).unwrap()
    }

    fn paper_triples() -> [MonodromyTriple; 2] {
        [
            MonodromyTriple::new(
                p("(1,2)(3,4)", 7),
                p("(1,5,7)(2,3)(4,6)", 7),
                p("(1,7,5,2,4,6,3)", 7),
            )
            .unwrap(),
            MonodromyTriple::new(
                p("(1,2)(3,4)", 7),
                p("(1,7,4)(2,5)(3,6)", 7),
                p("(1,3,6,4,7,2,5)", 7),
            )
            .unwrap(),
        ]
    }

    #[test]
    fn degree_seven_classification() {
        let classes =
            classify_polynomial_monodromies(7, &[2, 2, 1, 1, 1], &[3, 2, 2]).unwrap();
        assert_eq!(classes.len(), 2);
        for class in &classes {
            assert_eq!(class.monodromy_group_order, BigInt::from(2520));
            assert!(class.is_real);
            assert_eq!(class.representative.orders(), (2, 6, 7));
            assert_eq!(class.class_size, BigInt::from(5040));
        }
    }

    #[test]
    fn degree_seven_classes_match_reference_monodromies() {
        // Each of the two reference triples falls into its own class.
        let classes =
            classify_polynomial_monodromies(7, &[2, 2, 1, 1, 1], &[3, 2, 2]).unwrap();
        let s7 = PermGroup::symmetric(7).unwrap();
        let mut hits = Vec::new();
        for t in paper_triples() {
            let mut found = None;
            for (i, class) in classes.iter().enumerate() {
                let c = simultaneous_conjugator(
                    &[t.sigma0().clone(), t.sigma1().clone()],
                    &[
                        class.representative.sigma0().clone(),
                        class.representative.sigma1().clone(),
                    ],
                    &s7,
                )
                .unwrap();
                if c.is_some() {
                    found = Some(i);
                    break;
                }
            }
            hits.push(found.expect("reference triple not classified"));
        }
        assert_ne!(hits[0], hits[1], "the two monodromies must be inequivalent");
    }

    #[test]
    fn classification_small_cases() {
        let classes = classify_polynomial_monodromies(2, &[2], &[1, 1]).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].monodromy_group_order, BigInt::from(2));
        assert_eq!(classes[0].representative.sigma0(), &p("(1,2)", 2));
        assert!(classes[0].representative.sigma1().is_identity());

        // The degree-3 covering with simple finite branching on both values.
        let classes = classify_polynomial_monodromies(3, &[2, 1], &[2, 1]).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].monodromy_group_order, BigInt::from(6));
    }

    #[test]
    fn classification_swap_duality() {
        let a = classify_polynomial_monodromies(7, &[2, 2, 1, 1, 1], &[3, 2, 2]).unwrap();
        let b = classify_polynomial_monodromies(7, &[3, 2, 2], &[2, 2, 1, 1, 1]).unwrap();
        assert_eq!(a.len(), b.len());
    }

    #[test]
    fn bad_type_count_rejected() {
        let err = classify_polynomial_monodromies(7, &[2, 2, 1, 1, 1], &[2, 2, 2, 1]);
        assert!(matches!(err, Err(Error::PolynomialTypeCount)));
        assert!(classify_polynomial_monodromies(7, &[2, 2, 1, 1], &[3, 2, 2]).is_err());
        assert!(classify_polynomial_monodromies(7, &[2, 2, 1, 1, 1, 0], &[3, 2, 2]).is_err());
    }

    #[test]
    fn reality_of_reference_triples() {
        for t in paper_triples() {
            assert!(is_real(&t).unwrap());
        }
        let trivial = MonodromyTriple::new(
            Perm::identity(1),
            Perm::identity(1),
            Perm::identity(1),
        )
        .unwrap();
        assert!(is_real(&trivial).unwrap());
    }

    #[test]
    fn triangle_genus_pinned() {
        assert_eq!(
            triangle_genus(&BigInt::from(2520), (2, 6, 7)).unwrap(),
            BigInt::from(241)
        );
        assert_eq!(
            triangle_genus(&BigInt::from(2520), (5, 5, 5)).unwrap(),
            BigInt::from(505)
        );
        assert_eq!(
            triangle_genus(&BigInt::from(168), (2, 3, 7)).unwrap(),
            BigInt::from(3)
        );
        assert!(matches!(
            triangle_genus(&BigInt::from(2), (2, 2, 2)),
            Err(Error::BadTriangleGenus)
        ));
        assert!(triangle_genus(&BigInt::from(6), (1, 2, 3)).is_err());
    }

    /// Independent Riemann–Hurwitz oracle: realize the regular action of
    /// the monodromy group on its own elements and count cycles directly.
    fn regular_action_genus(group: &PermGroup, triple: &[Perm; 3]) -> BigInt {
        let elements = group.elements().unwrap();
        let index: std::collections::HashMap<&Perm, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let order = elements.len() as i64;
        let mut total = -2 * order;
        for a in triple {
            // Orbits of right multiplication by a.
            let mut seen = vec![false; elements.len()];
            let mut orbits = 0i64;
            for start in 0..elements.len() {
                if seen[start] {
                    continue;
                }
                orbits += 1;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = index[&elements[x].then(a)];
                }
            }
            total += order - orbits;
        }
        assert_eq!(total % 2, 0);
        BigInt::from(total / 2 + 1)
    }

    #[test]
    fn triangle_genus_matches_regular_action_oracle() {
        // S3 with branch orders (2,2,3).
        let s3 = PermGroup::symmetric(3).unwrap();
        let t = [p("(1,2)", 3), p("(2,3)", 3), p("(1,2)", 3).then(&p("(2,3)", 3)).inverse()];
        assert_eq!(
            regular_action_genus(&s3, &t),
            triangle_genus(&BigInt::from(6), (2, 2, 3)).unwrap()
        );
        // A5 with branch orders (2,3,5).
        let a5 = PermGroup::alternating(5).unwrap();
        let a = p("(1,2)(3,4)", 5);
        let b = p("(1,3,5)", 5);
        let c = a.then(&b).inverse();
        assert_eq!(c.order(), 5);
        assert_eq!(
            regular_action_genus(&a5, &[a, b, c]),
            triangle_genus(&BigInt::from(60), (2, 3, 5)).unwrap()
        );
    }

    #[test]
    fn normal_closure_of_reference_triple() {
        let data = normal_closure_data(&paper_triples()[0]).unwrap();
        assert_eq!(data.group_order, BigInt::from(2520));
        assert_eq!(data.component_count, BigInt::from(2));
        assert_eq!(data.stabilizer_index, 7);
        assert_eq!(data.genus_of_closure, BigInt::from(241));
    }

    #[test]
    fn normal_closure_s3_example() {
        let t = MonodromyTriple::from_pair(p("(1,2)", 3), p("(2,3)", 3)).unwrap();
        assert_eq!(t.sigma_inf(), &p("(1,2,3)", 3));
        let data = normal_closure_data(&t).unwrap();
        assert_eq!(data.group_order, BigInt::from(6));
        assert_eq!(data.component_count, BigInt::one());
        assert_eq!(data.genus_of_closure, BigInt::zero());
    }

    #[test]
    fn normal_closure_rejects_degenerate_triples() {
        let t = MonodromyTriple::from_pair(p("(1,2)", 2), p("(1,2)", 2)).unwrap();
        assert!(t.sigma_inf().is_identity());
        assert!(matches!(
            normal_closure_data(&t),
            Err(Error::DegenerateMonodromy(_))
        ));
    }

    #[test]
    fn intransitive_pairs_rejected() {
        let err = MonodromyTriple::from_pair(p("(1,2)", 4), p("(1,2)", 4));
        assert!(matches!(err, Err(Error::NotTransitive)));
    }
}
