//! Construction of Belyi maps for the special hyperelliptic family.
//!
//! The critical values of the double cover are the branch points; composing
//! with the minimal polynomial of the irrational parameter sends it (and its
//! conjugates) to 0 while adding the polynomial's own critical values, and
//! repeating with the evolving irrational part strictly drops its degree
//! until every critical value is rational. A final map
//! `g(t) = prod (t - r_i)^{m_i}` with `m_i = N / prod_{j != i} (r_i - r_j)`
//! collapses the remaining rational critical values into `{0, 1, inf}`.
//!
//! `g` is never expanded: its exponents are astronomically large, and every
//! property that matters is certified by the polynomial identity
//! `sum_i m_i prod_{j != i} (t - r_j) = N`, which pins the logarithmic
//! derivative `g'/g = N / prod (t - r_i)` and with it the critical points.

use crate::curves::{fixed_branch_points, CurveParam, CurveSpec};
use crate::exact::{
    discriminant_in_parameter, lcm_big, rational_roots, resultant, squarefree_part, Rational,
    UPoly,
};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// An exactly-represented finite set of critical values: the rational ones
/// listed outright, the irrational ones as the root set of a squarefree
/// monic polynomial with no rational roots, plus a marker for the point at
/// infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalLocus {
    pub rationals: BTreeSet<Rational>,
    pub irrational_part: UPoly,
    pub includes_infinity: bool,
}

impl CriticalLocus {
    pub fn empty() -> Self {
        CriticalLocus {
            rationals: BTreeSet::new(),
            irrational_part: UPoly::one(),
            includes_infinity: false,
        }
    }

    pub fn all_rational(&self) -> bool {
        self.irrational_part.is_constant()
    }

    /// Union the root set of `h` into the locus, splitting it into rational
    /// roots and a squarefree irrational cofactor.
    fn absorb_roots_of(&mut self, h: &UPoly) -> Result<()> {
        if h.is_constant() {
            return Ok(());
        }
        let sf = squarefree_part(h)?;
        let (roots, cofactor) = rational_roots(&sf)?;
        for (r, _) in roots {
            self.rationals.insert(r);
        }
        if !cofactor.is_constant() {
            let product = &self.irrational_part * &cofactor;
            // Shared roots between the old and new parts would create
            // multiplicity; squarefree-reduce the product.
            self.irrational_part = squarefree_part(&product)?;
        }
        Ok(())
    }
}

/// Finite critical values of a nonconstant polynomial: the roots of
/// `Res_z(p(z) - y, p'(z))` in `y`. Infinity is not recorded here — a
/// degree >= 2 polynomial is always totally ramified there, and the chain
/// tracks that separately.
pub fn critical_values(p: &UPoly) -> Result<CriticalLocus> {
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(d) => d,
    };
    if deg == 0 {
        return Err(Error::NoCriticalValues(0));
    }
    let mut locus = CriticalLocus::empty();
    if deg >= 2 {
        let h = discriminant_in_parameter(p)?;
        locus.absorb_roots_of(&h)?;
    }
    Ok(locus)
}

/// Critical locus of `q` composed after a map whose critical locus is `l`:
/// the images `q(l)` together with the critical values of `q` itself. The
/// irrational roots are pushed through `q` exactly as the root set of
/// `Res_z(irr(z), y - q(z))`, computed by evaluation/interpolation in `y`.
pub fn push_forward(l: &CriticalLocus, q: &UPoly) -> Result<CriticalLocus> {
    let qdeg = match q.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::NoCriticalValues(0)),
        Some(d) => d,
    };
    let mut out = critical_values(q)?;
    out.includes_infinity = l.includes_infinity;
    for r in &l.rationals {
        out.rationals.insert(q.eval(r));
    }
    if !l.irrational_part.is_constant() {
        let m = l.irrational_part.degree().unwrap();
        // Res_z(irr, y - q) is monic of degree m in y (irr is monic), so
        // m + 1 samples determine it.
        let mut points = Vec::with_capacity(m + 1);
        for k in 0..=m as i64 {
            let yk = crate::exact::rat_int(k);
            let shifted = &UPoly::constant(yk.clone()) - q;
            debug_assert_eq!(shifted.degree(), Some(qdeg));
            points.push((yk, resultant(&l.irrational_part, &shifted)?));
        }
        let images = crate::exact::lagrange_interpolate(&points);
        debug_assert_eq!(images.degree(), Some(m));
        out.absorb_roots_of(&images)?;
    }
    Ok(out)
}

/// Compose push-forwards by the evolving irrational part until every
/// critical value is rational. Each step maps the current irrational roots
/// to 0 and contributes fresh critical values of strictly smaller degree,
/// so the loop terminates; the strict decrease is asserted.
pub fn rationalize(l: &CriticalLocus) -> Result<(Vec<UPoly>, CriticalLocus)> {
    let mut steps = Vec::new();
    let mut cur = l.clone();
    while !cur.all_rational() {
        let q = cur.irrational_part.clone();
        let next = push_forward(&cur, &q)?;
        assert!(
            next.irrational_part.degree().unwrap_or(0) < q.degree().unwrap(),
            "irrational part degree failed to decrease: {} -> {}",
            q,
            next.irrational_part,
        );
        steps.push(q);
        cur = next;
    }
    Ok((steps, cur))
}

/// The final reduction step, kept in factored form.
///
/// `map(t) = scale * prod_i (t - roots[i]) ^ exponents[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredMap {
    pub roots: Vec<Rational>,
    pub exponents: Vec<BigInt>,
    pub scale: Rational,
}

impl FactoredMap {
    /// The certifying polynomial `sum_i m_i prod_{j != i} (t - r_j)`.
    /// For a correctly built map this is the constant `N`.
    pub fn lagrange_polynomial(&self) -> UPoly {
        let mut acc = UPoly::zero();
        for (i, m) in self.exponents.iter().enumerate() {
            let mut basis = UPoly::one();
            for (j, r) in self.roots.iter().enumerate() {
                if j != i {
                    basis = &basis * &UPoly::linear_root(r);
                }
            }
            acc = &acc + &basis.scale(&Rational::from_integer(m.clone()));
        }
        acc
    }

    /// Check the Lagrange identity: the certifying polynomial must be a
    /// nonzero constant. This is the entire verification of the factored
    /// step — it proves the critical points of the map lie among the roots
    /// and infinity.
    pub fn verify_lagrange(&self) -> Result<Rational> {
        let lp = self.lagrange_polynomial();
        if lp.is_zero() || !lp.is_constant() {
            return Err(Error::LagrangeIdentity);
        }
        Ok(lp.coeff(0))
    }

    fn exponent_sum(&self) -> BigInt {
        self.exponents.iter().sum()
    }

    /// Value at infinity: 1-scaled leading-coefficient ratio when the
    /// exponents balance, infinity otherwise.
    pub fn image_of_infinity(&self) -> Option<Rational> {
        if self.exponent_sum().is_zero() {
            // Numerator and denominator are monic of equal degree.
            Some(self.scale.clone())
        } else {
            None // infinity maps to infinity
        }
    }

    /// Image of a tracked rational point. `None` encodes infinity.
    ///
    /// Points coinciding with a root go to 0 or infinity by the sign of the
    /// exponent; other points are only evaluable when the exponents are
    /// small (the degenerate affine maps) — for a full reduction map every
    /// tracked point is a root, so anything else is a malformed chain.
    pub fn image_of_rational(&self, t: &Rational) -> Result<Option<Rational>> {
        if let Some(i) = self.roots.iter().position(|r| r == t) {
            return Ok(if self.exponents[i].is_positive() {
                Some(Rational::zero())
            } else {
                None
            });
        }
        let mut acc = self.scale.clone();
        for (r, m) in self.roots.iter().zip(&self.exponents) {
            let m64 = i64::try_from(m).map_err(|_| {
                Error::BadChain(format!(
                    "value {} is not a root of the factored map and the exponents are too large to evaluate",
                    crate::exact::format_rational(t)
                ))
            })?;
            if m64.unsigned_abs() > 64 {
                return Err(Error::BadChain(
                    "non-root tracked value with oversized exponent".into(),
                ));
            }
            let base = t - r;
            let mut pw = Rational::one();
            for _ in 0..m64.unsigned_abs() {
                pw *= &base;
            }
            if m64 < 0 {
                pw = pw.recip();
            }
            acc *= pw;
        }
        Ok(Some(acc))
    }

    /// The critical values the map itself contributes, beyond images of
    /// tracked points: `None` encodes infinity.
    pub fn own_critical_values(&self) -> Vec<Option<Rational>> {
        let n = self.roots.len();
        let mut out = Vec::new();
        let nontrivial =
            n >= 2 || self.exponents.iter().any(|m| m.magnitude() > &1u32.into());
        if !nontrivial {
            return out; // an affine bijection has no critical points
        }
        if self.exponents.iter().any(|m| m.is_positive()) {
            out.push(Some(Rational::zero()));
        }
        if self.exponents.iter().any(|m| m.is_negative()) {
            out.push(None);
        }
        if self.exponent_sum().is_zero() && n >= 2 {
            // Infinity is a critical point of local degree n - 1 >= 1 and
            // maps to the finite value `scale`.
            out.push(Some(self.scale.clone()));
        }
        out
    }
}

/// Reduce a set of rational critical values into `{0, 1, inf}`.
///
/// For three or more points: `y_i = 1 / prod_{j != i} (r_i - r_j)`, `N` the
/// least positive integer clearing all their denominators, `m_i = N y_i`.
/// The exponents sum to zero (the `y_i` are the leading coefficients of the
/// Lagrange interpolation of the constant 1), each `r_i` goes to 0 or
/// infinity, and infinity goes to 1. One or two points need only an affine
/// shift into `{0, 1}`.
pub fn three_point_reduce(points: &[Rational]) -> Result<FactoredMap> {
    if points.is_empty() {
        return Err(Error::invalid("no critical values to reduce"));
    }
    let mut r: Vec<Rational> = points.to_vec();
    r.sort();
    if r.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("repeated points in critical value set"));
    }
    let n = r.len();
    match n {
        1 => Ok(FactoredMap {
            roots: r,
            exponents: vec![BigInt::one()],
            scale: Rational::one(),
        }),
        2 => {
            // t -> (t - r0) / (r1 - r0) sends r0 to 0 and r1 to 1.
            let scale = (&r[1] - &r[0]).recip();
            Ok(FactoredMap {
                roots: vec![r[0].clone()],
                exponents: vec![BigInt::one()],
                scale,
            })
        }
        _ => {
            let ys: Vec<Rational> = (0..n)
                .map(|i| {
                    let mut prod = Rational::one();
                    for j in 0..n {
                        if j != i {
                            prod *= &r[i] - &r[j];
                        }
                    }
                    prod.recip()
                })
                .collect();
            assert!(ys.iter().sum::<Rational>().is_zero(), "sum of y_i must vanish");
            let mut n_big = BigInt::one();
            for y in &ys {
                n_big = lcm_big(&n_big, y.denom());
            }
            let n_rat = Rational::from_integer(n_big.clone());
            let exponents: Vec<BigInt> = ys
                .iter()
                .map(|y| {
                    let m = y * &n_rat;
                    debug_assert!(m.denom().is_one());
                    m.numer().clone()
                })
                .collect();
            debug_assert!(exponents.iter().sum::<BigInt>().is_zero());
            // g(inf) = 1: numerator and denominator are monic of equal
            // degree, so no affine rescaling toward 1 is needed.
            let map = FactoredMap {
                roots: r,
                exponents,
                scale: Rational::one(),
            };
            debug_assert_eq!(map.verify_lagrange().ok(), Some(n_rat));
            Ok(map)
        }
    }
}

/// One step of a Belyi chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainStep {
    Poly(UPoly),
    Factored(FactoredMap),
}

/// A verified-by-construction composition whose critical locus lands in
/// `{0, 1, inf}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BelyiChain {
    pub steps: Vec<ChainStep>,
    pub source: CurveSpec,
}

/// The critical locus the chain starts from: the branch set of the double
/// cover. The fixed integer branch points are rational; the parameter
/// contributes either one more rational or the root set of its minimal
/// polynomial; infinity is marked from the start.
pub fn initial_locus(spec: &CurveSpec) -> Result<CriticalLocus> {
    spec.validate()?;
    let mut rationals: BTreeSet<Rational> =
        fixed_branch_points(spec.genus).into_iter().collect();
    let irrational_part = match &spec.param {
        CurveParam::Rational(a) => {
            rationals.insert(a.clone());
            UPoly::one()
        }
        CurveParam::Algebraic { minpoly, .. } => minpoly.clone(),
    };
    Ok(CriticalLocus {
        rationals,
        irrational_part,
        includes_infinity: true,
    })
}

/// Build the full Belyi chain for a curve: rationalize the critical locus
/// (the first composition step is the minimal polynomial itself — or the
/// identity when the parameter is already rational), then reduce the final
/// rational values. The result is re-verified before being returned.
pub fn belyi_for_curve(spec: &CurveSpec) -> Result<BelyiChain> {
    let l0 = initial_locus(spec)?;
    let (polys, final_locus) = rationalize(&l0)?;
    let mut steps: Vec<ChainStep> = if polys.is_empty() {
        vec![ChainStep::Poly(UPoly::x())]
    } else {
        polys.into_iter().map(ChainStep::Poly).collect()
    };
    let finals: Vec<Rational> = final_locus.rationals.iter().cloned().collect();
    steps.push(ChainStep::Factored(three_point_reduce(&finals)?));
    let chain = BelyiChain { steps, source: spec.clone() };
    let locus = verify_belyi(&chain)?;
    if !locus_within_belyi_set(&locus) {
        return Err(Error::BadChain(format!(
            "constructed chain has critical values outside {{0,1,inf}}: {:?}",
            locus.rationals
        )));
    }
    Ok(chain)
}

/// Whether a locus is contained in `{0, 1, inf}`.
pub fn locus_within_belyi_set(l: &CriticalLocus) -> bool {
    l.all_rational()
        && l
            .rationals
            .iter()
            .all(|r| r.is_zero() || r.is_one())
}

/// Walk a step sequence from an explicit starting locus, computing the
/// critical locus of the composition exactly. Polynomial steps go through
/// [`push_forward`]; a factored step is certified by the Lagrange identity
/// and then applied to the tracked points only — the map itself is never
/// expanded.
pub fn verify_from(start: &CriticalLocus, steps: &[ChainStep]) -> Result<CriticalLocus> {
    let mut cur = start.clone();
    for step in steps {
        match step {
            ChainStep::Poly(q) => {
                cur = push_forward(&cur, q)?;
            }
            ChainStep::Factored(map) => {
                map.verify_lagrange()?;
                if !cur.all_rational() {
                    return Err(Error::BadChain(
                        "factored step applied while irrational critical values remain".into(),
                    ));
                }
                let mut next = CriticalLocus::empty();
                let mut track = |img: Option<Rational>| match img {
                    Some(v) => {
                        next.rationals.insert(v);
                    }
                    None => next.includes_infinity = true,
                };
                for v in map.own_critical_values() {
                    track(v);
                }
                for r in &cur.rationals {
                    track(map.image_of_rational(r)?);
                }
                if cur.includes_infinity {
                    track(map.image_of_infinity());
                }
                cur = next;
            }
        }
    }
    Ok(cur)
}

/// Verify a chain from its source curve; returns the final critical locus.
pub fn verify_belyi(chain: &BelyiChain) -> Result<CriticalLocus> {
    let start = initial_locus(&chain.source)?;
    verify_from(&start, &chain.steps)
}
