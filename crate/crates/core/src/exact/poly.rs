//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest-degree first with no trailing zeros; the
//! zero polynomial is the empty coefficient vector and reports degree
//! `None`. The resultant follows the Sylvester-determinant convention with
//! the rows of the first argument on top, so `resultant(z - a, z - b) =
//! a - b`.

use super::{positive_divisors, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UPoly {
    /// Coefficients, lowest degree first; empty means zero; last entry
    /// nonzero otherwise.
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    /// The identity polynomial `z`.
    pub fn x() -> Self {
        UPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    /// Build from integer coefficients, constant term first.
    pub fn from_int_coeffs(cs: &[i64]) -> Self {
        UPoly::new(cs.iter().map(|&c| super::rat_int(c)).collect())
    }

    /// `z - r`.
    pub fn linear_root(r: &Rational) -> Self {
        UPoly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial (the usual deg 0 = -infinity
    /// convention, made unrepresentable instead of sentinel-valued).
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> UPoly {
        match self.leading_coefficient() {
            None => UPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(z))`, by Horner over polynomials.
    pub fn compose(&self, inner: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor (programmer error).
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading_coefficient().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lc;
            if !q.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = dc * &q;
                    rem[k + i] -= t;
                }
            }
            quot[k] = q;
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let mut r0 = a.monic();
        let mut r1 = b.monic();
        while !r1.is_zero() {
            let (_, rem) = r0.divrem(&r1);
            r0 = r1;
            r1 = rem.monic();
        }
        r0
    }

    /// Sylvester matrix of (p, q), rows of `p` first, each row carrying the
    /// coefficients highest degree first. Exposed for the determinant
    /// cross-check in the test suite.
    pub(crate) fn sylvester(p: &UPoly, q: &UPoly) -> Vec<Vec<Rational>> {
        let m = p.degree().expect("sylvester of zero polynomial");
        let n = q.degree().expect("sylvester of zero polynomial");
        let size = m + n;
        let mut mat = vec![vec![Rational::zero(); size]; size];
        let prev: Vec<Rational> = p.coeffs.iter().rev().cloned().collect();
        let qrev: Vec<Rational> = q.coeffs.iter().rev().cloned().collect();
        for i in 0..n {
            for (k, c) in prev.iter().enumerate() {
                mat[i][i + k] = c.clone();
            }
        }
        for j in 0..m {
            for (k, c) in qrev.iter().enumerate() {
                mat[n + j][j + k] = c.clone();
            }
        }
        mat
    }
}

/// Determinant by exact Gaussian elimination. Consumes the matrix.
pub(crate) fn determinant(mut mat: Vec<Vec<Rational>>) -> Rational {
    let size = mat.len();
    let mut det = Rational::one();
    for col in 0..size {
        let pivot = match (col..size).find(|&r| !mat[r][col].is_zero()) {
            Some(r) => r,
            None => return Rational::zero(),
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let pv = mat[col][col].clone();
        det *= &pv;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pv;
            // Entries left of `col` are already zero in both rows.
            for c in col..size {
                let t = &mat[col][c] * &factor;
                mat[r][c] -= t;
            }
        }
    }
    det
}

/// Resultant of two nonzero polynomials: the determinant of
/// [`UPoly::sylvester`]. With that row order, `resultant(z - a, z - b) =
/// a - b` and generally `resultant(p, q) = lc(p)^deg(q) * prod q(alpha)`
/// over the roots `alpha` of `p`.
pub fn resultant(p: &UPoly, q: &UPoly) -> Result<Rational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() && q.is_constant() {
        return Ok(Rational::one());
    }
    if p.is_constant() {
        let n = q.degree().unwrap();
        return Ok(pow_rat(&p.coeff(0), n));
    }
    if q.is_constant() {
        let m = p.degree().unwrap();
        return Ok(pow_rat(&q.coeff(0), m));
    }
    Ok(determinant(UPoly::sylvester(p, q)))
}

fn pow_rat(r: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// Lagrange interpolation through points with pairwise distinct abscissae.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> UPoly {
    let mut acc = UPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = UPoly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &UPoly::linear_root(xj);
            denom *= xi - xj;
        }
        acc = &acc + &basis.scale(&(yi / &denom));
    }
    acc
}

/// The critical values of `p` as a polynomial condition on the value
/// parameter: `h(y) = Res_z(p(z) - y, p'(z))`, normalized monic in `y`.
/// Roots of `h` are exactly the finite critical values of `p`.
///
/// Computed by evaluation/interpolation: the resultant has degree
/// `deg p - 1` in `y` with leading coefficient `±lc(p')^(deg p)`, so
/// interpolating through `deg p` sample values determines it.
pub fn discriminant_in_parameter(p: &UPoly) -> Result<UPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.degree().unwrap();
    if n < 2 {
        return Err(Error::NoCriticalValues(n));
    }
    let dp = p.derivative();
    let mut points = Vec::with_capacity(n);
    for k in 0..n as i64 {
        let yk = super::rat_int(k);
        let shifted = p - &UPoly::constant(yk.clone());
        points.push((yk, resultant(&shifted, &dp)?));
    }
    let h = lagrange_interpolate(&points);
    debug_assert_eq!(h.degree(), Some(n - 1));
    Ok(h.monic())
}

/// Squarefree part `p / gcd(p, p')`, normalized monic. Shares the roots of
/// `p`, each with multiplicity one.
pub fn squarefree_part(p: &UPoly) -> Result<UPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = UPoly::gcd(p, &p.derivative());
    let (q, r) = p.divrem(&g);
    debug_assert!(r.is_zero());
    Ok(q.monic())
}

/// All rational roots of a nonzero polynomial, with multiplicities, plus the
/// monic cofactor with no rational roots:
/// `p = lc * prod (z - r)^mult * cofactor`.
///
/// Degrees one and two are solved directly (quadratic formula with an exact
/// square test); higher degrees use the rational root theorem on the
/// primitive integer form.
pub fn rational_roots(p: &UPoly) -> Result<(Vec<(Rational, u32)>, UPoly)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    let mut q = p.clone();

    // Strip the root at zero first so the candidate machinery can assume a
    // nonzero constant term.
    let zero_mult = q.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        q = UPoly::new(q.coeffs[zero_mult..].to_vec());
        roots.push((Rational::zero(), zero_mult as u32));
    }

    let mut candidates: Vec<Rational> = Vec::new();
    match q.degree().unwrap() {
        0 => {}
        1 => candidates.push(-&q.coeff(0) / &q.coeff(1)),
        2 => {
            let (a, b, c) = (q.coeff(2), q.coeff(1), q.coeff(0));
            let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &a * &c;
            if let Some(s) = rational_sqrt(&disc) {
                let two_a = Rational::from_integer(BigInt::from(2)) * &a;
                candidates.push((-&b + &s) / &two_a);
                candidates.push((-&b - &s) / &two_a);
            }
        }
        _ => {
            let ints = primitive_integer_coeffs(&q);
            let a0 = ints.first().unwrap().clone();
            let ad = ints.last().unwrap().clone();
            for num in positive_divisors(&a0) {
                for den in positive_divisors(&ad) {
                    let r = Rational::new(num.clone(), den.clone());
                    candidates.push(r.clone());
                    candidates.push(-r);
                }
            }
        }
    }
    candidates.sort();
    candidates.dedup();

    for r in candidates {
        let mut mult = 0u32;
        while !q.is_constant() && q.eval(&r).is_zero() {
            q = deflate(&q, &r);
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((roots, q.monic()))
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Synthetic division of `q` by `(z - r)`; caller guarantees `q(r) = 0`.
fn deflate(q: &UPoly, r: &Rational) -> UPoly {
    let d = q.degree().unwrap();
    let mut out = vec![Rational::zero(); d];
    let mut carry = Rational::zero();
    for i in (0..d).rev() {
        carry = q.coeff(i + 1) + &carry * r;
        out[i] = carry.clone();
    }
    debug_assert!((q.coeff(0) + carry * r).is_zero(), "deflation at non-root");
    UPoly::new(out)
}

/// Integer coefficients of `q` after clearing denominators and dividing out
/// the content; same roots, primitive.
fn primitive_integer_coeffs(q: &UPoly) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::one();
    for c in q.coeffs() {
        denom_lcm = super::lcm_big(&denom_lcm, c.denom());
    }
    let ints: Vec<BigInt> = q
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    ints.iter().map(|v| v / &content).collect()
}

/// Parse the CLI polynomial form: comma-separated rational coefficients,
/// constant term first ("-2,0,1" is z^2 - 2).
pub fn parse_poly(s: &str) -> Result<UPoly> {
    let coeffs = s
        .split(',')
        .map(super::parse_rational)
        .collect::<Result<Vec<_>>>()?;
    if coeffs.is_empty() {
        return Err(Error::invalid("empty polynomial"));
    }
    Ok(UPoly::new(coeffs))
}

/// Inverse of [`parse_poly`]; the zero polynomial prints as "0".
pub fn format_poly(p: &UPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .map(super::format_rational)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff_part = if mag.is_one() && i > 0 {
                String::new()
            } else {
                super::format_rational(&mag)
            };
            match i {
                0 => write!(f, "{}", super::format_rational(&mag))?,
                1 => write!(f, "{coeff_part}z")?,
                _ => write!(f, "{coeff_part}z^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! impl_bin_op {
    ($trait:ident, $fn:ident, $op:tt) => {
        impl std::ops::$trait for &UPoly {
            type Output = UPoly;
            fn $fn(self, rhs: &UPoly) -> UPoly {
                let len = self.coeffs.len().max(rhs.coeffs.len());
                let mut out = Vec::with_capacity(len);
                for i in 0..len {
                    out.push(self.coeff(i) $op rhs.coeff(i));
                }
                UPoly::new(out)
            }
        }
    };
}
impl_bin_op!(Add, add, +);
impl_bin_op!(Sub, sub, -);

impl std::ops::Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl std::ops::Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> UPoly {
        UPoly::from_int_coeffs(cs)
    }

    /// Independent determinant oracle: cofactor expansion along the first
    /// row. Exponential, fine for the small matrices under test.
    fn det_cofactor(mat: &[Vec<Rational>]) -> Rational {
        let n = mat.len();
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return mat[0][0].clone();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            if mat[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rational>> = mat[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &mat[0][j] * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn degree_and_normalization() {
        assert_eq!(UPoly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3, 0]).degree(), Some(2));
        assert_eq!(UPoly::new(vec![rat_int(0), rat_int(0)]), UPoly::zero());
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2]); // 1 + 2z
        let b = p(&[-1, 2]); // -1 + 2z
        assert_eq!(&a + &b, p(&[0, 4]));
        assert_eq!(&a - &b, p(&[2]));
        assert_eq!(&a * &b, p(&[-1, 0, 4]));
        assert_eq!(a.eval(&rat_int(3)), rat_int(7));
    }

    #[test]
    fn division_invariant() {
        let a = p(&[2, 0, -3, 1, 4]);
        let d = p(&[1, 5, 2]);
        let (q, r) = a.divrem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().map_or(true, |rd| rd < d.degree().unwrap()));
    }

    #[test]
    fn composition_example() {
        // (z^2 - 2) o (z + 1) = z^2 + 2z - 1
        let outer = p(&[-2, 0, 1]);
        let inner = p(&[1, 1]);
        assert_eq!(outer.compose(&inner), p(&[-1, 2, 1]));
    }

    #[test]
    fn resultant_pinned_examples() {
        // Convention check: res(z - 1, z - 2) = 1 - 2 = -1.
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[-2, 1])).unwrap(), rat_int(-1));
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[-1, 0, 1])).unwrap(), rat_int(4));
        assert!(matches!(
            resultant(&UPoly::zero(), &p(&[1, 1])),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn resultant_matches_cofactor_determinant() {
        let cases = [
            (p(&[-1, 1]), p(&[-2, 1])),
            (p(&[1, 0, 1]), p(&[-1, 0, 1])),
            (p(&[2, -3, 0, 1]), p(&[1, 1])),
            (p(&[-2, 0, 1]), p(&[0, -3, 0, 1])),
            (p(&[1, 2, 3, 4]), p(&[5, 0, 1, 1])),
        ];
        for (a, b) in cases {
            let mat = UPoly::sylvester(&a, &b);
            assert_eq!(
                resultant(&a, &b).unwrap(),
                det_cofactor(&mat),
                "sylvester determinant mismatch for ({a}, {b})"
            );
        }
    }

    #[test]
    fn resultant_product_formula_over_linear_factors() {
        // res(p, q) = lc(p)^deg q * prod q(alpha) over roots alpha of p.
        let roots = [rat_int(1), rat(1, 2), rat_int(-3)];
        let mut pp = UPoly::constant(rat_int(2));
        for r in &roots {
            pp = &pp * &UPoly::linear_root(r);
        }
        let q = p(&[1, 4, 0, 1]);
        let mut expect = rat_int(2) * rat_int(2) * rat_int(2); // lc^deg q = 2^3
        for r in &roots {
            expect *= q.eval(r);
        }
        assert_eq!(resultant(&pp, &q).unwrap(), expect);
    }

    #[test]
    fn discriminant_in_parameter_pinned_examples() {
        assert_eq!(discriminant_in_parameter(&p(&[0, 0, 1])).unwrap(), p(&[0, 1]));
        assert_eq!(discriminant_in_parameter(&p(&[-2, 0, 1])).unwrap(), p(&[2, 1]));
        assert_eq!(
            discriminant_in_parameter(&p(&[0, -3, 0, 1])).unwrap(),
            p(&[-4, 0, 1])
        );
        assert!(matches!(
            discriminant_in_parameter(&p(&[3, 1])),
            Err(Error::NoCriticalValues(1))
        ));
    }

    #[test]
    fn discriminant_roots_are_critical_values() {
        // Oracle: for p with known critical points (roots of p'), the roots
        // of h are exactly {p(c) : p'(c) = 0}.
        let poly = p(&[0, 0, -6, 0, 1]); // z^4 - 6 z^2, p' = 4z^3 - 12 z
        let h = discriminant_in_parameter(&poly).unwrap();
        // Critical points 0, ±sqrt(3); critical values 0 and -9.
        assert!(h.eval(&rat_int(0)).is_zero());
        assert!(h.eval(&rat_int(-9)).is_zero());
        assert_eq!(h.degree(), Some(3));
    }

    #[test]
    fn squarefree_part_pinned_example() {
        // z^3 (z - 1) -> z^2 - z
        assert_eq!(squarefree_part(&p(&[0, 0, 0, -1, 1])).unwrap(), p(&[0, -1, 1]));
    }

    #[test]
    fn rational_roots_pinned_example() {
        // 2z^3 - z^2 - 4z + 2 = 2 (z - 1/2)(z^2 - 2)
        let (roots, cofactor) = rational_roots(&p(&[2, -4, -1, 2])).unwrap();
        assert_eq!(roots, vec![(rat(1, 2), 1)]);
        assert_eq!(cofactor, p(&[-2, 0, 1]));
    }

    #[test]
    fn rational_roots_multiplicity_and_zero_root() {
        // z^2 (z - 1)^3 (z^2 + 1)
        let q = &(&p(&[0, 0, 1]) * &p(&[-1, 1]).pow(3)) * &p(&[1, 0, 1]);
        let (roots, cofactor) = rational_roots(&q).unwrap();
        assert_eq!(roots, vec![(rat_int(0), 2), (rat_int(1), 3)]);
        assert_eq!(cofactor, p(&[1, 0, 1]));
    }

    #[test]
    fn rational_roots_quadratic_square_test() {
        // z^2 - 2: irrational, no roots found, cofactor is itself.
        let (roots, cof) = rational_roots(&p(&[-2, 0, 1])).unwrap();
        assert!(roots.is_empty());
        assert_eq!(cof, p(&[-2, 0, 1]));
        // z^2 - 9/4 has roots ±3/2.
        let q = UPoly::new(vec![rat(-9, 4), rat_int(0), rat_int(1)]);
        let (roots, cof) = rational_roots(&q).unwrap();
        assert_eq!(roots, vec![(rat(-3, 2), 1), (rat(3, 2), 1)]);
        assert!(cof.is_constant());
    }

    #[test]
    fn gcd_of_common_factor() {
        let g = p(&[1, 1, 1]);
        let a = &g * &p(&[-3, 1]);
        let b = &g * &p(&[5, 0, 2]);
        assert_eq!(UPoly::gcd(&a, &b), g.monic());
    }

    #[test]
    fn parse_format_poly() {
        let q = parse_poly("-2,0,1").unwrap();
        assert_eq!(q, p(&[-2, 0, 1]));
        assert_eq!(format_poly(&q), "-2,0,1");
        let r = parse_poly("1/2,-3/4").unwrap();
        assert_eq!(format_poly(&r), "1/2,-3/4");
        assert!(parse_poly("1,,2").is_err());
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[-2, 0, 1]).to_string(), "z^2 - 2");
        assert_eq!(p(&[0, -1, 1]).to_string(), "z^2 - z");
        assert_eq!(UPoly::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn resultant_swap_antisymmetry(
            a in proptest::collection::vec(-6i64..=6, 2..=4),
            b in proptest::collection::vec(-6i64..=6, 2..=4),
        ) {
            let pa = p(&a);
            let pb = p(&b);
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            prop_assume!(!pa.is_constant() || !pb.is_constant());
            let m = pa.degree().unwrap();
            let n = pb.degree().unwrap();
            let lhs = resultant(&pa, &pb).unwrap();
            let mut rhs = resultant(&pb, &pa).unwrap();
            if (m * n) % 2 == 1 {
                rhs = -rhs;
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn resultant_multiplicative_in_second_argument(
            a in proptest::collection::vec(-4i64..=4, 2..=3),
            b in proptest::collection::vec(-4i64..=4, 2..=3),
            c in proptest::collection::vec(-4i64..=4, 2..=3),
        ) {
            let pa = p(&a);
            let pb = p(&b);
            let pc = p(&c);
            prop_assume!(pa.degree().map_or(false, |d| d >= 1));
            prop_assume!(!pb.is_zero() && !pc.is_zero());
            let prod = &pb * &pc;
            let lhs = resultant(&pa, &prod).unwrap();
            let rhs = resultant(&pa, &pb).unwrap() * resultant(&pa, &pc).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn roots_found_by_construction(
            r1 in -5i64..=5,
            r2 in -5i64..=5,
            scale in 1i64..=3,
        ) {
            // p = scale (z - r1)(z - r2)(z^2 - 2): recover exactly r1, r2.
            let q = &(&UPoly::linear_root(&rat_int(r1)) * &UPoly::linear_root(&rat_int(r2)))
                * &p(&[-2, 0, 1]).scale(&rat_int(scale));
            let (roots, cof) = rational_roots(&q).unwrap();
            let total: u32 = roots.iter().map(|(_, m)| m).sum();
            prop_assert_eq!(total, 2);
            prop_assert_eq!(cof, p(&[-2, 0, 1]));
            for (r, _) in roots {
                prop_assert!(q.eval(&r).is_zero());
            }
        }

        #[test]
        fn interpolation_round_trip(
            cs in proptest::collection::vec(-9i64..=9, 1..=6),
        ) {
            let q = p(&cs);
            let pts: Vec<(Rational, Rational)> = (0..cs.len() as i64)
                .map(|k| (rat_int(k), q.eval(&rat_int(k))))
                .collect();
            prop_assert_eq!(lagrange_interpolate(&pts), q);
        }

        #[test]
        fn squarefree_divides_and_is_squarefree(
            cs in proptest::collection::vec(-4i64..=4, 2..=5),
            e in 1u32..=2,
        ) {
            let base = p(&cs);
            prop_assume!(base.degree().map_or(false, |d| d >= 1));
            let q = base.pow(e);
            let sf = squarefree_part(&q).unwrap();
            let (_, rem) = q.divrem(&sf);
            prop_assert!(rem.is_zero());
            prop_assert!(UPoly::gcd(&sf, &sf.derivative()).is_constant());
        }
    }
}
