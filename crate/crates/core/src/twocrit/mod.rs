//! Coefficient-matching systems for normalized degree-n polynomials whose
//! finite critical values are {0, 1}: exact integer equation systems, a
//! seeded multistart Newton solver realizing the finitely many solutions
//! numerically, and the quotient by the n-th-roots-of-unity action.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{Error, Result};

/// Sparse multivariate polynomial with integer coefficients. Exponent
/// vectors carry one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(n_vars: usize) -> Self {
        MPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: i64) -> Self {
        let mut p = MPoly::zero(n_vars);
        p.add_term(vec![0; n_vars], BigInt::from(c));
        p
    }

    pub fn variable(n_vars: usize, v: usize) -> Self {
        let mut exps = vec![0; n_vars];
        exps[v] = 1;
        let mut p = MPoly::zero(n_vars);
        p.add_term(exps, BigInt::from(1));
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            // re-fetch the key to remove; easier to mark and sweep
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Multiplication by the single variable `v`.
    fn times_var(&self, v: usize) -> MPoly {
        let mut out = MPoly::zero(self.n_vars);
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            exps[v] += 1;
            out.terms.insert(exps, c.clone());
        }
        out
    }

    pub fn derivative(&self, v: usize) -> MPoly {
        let mut out = MPoly::zero(self.n_vars);
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[v] -= 1;
            out.add_term(exps, c * BigInt::from(e[v]));
        }
        out
    }

    pub fn eval(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.n_vars);
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut m = Complex64::new(c.to_f64().expect("coefficient fits a double"), 0.0);
            for (v, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    m *= point[v].powu(exp);
                }
            }
            acc += m;
        }
        acc
    }
}

/// Coefficient table with floating coefficients, for the hot numeric path.
type CompiledPoly = Vec<(Box<[u32]>, f64)>;

fn compile(p: &MPoly) -> CompiledPoly {
    p.terms
        .iter()
        .map(|(e, c)| {
            (
                e.clone().into_boxed_slice(),
                c.to_f64().expect("coefficient fits a double"),
            )
        })
        .collect()
}

fn eval_compiled(p: &CompiledPoly, point: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (e, c) in p {
        let mut m = Complex64::new(*c, 0.0);
        for (v, &exp) in e.iter().enumerate() {
            if exp > 0 {
                m *= point[v].powu(exp);
            }
        }
        acc += m;
    }
    acc
}

/// The square coefficient-matching system for degree-n polynomials with
/// critical-value multiplicities `mu` over 0 and `nu` over 1: variables
/// β₁…β_r, γ₁…γ_s (in that order), equations F₁ = Σmᵢβᵢ, F₂ = Σnₖγₖ, and
/// the n−1 coefficient differences of ∏(z−βᵢ)^{mᵢ} − 1 − ∏(z−γₖ)^{nₖ}.
#[derive(Debug, Clone)]
pub struct CritSystem {
    n: usize,
    mu: Vec<usize>,
    nu: Vec<usize>,
    equations: Vec<MPoly>,
    compiled_equations: Vec<CompiledPoly>,
    compiled_jacobian: Vec<Vec<CompiledPoly>>,
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
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::invalid(format!("{name} must be nonincreasing")));
    }
    Ok(())
}

/// Monic ∏ (z − x_{v})^{m} expanded in z; entry k is the coefficient of zᵏ.
fn monic_product(n_vars: usize, factors: &[(usize, usize)]) -> Vec<MPoly> {
    let mut coeffs = vec![MPoly::constant(n_vars, 1)];
    for &(v, mult) in factors {
        for _ in 0..mult {
            // next[k] = coeffs[k−1] − x_v · coeffs[k]
            let mut next = Vec::with_capacity(coeffs.len() + 1);
            next.push(MPoly::zero(n_vars).sub(&coeffs[0].times_var(v)));
            for k in 1..coeffs.len() {
                next.push(coeffs[k - 1].sub(&coeffs[k].times_var(v)));
            }
            next.push(coeffs[coeffs.len() - 1].clone());
            coeffs = next;
        }
    }
    coeffs
}

pub fn build_system(n: usize, mu: &[usize], nu: &[usize]) -> Result<CritSystem> {
    validate_partition(n, mu, "mu")?;
    validate_partition(n, nu, "nu")?;
    let r = mu.len();
    let s = nu.len();
    if r + s != n + 1 {
        return Err(Error::PolynomialTypeCount);
    }
    let vars = r + s;

    let mut f1 = MPoly::zero(vars);
    for (i, &m) in mu.iter().enumerate() {
        f1 = f1.add(&{
            let mut t = MPoly::variable(vars, i);
            t.terms.values_mut().for_each(|c| *c *= BigInt::from(m));
            t
        });
    }
    let mut f2 = MPoly::zero(vars);
    for (k, &m) in nu.iter().enumerate() {
        f2 = f2.add(&{
            let mut t = MPoly::variable(vars, r + k);
            t.terms.values_mut().for_each(|c| *c *= BigInt::from(m));
            t
        });
    }

    let a = monic_product(vars, &mu.iter().enumerate().map(|(i, &m)| (i, m)).collect::<Vec<_>>());
    let b = monic_product(
        vars,
        &nu.iter()
            .enumerate()
            .map(|(k, &m)| (r + k, m))
            .collect::<Vec<_>>(),
    );
    debug_assert_eq!(a.len(), n + 1);
    debug_assert_eq!(b.len(), n + 1);

    let mut equations = vec![f1, f2];
    for j in 0..n.saturating_sub(1) {
        let mut f = a[j].sub(&b[j]);
        if j == 0 {
            f = f.sub(&MPoly::constant(vars, 1));
        }
        equations.push(f);
    }
    debug_assert_eq!(equations.len(), n + 1);

    let compiled_equations: Vec<CompiledPoly> = equations.iter().map(compile).collect();
    let compiled_jacobian: Vec<Vec<CompiledPoly>> = equations
        .iter()
        .map(|eq| (0..vars).map(|v| compile(&eq.derivative(v))).collect())
        .collect();

    Ok(CritSystem {
        n,
        mu: mu.to_vec(),
        nu: nu.to_vec(),
        equations,
        compiled_equations,
        compiled_jacobian,
    })
}

impl CritSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn nu(&self) -> &[usize] {
        &self.nu
    }

    pub fn equations(&self) -> &[MPoly] {
        &self.equations
    }

    pub fn variable_count(&self) -> usize {
        self.mu.len() + self.nu.len()
    }

    /// Max |Fⱼ| over all equations at the given point.
    pub fn residual(&self, point: &[Complex64]) -> f64 {
        self.compiled_equations
            .iter()
            .map(|eq| eval_compiled(eq, point).norm())
            .fold(0.0, f64::max)
    }

    fn eval_all(&self, point: &[Complex64]) -> Vec<Complex64> {
        self.compiled_equations
            .iter()
            .map(|eq| eval_compiled(eq, point))
            .collect()
    }

    fn jacobian_at(&self, point: &[Complex64]) -> Vec<Vec<Complex64>> {
        self.compiled_jacobian
            .iter()
            .map(|row| row.iter().map(|p| eval_compiled(p, point)).collect())
            .collect()
    }
}

/// One numeric point of the system, in canonical coordinate order.
#[derive(Debug, Clone)]
pub struct NumericSolution {
    pub beta: Vec<Complex64>,
    pub gamma: Vec<Complex64>,
    /// max |Fⱼ| over the exact equations.
    pub residual: f64,
    /// True when the resulting polynomial has real coefficients (all
    /// imaginary parts of the normalized coefficients below the clustering
    /// threshold).
    pub is_real: bool,
    /// a₀ … a_{n−2} of P(z) = zⁿ + a_{n−2}z^{n−2} + … + a₀.
    pub normalized_coefficients: Vec<Complex64>,
}

/// Start-distribution scale per coordinate. The roots of a normalized
/// degree-n polynomial with critical values {0, 1} are bounded
/// independently of which solution it is (all critical values have modulus
/// ≤ 1, so the roots stay within a few units), and the scale only needs to
/// cover that disc; growing it with n pushes almost all starts outside
/// every convergence basin.
fn start_scale(n: usize) -> f64 {
    (n as f64).sqrt()
}

fn complex_gaussian(rng: &mut impl Rng) -> Complex64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    let radius = (-2.0 * u1.ln()).sqrt();
    let angle = std::f64::consts::TAU * u2;
    Complex64::new(radius * angle.cos(), radius * angle.sin())
}

/// In-place LU solve with partial pivoting; None on numerical singularity.
fn lu_solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let d = b.len();
    for k in 0..d {
        let (pivot, max) = (k..d)
            .map(|i| (i, a[i][k].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("nonempty range");
        if max < 1e-300 {
            return None;
        }
        a.swap(k, pivot);
        b.swap(k, pivot);
        for i in k + 1..d {
            let factor = a[i][k] / a[k][k];
            for j in k..d {
                let s = factor * a[k][j];
                a[i][j] -= s;
            }
            let s = factor * b[k];
            b[i] -= s;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); d];
    for k in (0..d).rev() {
        let mut sum = b[k];
        for j in k + 1..d {
            sum -= a[k][j] * x[j];
        }
        x[k] = sum / a[k][k];
    }
    Some(x)
}

fn newton(sys: &CritSystem, mut x: Vec<Complex64>, tol: f64) -> Option<Vec<Complex64>> {
    let mut residual = sys.residual(&x);
    for _ in 0..200 {
        if !residual.is_finite() || x.iter().any(|c| c.norm() > 1e9) {
            return None;
        }
        if residual < tol {
            return Some(x);
        }
        let f = sys.eval_all(&x);
        let delta = lu_solve(sys.jacobian_at(&x), f)?;
        // Backtracking damping: accept the longest step in {1, ½, ¼, …}
        // that reduces the residual, which widens the convergence basins
        // enormously compared to full steps.
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..24 {
            let trial: Vec<Complex64> = x
                .iter()
                .zip(&delta)
                .map(|(xi, di)| xi - lambda * di)
                .collect();
            let trial_residual = sys.residual(&trial);
            if trial_residual.is_finite() && trial_residual < residual {
                x = trial;
                residual = trial_residual;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            return None;
        }
    }
    None
}

fn sort_key(c: &Complex64) -> (f64, f64) {
    (c.re, c.im)
}

/// Sorts coordinates within each run of equal multiplicity (such variables
/// are interchangeable) by (re, im) — the gauge for the unordered
/// variables.
fn canonicalize(sys: &CritSystem, point: &[Complex64]) -> Vec<Complex64> {
    let r = sys.mu.len();
    let mut out = point.to_vec();
    let mut sort_runs = |lo: usize, parts: &[usize]| {
        let mut start = 0;
        while start < parts.len() {
            let mut end = start + 1;
            while end < parts.len() && parts[end] == parts[start] {
                end += 1;
            }
            out[lo + start..lo + end].sort_by(|a, b| {
                sort_key(a)
                    .partial_cmp(&sort_key(b))
                    .expect("finite coordinates")
            });
            start = end;
        }
    };
    sort_runs(0, &sys.mu);
    sort_runs(r, &sys.nu);
    out
}

/// Runs of interchangeable variables: maximal blocks of equal multiplicity
/// within mu, then within nu, as (start, length) over the concatenated
/// coordinate vector.
fn variable_runs(sys: &CritSystem) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut push_runs = |offset: usize, parts: &[usize]| {
        let mut start = 0;
        while start < parts.len() {
            let mut end = start + 1;
            while end < parts.len() && parts[end] == parts[start] {
                end += 1;
            }
            runs.push((offset + start, end - start));
            start = end;
        }
    };
    push_runs(0, &sys.mu);
    push_runs(sys.mu.len(), &sys.nu);
    runs
}

/// Coordinate closeness up to permuting interchangeable variables: within
/// each run the entries are matched as multisets, so ties broken
/// differently by the canonical sort (entries equal up to noise) still
/// compare as the same point.
fn close(sys: &CritSystem, a: &[Complex64], b: &[Complex64], threshold: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    for (lo, len) in variable_runs(sys) {
        let mut used = vec![false; len];
        'outer: for i in 0..len {
            for j in 0..len {
                if !used[j] && (a[lo + i] - b[lo + j]).norm() <= threshold {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return false;
        }
    }
    true
}

/// The n rotated copies of a canonical point under β ↦ ζ⁻¹β, γ ↦ ζ⁻¹γ.
fn unity_images(sys: &CritSystem, point: &[Complex64]) -> Vec<Vec<Complex64>> {
    (0..sys.n)
        .map(|k| {
            let angle = -std::f64::consts::TAU * k as f64 / sys.n as f64;
            let zeta_inv = Complex64::from_polar(1.0, angle);
            let rotated: Vec<Complex64> = point.iter().map(|c| c * zeta_inv).collect();
            canonicalize(sys, &rotated)
        })
        .collect()
}

fn unity_equivalent(sys: &CritSystem, a: &[Complex64], b: &[Complex64], threshold: f64) -> bool {
    unity_images(sys, a)
        .iter()
        .any(|img| close(sys, img, b, threshold))
}

/// Monic complex polynomial with the given roots and multiplicities;
/// low-order coefficients first.
fn expand_roots(roots: &[Complex64], mults: &[usize]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for (root, &m) in roots.iter().zip(mults) {
        for _ in 0..m {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= root * c;
            }
            coeffs = next;
        }
    }
    coeffs
}

fn eval_poly(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Durand–Kerner root finder for a complex polynomial, low-order
/// coefficients first; the leading coefficient need not be 1.
fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..degree).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for k in 0..degree {
            let num = eval_poly(&monic, roots[k]);
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..degree {
                if j != k {
                    den *= roots[k] - roots[j];
                }
            }
            if den.norm() < 1e-300 {
                continue;
            }
            let step = num / den;
            roots[k] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 {
            break;
        }
    }
    roots
}

/// A-posteriori check: the critical values of P = ∏(z−βᵢ)^{mᵢ}, computed
/// from independently found roots of P′, all lie within `tol` of {0, 1}.
fn critical_values_verified(sys: &CritSystem, beta: &[Complex64], tol: f64) -> bool {
    let p = expand_roots(beta, &sys.mu);
    let dp: Vec<Complex64> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();
    polynomial_roots(&dp).into_iter().all(|root| {
        let value = eval_poly(&p, root);
        let to_zero = value.norm();
        let to_one = (value - Complex64::new(1.0, 0.0)).norm();
        to_zero.min(to_one) <= tol
    })
}

fn solution_from_point(sys: &CritSystem, point: &[Complex64], threshold: f64) -> NumericSolution {
    let r = sys.mu.len();
    let beta = point[..r].to_vec();
    let gamma = point[r..].to_vec();
    let coeffs = expand_roots(&beta, &sys.mu);
    debug_assert_eq!(coeffs.len(), sys.n + 1);
    debug_assert!(
        coeffs[sys.n - 1].norm() < 1e-6,
        "normalization kills the z^{{n-1}} coefficient"
    );
    let normalized_coefficients: Vec<Complex64> = coeffs[..sys.n - 1].to_vec();
    let is_real = normalized_coefficients
        .iter()
        .all(|c| c.im.abs() <= threshold);
    NumericSolution {
        beta,
        gamma,
        residual: sys.residual(point),
        is_real,
        normalized_coefficients,
    }
}

/// Clustering threshold: the design default 1e−8, widened to 10·tol when a
/// coarse tolerance is requested.
fn cluster_threshold(tol: f64) -> f64 {
    (10.0 * tol).max(1e-8)
}

/// Multistart Newton over `attempts` seeded complex-Gaussian starts
/// (component scale n). Converged points are canonicalized, clustered by
/// coordinate distance, and each cluster representative is kept only if
/// the critical values of its polynomial verify against {0, 1} a
/// posteriori. Returns the representatives sorted by coordinates — NOT yet
/// quotiented by the root-of-unity action (see `unity_inequivalent`).
pub fn solve_numeric(
    sys: &CritSystem,
    attempts: usize,
    tol: f64,
    seed: u64,
) -> Result<Vec<NumericSolution>> {
    if !(tol > 0.0) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let d = sys.variable_count();
    let scale = start_scale(sys.n);
    let converged: Vec<Vec<Complex64>> = (0..attempts)
        .into_par_iter()
        .filter_map(|a| {
            let mut rng =
                ChaCha8Rng::seed_from_u64(seed ^ (a as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let start: Vec<Complex64> = (0..d)
                .map(|_| complex_gaussian(&mut rng) * scale)
                .collect();
            newton(sys, start, tol)
        })
        .collect();

    let threshold = cluster_threshold(tol);
    let mut representatives: Vec<Vec<Complex64>> = Vec::new();
    for point in converged {
        let canonical = canonicalize(sys, &point);
        if !representatives
            .iter()
            .any(|rep| close(sys, rep, &canonical, threshold))
        {
            representatives.push(canonical);
        }
    }
    representatives.retain(|rep| critical_values_verified(sys, &rep[..sys.mu.len()], tol));
    representatives.sort_by(|a, b| {
        a.iter()
            .map(sort_key)
            .partial_cmp(b.iter().map(sort_key))
            .expect("finite coordinates")
    });
    Ok(representatives
        .into_iter()
        .map(|rep| solution_from_point(sys, &rep, threshold))
        .collect())
}

/// The orbit of a solution under z ↦ ζz for ζⁿ = 1 (acting on roots as
/// β ↦ ζ⁻¹β, γ ↦ ζ⁻¹γ), with duplicates collapsed; its size always
/// divides n.
pub fn unity_orbit(sys: &CritSystem, sol: &NumericSolution) -> Vec<NumericSolution> {
    let point: Vec<Complex64> = sol
        .beta
        .iter()
        .chain(&sol.gamma)
        .copied()
        .collect();
    let threshold = cluster_threshold(1e-12);
    let mut distinct: Vec<Vec<Complex64>> = Vec::new();
    for image in unity_images(sys, &point) {
        if !distinct.iter().any(|d| close(sys, d, &image, threshold)) {
            distinct.push(image);
        }
    }
    distinct
        .into_iter()
        .map(|p| solution_from_point(sys, &p, threshold))
        .collect()
}

fn lex_less(a: &[Complex64], b: &[Complex64]) -> bool {
    a.iter()
        .map(sort_key)
        .partial_cmp(b.iter().map(sort_key))
        .expect("finite coordinates")
        .is_lt()
}

/// Gauge-fixes a point within its root-of-unity orbit: a real-coefficient
/// member if the orbit contains one (reality is a property of the orbit,
/// and a found solution is often a rotation of the real polynomial in its
/// class), with lexicographic order breaking remaining ties.
fn preferred_representative(
    sys: &CritSystem,
    point: &[Complex64],
    threshold: f64,
) -> NumericSolution {
    let mut best: Option<(Vec<Complex64>, NumericSolution)> = None;
    for image in unity_images(sys, point) {
        let sol = solution_from_point(sys, &image, threshold);
        let better = match &best {
            None => true,
            Some((best_point, best_sol)) => match (sol.is_real, best_sol.is_real) {
                (true, false) => true,
                (false, true) => false,
                _ => lex_less(&image, best_point),
            },
        };
        if better {
            best = Some((image, sol));
        }
    }
    best.expect("orbit is nonempty").1
}

/// Keeps one representative per root-of-unity orbit, in first-seen order,
/// each gauge-fixed by `preferred_representative` — so a class counts as
/// real exactly when its orbit contains a real-coefficient polynomial.
pub fn unity_inequivalent(sys: &CritSystem, solutions: &[NumericSolution]) -> Vec<NumericSolution> {
    let threshold = cluster_threshold(1e-12);
    let mut kept: Vec<(Vec<Complex64>, NumericSolution)> = Vec::new();
    for sol in solutions {
        let point: Vec<Complex64> = sol.beta.iter().chain(&sol.gamma).copied().collect();
        if !kept
            .iter()
            .any(|(rep, _)| unity_equivalent(sys, rep, &point, threshold))
        {
            let fixed = preferred_representative(sys, &point, threshold);
            kept.push((point, fixed));
        }
    }
    kept.into_iter().map(|(_, s)| s).collect()
}
