//! One handler per subcommand: parse the textual arguments, call into the
//! library, and shape a JSON (inputs, results) pair. Big integers are
//! serialized as decimal strings; complex numbers as [re, im] pairs.

use anyhow::{anyhow, bail, Result};
use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use serde_json::{json, Value};

use tforge_core::beauville::{
    is_unmixed_beauville, search_beauville, surface_invariants, SurfaceInvariants,
    UnmixedStructure,
};
use tforge_core::belyi::{
    belyi_for_curve, locus_within_belyi_set, verify_belyi, ChainStep, CriticalLocus,
};
use tforge_core::curves::{branch_equivalences, curves_isomorphic, CurveSpec, MobiusMap};
use tforge_core::dessins::{
    classify_polynomial_monodromies, normal_closure_data, triangle_genus, MonodromyTriple,
};
use tforge_core::exact::UPoly;
use tforge_core::fpgroup::{
    abelianization, diagonal_coset_table, diagonal_data, reidemeister_schreier,
};
use tforge_core::perm::{
    enumerate_spherical, hurwitz_classes, simultaneous_conjugator, HurwitzMode, PermGroup,
    SphericalTriple,
};
use tforge_core::twocrit::{build_system, solve_numeric, unity_inequivalent, unity_orbit};

use crate::parse::{
    parse_perm_list, parse_perm_triple, parse_rational, parse_rational_list, parse_signature,
    parse_usize_list,
};
use crate::report::Phases;

#[derive(Clone, Copy, ValueEnum)]
pub enum GroupKind {
    Alternating,
    Symmetric,
}

/// Ambient permutation group: a named family on `--degree` points, or
/// explicit generators.
#[derive(Args)]
pub struct GroupSpec {
    /// Permutation degree n (points 1..=n).
    #[arg(long)]
    pub degree: usize,
    /// Named group family.
    #[arg(long, value_enum, default_value_t = GroupKind::Alternating)]
    pub kind: GroupKind,
    /// Semicolon-separated generators in cycle notation (overrides --kind).
    #[arg(long, conflicts_with = "kind")]
    pub generators: Option<String>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<PermGroup> {
        Ok(match &self.generators {
            Some(gens) => PermGroup::new(self.degree, parse_perm_list(gens, self.degree)?)?,
            None => match self.kind {
                GroupKind::Alternating => PermGroup::alternating(self.degree)?,
                GroupKind::Symmetric => PermGroup::symmetric(self.degree)?,
            },
        })
    }

    pub fn echo(&self) -> Value {
        match &self.generators {
            Some(gens) => json!({"degree": self.degree, "generators": gens}),
            None => {
                let kind = match self.kind {
                    GroupKind::Alternating => "alternating",
                    GroupKind::Symmetric => "symmetric",
                };
                json!({"degree": self.degree, "kind": kind})
            }
        }
    }
}

fn triple_json(t: &SphericalTriple) -> Value {
    json!([
        t.a1().to_string(),
        t.a2().to_string(),
        t.a3().to_string()
    ])
}

fn mobius_json(m: &MobiusMap) -> Value {
    let e = m.entries();
    json!([
        e[0].to_string(),
        e[1].to_string(),
        e[2].to_string(),
        e[3].to_string()
    ])
}

fn locus_json(l: &CriticalLocus) -> Value {
    json!({
        "rationals": l.rationals.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "irrational_part": l.irrational_part.to_string(),
        "includes_infinity": l.includes_infinity,
    })
}

fn invariants_json(inv: &SurfaceInvariants) -> Value {
    json!({
        "g1": inv.g1.to_string(),
        "g2": inv.g2.to_string(),
        "e": inv.euler_e.to_string(),
        "chi": inv.chi.to_string(),
        "k2": inv.k2.to_string(),
    })
}

fn spherical_triple(spec: &str, degree: usize) -> Result<SphericalTriple> {
    let [a1, a2, a3] = parse_perm_triple(spec, degree)?;
    Ok(SphericalTriple::new(a1, a2, a3)?)
}

pub fn curves_iso(genus: u32, a: &str, b: &str, phases: &mut Phases) -> Result<(Value, Value)> {
    let ra = parse_rational(a)?;
    let rb = parse_rational(b)?;
    let iso = phases.time("isomorphic", || curves_isomorphic(genus, &ra, &rb))?;
    let eq = phases.time("equivalences", || branch_equivalences(genus, &ra, &rb))?;
    let inputs = json!({"genus": genus, "a": ra.to_string(), "b": rb.to_string()});
    let results = json!({
        "isomorphic": iso,
        "maps_preserving_full_branch_set": eq.with_infinity.iter().map(mobius_json).collect::<Vec<_>>(),
        "maps_on_finite_branch_set": eq.finite_only.iter().map(mobius_json).collect::<Vec<_>>(),
    });
    Ok((inputs, results))
}

pub fn belyi(
    genus: u32,
    param: Option<&str>,
    minpoly: Option<&str>,
    phases: &mut Phases,
) -> Result<(Value, Value)> {
    let (spec, inputs) = match (param, minpoly) {
        (Some(a), None) => {
            let r = parse_rational(a)?;
            let inputs = json!({"genus": genus, "param": r.to_string()});
            (CurveSpec::rational(genus, r), inputs)
        }
        (None, Some(coeffs)) => {
            let p = UPoly::new(parse_rational_list(coeffs)?);
            let inputs = json!({"genus": genus, "minpoly": p.to_string()});
            (CurveSpec::algebraic(genus, p), inputs)
        }
        _ => bail!("exactly one of --param and --minpoly is required"),
    };
    let chain = phases.time("construct", || belyi_for_curve(&spec))?;
    let locus = phases.time("verify", || verify_belyi(&chain))?;
    let steps: Vec<Value> = chain
        .steps
        .iter()
        .map(|step| match step {
            ChainStep::Poly(p) => json!({
                "kind": "polynomial",
                "degree": p.degree(),
                "map": p.to_string(),
            }),
            ChainStep::Factored(f) => json!({
                "kind": "factored",
                "scale": f.scale.to_string(),
                "roots": f.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "exponents": f.exponents.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            }),
        })
        .collect();
    let results = json!({
        "steps": steps,
        "critical_values": locus_json(&locus),
        "is_belyi": locus_within_belyi_set(&locus),
    });
    Ok((inputs, results))
}

pub fn perm_spherical(
    group: &GroupSpec,
    signature: &str,
    phases: &mut Phases,
) -> Result<(Value, Value)> {
    let sig = parse_signature(signature)?;
    let g = group.build()?;
    let classes = phases.time("enumerate", || enumerate_spherical(&g, sig))?;
    let inputs = json!({"group": group.echo(), "signature": sig});
    let results = json!({
        "class_count": classes.len(),
        "classes": classes.iter().map(|t| json!({
            "triple": triple_json(t),
            "orders": t.orders(),
        })).collect::<Vec<_>>(),
    });
    Ok((inputs, results))
}

pub fn perm_hurwitz(
    group: &GroupSpec,
    signature: &str,
    braid_only: bool,
    phases: &mut Phases,
) -> Result<(Value, Value)> {
    let sig = parse_signature(signature)?;
    let g = group.build()?;
    let triples = phases.time("enumerate", || enumerate_spherical(&g, sig))?;
    let mode = if braid_only {
        HurwitzMode::BraidOnly
    } else {
        HurwitzMode::BraidWithConjugation(&g)
    };
    let orbits = phases.time("orbits", || hurwitz_classes(&triples, mode))?;
    let inputs = json!({
        "group": group.echo(),
        "signature": sig,
        "mode": if braid_only { "braid" } else { "braid-conjugation" },
    });
    let results = json!({
        "conjugation_class_count": triples.len(),
        "orbit_count": orbits.len(),
        "orbits": orbits.iter().map(|o| json!({
            "size": o.size,
            "representative": triple_json(&o.representative),
        })).collect::<Vec<_>>(),
    });
    Ok((inputs, results))
}

pub fn perm_conj(
    group: &GroupSpec,
    t1: &str,
    t2: &str,
    phases: &mut Phases,
) -> Result<(Value, Value)> {
    let g = group.build()?;
    let p1 = parse_perm_list(t1, group.degree)?;
    let p2 = parse_perm_list(t2, group.degree)?;
    let conj = phases.time("search", || simultaneous_conjugator(&p1, &p2, &g))?;
    let inputs = json!({"group": group.echo(), "t1": t1, "t2": t2});
    let results = json!({
        "exists": conj.is_some(),
        "conjugator": conj.map(|c| c.to_string()),
    });
    Ok((inputs, results))
}

pub fn dessins_classify(
    n: usize,
    mu: &str,
    nu: &str,
    phases: &mut Phases,
) -> Result<(Value, Value)> {
    let mu = parse_usize_list(mu, "mu")?;
    let nu = parse_usize_list(nu, "nu")?;
    let classes = phases.time("classify", || classify_polynomial_monodromies(n, &mu, &nu))?;
    let inputs = json!({"n": n, "mu": mu, "nu": nu});
    let results = json!({
        "class_count": classes.len(),
        "classes": classes.iter().map(|c| {
            let t = &c.representative;
            json!({
                "sigma0": t.sigma0().to_string(),
                "sigma1": t.sigma1().to_string(),
                "sigma_inf": t.sigma_inf().to_string(),
                "class_size": c.class_size.to_string(),
                "group_order": c.monodromy_group_order.to_string(),
                "is_real": c.is_real,
            })
        }).collect::<Vec<_>>(),
    });
    Ok((inputs, results))
}

pub fn dessins_closure(
    degree: usize,
    sigma0: &str,
    sigma1: &str,
    phases: &mut Phases,
) -> Result<(Value, Value)> {
    let s0 = crate::parse::parse_one_perm(sigma0, degree)?;
    let s1 = crate::parse::parse_one_perm(sigma1, degree)?;
    let t = MonodromyTriple::from_pair(s0, s1)?;
    let data = phases.time("closure", || normal_closure_data(&t))?;
    let inputs = json!({"degree": degree, "sigma0": sigma0, "sigma1": sigma1});
    let results = json!({
        "sigma_inf": t.sigma_inf().to_string(),
        "group_order": data.group_order.to_string(),
        "stabilizer_index": data.stabilizer_index,
        "component_count": data.component_count.to_string(),
        "genus_of_closure": data.genus_of_closure.to_string(),
    });
    Ok((inputs, results))
}

pub fn genus(order: &str, signature: &str, phases: &mut Phases) -> Result<(Value, Value)> {
    let order: BigInt = order
        .trim()
        .parse()
        .map_err(|e| anyhow!("bad group order {order:?}: {e}"))?;
    let sig = parse_signature(signature)?;
    let g = phases.time("genus", || triangle_genus(&order, (sig[0], sig[1], sig[2])))?;
    let inputs = json!({"order": order.to_string(), "signature": sig});
    let results = json!({"genus": g.to_string()});
    Ok((inputs, results))
}

pub fn beauville_check(
    group: &GroupSpec,
    t1: &str,
    t2: &str,
    phases: &mut Phases,
) -> Result<(Value, Value)> {
    let g = group.build()?;
    let tr1 = spherical_triple(t1, group.degree)?;
    let tr2 = spherical_triple(t2, group.degree)?;
    let s = UnmixedStructure::new(g, tr1, tr2)?;
    let free = phases.time("check", || is_unmixed_beauville(&s))?;
    let invariants = if free {
        Some(phases.time("invariants", || surface_invariants(&s))?)
    } else {
        None
    };
    let inputs = json!({"group": group.echo(), "t1": t1, "t2": t2});
    let results = json!({
        "is_beauville": free,
        "invariants": invariants.as_ref().map(invariants_json),
    });
    Ok((inputs, results))
}

pub fn beauville_search(
    group: &GroupSpec,
    max_order: u64,
    limit: usize,
    phases: &mut Phases,
) -> Result<(Value, Value)> {
    let g = group.build()?;
    let found = phases.time("search", || search_beauville(&g, max_order))?;
    let inputs = json!({"group": group.echo(), "max_order": max_order, "limit": limit});
    let results = json!({
        "structure_count": found.len(),
        "truncated": found.len() > limit,
        "structures": found.iter().take(limit).map(|s| json!({
            "triple1": triple_json(&s.triple1),
            "signature1": s.triple1.signature(),
            "triple2": triple_json(&s.triple2),
            "signature2": s.triple2.signature(),
        })).collect::<Vec<_>>(),
    });
    Ok((inputs, results))
}

pub fn pi1(group: &GroupSpec, t1: &str, t2: &str, phases: &mut Phases) -> Result<(Value, Value)> {
    let g = group.build()?;
    let tr1 = spherical_triple(t1, group.degree)?;
    let tr2 = spherical_triple(t2, group.degree)?;
    let s = UnmixedStructure::new(g, tr1, tr2)?;
    if !is_unmixed_beauville(&s)? {
        bail!("the triples do not form an unmixed Beauville structure");
    }
    let (pr, phi) = diagonal_data(&s)?;
    let table = phases.time("coset-table", || diagonal_coset_table(&pr, &phi))?;
    let sub = phases.time("rewrite", || reidemeister_schreier(&table, &pr))?;
    let inv = phases.time("abelianization", || abelianization(&sub));
    let inputs = json!({"group": group.echo(), "t1": t1, "t2": t2});
    let results = json!({
        "product_presentation": {
            "generators": pr.generator_count(),
            "relators": pr.relators().len(),
        },
        "coset_count": table.coset_count(),
        "surface_group": {
            "generators": sub.generator_count(),
            "relators": sub.relators().len(),
        },
        "abelianization": {
            "free_rank": inv.free_rank,
            "torsion": inv.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        },
    });
    Ok((inputs, results))
}

pub fn twocrit_solve(
    n: usize,
    mu: &str,
    nu: &str,
    attempts: usize,
    tol: f64,
    seed: u64,
    phases: &mut Phases,
) -> Result<(Value, Value)> {
    let mu = parse_usize_list(mu, "mu")?;
    let nu = parse_usize_list(nu, "nu")?;
    let sys = build_system(n, &mu, &nu)?;
    let sols = phases.time("solve", || solve_numeric(&sys, attempts, tol, seed))?;
    let classes = phases.time("quotient", || unity_inequivalent(&sys, &sols));
    let complex_list = |v: &[Complex64]| -> Value {
        Value::Array(v.iter().map(|c| json!([c.re, c.im])).collect())
    };
    let inputs = json!({
        "n": n, "mu": mu, "nu": nu,
        "attempts": attempts, "tol": tol, "seed": seed,
    });
    let results = json!({
        "variables": sys.variable_count(),
        "equations": sys.equations().len(),
        "cluster_count": sols.len(),
        "class_count": classes.len(),
        "real_class_count": classes.iter().filter(|s| s.is_real).count(),
        "classes": classes.iter().map(|s| json!({
            "beta": complex_list(&s.beta),
            "gamma": complex_list(&s.gamma),
            "coefficients": complex_list(&s.normalized_coefficients),
            "residual": s.residual,
            "is_real": s.is_real,
            "orbit_size": unity_orbit(&sys, s).len(),
        })).collect::<Vec<_>>(),
    });
    Ok((inputs, results))
}
