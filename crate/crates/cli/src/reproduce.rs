//! End-to-end verification of the library's reference computations: the
//! degree-7 monodromy classification, the two reference triples and the
//! (5,5,5) instance, Hurwitz classes in A₇, Beauville freeness, genera and
//! surface invariants, and the fundamental-group pipeline through
//! abelianization. Emits one pass/fail/skipped record per item.

use anyhow::{anyhow, bail, Result};
use clap::Args;
use num_bigint::BigInt;
use serde_json::{json, Value};

use tforge_core::beauville::{is_unmixed_beauville, surface_invariants, UnmixedStructure};
use tforge_core::dessins::{classify_polynomial_monodromies, triangle_genus, MonodromyTriple};
use tforge_core::fpgroup::{
    abelianization, diagonal_coset_table, diagonal_data, reidemeister_schreier, AbelianInvariants,
};
use tforge_core::perm::{
    enumerate_spherical, hurwitz_classes, simultaneous_conjugator, HurwitzMode, PermGroup,
    SphericalTriple,
};

use crate::parse::parse_perm_triple;
use crate::report::Phases;

const REFERENCE_TRIPLE_1: &str = "(1,2)(3,4); (1,5,7)(2,3)(4,6); (1,7,5,2,4,6,3)";
const REFERENCE_TRIPLE_2: &str = "(1,2)(3,4); (1,7,4)(2,5)(3,6); (1,3,6,4,7,2,5)";
const TRIPLE_555: &str = "(1,7,6,5,4); (1,3,2,6,7); (2,3,4,5,6)";

#[derive(Args)]
pub struct ReproduceArgs {
    /// Skip the Smith-normal-form item (the abelianization comparison).
    #[arg(long)]
    pub skip_snf: bool,
    /// Override the first reference triple (three ';'-separated cycles).
    #[arg(long)]
    pub triple1: Option<String>,
    /// Override the second reference triple.
    #[arg(long)]
    pub triple2: Option<String>,
}

struct Items {
    records: Vec<Value>,
    failed: Vec<String>,
}

impl Items {
    fn new() -> Self {
        Items {
            records: Vec::new(),
            failed: Vec::new(),
        }
    }

    /// Runs one item; Ok(detail) is a pass, Err is a fail. Returns whether
    /// it passed so later items can declare missing prerequisites.
    fn run(&mut self, name: &str, phases: &mut Phases, f: impl FnOnce() -> Result<Value>) -> bool {
        match phases.time(name, f) {
            Ok(detail) => {
                self.records
                    .push(json!({"item": name, "status": "pass", "detail": detail}));
                true
            }
            Err(err) => {
                self.records
                    .push(json!({"item": name, "status": "fail", "error": err.to_string()}));
                self.failed.push(name.to_string());
                false
            }
        }
    }

    fn skip(&mut self, name: &str) {
        self.records.push(json!({"item": name, "status": "skipped"}));
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(anyhow!(msg()))
    }
}

fn monodromy_triple(spec: &str) -> Result<MonodromyTriple> {
    let [a, b, c] = parse_perm_triple(spec, 7)?;
    Ok(MonodromyTriple::new(a, b, c)?)
}

fn spherical(spec: &str) -> Result<SphericalTriple> {
    let [a, b, c] = parse_perm_triple(spec, 7)?;
    Ok(SphericalTriple::new(a, b, c)?)
}

/// Verify one reference triple: right-action product identity (enforced by
/// the constructor), orders (2, 6, 7), monodromy group of order 2520.
fn verify_reference(spec: &str) -> Result<(MonodromyTriple, Value)> {
    let t = monodromy_triple(spec)?;
    let orders = t.orders();
    check(orders == (2, 6, 7), || {
        format!("orders {orders:?}, expected (2, 6, 7)")
    })?;
    let order = t.monodromy_group_order();
    check(order == BigInt::from(2520), || {
        format!("monodromy group order {order}, expected 2520")
    })?;
    let detail = json!({
        "sigma0": t.sigma0().to_string(),
        "sigma1": t.sigma1().to_string(),
        "sigma_inf": t.sigma_inf().to_string(),
        "orders": [2, 6, 7],
        "group_order": "2520",
    });
    Ok((t, detail))
}

fn structure_for(
    a7: &PermGroup,
    triple: &MonodromyTriple,
    t555: &SphericalTriple,
) -> Result<UnmixedStructure> {
    let spherical = SphericalTriple::new(
        triple.sigma0().clone(),
        triple.sigma1().clone(),
        triple.sigma_inf().clone(),
    )?;
    Ok(UnmixedStructure::new(
        a7.clone(),
        spherical,
        t555.clone(),
    )?)
}

pub fn run(args: &ReproduceArgs, phases: &mut Phases) -> Result<(Value, Value, bool)> {
    let spec1 = args.triple1.as_deref().unwrap_or(REFERENCE_TRIPLE_1);
    let spec2 = args.triple2.as_deref().unwrap_or(REFERENCE_TRIPLE_2);
    let inputs = json!({
        "skip_snf": args.skip_snf,
        "triple1": spec1,
        "triple2": spec2,
    });

    let a7 = PermGroup::alternating(7)?;
    let s7 = PermGroup::symmetric(7)?;
    let mut items = Items::new();

    items.run("classify-degree7", phases, || {
        let classes = classify_polynomial_monodromies(7, &[2, 2, 1, 1, 1], &[3, 2, 2])?;
        check(classes.len() == 2, || {
            format!("{} classes, expected 2", classes.len())
        })?;
        for c in &classes {
            check(c.monodromy_group_order == BigInt::from(2520), || {
                format!("class group order {}, expected 2520", c.monodromy_group_order)
            })?;
            check(c.is_real, || "class is not real".to_string())?;
        }
        Ok(json!({
            "class_count": 2,
            "group_orders": ["2520", "2520"],
            "all_real": true,
        }))
    });

    let mut triple1 = None;
    items.run("verify-triple-1", phases, || {
        let (t, detail) = verify_reference(spec1)?;
        triple1 = Some(t);
        Ok(detail)
    });
    let mut triple2 = None;
    items.run("verify-triple-2", phases, || {
        let (t, detail) = verify_reference(spec2)?;
        triple2 = Some(t);
        Ok(detail)
    });

    items.run("triples-inequivalent", phases, || {
        let (Some(t1), Some(t2)) = (&triple1, &triple2) else {
            bail!("prerequisite triple verification failed");
        };
        let conj = simultaneous_conjugator(
            &[t1.sigma0().clone(), t1.sigma1().clone(), t1.sigma_inf().clone()],
            &[t2.sigma0().clone(), t2.sigma1().clone(), t2.sigma_inf().clone()],
            &s7,
        )?;
        check(conj.is_none(), || {
            format!("unexpected simultaneous conjugator {}", conj.as_ref().unwrap())
        })?;
        Ok(json!({"simultaneous_conjugator_in_s7": Value::Null}))
    });

    let mut t555 = None;
    items.run("verify-555-instance", phases, || {
        let t = spherical(TRIPLE_555)?;
        check(t.signature() == [5, 5, 5], || {
            format!("signature {:?}, expected [5, 5, 5]", t.signature())
        })?;
        let order = t.generated_order();
        check(order == BigInt::from(2520), || {
            format!("generated order {order}, expected 2520")
        })?;
        t555 = Some(t);
        Ok(json!({"signature": [5, 5, 5], "generated_order": "2520"}))
    });

    items.run("hurwitz-555", phases, || {
        let triples = enumerate_spherical(&a7, [5, 5, 5])?;
        let braid_conj = hurwitz_classes(&triples, HurwitzMode::BraidWithConjugation(&a7))?;
        let braid_only = hurwitz_classes(&triples, HurwitzMode::BraidOnly)?;
        check(braid_conj.len() == 1, || {
            format!("{} braid+conjugation classes, expected 1", braid_conj.len())
        })?;
        Ok(json!({
            "braid_conjugation_classes": 1,
            "braid_only_classes": braid_only.len(),
        }))
    });

    let mut structures: Vec<UnmixedStructure> = Vec::new();
    for (name, triple) in [
        ("beauville-free-1", &triple1),
        ("beauville-free-2", &triple2),
    ] {
        items.run(name, phases, || {
            let (Some(t), Some(t5)) = (triple, &t555) else {
                bail!("prerequisite triple verification failed");
            };
            let s = structure_for(&a7, t, t5)?;
            check(is_unmixed_beauville(&s)?, || {
                "fixed-point sets intersect away from the identity".to_string()
            })?;
            structures.push(s);
            Ok(json!({"acts_freely": true}))
        });
    }

    for (name, orders, expected) in [
        ("genus-267", (2u64, 6u64, 7u64), 241i64),
        ("genus-555", (5, 5, 5), 505),
    ] {
        items.run(name, phases, || {
            let g = triangle_genus(&BigInt::from(2520), orders)?;
            check(g == BigInt::from(expected), || {
                format!("genus {g}, expected {expected}")
            })?;
            Ok(json!({"genus": g.to_string()}))
        });
    }

    items.run("surface-invariants", phases, || {
        check(structures.len() == 2, || {
            "prerequisite Beauville structures missing".to_string()
        })?;
        let mut details = Vec::new();
        for s in &structures {
            let inv = surface_invariants(s)?;
            check(
                inv.euler_e == BigInt::from(192)
                    && inv.chi == BigInt::from(48)
                    && inv.k2 == BigInt::from(384),
                || {
                    format!(
                        "invariants e={} chi={} K2={}, expected 192/48/384",
                        inv.euler_e, inv.chi, inv.k2
                    )
                },
            )?;
            details.push(json!({
                "e": inv.euler_e.to_string(),
                "chi": inv.chi.to_string(),
                "k2": inv.k2.to_string(),
            }));
        }
        Ok(Value::Array(details))
    });

    let mut tables = Vec::new();
    items.run("coset-table", phases, || {
        check(structures.len() == 2, || {
            "prerequisite Beauville structures missing".to_string()
        })?;
        let mut details = Vec::new();
        for s in &structures {
            let (pr, phi) = diagonal_data(s)?;
            let table = diagonal_coset_table(&pr, &phi)?;
            check(table.coset_count() == 2520, || {
                format!("{} cosets, expected 2520", table.coset_count())
            })?;
            check(pr.relators().len() == 10, || {
                format!("{} relators, expected 10", pr.relators().len())
            })?;
            table.verify_relators(&pr)?;
            details.push(json!({
                "cosets": table.coset_count(),
                "relators_verified": pr.relators().len(),
            }));
            tables.push((pr, table));
        }
        Ok(Value::Array(details))
    });

    let mut surface_groups = Vec::new();
    items.run("surface-group-presentation", phases, || {
        check(tables.len() == 2, || {
            "prerequisite coset tables missing".to_string()
        })?;
        let mut details = Vec::new();
        for (pr, table) in &tables {
            let sub = reidemeister_schreier(table, pr)?;
            check(sub.generator_count() == 7561, || {
                format!("{} generators, expected 7561", sub.generator_count())
            })?;
            details.push(json!({
                "generators": sub.generator_count(),
                "relators": sub.relators().len(),
            }));
            surface_groups.push(sub);
        }
        Ok(Value::Array(details))
    });

    if args.skip_snf {
        items.skip("abelianization-match");
    } else {
        items.run("abelianization-match", phases, || {
            check(surface_groups.len() == 2, || {
                "prerequisite surface-group presentations missing".to_string()
            })?;
            let invs: Vec<AbelianInvariants> =
                surface_groups.iter().map(abelianization).collect();
            for inv in &invs {
                check(inv.free_rank == 0, || {
                    format!("free rank {}, expected 0", inv.free_rank)
                })?;
            }
            check(invs[0].torsion == invs[1].torsion, || {
                format!(
                    "torsion mismatch: {:?} vs {:?}",
                    invs[0].torsion, invs[1].torsion
                )
            })?;
            let torsion: Vec<String> = invs[0].torsion.iter().map(|d| d.to_string()).collect();
            Ok(json!({
                "free_rank": 0,
                "torsion": torsion,
                "identical": true,
            }))
        });
    }

    let passed = items
        .records
        .iter()
        .filter(|r| r["status"] == "pass")
        .count();
    let skipped = items
        .records
        .iter()
        .filter(|r| r["status"] == "skipped")
        .count();
    let ok = items.failed.is_empty();
    if !ok {
        eprintln!("failed items: {}", items.failed.join(", "));
    }
    let results = json!({
        "items": items.records,
        "passed": passed,
        "failed": items.failed,
        "skipped": skipped,
    });
    Ok((inputs, results, ok))
}
