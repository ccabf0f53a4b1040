//! Times the full fundamental-group pipeline for the two reference
//! structures: diagonal table, Reidemeister–Schreier, and the big Smith
//! normal form.

use std::time::Instant;

use tforge_core::beauville::UnmixedStructure;
use tforge_core::fpgroup::{abelianization, pi1_surface};
use tforge_core::perm::{parse_perm, PermGroup, SphericalTriple};

fn main() {
    let p = |s: &str| parse_perm(s, 7).unwrap();
    let t2 = SphericalTriple::new(
        p("(1,7,6,5,4)"),
        p("(1,3,2,6,7)"),
        p("(2,3,4,5,6)"),
    )
    .unwrap();
    let triples = [
        SphericalTriple::new(
            p("(1,2)(3,4)"),
            p("(1,5,7)(2,3)(4,6)"),
            p("(1,7,5,2,4,6,3)"),
        )
        .unwrap(),
        SphericalTriple::new(
            p("(1,2)(3,4)"),
            p("(1,7,4)(2,5)(3,6)"),
            p("(1,3,6,4,7,2,5)"),
        )
        .unwrap(),
    ];
    for (k, t1) in triples.into_iter().enumerate() {
        let structure = UnmixedStructure::new(
            PermGroup::alternating(7).unwrap(),
            t1,
            t2.clone(),
        )
        .unwrap();
        let start = Instant::now();
        let pr = pi1_surface(&structure).unwrap();
        println!(
            "surface {}: pi1 with {} generators, {} relators in {:?}",
            k + 1,
            pr.generator_count(),
            pr.relators().len(),
            start.elapsed()
        );
        let start = Instant::now();
        let ab = abelianization(&pr);
        println!(
            "  abelianization: free rank {}, torsion {:?} in {:?}",
            ab.free_rank,
            ab.torsion,
            start.elapsed()
        );
    }
}
