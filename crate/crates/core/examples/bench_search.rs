use std::time::Instant;
use tforge_core::beauville::{search_beauville, sigma_set};
use tforge_core::perm::{enumerate_spherical, PermGroup};

fn main() {
    let a7 = PermGroup::alternating(7).unwrap();
    let _ = a7.conjugacy_classes().unwrap();

    for sig in [[5u64, 5, 5], [7, 7, 7], [6, 6, 6], [2, 6, 7], [4, 6, 7]] {
        let t0 = Instant::now();
        let classes = enumerate_spherical(&a7, sig).unwrap();
        println!("enumerate {:?}: {} classes in {:?}", sig, classes.len(), t0.elapsed());
        if !classes.is_empty() {
            let t1 = Instant::now();
            let s = sigma_set(&classes[0], &a7).unwrap();
            println!("  sigma_set: {} elements in {:?}", s.elements.len(), t1.elapsed());
        }
    }
    let t0 = Instant::now();
    let found = search_beauville(&a7, 7).unwrap();
    println!("full search: {} structures in {:?}", found.len(), t0.elapsed());
}
