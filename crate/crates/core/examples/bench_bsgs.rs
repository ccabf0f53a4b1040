use tforge_core::perm::{order_generated_by, parse_perm};
use std::time::Instant;

fn main() {
    let a = parse_perm("(1,2)(3,4)", 7).unwrap();
    let b = parse_perm("(1,5,7)(2,3)(4,6)", 7).unwrap();
    let t0 = Instant::now();
    let n = 20000;
    let mut acc = num_bigint::BigInt::from(0);
    for _ in 0..n {
        acc += order_generated_by(7, &[a.clone(), b.clone()]);
    }
    println!("order sum {}, {:?} per call", acc, t0.elapsed() / n);
}
