use tforge_core::twocrit::{build_system, solve_numeric, unity_inequivalent, unity_orbit};

fn main() {
    let sys = build_system(7, &[2, 2, 1, 1, 1], &[3, 2, 2]).unwrap();
    for seed in [1u64, 7, 11, 42] {
        for attempts in [256usize, 512, 1024] {
            let t = std::time::Instant::now();
            let sols = solve_numeric(&sys, attempts, 1e-12, seed).unwrap();
            let distinct = unity_inequivalent(&sys, &sols);
            let real: Vec<_> = distinct.iter().filter(|s| s.is_real).collect();
            println!(
                "seed {seed:2} attempts {attempts:4}: {:2} clusters, {} classes, {} real classes, {:?}",
                sols.len(),
                distinct.len(),
                real.len(),
                t.elapsed()
            );
            if attempts == 1024 {
                for s in &real {
                    let orbit = unity_orbit(&sys, s).len();
                    let coeffs: Vec<String> = s
                        .normalized_coefficients
                        .iter()
                        .map(|c| format!("{:.6}", c.re))
                        .collect();
                    println!(
                        "    real: orbit {orbit}, residual {:.2e}, a = [{}]",
                        s.residual,
                        coeffs.join(", ")
                    );
                }
            }
        }
    }
}
