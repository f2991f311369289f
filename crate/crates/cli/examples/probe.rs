use semilocal::module::injective_envelope;
use semilocal_cli::generate::{algebra_pool, module_pool};
use std::time::Instant;

fn main() {
    let algebras = algebra_pool(42, 28);
    let mut jobs = Vec::new();
    for (name, a) in &algebras {
        for m in module_pool(a, 42 ^ 0x44, 4) {
            jobs.push((name.clone(), m));
        }
    }
    jobs.truncate(82);
    let (name, m) = &jobs[81];
    println!("module {name} dim={} over dim-{} p={}", m.dim(), m.algebra().dim(), m.modulus());
    let env = injective_envelope(m).unwrap();
    println!("E dim = {}", env.module.dim());
    let t = Instant::now();
    let endo = env.module.endo_algebra().unwrap();
    println!("End(E) dim = {} in {:?}", endo.dim(), t.elapsed());
    let t = Instant::now();
    let rad = endo.algebra.radical();
    println!("radical: ok={} dim={:?} in {:?}", rad.is_ok(), rad.map(|r| r.radical.dim()), t.elapsed());
}
