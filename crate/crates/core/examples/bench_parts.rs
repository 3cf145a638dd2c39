use boot2lab_core::sampling::*;
use std::time::Instant;

fn main() {
    let n = 1_000_000usize;
    let spec = SeedSpec::new(3);
    // raw u64 throughput
    let mut rng = derive_rng(&spec.child(0));
    let t = Instant::now();
    let mut acc = 0u64;
    for _ in 0..n * 50 {
        acc = acc.wrapping_add(rng.next_u64());
    }
    println!("next_u64: {:.2} ns/draw (acc {acc})", t.elapsed().as_nanos() as f64 / (n * 50) as f64);

    // next_below throughput
    let mut rng = derive_rng(&spec.child(1));
    let t = Instant::now();
    let mut acc = 0u64;
    for _ in 0..n * 50 {
        acc = acc.wrapping_add(rng.next_below(n as u64));
    }
    println!("next_below: {:.2} ns/draw (acc {acc})", t.elapsed().as_nanos() as f64 / (n * 50) as f64);

    // full multinomial counts pass
    let mut rng = derive_rng(&spec.child(2));
    let mut replica = ResampleCounts::uniform(n);
    let t = Instant::now();
    for _ in 0..20 {
        bootstrap_counts_into(&mut rng, ResampleMode::Multinomial, &mut replica).unwrap();
    }
    println!("counts fill: {:.2} ns/draw", t.elapsed().as_nanos() as f64 / (n * 20) as f64);

    // weighted mean pass
    let mut rng = derive_rng(&spec.child(3));
    let values = sample_gaussian(&mut rng, 5.0, 100.0, n).unwrap();
    let t = Instant::now();
    let mut sum = 0.0;
    for _ in 0..20 {
        sum += weighted_mean(&values, &replica).unwrap();
    }
    println!("weighted_mean: {:.2} ns/term (sum {sum})", t.elapsed().as_nanos() as f64 / (n * 20) as f64);
}
