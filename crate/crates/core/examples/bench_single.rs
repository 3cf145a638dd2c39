use boot2lab_core::sampling::{derive_rng, SeedSpec};
use boot2lab_core::toy::*;
use std::time::Instant;
fn main() {
    let config = ToyConfig::paper_full();
    let base = SeedSpec::new(1);
    let t0 = Instant::now();
    let mut dataset_rng = derive_rng(&base.child(0));
    let dataset = generate_dataset(&config, &mut dataset_rng).unwrap();
    println!("dataset: {:?}", t0.elapsed());
    let t1 = Instant::now();
    let (ensemble, _) = build_ensemble(&dataset, &config, &base.child(1)).unwrap();
    println!("ensemble: {:?}", t1.elapsed());
    let t2 = Instant::now();
    let mut rng = derive_rng(&base.child(2));
    let merged = double_bootstrap(&ensemble, config.k, config.merge_mode, &mut rng).unwrap();
    println!("double_boot: {:?}", t2.elapsed());
    let d = delta_boot_boot(&merged, None).unwrap();
    println!("delta: {d}, total {:?}", t0.elapsed());
}
