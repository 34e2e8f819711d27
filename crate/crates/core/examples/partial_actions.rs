//! Checking the partial-action axioms for generator sets of partial maps,
//! including a birational involution that fails the inverse axiom.

use torus_cosets::nhat::sl2_generators;
use torus_cosets::paction::{
    apply_word, check_axioms, counterexample_generators, orbit_sample, Point,
};
use torus_cosets::sample::Sampler;
use torus_cosets::GaussianRational as Q;

fn main() {
    let set = sl2_generators();
    let mut s = Sampler::new(1);
    let points: Vec<Point> = (0..20).map(|_| s.cell_point(2).coords()).collect();
    let report = check_axioms(&set, &points, 3);
    println!(
        "sl2 generators: {} words, {} violations",
        report.words,
        report.violations.len()
    );

    let word = set.word(&[("wl", 1), ("wr", 1)]).unwrap();
    let x = vec![Q::from_int(2), Q::from_int(3)];
    match apply_word(&word, &set, &x) {
        Some(y) => println!("{} maps (2, 3) to ({}, {})", word.display(&set), y[0], y[1]),
        None => println!("{} is undefined at (2, 3)", word.display(&set)),
    }
    println!(
        "orbit sample of (2, 3) at depth 2: {} points",
        orbit_sample(&set, &x, 2).len()
    );

    let bad = counterexample_generators();
    let one = vec![Q::from_int(1), Q::from_int(1)];
    for v in check_axioms(&bad, &[one], 2).violations {
        println!("violation: {}", serde_json::to_string(&v).unwrap());
    }
}
