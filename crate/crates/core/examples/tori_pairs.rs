//! G-orbits on pairs of maximal tori of SL_2, given by pairs (g, h) that
//! stand for (gTg^-1, hTh^-1).

use torus_cosets::sample::Sampler;
use torus_cosets::sl2class::{g_alpha, tori_pair_label};
use torus_cosets::{GaussianRational as Q, SLMatrix};

fn main() {
    let e = SLMatrix::identity(2);
    for alpha in [Q::from_int(2), Q::from_int(-3), Q::from_parts(1, 1, 1, 1)] {
        let label = tori_pair_label(&g_alpha(&alpha), &e).unwrap();
        println!(
            "(g_{alpha}, e) -> {}",
            serde_json::to_string(&label).unwrap()
        );
    }
    let mut s = Sampler::new(9);
    let (g, h, a) = (s.sl(2), s.sl(2), s.sl(2));
    let before = tori_pair_label(&g, &h).unwrap();
    let after = tori_pair_label(&(&a * &g), &(&a * &h)).unwrap();
    assert_eq!(before, after);
    println!("random pair -> {}", serde_json::to_string(&before).unwrap());
}
