//! Exact arithmetic in Q(i) and the flat involution a -> -1 - a.

use torus_cosets::gaussq::{flat, in_k_flat, kflat_rep};
use torus_cosets::GaussianRational as Q;

fn main() {
    let a: Q = "3/2+1/3*i".parse().unwrap();
    let b = Q::from_parts(1, 2, -5, 1);
    println!("a = {a}, b = {b}");
    println!("a + b = {}", &a + &b);
    println!("a * b = {}", &a * &b);
    println!("a / b = {}", &a / &b);
    println!("|a|^2 = {}", a.norm_sqr());
    assert_eq!(&(&a / &b) * &b, a);

    for x in [
        a.clone(),
        flat(&a),
        Q::from_frac(-1, 2),
        Q::from_parts(-1, 2, -1, 1),
    ] {
        println!(
            "{x}: in K_flat = {}, representative = {}",
            in_k_flat(&x),
            kflat_rep(&x)
        );
    }
}
