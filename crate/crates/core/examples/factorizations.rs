//! Gauss, Bruhat and N-cell factorizations of exact SL_n matrices.

use torus_cosets::slmat::{
    bruhat_decompose, delta_star, gauss_decompose, n_cell_factor, principal_minors,
};
use torus_cosets::SLMatrix;

fn show<T: serde::Serialize>(label: &str, value: &T) {
    println!("{label}: {}", serde_json::to_string(value).unwrap());
}

fn main() {
    let g = SLMatrix::from_ints([[2, 1], [1, 1]]).unwrap();
    show("minors", &principal_minors(&g));
    let f = gauss_decompose(&g).unwrap();
    show("gauss", &f);
    assert_eq!(f.product(), g);
    show("delta*", &delta_star(&g).unwrap());
    show("n-cell", &n_cell_factor(&g));

    // off the big cell: a cyclic permutation matrix
    let h = SLMatrix::from_ints([[0, 1, 0], [0, 0, 1], [1, 0, 0]]).unwrap();
    println!(
        "gauss on a permutation matrix: {}",
        gauss_decompose(&h).unwrap_err()
    );
    let b = bruhat_decompose(&h);
    show("bruhat", &b);
    assert_eq!(b.product(), h);
    let nc = n_cell_factor(&h);
    assert_eq!(
        &nc.n1() * &torus_cosets::slmat::point_to_matrix(&nc.point),
        h
    );
    show("n-cell", &nc);
}
