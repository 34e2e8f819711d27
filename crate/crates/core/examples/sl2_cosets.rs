//! N-double cosets in SL_2: strata of the slice, canonical labels, and
//! the T-double coset representatives.

use torus_cosets::sl2class::{
    canonical_label, classify_coset, g_alpha, label_oracle, stratify, t_double_coset_rep,
    CellPoint2,
};
use torus_cosets::{GaussianRational as Q, SLMatrix, TorusElement};

fn main() {
    let points = [
        CellPoint2::from_ints(0, 0),
        CellPoint2::from_ints(0, 5),
        CellPoint2::from_ints(2, -1),
        CellPoint2::from_ints(2, 3),
        CellPoint2::from_ints(-7, 1),
    ];
    for p in &points {
        let label = serde_json::to_string(&canonical_label(p)).unwrap();
        println!(
            "({}, {}): stratum {:?}, label {label}",
            p.alpha,
            p.beta,
            stratify(p)
        );
    }
    // alpha beta = 6 and alpha beta = -7 lie in one orbit since -7 = -1 - 6
    assert!(label_oracle(&points[3], &points[4]));
    assert_eq!(canonical_label(&points[3]), canonical_label(&points[4]));

    let g = SLMatrix::from_ints([[2, 1], [1, 1]]).unwrap();
    println!(
        "coset of [[2,1],[1,1]]: {}",
        serde_json::to_string(&classify_coset(&g).unwrap()).unwrap()
    );
    let t = TorusElement::sl2(Q::from_int(3));
    let h = t.left_mul(&g_alpha(&Q::from_int(4)));
    println!(
        "T-double coset of t g_4: {}",
        serde_json::to_string(&t_double_coset_rep(&h).unwrap()).unwrap()
    );
}
