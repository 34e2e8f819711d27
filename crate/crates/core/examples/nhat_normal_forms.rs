//! The partial maps w_{w1,w2} on the slice U^-U, their normal forms, and
//! the connecting element between two points of one orbit.

use torus_cosets::nhat::{
    compose_normal_form, connect, wmap_eval, wmap_inverse, NhatNormalForm, WMap,
};
use torus_cosets::sample::Sampler;
use torus_cosets::slmat::{gauss_decompose, point_to_matrix};
use torus_cosets::Permutation;

fn main() {
    let mut s = Sampler::new(3);
    let p1 = Permutation::from_one_line(&[2, 3, 1]).unwrap();
    let p2 = Permutation::from_one_line(&[1, 3, 2]).unwrap();
    let map = WMap::from_perms(&p1, &p2).unwrap();
    let (p, q) = loop {
        let p = s.cell_point(3);
        if let Some(q) = wmap_eval(&map, &p) {
            break (p, q);
        }
    };
    assert_eq!(wmap_eval(&wmap_inverse(&map), &q), Some(p.clone()));
    println!(
        "w({p1}, {p2}) maps {} to {}",
        serde_json::to_string(&p).unwrap(),
        serde_json::to_string(&q).unwrap()
    );

    let a = NhatNormalForm::new(s.torus(3), s.weyl_lift(3), s.weyl_lift(3)).unwrap();
    let b = NhatNormalForm::from_wmap(&map).unwrap();
    let ab = compose_normal_form(&a, &b);
    assert_eq!(ab.eval(&p), b.eval(&p).and_then(|y| a.eval(&y)));
    println!(
        "composite normal form: {}",
        serde_json::to_string(&ab).unwrap()
    );

    // n1 u1 n2 lands back in U^-U once the torus parts cancel
    let (w1, w2) = (s.weyl_lift(3), s.weyl_lift(3));
    let m = w2.mul_right(&w1.mul_left(&point_to_matrix(&p)));
    let tau = gauss_decompose(&m).unwrap().t;
    let n1 = w1.matrix().clone();
    let n2 = tau.inverse().right_mul(w2.matrix());
    let c = connect(&p, &n1, &n2).unwrap();
    assert_eq!(c.form.eval(&p), Some(c.u2.clone()));
    println!(
        "connecting form: {}",
        serde_json::to_string(&c.form).unwrap()
    );
}
