//! Classification of pairs (X, Y) of regular semisimple elements with
//! prescribed conjugacy classes, and the closure relations between orbits.

use torus_cosets::sl2class::{adherence, ss_pair_classify, SemisimpleOrbit};
use torus_cosets::{GaussianRational as Q, SLMatrix, TorusElement};

fn main() {
    let t = TorusElement::sl2(Q::from_int(2));
    let tp = TorusElement::sl2(Q::from_int(3));
    let x = SLMatrix::from_rows(vec![
        vec![Q::from_frac(7, 2), Q::from_frac(-3, 2)],
        vec![Q::from_int(3), Q::from_int(-1)],
    ])
    .unwrap();
    let y = tp.to_matrix();
    let o = ss_pair_classify(&x, &y, &t, &tp).unwrap();
    println!(
        "orbit: {}, tr(XY) = {}",
        serde_json::to_string(&o).unwrap(),
        (&x * &y).trace()
    );

    let orbits = [
        SemisimpleOrbit::OAlpha {
            alpha: Q::from_int(1),
        },
        SemisimpleOrbit::OAlpha {
            alpha: Q::from_int(0),
        },
        SemisimpleOrbit::OUPlus,
        SemisimpleOrbit::OVMinus,
        SemisimpleOrbit::OTPlus,
        SemisimpleOrbit::OTMinus,
    ];
    for o in orbits {
        let a = adherence(&o, &t, &tp).unwrap();
        println!(
            "{}: {}",
            serde_json::to_string(&o).unwrap(),
            serde_json::to_string(&a).unwrap()
        );
    }
}
