//! Acceptance suite: thirteen criteria, one line each, with fixed sample
//! sizes, exact comparisons and wall-clock limits. Exits nonzero if any
//! criterion fails.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::Rng;

use torus_cosets::gaussq::{flat, kflat_rep, GaussianRational};
use torus_cosets::nhat::{
    compose_normal_form, conjugate_torus_across, connect, sl2_generators, ts_eval, wmap_eval,
    wmap_inverse, NhatNormalForm, WMap,
};
use torus_cosets::paction::{check_axioms, counterexample_generators, Axiom, Point};
use torus_cosets::perm::Permutation;
use torus_cosets::sample::Sampler;
use torus_cosets::sl2class::{
    adherence, canonical_label, classify_coset, g_alpha, label_oracle, ss_pair_classify,
    t_double_coset_rep, tori_pair_label, wd, wl, wr, CellPoint2, OrbitLabel, SemisimpleOrbit, TRep,
};
use torus_cosets::slmat::{
    delta_star, gauss_decompose, matrix_to_point, point_to_matrix, principal_minors, weyl_lift,
    SLMatrix, TorusElement, WeylLift,
};

type Q = GaussianRational;
type Outcome = Result<String, String>;
type Sl2Map = fn(&CellPoint2) -> Option<CellPoint2>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sl2_swap() -> WeylLift {
    weyl_lift(&Permutation::transposition(2, 0, 1))
}

/// Random SL_2 slice point; one in five draws lies on a special line.
fn special_point(s: &mut Sampler, k: usize) -> CellPoint2 {
    let (a, b) = (s.scalar(), s.scalar());
    match k % 10 {
        0 => CellPoint2::new(a, Q::zero()),
        1 => CellPoint2::new(Q::zero(), b),
        2 => {
            let a = s.nonzero_scalar();
            let b = -a.inv();
            CellPoint2::new(a, b)
        }
        _ => CellPoint2::new(a, b),
    }
}

fn c01_generator_relations() -> Outcome {
    let mut s = Sampler::new(101);
    let (mut squares, mut products) = (0, 0);
    for k in 0..1000 {
        let p = special_point(&mut s, k);
        for (name, f) in [("wl", wl as Sl2Map), ("wr", wr)] {
            if let Some(y) = f(&p) {
                ensure(f(&y).as_ref() == Some(&p), || {
                    format!("{name}^2 != id at {p:?}")
                })?;
                squares += 1;
            }
        }
        if let Some(d) = wd(&p) {
            if let Some(z) = wr(&p).and_then(|y| wl(&y)) {
                ensure(z == d, || format!("wl wr != wd at {p:?}"))?;
                products += 1;
            }
            if let Some(z) = wl(&p).and_then(|y| wr(&y)) {
                ensure(z == d, || format!("wr wl != wd at {p:?}"))?;
                products += 1;
            }
        }
    }
    ensure(squares > 1500 && products > 1200, || {
        format!("too few defined samples: {squares} squares, {products} products")
    })?;
    Ok(format!(
        "{squares} square checks, {products} product checks"
    ))
}

fn c02_closed_forms_vs_matrices() -> Outcome {
    let mut s = Sampler::new(102);
    let w = sl2_swap();
    let e = WeylLift::identity(2);
    let maps: [(&str, Sl2Map, WMap); 3] = [
        ("wl", wl, WMap::new(w.clone(), e.clone()).unwrap()),
        ("wr", wr, WMap::new(e, w.clone()).unwrap()),
        ("wd", wd, WMap::new(w.clone(), w).unwrap()),
    ];
    let mut undefined = 0;
    for (name, f, map) in &maps {
        for k in 0..1000 {
            let p = special_point(&mut s, k);
            let closed = f(&p);
            let matrix = wmap_eval(map, &p.to_cell_point())
                .map(|q| CellPoint2::from_cell_point(&q).unwrap());
            ensure(closed == matrix, || {
                format!("{name} at {p:?}: closed {closed:?} vs matrix {matrix:?}")
            })?;
            undefined += closed.is_none() as usize;
        }
    }
    Ok(format!("3000 points, {undefined} undefined on both paths"))
}

fn c03_gauss_contracts() -> Outcome {
    let mut s = Sampler::new(103);
    for n in 2..=4 {
        for _ in 0..500 {
            let (v, t, u) = (
                s.lower_unitriangular(n),
                s.torus(n),
                s.upper_unitriangular(n),
            );
            let g = &t.right_mul(&v) * &u;
            ensure(
                principal_minors(&g) == principal_minors(&t.to_matrix()),
                || format!("minors of v t u differ from minors of t for n = {n}"),
            )?;
            let f = gauss_decompose(&g).map_err(|e| e.to_string())?;
            ensure(f.v == v && f.t == t && f.u == u, || {
                "Gauss factors not recovered".into()
            })?;
            let (t1, t2) = (s.torus(n), s.torus(n));
            let h = t2.right_mul(&t1.left_mul(&g));
            let d = delta_star(&h).map_err(|e| e.to_string())?;
            ensure(d == t1.mul(&t).mul(&t2), || {
                format!("delta* mismatch for n = {n}")
            })?;
        }
    }
    Ok("1500 factored matrices".into())
}

fn c04_sector_nonemptiness() -> Outcome {
    let mut s = Sampler::new(104);
    let perms = Permutation::all(3);
    let mut worst = 0;
    for p1 in &perms {
        for p2 in &perms {
            let map = WMap::from_perms(p1, p2).unwrap();
            let hit = (1..=20).find(|_| map.in_domain(&s.cell_point(3)));
            let k = hit.ok_or_else(|| format!("sector ({p1}, {p2}) empty after 20 draws"))?;
            worst = worst.max(k);
        }
    }
    Ok(format!("36 sectors, at most {worst} draws needed"))
}

fn c05_inverse_round_trip() -> Outcome {
    let mut s = Sampler::new(105);
    let mut checked = 0;
    for n in [2, 3] {
        let perms = Permutation::all(n);
        for p1 in &perms {
            for p2 in &perms {
                let map = WMap::from_perms(p1, p2).unwrap();
                let inv = wmap_inverse(&map);
                let mut found = 0;
                let mut draws = 0;
                while found < 500 {
                    draws += 1;
                    ensure(draws <= 5000, || format!("sector ({p1}, {p2}) too sparse"))?;
                    let p = s.cell_point(n);
                    let Some(y) = wmap_eval(&map, &p) else {
                        continue;
                    };
                    ensure(wmap_eval(&inv, &y).as_ref() == Some(&p), || {
                        format!("round trip fails for ({p1}, {p2}) at {p:?}")
                    })?;
                    found += 1;
                }
                checked += found;
            }
        }
    }
    Ok(format!("{checked} domain points over 40 sectors"))
}

fn random_form(s: &mut Sampler, n: usize) -> NhatNormalForm {
    NhatNormalForm::new(s.torus(n), s.weyl_lift(n), s.weyl_lift(n)).unwrap()
}

fn c06_normal_forms() -> Outcome {
    let mut s = Sampler::new(106);
    let mut defined = 0;
    let mut total = 0;
    for n in [2, 3] {
        for _ in 0..500 {
            let (a, b) = (random_form(&mut s, n), random_form(&mut s, n));
            let ab = compose_normal_form(&a, &b);
            for _ in 0..2 {
                let p = s.cell_point(n);
                total += 1;
                if let Some(z) = b.eval(&p).and_then(|y| a.eval(&y)) {
                    defined += 1;
                    ensure(ab.eval(&p).as_ref() == Some(&z), || {
                        format!("composite disagrees with sequential evaluation at {p:?}")
                    })?;
                }
            }
            // torus conjugation across a map
            let map = WMap::new(s.weyl_lift(n), s.weyl_lift(n)).unwrap();
            let t = s.torus(n);
            let sp = conjugate_torus_across(&map, &t);
            let w = NhatNormalForm::from_wmap(&map).unwrap();
            let conj = compose_normal_form(
                &w.inverse(),
                &compose_normal_form(&NhatNormalForm::from_torus(t.clone()), &w),
            );
            ensure(
                conj.same_map(&NhatNormalForm::from_torus(sp.clone())),
                || "w^-1 t_s w is not t_s' in normal form".into(),
            )?;
            let p = s.cell_point(n);
            if let Some(y) = wmap_eval(&map, &p) {
                if let Some(z) = wmap_eval(&wmap_inverse(&map), &ts_eval(&t, &y)) {
                    ensure(z == ts_eval(&sp, &p), || "T-conjugation rule fails".into())?;
                }
            }
        }
    }
    ensure(defined * 2 > total, || {
        format!("only {defined}/{total} points defined")
    })?;
    Ok(format!(
        "1000 word pairs, {defined}/{total} points on the common domain"
    ))
}

fn c07_connect() -> Outcome {
    let mut s = Sampler::new(107);
    let mut done = 0;
    for n in [2, 3] {
        let mut count = 0;
        while count < 500 {
            let u1 = s.cell_point(n);
            let (w1, w2) = (s.weyl_lift(n), s.weyl_lift(n));
            let t1 = s.torus(n);
            let m = w2.mul_right(&w1.mul_left(&point_to_matrix(&u1)));
            let Ok(f) = gauss_decompose(&m) else { continue };
            // t1 w1 u1 w2 t2 lies in U^-U exactly when t2 = tau^{-1} t1^{-1}
            let t2 = f.t.inverse().mul(&t1.inverse());
            let n1 = t1.left_mul(w1.matrix());
            let n2 = t2.right_mul(w2.matrix());
            let c = connect(&u1, &n1, &n2).map_err(|e| e.to_string())?;
            let expected = matrix_to_point(&(&(&n1 * &point_to_matrix(&u1)) * &n2))
                .map_err(|e| e.to_string())?;
            ensure(c.u2 == expected, || {
                "connect returned the wrong target".into()
            })?;
            ensure(c.form.eval(&u1).as_ref() == Some(&c.u2), || {
                format!("normal form does not map u1 to u2 for {u1:?}")
            })?;
            count += 1;
        }
        done += count;
    }
    Ok(format!("{done} triples"))
}

fn point_with_product(s: &mut Sampler, product: &Q) -> CellPoint2 {
    let c = s.nonzero_scalar();
    CellPoint2::new(product * &c, c.inv())
}

fn generic_product(s: &mut Sampler) -> Q {
    loop {
        let a = s.scalar();
        if !a.is_zero() && !(&a + &Q::one()).is_zero() {
            return a;
        }
    }
}

fn random_stratum_point(s: &mut Sampler) -> CellPoint2 {
    let k = s.rng().gen_range(0..6);
    match k {
        0 => CellPoint2::new(Q::zero(), Q::zero()),
        1 => CellPoint2::new(Q::zero(), s.nonzero_scalar()),
        2 => CellPoint2::new(s.nonzero_scalar(), Q::zero()),
        3 => {
            let a = s.nonzero_scalar();
            CellPoint2::new(a.clone(), -a.inv())
        }
        _ => {
            let a = generic_product(s);
            point_with_product(s, &a)
        }
    }
}

fn c08_labels_vs_oracle() -> Outcome {
    let mut s = Sampler::new(108);
    let gens = torus_cosets::sl2class::closed_form_generators();
    let words = torus_cosets::paction::enumerate_words(&gens, 4);
    let mut pairs: Vec<(CellPoint2, CellPoint2, Option<bool>)> = Vec::new();
    for _ in 0..50 {
        let a = generic_product(&mut s);
        let (p, q) = (
            point_with_product(&mut s, &a),
            point_with_product(&mut s, &flat(&a)),
        );
        pairs.push((p, q, Some(true)));
    }
    while pairs.len() < 100 {
        let (a, b) = (generic_product(&mut s), generic_product(&mut s));
        if kflat_rep(&a) == kflat_rep(&b) {
            continue;
        }
        let (p, q) = (
            point_with_product(&mut s, &a),
            point_with_product(&mut s, &b),
        );
        pairs.push((p, q, Some(false)));
    }
    while pairs.len() < 150 {
        let p = random_stratum_point(&mut s);
        let w = &words[s.rng().gen_range(0..words.len())];
        let x: Point = vec![p.alpha.clone(), p.beta.clone()];
        if let Some(y) = torus_cosets::paction::apply_word(w, &gens, &x) {
            pairs.push((p, CellPoint2::new(y[0].clone(), y[1].clone()), Some(true)));
        }
    }
    while pairs.len() < 200 {
        pairs.push((
            random_stratum_point(&mut s),
            random_stratum_point(&mut s),
            None,
        ));
    }
    let mut positives = 0;
    for (p, q, expected) in &pairs {
        let same = canonical_label(p) == canonical_label(q);
        let oracle = label_oracle(p, q);
        ensure(same == oracle, || {
            format!("labels {same} vs oracle {oracle} for {p:?}, {q:?}")
        })?;
        if let Some(e) = expected {
            ensure(*e == oracle, || format!("expected {e} for {p:?}, {q:?}"))?;
        }
        positives += oracle as usize;
    }
    Ok(format!("200 pairs, {positives} in the same orbit"))
}

fn c09_coset_decomposition() -> Outcome {
    let mut s = Sampler::new(109);
    for _ in 0..100 {
        let a = s.k_flat();
        let g = g_alpha(&a);
        let want = OrbitLabel::Coset { alpha: a.clone() };
        ensure(classify_coset(&g).unwrap() == want, || {
            format!("g_{a} misclassified")
        })?;
        let (n1, n2) = (s.monomial(2), s.monomial(2));
        let h = &(&n1 * &g) * &n2;
        ensure(classify_coset(&h).unwrap() == want, || {
            format!("n g_{a} n' misclassified")
        })?;
        let m = s.monomial(2);
        ensure(classify_coset(&m).unwrap() == OrbitLabel::Origin, || {
            "N not Origin".into()
        })?;
    }
    Ok("100 parameters, 200 translates".into())
}

fn c10_tori_pairs() -> Outcome {
    let mut s = Sampler::new(110);
    let e = SLMatrix::identity(2);
    for _ in 0..100 {
        let a = s.scalar();
        let label = tori_pair_label(&g_alpha(&a), &e).unwrap();
        ensure(
            label
                == OrbitLabel::Coset {
                    alpha: kflat_rep(&a),
                },
            || format!("pair (g_{a}, e) labelled {label:?}"),
        )?;
    }
    for _ in 0..100 {
        let (g, h, m) = (s.sl(2), s.sl(2), s.sl(2));
        let before = tori_pair_label(&g, &h).unwrap();
        let after = tori_pair_label(&(&m * &g), &(&m * &h)).unwrap();
        ensure(before == after, || {
            "label not invariant under conjugation".into()
        })?;
    }
    Ok("100 parameters, 100 conjugations".into())
}

fn regular_scalar(s: &mut Sampler) -> Q {
    loop {
        let x = s.nonzero_scalar();
        if !(&x * &x).is_one() {
            return x;
        }
    }
}

fn conj(a: &SLMatrix, x: &SLMatrix) -> SLMatrix {
    &(a * x) * &a.inverse()
}

fn c11_semisimple_pairs() -> Outcome {
    let mut s = Sampler::new(111);
    for _ in 0..200 {
        let (sv, rv, alpha) = (regular_scalar(&mut s), regular_scalar(&mut s), s.scalar());
        let (t, tp) = (TorusElement::sl2(sv.clone()), TorusElement::sl2(rv.clone()));
        let g = g_alpha(&alpha);
        let a = s.sl(2);
        let x = conj(&a, &conj(&g, &t.to_matrix()));
        let y = conj(&a, &tp.to_matrix());
        let o = ss_pair_classify(&x, &y, &t, &tp).map_err(|e| e.to_string())?;
        ensure(
            o == SemisimpleOrbit::OAlpha {
                alpha: alpha.clone(),
            },
            || format!("alpha {alpha} recovered as {o:?}"),
        )?;
        let fiber = adherence(&o, &t, &tp).unwrap().fiber_value;
        ensure((&x * &y).trace() == fiber, || {
            "trace outside the fiber".into()
        })?;
    }
    let t = TorusElement::sl2(Q::from_int(2));
    let tp = TorusElement::sl2(Q::from_int(3));
    let (sv, si) = (Q::from_int(2), Q::from_frac(1, 2));
    let y = tp.to_matrix();
    let upper = |c: i64| {
        SLMatrix::from_rows(vec![
            vec![sv.clone(), Q::from_int(c)],
            vec![Q::zero(), si.clone()],
        ])
        .unwrap()
    };
    let lower = |c: i64| {
        SLMatrix::from_rows(vec![
            vec![si.clone(), Q::zero()],
            vec![Q::from_int(c), sv.clone()],
        ])
        .unwrap()
    };
    let reps = [
        (
            conj(&g_alpha(&Q::from_int(5)), &t.to_matrix()),
            SemisimpleOrbit::OAlpha {
                alpha: Q::from_int(5),
            },
        ),
        (upper(1), SemisimpleOrbit::OUPlus),
        (lower(1), SemisimpleOrbit::OVMinus),
        (t.to_matrix(), SemisimpleOrbit::OTPlus),
        (
            conj(
                weyl_lift(&Permutation::transposition(2, 0, 1)).matrix(),
                &t.to_matrix(),
            ),
            SemisimpleOrbit::OTMinus,
        ),
    ];
    for (x, want) in &reps {
        for _ in 0..10 {
            let a = s.sl(2);
            let got = ss_pair_classify(&conj(&a, x), &conj(&a, &y), &t, &tp).unwrap();
            ensure(&got == want, || {
                format!("representative of {want:?} gave {got:?}")
            })?;
        }
        let adh = adherence(want, &t, &tp).unwrap();
        ensure((x * &y).trace() == adh.fiber_value, || {
            format!("{want:?} off its fiber")
        })?;
    }
    let table = [
        (
            SemisimpleOrbit::OAlpha {
                alpha: Q::from_int(5),
            },
            true,
            3,
            vec![],
        ),
        (
            SemisimpleOrbit::OAlpha { alpha: Q::zero() },
            false,
            3,
            vec![SemisimpleOrbit::OTPlus],
        ),
        (
            SemisimpleOrbit::OUPlus,
            false,
            3,
            vec![SemisimpleOrbit::OTPlus],
        ),
        (
            SemisimpleOrbit::OAlpha { alpha: -Q::one() },
            false,
            3,
            vec![SemisimpleOrbit::OTMinus],
        ),
        (
            SemisimpleOrbit::OVMinus,
            false,
            3,
            vec![SemisimpleOrbit::OTMinus],
        ),
        (SemisimpleOrbit::OTPlus, true, 2, vec![]),
        (SemisimpleOrbit::OTMinus, true, 2, vec![]),
    ];
    for (o, closed, dim, boundary) in table {
        let a = adherence(&o, &t, &tp).unwrap();
        ensure(
            a.closed == closed && a.dimension == dim && a.boundary == boundary,
            || format!("adherence of {o:?} is {a:?}"),
        )?;
    }
    for c in -4..=4 {
        let (up, down) = if c == 0 {
            (SemisimpleOrbit::OTPlus, SemisimpleOrbit::OTMinus)
        } else {
            (SemisimpleOrbit::OUPlus, SemisimpleOrbit::OVMinus)
        };
        ensure(
            ss_pair_classify(&upper(c), &y, &t, &tp).unwrap() == up,
            || format!("upper family at c = {c}"),
        )?;
        ensure(
            ss_pair_classify(&lower(c), &y, &t, &tp).unwrap() == down,
            || format!("lower family at c = {c}"),
        )?;
    }
    Ok("200 random tuples, 5 representatives, adherence table".into())
}

fn c12_axioms() -> Outcome {
    let mut s = Sampler::new(112);
    let points: Vec<Point> = (0..50).map(|_| s.cell_point(2).coords()).collect();
    let report = check_axioms(&sl2_generators(), &points, 4);
    ensure(report.is_ok(), || {
        format!("violations: {:?}", report.violations)
    })?;
    let one = vec![Q::one(), Q::one()];
    let bad = check_axioms(&counterexample_generators(), &[one], 4);
    ensure(
        bad.violations.len() == 1 && bad.count(Axiom::Inverse) == 1,
        || format!("counterexample report: {:?}", bad.violations),
    )?;
    Ok(format!(
        "{} words on 50 points; counterexample has 1 inverse violation",
        report.words
    ))
}

fn c13_t_double_cosets() -> Outcome {
    let mut s = Sampler::new(113);
    let mut count = 0;
    for k in 0..5 {
        for _ in 0..=100 {
            let rep = match k {
                0 => TRep::GAlpha { alpha: s.scalar() },
                1 => TRep::WOne,
                2 => TRep::W,
                3 => TRep::UOne,
                _ => TRep::E,
            };
            let (t1, t2) = (s.torus(2), s.torus(2));
            let g = t2.right_mul(&t1.left_mul(&rep.matrix()));
            let got = t_double_coset_rep(&g).unwrap();
            ensure(got == rep, || format!("T {rep:?} T classified as {got:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} translates of the five representatives"))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("generator relations", 1, c01_generator_relations),
        (
            "closed forms agree with matrix evaluation",
            1,
            c02_closed_forms_vs_matrices,
        ),
        (
            "Gauss factorization and delta* contracts",
            2,
            c03_gauss_contracts,
        ),
        (
            "every n = 3 sector domain is nonempty",
            1,
            c04_sector_nonemptiness,
        ),
        ("inverse maps round trip", 2, c05_inverse_round_trip),
        ("normal forms compose like evaluation", 2, c06_normal_forms),
        ("connecting elements map u1 to u2", 2, c07_connect),
        (
            "SL2 labels agree with the direct oracle",
            5,
            c08_labels_vs_oracle,
        ),
        ("SL2 double-coset decomposition", 1, c09_coset_decomposition),
        ("pairs of tori", 1, c10_tori_pairs),
        ("pairs of semisimple elements", 2, c11_semisimple_pairs),
        ("partial-action axioms", 1, c12_axioms),
        ("T-double cosets", 1, c13_t_double_cosets),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(*limit);
        let line = format!(
            "{:2} {name} ({:.3} s, limit {limit} s)",
            k + 1,
            elapsed.as_secs_f64()
        );
        match (outcome, within) {
            (Ok(detail), true) => println!("PASS {line}: {detail}"),
            (Ok(detail), false) => {
                failed += 1;
                println!("FAIL {line}: over the time limit; {detail}");
            }
            (Err(why), _) => {
                failed += 1;
                println!("FAIL {line}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
