use chiralmap_core::constructions::*;
use chiralmap_core::group::{classify, factorial, group_order, is_transitive, GroupVerdict, Rotation, Word};
use chiralmap_core::perm::{Parity, Permutation};

use Greek::*;

fn num(j: u32) -> Label {
    Label::num(j)
}

fn gk(letter: Greek) -> Label {
    Label::greek(letter)
}

fn word(g: &GeneratorSet, rotation: Rotation, e: i64, f: u32) -> Permutation {
    Word::new(rotation, e, f).evaluate(&g.s, &g.t)
}

fn st(g: &GeneratorSet) -> Permutation {
    g.s.then(&g.t)
}

fn sorted_type(p: &Permutation) -> Vec<usize> {
    let mut c = p.cycle_type();
    c.sort_unstable();
    c
}

/// One nontrivial cycle of the given length; returns the number of fixed points.
fn single_cycle(p: &Permutation, len: usize) -> usize {
    let d = p.cycle_decomposition();
    assert_eq!(d.cycles.len(), 1, "cycle type {:?}", p.cycle_type());
    assert_eq!(d.cycles[0].len(), len);
    d.fixed_points.len()
}

fn verdict(g: &GeneratorSet) -> GroupVerdict {
    classify(&[g.s.clone(), g.t.clone()], &g.word_pool(), 64)
        .unwrap()
        .verdict
}

fn assert_type(g: &GeneratorSet, m: u32, n: u32) {
    assert_eq!(g.map_type, MapType::new(m, n));
    assert_eq!(g.s.order(), n as u64);
    assert_eq!(g.t.order(), 2);
    assert_eq!(st(g).order(), m as u64);
}

#[test]
fn c3_1_examples() {
    let g = build_c3_1(1, -1).unwrap();
    assert_eq!(g.degree(), 8);
    assert_eq!(g.s.cycle_type(), vec![7]);
    assert_eq!(g.t.cycle_type(), vec![2, 2, 2, 2]);

    let g = build_c3_1(1, 1).unwrap();
    assert_eq!(st(&g).order(), 4);

    let g = build_c3_1(2, -1).unwrap();
    assert_eq!(single_cycle(&word(&g, Rotation::S, 3, 2), 7), 5);
}

#[test]
fn c3_3_examples() {
    let g = build_c3_3(1, -1).unwrap();
    let l = &g.labels;
    let p = st(&g);
    assert_eq!(p.image(l.at(num(1).prime())), l.at(gk(Delta)));
    assert_eq!(p.image(l.at(gk(Delta))), l.at(gk(Epsilon)));
    assert_eq!(p.image(l.at(gk(Epsilon))), l.at(num(1).prime()));
    let mut fixed = g.s.fixed_points();
    fixed.sort_unstable();
    let mut expected = vec![l.at(gk(Alpha).prime()), l.at(gk(Beta).prime())];
    expected.sort_unstable();
    assert_eq!(fixed, expected);

    let g = build_c3_3(1, 1).unwrap();
    assert_eq!(single_cycle(&word(&g, Rotation::S, 2, 2), 7), 5);
}

#[test]
fn c3_5_examples() {
    let g = build_c3_5(1, -1).unwrap();
    single_cycle(&word(&g, Rotation::S, 2, 4), 5);

    // The cited word is not a witness here (an 11-cycle fixing one point);
    // the classification is confirmed by the exact order.
    let g = build_c3_5(1, 1).unwrap();
    assert_type(&g, 8, 11);
    assert_eq!(single_cycle(&word(&g, Rotation::S, 3, 2), 11), 1);
    let cls = classify(&[g.s.clone(), g.t.clone()], &g.word_pool(), 64).unwrap();
    assert_eq!(cls.verdict, GroupVerdict::Alternating(12));
    assert_eq!(
        group_order(&[g.s.clone(), g.t.clone()], 64).unwrap(),
        factorial(12) / 2u32
    );

    let g = build_c3_5(2, 1).unwrap();
    assert_eq!(st(&g).order(), 8);
}

#[test]
fn c3_7_examples() {
    let g = build_c3_7(10, 0, -1).unwrap();
    assert_type(&g, 10, 9);
    // Nine points moved on thirteen: four fixed, not three.
    assert_eq!(single_cycle(&g.s, 9), 4);
    let mp = g.labels.at(num(10).prime());
    assert!(g.r.fixes(mp));
    let w = g.t.then(&g.r.pow(2)).then(&g.t).then(&g.r.pow(-3)).then(&g.t);
    assert!(w.fixes(mp));

    assert_type(&build_c3_7(12, 1, 1).unwrap(), 12, 17);
}

#[test]
fn c3_9_examples() {
    let g = build_c3_9(14).unwrap();
    assert_eq!(st(&g).order(), 14);
    let mut fixed: Vec<String> = word(&g, Rotation::S, 2, 1)
        .fixed_points()
        .into_iter()
        .map(|p| g.labels.label(p).to_string())
        .collect();
    fixed.sort();
    assert_eq!(fixed, vec!["12", "2", "7"]);

    let g = build_c3_9(16).unwrap();
    assert_eq!(g.degree(), 22);
    assert_eq!((g.params.unwrap().nu, g.params.unwrap().a), (4, 2));
}

#[test]
fn c3_11_examples() {
    let g = build_c3_11(7, 1).unwrap();
    assert_type(&g, 8, 7);
    assert_eq!(single_cycle(&word(&g, Rotation::S, 2, 1), g.degree() - 1), 1);

    let g = build_c3_11(9, 1).unwrap();
    assert!(g.t.fixes(g.labels.at(num(9))));

    assert_type(&build_c3_11(11, 3).unwrap(), 14, 11);
}

#[test]
fn c3_13_examples() {
    let g = build_c3_13(11, 20).unwrap();
    assert_eq!((g.params.unwrap().nu, g.params.unwrap().a), (2, 4));
    assert_eq!(st(&g).order(), 20);

    let g = build_c3_13(11, 32).unwrap();
    assert_eq!((g.params.unwrap().nu, g.params.unwrap().a), (3, 5));
    assert_eq!(g.degree(), 38);
    assert_type(&g, 32, 11);

    // (n, nu, a) = (13, 2, 1) would need m = 21, which is odd.
    assert!(matches!(build_c3_13(13, 21), Err(ConstructionError::BadParams(_))));
    assert_eq!(build_c3_13(13, 20).unwrap().t.parity(), Parity::Even);

    // (11, nu=3, a=0) would need m = 27; a = 1 gives m = 28.
    let g = build_c3_13(11, 28).unwrap();
    assert_eq!(sorted_type(&st(&g)), vec![2, 2, 2, 28]);
}

#[test]
fn c3_15_examples() {
    let g = build_c3_15(7, 16).unwrap();
    assert_eq!((g.params.unwrap().nu, g.params.unwrap().a), (3, 1));
    assert_eq!(g.s.order(), 7);

    let g = build_c3_15(9, 22).unwrap();
    assert_eq!(st(&g).order(), 22);

    assert!(matches!(build_c3_15(7, 15), Err(ConstructionError::BadParams(_))));
    let g = build_c3_15(7, 22).unwrap();
    assert_eq!((g.params.unwrap().nu, g.params.unwrap().a), (4, 0));
    assert_eq!(g.degree(), 28);
}

#[test]
fn c4_1_examples() {
    for a in 2..=5 {
        let g = build_c4_1(a, -1).unwrap();
        single_cycle(&word(&g, Rotation::S, 4, 6), 7);
    }
    // At a = 1 the cited power is not a 7-cycle; (s^3 t)^4 is.
    let g = build_c4_1(1, -1).unwrap();
    assert_eq!(sorted_type(&word(&g, Rotation::S, 4, 6)), vec![4, 4]);
    single_cycle(&word(&g, Rotation::S, 3, 4), 7);

    let g = build_c4_1_a0(-1).unwrap();
    assert_type(&g, 4, 6);
    assert_eq!(verdict(&g), GroupVerdict::Alternating(9));
    let g = build_c4_1_a0(1).unwrap();
    assert_type(&g, 4, 8);
    assert_eq!(verdict(&g), GroupVerdict::Alternating(10));
}

#[test]
fn c4_3_examples() {
    let g = build_c4_3(1, -1).unwrap();
    single_cycle(&word(&g, Rotation::S, 4, 2), 7);
    let g = build_c4_3(1, 1).unwrap();
    single_cycle(&word(&g, Rotation::S, 2, 6), 5);
    let g = build_c4_3_a0().unwrap();
    assert_type(&g, 6, 8);
    assert_eq!(verdict(&g), GroupVerdict::Alternating(10));
}

#[test]
fn c4_5_examples() {
    for a in 1..=4 {
        let g = build_c4_5(a, -1).unwrap();
        single_cycle(&word(&g, Rotation::S, 2, 4), 3);
    }
    let g = build_c4_5(0, 1).unwrap();
    assert_type(&g, 8, 8);
    assert_eq!(g.degree(), 11);
    assert_eq!(g.params.unwrap().construction_id, ConstructionId::C4_5A0);
    assert_eq!(verdict(&g), GroupVerdict::Alternating(11));
    let g = build_c4_5(1, 1).unwrap();
    single_cycle(&word(&g, Rotation::S, 3, 2), 11);
    assert!(build_c4_5(0, -1).is_err());
}

#[test]
fn c4_7_examples() {
    let g = build_c4_7(12, 12).unwrap();
    let w = word(&g, Rotation::R, 4, 1);
    assert_eq!(single_cycle(&w, g.degree() - 3), 3);
    let mut fixed = w.fixed_points();
    fixed.sort_unstable();
    let mut greek = vec![g.labels.at(gk(Alpha)), g.labels.at(gk(Beta)), g.labels.at(gk(Gamma))];
    greek.sort_unstable();
    assert_eq!(fixed, greek);

    let g = build_c4_7(10, 10).unwrap();
    let d = word(&g, Rotation::R, 2, 5).cycle_decomposition();
    assert_eq!(d.cycles.len(), 1);

    let g = build_c4_7(10, 14).unwrap();
    assert_type(&g, 10, 14);
    assert_eq!((g.params.unwrap().a, g.params.unwrap().i), (1, 0));
}

#[test]
fn table1_rows() {
    let g = table1_lookup(4, 5).unwrap();
    assert_eq!(g.s.to_cycle_string(), "(1,2,3,4,5)");
    assert_eq!(g.t.to_cycle_string(), "(1,3)(4,6)");
    assert_eq!(g.degree(), 6);

    let g = table1_lookup(6, 6).unwrap();
    assert_eq!(g.degree(), 15);

    let g = table1_lookup(16, 9).unwrap();
    assert_eq!(g.s.to_cycle_string(), "(1,2,3,4,5,6,7,8,9)(10,11,12)(13,17,18)");
    assert_eq!(g.degree(), 18);

    assert_eq!(
        table1_lookup(4, 9).unwrap_err(),
        ConstructionError::NotInTable { m: 4, n: 9 }
    );

    for (ty, k) in TABLE1_TYPES {
        let g = table1_lookup(ty.m, ty.n).unwrap();
        assert_type(&g, ty.m, ty.n);
        assert_eq!(g.degree(), k);
    }
}

#[test]
fn dualize_examples() {
    let g = table1_lookup(4, 5).unwrap();
    let d = g.dualize();
    assert_type(&d, 5, 4);
    assert_eq!(d.dualize().map_type, g.map_type);
    assert_eq!(d.s.order(), 4);
    assert_eq!(st(&d).order(), 5);
    assert_eq!(d.t, g.t);
    assert!(d.is_dualized());
}

#[test]
fn build_examples() {
    assert_type(&build(&dispatch(MapType::new(4, 9))).unwrap(), 4, 9);
    let g = build(&dispatch(MapType::new(9, 4))).unwrap();
    assert_type(&g, 9, 4);
    assert!(g.is_dualized());
    let plan = dispatch(MapType::new(6, 6));
    assert_eq!(plan.params().unwrap().construction_id, ConstructionId::Table1);
    assert_type(&build(&plan).unwrap(), 6, 6);
    assert!(matches!(
        build(&dispatch(MapType::new(7, 9))),
        Err(ConstructionError::PlanUnsupported(_))
    ));
    assert!(matches!(
        build(&dispatch(MapType::new(4, 4))),
        Err(ConstructionError::NotHyperbolic { m: 4, n: 4 })
    ));
}

#[test]
fn dispatch_examples() {
    let p = dispatch(MapType::new(4, 9)).params().unwrap();
    assert_eq!(
        (p.construction_id, p.a, p.i, p.dualized),
        (ConstructionId::C3_1, 1, 1, false)
    );
    let p = dispatch(MapType::new(5, 4)).params().unwrap();
    assert_eq!((p.construction_id, p.dualized), (ConstructionId::Table1, true));
    assert_eq!(
        dispatch(MapType::new(7, 9)).outcome,
        PlanOutcome::UnsupportedExternal {
            theorem: ExternalTheorem::Chns
        }
    );
}

#[test]
fn degree_formulas() {
    for a in 1..=4 {
        for i in [-1, 1] {
            let g = build_c3_1(a, i).unwrap();
            assert_eq!(g.degree() as u32, g.map_type.n + 1);
            let g = build_c3_3(a, i).unwrap();
            let extra = if i == -1 { 2 } else { 1 };
            assert_eq!(g.degree() as u32, g.map_type.n + extra);
        }
    }
    for m in (14..=40).step_by(2) {
        let g = build_c3_9(m).unwrap();
        let p = g.params.unwrap();
        assert_eq!(g.degree() as u32, 5 * p.nu + p.a);
    }
    for n in [11, 13, 15] {
        for m in ((2 * n - 6)..=60).filter(|m| m % 2 == 0) {
            let g = build_c3_13(n, m).unwrap();
            let p = g.params.unwrap();
            assert_eq!(g.degree() as u32, p.nu * n + p.a);
        }
    }
}

#[test]
fn bad_params_are_rejected() {
    assert!(build_c3_1(0, 1).is_err());
    assert!(build_c3_1(1, 0).is_err());
    assert!(build_c3_7(8, 1, 1).is_err());
    assert!(build_c3_9(13).is_err());
    assert!(build_c3_9(12).is_err());
    assert!(build_c3_11(7, 2).is_err());
    assert!(build_c3_11(9, 4).is_err());
    assert!(build_c3_13(9, 20).is_err());
    assert!(build_c3_15(11, 30).is_err());
    assert!(build_c4_1(0, 1).is_err());
    assert!(build_c4_3(0, -1).is_err());
    assert!(build_c4_7(8, 8).is_err());
    assert!(build_c4_7(12, 10).is_err());
}

/// Every dispatched type with `m, n ≤ 40` and degree ≤ 64.
fn supported_instances() -> Vec<GeneratorSet> {
    let mut out = Vec::new();
    for m in 3..=40 {
        for n in 3..=40 {
            let plan = dispatch(MapType::new(m, n));
            if let PlanOutcome::Supported { .. } = plan.outcome {
                let g = build(&plan).unwrap_or_else(|e| panic!("{{{m},{n}}}: {e}"));
                if g.degree() <= 64 {
                    out.push(g);
                }
            }
        }
    }
    out
}

#[test]
fn every_supported_plan_has_exact_type() {
    let instances = supported_instances();
    assert!(instances.len() > 700);
    for g in &instances {
        let MapType { m, n } = g.map_type;
        assert_type(g, m, n);
        assert_eq!(g.s.parity(), Parity::Even, "{}", g.map_type);
        assert_eq!(g.t.parity(), Parity::Even, "{}", g.map_type);
        assert!(is_transitive(&[g.s.clone(), g.t.clone()]).unwrap(), "{}", g.map_type);
        assert!(g.r.then(&g.s).then(&g.t).is_identity());
    }
}

#[test]
fn primes_are_images_under_t() {
    for g in supported_instances() {
        for (x, xp) in g.labels.primed_pairs() {
            assert_eq!(g.t.image(x), xp, "{} {}", g.map_type, g.labels.label(x));
        }
    }
}

#[test]
fn dispatch_is_total_on_hyperbolic_types() {
    for m in 3..=60 {
        for n in 3..=60 {
            let ty = MapType::new(m, n);
            let outcome = dispatch(ty).outcome;
            assert_eq!(outcome == PlanOutcome::NotHyperbolic, !ty.is_hyperbolic(), "{ty}");
        }
    }
}
