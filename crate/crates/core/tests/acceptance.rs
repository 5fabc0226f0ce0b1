//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Expected values come from the published tables and theorems (with the two
//! documented misprints corrected toward the Koszul derivation), frozen here
//! as closed-form functions of the parameters.

use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ricci3::exact::{mat_exp, q, qr, Mat, MatExp, Q};
use ricci3::families::{build, Family, FamilySpec};
use ricci3::geometry::{curvature, levi_civita, lie_derivative_metric, ricci};
use ricci3::liealg::eps;
use ricci3::sampling::{random_q, random_q_nonzero, random_spec, random_spec_stratified};
use ricci3::soliton::{
    check_automorphism, check_automorphism_f64, flow_factor, solve_algebraic,
    solve_left_invariant, InnerFlag, SolitonStatus,
};
use ricci3::verify::{
    self, affine_sets_equal, check_lemma_tables, check_predicate_agreement,
    expected_algebraic_soliton, ExpectedSoliton,
};
use std::time::Instant;

fn positive_nonzero(rng: &mut StdRng) -> Q {
    let x = random_q_nonzero(rng);
    if x.is_negative() {
        -x
    } else {
        x
    }
}

fn expect_unique(spec: &FamilySpec) -> (Q, Mat) {
    match expected_algebraic_soliton(spec) {
        ExpectedSoliton::Unique { c, d } => (c, d),
        other => panic!("branch point {spec:?} should have a unique solution, got {other:?}"),
    }
}

fn assert_solver_matches(spec: &FamilySpec) {
    let g = build(spec).unwrap();
    let sol = solve_algebraic(&g);
    let (c, d) = expect_unique(spec);
    assert_eq!(sol.status, SolitonStatus::Unique, "{spec:?}");
    assert_eq!(sol.c.as_ref(), Some(&c), "{spec:?}");
    assert_eq!(sol.d.as_ref(), Some(&d), "{spec:?}");
}

#[test]
fn criterion_1_lemma_reproduction() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(101);
    let mut deviation_note = String::new();
    for family in Family::ALL {
        let outcome = check_lemma_tables(family, 25, &mut rng);
        assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
        if family == Family::G3 {
            assert!(
                outcome.detail.contains("known misprints"),
                "g3 deviations should be observed and reported: {}",
                outcome.detail
            );
            deviation_note = outcome.detail.clone();
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "lemma reproduction took {elapsed:?}, budget 5 s"
    );
    println!(
        "criterion 1 (lemma tables, 25 draws/family, {elapsed:?}): PASS; g3: {deviation_note}"
    );
}

#[test]
fn criterion_2_theorem_reproduction_positive() {
    let mut rng = StdRng::seed_from_u64(102);

    // G1 with beta = 0: c = 0, D as in the theorem
    for _ in 0..5 {
        let spec = FamilySpec::g1(random_q_nonzero(&mut rng), q(0));
        let (c, d) = expect_unique(&spec);
        assert_eq!(c, q(0));
        assert_eq!(*d.at(1, 1), q(-2) * &spec.alpha * &spec.alpha);
        assert_solver_matches(&spec);
    }

    // G2 with alpha = beta = 0: c = -2 gamma^2, D = diag(0, 2g^2, 2g^2)
    for _ in 0..5 {
        let spec = FamilySpec::g2(q(0), q(0), random_q_nonzero(&mut rng));
        let (c, _) = expect_unique(&spec);
        assert_eq!(c, q(-2) * &spec.gamma * &spec.gamma);
        assert_solver_matches(&spec);
    }

    // the eight G3 branches, Einstein c values included:
    // -a^2/2, 3a^2/2, 3g^2/2, 2a^2, 0
    for _ in 0..5 {
        let a = positive_nonzero(&mut rng);
        let cases: Vec<(FamilySpec, Q)> = vec![
            (
                FamilySpec::g3(a.clone(), q(0), q(0)),
                qr(3, 2) * &a * &a,
            ),
            (
                FamilySpec::g3(q(0), q(0), -&a),
                qr(3, 2) * &a * &a,
            ),
            (
                FamilySpec::g3(a.clone(), a.clone(), a.clone()),
                qr(-1, 2) * &a * &a,
            ),
            (FamilySpec::g3(a.clone(), a.clone(), q(0)), q(0)),
            (
                FamilySpec::g3(a.clone(), -&a, q(0)),
                q(2) * &a * &a,
            ),
            (
                FamilySpec::g3(a.clone(), q(0), -&a),
                q(2) * &a * &a,
            ),
            (FamilySpec::g3(a.clone(), q(0), a.clone()), q(0)),
        ];
        for (spec, expected_c) in cases {
            let (c, _) = expect_unique(&spec);
            assert_eq!(c, expected_c, "{spec:?}");
            assert_solver_matches(&spec);
        }
    }
    // eighth branch: the abelian point, a one-parameter family (c, -c Id)
    let sol = solve_algebraic(&build(&FamilySpec::g3(q(0), q(0), q(0))).unwrap());
    assert_eq!(sol.status, SolitonStatus::Family);
    let p: Vec<Q> = std::iter::once(sol.c.clone().unwrap())
        .chain(sol.d.as_ref().unwrap().entries().iter().cloned())
        .collect();
    let k: Vec<Vec<Q>> = sol
        .freedom
        .iter()
        .map(|(dc, dd)| {
            std::iter::once(dc.clone())
                .chain(dd.entries().iter().cloned())
                .collect()
        })
        .collect();
    let expect_p: Vec<Q> = vec![q(0); 10];
    let expect_k: Vec<Vec<Q>> = vec![std::iter::once(q(-1))
        .chain(Mat::identity(3).entries().iter().cloned())
        .collect()];
    assert!(affine_sets_equal(&p, &k, &expect_p, &expect_k));

    // G5, both bullets: c = a^2 + d^2 + (b+g)^2/2 and c = a^2 + d^2
    for _ in 0..5 {
        let (a, b) = (random_q_nonzero(&mut rng), random_q_nonzero(&mut rng));
        let spec = FamilySpec::g5(a.clone(), b.clone(), -&b, a.clone());
        assert!(spec.validate().is_ok());
        let (c, _) = expect_unique(&spec);
        assert_eq!(
            c,
            &a * &a + &a * &a + qr(1, 2) * (&b - &b) * (&b - &b),
            "bullet c formula at gamma = -beta"
        );
        assert_solver_matches(&spec);

        let spec = loop {
            let s = FamilySpec::g5(random_q(&mut rng), q(0), q(0), random_q(&mut rng));
            if s.validate().is_ok() {
                break s;
            }
        };
        let (c, _) = expect_unique(&spec);
        assert_eq!(c, &spec.alpha * &spec.alpha + &spec.delta * &spec.delta);
        assert_solver_matches(&spec);
    }

    // G6, both bullets: c = -a^2 - d^2 + (b-g)^2/2 and c = -(a^2 + d^2)
    for _ in 0..5 {
        let spec = loop {
            let s = if rng.random_bool(0.5) { q(1) } else { q(-1) };
            let (a, d) = (random_q(&mut rng), random_q(&mut rng));
            let cand = FamilySpec::g6(a.clone(), &s * &a, &s * &d, d);
            if cand.validate().is_ok() && !(cand.beta.is_zero() && cand.gamma.is_zero()) {
                break cand;
            }
        };
        let (c, _) = expect_unique(&spec);
        let diff = &spec.beta - &spec.gamma;
        assert_eq!(
            c,
            -(&spec.alpha * &spec.alpha) - &spec.delta * &spec.delta
                + qr(1, 2) * &diff * &diff
        );
        assert_solver_matches(&spec);

        let spec = loop {
            let s = FamilySpec::g6(random_q(&mut rng), q(0), q(0), random_q(&mut rng));
            if s.validate().is_ok() {
                break s;
            }
        };
        let (c, _) = expect_unique(&spec);
        assert_eq!(
            c,
            -(&spec.alpha * &spec.alpha + &spec.delta * &spec.delta)
        );
        assert_solver_matches(&spec);
    }

    // G7 with gamma = 0: c = 0 and D = alpha (delta - alpha) E
    for _ in 0..5 {
        let spec = loop {
            let s = FamilySpec::g7(
                random_q(&mut rng),
                random_q(&mut rng),
                q(0),
                random_q(&mut rng),
            );
            if s.validate().is_ok() {
                break s;
            }
        };
        let (c, d) = expect_unique(&spec);
        assert_eq!(c, q(0));
        let lam = &spec.alpha * (&spec.delta - &spec.alpha);
        assert_eq!(
            d,
            Mat::from_rows(vec![
                vec![q(0), q(0), q(0)],
                vec![q(0), lam.clone(), -&lam],
                vec![q(0), lam.clone(), -&lam],
            ])
        );
        assert_solver_matches(&spec);
    }

    println!("criterion 2 (positive theorem reproduction, 5 points/branch): PASS");
}

#[test]
fn criterion_3_theorem_reproduction_negative() {
    let mut rng = StdRng::seed_from_u64(103);
    let mut checked = 0usize;
    let mut expect_none = |spec: FamilySpec| {
        let g = build(&spec).unwrap();
        assert_eq!(
            solve_algebraic(&g).status,
            SolitonStatus::None,
            "{spec:?} should have no algebraic soliton"
        );
        checked += 1;
    };
    for _ in 0..50 {
        // G1 with beta != 0
        expect_none(FamilySpec::g1(
            random_q_nonzero(&mut rng),
            random_q_nonzero(&mut rng),
        ));
        // G2 with alpha != 0
        expect_none(FamilySpec::g2(
            random_q_nonzero(&mut rng),
            random_q(&mut rng),
            random_q_nonzero(&mut rng),
        ));
        // G4 with (alpha, beta) != (0, eta)
        let eta = if rng.random_bool(0.5) { q(1) } else { q(-1) };
        let (alpha, beta) = loop {
            let (a, b) = (random_q(&mut rng), random_q(&mut rng));
            if !(a.is_zero() && b == eta) {
                break (a, b);
            }
        };
        expect_none(FamilySpec::g4(alpha, beta, eta));
        // G7 with gamma != 0 (the side condition then forces alpha = 0)
        expect_none(FamilySpec::g7(
            q(0),
            random_q(&mut rng),
            random_q_nonzero(&mut rng),
            random_q_nonzero(&mut rng),
        ));
    }
    println!("criterion 3 (negative theorem reproduction, {checked} draws): PASS");
}

#[test]
fn criterion_4_predicate_solver_agreement() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(104);
    let outcome = check_predicate_agreement(1000, &mut rng);
    assert!(outcome.passed, "{}", outcome.detail);
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "agreement sweep took {elapsed:?}, budget 60 s"
    );
    println!("criterion 4 (predicate vs solver, 1000 points/family, {elapsed:?}): PASS");
}

#[test]
fn criterion_5_left_invariant_solitons() {
    let mut rng = StdRng::seed_from_u64(105);
    for _ in 0..5 {
        // G1 with beta != 0: unique Y = beta e1 - alpha (e2 + e3), c = -beta^2/2
        let (al, be) = (random_q_nonzero(&mut rng), random_q_nonzero(&mut rng));
        let g = build(&FamilySpec::g1(al.clone(), be.clone())).unwrap();
        let sol = solve_left_invariant(&g);
        assert_eq!(sol.status, SolitonStatus::Unique);
        assert_eq!(sol.freedom.len(), 0, "solution-set dimension 0");
        assert_eq!(sol.c, Some(qr(-1, 2) * &be * &be));
        assert_eq!(sol.x, Some([be.clone(), -&al, -&al]));

        // G4 with alpha != 0 (the remark's family lives on beta = alpha + eta):
        // c = -alpha^2/2, Y = -(eta/2) alpha e1 + s (e2 - eta e3)
        let eta = if rng.random_bool(0.5) { q(1) } else { q(-1) };
        let al = random_q_nonzero(&mut rng);
        let g = build(&FamilySpec::g4(al.clone(), &al + &eta, eta.clone())).unwrap();
        let sol = solve_left_invariant(&g);
        assert_eq!(sol.status, SolitonStatus::Family);
        assert_eq!(sol.freedom.len(), 1, "solution-set dimension 1");
        let mut p = vec![sol.c.clone().unwrap()];
        p.extend(sol.x.clone().unwrap());
        let k: Vec<Vec<Q>> = sol
            .freedom
            .iter()
            .map(|(dc, dx)| {
                let mut v = vec![dc.clone()];
                v.extend(dx.iter().cloned());
                v
            })
            .collect();
        let expect_p = vec![
            qr(-1, 2) * &al * &al,
            qr(-1, 2) * &eta * &al,
            q(0),
            q(0),
        ];
        let expect_k = vec![vec![q(0), q(0), q(1), -&eta]];
        assert!(affine_sets_equal(&p, &k, &expect_p, &expect_k));

        // G4 with alpha = 0, beta != eta: unique Y = (1 - eta beta) e1, c = 0
        let be = loop {
            let b = random_q(&mut rng);
            if b != eta {
                break b;
            }
        };
        let g = build(&FamilySpec::g4(q(0), be.clone(), eta.clone())).unwrap();
        let sol = solve_left_invariant(&g);
        assert_eq!(sol.status, SolitonStatus::Unique);
        assert_eq!(sol.freedom.len(), 0);
        assert_eq!(sol.c, Some(q(0)));
        assert_eq!(sol.x, Some([q(1) - &eta * &be, q(0), q(0)]));
    }
    println!("criterion 5 (left-invariant solitons on g1 and g4): PASS");
}

#[test]
fn criterion_6_inner_outer_flags() {
    let mut rng = StdRng::seed_from_u64(106);
    let inner_of = |spec: &FamilySpec| {
        let sol = solve_algebraic(&build(spec).unwrap());
        assert_ne!(sol.status, SolitonStatus::None, "{spec:?}");
        sol.inner.unwrap()
    };
    for _ in 0..5 {
        // G1(beta = 0): inner with witness 2 alpha (e2 + e3)
        let al = random_q_nonzero(&mut rng);
        assert_eq!(
            inner_of(&FamilySpec::g1(al.clone(), q(0))),
            InnerFlag::Inner([q(0), q(2) * &al, q(2) * &al])
        );
        // G2 soliton derivation: outer
        assert_eq!(
            inner_of(&FamilySpec::g2(q(0), q(0), random_q_nonzero(&mut rng))),
            InnerFlag::Outer
        );
        // G3 nontrivial branches: outer
        let a = random_q_nonzero(&mut rng);
        assert_eq!(inner_of(&FamilySpec::g3(a.clone(), q(0), q(0))), InnerFlag::Outer);
        assert_eq!(inner_of(&FamilySpec::g3(a.clone(), -&a, q(0))), InnerFlag::Outer);
        assert_eq!(inner_of(&FamilySpec::g3(q(0), q(0), a.clone())), InnerFlag::Outer);
        // G5/G6 nontrivial ((beta,gamma) = (0,0), delta != alpha): outer
        let (x, y) = loop {
            let (x, y) = (random_q_nonzero(&mut rng), random_q_nonzero(&mut rng));
            if x != y && !(&x + &y).is_zero() {
                break (x, y);
            }
        };
        assert_eq!(
            inner_of(&FamilySpec::g5(x.clone(), q(0), q(0), y.clone())),
            InnerFlag::Outer
        );
        assert_eq!(
            inner_of(&FamilySpec::g6(x.clone(), q(0), q(0), y.clone())),
            InnerFlag::Outer
        );
        // G7(gamma = 0): inner iff delta != 0, witness (alpha(alpha-delta)/delta)(e2+e3)
        let (a, d) = loop {
            let (a, d) = (random_q_nonzero(&mut rng), random_q_nonzero(&mut rng));
            if !(&a + &d).is_zero() {
                break (a, d);
            }
        };
        let w = &a * (&a - &d) / &d;
        assert_eq!(
            inner_of(&FamilySpec::g7(a.clone(), random_q(&mut rng), q(0), d.clone())),
            InnerFlag::Inner([q(0), w.clone(), w])
        );
        assert_eq!(
            inner_of(&FamilySpec::g7(
                random_q_nonzero(&mut rng),
                random_q(&mut rng),
                q(0),
                q(0)
            )),
            InnerFlag::Outer
        );
    }
    println!("criterion 6 (inner/outer flags and witnesses): PASS");
}

#[test]
fn criterion_7_property_suite() {
    let mut rng = StdRng::seed_from_u64(107);

    // exact structural identities on 25 draws per family
    for family in Family::ALL {
        for _ in 0..25 {
            let spec = random_spec(family, &mut rng);
            let g = build(&spec).unwrap();
            let conn = levi_civita(&g);
            let curv = curvature(&g, &conn);
            let ric = ricci(&g, &curv);
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        assert_eq!(
                            conn.coefficient(k, i, j) - conn.coefficient(k, j, i),
                            g.structure_constant(k, i, j),
                            "torsion {spec:?}"
                        );
                        assert!(
                            (eps(k) * conn.coefficient(k, i, j)
                                + eps(j) * conn.coefficient(j, i, k))
                            .is_zero(),
                            "metric compatibility {spec:?}"
                        );
                        for l in 0..3 {
                            assert_eq!(
                                curv.at(i, j, k, l),
                                &-curv.at(j, i, k, l).clone(),
                                "antisymmetry ij {spec:?}"
                            );
                            assert_eq!(
                                curv.at(i, j, k, l),
                                &-curv.at(i, j, l, k).clone(),
                                "antisymmetry kl {spec:?}"
                            );
                            assert_eq!(
                                curv.at(i, j, k, l),
                                curv.at(k, l, i, j),
                                "pair symmetry {spec:?}"
                            );
                            let bianchi = curv.at(i, j, k, l).clone()
                                + curv.at(j, k, i, l)
                                + curv.at(k, i, j, l);
                            assert!(bianchi.is_zero(), "Bianchi {spec:?}");
                        }
                    }
                    assert_eq!(ric.rho.at(i, j), ric.rho.at(j, i), "rho symmetry {spec:?}");
                    assert_eq!(
                        eps(i) * ric.operator.at(i, j),
                        eps(j) * ric.operator.at(j, i),
                        "self-adjointness {spec:?}"
                    );
                }
            }
        }
    }

    // scaling equivariance: C -> lambda C multiplies R, rho, Ric by lambda^2
    // and maps solution sets (c, D) -> (lambda^2 c, lambda^2 D)
    for _ in 0..20 {
        let lambda = random_q_nonzero(&mut rng);
        let l2 = &lambda * &lambda;
        let family = Family::ALL[rng.random_range(0..7)];
        let spec = random_spec_stratified(family, &mut rng);
        let g = build(&spec).unwrap();
        let gs = g.scaled(&lambda);
        let (curv, curv_s) = (
            curvature(&g, &levi_civita(&g)),
            curvature(&gs, &levi_civita(&gs)),
        );
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        assert_eq!(curv_s.at(i, j, k, l), &(&l2 * curv.at(i, j, k, l)));
                    }
                }
            }
        }
        let (ric, ric_s) = (ricci(&g, &curv), ricci(&gs, &curv_s));
        assert_eq!(ric_s.rho, ric.rho.scale(&l2));
        assert_eq!(ric_s.operator, ric.operator.scale(&l2));
        assert_eq!(ric_s.scalar, &l2 * &ric.scalar);
        let (sol, sol_s) = (solve_algebraic(&g), solve_algebraic(&gs));
        assert_eq!(sol.status, sol_s.status);
        if sol.status != SolitonStatus::None {
            // set-level equality under the lambda^2 map
            let map = |c: &Q, d: &Mat| -> Vec<Q> {
                std::iter::once(&l2 * c)
                    .chain(d.scale(&l2).entries().iter().cloned())
                    .collect()
            };
            let plain = |c: &Q, d: &Mat| -> Vec<Q> {
                std::iter::once(c.clone())
                    .chain(d.entries().iter().cloned())
                    .collect()
            };
            let p1 = map(sol.c.as_ref().unwrap(), sol.d.as_ref().unwrap());
            let k1: Vec<Vec<Q>> = sol.freedom.iter().map(|(dc, dd)| map(dc, dd)).collect();
            let p2 = plain(sol_s.c.as_ref().unwrap(), sol_s.d.as_ref().unwrap());
            let k2: Vec<Vec<Q>> = sol_s.freedom.iter().map(|(dc, dd)| plain(dc, dd)).collect();
            assert!(affine_sets_equal(&p1, &k1, &p2, &k2), "{spec:?} lambda {lambda}");
        }
    }

    // every found soliton: residuals, trace identity, exp(tD) automorphism
    let mut solitons = 0usize;
    for family in Family::ALL {
        for _ in 0..30 {
            let spec = random_spec_stratified(family, &mut rng);
            let g = build(&spec).unwrap();
            let sol = solve_algebraic(&g);
            let Some(d) = &sol.d else { continue };
            solitons += 1;
            let c = sol.c.as_ref().unwrap();
            let ric = ricci(&g, &curvature(&g, &levi_civita(&g)));
            assert!(
                ric.operator
                    .sub(&Mat::identity(3).scale(c))
                    .sub(d)
                    .is_zero(),
                "soliton residual {spec:?}"
            );
            assert!(ricci3::liealg::is_derivation(&g, d), "{spec:?}");
            assert_eq!(ric.scalar, q(3) * c + d.trace(), "trace identity {spec:?}");
            for t in [qr(1, 2), q(1), q(2)] {
                let ok = match mat_exp(d, &t) {
                    MatExp::Polynomial(m) => check_automorphism(&g, &m),
                    MatExp::Numeric(m) => check_automorphism_f64(&g, &m, 1e-10),
                };
                assert!(ok, "exp(tD) automorphism {spec:?} t={t}");
            }
        }
    }
    assert!(solitons > 50, "sweep found only {solitons} solitons");

    // rho = c g + L_x g holds exactly for reported left-invariant solutions
    for family in Family::ALL {
        for _ in 0..10 {
            let spec = random_spec_stratified(family, &mut rng);
            let g = build(&spec).unwrap();
            let sol = solve_left_invariant(&g);
            if let (Some(c), Some(x)) = (&sol.c, &sol.x) {
                let ric = ricci(&g, &curvature(&g, &levi_civita(&g)));
                let metric = Mat::from_fn(3, 3, |i, j| if i == j { eps(i) } else { q(0) });
                let lhs = ric.rho.clone();
                let rhs = metric.scale(c).add(&lie_derivative_metric(&g, x));
                assert_eq!(lhs, rhs, "{spec:?}");
            }
        }
    }

    println!("criterion 7 (property suite, {solitons} solitons exercised): PASS");
}

#[test]
fn criterion_8_flow_factors() {
    let mut rng = StdRng::seed_from_u64(108);
    // G1: exp(t/2 D) = [[1,0,0],[0,1-t a^2, t a^2],[0,-t a^2,1+t a^2]], exactly
    for _ in 0..5 {
        let al = random_q_nonzero(&mut rng);
        let sol = solve_algebraic(&build(&FamilySpec::g1(al.clone(), q(0))).unwrap());
        for t in [qr(1, 3), q(1), q(-2)] {
            let ta2 = &t * &al * &al;
            let MatExp::Polynomial(m) = flow_factor(&sol, &t) else {
                panic!("g1 flow factor must be exact (nilpotent)");
            };
            assert_eq!(
                m,
                Mat::from_rows(vec![
                    vec![q(1), q(0), q(0)],
                    vec![q(0), q(1) - &ta2, ta2.clone()],
                    vec![q(0), -&ta2, q(1) + &ta2],
                ])
            );
        }
    }
    // G2: exp(t/2 D) = diag(1, e^{g^2 t}, e^{g^2 t}) at 1e-12 relative
    for _ in 0..5 {
        let ga = random_q_nonzero(&mut rng);
        let sol = solve_algebraic(&build(&FamilySpec::g2(q(0), q(0), ga.clone())).unwrap());
        for t in [qr(1, 2), q(1), qr(-3, 2)] {
            let f = flow_factor(&sol, &t).to_f64();
            let e = ricci3::exact::rational_to_f64(&(&t * &ga * &ga)).exp();
            for r in 0..3 {
                for c in 0..3 {
                    let want = match (r, c) {
                        (0, 0) => 1.0,
                        (1, 1) | (2, 2) => e,
                        _ => 0.0,
                    };
                    let err = (f.at(r, c) - want).abs();
                    assert!(
                        err <= 1e-12 * want.abs().max(1.0),
                        "entry ({r},{c}): {} vs {want}",
                        f.at(r, c)
                    );
                }
            }
        }
    }
    println!("criterion 8 (flow factor matrices): PASS");
}

#[test]
fn verify_paper_suite_is_green_with_known_deviations() {
    let report = verify::run(10, 120);
    assert!(report.all_passed(), "\n{report}");
    assert_eq!(report.deviations.len(), verify::KNOWN_DEVIATIONS.len());
    println!(
        "verify-paper: {} checks pass, {} known deviations listed",
        report.checks.len(),
        report.deviations.len()
    );
}
