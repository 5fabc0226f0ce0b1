//! Reproduction checks for the published connection/curvature/Ricci tables,
//! the per-family soliton theorems, the inner/outer remarks, the flow-factor
//! matrices and the classification predicate.
//!
//! The Koszul pipeline is the authority: wherever a printed table disagrees
//! with it, the comparison targets the Koszul value and the printed entry is
//! reported as a named deviation instead of silently patched or failed. Two
//! such entries exist, both in the third unimodular family (see
//! [`KNOWN_DEVIATIONS`]); the corrected (3,3) Ricci entry is the one that is
//! consistent with that family's own soliton theorem.

use crate::exact::{q, qr, Mat, MatExp, Q};
use crate::families::{build, group_name, theorem_predicate, Family, FamilySpec};
use crate::geometry::{curvature, levi_civita, ricci, Connection};
use crate::liealg::derivation_space;
use crate::sampling::{random_q, random_q_nonzero, random_spec, random_spec_stratified};
use crate::soliton::{
    check_automorphism, check_automorphism_f64, flow_factor, solve_algebraic,
    solve_left_invariant, InnerFlag, SolitonStatus,
};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Printed-table entries that the Koszul derivation contradicts. Both are in
/// the g3 lemma; the second also contradicts the g3 soliton theorem (the
/// case beta = -alpha < 0, gamma = 0 needs c = 2 alpha^2, which only the
/// corrected entry produces).
pub const KNOWN_DEVIATIONS: [&str; 5] = [
    "g3 curvature R2323: printed -(a2*a3 + alpha*a3), Koszul gives -(a2*a3 + alpha*a1)",
    "g3 Ricci operator (3,3): printed ... - beta*a3, Koszul gives ... - beta*a2",
    "g3 derivation lemma, case alpha*beta*gamma != 0: printed entry (1,2) = -(alpha/beta) \
     lambda_1^1 where only lambda_1^2 solves the system (lambda_1^1 is forced to 0 there)",
    "g4 derivation lemma, case alpha != 0 and beta != eta: printed entry (2,1) = \
     -(eta/alpha) lambda_2^1 + (1/alpha) lambda_3^1, but the system's own equation \
     alpha lambda_1^2 + beta lambda_2^1 - lambda_3^1 = 0 forces beta in place of eta",
    "g7 derivation lemma, case delta = alpha and beta = 0: printed entry (1,3) = -lambda_2^1, \
     but E12 and E13 are independent derivations there; the kernel has dimension 6, not 5",
];

/// Connection, independent curvature components and Ricci operator of one
/// family member, as closed forms in the parameters.
pub struct LemmaTables {
    pub connection: Connection,
    /// Generators (i, j, k, l, value) for the pairs 12, 13, 23; everything
    /// else follows by the curvature symmetries.
    pub curvature: Vec<(usize, usize, usize, usize, Q)>,
    pub ricci: Mat,
}

fn half() -> Q {
    qr(1, 2)
}

fn conn(table: [[[Q; 3]; 3]; 3]) -> Connection {
    Connection::from_table(table)
}

/// Lemma tables with the two g3 misprints corrected; for every other family
/// this is the printed table.
pub fn corrected_tables(spec: &FamilySpec) -> LemmaTables {
    tables(spec, true)
}

/// Lemma tables exactly as printed.
pub fn printed_tables(spec: &FamilySpec) -> LemmaTables {
    tables(spec, false)
}

fn tables(spec: &FamilySpec, corrected: bool) -> LemmaTables {
    let (al, be, ga, de) = (
        spec.alpha.clone(),
        spec.beta.clone(),
        spec.gamma.clone(),
        spec.delta.clone(),
    );
    let z = Q::zero;
    match spec.family {
        Family::G1 => {
            let hb = half() * &be;
            let connection = conn([
                [
                    [z(), -&al, -&al],
                    [al.clone(), z(), -&hb],
                    [-&al, -&hb, z()],
                ],
                [[z(), z(), hb.clone()], [z(), z(), al.clone()], [hb.clone(), al.clone(), z()]],
                [[z(), hb.clone(), z()], [-&hb, z(), -&al], [z(), -&al, z()]],
            ]);
            let a2 = &al * &al;
            let b2 = &be * &be;
            let curvature = vec![
                (0, 1, 0, 1, -q(2) * &a2 - qr(1, 4) * &b2),
                (0, 2, 0, 2, qr(1, 4) * &b2 - q(2) * &a2),
                (1, 2, 1, 2, qr(1, 4) * &b2),
                (0, 1, 0, 2, q(2) * &a2),
                (0, 1, 1, 2, -&al * &be),
                (0, 2, 1, 2, &al * &be),
            ];
            let ricci = Mat::from_rows(vec![
                vec![-half() * &b2, -&al * &be, &al * &be],
                vec![-&al * &be, -q(2) * &a2 - half() * &b2, q(2) * &a2],
                vec![-&al * &be, -q(2) * &a2, q(2) * &a2 - half() * &b2],
            ]);
            LemmaTables {
                connection,
                curvature,
                ricci,
            }
        }
        Family::G2 => {
            let ha = half() * &al;
            let hab = &ha - &be; // alpha/2 - beta
            let connection = conn([
                [
                    [z(), z(), z()],
                    [z(), z(), hab.clone()],
                    [z(), hab.clone(), z()],
                ],
                [
                    [z(), -&ga, ha.clone()],
                    [ga.clone(), z(), z()],
                    [ha.clone(), z(), z()],
                ],
                [
                    [z(), ha.clone(), ga.clone()],
                    [-&ha, z(), z()],
                    [ga.clone(), z(), z()],
                ],
            ]);
            let a2 = &al * &al;
            let g2 = &ga * &ga;
            let curvature = vec![
                (0, 1, 0, 1, -&g2 - qr(1, 4) * &a2),
                (0, 1, 0, 2, &ga * (q(2) * &be - &al)),
                (0, 2, 0, 2, &g2 + qr(1, 4) * &a2),
                (1, 2, 1, 2, -&g2 - qr(3, 4) * &a2 + &al * &be),
            ];
            let ricci = Mat::from_rows(vec![
                vec![-half() * &a2 - q(2) * &g2, z(), z()],
                vec![z(), &al * &hab, &ga * (q(2) * &be - &al)],
                vec![z(), &ga * (&al - q(2) * &be), &al * &hab],
            ]);
            LemmaTables {
                connection,
                curvature,
                ricci,
            }
        }
        Family::G3 => {
            let a1 = half() * (&al - &be - &ga);
            let a2 = half() * (&al - &be + &ga);
            let a3 = half() * (&al + &be - &ga);
            let connection = conn([
                [
                    [z(), z(), z()],
                    [z(), z(), a1.clone()],
                    [z(), a1.clone(), z()],
                ],
                [
                    [z(), z(), a2.clone()],
                    [z(), z(), z()],
                    [a2.clone(), z(), z()],
                ],
                [
                    [z(), a3.clone(), z()],
                    [-&a3, z(), z()],
                    [z(), z(), z()],
                ],
            ]);
            let r2323 = if corrected {
                -(&a2 * &a3 + &al * &a1)
            } else {
                -(&a2 * &a3 + &al * &a3)
            };
            let curvature = vec![
                (0, 1, 0, 1, -(&a1 * &a2 + &ga * &a3)),
                (0, 2, 0, 2, &a1 * &a3 + &be * &a2),
                (1, 2, 1, 2, r2323),
            ];
            let m33_beta_term = if corrected { &be * &a2 } else { &be * &a3 };
            let ricci = Mat::from_rows(vec![
                vec![-&a1 * &a2 - &a1 * &a3 - &be * &a2 - &ga * &a3, z(), z()],
                vec![z(), &a2 * &a3 - &a1 * &a2 + &al * &a1 - &ga * &a3, z()],
                vec![z(), z(), -&a1 * &a3 + &a2 * &a3 + &al * &a1 - m33_beta_term],
            ]);
            LemmaTables {
                connection,
                curvature,
                ricci,
            }
        }
        Family::G4 => {
            let eta = spec.eta.clone();
            let b1 = half() * &al + &eta - &be;
            let b2 = half() * &al - &eta;
            let b3 = half() * &al + &eta;
            let two_eta_m_beta = q(2) * &eta - &be;
            let connection = conn([
                [
                    [z(), z(), z()],
                    [z(), z(), b1.clone()],
                    [z(), b1.clone(), z()],
                ],
                [
                    [z(), q(1), b2.clone()],
                    [q(-1), z(), z()],
                    [b2.clone(), z(), z()],
                ],
                [
                    [z(), b3.clone(), q(-1)],
                    [-&b3, z(), z()],
                    [q(-1), z(), z()],
                ],
            ]);
            let curvature = vec![
                (0, 1, 0, 1, &two_eta_m_beta * &b3 - &b1 * &b2 - q(1)),
                (0, 2, 0, 2, &b1 * &b3 + &be * &b2 + q(1)),
                (1, 2, 1, 2, -(&b2 * &b3 + &al * &b1 + q(1))),
                (0, 1, 0, 2, &two_eta_m_beta + &b1 + &b2),
            ];
            let a2 = &al * &al;
            let m22 =
                half() * &a2 + q(2) * &eta * (&al - &be) - &al * &be + q(2);
            let m23 = &al + q(2) * &eta - q(2) * &be;
            let m33 = half() * &a2 - &al * &be - q(2) + q(2) * &eta * &be;
            let ricci = Mat::from_rows(vec![
                vec![-half() * &a2, z(), z()],
                vec![z(), m22, m23.clone()],
                vec![z(), -m23, m33],
            ]);
            LemmaTables {
                connection,
                curvature,
                ricci,
            }
        }
        Family::G5 => {
            let sp = half() * (&be + &ga); // (beta + gamma)/2
            let sm = half() * (&be - &ga); // (beta - gamma)/2
            let connection = conn([
                [
                    [z(), z(), al.clone()],
                    [z(), z(), sp.clone()],
                    [al.clone(), sp.clone(), z()],
                ],
                [
                    [z(), z(), sp.clone()],
                    [z(), z(), de.clone()],
                    [sp.clone(), de.clone(), z()],
                ],
                [
                    [z(), -&sm, z()],
                    [sm.clone(), z(), z()],
                    [z(), z(), z()],
                ],
            ]);
            let b2g2 = half() * (&be * &be - &ga * &ga); // (b^2-g^2)/2
            let curvature = vec![
                (0, 1, 0, 1, &al * &de - &sp * &sp),
                (
                    0, 2, 0, 2,
                    -&al * &al - half() * &be * (&be + &ga) - half() * &b2g2,
                ),
                (
                    1, 2, 1, 2,
                    -&de * &de - half() * &ga * (&be + &ga) + half() * &b2g2,
                ),
            ];
            let ricci = Mat::from_rows(vec![
                vec![&al * &al + &al * &de + &b2g2, z(), z()],
                vec![z(), &al * &de + &de * &de - &b2g2, z()],
                vec![z(), z(), &al * &al + &de * &de + q(2) * &sp * &sp],
            ]);
            LemmaTables {
                connection,
                curvature,
                ricci,
            }
        }
        Family::G6 => {
            let sp = half() * (&be + &ga);
            let sm = half() * (&be - &ga);
            let connection = conn([
                [
                    [z(), z(), z()],
                    [z(), z(), sp.clone()],
                    [z(), sp.clone(), z()],
                ],
                [
                    [z(), -&al, -&sm],
                    [al.clone(), z(), z()],
                    [-&sm, z(), z()],
                ],
                [
                    [z(), sm.clone(), -&de],
                    [-&sm, z(), z()],
                    [-&de, z(), z()],
                ],
            ]);
            let b2g2 = half() * (&be * &be - &ga * &ga);
            let curvature = vec![
                (
                    0, 1, 0, 1,
                    -&al * &al + half() * &b2g2 + half() * &be * (&be - &ga),
                ),
                (
                    0, 2, 0, 2,
                    &de * &de + half() * &b2g2 + half() * &ga * (&be - &ga),
                ),
                (1, 2, 1, 2, &al * &de + &sm * &sm),
            ];
            let ricci = Mat::from_rows(vec![
                vec![-&al * &al - &de * &de + q(2) * &sm * &sm, z(), z()],
                vec![z(), -&al * &al - &al * &de + &b2g2, z()],
                vec![z(), z(), -&de * &de - &al * &de - &b2g2],
            ]);
            LemmaTables {
                connection,
                curvature,
                ricci,
            }
        }
        Family::G7 => {
            let hg = half() * &ga;
            let bp = &be + &hg; // beta + gamma/2
            let bm = &be - &hg; // beta - gamma/2
            let connection = conn([
                [
                    [z(), al.clone(), al.clone()],
                    [-&al, z(), hg.clone()],
                    [al.clone(), hg.clone(), z()],
                ],
                [
                    [z(), be.clone(), bp.clone()],
                    [-&be, z(), de.clone()],
                    [bp.clone(), de.clone(), z()],
                ],
                [
                    [z(), -&bm, -&be],
                    [bm.clone(), z(), -&de],
                    [-&be, -&de, z()],
                ],
            ]);
            let g2 = &ga * &ga;
            let core = &al * &de - &al * &al - &be * &ga; // alpha delta - alpha^2 - beta gamma
            let curvature = vec![
                (0, 1, 0, 1, &core - qr(1, 4) * &g2),
                (0, 2, 0, 2, &core + qr(1, 4) * &g2),
                (0, 1, 0, 2, -&core),
                (1, 2, 1, 2, qr(-3, 4) * &g2),
            ];
            let ricci = Mat::from_rows(vec![
                vec![-half() * &g2, z(), z()],
                vec![z(), &core + half() * &g2, -&core],
                vec![z(), core.clone(), -&core + half() * &g2],
            ]);
            LemmaTables {
                connection,
                curvature,
                ricci,
            }
        }
    }
}

/// Expand pair generators into the dense 81-component tensor using the
/// curvature symmetries; unlisted components are zero.
pub fn dense_curvature(generators: &[(usize, usize, usize, usize, Q)]) -> Vec<Q> {
    let mut r = vec![Q::zero(); 81];
    let idx = |i: usize, j: usize, k: usize, l: usize| ((i * 3 + j) * 3 + k) * 3 + l;
    for &(i, j, k, l, ref v) in generators {
        for (a, b, s1) in [(i, j, false), (j, i, true)] {
            for (c, d, s2) in [(k, l, false), (l, k, true)] {
                let w = if s1 ^ s2 { -v.clone() } else { v.clone() };
                r[idx(a, b, c, d)] = w.clone();
                r[idx(c, d, a, b)] = w;
            }
        }
    }
    r
}

/// Outcome of one named reproduction check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
    pub deviations: Vec<String>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {}{}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", c.detail)
                }
            )?;
        }
        writeln!(f, "known deviations: {}", self.deviations.len())?;
        for d in &self.deviations {
            writeln!(f, "  - {d}")?;
        }
        Ok(())
    }
}

/// Compare the Koszul pipeline against the (corrected) lemma tables on
/// `draws` random members of one family. Returns the check plus how many
/// draws exhibited each printed-vs-derived deviation.
pub fn check_lemma_tables(family: Family, draws: usize, rng: &mut StdRng) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut deviating_draws = 0usize;
    for _ in 0..draws {
        let spec = random_spec(family, rng);
        let g = build(&spec).expect("sampled spec is valid");
        let connection = levi_civita(&g);
        let curv = curvature(&g, &connection);
        let ric = ricci(&g, &curv);
        let expect = corrected_tables(&spec);

        if connection != expect.connection {
            failures.push(format!("{spec:?}: connection table mismatch"));
            continue;
        }
        let dense = dense_curvature(&expect.curvature);
        let mut curv_ok = true;
        'outer: for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        if curv.at(i, j, k, l) != &dense[((i * 3 + j) * 3 + k) * 3 + l] {
                            curv_ok = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        if !curv_ok {
            failures.push(format!("{spec:?}: curvature mismatch"));
            continue;
        }
        if ric.operator != expect.ricci {
            failures.push(format!("{spec:?}: Ricci operator mismatch"));
            continue;
        }
        if family == Family::G3 {
            let printed = printed_tables(&spec);
            let differs = printed.ricci != expect.ricci
                || printed.curvature.iter().zip(&expect.curvature).any(|(a, b)| a.4 != b.4);
            if differs {
                deviating_draws += 1;
            }
        }
    }
    CheckOutcome {
        name: format!("{family} lemma tables (connection/curvature/Ricci)"),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            if deviating_draws > 0 {
                format!(
                    "{draws} draws; printed g3 entries deviated on {deviating_draws} draws (known misprints)"
                )
            } else {
                format!("{draws} draws")
            }
        } else {
            failures.join("; ")
        },
    }
}

/// The theorem-level solution of `Ric = c Id + D` for a family member.
#[derive(Clone, Debug, PartialEq)]
pub enum ExpectedSoliton {
    None,
    Unique { c: Q, d: Mat },
    /// The abelian point: the one-parameter family `(c, -c Id)`.
    ScalarFamily,
}

/// The per-family theorems, extended to the sign-mirror images the printed
/// normal forms quotient out (the formulas are even in the parameters, so
/// the extension is the formulas themselves).
pub fn expected_algebraic_soliton(spec: &FamilySpec) -> ExpectedSoliton {
    let (al, be, ga, de) = (&spec.alpha, &spec.beta, &spec.gamma, &spec.delta);
    let diag = |a: Q, b: Q, c: Q| {
        Mat::from_rows(vec![
            vec![a, q(0), q(0)],
            vec![q(0), b, q(0)],
            vec![q(0), q(0), c],
        ])
    };
    match spec.family {
        Family::G1 => {
            if be.is_zero() {
                let t = q(2) * al * al;
                ExpectedSoliton::Unique {
                    c: q(0),
                    d: Mat::from_rows(vec![
                        vec![q(0), q(0), q(0)],
                        vec![q(0), -&t, t.clone()],
                        vec![q(0), -&t, t.clone()],
                    ]),
                }
            } else {
                ExpectedSoliton::None
            }
        }
        Family::G2 => {
            if al.is_zero() && be.is_zero() {
                let t = q(2) * ga * ga;
                ExpectedSoliton::Unique {
                    c: -&t,
                    d: diag(q(0), t.clone(), t),
                }
            } else {
                ExpectedSoliton::None
            }
        }
        Family::G3 => {
            let nz = [!al.is_zero(), !be.is_zero(), !ga.is_zero()];
            match nz.iter().filter(|b| **b).count() {
                0 => ExpectedSoliton::ScalarFamily,
                1 => {
                    let (x, d) = if nz[0] {
                        (al, diag(q(-2) * al * al, -(al * al), -(al * al)))
                    } else if nz[1] {
                        (be, diag(-(be * be), q(-2) * be * be, -(be * be)))
                    } else {
                        (ga, diag(-(ga * ga), -(ga * ga), q(-2) * ga * ga))
                    };
                    ExpectedSoliton::Unique {
                        c: qr(3, 2) * x * x,
                        d,
                    }
                }
                2 => {
                    let (x, y, d_opp) = if !nz[2] {
                        (al, be, diag(q(-2) * al * al, q(-2) * al * al, q(0)))
                    } else if !nz[1] {
                        (al, ga, diag(q(-2) * al * al, q(0), q(-2) * al * al))
                    } else {
                        (be, ga, diag(q(0), q(-2) * ga * ga, q(-2) * ga * ga))
                    };
                    if x == y {
                        ExpectedSoliton::Unique {
                            c: q(0),
                            d: Mat::zeros(3, 3),
                        }
                    } else if *x == -y {
                        ExpectedSoliton::Unique {
                            c: q(2) * x * x,
                            d: d_opp,
                        }
                    } else {
                        ExpectedSoliton::None
                    }
                }
                _ => {
                    if al == be && be == ga {
                        ExpectedSoliton::Unique {
                            c: qr(-1, 2) * al * al,
                            d: Mat::zeros(3, 3),
                        }
                    } else {
                        ExpectedSoliton::None
                    }
                }
            }
        }
        Family::G4 => {
            if al.is_zero() && be == &spec.eta {
                ExpectedSoliton::Unique {
                    c: q(0),
                    d: Mat::zeros(3, 3),
                }
            } else {
                ExpectedSoliton::None
            }
        }
        Family::G5 => {
            if be.is_zero() && ga.is_zero() {
                ExpectedSoliton::Unique {
                    c: al * al + de * de,
                    d: diag(de * (al - de), al * (de - al), q(0)),
                }
            } else if al * al + be * be == ga * ga + de * de {
                let lam = al * de - be * ga - al * al - be * be;
                ExpectedSoliton::Unique {
                    c: al * al + de * de + half() * (be + ga) * (be + ga),
                    d: diag(lam.clone(), lam, q(0)),
                }
            } else {
                ExpectedSoliton::None
            }
        }
        Family::G6 => {
            if be.is_zero() && ga.is_zero() {
                ExpectedSoliton::Unique {
                    c: -(al * al + de * de),
                    d: diag(q(0), de * (de - al), al * (al - de)),
                }
            } else if al * al - be * be == de * de - ga * ga {
                let lam = al * al - be * be + be * ga - al * de;
                ExpectedSoliton::Unique {
                    c: -(al * al) - de * de + half() * (be - ga) * (be - ga),
                    d: diag(q(0), lam.clone(), lam),
                }
            } else {
                ExpectedSoliton::None
            }
        }
        Family::G7 => {
            if ga.is_zero() {
                let lam = al * (de - al);
                ExpectedSoliton::Unique {
                    c: q(0),
                    d: Mat::from_rows(vec![
                        vec![q(0), q(0), q(0)],
                        vec![q(0), lam.clone(), -&lam],
                        vec![q(0), lam.clone(), -&lam],
                    ]),
                }
            } else {
                ExpectedSoliton::None
            }
        }
    }
}

fn solution_vector(c: &Q, d: &Mat) -> Vec<Q> {
    let mut v = vec![c.clone()];
    v.extend(d.entries().iter().cloned());
    v
}

/// Exact equality of two affine sets given as particular + spanning
/// directions (directions need not be independent).
pub fn affine_sets_equal(
    p1: &[Q],
    k1: &[Vec<Q>],
    p2: &[Q],
    k2: &[Vec<Q>],
) -> bool {
    let rank = |rows: &[Vec<Q>]| -> usize {
        if rows.is_empty() {
            0
        } else {
            Mat::from_rows(rows.to_vec()).rank()
        }
    };
    let r1 = rank(k1);
    if r1 != rank(k2) {
        return false;
    }
    let mut joint: Vec<Vec<Q>> = k1.to_vec();
    joint.extend_from_slice(k2);
    if rank(&joint) != r1 {
        return false;
    }
    let diff: Vec<Q> = p1.iter().zip(p2).map(|(a, b)| a - b).collect();
    joint.push(diff);
    rank(&joint) == r1
}

/// Solver output vs the theorem formulas on `points` stratified draws.
pub fn check_soliton_theorem(family: Family, points: usize, rng: &mut StdRng) -> CheckOutcome {
    let mut failures = Vec::new();
    for _ in 0..points {
        let spec = random_spec_stratified(family, rng);
        let g = build(&spec).expect("valid spec");
        let sol = solve_algebraic(&g);
        let expect = expected_algebraic_soliton(&spec);
        let ok = match (&expect, sol.status) {
            (ExpectedSoliton::None, SolitonStatus::None) => true,
            (ExpectedSoliton::Unique { c, d }, SolitonStatus::Unique) => {
                sol.c.as_ref() == Some(c) && sol.d.as_ref() == Some(d)
            }
            (ExpectedSoliton::ScalarFamily, SolitonStatus::Family) => {
                let p = solution_vector(sol.c.as_ref().unwrap(), sol.d.as_ref().unwrap());
                let k: Vec<Vec<Q>> = sol
                    .freedom
                    .iter()
                    .map(|(dc, dd)| solution_vector(dc, dd))
                    .collect();
                let expect_p = solution_vector(&q(0), &Mat::zeros(3, 3));
                let expect_k = vec![solution_vector(&q(-1), &Mat::identity(3))];
                affine_sets_equal(&p, &k, &expect_p, &expect_k)
            }
            _ => false,
        };
        if !ok {
            failures.push(format!("{spec:?}: solver {:?} vs theorem {expect:?}", sol.status));
            if failures.len() > 3 {
                break;
            }
        }
    }
    CheckOutcome {
        name: format!("{family} algebraic soliton theorem"),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{points} stratified points")
        } else {
            failures.join("; ")
        },
    }
}

/// The classification predicate against the solver: existence and
/// triviality must agree exactly.
pub fn check_predicate_agreement(
    points_per_family: usize,
    rng: &mut StdRng,
) -> CheckOutcome {
    let mut disagreements = Vec::new();
    for family in Family::ALL {
        for _ in 0..points_per_family {
            let spec = random_spec_stratified(family, rng);
            let g = build(&spec).expect("valid spec");
            let sol = solve_algebraic(&g);
            let pred = theorem_predicate(&spec);
            let solver_exists = sol.status != SolitonStatus::None;
            if pred.exists != solver_exists || pred.einstein != sol.trivial {
                disagreements.push(format!(
                    "{spec:?}: predicate exists={} einstein={} vs solver exists={} trivial={}",
                    pred.exists, pred.einstein, solver_exists, sol.trivial
                ));
                if disagreements.len() > 3 {
                    break;
                }
            }
        }
    }
    CheckOutcome {
        name: "classification predicate vs solver (existence + triviality)".to_string(),
        passed: disagreements.is_empty(),
        detail: if disagreements.is_empty() {
            format!("{} points per family", points_per_family)
        } else {
            disagreements.join("; ")
        },
    }
}

/// Inner/outer status of the soliton derivations, per the remarks.
pub fn check_inner_outer(rng: &mut StdRng) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut expect_inner = |spec: FamilySpec, witness: Option<[Q; 3]>, tag: &str| {
        let g = build(&spec).expect("valid");
        let sol = solve_algebraic(&g);
        match (&sol.inner, witness) {
            (Some(InnerFlag::Inner(x)), Some(w)) if *x == w => {}
            (Some(InnerFlag::Outer), None) => {}
            other => failures.push(format!("{tag} {spec:?}: {:?}", other.0)),
        }
    };
    for _ in 0..5 {
        // G1(beta = 0): inner with witness 2 alpha (e2 + e3)
        let al = random_q_nonzero(rng);
        expect_inner(
            FamilySpec::g1(al.clone(), q(0)),
            Some([q(0), q(2) * &al, q(2) * &al]),
            "g1",
        );
        // G2: outer
        expect_inner(
            FamilySpec::g2(q(0), q(0), random_q_nonzero(rng)),
            None,
            "g2",
        );
        // G3 nontrivial branches: outer
        let x = random_q_nonzero(rng);
        expect_inner(FamilySpec::g3(x.clone(), q(0), q(0)), None, "g3 axis");
        expect_inner(FamilySpec::g3(x.clone(), -&x, q(0)), None, "g3 opposite");
        // G5/G6 nontrivial: outer (delta != alpha so D != 0)
        let (a, d) = loop {
            let (a, d) = (random_q_nonzero(rng), random_q_nonzero(rng));
            if a != d && !(&a + &d).is_zero() {
                break (a, d);
            }
        };
        expect_inner(FamilySpec::g5(a.clone(), q(0), q(0), d.clone()), None, "g5");
        expect_inner(FamilySpec::g6(a.clone(), q(0), q(0), d.clone()), None, "g6");
        // G7 with gamma = 0: inner iff delta != 0, witness (alpha(alpha-delta)/delta)(e2+e3)
        let (a, d) = loop {
            let (a, d) = (random_q_nonzero(rng), random_q_nonzero(rng));
            if !(&a + &d).is_zero() {
                break (a, d);
            }
        };
        let w = &a * (&a - &d) / &d;
        expect_inner(
            FamilySpec::g7(a.clone(), random_q(rng), q(0), d.clone()),
            Some([q(0), w.clone(), w]),
            "g7 inner",
        );
        expect_inner(
            FamilySpec::g7(random_q_nonzero(rng), random_q(rng), q(0), q(0)),
            None,
            "g7 outer",
        );
    }
    CheckOutcome {
        name: "inner/outer derivation remarks".to_string(),
        passed: failures.is_empty(),
        detail: failures.join("; "),
    }
}

/// The two printed `exp(t/2 D)` matrices.
pub fn check_flow_factors(rng: &mut StdRng) -> CheckOutcome {
    let mut failures = Vec::new();
    for _ in 0..5 {
        let al = random_q_nonzero(rng);
        let g = build(&FamilySpec::g1(al.clone(), q(0))).unwrap();
        let sol = solve_algebraic(&g);
        let t = random_q(rng);
        let ta2 = &t * &al * &al;
        let expect = Mat::from_rows(vec![
            vec![q(1), q(0), q(0)],
            vec![q(0), q(1) - &ta2, ta2.clone()],
            vec![q(0), -&ta2, q(1) + &ta2],
        ]);
        match flow_factor(&sol, &t) {
            MatExp::Polynomial(m) if m == expect => {}
            other => failures.push(format!("g1 flow at t={t}: {other:?}")),
        }

        let ga = random_q_nonzero(rng);
        let g = build(&FamilySpec::g2(q(0), q(0), ga.clone())).unwrap();
        let sol = solve_algebraic(&g);
        let f = flow_factor(&sol, &t).to_f64();
        let e = (crate::exact::rational_to_f64(&(&t * &ga * &ga))).exp();
        let expect = [[1.0, 0.0, 0.0], [0.0, e, 0.0], [0.0, 0.0, e]];
        for r in 0..3 {
            for c in 0..3 {
                let w = expect[r][c];
                if (f.at(r, c) - w).abs() > 1e-12 * w.abs().max(1.0) {
                    failures.push(format!(
                        "g2 flow at t={t}: entry ({r},{c}) = {} vs {w}",
                        f.at(r, c)
                    ));
                }
            }
        }
    }
    CheckOutcome {
        name: "flow factor matrices exp(t/2 D) for g1 and g2".to_string(),
        passed: failures.is_empty(),
        detail: failures.join("; "),
    }
}

/// Left-invariant soliton remarks. The alpha != 0 branch of the g4 remark is
/// consistent only on beta = alpha + eta (substituting the remark's own
/// equations forces alpha (alpha + eta - beta) = 0), so that is where the
/// printed family is reproduced; off it the solver must report none.
pub fn check_left_invariant(rng: &mut StdRng) -> CheckOutcome {
    let mut failures = Vec::new();
    for _ in 0..5 {
        // G1: Y = beta e1 - alpha (e2 + e3), c = -beta^2/2
        let (al, be) = (random_q_nonzero(rng), random_q(rng));
        let g = build(&FamilySpec::g1(al.clone(), be.clone())).unwrap();
        let sol = solve_left_invariant(&g);
        if sol.status != SolitonStatus::Unique
            || sol.c != Some(qr(-1, 2) * &be * &be)
            || sol.x != Some([be.clone(), -&al, -&al])
        {
            failures.push(format!("g1({al},{be}): {sol:?}"));
        }

        let eta = if rng.random_bool(0.5) { q(1) } else { q(-1) };

        // G4, alpha = 0, beta != eta: Y = (1 - eta beta) e1, c = 0
        let be = loop {
            let b = random_q(rng);
            if b != eta {
                break b;
            }
        };
        let g = build(&FamilySpec::g4(q(0), be.clone(), eta.clone())).unwrap();
        let sol = solve_left_invariant(&g);
        if sol.status != SolitonStatus::Unique
            || sol.c != Some(q(0))
            || sol.x != Some([q(1) - &eta * &be, q(0), q(0)])
        {
            failures.push(format!("g4(0,{be},{eta}): {sol:?}"));
        }

        // G4, alpha != 0, beta = alpha + eta: one-parameter family
        // Y = -(eta/2) alpha e1 + s (e2 - eta e3), c = -alpha^2/2
        let al = random_q_nonzero(rng);
        let be = &al + &eta;
        let g = build(&FamilySpec::g4(al.clone(), be.clone(), eta.clone())).unwrap();
        let sol = solve_left_invariant(&g);
        let expect_p = vec![
            qr(-1, 2) * &al * &al,
            qr(-1, 2) * &eta * &al,
            q(0),
            q(0),
        ];
        let expect_k = vec![vec![q(0), q(0), q(1), -&eta]];
        let ok = sol.status == SolitonStatus::Family && {
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
            affine_sets_equal(&p, &k, &expect_p, &expect_k)
        };
        if !ok {
            failures.push(format!("g4({al},{be},{eta}) family: {sol:?}"));
        }

        // off the constraint the system is inconsistent
        let be = loop {
            let b = random_q(rng);
            if b != &al + &eta {
                break b;
            }
        };
        let g = build(&FamilySpec::g4(al.clone(), be.clone(), eta.clone())).unwrap();
        if solve_left_invariant(&g).status != SolitonStatus::None {
            failures.push(format!("g4({al},{be},{eta}) should have no solution"));
        }
    }
    CheckOutcome {
        name: "left-invariant soliton remarks (g1, g4)".to_string(),
        passed: failures.is_empty(),
        detail: failures.join("; "),
    }
}

/// Dimensions of the printed derivation-lemma solution families.
pub fn check_derivation_dimensions(rng: &mut StdRng) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut expect = |spec: FamilySpec, dim: usize| {
        let g = build(&spec).expect("valid");
        let got = derivation_space(&g).dimension();
        if got != dim {
            failures.push(format!("{spec:?}: dim {got}, lemma {dim}"));
        }
    };
    let nz = |rng: &mut StdRng| random_q_nonzero(rng);
    for _ in 0..3 {
        let (a, b, c) = (nz(rng), nz(rng), nz(rng));
        expect(FamilySpec::g1(a.clone(), b.clone()), 3);
        expect(FamilySpec::g1(a.clone(), q(0)), 4);
        expect(FamilySpec::g2(a.clone(), b.clone(), c.clone()), 3);
        expect(FamilySpec::g2(q(0), b.clone(), c.clone()), 4);
        expect(FamilySpec::g3(a.clone(), q(0), q(0)), 6);
        expect(FamilySpec::g3(q(0), q(0), c.clone()), 6);
        expect(FamilySpec::g3(a.clone(), b.clone(), c.clone()), 3);
        expect(FamilySpec::g3(a.clone(), b.clone(), q(0)), 4);
        expect(FamilySpec::g3(a.clone(), q(0), c.clone()), 4);
        expect(FamilySpec::g3(q(0), q(0), q(0)), 9);
        let eta = q(1);
        expect(FamilySpec::g4(q(0), eta.clone(), eta.clone()), 6);
        let b_ne = if b == eta { q(2) } else { b.clone() };
        expect(FamilySpec::g4(q(0), b_ne.clone(), eta.clone()), 4);
        expect(FamilySpec::g4(a.clone(), eta.clone(), eta.clone()), 4);
        expect(FamilySpec::g4(a.clone(), b_ne.clone(), eta.clone()), 3);
        // non-unimodular families: (beta,gamma) != (0,0) -> 4, else 4 / 6
        let (x, y) = (nz(rng), nz(rng));
        if !(&x + &y).is_zero() {
            if x != y {
                expect(FamilySpec::g5(x.clone(), q(0), q(0), y.clone()), 4);
                expect(FamilySpec::g6(x.clone(), q(0), q(0), y.clone()), 4);
                expect(FamilySpec::g7(x.clone(), b.clone(), q(0), y.clone()), 4);
            }
            expect(FamilySpec::g5(x.clone(), b.clone(), -(&b * &y) / &x, y.clone()), 4);
            expect(
                FamilySpec::g6(x.clone(), b.clone(), (&b * &y) / &x, y.clone()),
                4,
            );
        }
        expect(FamilySpec::g5(a.clone(), q(0), q(0), a.clone()), 6);
        expect(FamilySpec::g6(a.clone(), q(0), q(0), a.clone()), 6);
        expect(FamilySpec::g7(a.clone(), b.clone(), q(0), a.clone()), 4);
        // printed as 5-parameter (third known deviation); the kernel is 6-dim
        expect(FamilySpec::g7(a.clone(), q(0), q(0), a.clone()), 6);
    }
    CheckOutcome {
        name: "derivation lemma dimensions (sysD1-sysD7)".to_string(),
        passed: failures.is_empty(),
        detail: failures.join("; "),
    }
}

/// The printed solution families of the derivation systems, entry by entry:
/// for random free-symbol values the printed matrix must be a derivation and
/// lie in the computed kernel, and the kernel dimension must equal the
/// printed parameter count (the two g3/g7 parametrization misprints are
/// checked in their corrected reading; the g7 delta = alpha, beta = 0 family
/// is strictly contained in the 6-dimensional kernel).
pub fn check_derivation_parametrizations(rng: &mut StdRng) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut case = |spec: FamilySpec, printed: Mat, dim: Option<usize>, tag: &str| {
        let g = build(&spec).expect("valid spec");
        let der = derivation_space(&g);
        if !crate::liealg::is_derivation(&g, &printed) {
            failures.push(format!("{tag}: printed matrix is not a derivation"));
            return;
        }
        if !der.contains(&printed) {
            failures.push(format!("{tag}: printed matrix outside computed kernel"));
        }
        if let Some(d) = dim {
            if der.dimension() != d {
                failures.push(format!(
                    "{tag}: kernel dimension {} vs printed parameter count {d}",
                    der.dimension()
                ));
            }
        }
    };
    for _ in 0..4 {
        let l: Vec<Q> = (0..6).map(|_| random_q(rng)).collect();
        let (l1, l2, l3, l4, l5, l6) = (&l[0], &l[1], &l[2], &l[3], &l[4], &l[5]);

        // g1, beta != 0 (3 parameters: l1 = l_1^1, l2 = l_2^1, l3 = l_2^2)
        let (al, be) = (random_q_nonzero(rng), random_q_nonzero(rng));
        let r = &be / &al;
        case(
            FamilySpec::g1(al.clone(), be.clone()),
            Mat::from_rows(vec![
                vec![l1.clone(), l2.clone(), -(&r * l1) - l2],
                vec![
                    -(&r * l3),
                    l3.clone(),
                    -l1 + (&r * &r - q(1)) * l3 - &r * l2,
                ],
                vec![
                    -(&r * (l1 + l3)),
                    (&r * &r + q(1)) * l3 - &r * l2,
                    -l1 - l3,
                ],
            ]),
            Some(3),
            "g1 beta != 0",
        );
        // g1, beta = 0 (4 parameters)
        case(
            FamilySpec::g1(al.clone(), q(0)),
            Mat::from_rows(vec![
                vec![l1.clone(), l2.clone(), -l2],
                vec![q(0), l3.clone(), l4.clone()],
                vec![q(0), l3.clone(), l4.clone()],
            ]),
            Some(4),
            "g1 beta = 0",
        );

        // g2, alpha != 0 (3 parameters: l1 = l_2^1, l2 = l_3^1, l3 = l_2^2)
        let (al, be, ga) = (
            random_q_nonzero(rng),
            random_q(rng),
            random_q_nonzero(rng),
        );
        case(
            FamilySpec::g2(al.clone(), be.clone(), ga.clone()),
            Mat::from_rows(vec![
                vec![q(0), l1.clone(), l2.clone()],
                vec![-((&ga * l2 + &be * l1) / &al), l3.clone(), -(&be / &ga) * l3],
                vec![(&be * l2 - &ga * l1) / &al, -(&be / &ga) * l3, -l3],
            ]),
            Some(3),
            "g2 alpha != 0",
        );
        // g2, alpha = 0 (4 parameters)
        let mix = (&be / (q(2) * &ga)) * (l4 - l3);
        case(
            FamilySpec::g2(q(0), be.clone(), ga.clone()),
            Mat::from_rows(vec![
                vec![q(0), q(0), q(0)],
                vec![l1.clone(), l3.clone(), mix.clone()],
                vec![l2.clone(), mix.clone(), l4.clone()],
            ]),
            Some(4),
            "g2 alpha = 0",
        );

        // g3, beta = gamma = 0 != alpha (6 parameters)
        let a = random_q_nonzero(rng);
        case(
            FamilySpec::g3(a.clone(), q(0), q(0)),
            Mat::from_rows(vec![
                vec![l3 + l6, l1.clone(), l2.clone()],
                vec![q(0), l3.clone(), l4.clone()],
                vec![q(0), l5.clone(), l6.clone()],
            ]),
            Some(6),
            "g3 axis alpha",
        );
        // g3, alpha = beta = 0 != gamma (6 parameters)
        case(
            FamilySpec::g3(q(0), q(0), a.clone()),
            Mat::from_rows(vec![
                vec![l6 - l3, l1.clone(), q(0)],
                vec![l2.clone(), l3.clone(), q(0)],
                vec![l4.clone(), l5.clone(), l6.clone()],
            ]),
            Some(6),
            "g3 axis gamma",
        );
        // g3, alpha beta gamma != 0 (3 parameters; corrected (1,2) entry)
        let (b, c) = (random_q_nonzero(rng), random_q_nonzero(rng));
        case(
            FamilySpec::g3(a.clone(), b.clone(), c.clone()),
            Mat::from_rows(vec![
                vec![q(0), -(&a / &b) * l1, (&a / &c) * l2],
                vec![l1.clone(), q(0), (&b / &c) * l3],
                vec![l2.clone(), l3.clone(), q(0)],
            ]),
            Some(3),
            "g3 all nonzero",
        );
        // g3, alpha beta != 0 = gamma (4 parameters)
        case(
            FamilySpec::g3(a.clone(), b.clone(), q(0)),
            Mat::from_rows(vec![
                vec![l1.clone(), -(&a / &b) * l2, l3.clone()],
                vec![l2.clone(), l1.clone(), l4.clone()],
                vec![q(0), q(0), q(0)],
            ]),
            Some(4),
            "g3 gamma = 0",
        );
        // g3, alpha gamma != 0 = beta (4 parameters)
        case(
            FamilySpec::g3(a.clone(), q(0), c.clone()),
            Mat::from_rows(vec![
                vec![l1.clone(), l2.clone(), (&a / &c) * l3],
                vec![q(0), q(0), q(0)],
                vec![l3.clone(), l4.clone(), l1.clone()],
            ]),
            Some(4),
            "g3 beta = 0",
        );

        // g4 cases; eta = +-1
        let eta = if rng.random_bool(0.5) { q(1) } else { q(-1) };
        let half_eta = qr(1, 2) * &eta;
        case(
            FamilySpec::g4(q(0), eta.clone(), eta.clone()),
            Mat::from_rows(vec![
                vec![l1.clone(), l2.clone(), &eta * l2],
                vec![l3.clone(), l4.clone(), &half_eta * (-l1 + l4 - l5)],
                vec![l6.clone(), &half_eta * (-l1 - l4 + l5), l5.clone()],
            ]),
            Some(6),
            "g4 alpha = 0, beta = eta",
        );
        let bne = loop {
            let b = random_q(rng);
            if b != eta {
                break b;
            }
        };
        case(
            FamilySpec::g4(q(0), bne.clone(), eta.clone()),
            Mat::from_rows(vec![
                vec![q(0), q(0), q(0)],
                vec![l1.clone(), l3.clone(), qr(1, 2) * &bne * (l3 - l4)],
                vec![
                    l2.clone(),
                    qr(1, 2) * (q(2) * &eta - &bne) * (l4 - l3),
                    l4.clone(),
                ],
            ]),
            Some(4),
            "g4 alpha = 0, beta != eta",
        );
        let al = random_q_nonzero(rng);
        case(
            FamilySpec::g4(al.clone(), eta.clone(), eta.clone()),
            Mat::from_rows(vec![
                vec![l3 + l4, &eta * (l2 - &al * l1), l2.clone()],
                vec![l1.clone(), l3.clone(), -(&eta * l4)],
                vec![-(&eta * l1), -(&eta * l3), l4.clone()],
            ]),
            Some(4),
            "g4 alpha != 0, beta = eta",
        );
        // (2,1) entry in the corrected reading: beta, not eta (fifth known
        // deviation; the printed eta contradicts the system's equation (4))
        case(
            FamilySpec::g4(al.clone(), bne.clone(), eta.clone()),
            Mat::from_rows(vec![
                vec![q(0), l1.clone(), l2.clone()],
                vec![
                    -(&bne / &al) * l1 + l2 / &al,
                    l3.clone(),
                    &bne * l3,
                ],
                vec![
                    l1 / &al - ((q(2) * &eta - &bne) / &al) * l2,
                    (q(-2) * &eta + &bne) * l3,
                    -l3,
                ],
            ]),
            Some(3),
            "g4 alpha != 0, beta != eta",
        );

        // g5 with (beta, gamma) != (0, 0): the k-parametrization (4 params)
        let spec = loop {
            let alpha = random_q_nonzero(rng);
            let (beta, delta) = (random_q_nonzero(rng), random_q(rng));
            let gamma = -(&beta * &delta) / &alpha;
            let s = FamilySpec::g5(alpha, beta, gamma, delta);
            if s.validate().is_ok() {
                break s;
            }
        };
        let k = l4;
        case(
            spec.clone(),
            Mat::from_rows(vec![
                vec![l1.clone(), &spec.gamma * k, l2.clone()],
                vec![
                    &spec.beta * k,
                    l1 + (&spec.delta - &spec.alpha) * k,
                    l3.clone(),
                ],
                vec![q(0), q(0), q(0)],
            ]),
            Some(4),
            "g5 off-axis",
        );
        // g5 (0,0) with delta != alpha and delta = alpha
        let (x, y) = loop {
            let (x, y) = (random_q_nonzero(rng), random_q_nonzero(rng));
            if x != y && !(&x + &y).is_zero() {
                break (x, y);
            }
        };
        case(
            FamilySpec::g5(x.clone(), q(0), q(0), y.clone()),
            Mat::from_rows(vec![
                vec![l1.clone(), q(0), l2.clone()],
                vec![q(0), l3.clone(), l4.clone()],
                vec![q(0), q(0), q(0)],
            ]),
            Some(4),
            "g5 axis, delta != alpha",
        );
        case(
            FamilySpec::g5(x.clone(), q(0), q(0), x.clone()),
            Mat::from_rows(vec![
                vec![l1.clone(), l2.clone(), l3.clone()],
                vec![l4.clone(), l5.clone(), l6.clone()],
                vec![q(0), q(0), q(0)],
            ]),
            Some(6),
            "g5 axis, delta = alpha",
        );

        // g6 with (beta, gamma) != (0, 0)
        let spec = loop {
            let alpha = random_q_nonzero(rng);
            let (beta, delta) = (random_q_nonzero(rng), random_q(rng));
            let gamma = (&beta * &delta) / &alpha;
            let s = FamilySpec::g6(alpha, beta, gamma, delta);
            if s.validate().is_ok() {
                break s;
            }
        };
        case(
            spec.clone(),
            Mat::from_rows(vec![
                vec![q(0), q(0), q(0)],
                vec![l1.clone(), l3.clone(), &spec.gamma * k],
                vec![
                    l2.clone(),
                    &spec.beta * k,
                    l3 + (&spec.delta - &spec.alpha) * k,
                ],
            ]),
            Some(4),
            "g6 off-axis",
        );
        case(
            FamilySpec::g6(x.clone(), q(0), q(0), y.clone()),
            Mat::from_rows(vec![
                vec![q(0), q(0), q(0)],
                vec![l1.clone(), l3.clone(), q(0)],
                vec![l2.clone(), q(0), l4.clone()],
            ]),
            Some(4),
            "g6 axis, delta != alpha",
        );
        case(
            FamilySpec::g6(x.clone(), q(0), q(0), x.clone()),
            Mat::from_rows(vec![
                vec![q(0), q(0), q(0)],
                vec![l1.clone(), l2.clone(), l3.clone()],
                vec![l4.clone(), l5.clone(), l6.clone()],
            ]),
            Some(6),
            "g6 axis, delta = alpha",
        );

        // g7 with delta != alpha (4 parameters; rows 2 and 3 coincide)
        let spec = loop {
            let (alpha, beta, delta) =
                (random_q(rng), random_q(rng), random_q(rng));
            let gamma = if alpha.is_zero() { random_q(rng) } else { q(0) };
            let s = FamilySpec::g7(alpha, beta, gamma, delta);
            if s.validate().is_ok() && s.alpha != s.delta {
                break s;
            }
        };
        let w = (l1 - l3 - l4) / (&spec.alpha - &spec.delta);
        case(
            spec.clone(),
            Mat::from_rows(vec![
                vec![l1.clone(), l2.clone(), &spec.gamma * &w - l2],
                vec![&spec.beta * &w, l3.clone(), l4.clone()],
                vec![&spec.beta * &w, l3.clone(), l4.clone()],
            ]),
            Some(4),
            "g7 delta != alpha",
        );
        // g7 with delta = alpha, beta != 0 (4 parameters)
        let b = random_q_nonzero(rng);
        case(
            FamilySpec::g7(x.clone(), b.clone(), q(0), x.clone()),
            Mat::from_rows(vec![
                vec![l1.clone(), l2.clone(), -l2],
                vec![l3.clone(), l4.clone(), l1 - l4],
                vec![l3.clone(), l4.clone(), l1 - l4],
            ]),
            Some(4),
            "g7 delta = alpha, beta != 0",
        );
        // g7 with delta = alpha, beta = 0: printed 5-parameter family is
        // strictly inside the 6-dimensional kernel (known deviation)
        case(
            FamilySpec::g7(x.clone(), q(0), q(0), x.clone()),
            Mat::from_rows(vec![
                vec![l1.clone(), l2.clone(), -l2],
                vec![l3.clone(), l4.clone(), l5.clone()],
                vec![l3.clone(), l4.clone(), l5.clone()],
            ]),
            None,
            "g7 delta = alpha, beta = 0",
        );
    }
    CheckOutcome {
        name: "derivation lemma parametrizations (sysD1-sysD7)".to_string(),
        passed: failures.is_empty(),
        detail: failures.join("; "),
    }
}

/// Spot checks of the group-identification tables.
pub fn check_group_tables() -> CheckOutcome {
    let cases = [
        (FamilySpec::g3(q(1), q(1), q(-1)), "SO(3) or SU(2)"),
        (FamilySpec::g3(q(1), q(0), q(0)), "H3"),
        (FamilySpec::g3(q(0), q(0), q(-2)), "H3"),
        (FamilySpec::g3(q(1), q(2), q(3)), "O(1,2) or SL(2,R)"),
        (FamilySpec::g3(q(1), q(-1), q(0)), "E(1,1)"),
        (FamilySpec::g4(q(0), q(1), q(1)), "H3"),
        (FamilySpec::g4(q(-2), q(1), q(1)), "E(1,1)"),
        (FamilySpec::g4(q(3), q(1), q(1)), "E(2)"),
        (FamilySpec::g1(q(1), q(2)), "O(1,2) or SL(2,R)"),
        (FamilySpec::g2(q(0), q(1), q(1)), "E(1,1)"),
    ];
    let failures: Vec<String> = cases
        .iter()
        .filter(|(spec, want)| group_name(spec) != *want)
        .map(|(spec, want)| format!("{spec:?}: want {want}, got {}", group_name(spec)))
        .collect();
    CheckOutcome {
        name: "group identification tables".to_string(),
        passed: failures.is_empty(),
        detail: failures.join("; "),
    }
}

/// Every found soliton's exp(tD) must preserve brackets (exactly when
/// nilpotent, else within 1e-10).
pub fn check_automorphism_property(rng: &mut StdRng) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for family in Family::ALL {
        for _ in 0..40 {
            let spec = random_spec_stratified(family, rng);
            let g = build(&spec).unwrap();
            let sol = solve_algebraic(&g);
            let Some(d) = &sol.d else { continue };
            for t in [qr(1, 2), q(1), q(2)] {
                checked += 1;
                let ok = match crate::exact::mat_exp(d, &t) {
                    MatExp::Polynomial(m) => check_automorphism(&g, &m),
                    MatExp::Numeric(m) => check_automorphism_f64(&g, &m, 1e-10),
                };
                if !ok {
                    failures.push(format!("{spec:?} at t={t}"));
                }
            }
        }
    }
    CheckOutcome {
        name: "exp(tD) preserves brackets for every found soliton".to_string(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{checked} exponentials checked")
        } else {
            failures.join("; ")
        },
    }
}

/// Run the whole reproduction suite deterministically.
pub fn run(draws_per_family: usize, agreement_points: usize) -> VerifyReport {
    let mut rng = StdRng::seed_from_u64(0x5EED_CAFE);
    let mut report = VerifyReport {
        checks: Vec::new(),
        deviations: KNOWN_DEVIATIONS.iter().map(|s| s.to_string()).collect(),
    };
    for family in Family::ALL {
        report
            .checks
            .push(check_lemma_tables(family, draws_per_family, &mut rng));
    }
    for family in Family::ALL {
        report
            .checks
            .push(check_soliton_theorem(family, 60, &mut rng));
    }
    report
        .checks
        .push(check_predicate_agreement(agreement_points, &mut rng));
    report.checks.push(check_inner_outer(&mut rng));
    report.checks.push(check_flow_factors(&mut rng));
    report.checks.push(check_left_invariant(&mut rng));
    report.checks.push(check_derivation_dimensions(&mut rng));
    report.checks.push(check_derivation_parametrizations(&mut rng));
    report.checks.push(check_group_tables());
    report.checks.push(check_automorphism_property(&mut rng));
    report
}
