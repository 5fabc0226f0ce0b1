//! The algebraic Ricci soliton equation `Ric = c Id + D` over `D ∈ Der(g)`,
//! Einstein/triviality classification, the left-invariant soliton equation
//! `rho = c g + L_x g`, flow factors `exp(t/2 D)`, and bracket-preservation
//! checks for the resulting maps.

use crate::exact::{
    mat_exp, q, qr, solve_affine, AffineSolution, FMat, Mat, MatExp, Q, V3,
};
use crate::geometry::{curvature, levi_civita, lie_derivative_metric, ricci, RicciData};
use crate::liealg::{derivation_space, eps, is_inner, LieAlgebra3, PAIRS};
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolitonStatus {
    None,
    Unique,
    Family,
}

impl SolitonStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolitonStatus::None => "none",
            SolitonStatus::Unique => "unique",
            SolitonStatus::Family => "family",
        }
    }
}

/// Whether the canonical soliton derivation is inner, with the witness
/// vector when it is.
#[derive(Clone, Debug, PartialEq)]
pub enum InnerFlag {
    Inner(V3),
    Outer,
}

/// Exact solution set of `Ric = c Id + D`, `D ∈ Der(g)`.
///
/// `c`/`d` hold the RREF-canonical representative (free coordinates zero);
/// `freedom` spans the solution set's direction space as `(dc, dD)` pairs.
/// `trivial` answers the separate one-unknown question `Ric = c Id`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolitonSolution {
    pub status: SolitonStatus,
    pub c: Option<Q>,
    pub d: Option<Mat>,
    pub freedom: Vec<(Q, Mat)>,
    pub trivial: bool,
    pub einstein_c: Option<Q>,
    pub inner: Option<InnerFlag>,
}

impl SolitonSolution {
    fn none(trivial: bool, einstein_c: Option<Q>) -> Self {
        SolitonSolution {
            status: SolitonStatus::None,
            c: None,
            d: None,
            freedom: Vec::new(),
            trivial,
            einstein_c,
            inner: None,
        }
    }
}

/// Solve `Ric = c Id + sum_i x_i D_i` over the derivation basis `D_i`, as a
/// nine-equation linear system in the unknowns `(c, x_1..x_m)`.
pub fn solve_algebraic(g: &LieAlgebra3) -> SolitonSolution {
    let ric = ricci(g, &curvature(g, &levi_civita(g)));
    let der = derivation_space(g);
    let m = der.basis.len();
    let ident = Mat::identity(3);

    let a = Mat::from_fn(9, 1 + m, |row, col| {
        let (r, c) = (row / 3, row % 3);
        if col == 0 {
            ident.at(r, c).clone()
        } else {
            der.basis[col - 1].at(r, c).clone()
        }
    });
    let (trivial, einstein_c) = einstein_solve(&ric);
    match solve_affine(&a, ric.operator.entries()) {
        AffineSolution::Empty => SolitonSolution::none(trivial, einstein_c),
        sol => {
            let p = sol.particular().unwrap();
            let c0 = p[0].clone();
            let d0 = der.combine(&p[1..]);
            let freedom: Vec<(Q, Mat)> = sol
                .kernel()
                .iter()
                .map(|k| (k[0].clone(), der.combine(&k[1..])))
                .collect();
            let status = if freedom.is_empty() {
                SolitonStatus::Unique
            } else {
                SolitonStatus::Family
            };
            let inner = Some(match is_inner(g, &d0) {
                Some(x) => InnerFlag::Inner(x),
                None => InnerFlag::Outer,
            });
            SolitonSolution {
                status,
                c: Some(c0),
                d: Some(d0),
                freedom,
                trivial,
                einstein_c,
                inner,
            }
        }
    }
}

/// The one-unknown Einstein solve `Ric = c Id`.
fn einstein_solve(ric: &RicciData) -> (bool, Option<Q>) {
    let a = Mat::from_fn(9, 1, |row, _| {
        if row / 3 == row % 3 {
            q(1)
        } else {
            q(0)
        }
    });
    match solve_affine(&a, ric.operator.entries()) {
        AffineSolution::Empty => (false, None),
        sol => (true, Some(sol.particular().unwrap()[0].clone())),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Triviality {
    Einstein(Q),
    Nontrivial,
    NoSoliton,
}

/// Einstein beats everything: if `Ric = c Id` is solvable the metric is a
/// trivial algebraic soliton even when larger solution families exist.
pub fn classify_triviality(sol: &SolitonSolution, _ric: &RicciData) -> Triviality {
    if let Some(c) = &sol.einstein_c {
        Triviality::Einstein(c.clone())
    } else if sol.status != SolitonStatus::None {
        Triviality::Nontrivial
    } else {
        Triviality::NoSoliton
    }
}

/// Exact solution set of the left-invariant Ricci soliton equation
/// `rho = c g + L_x g` in the unknowns `(c, x_1, x_2, x_3)`; six equations,
/// one per unordered frame pair.
#[derive(Clone, Debug, PartialEq)]
pub struct LeftInvariantSoliton {
    pub status: SolitonStatus,
    pub c: Option<Q>,
    pub x: Option<V3>,
    pub freedom: Vec<(Q, V3)>,
}

pub fn solve_left_invariant(g: &LieAlgebra3) -> LeftInvariantSoliton {
    let ric = ricci(g, &curvature(g, &levi_civita(g)));
    let lie: [Mat; 3] = std::array::from_fn(|a| {
        let mut e = [q(0), q(0), q(0)];
        e[a] = q(1);
        lie_derivative_metric(g, &e)
    });
    let index_pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let a = Mat::from_fn(6, 4, |row, col| {
        let (i, j) = index_pairs[row];
        if col == 0 {
            // frame metric g_ij = eps_i delta_ij
            if i == j {
                eps(i)
            } else {
                q(0)
            }
        } else {
            lie[col - 1].at(i, j).clone()
        }
    });
    let rhs: Vec<Q> = index_pairs
        .iter()
        .map(|&(i, j)| ric.rho.at(i, j).clone())
        .collect();
    match solve_affine(&a, &rhs) {
        AffineSolution::Empty => LeftInvariantSoliton {
            status: SolitonStatus::None,
            c: None,
            x: None,
            freedom: Vec::new(),
        },
        sol => {
            let p = sol.particular().unwrap();
            let freedom: Vec<(Q, V3)> = sol
                .kernel()
                .iter()
                .map(|k| (k[0].clone(), [k[1].clone(), k[2].clone(), k[3].clone()]))
                .collect();
            LeftInvariantSoliton {
                status: if freedom.is_empty() {
                    SolitonStatus::Unique
                } else {
                    SolitonStatus::Family
                },
                c: Some(p[0].clone()),
                x: Some([p[1].clone(), p[2].clone(), p[3].clone()]),
                freedom,
            }
        }
    }
}

/// Flow factor `exp(t/2 D)` for the canonical soliton derivation; exact when
/// `D/2` is nilpotent. Panics when called on an empty solution.
pub fn flow_factor(sol: &SolitonSolution, t: &Q) -> MatExp {
    let d = sol
        .d
        .as_ref()
        .expect("flow_factor requires a solution (status != none)");
    mat_exp(&d.scale(&qr(1, 2)), t)
}

/// Exact bracket-preservation check: `a [e_i, e_j] = [a e_i, a e_j]` on all
/// frame pairs. Panics on singular `a`.
pub fn check_automorphism(g: &LieAlgebra3, a: &Mat) -> bool {
    assert!(!a.det().is_zero(), "check_automorphism requires invertible a");
    for &(i, j) in PAIRS.iter() {
        let lhs = a.mul_vec(&g.bracket_basis(i, j));
        let col = |c: usize| -> V3 { std::array::from_fn(|r| a.at(r, c).clone()) };
        let rhs = g.bracket(&col(i), &col(j));
        if lhs.iter().zip(rhs.iter()).any(|(x, y)| x != y) {
            return false;
        }
    }
    true
}

/// Float-path variant for non-polynomial flow factors.
pub fn check_automorphism_f64(g: &LieAlgebra3, a: &FMat, tol: f64) -> bool {
    assert_eq!(a.dim(), 3);
    let det = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1))
        - a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0))
        + a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
    assert!(det.abs() > 0.0, "check_automorphism requires invertible a");
    let cf: Vec<[f64; 3]> = (0..3)
        .map(|p| {
            let (i, j) = PAIRS[p];
            std::array::from_fn(|k| {
                crate::exact::rational_to_f64(&g.structure_constant(k, i, j))
            })
        })
        .collect();
    let bracket = |x: &[f64; 3], y: &[f64; 3]| -> [f64; 3] {
        let mut out = [0.0; 3];
        for (p, &(i, j)) in PAIRS.iter().enumerate() {
            let w = x[i] * y[j] - x[j] * y[i];
            for k in 0..3 {
                out[k] += w * cf[p][k];
            }
        }
        out
    };
    for &(i, j) in PAIRS.iter() {
        let cij = cf[PAIRS.iter().position(|&p| p == (i, j)).unwrap()];
        let lhs: [f64; 3] =
            std::array::from_fn(|r| (0..3).map(|c| a.at(r, c) * cij[c]).sum());
        let col = |c: usize| -> [f64; 3] { std::array::from_fn(|r| a.at(r, c)) };
        let rhs = bracket(&col(i), &col(j));
        for k in 0..3 {
            if (lhs[k] - rhs[k]).abs() > tol {
                return false;
            }
        }
    }
    true
}
