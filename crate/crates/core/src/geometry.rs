//! Left-invariant Lorentzian geometry in the frame: Levi-Civita connection
//! via the Koszul formula, curvature with the sign convention
//! `R_{X,Y} = nabla_[X,Y] - [nabla_X, nabla_Y]`, Ricci tensor/operator,
//! scalar curvature, and the Lie derivative of the metric along
//! left-invariant fields.
//!
//! Components are stored as `R_{ijkl} = g(R(e_i,e_j) e_k, e_l)`; that is the
//! unique index placement consistent with the tabulated `R_1212 =
//! -2 alpha^2 - beta^2/4` on the first unimodular family.

use crate::exact::{v3_add, v3_scale, v3_zero, Mat, Q, V3};
use crate::liealg::{eps, jacobi_check, LieAlgebra3};
use num_traits::Zero;

/// Connection coefficients `Gamma^k_{ij}` with `nabla_{e_i} e_j =
/// sum_k Gamma^k_{ij} e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection {
    gamma: [[V3; 3]; 3],
}

impl Connection {
    pub fn from_table(gamma: [[V3; 3]; 3]) -> Self {
        Connection { gamma }
    }

    /// Coordinates of `nabla_{e_i} e_j`.
    pub fn nabla(&self, i: usize, j: usize) -> &V3 {
        &self.gamma[i][j]
    }

    pub fn coefficient(&self, k: usize, i: usize, j: usize) -> &Q {
        &self.gamma[i][j][k]
    }

    /// `nabla_x v` for coordinate vectors (left-invariant fields have
    /// constant frame coefficients, so this is bilinear).
    pub fn derive(&self, x: &V3, v: &V3) -> V3 {
        let mut out = v3_zero();
        for i in 0..3 {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if v[j].is_zero() {
                    continue;
                }
                let w = &x[i] * &v[j];
                out = v3_add(&out, &v3_scale(&w, &self.gamma[i][j]));
            }
        }
        out
    }
}

/// The unique torsion-free metric-compatible connection, from the Koszul
/// formula specialized to left-invariant fields:
/// `2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)`.
pub fn levi_civita(g: &LieAlgebra3) -> Connection {
    assert!(jacobi_check(g), "levi_civita requires a Lie algebra");
    let two = crate::exact::q(2);
    let gamma = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                let t1 = eps(k) * g.structure_constant(k, i, j);
                let t2 = eps(i) * g.structure_constant(i, j, k);
                let t3 = eps(j) * g.structure_constant(j, k, i);
                (t1 - t2 + t3) / (&two * eps(k))
            })
        })
    });
    Connection { gamma }
}

/// Covariant curvature components `R_{ijkl}`, stored densely; 81 entries is
/// nothing in dimension three and dense storage keeps indexing mistakes out.
#[derive(Clone, Debug, PartialEq)]
pub struct Curvature {
    r: Vec<Q>,
}

impl Curvature {
    pub fn at(&self, i: usize, j: usize, k: usize, l: usize) -> &Q {
        &self.r[((i * 3 + j) * 3 + k) * 3 + l]
    }

    /// The six independent pair components (12,12), (12,13), (12,23),
    /// (13,13), (13,23), (23,23) in that order.
    pub fn pair_components(&self) -> [(&'static str, Q); 6] {
        [
            ("1212", self.at(0, 1, 0, 1).clone()),
            ("1213", self.at(0, 1, 0, 2).clone()),
            ("1223", self.at(0, 1, 1, 2).clone()),
            ("1313", self.at(0, 2, 0, 2).clone()),
            ("1323", self.at(0, 2, 1, 2).clone()),
            ("2323", self.at(1, 2, 1, 2).clone()),
        ]
    }
}

/// Curvature of the connection, `R(e_i,e_j) e_k = nabla_{[e_i,e_j]} e_k
/// - nabla_{e_i} nabla_{e_j} e_k + nabla_{e_j} nabla_{e_i} e_k`, lowered with
/// the frame metric.
pub fn curvature(g: &LieAlgebra3, conn: &Connection) -> Curvature {
    let mut r = Vec::with_capacity(81);
    let basis: [V3; 3] = std::array::from_fn(|i| {
        let mut v = v3_zero();
        v[i] = crate::exact::q(1);
        v
    });
    for i in 0..3 {
        for j in 0..3 {
            let cij = g.bracket_basis(i, j);
            for k in 0..3 {
                let term1 = conn.derive(&cij, &basis[k]);
                let term2 = conn.derive(&basis[i], conn.nabla(j, k));
                let term3 = conn.derive(&basis[j], conn.nabla(i, k));
                for l in 0..3 {
                    r.push(eps(l) * (&term1[l] - &term2[l] + &term3[l]));
                }
            }
        }
    }
    Curvature { r }
}

/// Ricci tensor, Ricci operator and scalar curvature.
///
/// `rho_{ij} = sum_k eps_k R_{ikjk}`; the operator raises the first index,
/// `M_{ij} = eps_i rho_{ij}`, and is g-self-adjoint rather than symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct RicciData {
    pub rho: Mat,
    pub operator: Mat,
    pub scalar: Q,
}

pub fn ricci(_g: &LieAlgebra3, curv: &Curvature) -> RicciData {
    let rho = Mat::from_fn(3, 3, |i, j| {
        (0..3).map(|k| eps(k) * curv.at(i, k, j, k)).sum()
    });
    let operator = Mat::from_fn(3, 3, |i, j| eps(i) * rho.at(i, j));
    let scalar = operator.trace();
    RicciData {
        rho,
        operator,
        scalar,
    }
}

/// `(L_x g)_{ij} = -g([x,e_i],e_j) - g(e_i,[x,e_j])` for a left-invariant
/// field with frame coordinates `x`; symmetric and linear in `x`.
pub fn lie_derivative_metric(g: &LieAlgebra3, x: &V3) -> Mat {
    let basis: [V3; 3] = std::array::from_fn(|i| {
        let mut v = v3_zero();
        v[i] = crate::exact::q(1);
        v
    });
    let images: [V3; 3] = std::array::from_fn(|i| g.bracket(x, &basis[i]));
    Mat::from_fn(3, 3, |i, j| -(eps(j) * &images[i][j]) - eps(i) * &images[j][i])
}
