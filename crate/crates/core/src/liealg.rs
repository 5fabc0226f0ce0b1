//! Lie algebra structure in the fixed pseudo-orthonormal frame: Jacobi
//! validation, adjoint maps, unimodularity, the unimodular kernel, derivation
//! algebras and inner-derivation witnesses.

use crate::exact::{nullspace, q, solve_affine, v3_is_zero, v3_zero, AffineSolution, Mat, Q, V3};
use num_traits::Zero;

/// Frame signature: e1, e2 spacelike, e3 timelike.
pub const SIGNATURE: [i64; 3] = [1, 1, -1];

/// Basis index pairs (i, j) with i < j, in the order the structure constants
/// are stored.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

pub fn eps(i: usize) -> Q {
    q(SIGNATURE[i])
}

/// Lorentzian frame inner product of coordinate vectors.
pub fn metric_inner(x: &V3, y: &V3) -> Q {
    (0..3).map(|i| eps(i) * &x[i] * &y[i]).sum()
}

/// Three-dimensional Lie algebra given by structure constants in the frame:
/// `[e_i, e_j] = sum_k C^k_{ij} e_k`. Only the pairs i < j are stored, so
/// antisymmetry holds by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra3 {
    brackets: [V3; 3],
}

impl LieAlgebra3 {
    /// Brackets for the pairs (e1,e2), (e1,e3), (e2,e3).
    pub fn new(c12: V3, c13: V3, c23: V3) -> Self {
        LieAlgebra3 {
            brackets: [c12, c13, c23],
        }
    }

    pub fn abelian() -> Self {
        LieAlgebra3::new(v3_zero(), v3_zero(), v3_zero())
    }

    /// Coordinates of `[e_i, e_j]` for any i, j.
    pub fn bracket_basis(&self, i: usize, j: usize) -> V3 {
        if i == j {
            return v3_zero();
        }
        for (p, &(a, b)) in PAIRS.iter().enumerate() {
            if (a, b) == (i, j) {
                return self.brackets[p].clone();
            }
            if (a, b) == (j, i) {
                return std::array::from_fn(|k| -&self.brackets[p][k]);
            }
        }
        unreachable!("indices out of range")
    }

    /// `C^k_{ij}`.
    pub fn structure_constant(&self, k: usize, i: usize, j: usize) -> Q {
        self.bracket_basis(i, j)[k].clone()
    }

    /// Coordinates of `[x, y]` for coordinate vectors x, y.
    pub fn bracket(&self, x: &V3, y: &V3) -> V3 {
        let mut out = v3_zero();
        for (p, &(i, j)) in PAIRS.iter().enumerate() {
            // coefficient of C_{ij} in [x, y] is x_i y_j - x_j y_i
            let w = &x[i] * &y[j] - &x[j] * &y[i];
            if w.is_zero() {
                continue;
            }
            for k in 0..3 {
                out[k] += &w * &self.brackets[p][k];
            }
        }
        out
    }

    /// Multiply every structure constant by `s` (still a Lie algebra:
    /// the Jacobi sum scales by s^2).
    pub fn scaled(&self, s: &Q) -> LieAlgebra3 {
        LieAlgebra3 {
            brackets: std::array::from_fn(|p| {
                std::array::from_fn(|k| s * &self.brackets[p][k])
            }),
        }
    }
}

/// The cyclic Jacobi sum `[[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]`.
/// In dimension three this single triple decides the identity.
pub fn jacobi_defect(g: &LieAlgebra3) -> V3 {
    let e: [V3; 3] = std::array::from_fn(|i| {
        let mut v = v3_zero();
        v[i] = q(1);
        v
    });
    let mut sum = v3_zero();
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let inner = g.bracket(&e[i], &e[j]);
        let outer = g.bracket(&inner, &e[k]);
        sum = crate::exact::v3_add(&sum, &outer);
    }
    sum
}

pub fn jacobi_check(g: &LieAlgebra3) -> bool {
    v3_is_zero(&jacobi_defect(g))
}

/// Matrix of `ad(x) = [x, .]` in the frame (columns are `[x, e_j]`).
pub fn ad(g: &LieAlgebra3, x: &V3) -> Mat {
    let mut m = Mat::zeros(3, 3);
    for j in 0..3 {
        let mut ej = v3_zero();
        ej[j] = q(1);
        let col = g.bracket(x, &ej);
        for k in 0..3 {
            *m.at_mut(k, j) = col[k].clone();
        }
    }
    m
}

/// Trace of `ad(e_i)` for each basis vector, i.e. the unimodularity
/// functional in frame coordinates.
fn trace_functional(g: &LieAlgebra3) -> V3 {
    std::array::from_fn(|i| {
        let mut ei = v3_zero();
        ei[i] = q(1);
        ad(g, &ei).trace()
    })
}

pub fn is_unimodular(g: &LieAlgebra3) -> bool {
    trace_functional(g).iter().all(Q::is_zero)
}

/// Basis of the unimodular kernel `{ x : tr ad(x) = 0 }`; all of g when the
/// algebra is unimodular, a 2-dimensional ideal otherwise.
pub fn unimodular_kernel(g: &LieAlgebra3) -> Vec<V3> {
    let t = trace_functional(g);
    let row = Mat::from_fn(1, 3, |_, c| t[c].clone());
    nullspace(&row)
        .into_iter()
        .map(|v| [v[0].clone(), v[1].clone(), v[2].clone()])
        .collect()
}

/// Basis of `Der(g)` as 3x3 matrices, from the exact kernel of the linear map
/// `D -> (D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j])_{i<j}`. Unknowns are the
/// nine matrix entries in row-major order, so the reported basis is
/// RREF-canonical in that ordering.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivationSpace {
    pub basis: Vec<Mat>,
    pub algebra: LieAlgebra3,
}

impl DerivationSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Linear combination `sum_i coeffs[i] basis[i]`.
    pub fn combine(&self, coeffs: &[Q]) -> Mat {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut out = Mat::zeros(3, 3);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out = out.add(&b.scale(c));
        }
        out
    }

    /// Whether `d` lies in the span of the computed basis.
    pub fn contains(&self, d: &Mat) -> bool {
        let mut rows: Vec<Vec<Q>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        let base_rank = Mat::from_rows(rows.clone()).rank();
        rows.push(d.entries().to_vec());
        Mat::from_rows(rows).rank() == base_rank
    }
}

/// Coefficient matrix of the derivation equations: rows indexed by
/// (pair, coordinate), columns by the entries of D in row-major order.
fn derivation_system(g: &LieAlgebra3) -> Mat {
    Mat::from_fn(9, 9, |row, col| {
        let (p, k) = (row / 3, row % 3);
        let (i, j) = PAIRS[p];
        let (a, b) = (col / 3, col % 3);
        // coefficient of D[a][b] in coordinate k of
        //   D [e_i, e_j] - [D e_i, e_j] - [e_i, D e_j]
        let mut coeff = Q::zero();
        if a == k {
            coeff += g.structure_constant(b, i, j);
        }
        if b == i {
            coeff -= g.structure_constant(k, a, j);
        }
        if b == j {
            coeff -= g.structure_constant(k, i, a);
        }
        coeff
    })
}

pub fn derivation_space(g: &LieAlgebra3) -> DerivationSpace {
    let basis = nullspace(&derivation_system(g))
        .into_iter()
        .map(|v| Mat::from_fn(3, 3, |r, c| v[3 * r + c].clone()))
        .collect();
    DerivationSpace {
        basis,
        algebra: g.clone(),
    }
}

/// Leibniz defect of `d` on all frame pairs; zero iff `d` is a derivation.
pub fn derivation_defect(g: &LieAlgebra3, d: &Mat) -> Vec<Q> {
    derivation_system(g).mul_vec(d.entries())
}

pub fn is_derivation(g: &LieAlgebra3, d: &Mat) -> bool {
    derivation_defect(g, d).iter().all(Q::is_zero)
}

/// Witness `x` with `ad(x) = d`, or `None` when `d` is outer. The witness is
/// the RREF-canonical particular solution; the full preimage coset (witness +
/// center) is not enumerated.
///
/// Panics if `d` is not a derivation.
pub fn is_inner(g: &LieAlgebra3, d: &Mat) -> Option<V3> {
    assert!(is_derivation(g, d), "is_inner requires d in Der(g)");
    // ad(x)[k][c] = sum_a x_a C^k_{ac}
    let a = Mat::from_fn(9, 3, |row, xa| {
        let (k, c) = (row / 3, row % 3);
        g.structure_constant(k, xa, c)
    });
    match solve_affine(&a, d.entries()) {
        AffineSolution::Empty => None,
        AffineSolution::Point(p) | AffineSolution::Family { particular: p, .. } => {
            Some([p[0].clone(), p[1].clone(), p[2].clone()])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qr;

    fn g1(alpha: i64, beta: i64) -> LieAlgebra3 {
        let (a, b) = (q(alpha), q(beta));
        LieAlgebra3::new(
            [a.clone(), q(0), -&b],
            [-&a, -&b, q(0)],
            [b.clone(), a.clone(), a.clone()],
        )
    }

    #[test]
    fn abelian_jacobi_and_unimodularity() {
        let g = LieAlgebra3::abelian();
        assert!(jacobi_check(&g));
        assert!(is_unimodular(&g));
        assert_eq!(unimodular_kernel(&g).len(), 3);
        assert_eq!(derivation_space(&g).dimension(), 9);
    }

    #[test]
    fn g1_satisfies_jacobi() {
        assert!(jacobi_check(&g1(1, 2)));
    }

    #[test]
    fn broken_brackets_fail_jacobi() {
        // [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = 0: cyclic sum = e2 != 0
        let g = LieAlgebra3::new(
            [q(1), q(0), q(0)],
            [q(0), q(1), q(0)],
            [q(0), q(0), q(0)],
        );
        assert!(!jacobi_check(&g));
        assert_eq!(jacobi_defect(&g), [q(0), q(1), q(0)]);
    }

    #[test]
    fn ad_of_zero_vanishes() {
        let g = g1(1, 1);
        assert!(ad(&g, &[q(0), q(0), q(0)]).is_zero());
    }

    #[test]
    fn ad_reads_off_brackets() {
        // g5: [e1,e3] = alpha e1 + beta e2, [e2,e3] = gamma e1 + delta e2.
        // ad(e3) e1 = -(alpha e1 + beta e2), ad(e3) e2 = -(gamma e1 + delta e2)
        let (al, be, ga, de) = (q(1), q(2), q(4), q(-2));
        let g5 = LieAlgebra3::new(
            [q(0), q(0), q(0)],
            [al.clone(), be.clone(), q(0)],
            [ga.clone(), de.clone(), q(0)],
        );
        let m = ad(&g5, &[q(0), q(0), q(1)]);
        assert_eq!(m.at(0, 0), &-&al);
        assert_eq!(m.at(1, 0), &-&be);
        assert_eq!(m.at(0, 1), &-&ga);
        assert_eq!(m.at(1, 1), &-&de);
        assert!(m.at(2, 0).is_zero() && m.at(2, 1).is_zero());
        // g3 with alpha = 1: ad(e2) e3 = e1
        let g3 = LieAlgebra3::new(
            [q(0), q(0), q(0)],
            [q(0), q(0), q(0)],
            [q(1), q(0), q(0)],
        );
        let m = ad(&g3, &[q(0), q(1), q(0)]);
        assert_eq!(m.at(0, 2), &q(1));
        assert_eq!(
            (0..3)
                .flat_map(|r| (0..3).map(move |c| (r, c)))
                .filter(|&(r, c)| !m.at(r, c).is_zero())
                .count(),
            1
        );
    }

    #[test]
    fn unimodularity_split() {
        assert!(is_unimodular(&g1(3, -2)));
        // g5 with alpha = delta = 1, beta = gamma = 0 is non-unimodular
        let g5 = LieAlgebra3::new(
            [q(0), q(0), q(0)],
            [q(1), q(0), q(0)],
            [q(0), q(1), q(0)],
        );
        assert!(!is_unimodular(&g5));
        let ker = unimodular_kernel(&g5);
        assert_eq!(ker.len(), 2);
        assert_eq!(ker[0], [q(1), q(0), q(0)]);
        assert_eq!(ker[1], [q(0), q(1), q(0)]);
        // g6 with alpha = delta = 1, beta = gamma = 0: kernel span{e2, e3}
        let g6 = LieAlgebra3::new(
            [q(0), q(1), q(0)],
            [q(0), q(0), q(1)],
            [q(0), q(0), q(0)],
        );
        let ker = unimodular_kernel(&g6);
        assert_eq!(ker.len(), 2);
        assert_eq!(ker[0], [q(0), q(1), q(0)]);
        assert_eq!(ker[1], [q(0), q(0), q(1)]);
    }

    #[test]
    fn derivation_dimensions_for_g1() {
        assert_eq!(derivation_space(&g1(1, 1)).dimension(), 3);
        assert_eq!(derivation_space(&g1(1, 0)).dimension(), 4);
    }

    #[test]
    fn derivation_basis_elements_are_derivations() {
        for g in [g1(1, 1), g1(2, -3), LieAlgebra3::abelian()] {
            let der = derivation_space(&g);
            for b in &der.basis {
                assert!(is_derivation(&g, b));
            }
        }
    }

    #[test]
    fn g1_beta_zero_derivation_parametrization_spans() {
        // Solutions of the derivation system at beta = 0:
        // [[l11, l21, -l21], [0, l22, l33], [0, l22, l33]]
        let g = g1(2, 0);
        let der = derivation_space(&g);
        let sample = |l11: i64, l21: i64, l22: i64, l33: i64| {
            Mat::from_i64([[l11, l21, -l21], [0, l22, l33], [0, l22, l33]])
        };
        for d in [sample(1, 0, 0, 0), sample(0, 1, 0, 0), sample(3, -2, 5, 7)] {
            assert!(is_derivation(&g, &d));
            assert!(der.contains(&d));
        }
    }

    #[test]
    fn inner_witness_for_g1_soliton_derivation() {
        let g = g1(1, 0);
        let d = Mat::from_i64([[0, 0, 0], [0, -2, 2], [0, -2, 2]]);
        let x = is_inner(&g, &d).expect("inner derivation");
        assert_eq!(x, [q(0), q(2), q(2)]);
        // and ad of the witness reproduces d
        assert_eq!(ad(&g, &x), d);
    }

    #[test]
    fn outer_derivation_on_g2() {
        // g2 with alpha = beta = 0, gamma = 1; D = diag(0, 2, 2) is outer
        let g2 = LieAlgebra3::new(
            [q(0), q(1), q(0)],
            [q(0), q(0), q(-1)],
            [q(0), q(0), q(0)],
        );
        let d = Mat::from_i64([[0, 0, 0], [0, 2, 0], [0, 0, 2]]);
        assert!(is_derivation(&g2, &d));
        assert!(is_inner(&g2, &d).is_none());
    }

    #[test]
    fn zero_is_inner_with_zero_witness() {
        let g = g1(1, 1);
        let x = is_inner(&g, &Mat::zeros(3, 3)).expect("zero map is ad(0)");
        assert_eq!(x, [q(0), q(0), q(0)]);
    }

    #[test]
    fn metric_inner_signature() {
        let x = [q(1), q(2), q(3)];
        assert_eq!(metric_inner(&x, &x), q(1 + 4 - 9));
        assert_eq!(eps(2), q(-1));
    }

    #[test]
    fn scaled_brackets_scale_ad() {
        let g = g1(1, 2);
        let s = qr(3, 2);
        let gs = g.scaled(&s);
        let x = [q(1), q(-1), q(2)];
        assert_eq!(ad(&gs, &x), ad(&g, &x).scale(&s));
    }
}
