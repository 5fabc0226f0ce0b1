//! The seven parametric families of three-dimensional Lorentzian Lie
//! algebras in their pseudo-orthonormal normal forms, constraint validation,
//! the classification predicate for non-trivial algebraic Ricci solitons,
//! and group identification via the sign-pattern tables.

use crate::exact::{q, Q, V3};
use crate::liealg::LieAlgebra3;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::G1,
        Family::G2,
        Family::G3,
        Family::G4,
        Family::G5,
        Family::G6,
        Family::G7,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::G1 => "g1",
            Family::G2 => "g2",
            Family::G3 => "g3",
            Family::G4 => "g4",
            Family::G5 => "g5",
            Family::G6 => "g6",
            Family::G7 => "g7",
        }
    }

    /// Parameter names the family actually uses, in CLI/CSV order.
    pub fn used_params(&self) -> &'static [&'static str] {
        match self {
            Family::G1 => &["alpha", "beta"],
            Family::G2 | Family::G3 => &["alpha", "beta", "gamma"],
            Family::G4 => &["alpha", "beta", "eta"],
            Family::G5 | Family::G6 | Family::G7 => &["alpha", "beta", "gamma", "delta"],
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "g1" => Ok(Family::G1),
            "g2" => Ok(Family::G2),
            "g3" => Ok(Family::G3),
            "g4" => Ok(Family::G4),
            "g5" => Ok(Family::G5),
            "g6" => Ok(Family::G6),
            "g7" => Ok(Family::G7),
            other => Err(format!("unknown family `{other}` (expected g1..g7)")),
        }
    }
}

/// A family member. Parameters the family does not use stay zero (`eta`
/// defaults to +1 and only matters for G4).
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub alpha: Q,
    pub beta: Q,
    pub gamma: Q,
    pub delta: Q,
    pub eta: Q,
}

/// A family side condition that the supplied parameters violate.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintViolation {
    pub family: Family,
    pub condition: &'static str,
}

impl std::fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "family {}: violated constraint: {}",
            self.family, self.condition
        )
    }
}

impl std::error::Error for ConstraintViolation {}

impl FamilySpec {
    fn base(family: Family) -> Self {
        FamilySpec {
            family,
            alpha: q(0),
            beta: q(0),
            gamma: q(0),
            delta: q(0),
            eta: q(1),
        }
    }

    pub fn g1(alpha: Q, beta: Q) -> Self {
        FamilySpec {
            alpha,
            beta,
            ..Self::base(Family::G1)
        }
    }

    pub fn g2(alpha: Q, beta: Q, gamma: Q) -> Self {
        FamilySpec {
            alpha,
            beta,
            gamma,
            ..Self::base(Family::G2)
        }
    }

    pub fn g3(alpha: Q, beta: Q, gamma: Q) -> Self {
        FamilySpec {
            alpha,
            beta,
            gamma,
            ..Self::base(Family::G3)
        }
    }

    pub fn g4(alpha: Q, beta: Q, eta: Q) -> Self {
        FamilySpec {
            alpha,
            beta,
            eta,
            ..Self::base(Family::G4)
        }
    }

    pub fn g5(alpha: Q, beta: Q, gamma: Q, delta: Q) -> Self {
        FamilySpec {
            alpha,
            beta,
            gamma,
            delta,
            ..Self::base(Family::G5)
        }
    }

    pub fn g6(alpha: Q, beta: Q, gamma: Q, delta: Q) -> Self {
        FamilySpec {
            alpha,
            beta,
            gamma,
            delta,
            ..Self::base(Family::G6)
        }
    }

    pub fn g7(alpha: Q, beta: Q, gamma: Q, delta: Q) -> Self {
        FamilySpec {
            alpha,
            beta,
            gamma,
            delta,
            ..Self::base(Family::G7)
        }
    }

    pub fn param(&self, name: &str) -> Option<&Q> {
        match name {
            "alpha" => Some(&self.alpha),
            "beta" => Some(&self.beta),
            "gamma" => Some(&self.gamma),
            "delta" => Some(&self.delta),
            "eta" => Some(&self.eta),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<(), ConstraintViolation> {
        let fail = |condition| {
            Err(ConstraintViolation {
                family: self.family,
                condition,
            })
        };
        match self.family {
            Family::G1 => {
                if self.alpha.is_zero() {
                    return fail("alpha != 0");
                }
            }
            Family::G2 => {
                if self.gamma.is_zero() {
                    return fail("gamma != 0");
                }
            }
            Family::G3 => {}
            Family::G4 => {
                if self.eta != q(1) && self.eta != q(-1) {
                    return fail("eta in {+1, -1}");
                }
            }
            Family::G5 => {
                if (&self.alpha + &self.delta).is_zero() {
                    return fail("alpha + delta != 0");
                }
                if !(&self.alpha * &self.gamma + &self.beta * &self.delta).is_zero() {
                    return fail("alpha*gamma + beta*delta = 0");
                }
            }
            Family::G6 => {
                if (&self.alpha + &self.delta).is_zero() {
                    return fail("alpha + delta != 0");
                }
                if !(&self.alpha * &self.gamma - &self.beta * &self.delta).is_zero() {
                    return fail("alpha*gamma - beta*delta = 0");
                }
            }
            Family::G7 => {
                if (&self.alpha + &self.delta).is_zero() {
                    return fail("alpha + delta != 0");
                }
                if !(&self.alpha * &self.gamma).is_zero() {
                    return fail("alpha*gamma = 0");
                }
            }
        }
        Ok(())
    }
}

/// Structure constants for a validated family member.
pub fn build(spec: &FamilySpec) -> Result<LieAlgebra3, ConstraintViolation> {
    spec.validate()?;
    let (al, be, ga, de) = (&spec.alpha, &spec.beta, &spec.gamma, &spec.delta);
    let z = Q::zero;
    let g = match spec.family {
        // [e1,e2] = a e1 - b e3, [e1,e3] = -a e1 - b e2, [e2,e3] = b e1 + a e2 + a e3
        Family::G1 => LieAlgebra3::new(
            [al.clone(), z(), -be],
            [-al, -be, z()],
            [be.clone(), al.clone(), al.clone()],
        ),
        // [e1,e2] = g e2 - b e3, [e1,e3] = -b e2 - g e3, [e2,e3] = a e1
        Family::G2 => LieAlgebra3::new(
            [z(), ga.clone(), -be],
            [z(), -be, -ga],
            [al.clone(), z(), z()],
        ),
        // [e1,e2] = -g e3, [e1,e3] = -b e2, [e2,e3] = a e1
        Family::G3 => LieAlgebra3::new(
            [z(), z(), -ga],
            [z(), -be, z()],
            [al.clone(), z(), z()],
        ),
        // [e1,e2] = -e2 + (2 eta - b) e3, [e1,e3] = -b e2 + e3, [e2,e3] = a e1
        Family::G4 => LieAlgebra3::new(
            [z(), q(-1), q(2) * &spec.eta - be],
            [z(), -be, q(1)],
            [al.clone(), z(), z()],
        ),
        // [e1,e2] = 0, [e1,e3] = a e1 + b e2, [e2,e3] = g e1 + d e2
        Family::G5 => LieAlgebra3::new(
            [z(), z(), z()],
            [al.clone(), be.clone(), z()],
            [ga.clone(), de.clone(), z()],
        ),
        // [e1,e2] = a e2 + b e3, [e1,e3] = g e2 + d e3, [e2,e3] = 0
        Family::G6 => LieAlgebra3::new(
            [z(), al.clone(), be.clone()],
            [z(), ga.clone(), de.clone()],
            [z(), z(), z()],
        ),
        // [e1,e2] = -a e1 - b e2 - b e3, [e1,e3] = a e1 + b e2 + b e3,
        // [e2,e3] = g e1 + d e2 + d e3
        Family::G7 => LieAlgebra3::new(
            [-al, -be, -be],
            [al.clone(), be.clone(), be.clone()],
            [ga.clone(), de.clone(), de.clone()],
        ),
    };
    debug_assert!(crate::liealg::jacobi_check(&g));
    Ok(g)
}

/// Outcome of the hand-coded classification predicate.
///
/// `has_nontrivial` transcribes the classification theorem's bullet list.
/// For G3 the printed bullets pin sign-normalized representatives
/// (e.g. `alpha > 0`); points reachable from a bullet by a frame isometry
/// (sign flips, the e1/e2 swap) carry the same soliton and are reported with
/// an `[isometric image]` marker. For G5/G6 the bullets are kept literal even
/// where they overlap Einstein cases; `einstein` tells those apart.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub has_nontrivial: bool,
    pub branch: Option<String>,
    /// Predicted: the metric is Einstein (`Ric = c Id`).
    pub einstein: bool,
    /// Predicted: some algebraic Ricci soliton (trivial or not) exists.
    pub exists: bool,
}

/// Evaluate the classification conditions from the parameters alone, with no
/// linear algebra; the solver cross-validates this on sweeps.
pub fn theorem_predicate(spec: &FamilySpec) -> Classification {
    debug_assert!(spec.validate().is_ok());
    let (al, be, ga, de) = (&spec.alpha, &spec.beta, &spec.gamma, &spec.delta);
    let (has_nontrivial, branch, einstein) = match spec.family {
        Family::G1 => (
            be.is_zero(),
            "G1 with beta = 0".to_string(),
            false,
        ),
        Family::G2 => (
            al.is_zero() && be.is_zero(),
            "G2 with alpha = beta = 0".to_string(),
            false,
        ),
        Family::G3 => return classify_g3(spec),
        Family::G4 => (
            false,
            String::new(),
            al.is_zero() && be == &spec.eta,
        ),
        Family::G5 => {
            let off_axis = !(be.is_zero() && ga.is_zero());
            let balance = al * al + be * be == ga * ga + de * de;
            let nontrivial = if off_axis {
                balance
            } else {
                true // (beta, gamma) = (0, 0) bullet
            };
            let branch = if off_axis {
                "G5 with (beta,gamma) != (0,0) and alpha^2 + beta^2 = gamma^2 + delta^2"
            } else {
                "G5 with (beta,gamma) = (0,0)"
            };
            let einstein = balance && (al * (al - de) + be * (be + ga)).is_zero();
            (nontrivial, branch.to_string(), einstein)
        }
        Family::G6 => {
            let off_axis = !(be.is_zero() && ga.is_zero());
            let balance = al * al - be * be == de * de - ga * ga;
            let nontrivial = if off_axis { balance } else { true };
            let branch = if off_axis {
                "G6 with (beta,gamma) != (0,0) and alpha^2 - beta^2 = delta^2 - gamma^2"
            } else {
                "G6 with (beta,gamma) = (0,0)"
            };
            let einstein = balance && (de * (al - de) + ga * (ga - be)).is_zero();
            (nontrivial, branch.to_string(), einstein)
        }
        Family::G7 => (
            ga.is_zero(),
            "G7 with gamma = 0".to_string(),
            ga.is_zero() && (al * (al - de)).is_zero(),
        ),
    };
    Classification {
        branch: has_nontrivial.then_some(branch),
        has_nontrivial,
        einstein,
        exists: has_nontrivial || einstein,
    }
}

fn classify_g3(spec: &FamilySpec) -> Classification {
    let (al, be, ga) = (&spec.alpha, &spec.beta, &spec.gamma);
    // Einstein iff Ric is scalar: (alpha = beta or gamma = alpha + beta)
    // and (beta = gamma or alpha = beta + gamma).
    let einstein = (al == be || ga == &(al + be)) && (be == ga || al == &(be + ga));

    let nonzero = [!al.is_zero(), !be.is_zero(), !ga.is_zero()];
    let count = nonzero.iter().filter(|b| **b).count();
    let literal = |cond: bool, text: &str| {
        if cond {
            text.to_string()
        } else {
            format!("{text} [isometric image]")
        }
    };
    let branch: Option<String> = match (count, nonzero) {
        (1, [true, _, _]) => Some(literal(
            al.is_positive(),
            "G3 with beta = gamma = 0 and alpha > 0",
        )),
        (1, [_, _, true]) => Some(literal(
            ga.is_negative(),
            "G3 with gamma < 0 and alpha = beta = 0",
        )),
        (1, [_, true, _]) => {
            // the e1/e2 swap carries this to the alpha-axis bullet
            Some("G3 with beta = gamma = 0 and alpha > 0 [isometric image]".to_string())
        }
        (2, [true, true, false]) if *be == -al => Some(literal(
            be.is_negative(),
            "G3 with gamma = 0 and beta = -alpha < 0",
        )),
        (2, [true, false, true]) if *ga == -al => Some(literal(
            ga.is_negative(),
            "G3 with beta = 0 and gamma = -alpha < 0",
        )),
        (2, [false, true, true]) if *ga == -be => {
            Some("G3 with beta = 0 and gamma = -alpha < 0 [isometric image]".to_string())
        }
        _ => None,
    };
    let has_nontrivial = branch.is_some();
    Classification {
        has_nontrivial,
        branch,
        einstein,
        exists: has_nontrivial || einstein,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

fn sign(x: &Q) -> Sign {
    if x.is_zero() {
        Sign::Zero
    } else if x.is_positive() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Group identification from the printed sign-pattern tables. Patterns the
/// tables do not list come back as "unlisted" rather than a guess; the
/// non-unimodular families have no table at all.
pub fn group_name(spec: &FamilySpec) -> String {
    use Sign::*;
    match spec.family {
        Family::G1 => if spec.beta.is_zero() {
            "E(1,1)"
        } else {
            "O(1,2) or SL(2,R)"
        }
        .to_string(),
        Family::G2 => if spec.alpha.is_zero() {
            "E(1,1)"
        } else {
            "O(1,2) or SL(2,R)"
        }
        .to_string(),
        Family::G3 => {
            let pattern = (sign(&spec.alpha), sign(&spec.beta), sign(&spec.gamma));
            match pattern {
                (Pos, Pos, Pos) | (Pos, Neg, Neg) => "O(1,2) or SL(2,R)",
                (Pos, Pos, Neg) => "SO(3) or SU(2)",
                (Pos, Pos, Zero) | (Pos, Zero, Neg) => "E(2)",
                (Pos, Neg, Zero) | (Pos, Zero, Pos) => "E(1,1)",
                (Pos, Zero, Zero) | (Zero, Zero, Neg) => "H3",
                (Zero, Zero, Zero) => "R^3",
                _ => "unlisted",
            }
            .to_string()
        }
        Family::G4 => {
            let beta_is_eta = spec.beta == spec.eta;
            match (sign(&spec.alpha), beta_is_eta) {
                (Zero, true) => "H3",
                (Pos, true) => "E(2)",
                (Neg, true) => "E(1,1)",
                (Zero, false) => "E(1,1)",
                (Pos | Neg, false) => "O(1,2) or SL(2,R)",
            }
            .to_string()
        }
        Family::G5 | Family::G6 | Family::G7 => "non-unimodular (no table)".to_string(),
    }
}

/// Frame basis vector as coordinates, handy when phrasing witnesses.
pub fn basis_vector(i: usize) -> V3 {
    let mut v = [q(0), q(0), q(0)];
    v[i] = q(1);
    v
}
