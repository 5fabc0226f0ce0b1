//! Deterministic random draws of rationals and valid family parameters, used
//! by the reproduction-check runner and the test suites. Numerators and
//! denominators stay small so exact arithmetic stays fast.

use crate::exact::{q, qr, Q};
use crate::families::{Family, FamilySpec};
use num_traits::Zero;
use rand::Rng;

pub fn random_q(rng: &mut impl Rng) -> Q {
    qr(rng.random_range(-6..=6), rng.random_range(1..=4))
}

pub fn random_q_nonzero(rng: &mut impl Rng) -> Q {
    loop {
        let x = random_q(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

fn random_sign(rng: &mut impl Rng) -> Q {
    if rng.random_bool(0.5) {
        q(1)
    } else {
        q(-1)
    }
}

/// A generic valid point of the family: parameters drawn freely except for
/// the family's side conditions. Zero values still occur with positive
/// probability since `random_q` hits 0.
pub fn random_spec(family: Family, rng: &mut impl Rng) -> FamilySpec {
    match family {
        Family::G1 => FamilySpec::g1(random_q_nonzero(rng), random_q(rng)),
        Family::G2 => FamilySpec::g2(random_q(rng), random_q(rng), random_q_nonzero(rng)),
        Family::G3 => FamilySpec::g3(random_q(rng), random_q(rng), random_q(rng)),
        Family::G4 => FamilySpec::g4(random_q(rng), random_q(rng), random_sign(rng)),
        Family::G5 => loop {
            // alpha*gamma + beta*delta = 0 by construction
            let spec = if rng.random_bool(0.5) {
                let alpha = random_q_nonzero(rng);
                let (beta, delta) = (random_q(rng), random_q(rng));
                let gamma = -(&beta * &delta) / &alpha;
                FamilySpec::g5(alpha, beta, gamma, delta)
            } else {
                FamilySpec::g5(random_q(rng), q(0), random_q(rng), random_q_nonzero(rng))
            };
            if spec.validate().is_ok() {
                return spec;
            }
        },
        Family::G6 => loop {
            let spec = if rng.random_bool(0.5) {
                let alpha = random_q_nonzero(rng);
                let (beta, delta) = (random_q(rng), random_q(rng));
                let gamma = (&beta * &delta) / &alpha;
                FamilySpec::g6(alpha, beta, gamma, delta)
            } else {
                FamilySpec::g6(random_q(rng), q(0), random_q(rng), random_q_nonzero(rng))
            };
            if spec.validate().is_ok() {
                return spec;
            }
        },
        Family::G7 => loop {
            let spec = if rng.random_bool(0.5) {
                FamilySpec::g7(q(0), random_q(rng), random_q(rng), random_q_nonzero(rng))
            } else {
                FamilySpec::g7(random_q(rng), random_q(rng), q(0), random_q(rng))
            };
            if spec.validate().is_ok() {
                return spec;
            }
        },
    }
}

/// A draw biased toward the classification's decision boundaries: zero
/// patterns, equalities, and the per-family soliton branches. Generic points
/// almost never satisfy the soliton conditions, so sweeps built only from
/// them would exercise one side of the predicate; this sampler hits both.
pub fn random_spec_stratified(family: Family, rng: &mut impl Rng) -> FamilySpec {
    if rng.random_bool(0.4) {
        return random_spec(family, rng);
    }
    match family {
        Family::G1 => {
            let alpha = random_q_nonzero(rng);
            let beta = if rng.random_bool(0.5) { q(0) } else { random_q(rng) };
            FamilySpec::g1(alpha, beta)
        }
        Family::G2 => {
            let gamma = random_q_nonzero(rng);
            match rng.random_range(0..4) {
                0 => FamilySpec::g2(q(0), q(0), gamma),
                1 => FamilySpec::g2(q(0), random_q(rng), gamma),
                2 => FamilySpec::g2(random_q(rng), q(0), gamma),
                _ => {
                    let beta = random_q(rng);
                    FamilySpec::g2(q(2) * &beta, beta, gamma)
                }
            }
        }
        Family::G3 => {
            let x = random_q_nonzero(rng);
            match rng.random_range(0..11) {
                0 => FamilySpec::g3(x, q(0), q(0)),
                1 => FamilySpec::g3(q(0), x, q(0)),
                2 => FamilySpec::g3(q(0), q(0), x),
                3 => FamilySpec::g3(x.clone(), -x, q(0)),
                4 => FamilySpec::g3(x.clone(), q(0), -x),
                5 => FamilySpec::g3(q(0), x.clone(), -x),
                6 => FamilySpec::g3(x.clone(), x.clone(), x),
                7 => FamilySpec::g3(x.clone(), x, q(0)),
                8 => FamilySpec::g3(x.clone(), q(0), x),
                9 => FamilySpec::g3(q(0), x.clone(), x),
                _ => FamilySpec::g3(q(0), q(0), q(0)),
            }
        }
        Family::G4 => {
            let eta = random_sign(rng);
            match rng.random_range(0..4) {
                0 => FamilySpec::g4(q(0), eta.clone(), eta),
                1 => FamilySpec::g4(q(0), random_q(rng), eta),
                2 => FamilySpec::g4(random_q_nonzero(rng), eta.clone(), eta),
                _ => {
                    let alpha = random_q_nonzero(rng);
                    FamilySpec::g4(alpha.clone(), alpha + &eta, eta)
                }
            }
        }
        Family::G5 => match rng.random_range(0..3) {
            0 => loop {
                let spec = FamilySpec::g5(random_q(rng), q(0), q(0), random_q(rng));
                if spec.validate().is_ok() {
                    return spec;
                }
            },
            1 => {
                let alpha = random_q_nonzero(rng);
                FamilySpec::g5(alpha.clone(), q(0), q(0), alpha)
            }
            _ => {
                // Einstein branch: delta = alpha, gamma = -beta
                let alpha = random_q_nonzero(rng);
                let beta = random_q_nonzero(rng);
                FamilySpec::g5(alpha.clone(), beta.clone(), -beta, alpha)
            }
        },
        Family::G6 => match rng.random_range(0..3) {
            0 => loop {
                let spec = FamilySpec::g6(random_q(rng), q(0), q(0), random_q(rng));
                if spec.validate().is_ok() {
                    return spec;
                }
            },
            1 => {
                let alpha = random_q_nonzero(rng);
                FamilySpec::g6(alpha.clone(), q(0), q(0), alpha)
            }
            _ => loop {
                // balanced branch: beta = s alpha, gamma = s delta
                let s = random_sign(rng);
                let (alpha, delta) = (random_q(rng), random_q(rng));
                let spec = FamilySpec::g6(alpha.clone(), &s * &alpha, &s * &delta, delta);
                if spec.validate().is_ok() && !(spec.beta.is_zero() && spec.gamma.is_zero()) {
                    return spec;
                }
            },
        },
        Family::G7 => match rng.random_range(0..4) {
            0 => loop {
                let spec = FamilySpec::g7(random_q(rng), random_q(rng), q(0), random_q(rng));
                if spec.validate().is_ok() {
                    return spec;
                }
            },
            1 => {
                let alpha = random_q_nonzero(rng);
                FamilySpec::g7(alpha.clone(), random_q(rng), q(0), alpha)
            }
            2 => FamilySpec::g7(random_q_nonzero(rng), random_q(rng), q(0), q(0)),
            _ => FamilySpec::g7(q(0), random_q(rng), random_q(rng), random_q_nonzero(rng)),
        },
    }
}
