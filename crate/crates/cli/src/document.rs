//! The JSON algebra document: either raw brackets in the fixed frame or a
//! family/params block, with rationals as `"p/q"` strings or plain integers.

use crate::CliError;
use ricci3::exact::{Q, V3};
use ricci3::families::{build, Family, FamilySpec};
use ricci3::liealg::{jacobi_check, jacobi_defect, LieAlgebra3, SIGNATURE};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A rational literal: `"p/q"`, `"p"`, or a bare JSON integer.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum RatLit {
    Int(i64),
    Str(String),
}

impl RatLit {
    pub fn parse(&self) -> Result<Q, CliError> {
        match self {
            RatLit::Int(n) => Ok(ricci3::exact::q(*n)),
            RatLit::Str(s) => s
                .trim()
                .parse::<Q>()
                .map_err(|e| CliError::input(format!("bad rational literal `{s}`: {e}"))),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Q, String> {
    s.trim()
        .parse::<Q>()
        .map_err(|e| format!("bad rational `{s}`: {e}"))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub signature: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<BTreeMap<String, [RatLit; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, RatLit>>,
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::input(format!("document does not parse: {e}")))
    }

    /// Validate and produce the algebra (plus the family spec when the
    /// document used the family form).
    pub fn resolve(&self) -> Result<(LieAlgebra3, Option<FamilySpec>), CliError> {
        if self.signature != SIGNATURE.to_vec() {
            return Err(CliError::input(format!(
                "signature must be {:?} (e3 timelike), got {:?}",
                SIGNATURE, self.signature
            )));
        }
        match (&self.brackets, &self.family) {
            (Some(_), Some(_)) => Err(CliError::input(
                "document must contain exactly one of `brackets` or `family`, not both",
            )),
            (None, None) => Err(CliError::input(
                "document must contain one of `brackets` or `family`",
            )),
            (Some(brackets), None) => {
                if self.params.is_some() {
                    return Err(CliError::input("`params` requires the `family` form"));
                }
                let get = |key: &str| -> Result<V3, CliError> {
                    let lit = brackets.get(key).ok_or_else(|| {
                        CliError::input(format!("brackets map is missing pair \"{key}\""))
                    })?;
                    Ok([lit[0].parse()?, lit[1].parse()?, lit[2].parse()?])
                };
                let c12 = get("12")?;
                let c13 = get("13")?;
                let c23 = get("23")?;
                if let Some(extra) = brackets.keys().find(|k| !["12", "13", "23"].contains(&k.as_str())) {
                    return Err(CliError::input(format!(
                        "unexpected bracket pair \"{extra}\" (expected 12, 13, 23)"
                    )));
                }
                let g = LieAlgebra3::new(c12, c13, c23);
                if !jacobi_check(&g) {
                    let defect = jacobi_defect(&g);
                    return Err(CliError::input(format!(
                        "Jacobi identity fails: [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = \
                         ({}) e1 + ({}) e2 + ({}) e3 != 0",
                        defect[0], defect[1], defect[2]
                    )));
                }
                Ok((g, None))
            }
            (None, Some(name)) => {
                let family: Family = name
                    .parse()
                    .map_err(|e: String| CliError::input(e))?;
                let empty = BTreeMap::new();
                let params = self.params.as_ref().unwrap_or(&empty);
                let spec = spec_from_params(family, params)?;
                let g = build(&spec).map_err(|e| CliError::input(e.to_string()))?;
                Ok((g, Some(spec)))
            }
        }
    }
}

pub fn spec_from_params(
    family: Family,
    params: &BTreeMap<String, RatLit>,
) -> Result<FamilySpec, CliError> {
    let mut spec = FamilySpec::g3(ricci3::exact::q(0), ricci3::exact::q(0), ricci3::exact::q(0));
    spec.family = family;
    for (key, lit) in params {
        let value = lit.parse()?;
        match key.as_str() {
            "alpha" => spec.alpha = value,
            "beta" => spec.beta = value,
            "gamma" => spec.gamma = value,
            "delta" => spec.delta = value,
            "eta" => spec.eta = value,
            other => {
                return Err(CliError::input(format!(
                    "unknown parameter `{other}` (expected alpha, beta, gamma, delta, eta)"
                )))
            }
        }
    }
    spec.validate().map_err(|e| CliError::input(e.to_string()))?;
    Ok(spec)
}
