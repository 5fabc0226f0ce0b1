//! The full pipeline report: algebra echo, connection, curvature, Ricci,
//! derivations, soliton results, classification and paper-table deviations.
//! Rationals serialize as strings, field order is fixed, and maps are
//! ordered, so identical inputs give byte-identical JSON.

use crate::document::{AlgebraDocument, RatLit};
use ricci3::exact::{rational_to_f64, Mat, MatExp, Q};
use ricci3::families::{group_name, theorem_predicate, Family, FamilySpec};
use ricci3::geometry::{curvature, levi_civita, ricci};
use ricci3::liealg::{derivation_space, is_unimodular, LieAlgebra3, PAIRS, SIGNATURE};
use ricci3::soliton::{
    flow_factor, solve_algebraic, solve_left_invariant, InnerFlag, SolitonStatus,
};
use ricci3::verify::{corrected_tables, printed_tables};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

fn rat(x: &Q) -> String {
    x.to_string()
}

fn vec3(v: &[Q; 3]) -> Vec<String> {
    v.iter().map(rat).collect()
}

fn matrix(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| rat(m.at(r, c))).collect())
        .collect()
}

/// 15 significant digits, deterministic across runs.
fn float15(x: f64) -> String {
    format!("{:.14e}", x)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraEcho {
    pub signature: Vec<i64>,
    pub brackets: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RicciReport {
    pub tensor: Vec<Vec<String>>,
    pub operator: Vec<Vec<String>>,
    pub scalar: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DerivationsReport {
    pub dimension: usize,
    pub basis: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InnerReport {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraicSolitonReport {
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<Vec<String>>>,
    pub freedom: Vec<FreedomEntry>,
    pub trivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub einstein_c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner: Option<InnerReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FreedomEntry {
    pub dc: String,
    pub dd: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorFreedomEntry {
    pub dc: String,
    pub dx: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LeftInvariantReport {
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<String>>,
    pub freedom: Vec<VectorFreedomEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub family: String,
    pub has_nontrivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    pub einstein: bool,
    pub exists: bool,
    pub group: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowReport {
    pub t: String,
    /// "polynomial" when D/2 is nilpotent and the matrix is exact in t.
    pub kind: String,
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub algebra: AlgebraEcho,
    pub unimodular: bool,
    pub connection: Vec<Vec<Vec<String>>>,
    pub curvature: BTreeMap<String, String>,
    pub ricci: RicciReport,
    pub derivations: DerivationsReport,
    pub algebraic_soliton: AlgebraicSolitonReport,
    pub left_invariant_soliton: LeftInvariantReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationReport>,
    pub deviations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flow: Option<FlowReport>,
}

pub fn build_report(
    g: &LieAlgebra3,
    spec: Option<&FamilySpec>,
    flow_t: Option<&Q>,
) -> Report {
    let conn = levi_civita(g);
    let curv = curvature(g, &conn);
    let ric = ricci(g, &curv);
    let der = derivation_space(g);
    let sol = solve_algebraic(g);
    let li = solve_left_invariant(g);

    let mut brackets = BTreeMap::new();
    for &(i, j) in PAIRS.iter() {
        brackets.insert(format!("{}{}", i + 1, j + 1), vec3(&g.bracket_basis(i, j)));
    }
    let algebra = AlgebraEcho {
        signature: SIGNATURE.to_vec(),
        brackets,
        family: spec.map(|s| s.family.name().to_string()),
        params: spec.map(|s| {
            s.family
                .used_params()
                .iter()
                .map(|p| (p.to_string(), rat(s.param(p).unwrap())))
                .collect()
        }),
    };

    let connection = (0..3)
        .map(|i| (0..3).map(|j| vec3(conn.nabla(i, j))).collect())
        .collect();
    let curvature_pairs = curv
        .pair_components()
        .iter()
        .map(|(name, v)| (name.to_string(), rat(v)))
        .collect();

    let inner = sol.inner.as_ref().map(|flag| match flag {
        InnerFlag::Inner(x) => InnerReport {
            kind: "inner".to_string(),
            witness: Some(vec3(x)),
        },
        InnerFlag::Outer => InnerReport {
            kind: "outer".to_string(),
            witness: None,
        },
    });
    let algebraic_soliton = AlgebraicSolitonReport {
        status: sol.status.as_str().to_string(),
        c: sol.c.as_ref().map(rat),
        d: sol.d.as_ref().map(matrix),
        freedom: sol
            .freedom
            .iter()
            .map(|(dc, dd)| FreedomEntry {
                dc: rat(dc),
                dd: matrix(dd),
            })
            .collect(),
        trivial: sol.trivial,
        einstein_c: sol.einstein_c.as_ref().map(rat),
        inner,
    };

    let left_invariant_soliton = LeftInvariantReport {
        status: li.status.as_str().to_string(),
        c: li.c.as_ref().map(rat),
        x: li.x.as_ref().map(vec3),
        freedom: li
            .freedom
            .iter()
            .map(|(dc, dx)| VectorFreedomEntry {
                dc: rat(dc),
                dx: vec3(dx),
            })
            .collect(),
    };

    let classification = spec.map(|s| {
        let pred = theorem_predicate(s);
        ClassificationReport {
            family: s.family.name().to_string(),
            has_nontrivial: pred.has_nontrivial,
            branch: pred.branch,
            einstein: pred.einstein,
            exists: pred.exists,
            group: group_name(s),
        }
    });

    // flow factor only exists once there is a soliton derivation
    let flow = match (flow_t, sol.status) {
        (Some(t), s) if s != SolitonStatus::None => {
            let exp = flow_factor(&sol, t);
            let f = exp.to_f64();
            let matrix_float = (0..3)
                .map(|r| (0..3).map(|c| float15(f.at(r, c))).collect())
                .collect();
            Some(match exp {
                MatExp::Polynomial(m) => FlowReport {
                    t: rat(t),
                    kind: "polynomial".to_string(),
                    matrix: matrix_float,
                    exact: Some(matrix(&m)),
                },
                MatExp::Numeric(_) => FlowReport {
                    t: rat(t),
                    kind: "exponential".to_string(),
                    matrix: matrix_float,
                    exact: None,
                },
            })
        }
        _ => None,
    };

    Report {
        algebra,
        unimodular: is_unimodular(g),
        connection,
        curvature: curvature_pairs,
        ricci: RicciReport {
            tensor: matrix(&ric.rho),
            operator: matrix(&ric.operator),
            scalar: rat(&ric.scalar),
        },
        derivations: DerivationsReport {
            dimension: der.dimension(),
            basis: der.basis.iter().map(matrix).collect(),
        },
        algebraic_soliton,
        left_invariant_soliton,
        classification,
        deviations: table_deviations(spec),
        flow,
    }
}

/// Entries where the printed table for this member differs from the Koszul
/// value; nonempty only on g3 points that expose the known misprints.
fn table_deviations(spec: Option<&FamilySpec>) -> Vec<String> {
    let Some(spec) = spec else {
        return Vec::new();
    };
    if spec.family != Family::G3 {
        return Vec::new();
    }
    let printed = printed_tables(spec);
    let corrected = corrected_tables(spec);
    let mut out = Vec::new();
    for (p, c) in printed.curvature.iter().zip(&corrected.curvature) {
        if p.4 != c.4 {
            out.push(format!(
                "curvature R{}{}{}{}: printed table gives {}, Koszul gives {}",
                p.0 + 1,
                p.1 + 1,
                p.2 + 1,
                p.3 + 1,
                p.4,
                c.4
            ));
        }
    }
    for r in 0..3 {
        for cl in 0..3 {
            if printed.ricci.at(r, cl) != corrected.ricci.at(r, cl) {
                out.push(format!(
                    "Ricci operator ({},{}): printed table gives {}, Koszul gives {}",
                    r + 1,
                    cl + 1,
                    printed.ricci.at(r, cl),
                    corrected.ricci.at(r, cl)
                ));
            }
        }
    }
    out
}

/// Round-trip helpers shared by `family` and `custom` commands.
pub fn report_to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn report_from_json(text: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(text)
}

/// Echo document for a report (used by tests to feed `custom` with the same
/// algebra a family command produced).
pub fn echo_to_document(echo: &AlgebraEcho) -> AlgebraDocument {
    AlgebraDocument {
        signature: echo.signature.clone(),
        brackets: Some(
            echo.brackets
                .iter()
                .map(|(k, v)| {
                    (
                        k.clone(),
                        [
                            RatLit::Str(v[0].clone()),
                            RatLit::Str(v[1].clone()),
                            RatLit::Str(v[2].clone()),
                        ],
                    )
                })
                .collect(),
        ),
        family: None,
        params: None,
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let line = |out: &mut String, s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    let rows = |out: &mut String, label: &str, m: &[Vec<String>]| {
        line(out, format!("{label}:"));
        for r in m {
            line(out, format!("  [{}]", r.join(", ")));
        }
    };
    match (&report.algebra.family, &report.algebra.params) {
        (Some(f), Some(p)) => {
            let params: Vec<String> = p.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            line(&mut out, format!("algebra: family {f} ({})", params.join(", ")));
        }
        _ => line(&mut out, "algebra: custom brackets".to_string()),
    }
    for (pair, v) in &report.algebra.brackets {
        line(
            &mut out,
            format!(
                "  [e{},e{}] = ({})",
                &pair[0..1],
                &pair[1..2],
                v.join(", ")
            ),
        );
    }
    line(&mut out, format!("unimodular: {}", report.unimodular));
    line(&mut out, "connection (rows i: nabla_ei ej coordinates):".to_string());
    for (i, row) in report.connection.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            line(
                &mut out,
                format!("  nabla_e{} e{} = ({})", i + 1, j + 1, v.join(", ")),
            );
        }
    }
    line(&mut out, "curvature pair components:".to_string());
    for (k, v) in &report.curvature {
        line(&mut out, format!("  R{k} = {v}"));
    }
    rows(&mut out, "ricci tensor", &report.ricci.tensor);
    rows(&mut out, "ricci operator", &report.ricci.operator);
    line(&mut out, format!("scalar curvature: {}", report.ricci.scalar));
    line(
        &mut out,
        format!("derivation algebra dimension: {}", report.derivations.dimension),
    );
    let s = &report.algebraic_soliton;
    line(&mut out, format!("algebraic soliton: {}", s.status));
    if let Some(c) = &s.c {
        line(&mut out, format!("  c = {c}"));
    }
    if let Some(d) = &s.d {
        rows(&mut out, "  D", d);
    }
    for f in &s.freedom {
        line(&mut out, format!("  freedom: dc = {}, dD rows:", f.dc));
        for r in &f.dd {
            line(&mut out, format!("    [{}]", r.join(", ")));
        }
    }
    line(&mut out, format!("  trivial (Einstein): {}", s.trivial));
    if let Some(c) = &s.einstein_c {
        line(&mut out, format!("  einstein c = {c}"));
    }
    if let Some(inner) = &s.inner {
        match &inner.witness {
            Some(w) => line(
                &mut out,
                format!("  derivation is inner: ad(({}))", w.join(", ")),
            ),
            None => line(&mut out, "  derivation is outer".to_string()),
        }
    }
    let l = &report.left_invariant_soliton;
    line(&mut out, format!("left-invariant soliton: {}", l.status));
    if let (Some(c), Some(x)) = (&l.c, &l.x) {
        line(&mut out, format!("  c = {c}, X = ({})", x.join(", ")));
    }
    for f in &l.freedom {
        line(
            &mut out,
            format!("  freedom: dc = {}, dX = ({})", f.dc, f.dx.join(", ")),
        );
    }
    if let Some(c) = &report.classification {
        line(
            &mut out,
            format!(
                "classification: nontrivial soliton bullet: {}{}",
                c.has_nontrivial,
                c.branch
                    .as_ref()
                    .map(|b| format!(" ({b})"))
                    .unwrap_or_default()
            ),
        );
        line(
            &mut out,
            format!(
                "  einstein predicted: {}, existence predicted: {}",
                c.einstein, c.exists
            ),
        );
        line(&mut out, format!("  group: {}", c.group));
    }
    if !report.deviations.is_empty() {
        line(&mut out, "printed-table deviations at this point:".to_string());
        for d in &report.deviations {
            line(&mut out, format!("  - {d}"));
        }
    }
    if let Some(flow) = &report.flow {
        line(
            &mut out,
            format!("flow factor exp(t/2 D) at t = {} ({}):", flow.t, flow.kind),
        );
        for r in &flow.matrix {
            line(&mut out, format!("  [{}]", r.join(", ")));
        }
        if let Some(exact) = &flow.exact {
            rows(&mut out, "  exact form", exact);
        }
    }
    out
}

/// Sanity used by determinism tests: floats round-trip through their string.
pub fn float15_roundtrip(x: f64) -> f64 {
    float15(x).parse().unwrap()
}

pub fn float15_of(x: &Q) -> String {
    float15(rational_to_f64(x))
}
