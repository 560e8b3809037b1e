//! Machine-readable reports: a schema-versioned JSON document describing an
//! instance, its relation checks, its submodule lattice, and the conformance
//! verdict, plus a Graphviz DOT rendering of the Hasse diagram.
//!
//! Exact rationals serialize as strings "num" or "num/den"; matrices as row
//! arrays of such strings.  Node ordering is the lattice's canonical order
//! (dimension, then lexicographic canonical basis), so the mathematical
//! content of a report is deterministic for a fixed instance.

use serde::{Deserialize, Serialize};

use crate::aw::{AwParams, RelationReport};
use crate::daha::{Family, HParams, HRelationReport};
use crate::error::{Error, Result};
use crate::lattice::{EigenReport, Lattice};
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, parse_scalar, QContext, Scalar};
use crate::verdict::{FactorLabel, InstanceVerdict, Status, SummaryVerdict};

pub const SCHEMA_VERSION: u32 = 1;

/// A fully serializable description of one problem instance.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct InstanceSpec {
    /// "E", "O" (DAHA families) or "VD" (standalone bidiagonal module).
    pub family: String,
    pub d: usize,
    /// k0..k3 for E/O, or a, b, c for VD, as rational strings.
    pub parameters: Vec<String>,
    pub twist: u8,
    /// The deformation parameter, as a rational string.
    pub q: String,
    /// Sampler seed when the instance was generated, for replay.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl InstanceSpec {
    pub fn for_h(params: &HParams, twist: u8, ctx: &QContext) -> Self {
        InstanceSpec {
            family: params.family.to_string(),
            d: params.d,
            parameters: params.k.iter().map(format_scalar).collect(),
            twist,
            q: format_scalar(ctx.q()),
            seed: None,
        }
    }

    pub fn for_vd(params: &AwParams, twist: u8, ctx: &QContext) -> Self {
        InstanceSpec {
            family: "VD".into(),
            d: params.d,
            parameters: [&params.a, &params.b, &params.c]
                .iter()
                .map(|s| format_scalar(s))
                .collect(),
            twist,
            q: format_scalar(ctx.q()),
            seed: None,
        }
    }

    pub fn context(&self) -> Result<QContext> {
        QContext::new(parse_scalar(&self.q)?)
    }

    pub fn is_vd(&self) -> bool {
        self.family.eq_ignore_ascii_case("VD")
    }

    /// Parse as a DAHA-family instance, validating the parameter constraints.
    pub fn h_params(&self, ctx: &QContext) -> Result<HParams> {
        let family = match self.family.as_str() {
            "E" | "e" => Family::E,
            "O" | "o" => Family::O,
            other => {
                return Err(Error::Argument(format!(
                    "not a DAHA family: {other:?} (expected E or O)"
                )))
            }
        };
        if self.parameters.len() != 4 {
            return Err(Error::Argument(format!(
                "family {family} needs 4 parameters k0..k3, got {}",
                self.parameters.len()
            )));
        }
        if self.twist > 3 {
            return Err(Error::Argument("twist must be 0..3".into()));
        }
        let mut k: Vec<Scalar> = Vec::new();
        for p in &self.parameters {
            k.push(parse_scalar(p)?);
        }
        let params = HParams {
            family,
            d: self.d,
            k: [k[0].clone(), k[1].clone(), k[2].clone(), k[3].clone()],
        };
        params.validate(ctx)?;
        Ok(params)
    }

    /// Parse as a standalone bidiagonal-module instance.
    pub fn vd_params(&self) -> Result<AwParams> {
        if !self.is_vd() {
            return Err(Error::Argument(format!(
                "not a VD instance: family {:?}",
                self.family
            )));
        }
        if self.parameters.len() != 3 {
            return Err(Error::Argument(format!(
                "family VD needs 3 parameters a, b, c, got {}",
                self.parameters.len()
            )));
        }
        if self.twist > 1 {
            return Err(Error::Argument("VD twist must be 0 or 1".into()));
        }
        Ok(AwParams {
            a: parse_scalar(&self.parameters[0])?,
            b: parse_scalar(&self.parameters[1])?,
            c: parse_scalar(&self.parameters[2])?,
            d: self.d,
        })
    }
}

pub fn matrix_json(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_scalar).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenJson {
    pub c0: String,
    /// (eigenvalue, eigenspace dimension) pairs.
    pub eigenvalues: Vec<(String, usize)>,
    pub diagonalizable: bool,
}

impl EigenJson {
    pub fn from(e: &EigenReport) -> Self {
        EigenJson {
            c0: format_scalar(&e.c0),
            eigenvalues: e
                .eigenvalues
                .iter()
                .map(|(l, d)| (format_scalar(l), *d))
                .collect(),
            diagonalizable: e.diagonalizable,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeJson {
    pub dim: usize,
    /// Canonical (reduced row-echelon) basis, one row per basis vector.
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorJson {
    /// Indices into `nodes` of the covering pair (sub, super).
    pub cover: (usize, usize),
    pub role: String,
    /// Predicted model "V_d(a, b, c)".
    pub model: String,
    pub traces_match: bool,
    pub intertwiner_found: bool,
}

impl FactorJson {
    pub fn from(f: &FactorLabel) -> Self {
        FactorJson {
            cover: f.cover,
            role: format!("{:?}", f.role),
            model: f.model_string(),
            traces_match: f.traces_match,
            intertwiner_found: f.intertwiner_found,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeJson {
    pub nodes: Vec<NodeJson>,
    /// Covering edges (sub index, super index).
    pub edges: Vec<(usize, usize)>,
    pub shape: String,
    pub closed: bool,
    pub jh_consistent: bool,
    pub t0_transport: bool,
}

impl LatticeJson {
    pub fn from(lat: &Lattice) -> Self {
        LatticeJson {
            nodes: lat
                .nodes
                .iter()
                .map(|s| NodeJson {
                    dim: s.dim(),
                    basis: matrix_json(s.basis()),
                })
                .collect(),
            edges: lat.covers.clone(),
            shape: lat.shape.to_string(),
            closed: lat.closed,
            jh_consistent: lat.jh_consistent,
            t0_transport: lat.t0_transport,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SummaryJson {
    pub diagonalizable: bool,
    pub eigenvalue_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nondiag_eigenvalue_in_pm1: Option<bool>,
    pub shape_matches_dichotomy: bool,
    pub quotients_irreducible_or_zero: bool,
    pub complete_reducibility_iff_diag: bool,
    pub status: String,
}

impl SummaryJson {
    pub fn from(s: &SummaryVerdict) -> Self {
        SummaryJson {
            diagonalizable: s.diagonalizable,
            eigenvalue_count: s.eigenvalue_count,
            nondiag_eigenvalue_in_pm1: s.nondiag_eigenvalue_in_pm1,
            shape_matches_dichotomy: s.shape_matches_dichotomy,
            quotients_irreducible_or_zero: s.quotients_irreducible_or_zero,
            complete_reducibility_iff_diag: s.complete_reducibility_iff_diag,
            status: s.status.to_string(),
        }
    }
}

/// The full JSON report for one instance.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub instance: InstanceSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_relations: Option<HRelationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aw_relations: Option<RelationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigen: Option<EigenJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<FactorJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<SummaryJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    /// Wall-clock time; the only nondeterministic field.
    pub timing_ms: u128,
}

impl Report {
    pub fn new(instance: InstanceSpec) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            instance,
            h_relations: None,
            aw_relations: None,
            eigen: None,
            lattice: None,
            factors: None,
            summary: None,
            status: None,
            timing_ms: 0,
        }
    }

    pub fn with_verdict(mut self, v: &InstanceVerdict) -> Self {
        self.lattice = Some(LatticeJson::from(&v.lattice));
        self.factors = Some(v.factors.iter().map(FactorJson::from).collect());
        self.summary = Some(SummaryJson::from(&v.summary));
        self.status = Some(v.status.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Exit code for a lattice verdict: 0 CONFIRMED, 3 MISMATCH, 4 INCONCLUSIVE.
pub fn status_exit_code(status: Status) -> i32 {
    match status {
        Status::Confirmed => 0,
        Status::Mismatch => 3,
        Status::Inconclusive => 4,
    }
}

/// Graphviz DOT rendering of the Hasse diagram, drawn top-down with the
/// whole module at the top.  Node labels carry the dimension and, when
/// available, the identified factor of the covering edge below the node.
pub fn lattice_dot(lat: &Lattice, factors: Option<&[FactorLabel]>) -> String {
    let mut out = String::from("digraph lattice {\n");
    out.push_str("  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, node) in lat.nodes.iter().enumerate() {
        let mut label = format!("dim {}", node.dim());
        if let Some(fs) = factors {
            // The factor of the edge whose top endpoint is this node.
            if let Some(f) = fs.iter().find(|f| f.cover.1 == i) {
                label.push_str(&format!("\\nfactor {}", f.model_string()));
            }
        }
        out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    for &(i, j) in &lat.covers {
        out.push_str(&format!("  n{i} -> n{j};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha::build;
    use crate::lattice::{full_lattice, t0_eigen, DeltaModule};
    use crate::scalar::{frac, int};
    use crate::verdict::verify_instance;

    fn e3() -> (HParams, QContext) {
        (
            HParams {
                family: Family::E,
                d: 3,
                k: [frac(1, 4), int(3), frac(2, 7), int(5)],
            },
            QContext::default_q(),
        )
    }

    #[test]
    fn spec_round_trip() {
        let (params, ctx) = e3();
        let spec = InstanceSpec::for_h(&params, 2, &ctx);
        let json = serde_json::to_string(&spec).unwrap();
        let back: InstanceSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
        let parsed = back.h_params(&back.context().unwrap()).unwrap();
        assert_eq!(parsed, params);
    }

    #[test]
    fn spec_rejects_bad_parameters() {
        let (params, ctx) = e3();
        let mut spec = InstanceSpec::for_h(&params, 0, &ctx);
        spec.parameters[0] = "1/3".into(); // violates k0^2 = q^{-d-1}
        assert!(spec.h_params(&ctx).is_err());
        spec.parameters.pop();
        assert!(spec.h_params(&ctx).is_err());
    }

    #[test]
    fn report_json_is_deterministic_and_complete() {
        let (params, ctx) = e3();
        let h = build(&params, &ctx).unwrap();
        let v = verify_instance(&h, &ctx).unwrap();
        let eig = t0_eigen(&h).unwrap();
        let mut report = Report::new(InstanceSpec::for_h(&params, 0, &ctx))
            .with_verdict(&v);
        report.h_relations = Some(h.check_relations(&ctx));
        report.aw_relations = Some(h.pullback(&ctx).check_relations(&ctx));
        report.eigen = Some(EigenJson::from(&eig));
        let a = report.to_json();
        let b = report.to_json();
        assert_eq!(a, b);
        let val: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(val["schema_version"], 1);
        assert_eq!(val["status"], "CONFIRMED");
        assert_eq!(val["lattice"]["shape"], "diamond");
        assert_eq!(val["lattice"]["nodes"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn dot_has_one_node_per_submodule() {
        let (params, ctx) = e3();
        let h = build(&params, &ctx).unwrap();
        let (module, _) = DeltaModule::from_pullback(&h, &ctx).unwrap();
        let lat = full_lattice(&module).unwrap();
        let dot = lattice_dot(&lat, None);
        assert_eq!(dot.matches("label=").count(), 4);
        assert_eq!(dot.matches(" -> ").count(), 4); // diamond has 4 edges
        assert!(dot.starts_with("digraph"));
    }
}
