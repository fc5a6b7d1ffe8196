//! The full classification report for one action.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::actions::{
    build_graph, invariant_deformation_dimension, labelled_orbit, second_extension, template,
    toric_extensions, CircleAction, Template,
};
use crate::algebra::{
    classify_homotopy_type, homology_ranks, rational_homotopy_dims, Characteristic, HomotopyType,
};
use crate::delzant::Manifold;
use crate::karshon::{canonical_form, graphs_equivalent, validate_admissible, KarshonGraph};

/// Highest degree reported in the rank tables.
pub const RANK_DEGREES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumEntry {
    pub s: u32,
    pub codim: u32,
    pub subcircle: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRow {
    pub characteristic: Characteristic,
    pub ranks: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub a: i64,
    pub b: i64,
    pub m: u32,
    pub relation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub action: CircleAction,
    pub manifold: Manifold,
    pub template: Template,
    pub graph: KarshonGraph,
    pub strata: Vec<StratumEntry>,
    pub homotopy_type: HomotopyType,
    pub ranks: Vec<RankRow>,
    pub rational_homotopy: Vec<u64>,
    pub invariant_deformation_dimension: u32,
    pub equivalences_found: Vec<Equivalence>,
    pub warnings: Vec<String>,
}

/// A consistency check between independently computed parts of the report
/// failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBreach(pub String);

pub fn build_report(act: &CircleAction) -> Result<Report, InvariantBreach> {
    let graph = build_graph(act);
    let admissible = validate_admissible(&graph);
    if !admissible.valid {
        let msgs: Vec<String> = admissible
            .failures
            .iter()
            .map(|f| f.message.clone())
            .collect();
        return Err(InvariantBreach(format!(
            "graph of {act} is not admissible: {}",
            msgs.join("; ")
        )));
    }

    let extensions = toric_extensions(act);
    let strata: Vec<StratumEntry> = extensions
        .entries
        .iter()
        .map(|e| StratumEntry {
            s: e.target_m,
            codim: e.complex_codim,
            subcircle: e.subcircle,
        })
        .collect();
    let zeros = strata.iter().filter(|s| s.codim == 0).count();
    if zeros != 1 {
        return Err(InvariantBreach(format!(
            "{act}: {zeros} strata of codimension 0, expected exactly one"
        )));
    }

    let homotopy_type = classify_homotopy_type(act);
    if (homotopy_type == HomotopyType::OmegaS3xT3) != (strata.len() == 2) {
        return Err(InvariantBreach(format!(
            "{act}: homotopy type {homotopy_type} disagrees with {} intersected strata",
            strata.len()
        )));
    }

    let mut equivalences_found = Vec::new();
    for ((c, d), relation) in labelled_orbit(act) {
        if (c, d) == (act.a(), act.b())
            || equivalences_found
                .iter()
                .any(|e: &Equivalence| (e.a, e.b) == (c, d))
        {
            continue;
        }
        let other = act.with_presentation(c, d, act.m()).map_err(|e| {
            InvariantBreach(format!("orbit element ({c},{d}) of {act} is invalid: {e}"))
        })?;
        if !graphs_equivalent(&graph, &build_graph(&other)) {
            return Err(InvariantBreach(format!(
                "{act}: predicted equivalent {other} has a different graph"
            )));
        }
        equivalences_found.push(Equivalence {
            a: c,
            b: d,
            m: act.m(),
            relation: relation.into(),
        });
    }
    let mut warnings = Vec::new();
    if let Some((n, (c, d))) = second_extension(act) {
        let other = act
            .with_presentation(c, d, n)
            .map_err(|e| InvariantBreach(format!("second extension of {act} is invalid: {e}")))?;
        if canonical_form(&graph) != canonical_form(&build_graph(&other)) {
            return Err(InvariantBreach(format!(
                "{act}: graph differs from its extension {other}"
            )));
        }
        equivalences_found.push(Equivalence {
            a: c,
            b: d,
            m: n,
            relation: format!("toric-extension U_{n}"),
        });
        if 2 * act.b() == act.a() * i64::from(act.m()) {
            warnings.push("2b = am: the second extension is to the toric action with m = 0".into());
        }
    }
    if act.m() == 0 && act.lambda() == &crate::arith::Rational::one() {
        warnings.push(
            "lambda = 1 and m = 0: the two factors have equal area and may be swapped".into(),
        );
    }

    let ranks = [0, 2]
        .map(|p| {
            let c = Characteristic::new(p).expect("0 and 2 are valid");
            RankRow {
                characteristic: c,
                ranks: homology_ranks(homotopy_type, RANK_DEGREES, c),
            }
        })
        .to_vec();

    Ok(Report {
        action: act.clone(),
        manifold: act.manifold(),
        template: template(act),
        graph,
        strata,
        homotopy_type,
        ranks,
        rational_homotopy: rational_homotopy_dims(homotopy_type, RANK_DEGREES),
        invariant_deformation_dimension: invariant_deformation_dimension(act),
        equivalences_found,
        warnings,
    })
}

impl Report {
    /// Plain-text rendering for terminals.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let a = &self.action;
        let _ = writeln!(
            s,
            "action        S1({},{};{}) on {} with lambda = {}",
            a.a(),
            a.b(),
            a.m(),
            self.manifold.name(),
            a.lambda()
        );
        let _ = writeln!(s, "template      {:?}", self.template);
        let _ = writeln!(s, "homotopy type {}", self.homotopy_type);
        for st in &self.strata {
            let _ = writeln!(
                s,
                "stratum       U_{}  codim {}  as S1({},{};{})",
                st.s, st.codim, st.subcircle.0, st.subcircle.1, st.s
            );
        }
        let _ = writeln!(s, "graph");
        for v in self.graph.vertices() {
            let desc = match &v.kind {
                crate::karshon::VertexKind::Isolated { weights: (p, q) } => {
                    format!("isolated, weights {{{p}, {q}}}")
                }
                crate::karshon::VertexKind::Fat { area, genus } => {
                    format!("fat, area {area}, genus {genus}")
                }
            };
            let tag = v.tag.map(|t| format!(" [{t}]")).unwrap_or_default();
            let _ = writeln!(s, "  v{}  mu = {}  {desc}{tag}", v.id, v.moment);
        }
        for e in self.graph.edges() {
            let _ = writeln!(s, "  v{} -- v{}  k = {}", e.a, e.b, e.k);
        }
        for row in &self.ranks {
            let r: Vec<String> = row.ranks.iter().map(u64::to_string).collect();
            let _ = writeln!(
                s,
                "betti (char {}) {}",
                row.characteristic.value(),
                r.join(" ")
            );
        }
        let r: Vec<String> = self.rational_homotopy.iter().map(u64::to_string).collect();
        let _ = writeln!(s, "rational pi_* {}", r.join(" "));
        let _ = writeln!(
            s,
            "invariant deformations {}",
            self.invariant_deformation_dimension
        );
        for e in &self.equivalences_found {
            let _ = writeln!(
                s,
                "equivalent to S1({},{};{})  ({})",
                e.a, e.b, e.m, e.relation
            );
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}
