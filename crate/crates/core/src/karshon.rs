//! Karshon labelled graphs: storage, admissibility, sphere data, and the
//! canonical form under AGL(1, Z) acting on moment labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{Rational, Sign};
use crate::delzant::{Failure, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KarshonError {
    #[error("duplicate vertex id {0}")]
    DuplicateId(usize),
    #[error("edge references unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("edge {0}-{0} is a loop")]
    Loop(usize),
    #[error("edge isotropy must be at least 2, got {0}")]
    Isotropy(u64),
    #[error("graph is not admissible: {0}")]
    Inadmissible(String),
    #[error("sphere data needs k >= 1 and a north pole above the south pole")]
    SphereOrder,
    #[error("inconsistent weights: ({south} - {north}) / {k} is not an integer")]
    InconsistentWeights { south: i64, north: i64, k: i64 },
}

/// Trapezoid corner a fixed point came from. Carried for display only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    P,
    Q,
    R,
    S,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    /// Isolated fixed point; weights stored in ascending order.
    Isolated { weights: (i64, i64) },
    /// Fixed surface.
    Fat { area: Rational, genus: u32 },
}

impl VertexKind {
    pub fn isolated(w1: i64, w2: i64) -> Self {
        VertexKind::Isolated {
            weights: (w1.min(w2), w1.max(w2)),
        }
    }

    pub fn fat(area: Rational) -> Self {
        VertexKind::Fat { area, genus: 0 }
    }

    pub fn is_fat(&self) -> bool {
        matches!(self, VertexKind::Fat { .. })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "VertexJson", into = "VertexJson")]
pub struct GraphVertex {
    pub id: usize,
    pub kind: VertexKind,
    pub moment: Rational,
    pub tag: Option<Tag>,
}

// tags are provenance only
impl PartialEq for GraphVertex {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.kind == other.kind && self.moment == other.moment
    }
}

impl Eq for GraphVertex {}

impl GraphVertex {
    pub fn new(id: usize, kind: VertexKind, moment: Rational) -> Self {
        GraphVertex {
            id,
            kind,
            moment,
            tag: None,
        }
    }

    pub fn tagged(mut self, tag: Tag) -> Self {
        self.tag = Some(tag);
        self
    }
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    kind: String,
    moment: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    area: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tag: Option<Tag>,
}

impl From<GraphVertex> for VertexJson {
    fn from(v: GraphVertex) -> Self {
        let (kind, area, genus, weights) = match v.kind {
            VertexKind::Isolated { weights: (p, q) } => ("isolated", None, None, Some([p, q])),
            VertexKind::Fat { area, genus } => ("fat", Some(area), Some(genus), None),
        };
        VertexJson {
            id: v.id,
            kind: kind.into(),
            moment: v.moment,
            area,
            genus,
            weights,
            tag: v.tag,
        }
    }
}

impl TryFrom<VertexJson> for GraphVertex {
    type Error = String;
    fn try_from(j: VertexJson) -> Result<Self, String> {
        let kind = match (j.kind.as_str(), j.area, j.weights) {
            ("isolated", None, Some([p, q])) if j.genus.is_none() => VertexKind::isolated(p, q),
            ("fat", Some(area), None) => VertexKind::Fat {
                area,
                genus: j.genus.unwrap_or(0),
            },
            _ => {
                return Err(format!(
                    "vertex {}: kind must be \"isolated\" with weights or \"fat\" with area",
                    j.id
                ))
            }
        };
        Ok(GraphVertex {
            id: j.id,
            kind,
            moment: j.moment,
            tag: j.tag,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphEdge {
    pub a: usize,
    pub b: usize,
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct KarshonGraph {
    vertices: Vec<GraphVertex>,
    edges: Vec<GraphEdge>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<GraphVertex>,
    edges: Vec<GraphEdge>,
}

impl TryFrom<GraphJson> for KarshonGraph {
    type Error = KarshonError;
    fn try_from(j: GraphJson) -> Result<Self, KarshonError> {
        KarshonGraph::new(j.vertices, j.edges)
    }
}

impl From<KarshonGraph> for GraphJson {
    fn from(g: KarshonGraph) -> Self {
        GraphJson {
            vertices: g.vertices,
            edges: g.edges,
        }
    }
}

impl KarshonGraph {
    /// Checks only the structural invariants: unique ids, edges between
    /// existing distinct vertices, isotropy at least 2. Everything else is
    /// reported by [`validate_admissible`].
    pub fn new(vertices: Vec<GraphVertex>, edges: Vec<GraphEdge>) -> Result<Self, KarshonError> {
        let mut ids = BTreeSet::new();
        for v in &vertices {
            if !ids.insert(v.id) {
                return Err(KarshonError::DuplicateId(v.id));
            }
        }
        for e in &edges {
            for end in [e.a, e.b] {
                if !ids.contains(&end) {
                    return Err(KarshonError::UnknownVertex(end));
                }
            }
            if e.a == e.b {
                return Err(KarshonError::Loop(e.a));
            }
            if e.k < 2 {
                return Err(KarshonError::Isotropy(e.k));
            }
        }
        Ok(KarshonGraph { vertices, edges })
    }

    pub fn vertices(&self) -> &[GraphVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn vertex(&self, id: usize) -> Option<&GraphVertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn min_moment(&self) -> Option<&Rational> {
        self.vertices.iter().map(|v| &v.moment).min()
    }

    pub fn max_moment(&self) -> Option<&Rational> {
        self.vertices.iter().map(|v| &v.moment).max()
    }

    fn moment_of(&self, id: usize) -> &Rational {
        &self
            .vertex(id)
            .expect("edge endpoints exist by construction")
            .moment
    }

    /// Orients an edge as (south, north) by moment.
    pub fn poles(&self, e: &GraphEdge) -> (usize, usize) {
        if self.moment_of(e.a) <= self.moment_of(e.b) {
            (e.a, e.b)
        } else {
            (e.b, e.a)
        }
    }

    /// Applies `mu -> sign * mu + shift` to every label. Reversing the
    /// orientation also negates all weights.
    pub fn map_moments(&self, sign: Sign, shift: &Rational) -> KarshonGraph {
        let s = sign.value();
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let kind = match &v.kind {
                    VertexKind::Isolated { weights: (p, q) } => VertexKind::isolated(p * s, q * s),
                    fat => fat.clone(),
                };
                GraphVertex {
                    id: v.id,
                    kind,
                    moment: v.moment.scale(s) + shift,
                    tag: v.tag,
                }
            })
            .collect();
        KarshonGraph {
            vertices,
            edges: self.edges.clone(),
        }
    }

    /// Sum of 1/(w1 w2) over the fixed points, defined when all of them are
    /// isolated.
    pub fn localization_sum(&self) -> Option<Rational> {
        let mut total = Rational::zero();
        for v in &self.vertices {
            match v.kind {
                VertexKind::Isolated { weights: (p, q) } if p != 0 && q != 0 => {
                    total = total + Rational::new(1, p * q).ok()?;
                }
                _ => return None,
            }
        }
        Some(total)
    }

    /// Maximal chains of stored edges, each listed from the bottom up as
    /// edge indices. A chain passes through a vertex only when one edge
    /// leaves it upward and the other downward.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            incident.entry(e.a).or_default().push(i);
            incident.entry(e.b).or_default().push(i);
        }
        // the edge continuing upward from the north pole of edge i
        let next_up = |i: usize| -> Option<usize> {
            let (_, north) = self.poles(&self.edges[i]);
            let inc = incident.get(&north)?;
            if inc.len() != 2 {
                return None;
            }
            let j = if inc[0] == i { inc[1] } else { inc[0] };
            (self.poles(&self.edges[j]).0 == north).then_some(j)
        };
        let has_below: BTreeSet<usize> = (0..self.edges.len()).filter_map(next_up).collect();
        let mut out = Vec::new();
        for start in 0..self.edges.len() {
            if has_below.contains(&start) {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(j) = next_up(cur) {
                if chain.contains(&j) {
                    break;
                }
                chain.push(j);
                cur = j;
            }
            out.push(chain);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Admissibility {
    Extremal,
    FatExtremal,
    Genus,
    Area,
    Degree,
    Monotonicity,
    Chain,
    Weights,
}

fn fail(
    out: &mut Vec<Failure<Admissibility>>,
    property: Admissibility,
    vertex: Option<usize>,
    message: String,
) {
    out.push(Failure {
        property,
        vertex,
        message,
    });
}

pub fn validate_admissible(g: &KarshonGraph) -> ValidationReport<Admissibility> {
    use Admissibility::*;
    let mut out = Vec::new();
    let (Some(lo), Some(hi)) = (g.min_moment(), g.max_moment()) else {
        fail(&mut out, Extremal, None, "graph has no vertices".into());
        return ValidationReport::from_failures(out);
    };
    let at_lo = g.vertices.iter().filter(|v| &v.moment == lo).count();
    let at_hi = g.vertices.iter().filter(|v| &v.moment == hi).count();
    if lo == hi || at_lo != 1 || at_hi != 1 {
        fail(
            &mut out,
            Extremal,
            None,
            format!("expected exactly two extremal vertices, found {at_lo} at the minimum and {at_hi} at the maximum"),
        );
    }
    let is_extremal = |v: &GraphVertex| &v.moment == lo || &v.moment == hi;

    let fats: Vec<&GraphVertex> = g.vertices.iter().filter(|v| v.kind.is_fat()).collect();
    for v in &fats {
        if !is_extremal(v) {
            fail(
                &mut out,
                FatExtremal,
                Some(v.id),
                format!("fat vertex at moment {} is not extremal", v.moment),
            );
        }
    }
    if let [v1, v2] = fats.as_slice() {
        if let (VertexKind::Fat { genus: g1, .. }, VertexKind::Fat { genus: g2, .. }) =
            (&v1.kind, &v2.kind)
        {
            if g1 != g2 {
                fail(
                    &mut out,
                    Genus,
                    None,
                    format!("fat vertices have different genera {g1} and {g2}"),
                );
            }
        }
    }
    for v in &fats {
        if let VertexKind::Fat { area, .. } = &v.kind {
            if !area.is_positive() {
                fail(
                    &mut out,
                    Area,
                    Some(v.id),
                    format!("fat vertex area {area} is not positive"),
                );
            }
        }
    }

    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for e in &g.edges {
        *degree.entry(e.a).or_default() += 1;
        *degree.entry(e.b).or_default() += 1;
        for end in [e.a, e.b] {
            if g.vertex(end).is_some_and(|v| v.kind.is_fat()) {
                fail(
                    &mut out,
                    Degree,
                    Some(end),
                    format!("edge {}-{} is connected to a fat vertex", e.a, e.b),
                );
            }
        }
    }
    for (&id, &d) in &degree {
        if d > 2 {
            fail(
                &mut out,
                Degree,
                Some(id),
                format!("vertex has {d} incident edges"),
            );
        }
    }

    let mut monotone = true;
    for e in &g.edges {
        if g.moment_of(e.a) == g.moment_of(e.b) {
            monotone = false;
            fail(
                &mut out,
                Monotonicity,
                Some(e.a),
                format!("edge {}-{} joins equal moment labels", e.a, e.b),
            );
        }
    }
    for v in g.vertices.iter().filter(|v| !is_extremal(v)) {
        let ups: Vec<bool> = g
            .edges
            .iter()
            .filter(|e| e.a == v.id || e.b == v.id)
            .map(|e| g.poles(e).0 == v.id)
            .collect();
        if ups.len() == 2 && ups[0] == ups[1] {
            monotone = false;
            fail(
                &mut out,
                Monotonicity,
                Some(v.id),
                "interior vertex has both edges on the same side".into(),
            );
        }
    }

    if monotone {
        for chain in g.chains() {
            let ks: Vec<i64> = chain.iter().map(|&i| g.edges[i].k as i64).collect();
            for w in ks.windows(2) {
                if w[0].gcd(&w[1]) != 1 {
                    fail(
                        &mut out,
                        Chain,
                        None,
                        format!(
                            "consecutive isotropies {} and {} are not coprime",
                            w[0], w[1]
                        ),
                    );
                }
            }
            for w in ks.windows(3) {
                if (w[0] + w[2]) % w[1] != 0 {
                    fail(
                        &mut out,
                        Chain,
                        None,
                        format!("({} + {}) / {} is not an integer", w[0], w[2], w[1]),
                    );
                }
            }
        }
    }

    for v in &g.vertices {
        let VertexKind::Isolated { weights: (p, q) } = v.kind else {
            continue;
        };
        if p == 0 || q == 0 {
            fail(
                &mut out,
                Weights,
                Some(v.id),
                format!("isolated fixed point has a zero weight {{{p}, {q}}}"),
            );
            continue;
        }
        let sign_ok = if &v.moment == lo {
            p > 0 && q > 0
        } else if &v.moment == hi {
            p < 0 && q < 0
        } else {
            p < 0 && q > 0
        };
        if !sign_ok {
            fail(
                &mut out,
                Weights,
                Some(v.id),
                format!(
                    "weights {{{p}, {q}}} have the wrong signs for moment {}",
                    v.moment
                ),
            );
        }
        // every weight of size at least 2 is matched by an edge and vice versa
        let mut expected: Vec<i64> = [p, q].into_iter().filter(|w| w.abs() >= 2).collect();
        let mut found: Vec<i64> = g
            .edges
            .iter()
            .filter(|e| e.a == v.id || e.b == v.id)
            .map(|e| {
                if g.poles(e).0 == v.id {
                    e.k as i64
                } else {
                    -(e.k as i64)
                }
            })
            .collect();
        expected.sort();
        found.sort();
        if expected != found {
            fail(
                &mut out,
                Weights,
                Some(v.id),
                format!("weights {{{p}, {q}}} do not match incident edges {found:?} (edge k at a south pole needs weight +k, at a north pole -k)"),
            );
        }
    }
    ValidationReport::from_failures(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereData {
    pub self_intersection: i64,
    pub area: Rational,
    pub isotropy: i64,
}

/// Self-intersection and area of an invariant sphere from the normal
/// weights at its poles.
pub fn sphere_data(
    south_normal_weight: i64,
    north_normal_weight: i64,
    mu_south: &Rational,
    mu_north: &Rational,
    k: i64,
) -> Result<SphereData, KarshonError> {
    if k < 1 || mu_north <= mu_south {
        return Err(KarshonError::SphereOrder);
    }
    let diff = south_normal_weight - north_normal_weight;
    if diff % k != 0 {
        return Err(KarshonError::InconsistentWeights {
            south: south_normal_weight,
            north: north_normal_weight,
            k,
        });
    }
    Ok(SphereData {
        self_intersection: diff / k,
        area: (mu_north - mu_south)
            .checked_div(&Rational::integer(k))
            .expect("k >= 1"),
        isotropy: k,
    })
}

/// Sphere data of a stored edge, reading the normal weight at each pole as
/// the weight other than the tangent one (+k at the south pole, -k at the
/// north pole).
pub fn edge_sphere_data(g: &KarshonGraph, e: &GraphEdge) -> Result<SphereData, KarshonError> {
    let (south, north) = g.poles(e);
    let k = e.k as i64;
    let normal = |id: usize, tangent: i64| match g.vertex(id).map(|v| &v.kind) {
        Some(VertexKind::Isolated { weights: (p, q) }) if *p == tangent => Ok(*q),
        Some(VertexKind::Isolated { weights: (p, q) }) if *q == tangent => Ok(*p),
        _ => Err(KarshonError::Inadmissible(format!(
            "vertex {id} has no weight {tangent} for edge {}-{}",
            e.a, e.b
        ))),
    };
    sphere_data(
        normal(south, k)?,
        normal(north, -k)?,
        g.moment_of(south),
        g.moment_of(north),
        k,
    )
}

type VertexKey = (
    Rational,
    u8,
    Option<Rational>,
    Option<u32>,
    Option<(i64, i64)>,
);

fn vertex_key(v: &GraphVertex) -> VertexKey {
    match &v.kind {
        VertexKind::Isolated { weights } => (v.moment.clone(), 0, None, None, Some(*weights)),
        VertexKind::Fat { area, genus } => {
            (v.moment.clone(), 1, Some(area.clone()), Some(*genus), None)
        }
    }
}

type CanonicalKey = (Vec<VertexKey>, Vec<(usize, usize, u64)>);

// every ordering of `items` that only permutes runs of equal keys
fn tie_orders(sorted: &[(VertexKey, usize)]) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, (key, id)) in sorted.iter().enumerate() {
        if i > 0 && sorted[i - 1].0 == *key {
            groups.last_mut().expect("nonempty").push(*id);
        } else {
            groups.push(vec![*id]);
        }
    }
    let mut orders = vec![Vec::new()];
    for group in groups {
        let perms = permutations(&group);
        orders = orders
            .into_iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut o = prefix.clone();
                    o.extend(p);
                    o
                })
            })
            .collect();
    }
    orders
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn oriented_key(g: &KarshonGraph, sign: Sign) -> (CanonicalKey, KarshonGraph) {
    let flipped = g.map_moments(sign, &Rational::zero());
    let lo = flipped.min_moment().cloned().unwrap_or_else(Rational::zero);
    let shifted = flipped.map_moments(Sign::Plus, &-lo);
    let mut sorted: Vec<(VertexKey, usize)> = shifted
        .vertices
        .iter()
        .map(|v| (vertex_key(v), v.id))
        .collect();
    sorted.sort();
    let keys: Vec<VertexKey> = sorted.iter().map(|(k, _)| k.clone()).collect();
    let mut best: Option<(CanonicalKey, Vec<usize>)> = None;
    for order in tie_orders(&sorted) {
        let pos: BTreeMap<usize, usize> =
            order.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let mut edges: Vec<(usize, usize, u64)> = shifted
            .edges
            .iter()
            .map(|e| {
                let (x, y) = (pos[&e.a], pos[&e.b]);
                (x.min(y), x.max(y), e.k)
            })
            .collect();
        edges.sort();
        let key = (keys.clone(), edges);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, order));
        }
    }
    let (key, order) = best.expect("at least one ordering");
    let vertices = order
        .iter()
        .enumerate()
        .map(|(i, id)| {
            let v = shifted.vertex(*id).expect("id from this graph");
            GraphVertex {
                id: i,
                kind: v.kind.clone(),
                moment: v.moment.clone(),
                tag: None,
            }
        })
        .collect();
    let edges = key
        .1
        .iter()
        .map(|&(a, b, k)| GraphEdge { a, b, k })
        .collect();
    (key, KarshonGraph { vertices, edges })
}

/// Canonical representative without the admissibility check.
pub fn canonical_form(g: &KarshonGraph) -> KarshonGraph {
    let up = oriented_key(g, Sign::Plus);
    let down = oriented_key(g, Sign::Minus);
    if up.0 <= down.0 {
        up.1
    } else {
        down.1
    }
}

/// Canonical representative of the AGL(1, Z) class: minimum moment 0, ids
/// renumbered in sorted order, tags dropped, orientation chosen to minimize
/// the serialized key.
pub fn canonicalize(g: &KarshonGraph) -> Result<KarshonGraph, KarshonError> {
    let report = validate_admissible(g);
    if !report.valid {
        let msgs: Vec<String> = report.failures.iter().map(|f| f.message.clone()).collect();
        return Err(KarshonError::Inadmissible(msgs.join("; ")));
    }
    Ok(canonical_form(g))
}

pub fn graphs_equivalent(g1: &KarshonGraph, g2: &KarshonGraph) -> bool {
    canonical_form(g1) == canonical_form(g2)
}

fn fat_area(v: &GraphVertex) -> Option<&Rational> {
    match &v.kind {
        VertexKind::Fat { area, .. } => Some(area),
        _ => None,
    }
}

fn vertex_label(v: &GraphVertex) -> String {
    match fat_area(v) {
        Some(area) => format!("μ={}, A={}", v.moment, area),
        None => format!("μ={}", v.moment),
    }
}

pub fn to_dot(g: &KarshonGraph) -> String {
    let mut s = String::from("graph karshon {\n  rankdir=BT;\n");
    for v in &g.vertices {
        let shape = if v.kind.is_fat() {
            "ellipse, style=filled, fillcolor=lightgray"
        } else {
            "circle"
        };
        let _ = writeln!(
            s,
            "  v{} [shape={shape}, label=\"{}\"];",
            v.id,
            vertex_label(v)
        );
    }
    for e in &g.edges {
        let _ = writeln!(s, "  v{} -- v{} [label=\"{}\"];", e.a, e.b, e.k);
    }
    s.push_str("}\n");
    s
}

/// TikZ picture with the moment map pointing up: fat vertices as ellipses,
/// isolated ones as dots, and edges labelled by isotropy.
pub fn to_tikz(g: &KarshonGraph) -> String {
    let mut column: BTreeMap<&Rational, usize> = BTreeMap::new();
    let mut s = String::from("\\begin{tikzpicture}[every node/.style={font=\\small}]\n");
    for v in &g.vertices {
        let slot = column.entry(&v.moment).or_default();
        let x = 2 * *slot;
        *slot += 1;
        let y = if v.moment.is_integer() {
            v.moment.to_string()
        } else {
            format!("{{{}}}", v.moment)
        };
        match fat_area(v) {
            Some(area) => {
                let _ = writeln!(
                    s,
                    "  \\node[draw, ellipse, fill=gray!20, minimum width=2cm, label=right:{{$\\mu={}$}}] (v{}) at ({x},{y}) {{$A={}$}};",
                    v.moment, v.id, area
                );
            }
            None => {
                let _ = writeln!(
                    s,
                    "  \\node[circle, fill, inner sep=1.5pt, label=right:{{$\\mu={}$}}] (v{}) at ({x},{y}) {{}};",
                    v.moment, v.id
                );
            }
        }
    }
    for e in &g.edges {
        let _ = writeln!(
            s,
            "  \\draw (v{}) -- node[left] {{${}$}} (v{});",
            e.a, e.k, e.b
        );
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}
