//! Circle actions S1(a,b;m) on the Hirzebruch surface W_m with base area
//! lambda and fibre area 1: weights, graphs, equivalence, toric extensions,
//! strata and codimension.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Rational;
use crate::delzant::{check_lambda, DelzantError, Manifold};
use crate::karshon::{graphs_equivalent, GraphEdge, GraphVertex, KarshonGraph, Tag, VertexKind};

/// Largest |a|, |b| and m accepted, so every product formed below stays
/// far from i64 overflow.
pub const MAX_PARAMETER: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("non-effective action: gcd({a}, {b}) = {gcd}, expected 1")]
    NonEffective { a: i64, b: i64, gcd: i64 },
    #[error(transparent)]
    Range(#[from] DelzantError),
    #[error("|a|, |b| and m must be at most {MAX_PARAMETER}")]
    Magnitude,
    #[error("actions live on different manifolds: lambda {0} vs {1}")]
    LambdaMismatch(String, String),
    #[error("stratum U_{s} is not intersected; intersected strata are {strata:?}")]
    StratumNotIntersected { s: u32, strata: Vec<u32> },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ActionJson", into = "ActionJson")]
pub struct CircleAction {
    a: i64,
    b: i64,
    m: u32,
    lambda: Rational,
}

#[derive(Serialize, Deserialize)]
struct ActionJson {
    a: i64,
    b: i64,
    m: u32,
    lambda: Rational,
}

impl TryFrom<ActionJson> for CircleAction {
    type Error = ActionError;
    fn try_from(j: ActionJson) -> Result<Self, ActionError> {
        CircleAction::new(j.a, j.b, j.m, j.lambda)
    }
}

impl From<CircleAction> for ActionJson {
    fn from(c: CircleAction) -> Self {
        ActionJson {
            a: c.a,
            b: c.b,
            m: c.m,
            lambda: c.lambda,
        }
    }
}

impl CircleAction {
    pub fn new(a: i64, b: i64, m: u32, lambda: Rational) -> Result<Self, ActionError> {
        if a.abs() > MAX_PARAMETER || b.abs() > MAX_PARAMETER || i64::from(m) > MAX_PARAMETER {
            return Err(ActionError::Magnitude);
        }
        let gcd = a.gcd(&b);
        if gcd != 1 {
            return Err(ActionError::NonEffective { a, b, gcd });
        }
        check_lambda(m, &lambda)?;
        Ok(CircleAction { a, b, m, lambda })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    /// m mod 2.
    pub fn epsilon(&self) -> i64 {
        i64::from(self.m % 2)
    }

    /// floor(m / 2).
    pub fn k(&self) -> i64 {
        i64::from(self.m / 2)
    }

    pub fn manifold(&self) -> Manifold {
        Manifold::from_parity(self.m)
    }

    fn mi(&self) -> i64 {
        i64::from(self.m)
    }

    /// a*m - b, the weight along the slanted edge.
    pub fn am_minus_b(&self) -> i64 {
        self.a * self.mi() - self.b
    }

    /// Length of the top edge, lambda - k - epsilon.
    pub fn top_length(&self) -> Rational {
        &self.lambda - &Rational::integer(self.k() + self.epsilon())
    }

    /// Length of the bottom edge, lambda + k.
    pub fn bottom_length(&self) -> Rational {
        &self.lambda + &Rational::integer(self.k())
    }

    /// Same (a, b) inside another toric action on the same manifold.
    pub fn with_presentation(&self, a: i64, b: i64, m: u32) -> Result<CircleAction, ActionError> {
        CircleAction::new(a, b, m, self.lambda.clone())
    }
}

impl fmt::Display for CircleAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S1({},{};{}) lambda={}",
            self.a, self.b, self.m, self.lambda
        )
    }
}

impl fmt::Debug for CircleAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointData {
    pub tag: Tag,
    pub weights: (i64, i64),
    pub moment: Option<Rational>,
}

/// Weights at the four corners of the trapezoid, in the order P, Q, R, S.
pub fn fixed_point_weights(act: &CircleAction) -> [FixedPointData; 4] {
    let (a, b, amb) = (act.a, act.b, act.am_minus_b());
    [
        (Tag::P, (a, b)),
        (Tag::Q, (a, -b)),
        (Tag::R, (-a, amb)),
        (Tag::S, (-a, -amb)),
    ]
    .map(|(tag, weights)| FixedPointData {
        tag,
        weights,
        moment: None,
    })
}

/// Which of the twelve graph templates an action falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Template {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
    L,
}

pub fn template(act: &CircleAction) -> Template {
    let (a, b, amb) = (act.a, act.b, act.am_minus_b());
    match (a.signum(), b.signum(), amb.signum()) {
        (0, 1, _) => Template::C,
        (0, _, _) => Template::D,
        (1, 0, _) => Template::A,
        (_, 0, _) => Template::B,
        (1, _, 0) => Template::E,
        (_, _, 0) => Template::F,
        (1, 1, 1) => Template::G,
        (1, 1, _) => Template::H,
        (1, _, _) => Template::I,
        (_, 1, _) => Template::J,
        (_, _, 1) => Template::K,
        _ => Template::L,
    }
}

enum Node {
    Point(Tag, Rational),
    Surface(Rational, Rational),
}

/// The labelled graph of the action, read off its template with the
/// minimum moment at 0.
pub fn build_graph(act: &CircleAction) -> KarshonGraph {
    let (a, b, m) = (act.a, act.b, act.mi());
    let amb = act.am_minus_b();
    let r = act.top_length();
    let s = act.bottom_length();
    let int = Rational::integer;
    let one = Rational::one();
    let zero = Rational::zero;
    use Node::{Point as Pt, Surface as Fat};
    use Tag::{P, Q, R, S};
    // corner moments plus (corner, corner, isotropy) for the candidate edges
    let (nodes, edges): (Vec<Node>, Vec<(Tag, Tag, i64)>) = match template(act) {
        Template::C => (vec![Fat(zero(), s), Fat(one, r)], vec![]),
        Template::D => (vec![Fat(zero(), r), Fat(one, s)], vec![]),
        Template::A if m == 0 => (vec![Fat(zero(), one.clone()), Fat(s, one)], vec![]),
        Template::A => (vec![Fat(zero(), one), Pt(R, r), Pt(S, s)], vec![(R, S, m)]),
        Template::B if m == 0 => (vec![Fat(zero(), one.clone()), Fat(s, one)], vec![]),
        Template::B => (
            vec![Pt(S, zero()), Pt(R, int(m)), Fat(s, one)],
            vec![(S, R, m)],
        ),
        Template::E => (
            vec![Pt(P, zero()), Pt(Q, int(m)), Fat(s, one)],
            vec![(P, Q, m)],
        ),
        Template::F => (vec![Fat(zero(), one), Pt(Q, r), Pt(P, s)], vec![(Q, P, m)]),
        t => {
            let ar = r.scale(a);
            let as_ = s.scale(a);
            let labels = match t {
                Template::G | Template::H => [zero(), int(b), &ar + &int(b), as_],
                Template::I => [int(-b), zero(), ar, &as_ - &int(b)],
                Template::J | Template::L => [-&as_, &int(b) - &as_, int(b - a * m), zero()],
                _ => [-&ar - int(b), -&ar, zero(), int(amb)],
            };
            let [lp, lq, lr, ls] = labels;
            (
                vec![Pt(P, lp), Pt(Q, lq), Pt(R, lr), Pt(S, ls)],
                vec![
                    (P, Q, b.abs()),
                    (P, S, a.abs()),
                    (Q, R, a.abs()),
                    (R, S, amb.abs()),
                ],
            )
        }
    };
    let weights = fixed_point_weights(act);
    let mut vertices = Vec::new();
    let mut id_of = std::collections::BTreeMap::new();
    for (id, node) in nodes.into_iter().enumerate() {
        let v = match node {
            Node::Point(tag, mu) => {
                let (w1, w2) = weights[tag as usize].weights;
                id_of.insert(tag, id);
                GraphVertex::new(id, VertexKind::isolated(w1, w2), mu).tagged(tag)
            }
            Node::Surface(mu, area) => GraphVertex::new(id, VertexKind::fat(area), mu),
        };
        vertices.push(v);
    }
    let edges = edges
        .into_iter()
        .filter(|&(_, _, k)| k >= 2)
        .map(|(x, y, k)| GraphEdge {
            a: id_of[&x],
            b: id_of[&y],
            k: k as u64,
        })
        .collect();
    KarshonGraph::new(vertices, edges).expect("templates only produce well-formed graphs")
}

/// Conjugation by the Weyl element of the torus.
pub fn weyl_conjugate(act: &CircleAction) -> CircleAction {
    CircleAction {
        a: -act.a,
        b: act.b - act.a * act.mi(),
        m: act.m,
        lambda: act.lambda.clone(),
    }
}

pub fn are_equivalent(a1: &CircleAction, a2: &CircleAction) -> Result<bool, ActionError> {
    if a1.lambda != a2.lambda {
        return Err(ActionError::LambdaMismatch(
            a1.lambda.to_string(),
            a2.lambda.to_string(),
        ));
    }
    Ok(graphs_equivalent(&build_graph(a1), &build_graph(a2)))
}

/// The pairs (c, d) predicted to give actions equivalent to (a, b) inside
/// the same toric action: the Weyl orbit together with t -> 1/t. The square
/// (m = 0, lambda = 1) also swaps the two factors.
pub fn weyl_orbit(act: &CircleAction) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = labelled_orbit(act).into_iter().map(|(p, _)| p).collect();
    out.sort();
    out.dedup();
    out
}

/// [`weyl_orbit`] with the group element producing each pair.
pub fn labelled_orbit(act: &CircleAction) -> Vec<((i64, i64), &'static str)> {
    let (a, b, amb) = (act.a, act.b, act.am_minus_b());
    let mut out = vec![
        ((a, b), "identity"),
        ((-a, -b), "reparametrization"),
        ((-a, -amb), "weyl"),
        ((a, amb), "weyl+reparametrization"),
    ];
    if act.m == 0 && act.lambda == Rational::one() {
        out.extend([(b, a), (-b, -a), (-b, a), (b, -a)].map(|p| (p, "factor-swap")));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionEntry {
    pub target_m: u32,
    pub subcircle: (i64, i64),
    pub complex_codim: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricExtensionReport {
    pub entries: Vec<ExtensionEntry>,
}

impl ToricExtensionReport {
    pub fn targets(&self) -> Vec<u32> {
        let mut t: Vec<u32> = self.entries.iter().map(|e| e.target_m).collect();
        t.sort();
        t
    }
}

/// The second toric action containing the circle, if there is one, with
/// the matching subcircle there.
pub fn second_extension(act: &CircleAction) -> Option<(u32, (i64, i64))> {
    let (a, b) = (act.a, act.b);
    if a.abs() != 1 || b == 0 || act.am_minus_b() == 0 {
        return None;
    }
    let t = 2 * b - a * act.mi();
    let target = t.unsigned_abs();
    if act.lambda.scale(2) <= Rational::integer(target as i64 + act.epsilon()) {
        return None;
    }
    let d = match (a, t.signum()) {
        (1, 1) | (1, 0) | (-1, 0) | (-1, -1) => b,
        _ => -b,
    };
    Some((target as u32, (a, d)))
}

fn codim_in_presentation(c: i64, d: i64, s: u32) -> u32 {
    let s = i64::from(s);
    let hit = |j: i64| (1..s).contains(&j);
    match c {
        1 => u32::from(hit(d)),
        -1 => u32::from(hit(-d)),
        _ => 0,
    }
}

pub fn toric_extensions(act: &CircleAction) -> ToricExtensionReport {
    let mut entries = vec![ExtensionEntry {
        target_m: act.m,
        subcircle: (act.a, act.b),
        complex_codim: codim_in_presentation(act.a, act.b, act.m),
    }];
    if let Some((target_m, (c, d))) = second_extension(act) {
        entries.push(ExtensionEntry {
            target_m,
            subcircle: (c, d),
            complex_codim: codim_in_presentation(c, d, target_m),
        });
    }
    ToricExtensionReport { entries }
}

pub fn strata_intersections(act: &CircleAction) -> Vec<u32> {
    toric_extensions(act).targets()
}

/// Complex codimension of the stratum U_s, computed in the presentation of
/// the action as a subcircle of the toric action with index s.
pub fn stratum_codimension(act: &CircleAction, s: u32) -> Result<u32, ActionError> {
    let report = toric_extensions(act);
    report
        .entries
        .iter()
        .find(|e| e.target_m == s)
        .map(|e| e.complex_codim)
        .ok_or(ActionError::StratumNotIntersected {
            s,
            strata: report.targets(),
        })
}

/// Dimension of the fixed part of the deformation space of the toric
/// structure, from the isotropy weights on the balanced basis.
pub fn invariant_deformation_dimension(act: &CircleAction) -> u32 {
    let (a, b, k) = (act.a, act.b, act.k());
    if act.m == 0 {
        return 0;
    }
    let count = if act.epsilon() == 0 {
        let (a2, b2) = (k * a - b, a);
        (0..=2 * k - 2)
            .filter(|j| a2 + b2 * (k - 1 - j) == 0)
            .count()
    } else {
        let (a2, b2) = ((k + 1) * a - b, k * a - b);
        (0..=2 * k - 1)
            .filter(|j| (a2 - b2) * (k - j) + b2 == 0)
            .count()
    };
    count as u32
}
