//! Delzant polygons, Hirzebruch trapezoids and their affine symmetry groups.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{cross, Agl2, ArithError, LatticeVector, Point, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DelzantError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} is repeated")]
    RepeatedVertex(usize),
    #[error("vertices must be listed counterclockwise (signed area {0} is not positive)")]
    NotCounterclockwise(Rational),
    #[error("area positivity fails: {0}")]
    LambdaOutOfRange(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// The two S^2-bundles over S^2 distinguished by the parity of the
/// Hirzebruch index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Manifold {
    /// S^2 x S^2, even m.
    #[serde(rename = "S2xS2")]
    Product,
    /// CP^2 # -CP^2, odd m.
    #[serde(rename = "CP2#-CP2")]
    NonTrivialBundle,
}

impl Manifold {
    pub fn from_parity(m: u32) -> Self {
        if m.is_multiple_of(2) {
            Manifold::Product
        } else {
            Manifold::NonTrivialBundle
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Manifold::Product => "S2xS2",
            Manifold::NonTrivialBundle => "CP2#-CP2",
        }
    }
}

impl fmt::Display for Manifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks that the Hirzebruch surface of index `m` exists for this `lambda`.
/// Even `m = 2k` needs `lambda >= 1` and `lambda > k`; odd `m = 2k+1` needs
/// `lambda > k + 1`.
pub fn check_lambda(m: u32, lambda: &Rational) -> Result<(), DelzantError> {
    let k = i64::from(m / 2);
    if m.is_multiple_of(2) {
        if lambda < &Rational::one() {
            return Err(DelzantError::LambdaOutOfRange(format!(
                "lambda >= 1 required for even m (got lambda = {lambda})"
            )));
        }
        if lambda <= &Rational::integer(k) {
            return Err(DelzantError::LambdaOutOfRange(format!(
                "lambda - k > 0 required with m = {m}, k = {k} (got lambda = {lambda})"
            )));
        }
    } else if lambda <= &Rational::integer(k + 1) {
        return Err(DelzantError::LambdaOutOfRange(format!(
            "lambda - k - 1 > 0 required with m = {m}, k = {k} (got lambda = {lambda})"
        )));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct DelzantPolygon {
    vertices: Vec<Point>,
}

impl DelzantPolygon {
    /// Accepts at least three distinct vertices in counterclockwise order.
    /// Convexity and smoothness are left to [`validate_delzant`].
    pub fn new(vertices: Vec<Point>) -> Result<Self, DelzantError> {
        if vertices.len() < 3 {
            return Err(DelzantError::TooFewVertices(vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for (i, v) in vertices.iter().enumerate() {
            if !seen.insert(v) {
                return Err(DelzantError::RepeatedVertex(i));
            }
        }
        let area = signed_area2(&vertices);
        if !area.is_positive() {
            return Err(DelzantError::NotCounterclockwise(area));
        }
        Ok(DelzantPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn vertex(&self, i: isize) -> &Point {
        let n = self.vertices.len() as isize;
        &self.vertices[i.rem_euclid(n) as usize]
    }

    /// Image under an affine map. Orientation-reversing maps reverse the
    /// vertex order so the result stays counterclockwise.
    pub fn transform(&self, g: &Agl2) -> DelzantPolygon {
        let mut vs: Vec<Point> = self.vertices.iter().map(|p| g.apply(p)).collect();
        if g.det() < 0 {
            vs.reverse();
        }
        DelzantPolygon { vertices: vs }
    }

    pub fn vertex_set(&self) -> BTreeSet<Point> {
        self.vertices.iter().cloned().collect()
    }
}

impl TryFrom<Vec<Point>> for DelzantPolygon {
    type Error = DelzantError;
    fn try_from(v: Vec<Point>) -> Result<Self, Self::Error> {
        DelzantPolygon::new(v)
    }
}

impl From<DelzantPolygon> for Vec<Point> {
    fn from(p: DelzantPolygon) -> Self {
        p.vertices
    }
}

impl fmt::Debug for DelzantPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vertices).finish()
    }
}

// Twice the signed area (shoelace).
fn signed_area2(vs: &[Point]) -> Rational {
    let n = vs.len();
    (0..n).fold(Rational::zero(), |acc, i| {
        acc + cross(&vs[i], &vs[(i + 1) % n])
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DelzantProperty {
    Simplicity,
    Rationality,
    Smoothness,
    Convexity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure<P> {
    pub property: P,
    pub vertex: Option<usize>,
    pub message: String,
}

/// Outcome of a validation pass; `valid` holds exactly when `failures` is
/// empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport<P> {
    pub valid: bool,
    pub failures: Vec<Failure<P>>,
}

impl<P> ValidationReport<P> {
    pub fn from_failures(failures: Vec<Failure<P>>) -> Self {
        ValidationReport {
            valid: failures.is_empty(),
            failures,
        }
    }

    pub fn has(&self, property: &P) -> bool
    where
        P: PartialEq,
    {
        self.failures.iter().any(|f| &f.property == property)
    }
}

pub fn validate_delzant(poly: &DelzantPolygon) -> ValidationReport<DelzantProperty> {
    let n = poly.len() as isize;
    let mut failures = Vec::new();
    for i in 0..n {
        let prev = poly.vertex(i - 1);
        let here = poly.vertex(i);
        let next = poly.vertex(i + 1);
        let turn = cross(&here.sub(prev), &next.sub(here));
        if !turn.is_positive() {
            let what = if turn.is_zero() {
                "collinear with its neighbours"
            } else {
                "reflex"
            };
            failures.push(Failure {
                property: DelzantProperty::Convexity,
                vertex: Some(i as usize),
                message: format!("vertex {here:?} is {what}"),
            });
            continue;
        }
        let dirs = LatticeVector::primitive_direction(&next.sub(here))
            .and_then(|u| Ok((u, LatticeVector::primitive_direction(&prev.sub(here))?)));
        match dirs {
            Ok((u, v)) => {
                let det = u.det(&v);
                if det.abs() != 1 {
                    failures.push(Failure {
                        property: DelzantProperty::Smoothness,
                        vertex: Some(i as usize),
                        message: format!(
                            "edge directions {:?} and {:?} at {here:?} have determinant {det}",
                            (u.x, u.y),
                            (v.x, v.y)
                        ),
                    });
                }
            }
            Err(e) => failures.push(Failure {
                property: DelzantProperty::Rationality,
                vertex: Some(i as usize),
                message: e.to_string(),
            }),
        }
    }
    // a star polygon turns left everywhere yet is not convex
    if failures.is_empty() {
        for i in 0..n {
            let a = poly.vertex(i);
            let b = poly.vertex(i + 1);
            for j in 0..n {
                if j == i || j == (i + 1) % n {
                    continue;
                }
                let c = poly.vertex(j);
                if !cross(&b.sub(a), &c.sub(a)).is_positive() {
                    failures.push(Failure {
                        property: DelzantProperty::Simplicity,
                        vertex: Some(j as usize),
                        message: format!(
                            "vertex {c:?} is not strictly inside the half-plane of edge {i}"
                        ),
                    });
                }
            }
        }
    }
    ValidationReport::from_failures(failures)
}

/// The moment polygon of the Hirzebruch surface of index `m`, normalized so
/// the fibre has area 1.
pub fn hirzebruch_trapezoid(m: u32, lambda: &Rational) -> Result<DelzantPolygon, DelzantError> {
    check_lambda(m, lambda)?;
    let k = i64::from(m / 2);
    let eps = i64::from(m % 2);
    // top edge runs from (0,1) to (lambda - k - eps, 1), bottom to (lambda + k, 0)
    let s = lambda + &Rational::integer(k);
    let r = lambda - &Rational::integer(k + eps);
    DelzantPolygon::new(vec![
        Point::new(0, 0),
        Point(s, Rational::zero()),
        Point(r, Rational::one()),
        Point::new(0, 1),
    ])
}

fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

/// All integral affine maps with unit determinant permuting the vertex set.
/// A candidate is fixed by the images of vertex 0 and its two neighbours.
pub fn polygon_symmetries(poly: &DelzantPolygon) -> Vec<Agl2> {
    let vs = poly.vertices();
    let n = vs.len();
    let target = poly.vertex_set();
    let v0 = &vs[0];
    let e1 = vs[1].sub(v0);
    let e2 = vs[n - 1].sub(v0);
    let det_e = cross(&e1, &e2);
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if i == j || j == l || i == l {
                    continue;
                }
                let f1 = vs[j].sub(&vs[i]);
                let f2 = vs[l].sub(&vs[i]);
                // solve M [e1 e2] = [f1 f2] via Cramer
                let col = |f_a: &Rational, f_b: &Rational, e_a: &Rational, e_b: &Rational| {
                    (f_a * e_b - f_b * e_a).checked_div(&det_e)
                };
                let Ok(m00) = col(f1.x(), f2.x(), e1.y(), e2.y()) else {
                    continue;
                };
                let Ok(m01) = col(f1.x(), f2.x(), e1.x(), e2.x()).map(|r| -r) else {
                    continue;
                };
                let Ok(m10) = col(f1.y(), f2.y(), e1.y(), e2.y()) else {
                    continue;
                };
                let Ok(m11) = col(f1.y(), f2.y(), e1.x(), e2.x()).map(|r| -r) else {
                    continue;
                };
                let entries = [&m00, &m01, &m10, &m11];
                if !entries.iter().all(|e| e.is_integer()) {
                    continue;
                }
                let ints: Option<Vec<i64>> = entries.iter().map(|e| to_i64(e.numer())).collect();
                let Some(ints) = ints else { continue };
                let matrix = [[ints[0], ints[1]], [ints[2], ints[3]]];
                let Ok(lin) = Agl2::new(matrix, Point::new(0, 0)) else {
                    continue;
                };
                let moved = lin.apply(v0);
                let shift = vs[i].sub(&moved);
                let Ok(g) = Agl2::new(matrix, shift) else {
                    continue;
                };
                let image: BTreeSet<Point> = vs.iter().map(|p| g.apply(p)).collect();
                if image == target {
                    out.insert(g);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Hirzebruch indices of the pairwise inequivalent toric actions on the
/// given manifold with fibre area 1 and base area `lambda`.
pub fn enumerate_toric_actions(
    manifold: Manifold,
    lambda: &Rational,
) -> Result<Vec<u32>, DelzantError> {
    let ell: BigInt = match manifold {
        Manifold::Product if lambda < &Rational::one() => {
            return Err(DelzantError::LambdaOutOfRange(format!(
                "lambda >= 1 required on S2xS2 (got lambda = {lambda})"
            )))
        }
        Manifold::NonTrivialBundle if lambda <= &Rational::one() => {
            return Err(DelzantError::LambdaOutOfRange(format!(
                "lambda > 1 required on CP2#-CP2 (got lambda = {lambda})"
            )))
        }
        _ => lambda.ceil() - 1,
    };
    let ell = ell.to_u32().ok_or_else(|| {
        DelzantError::LambdaOutOfRange(format!("lambda = {lambda} is too large to enumerate"))
    })?;
    Ok(match manifold {
        Manifold::Product => (0..=ell).map(|k| 2 * k).collect(),
        Manifold::NonTrivialBundle => (0..ell).map(|k| 2 * k + 1).collect(),
    })
}
