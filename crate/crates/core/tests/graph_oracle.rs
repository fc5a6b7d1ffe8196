//! Rebuilds every graph from the trapezoid itself (moment map a*x + b*y on
//! the corners, isotropy from the edge normals) and compares it with the
//! template tables.

use std::collections::BTreeMap;

use hamsym::actions::{build_graph, fixed_point_weights, CircleAction};
use hamsym::arith::Rational;
use hamsym::delzant::hirzebruch_trapezoid;
use hamsym::karshon::{sphere_data, validate_admissible, KarshonGraph, VertexKind};

type Label = (Rational, VertexKind);

fn grid() -> Vec<CircleAction> {
    let lambdas = ["1", "3/2", "2", "5/2", "3", "7/2"];
    let mut out = Vec::new();
    for m in 0..=6u32 {
        for l in lambdas {
            for a in -6..=6i64 {
                for b in -6..=6i64 {
                    if let Ok(x) = CircleAction::new(a, b, m, l.parse().unwrap()) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}

// vertex labels and (south label, north label, k) edges from the polygon
fn from_polygon(act: &CircleAction) -> (Vec<Label>, Vec<(Rational, Rational, u64)>) {
    let poly = hirzebruch_trapezoid(act.m(), act.lambda()).unwrap();
    // polygon order is P, S, R, Q
    let [p, s, r, q] = [0, 1, 2, 3].map(|i| poly.vertices()[i].clone());
    let (a, b) = (act.a(), act.b());
    let mu = |pt: &hamsym::arith::Point| pt.x().scale(a) + pt.y().scale(b);
    let w = fixed_point_weights(act);
    let corners = [
        (&p, w[0].weights),
        (&q, w[1].weights),
        (&r, w[2].weights),
        (&s, w[3].weights),
    ];
    // corner index pairs with isotropy and lattice length
    let sides = [
        (0usize, 1usize, b.abs(), Rational::one()),
        (0, 3, a.abs(), s.x().clone()),
        (1, 2, a.abs(), r.x().clone()),
        (2, 3, (a * i64::from(act.m()) - b).abs(), Rational::one()),
    ];
    let mut absorbed = [false; 4];
    let mut labels: Vec<Label> = Vec::new();
    for &(i, j, k, ref len) in &sides {
        if k == 0 {
            absorbed[i] = true;
            absorbed[j] = true;
            assert_eq!(mu(corners[i].0), mu(corners[j].0));
            labels.push((mu(corners[i].0), VertexKind::fat(len.clone())));
        }
    }
    for (i, (pt, (w1, w2))) in corners.iter().enumerate() {
        if !absorbed[i] {
            labels.push((mu(pt), VertexKind::isolated(*w1, *w2)));
        }
    }
    let lo = labels.iter().map(|l| l.0.clone()).min().unwrap();
    let labels: Vec<Label> = labels.into_iter().map(|(m, k)| (m - &lo, k)).collect();
    let mut edges = Vec::new();
    for &(i, j, k, _) in &sides {
        if k >= 2 {
            let (x, y) = (mu(corners[i].0) - &lo, mu(corners[j].0) - &lo);
            edges.push((x.clone().min(y.clone()), x.max(y), k as u64));
        }
    }
    (labels, edges)
}

fn labels_of(g: &KarshonGraph) -> (Vec<Label>, Vec<(Rational, Rational, u64)>) {
    let by_id: BTreeMap<usize, &Rational> =
        g.vertices().iter().map(|v| (v.id, &v.moment)).collect();
    let labels = g
        .vertices()
        .iter()
        .map(|v| (v.moment.clone(), v.kind.clone()))
        .collect();
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let (x, y) = (by_id[&e.a].clone(), by_id[&e.b].clone());
            (x.clone().min(y.clone()), x.max(y), e.k)
        })
        .collect();
    (labels, edges)
}

#[test]
fn templates_match_the_polygon() {
    let mut checked = 0;
    for act in grid() {
        let (mut want_v, mut want_e) = from_polygon(&act);
        let (mut got_v, mut got_e) = labels_of(&build_graph(&act));
        want_v.sort();
        got_v.sort();
        want_e.sort();
        got_e.sort();
        assert_eq!(got_v, want_v, "vertices of {act}");
        assert_eq!(got_e, want_e, "edges of {act}");
        checked += 1;
    }
    assert!(checked > 1000, "grid unexpectedly small: {checked}");
}

#[test]
fn built_graphs_are_admissible_with_positive_sphere_areas() {
    for act in grid() {
        let g = build_graph(&act);
        let report = validate_admissible(&g);
        assert!(report.valid, "{act}: {:?}", report.failures);
        for e in g.edges() {
            let (south, north) = g.poles(e);
            let (sv, nv) = (g.vertex(south).unwrap(), g.vertex(north).unwrap());
            let normal = |v: &hamsym::karshon::GraphVertex, tangent: i64| match v.kind {
                VertexKind::Isolated { weights: (p, q) } => {
                    if p == tangent {
                        q
                    } else {
                        p
                    }
                }
                _ => unreachable!("edges avoid fat vertices"),
            };
            let k = e.k as i64;
            let d = sphere_data(normal(sv, k), normal(nv, -k), &sv.moment, &nv.moment, k).unwrap();
            assert!(d.area.is_positive(), "{act}");
        }
        if let Some(sum) = g.localization_sum() {
            assert!(sum.is_zero(), "{act}: sum {sum}");
        }
    }
}

#[test]
fn template_l_q_label_uses_the_bottom_length() {
    // a < 0, b < 0, am - b < 0: Q sits at b - a(lambda + k)
    let act = CircleAction::new(-1, -1, 2, "5/2".parse().unwrap()).unwrap();
    let g = build_graph(&act);
    let q = g
        .vertices()
        .iter()
        .find(|v| v.tag == Some(hamsym::karshon::Tag::Q))
        .unwrap();
    let s = act.bottom_length();
    assert_eq!(q.moment, Rational::integer(-1) + s);
}
