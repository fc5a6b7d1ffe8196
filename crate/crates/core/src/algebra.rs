//! Homotopy types of the centralizer, the Pontryagin algebra of the pushout
//! of the two tori, and the homological invariants derived from them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::actions::CircleAction;
use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("characteristic must be 0 or a prime, got {0}")]
    Characteristic(u64),
    #[error("cannot parse word {0:?}: expected e.g. \"w^2 x y t\" or \"1\"")]
    Word(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HomotopyType {
    Torus2,
    Torus2xZ2,
    S1xSO3,
    U2,
    OmegaS3xT3,
}

impl HomotopyType {
    pub const ALL: [HomotopyType; 5] = [
        HomotopyType::Torus2,
        HomotopyType::Torus2xZ2,
        HomotopyType::S1xSO3,
        HomotopyType::U2,
        HomotopyType::OmegaS3xT3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HomotopyType::Torus2 => "Torus2",
            HomotopyType::Torus2xZ2 => "Torus2xZ2",
            HomotopyType::S1xSO3 => "S1xSO3",
            HomotopyType::U2 => "U2",
            HomotopyType::OmegaS3xT3 => "OmegaS3xT3",
        }
    }
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HomotopyType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        HomotopyType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown homotopy type {s:?}"))
    }
}

/// Homotopy type of the group of equivariant symplectomorphisms, by table
/// lookup on (a, b, m, lambda).
pub fn classify_homotopy_type(act: &CircleAction) -> HomotopyType {
    let (a, b, m) = (act.a(), act.b(), i64::from(act.m()));
    let even = act.epsilon() == 0;
    let fixed_surface_row = a == 0 || (m == 0 && b == 0);
    if fixed_surface_row {
        return if even {
            HomotopyType::S1xSO3
        } else {
            HomotopyType::U2
        };
    }
    if m == 0 && act.lambda() == &Rational::one() && a.abs() == 1 && b.abs() == 1 {
        return HomotopyType::Torus2xZ2;
    }
    let amb = a * m - b;
    let threshold = Rational::integer((2 * b - a * m).abs() + act.epsilon());
    if a.abs() == 1 && b != 0 && amb != 0 && act.lambda().scale(2) > threshold {
        return HomotopyType::OmegaS3xT3;
    }
    HomotopyType::Torus2
}

/// A basis word w^alpha x^beta y^gamma t^delta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub alpha: u32,
    pub beta: bool,
    pub gamma: bool,
    pub delta: bool,
}

impl Word {
    pub const ONE: Word = Word {
        alpha: 0,
        beta: false,
        gamma: false,
        delta: false,
    };
    pub const X: Word = Word {
        alpha: 0,
        beta: true,
        gamma: false,
        delta: false,
    };
    pub const Y: Word = Word {
        alpha: 0,
        beta: false,
        gamma: true,
        delta: false,
    };
    pub const T: Word = Word {
        alpha: 0,
        beta: false,
        gamma: false,
        delta: true,
    };
    pub const W: Word = Word {
        alpha: 1,
        beta: false,
        gamma: false,
        delta: false,
    };

    pub fn degree(&self) -> u32 {
        2 * self.alpha + u32::from(self.beta) + u32::from(self.gamma) + u32::from(self.delta)
    }

    /// Every basis word of the given degree.
    pub fn of_degree(n: u32) -> Vec<Word> {
        let mut out = Vec::new();
        for alpha in 0..=n / 2 {
            for bits in 0..8u8 {
                let w = Word {
                    alpha,
                    beta: bits & 1 != 0,
                    gamma: bits & 2 != 0,
                    delta: bits & 4 != 0,
                };
                if w.degree() == n {
                    out.push(w);
                }
            }
        }
        out
    }

    fn letters(&self) -> Vec<Letter> {
        let mut v = Vec::new();
        if self.beta {
            v.push(Letter::X);
        }
        if self.gamma {
            v.push(Letter::Y);
        }
        if self.delta {
            v.push(Letter::T);
        }
        v
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.alpha {
            0 => {}
            1 => parts.push("w".to_string()),
            n => parts.push(format!("w^{n}")),
        }
        for (on, s) in [(self.beta, "x"), (self.gamma, "y"), (self.delta, "t")] {
            if on {
                parts.push(s.to_string());
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

impl FromStr for Word {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, AlgebraError> {
        let bad = || AlgebraError::Word(s.to_string());
        let mut w = Word::ONE;
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens == ["1"] {
            return Ok(w);
        }
        if tokens.is_empty() {
            return Err(bad());
        }
        // letters must appear in normal order w, x, y, t, each at most once
        let mut stage = 0;
        for tok in tokens {
            let next = match tok {
                "w" if stage < 1 => {
                    w.alpha = 1;
                    1
                }
                _ if tok.starts_with("w^") && stage < 1 => {
                    w.alpha = tok[2..].parse().map_err(|_| bad())?;
                    1
                }
                "x" if stage < 2 => {
                    w.beta = true;
                    2
                }
                "y" if stage < 3 => {
                    w.gamma = true;
                    3
                }
                "t" if stage < 4 => {
                    w.delta = true;
                    4
                }
                _ => return Err(bad()),
            };
            stage = next;
        }
        Ok(w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Letter {
    X,
    Y,
    T,
}

/// Rational combination of basis words; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn word(w: Word) -> Self {
        AlgebraElement::term(w, Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(w, c);
        e
    }

    pub fn one() -> Self {
        AlgebraElement::word(Word::ONE)
    }

    pub fn x() -> Self {
        AlgebraElement::word(Word::X)
    }

    pub fn y() -> Self {
        AlgebraElement::word(Word::Y)
    }

    pub fn t() -> Self {
        AlgebraElement::word(Word::T)
    }

    pub fn w() -> Self {
        AlgebraElement::word(Word::W)
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w, d) in &self.terms {
            out.add_term(*w, d * c);
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.scale(&Rational::integer(-1)))
    }

    /// Degree of every term, if the element is homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Word::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        pontryagin_multiply(self, other)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if c == &Rational::one() {
                    w.to_string()
                } else {
                    format!("{c} {w}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            map.serialize_entry(&w.to_string(), c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, Rational>::deserialize(deserializer)?;
        let mut out = AlgebraElement::zero();
        for (k, c) in raw {
            out.add_term(k.parse().map_err(serde::de::Error::custom)?, c);
        }
        Ok(out)
    }
}

// Rewrites w^alpha * (letters) into basis words using
// tx = -xt, ty = -yt, yx = w - xy, xx = yy = tt = 0.
fn normalize(coeff: Rational, alpha: u32, letters: Vec<Letter>, out: &mut AlgebraElement) {
    let mut stack = vec![(coeff, alpha, letters)];
    while let Some((c, alpha, ls)) = stack.pop() {
        let Some(i) = (0..ls.len().saturating_sub(1)).find(|&i| ls[i] >= ls[i + 1]) else {
            let w = Word {
                alpha,
                beta: ls.contains(&Letter::X),
                gamma: ls.contains(&Letter::Y),
                delta: ls.contains(&Letter::T),
            };
            out.add_term(w, c);
            continue;
        };
        let (l, r) = (ls[i], ls[i + 1]);
        if l == r {
            continue;
        }
        let mut swapped = ls.clone();
        swapped.swap(i, i + 1);
        match (l, r) {
            (Letter::Y, Letter::X) => {
                let mut shorter = ls.clone();
                shorter.drain(i..i + 2);
                stack.push((c.clone(), alpha + 1, shorter));
                stack.push((-c, alpha, swapped));
            }
            _ => stack.push((-c, alpha, swapped)),
        }
    }
}

pub fn pontryagin_multiply(u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (wu, cu) in &u.terms {
        for (wv, cv) in &v.terms {
            let mut letters = wu.letters();
            letters.extend(wv.letters());
            normalize(cu * cv, wu.alpha + wv.alpha, letters, &mut out);
        }
    }
    out
}

/// Graded commutator uv - (-1)^{|u||v|} vu for homogeneous u and v.
pub fn graded_commutator(u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
    let (du, dv) = (u.degree().unwrap_or(0), v.degree().unwrap_or(0));
    let sign = if (du * dv) % 2 == 0 { 1 } else { -1 };
    u.mul(v).sub(&v.mul(u).scale(&Rational::integer(sign)))
}

/// Generators of the homology of the two tori before the pushout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusGenerator {
    X1,
    X2,
    Y1,
    Y2,
}

/// Expresses a product of torus generators in the basis, using
/// x1 = t - b x2 and y1 = t - b' y2 with x2 = x, y2 = y.
pub fn from_torus_generators(word: &[TorusGenerator], b: i64, b_prime: i64) -> AlgebraElement {
    word.iter().fold(AlgebraElement::one(), |acc, g| {
        let factor = match g {
            TorusGenerator::X2 => AlgebraElement::x(),
            TorusGenerator::Y2 => AlgebraElement::y(),
            TorusGenerator::X1 => {
                AlgebraElement::t().sub(&AlgebraElement::x().scale(&Rational::integer(b)))
            }
            TorusGenerator::Y1 => {
                AlgebraElement::t().sub(&AlgebraElement::y().scale(&Rational::integer(b_prime)))
            }
        };
        acc.mul(&factor)
    })
}

/// A field characteristic: 0 or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Characteristic(u64);

impl Characteristic {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        let prime = p >= 2
            && (2..)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d));
        if p == 0 || prime {
            Ok(Characteristic(p))
        } else {
            Err(AlgebraError::Characteristic(p))
        }
    }

    pub fn zero() -> Self {
        Characteristic(0)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Characteristic {
    type Error = AlgebraError;
    fn try_from(p: u64) -> Result<Self, AlgebraError> {
        Characteristic::new(p)
    }
}

impl From<Characteristic> for u64 {
    fn from(c: Characteristic) -> u64 {
        c.0
    }
}

// Poincare polynomial of a product (Kunneth over a field).
fn convolve(p: &[u64], q: &[u64]) -> Vec<u64> {
    let mut out = vec![0; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn truncate(mut p: Vec<u64>, max_degree: usize) -> Vec<u64> {
    p.resize(max_degree + 1, 0);
    p
}

/// Betti numbers in degrees 0..=max_degree over a field of the given
/// characteristic.
pub fn homology_ranks(
    t: HomotopyType,
    max_degree: usize,
    characteristic: Characteristic,
) -> Vec<u64> {
    let circle = [1, 1];
    let torus2 = convolve(&circle, &circle);
    match t {
        HomotopyType::Torus2 => truncate(torus2, max_degree),
        HomotopyType::Torus2xZ2 => truncate(torus2.iter().map(|r| 2 * r).collect(), max_degree),
        HomotopyType::S1xSO3 => {
            let so3: &[u64] = if characteristic.value() == 2 {
                &[1, 1, 1, 1]
            } else {
                &[1, 0, 0, 1]
            };
            truncate(convolve(&circle, so3), max_degree)
        }
        // U(2) is homeomorphic to S1 x S3
        HomotopyType::U2 => truncate(convolve(&circle, &[1, 0, 0, 1]), max_degree),
        HomotopyType::OmegaS3xT3 => {
            // the loop space of S3 has one class in each even degree
            let loops: Vec<u64> = (0..=max_degree).map(|d| u64::from(d % 2 == 0)).collect();
            let torus3 = convolve(&torus2, &circle);
            truncate(convolve(&loops, &torus3), max_degree)
        }
    }
}

/// Number of basis words of each degree, 0..=max_degree.
pub fn word_hilbert_series(max_degree: u32) -> Vec<u64> {
    (0..=max_degree)
        .map(|n| Word::of_degree(n).len() as u64)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// Cohomology ring of the pushout as generators and relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub shape: String,
    pub generators: Vec<Generator>,
    pub relations: Vec<String>,
    /// Highest nonzero power of each generator, or None if unbounded.
    #[serde(skip)]
    pub nilpotency: Vec<Option<u32>>,
}

impl Presentation {
    /// Counts monomials: each generator contributes powers up to its
    /// nilpotency bound.
    pub fn hilbert_series(&self, max_degree: usize) -> Vec<u64> {
        let mut series = vec![0u64; max_degree + 1];
        series[0] = 1;
        for (g, bound) in self.generators.iter().zip(&self.nilpotency) {
            let d = g.degree as usize;
            let top = bound.map_or(max_degree / d.max(1), |b| b as usize);
            let factor: Vec<u64> = (0..=max_degree)
                .map(|i| u64::from(i % d == 0 && i / d <= top))
                .collect();
            series = truncate(convolve(&series, &factor), max_degree);
        }
        series
    }
}

pub fn cohomology_presentation(characteristic: Characteristic) -> Presentation {
    let gens = [("t̂", 1), ("x̂", 1), ("ŷ", 1), ("ŵ", 2)];
    let generators = gens
        .iter()
        .map(|&(n, d)| Generator {
            name: n.into(),
            degree: d,
        })
        .collect();
    let nilpotency = vec![Some(1), Some(1), Some(1), None];
    let squares = ["t̂^2 = 0", "x̂^2 = 0", "ŷ^2 = 0"].map(String::from);
    if characteristic.value() == 2 {
        let mut relations = squares.to_vec();
        relations.push("uv = vu".into());
        Presentation {
            shape: "k[t̂,x̂,ŷ]/(t̂²,x̂²,ŷ²)⊗k[ŵ]".into(),
            generators,
            relations,
            nilpotency,
        }
    } else {
        let mut relations = squares.to_vec();
        relations.push("uv = (-1)^(|u||v|) vu".into());
        Presentation {
            shape: "Λ(t̂,x̂,ŷ)⊗S(ŵ)".into(),
            generators,
            relations,
            nilpotency,
        }
    }
}

/// Ranks of the rational homotopy groups in degrees 1..=max_degree.
pub fn rational_homotopy_dims(t: HomotopyType, max_degree: usize) -> Vec<u64> {
    let nonzero: &[(usize, u64)] = match t {
        HomotopyType::OmegaS3xT3 => &[(1, 3), (2, 1)],
        HomotopyType::Torus2 | HomotopyType::Torus2xZ2 => &[(1, 2)],
        HomotopyType::S1xSO3 | HomotopyType::U2 => &[(1, 1), (3, 1)],
    };
    (1..=max_degree)
        .map(|d| nonzero.iter().find(|(e, _)| *e == d).map_or(0, |(_, r)| *r))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn act(a: i64, b: i64, m: u32, l: Rational) -> CircleAction {
        CircleAction::new(a, b, m, l).unwrap()
    }

    fn el(s: &str) -> AlgebraElement {
        AlgebraElement::word(s.parse().unwrap())
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_homotopy_type(&act(0, 1, 4, q(3, 1))),
            HomotopyType::S1xSO3
        );
        assert_eq!(
            classify_homotopy_type(&act(1, 1, 0, q(1, 1))),
            HomotopyType::Torus2xZ2
        );
        assert_eq!(
            classify_homotopy_type(&act(1, 1, 3, q(5, 2))),
            HomotopyType::OmegaS3xT3
        );
        // m = 3 needs lambda > 2, so lambda = 2 is outside the symplectic range
        assert!(CircleAction::new(1, 1, 3, q(2, 1)).is_err());
        assert_eq!(
            classify_homotopy_type(&act(0, 1, 3, q(5, 2))),
            HomotopyType::U2
        );
        assert_eq!(
            classify_homotopy_type(&act(1, 0, 0, q(2, 1))),
            HomotopyType::S1xSO3
        );
        assert_eq!(
            classify_homotopy_type(&act(2, 1, 0, q(2, 1))),
            HomotopyType::Torus2
        );
    }

    #[test]
    fn multiplication_examples() {
        let (x, y) = (AlgebraElement::x(), AlgebraElement::y());
        assert!(x.mul(&x).is_zero());
        assert_eq!(y.mul(&x), AlgebraElement::w().sub(&el("x y")));
        assert_eq!(el("x y").mul(&el("x y")), el("w x y"));
        assert_eq!(AlgebraElement::t().mul(&x), el("x t").scale(&q(-1, 1)));
    }

    #[test]
    fn commutator_relations() {
        let (x, y, t, w) = (
            AlgebraElement::x(),
            AlgebraElement::y(),
            AlgebraElement::t(),
            AlgebraElement::w(),
        );
        assert_eq!(graded_commutator(&x, &y), w);
        assert!(graded_commutator(&t, &x).is_zero());
        assert!(graded_commutator(&t, &y).is_zero());
        for n in 0..6 {
            for word in Word::of_degree(n) {
                assert!(graded_commutator(&w, &AlgebraElement::word(word)).is_zero());
            }
        }
    }

    #[test]
    fn torus_generators_become_an_exterior_pair() {
        use TorusGenerator::*;
        for (b, bp) in [(0, 0), (1, -2), (3, 5)] {
            assert!(from_torus_generators(&[X1, X1], b, bp).is_zero());
            assert!(from_torus_generators(&[Y1, Y1], b, bp).is_zero());
            let xy = from_torus_generators(&[X1, X2], b, bp);
            let yx = from_torus_generators(&[X2, X1], b, bp);
            assert_eq!(xy, yx.scale(&q(-1, 1)));
            let again = from_torus_generators(&[Y1, Y2], b, bp);
            assert_eq!(
                again,
                from_torus_generators(&[Y2, Y1], b, bp).scale(&q(-1, 1))
            );
        }
        assert_eq!(
            from_torus_generators(&[X1], 2, 0),
            AlgebraElement::t().sub(&el("x").scale(&q(2, 1)))
        );
    }

    #[test]
    fn rank_examples() {
        let c0 = Characteristic::zero();
        let c2 = Characteristic::new(2).unwrap();
        assert_eq!(
            homology_ranks(HomotopyType::OmegaS3xT3, 5, c0),
            vec![1, 3, 4, 4, 4, 4]
        );
        assert_eq!(
            homology_ranks(HomotopyType::Torus2, 3, c0),
            vec![1, 2, 1, 0]
        );
        let r = homology_ranks(HomotopyType::OmegaS3xT3, 12, c2);
        assert!(r[2..].iter().all(|&x| x == 4));
        assert_eq!(
            homology_ranks(HomotopyType::Torus2xZ2, 3, c0),
            vec![2, 4, 2, 0]
        );
        assert_eq!(
            homology_ranks(HomotopyType::S1xSO3, 5, c0),
            vec![1, 1, 0, 1, 1, 0]
        );
        assert_eq!(
            homology_ranks(HomotopyType::S1xSO3, 4, c2),
            vec![1, 2, 2, 2, 1]
        );
        assert_eq!(homology_ranks(HomotopyType::U2, 4, c2), vec![1, 1, 0, 1, 1]);
        assert_eq!(homology_ranks(HomotopyType::Torus2, 0, c0), vec![1]);
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert!(Characteristic::new(4).is_err());
        assert!(Characteristic::new(1).is_err());
        for p in [0, 2, 3, 5, 7, 101] {
            assert!(Characteristic::new(p).is_ok());
        }
    }

    #[test]
    fn presentations() {
        let p0 = cohomology_presentation(Characteristic::zero());
        assert_eq!(p0.shape, "Λ(t̂,x̂,ŷ)⊗S(ŵ)");
        let p2 = cohomology_presentation(Characteristic::new(2).unwrap());
        assert_eq!(p2.shape, "k[t̂,x̂,ŷ]/(t̂²,x̂²,ŷ²)⊗k[ŵ]");
        let p3 = cohomology_presentation(Characteristic::new(3).unwrap());
        assert_eq!(p3.shape, p0.shape);
        for p in [0, 2, 3, 5] {
            let c = Characteristic::new(p).unwrap();
            assert_eq!(
                cohomology_presentation(c).hilbert_series(20),
                homology_ranks(HomotopyType::OmegaS3xT3, 20, c)
            );
        }
        let json = serde_json::to_value(&p0).unwrap();
        assert_eq!(
            json["generators"][3],
            serde_json::json!({"name": "ŵ", "degree": 2})
        );
    }

    #[test]
    fn homotopy_dims() {
        assert_eq!(
            rational_homotopy_dims(HomotopyType::OmegaS3xT3, 4),
            vec![3, 1, 0, 0]
        );
        assert_eq!(rational_homotopy_dims(HomotopyType::Torus2, 2), vec![2, 0]);
        assert_eq!(rational_homotopy_dims(HomotopyType::OmegaS3xT3, 1), vec![3]);
        assert_eq!(
            rational_homotopy_dims(HomotopyType::S1xSO3, 4),
            vec![1, 0, 1, 0]
        );
    }

    #[test]
    fn word_strings() {
        for n in 0..7 {
            for w in Word::of_degree(n) {
                assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
            }
        }
        assert!("x w".parse::<Word>().is_err());
        assert!("x x".parse::<Word>().is_err());
        let e = AlgebraElement::w().sub(&el("x y"));
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"x y":"-1","w":"1"}"#);
        assert_eq!(serde_json::from_str::<AlgebraElement>(&s).unwrap(), e);
    }

    fn element() -> impl Strategy<Value = AlgebraElement> {
        let words: Vec<Word> = (0..5).flat_map(Word::of_degree).collect();
        prop::collection::vec((prop::sample::select(words), -3i64..4), 1..4).prop_map(|terms| {
            terms
                .into_iter()
                .fold(AlgebraElement::zero(), |acc, (w, c)| {
                    acc.add(&AlgebraElement::term(w, q(c, 1)))
                })
        })
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(u in element(), v in element(), w in element()) {
            prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        }

        #[test]
        fn multiplication_distributes(u in element(), v in element(), w in element()) {
            prop_assert_eq!(u.mul(&v.add(&w)), u.mul(&v).add(&u.mul(&w)));
        }
    }
}
