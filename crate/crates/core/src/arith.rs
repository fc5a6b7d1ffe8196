//! Exact rationals, integer lattice vectors, and the affine groups
//! AGL(1,Z) and AGL(2,Z) acting on moment labels and polygons.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational {0:?}: expected \"p\" or \"p/q\" with integer p, q")]
    Parse(String),
    #[error("zero lattice vector has no primitive direction")]
    ZeroVector,
    #[error("matrix determinant is {0}, expected +1 or -1")]
    NotUnimodular(i64),
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
}

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in reduced form.
    pub fn new(num: i64, den: i64) -> Result<Self, ArithError> {
        if den == 0 {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// The integer value, if this rational is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Self, ArithError> {
        Ok(self * &other.recip()?)
    }

    pub fn scale(&self, n: i64) -> Self {
        Rational(&self.0 * BigRational::from_integer(n.into()))
    }

    pub fn max<'a>(&'a self, other: &'a Rational) -> &'a Rational {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min<'a>(&'a self, other: &'a Rational) -> &'a Rational {
        if self <= other {
            self
        } else {
            other
        }
    }
}

/// Free function form of [`Rational::new`].
pub fn rational_normalize(num: i64, den: i64) -> Result<Rational, ArithError> {
    Rational::new(num, den)
}

impl fmt::Display for Rational {
    // "p" when the denominator is one, "p/q" otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

impl FromStr for Rational {
    type Err = ArithError;

    /// Accepts only `p` or `p/q`; decimal notation is rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ArithError::Parse(s.to_string());
        match t.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(
                parse_int(t).ok_or_else(bad)?,
            ))),
            Some((p, q)) => {
                let p = parse_int(p.trim()).ok_or_else(bad)?;
                let q = parse_int(q.trim()).ok_or_else(bad)?;
                Rational::from_big(p, q)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

/// A point of the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point(pub Rational, pub Rational);

impl Point {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        Point(x.into(), y.into())
    }

    pub fn x(&self) -> &Rational {
        &self.0
    }

    pub fn y(&self) -> &Rational {
        &self.1
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point(&self.0 - &other.0, &self.1 - &other.1)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// 2x2 determinant of two rational vectors given as points.
pub fn cross(u: &Point, v: &Point) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector {
    pub x: i64,
    pub y: i64,
}

impl LatticeVector {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticeVector { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// True iff gcd(|x|, |y|) = 1.
    pub fn is_primitive(&self) -> Result<bool, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroVector);
        }
        Ok(self.x.gcd(&self.y) == 1)
    }

    pub fn dot(&self, other: &LatticeVector) -> i64 {
        self.x * other.x + self.y * other.y
    }

    pub fn det(&self, other: &LatticeVector) -> i64 {
        self.x * other.y - self.y * other.x
    }

    /// Primitive integer vector pointing in the direction of a nonzero
    /// rational vector.
    pub fn primitive_direction(v: &Point) -> Result<LatticeVector, ArithError> {
        if v.0.is_zero() && v.1.is_zero() {
            return Err(ArithError::ZeroVector);
        }
        let l = v.0.denom().lcm(v.1.denom());
        let x = v.0.numer() * (&l / v.0.denom());
        let y = v.1.numer() * (&l / v.1.denom());
        let g = x.gcd(&y);
        let x = (x / &g).to_i64().ok_or(ArithError::Overflow)?;
        let y = (y / &g).to_i64().ok_or(ArithError::Overflow)?;
        Ok(LatticeVector { x, y })
    }
}

/// Free function form of [`LatticeVector::is_primitive`].
pub fn primitive_check(v: LatticeVector) -> Result<bool, ArithError> {
    v.is_primitive()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn compose(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// An element `mu -> sign * mu + shift` of AGL(1, Z) acting on moment labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Agl1 {
    pub sign: Sign,
    pub shift: Rational,
}

impl Agl1 {
    pub fn identity() -> Self {
        Agl1 {
            sign: Sign::Plus,
            shift: Rational::zero(),
        }
    }

    pub fn new(sign: Sign, shift: Rational) -> Self {
        Agl1 { sign, shift }
    }

    pub fn apply(&self, mu: &Rational) -> Rational {
        mu.scale(self.sign.value()) + &self.shift
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Agl1) -> Agl1 {
        Agl1 {
            sign: self.sign.compose(other.sign),
            shift: self.apply(&other.shift),
        }
    }

    pub fn inverse(&self) -> Agl1 {
        Agl1 {
            sign: self.sign,
            shift: (-&self.shift).scale(self.sign.value()),
        }
    }
}

/// An element `p -> M p + shift` of AGL(2, Z), with `|det M| = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Agl2 {
    matrix: [[i64; 2]; 2],
    shift: Point,
}

impl Agl2 {
    pub fn new(matrix: [[i64; 2]; 2], shift: Point) -> Result<Self, ArithError> {
        let det = matrix[0][0]
            .checked_mul(matrix[1][1])
            .zip(matrix[0][1].checked_mul(matrix[1][0]))
            .and_then(|(p, q)| p.checked_sub(q))
            .ok_or(ArithError::Overflow)?;
        if det.abs() != 1 {
            return Err(ArithError::NotUnimodular(det));
        }
        Ok(Agl2 { matrix, shift })
    }

    pub fn identity() -> Self {
        Agl2 {
            matrix: [[1, 0], [0, 1]],
            shift: Point::new(0, 0),
        }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn shift(&self) -> &Point {
        &self.shift
    }

    pub fn det(&self) -> i64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }

    pub fn is_identity(&self) -> bool {
        *self == Agl2::identity()
    }

    fn linear(&self, p: &Point) -> Point {
        let [[a, b], [c, d]] = self.matrix;
        Point(p.0.scale(a) + p.1.scale(b), p.0.scale(c) + p.1.scale(d))
    }

    pub fn apply(&self, p: &Point) -> Point {
        let q = self.linear(p);
        Point(q.0 + &self.shift.0, q.1 + &self.shift.1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Agl2) -> Agl2 {
        let [[a, b], [c, d]] = self.matrix;
        let [[e, f], [g, h]] = other.matrix;
        Agl2 {
            matrix: [
                [a * e + b * g, a * f + b * h],
                [c * e + d * g, c * f + d * h],
            ],
            shift: self.apply(&other.shift),
        }
    }

    pub fn inverse(&self) -> Agl2 {
        let [[a, b], [c, d]] = self.matrix;
        let det = self.det();
        // det = ±1 so the adjugate divided by det is integral
        let inv = Agl2 {
            matrix: [[d * det, -b * det], [-c * det, a * det]],
            shift: Point::new(0, 0),
        };
        let s = inv.linear(&self.shift);
        Agl2 {
            matrix: inv.matrix,
            shift: Point(-s.0, -s.1),
        }
    }
}

impl fmt::Debug for Agl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.matrix;
        write!(f, "[[{a}, {b}], [{c}, {d}]] + {:?}", self.shift)
    }
}

/// Free function form of [`Agl2::apply`].
pub fn agl2_apply(g: &Agl2, p: &Point) -> Point {
    g.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(rational_normalize(2, 4).unwrap().to_string(), "1/2");
        assert_eq!(rational_normalize(3, -2).unwrap().to_string(), "-3/2");
        let z = rational_normalize(0, 7).unwrap();
        assert_eq!(z.to_string(), "0");
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(rational_normalize(1, 0), Err(ArithError::ZeroDenominator));
    }

    #[test]
    fn parse_rejects_decimals() {
        assert_eq!("5/2".parse::<Rational>().unwrap(), q(5, 2));
        assert_eq!("-3".parse::<Rational>().unwrap(), q(-3, 1));
        assert_eq!("6/4".parse::<Rational>().unwrap(), q(3, 2));
        for bad in ["2.5", "1e3", "", "1/", "/2", "a/b", "1/0", "1//2"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn agl2_examples() {
        let p = Point(q(3, 2), q(1, 1));
        assert_eq!(agl2_apply(&Agl2::identity(), &p), p);

        // Weyl element for m = 2, lambda = 2: shift (lambda + k, 0) = (3, 0)
        let weyl = Agl2::new([[-1, -2], [0, 1]], Point::new(3, 0)).unwrap();
        assert_eq!(weyl.apply(&Point::new(0, 0)), Point::new(3, 0));

        let swap = Agl2::new([[0, 1], [1, 0]], Point::new(0, 0)).unwrap();
        assert_eq!(swap.apply(&Point::new(1, 0)), Point::new(0, 1));

        assert_eq!(
            Agl2::new([[2, 0], [0, 1]], Point::new(0, 0)),
            Err(ArithError::NotUnimodular(2))
        );
    }

    #[test]
    fn primitive_examples() {
        assert!(primitive_check(LatticeVector::new(2, 3)).unwrap());
        assert!(!primitive_check(LatticeVector::new(2, 4)).unwrap());
        assert!(primitive_check(LatticeVector::new(0, 1)).unwrap());
        assert!(primitive_check(LatticeVector::new(0, -1)).unwrap());
        assert_eq!(
            primitive_check(LatticeVector::new(0, 0)),
            Err(ArithError::ZeroVector)
        );
    }

    #[test]
    fn primitive_direction_of_rational_vector() {
        let v = Point(q(-3, 2), q(3, 4));
        assert_eq!(
            LatticeVector::primitive_direction(&v).unwrap(),
            LatticeVector::new(-2, 1)
        );
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| q(n, d))
    }

    fn unimodular() -> impl Strategy<Value = [[i64; 2]; 2]> {
        // products of elementary generators stay unimodular
        prop::collection::vec(0u8..4, 0..6).prop_map(|ops| {
            let mut m = [[1i64, 0], [0, 1]];
            for op in ops {
                let g = match op {
                    0 => [[1, 1], [0, 1]],
                    1 => [[1, 0], [-1, 1]],
                    2 => [[0, 1], [1, 0]],
                    _ => [[-1, 0], [0, 1]],
                };
                m = [
                    [
                        m[0][0] * g[0][0] + m[0][1] * g[1][0],
                        m[0][0] * g[0][1] + m[0][1] * g[1][1],
                    ],
                    [
                        m[1][0] * g[0][0] + m[1][1] * g[1][0],
                        m[1][0] * g[0][1] + m[1][1] * g[1][1],
                    ],
                ];
            }
            m
        })
    }

    fn agl2() -> impl Strategy<Value = Agl2> {
        (unimodular(), rational(), rational())
            .prop_map(|(m, x, y)| Agl2::new(m, Point(x, y)).unwrap())
    }

    fn agl1() -> impl Strategy<Value = Agl1> {
        (any::<bool>(), rational())
            .prop_map(|(s, shift)| Agl1::new(if s { Sign::Plus } else { Sign::Minus }, shift))
    }

    proptest! {
        #[test]
        fn agl2_composition_is_action(g in agl2(), h in agl2(), x in rational(), y in rational()) {
            let p = Point(x, y);
            prop_assert_eq!(g.compose(&h).apply(&p), g.apply(&h.apply(&p)));
            prop_assert_eq!(g.inverse().apply(&g.apply(&p)), p);
        }

        #[test]
        fn agl1_group_laws(f in agl1(), g in agl1(), h in agl1(), mu in rational()) {
            prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
            prop_assert_eq!(f.inverse().apply(&f.apply(&mu)), mu.clone());
            prop_assert_eq!(f.apply(&f.inverse().apply(&mu)), mu);
            prop_assert_eq!(f.compose(&f.inverse()), Agl1::identity());
        }

        #[test]
        fn rational_string_round_trip(r in rational()) {
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
