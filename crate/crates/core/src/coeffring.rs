//! Coefficient rings and truncated power series over them.
//!
//! Three rings are used: the integers, the rationals (only inside averages,
//! which must cancel back to integers) and the signed-unit ring
//! `Z[u]/(u² - 1)`, which carries the parity unit of super vector spaces.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{Number, Value};

use crate::error::{Error, Result};

/// A commutative ring with exact arithmetic and a JSON encoding.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Short tag used in serialized output.
    const NAME: &'static str;

    fn from_integer(n: &BigInt) -> Self;

    /// The multiplicative inverse, when `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    fn to_json(&self) -> Value;

    fn from_json(value: &Value) -> Result<Self>;

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Encodes an integer as an exact JSON number.
pub fn bigint_to_json(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer is a JSON number"))
}

/// Reads an integer from a JSON number or a decimal string.
pub fn bigint_from_json(value: &Value) -> Result<BigInt> {
    let text = match value {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(Error::Invalid(format!("expected an integer, got {value}"))),
    };
    BigInt::from_str(&text).map_err(|_| Error::Invalid(format!("expected an integer, got {text}")))
}

impl Ring for BigInt {
    const NAME: &'static str = "integer";

    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }

    fn unit_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }

    fn to_json(&self) -> Value {
        bigint_to_json(self)
    }

    fn from_json(value: &Value) -> Result<Self> {
        bigint_from_json(value)
    }
}

impl Ring for BigRational {
    const NAME: &'static str = "rational";

    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    /// Integral values are plain numbers; others are `"p/q"` strings.
    fn to_json(&self) -> Value {
        if self.is_integer() {
            bigint_to_json(self.numer())
        } else {
            Value::String(self.to_string())
        }
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) if s.contains('/') => BigRational::from_str(s)
                .map_err(|_| Error::Invalid(format!("expected a rational, got {s}"))),
            _ => bigint_from_json(value).map(BigRational::from_integer),
        }
    }
}

/// `±1`, the possible values of a square-one sign in any of the rings here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn from_i64(x: i64) -> Option<Self> {
        match x {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^e` when `self` is `Minus`.
    pub fn pow(self, e: u64) -> Self {
        match self {
            Sign::Minus if e % 2 == 1 => Sign::Minus,
            _ => Sign::Plus,
        }
    }

    pub fn to_ring<R: Ring>(self) -> R {
        match self {
            Sign::Plus => R::one(),
            Sign::Minus => -R::one(),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `a + b·u` in `Z[u]/(u² - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedUnitValue {
    pub a: BigInt,
    pub b: BigInt,
}

impl SignedUnitValue {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    /// The parity unit `u`.
    pub fn u() -> Self {
        Self::new(0, 1)
    }

    /// The ring map `u ↦ sign`. At `Minus` this is the super dimension.
    pub fn eval(&self, sign: Sign) -> BigInt {
        match sign {
            Sign::Plus => &self.a + &self.b,
            Sign::Minus => &self.a - &self.b,
        }
    }
}

pub fn signed_unit_eval(x: &SignedUnitValue, sign: Sign) -> BigInt {
    x.eval(sign)
}

impl From<i64> for SignedUnitValue {
    fn from(a: i64) -> Self {
        Self::new(a, 0)
    }
}

impl Add for SignedUnitValue {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for SignedUnitValue {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for SignedUnitValue {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for SignedUnitValue {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self {
            a: &self.a * &rhs.a + &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Zero for SignedUnitValue {
    fn zero() -> Self {
        Self::new(0, 0)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for SignedUnitValue {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

impl fmt::Display for SignedUnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}u", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{}-{}u", self.a, -&self.b),
            (false, false) => write!(f, "{}+{}u", self.a, self.b),
        }
    }
}

impl Ring for SignedUnitValue {
    const NAME: &'static str = "signed-unit";

    fn from_integer(n: &BigInt) -> Self {
        Self::new(n.clone(), 0)
    }

    /// The units are exactly `±1` and `±u`, each its own inverse.
    fn unit_inverse(&self) -> Option<Self> {
        let plus = self.eval(Sign::Plus);
        let minus = self.eval(Sign::Minus);
        (plus.abs().is_one() && minus.abs().is_one()).then(|| self.clone())
    }

    fn to_json(&self) -> Value {
        serde_json::json!({ "a": bigint_to_json(&self.a), "b": bigint_to_json(&self.b) })
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::Object(map) => {
                let get = |k: &str| {
                    map.get(k)
                        .map(bigint_from_json)
                        .unwrap_or_else(|| Ok(BigInt::zero()))
                };
                Ok(Self {
                    a: get("a")?,
                    b: get("b")?,
                })
            }
            _ => bigint_from_json(value).map(|a| Self::new(a, 0)),
        }
    }
}

/// A power series `c₀ + c₁t + … + c_N t^N` modulo `t^{N+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs.iter().map(|&c| R::from_integer(&BigInt::from(c))).collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Cauchy product, truncated at the common order.
    pub fn mul_truncated(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::Mismatch(format!(
                "series orders differ: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        let n = self.coeffs.len();
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Inverse modulo `t^{N+1}`, by solving the triangular system term by term.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))?;
        let n = self.coeffs.len();
        let mut inv: Vec<R> = Vec::with_capacity(n);
        inv.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * inv[k - j].clone();
            }
            inv.push(-(c0_inv.clone() * acc));
        }
        Ok(Self { coeffs: inv })
    }

    /// The substitution `t ↦ -t`.
    pub fn negate_variable(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Coefficient-wise map into another ring.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(Ring::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let order = value
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Invalid("series needs an integer \"order\"".into()))?;
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("series needs a \"coeffs\" array".into()))?;
        if coeffs.len() as u64 != order + 1 {
            return Err(Error::Invalid(format!(
                "series of order {order} needs {} coefficients, got {}",
                order + 1,
                coeffs.len()
            )));
        }
        let coeffs = coeffs.iter().map(R::from_json).collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// `t^offset · series`; a Laurent polynomial truncated above `offset + order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries<R> {
    pub offset: i64,
    pub series: TruncatedSeries<R>,
}

impl<R: Ring> LaurentSeries<R> {
    /// The monomial `c · t^degree`.
    pub fn monomial(coeff: R, degree: i64) -> Self {
        Self {
            offset: degree,
            series: TruncatedSeries::new(vec![coeff], 0),
        }
    }

    /// Coefficient of `t^degree`.
    pub fn coeff(&self, degree: i64) -> R {
        match usize::try_from(degree - self.offset) {
            Ok(i) => self.series.coeff(i),
            Err(_) => R::zero(),
        }
    }

    /// Evaluation at `t = 1`.
    pub fn at_one(&self) -> R {
        self.series
            .coeffs()
            .iter()
            .cloned()
            .fold(R::zero(), |acc, c| acc + c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(coeffs: &[i64], order: usize) -> TruncatedSeries<BigInt> {
        TruncatedSeries::from_integers(coeffs, order)
    }

    #[test]
    fn series_products() {
        assert_eq!(z(&[1, 1], 2).mul_truncated(&z(&[1, -1], 2)).unwrap(), z(&[1, 0, -1], 2));
        assert!(z(&[1, 1, 1, 1], 3).mul_truncated(&z(&[1, -1], 3)).unwrap().is_one());
        assert!(z(&[1, -2, 1], 3).mul_truncated(&z(&[1, 2, 3, 4], 3)).unwrap().is_one());
    }

    #[test]
    fn series_order_mismatch() {
        assert!(matches!(
            z(&[1], 2).mul_truncated(&z(&[1], 3)),
            Err(Error::Mismatch(_))
        ));
    }

    #[test]
    fn series_inverses() {
        assert_eq!(z(&[1], 0).inverse().unwrap(), z(&[1], 0));
        assert_eq!(z(&[1, -1], 3).inverse().unwrap(), z(&[1, 1, 1, 1], 3));
        assert_eq!(z(&[1, 2, 1], 2).inverse().unwrap(), z(&[1, -2, 3], 2));
        assert!(matches!(z(&[2, 1], 2).inverse(), Err(Error::NotInvertible(_))));
        assert!(matches!(z(&[0, 1], 2).inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn rational_series_inverse() {
        let f: TruncatedSeries<BigRational> = z(&[2, 1], 3).map(|c| BigRational::from_integer(c.clone()));
        let g = f.inverse().unwrap();
        assert!(f.mul_truncated(&g).unwrap().is_one());
        assert_eq!(g.coeff(1), BigRational::new((-1).into(), 4.into()));
    }

    #[test]
    fn signed_unit_evaluation() {
        assert_eq!(SignedUnitValue::new(0, 1).eval(Sign::Minus), BigInt::from(-1));
        assert_eq!(SignedUnitValue::new(1, 0).eval(Sign::Minus), BigInt::from(1));
        assert_eq!(SignedUnitValue::new(2, 1).eval(Sign::Plus), BigInt::from(3));
    }

    #[test]
    fn signed_unit_units() {
        let u = SignedUnitValue::u();
        assert_eq!(u.clone() * u.clone(), SignedUnitValue::one());
        assert!(u.is_unit());
        assert!((-u).is_unit());
        assert!(!SignedUnitValue::new(1, 1).is_unit());
        assert!(!SignedUnitValue::new(2, 0).is_unit());
    }

    #[test]
    fn json_encodings() {
        let s = z(&[1, -2, 3], 2);
        let json = s.to_json();
        assert_eq!(json.to_string(), r#"{"order":2,"coeffs":[1,-2,3]}"#);
        assert_eq!(TruncatedSeries::<BigInt>::from_json(&json).unwrap(), s);
        let x = SignedUnitValue::new(2, -1);
        assert_eq!(x.to_json().to_string(), r#"{"a":2,"b":-1}"#);
        assert_eq!(SignedUnitValue::from_json(&x.to_json()).unwrap(), x);
        let huge: BigInt = BigInt::from(10).pow(40u32);
        assert_eq!(bigint_from_json(&bigint_to_json(&huge)).unwrap(), huge);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(BigRational::from_json(&half.to_json()).unwrap(), half);
    }

    #[test]
    fn laurent_monomials() {
        let m = LaurentSeries::monomial(BigInt::from(-2), 3);
        assert_eq!(m.coeff(3), BigInt::from(-2));
        assert_eq!(m.coeff(2), BigInt::zero());
        assert_eq!(m.at_one(), BigInt::from(-2));
    }

    fn signed() -> impl Strategy<Value = SignedUnitValue> {
        (-50i64..50, -50i64..50).prop_map(|(a, b)| SignedUnitValue::new(a, b))
    }

    proptest! {
        #[test]
        fn signed_unit_ring_axioms(x in signed(), y in signed(), w in signed()) {
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            prop_assert_eq!((x.clone() * y.clone()) * w.clone(), x.clone() * (y.clone() * w.clone()));
            prop_assert_eq!(x.clone() * SignedUnitValue::one(), x.clone());
            prop_assert_eq!(x.clone() * (y.clone() + w.clone()), x.clone() * y.clone() + x.clone() * w.clone());
        }

        #[test]
        fn evaluation_is_a_ring_map(x in signed(), y in signed(), plus in any::<bool>()) {
            let s = if plus { Sign::Plus } else { Sign::Minus };
            prop_assert_eq!((x.clone() * y.clone()).eval(s), x.eval(s) * y.eval(s));
            prop_assert_eq!((x.clone() + y.clone()).eval(s), x.eval(s) + y.eval(s));
            prop_assert_eq!(SignedUnitValue::one().eval(s), BigInt::one());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn inverse_is_two_sided(
            unit in prop_oneof![Just(1i64), Just(-1i64)],
            tail in proptest::collection::vec(-20i64..20, 0..16),
            order in 0usize..=16,
        ) {
            let mut coeffs = vec![unit];
            coeffs.extend(tail);
            let f = z(&coeffs, order);
            let g = f.inverse().unwrap();
            prop_assert!(f.mul_truncated(&g).unwrap().is_one());
            prop_assert!(g.mul_truncated(&f).unwrap().is_one());
        }
    }
}
