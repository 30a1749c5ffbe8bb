//! Dimensions of `Z`-graded objects, their Day convolution, and the sign twists
//! that distinguish symmetric monoidal structures on graded objects.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde_json::{Map, Value};

use crate::coeffring::Ring;
use crate::error::{Error, Result};

/// Finitely supported map `degree ↦ dim X_degree`. Zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDim<R> {
    entries: BTreeMap<i64, R>,
}

impl<R: Ring> GradedDim<R> {
    pub fn new(entries: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut map: BTreeMap<i64, R> = BTreeMap::new();
        for (deg, value) in entries {
            let slot = map.entry(deg).or_insert_with(R::zero);
            *slot = slot.clone() + value;
        }
        map.retain(|_, v| !v.is_zero());
        Self { entries: map }
    }

    /// `1⟨degree⟩`, the unit shifted to `degree`.
    pub fn shifted_unit(degree: i64) -> Self {
        Self::new([(degree, R::one())])
    }

    pub fn unit() -> Self {
        Self::shifted_unit(0)
    }

    pub fn get(&self, degree: i64) -> R {
        self.entries.get(&degree).cloned().unwrap_or_else(R::zero)
    }

    pub fn entries(&self) -> &BTreeMap<i64, R> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(X ⊗ Y)_m = Σ_{a+b=m} X_a · Y_b`.
    pub fn day_convolve(&self, other: &Self) -> Self {
        Self::new(self.entries.iter().flat_map(|(a, x)| {
            other
                .entries
                .iter()
                .map(move |(b, y)| (a + b, x.clone() * y.clone()))
        }))
    }

    /// The degree `m₀` when `X` is `x⟨m₀⟩` for a unit `x`; `None` otherwise.
    pub fn is_invertible(&self) -> Option<i64> {
        let mut iter = self.entries.iter();
        match (iter.next(), iter.next()) {
            (Some((deg, value)), None) if value.is_unit() => Some(*deg),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Object(
            self.entries
                .iter()
                .map(|(d, v)| (d.to_string(), v.to_json()))
                .collect::<Map<_, _>>(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Invalid(format!("graded dimension must be an object: {value}")))?;
        let entries = obj
            .iter()
            .map(|(k, v)| {
                let deg = k
                    .parse::<i64>()
                    .map_err(|_| Error::Invalid(format!("bad degree key {k:?}")))?;
                Ok((deg, R::from_json(v)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(entries))
    }
}

/// How the symmetry on graded objects is twisted, recorded by the sign unit
/// `ε = dim(1⟨1⟩)` with `ε² = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Twist<R> {
    Trivial,
    /// `ε = -1`: swapping degrees `n` and `m` costs `(-1)^{nm}`.
    Koszul,
    /// An arbitrary square-one unit. Construct with [`Twist::unit`].
    Unit(R),
}

impl<R: Ring> Twist<R> {
    pub fn unit(epsilon: R) -> Result<Self> {
        if !(epsilon.clone() * epsilon.clone()).is_one() {
            return Err(Error::Domain(format!("twist unit {epsilon} does not square to 1")));
        }
        Ok(Twist::Unit(epsilon))
    }

    pub fn epsilon(&self) -> R {
        match self {
            Twist::Trivial => R::one(),
            Twist::Koszul => -R::one(),
            Twist::Unit(e) => e.clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Twist::Trivial => "trivial",
            Twist::Koszul => "koszul",
            Twist::Unit(_) => "unit",
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({ "kind": self.kind(), "epsilon": self.epsilon().to_json() })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        match value.get("kind").and_then(Value::as_str) {
            Some("trivial") => Ok(Twist::Trivial),
            Some("koszul") => Ok(Twist::Koszul),
            Some("unit") => {
                let eps = value
                    .get("epsilon")
                    .ok_or_else(|| Error::Invalid("unit twist needs \"epsilon\"".into()))?;
                Twist::unit(R::from_json(eps)?)
            }
            _ => Err(Error::Invalid(format!("unknown twist: {value}"))),
        }
    }
}

impl<R: Ring> fmt::Display for Twist<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Unit(e) => write!(f, "unit({e})"),
            other => f.write_str(other.kind()),
        }
    }
}

/// `dim(V⟨1⟩) = ε · dim(V)`.
pub fn dim_shift<R: Ring>(twist: &Twist<R>, dim: &R) -> R {
    twist.epsilon() * dim.clone()
}

/// A finite abelian group presented as a product of cyclic groups `Z/d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::Invalid("cyclic orders must be at least 1".into()));
        }
        Ok(Self { orders })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u128 {
        self.orders.iter().map(|&d| d as u128).product()
    }

    pub fn product(&self, other: &Self) -> Self {
        Self {
            orders: self.orders.iter().chain(&other.orders).copied().collect(),
        }
    }

    /// Number of elements `x` with `2x = 0`.
    pub fn two_torsion_count(&self) -> u64 {
        self.orders.iter().map(|d| d.gcd(&2)).product()
    }
}

/// Number of twisted graded `Z`-structures over a base whose unit group has
/// discrete part `units`: one for each element of order at most two.
pub fn count_twists(units: &FiniteAbelianGroup) -> u64 {
    units.two_torsion_count()
}
