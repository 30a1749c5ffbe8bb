//! Dimensions of exterior powers in twisted graded categories.
//!
//! `∧^n V` is the homotopy orbits of `Σ_n` on `(V⟨1⟩)^{⊗n}`; at height zero
//! its dimension is the class-wise average of the braiding character,
//!
//! `dim ∧^n V = (1/n!) Σ_{λ ⊢ n} |C_λ| · (ε dim V)^{c(λ)}`.
//!
//! With the trivial twist this is `dim Sym^n V = C(D+n-1, n)`; with the Koszul
//! twist it is `(-1)^n C(D, n)`. Two normalizations are kept: the
//! *categorical* value above, and the *underlying* value `ε^n · categorical`,
//! which forgets the sign carried by the degree-`n` unit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::coeffring::{Ring, Sign, SignedUnitValue, TruncatedSeries};
use crate::error::{Error, Result};
use crate::graded::Twist;
use crate::symgroup::{factorial, partitions};

/// Categorical dimension of `∧^n` of a degree-one object of dimension `dim`.
pub fn ext_dim(twist: &Twist<BigInt>, dim: &BigInt, n: u32) -> Result<BigInt> {
    let shifted = twist.epsilon() * dim;
    let sum = partitions(n)?
        .iter()
        .map(|lambda| BigInt::from(lambda.class_size()) * shifted.pow(lambda.num_cycles() as u32))
        .fold(BigInt::zero(), |acc, x| acc + x);
    let order = BigInt::from(factorial(n));
    let (quot, rem) = sum.div_rem(&order);
    if !rem.is_zero() {
        return Err(Error::NonIntegral {
            numerator: sum.to_string(),
            denominator: order.to_string(),
        });
    }
    Ok(quot)
}

/// [`ext_dim`] for super dimensions: the twist and the dimension are sent
/// through `u ↦ -1` first.
pub fn ext_dim_super(twist: &Twist<SignedUnitValue>, dim: &SignedUnitValue, n: u32) -> Result<BigInt> {
    ext_dim(&super_twist(twist)?, &dim.eval(Sign::Minus), n)
}

fn super_twist(twist: &Twist<SignedUnitValue>) -> Result<Twist<BigInt>> {
    match twist {
        Twist::Trivial => Ok(Twist::Trivial),
        Twist::Koszul => Ok(Twist::Koszul),
        Twist::Unit(eps) => Twist::unit(eps.eval(Sign::Minus)),
    }
}

/// The generating functions `Σ_n dim ∧^n V · t^n` in both normalizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtSeries {
    pub twist: Twist<BigInt>,
    pub dim: BigInt,
    pub categorical: TruncatedSeries<BigInt>,
    pub underlying: TruncatedSeries<BigInt>,
}

impl ExtSeries {
    pub fn order(&self) -> usize {
        self.categorical.order()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "twist": self.twist.to_json(),
            "dim": self.dim.to_json(),
            "series": [
                { "normalization": "categorical", "series": self.categorical.to_json() },
                { "normalization": "underlying", "series": self.underlying.to_json() },
            ],
        })
    }
}

pub fn ext_series(twist: &Twist<BigInt>, dim: &BigInt, order: u32) -> Result<ExtSeries> {
    let eps = twist.epsilon();
    let categorical = (0..=order)
        .map(|n| ext_dim(twist, dim, n))
        .collect::<Result<Vec<_>>>()?;
    let underlying = categorical
        .iter()
        .enumerate()
        .map(|(n, c)| eps.pow(n as u32) * c)
        .collect();
    Ok(ExtSeries {
        twist: twist.clone(),
        dim: dim.clone(),
        categorical: TruncatedSeries::new(categorical, order as usize),
        underlying: TruncatedSeries::new(underlying, order as usize),
    })
}

/// Outcome of checking `(Σ dim Sym^n V tⁿ)(Σ dim ∧^n_Kos V (-t)ⁿ) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// The product series; equal to `1` exactly when `holds`.
    pub witness: TruncatedSeries<BigInt>,
}

/// Multiplies the symmetric-power series by the Koszul exterior-power series
/// at `-t`, both in the underlying normalization, modulo `t^{order+1}`.
pub fn verify_sym_ext_identity(dim: u64, order: u32) -> Result<IdentityCheck> {
    let dim = BigInt::from(dim);
    let sym = ext_series(&Twist::Trivial, &dim, order)?.underlying;
    let alt = ext_series(&Twist::Koszul, &dim, order)?.underlying.negate_variable();
    let witness = sym.mul_truncated(&alt)?;
    Ok(IdentityCheck {
        holds: witness.is_one(),
        witness,
    })
}

/// Product of the categorical series, i.e. the series of the direct sum.
pub fn ext_series_product(series: &[ExtSeries]) -> Result<TruncatedSeries<BigInt>> {
    let (first, rest) = series
        .split_first()
        .ok_or_else(|| Error::Invalid("empty series list".into()))?;
    rest.iter()
        .try_fold(first.categorical.clone(), |acc, s| acc.mul_truncated(&s.categorical))
}

/// `C(n, k)` for integer `n` (possibly negative) and `k ≥ 0`.
pub fn binomial(n: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
    }
    num / BigInt::from(factorial(k))
}
