//! Sign decisions for graded categories of modules over Morava E-theory.
//!
//! At height `n` and prime `p` the twists of the graded structure are indexed
//! by the dual stem `π̂_{n+1}`. A twist `α` contributes the unit `ω(α)`, which
//! can only be `±1`, and `-1` only occurs for `p = 2, n ≤ 3`. The braiding
//! character of the twisted category is then that of `E_n` (`ω = +1`) or of
//! `ΣE_n` (`ω = -1`).
//!
//! The integrals over `BZ/2` below are the arithmetic behind ruling out `-1`
//! for `n ≥ 4`: if `-1` came from a null map then `∫_{BZ/2} (-1)²` would equal
//! `|BZ/2| = 2^{n-1}`, but it is `1 - 2^{n-1}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::Value;

use crate::braidchar::{braiding_character, CharacterTable};
use crate::coeffring::Sign;
use crate::error::{Error, Result};
use crate::graded::Twist;
use crate::symgroup::{cyclic_loop_components, LoopComponentCyclic};

/// The `p`-primary part of `π_k` of the sphere spectrum for `1 ≤ k ≤ 7`, as
/// cyclic orders. External reference data: `Z/2, Z/2, Z/24, 0, 0, Z/2, Z/240`.
pub fn reference_stem(prime: u64, k: u32) -> Option<Vec<u64>> {
    let full: u64 = match k {
        1 | 2 | 6 => 2,
        3 => 24,
        4 | 5 => 1,
        7 => 240,
        _ => return None,
    };
    let mut part = 1;
    let mut rest = full;
    while rest.is_multiple_of(prime) {
        rest /= prime;
        part *= prime;
    }
    Some(if part == 1 { Vec::new() } else { vec![part] })
}

/// A finite abelian `p`-group `⊕ Z/p^{e_i}` presenting the dual stem `π̂_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemGroup {
    pub prime: u64,
    pub height: u32,
    orders: Vec<u64>,
}

impl StemGroup {
    pub fn new(prime: u64, height: u32, orders: Vec<u64>) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::Domain(format!("{prime} is not a prime")));
        }
        for &d in &orders {
            if d == 0 || !is_power_of(d, prime) {
                return Err(Error::Invalid(format!("{d} is not a power of {prime}")));
            }
        }
        Ok(Self {
            prime,
            height,
            orders,
        })
    }

    /// `π̂_{n+1}` from the shipped reference table, for `n + 1 ≤ 7`.
    pub fn reference(prime: u64, height: u32) -> Result<Self> {
        let orders = reference_stem(prime, height + 1).ok_or_else(|| {
            Error::Domain(format!("no reference stem for π_{}", height + 1))
        })?;
        Self::new(prime, height, orders)
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.orders.len()]
    }

    /// `(1, …, 1)`, which generates when the group is cyclic.
    pub fn generator(&self) -> Vec<u64> {
        self.orders.iter().map(|&d| 1 % d).collect()
    }

    pub fn scale(&self, element: &[u64], factor: u64) -> Result<Vec<u64>> {
        self.validate(element)?;
        Ok(element
            .iter()
            .zip(&self.orders)
            .map(|(&x, &d)| ((x as u128 * factor as u128) % d as u128) as u64)
            .collect())
    }

    pub fn validate(&self, element: &[u64]) -> Result<()> {
        if element.len() != self.orders.len() {
            return Err(Error::Invalid(format!(
                "element has {} coordinates, group has {} cyclic factors",
                element.len(),
                self.orders.len()
            )));
        }
        if let Some((x, d)) = element.iter().zip(&self.orders).find(|(x, d)| x >= d) {
            return Err(Error::Invalid(format!("residue {x} out of range for Z/{d}")));
        }
        Ok(())
    }

    /// Whether `α = 2β` for some `β`: in each `Z/d` factor the residue must be
    /// even unless `d` is odd.
    pub fn is_two_divisible(&self, element: &[u64]) -> Result<bool> {
        self.validate(element)?;
        Ok(element
            .iter()
            .zip(&self.orders)
            .all(|(&x, &d)| d % 2 == 1 || x % 2 == 0))
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

fn is_power_of(mut d: u64, p: u64) -> bool {
    while d.is_multiple_of(p) {
        d /= p;
    }
    d == 1
}

/// Which spectrum's braiding character the twisted category has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChromaticLabel {
    En,
    SigmaEn,
}

impl ChromaticLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ChromaticLabel::En => "E_n",
            ChromaticLabel::SigmaEn => "ΣE_n",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChromaticDecision {
    pub omega: Sign,
    pub label: ChromaticLabel,
}

impl ChromaticDecision {
    pub fn to_json(&self) -> Value {
        serde_json::json!({ "omega": self.omega.to_i64(), "label": self.label.as_str() })
    }
}

/// The units of `π₀E_n` that lie in the image of the orientation map.
pub fn truncated_units(prime: u64, height: u32) -> BTreeSet<Sign> {
    if prime == 2 && height <= 3 {
        BTreeSet::from([Sign::Plus, Sign::Minus])
    } else {
        BTreeSet::from([Sign::Plus])
    }
}

/// `ω(α)` for `α ∈ π̂_{n+1}`: `-1` exactly when `p = 2`, `n ≤ 2` and `α` is
/// not 2-divisible.
pub fn chromatic_decision(group: &StemGroup, alpha: &[u64]) -> Result<ChromaticDecision> {
    let minus = if group.prime != 2 || group.height >= 3 {
        group.validate(alpha)?;
        false
    } else {
        !group.is_two_divisible(alpha)?
    };
    Ok(if minus {
        ChromaticDecision {
            omega: Sign::Minus,
            label: ChromaticLabel::SigmaEn,
        }
    } else {
        ChromaticDecision {
            omega: Sign::Plus,
            label: ChromaticLabel::En,
        }
    })
}

/// Braiding character of `E_n⟨α⟩`: the height-zero table with `dim = 1` and
/// twist unit `ω(α)`.
pub fn chromatic_character(group: &StemGroup, alpha: &[u64], m: u32) -> Result<CharacterTable<BigInt>> {
    let decision = chromatic_decision(group, alpha)?;
    let twist = Twist::unit(BigInt::from(decision.omega.to_i64()))?;
    braiding_character(&twist, &BigInt::one(), m)
}

fn require_positive_height(height: u32) -> Result<()> {
    if height == 0 {
        return Err(Error::Domain("height must be at least 1".into()));
    }
    Ok(())
}

fn two_pow(e: u32) -> BigInt {
    BigInt::one() << e
}

/// `|BZ/2| = 2^{n-1}` in `E_n`-modules at `p = 2`.
pub fn bz2_cardinality(height: u32) -> Result<BigInt> {
    require_positive_height(height)?;
    Ok(two_pow(height - 1))
}

/// `∫_{BZ/2} ω²`: `|BZ/2|` for `ω = +1`, `1 - 2^{n-1}` for `ω = -1`.
pub fn integral_bz2_sq(height: u32, omega: Sign) -> Result<BigInt> {
    let card = bz2_cardinality(height)?;
    Ok(match omega {
        Sign::Plus => card,
        Sign::Minus => BigInt::one() - card,
    })
}

/// Whether `∫_{BZ/2} (-1)² ≠ |BZ/2|`, the inequality that obstructs `-1`.
pub fn no_truncated_unit_check(height: u32) -> Result<bool> {
    Ok(integral_bz2_sq(height, Sign::Minus)? != bz2_cardinality(height)?)
}

/// `∫_{BZ/2} (-1)² - |BZ/2| = 1 - 2^n`.
pub fn loop_bz2_integral(height: u32) -> Result<BigInt> {
    Ok(integral_bz2_sq(height, Sign::Minus)? - bz2_cardinality(height)?)
}

/// How the `Z/2^k`-action on a component value arises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentAction {
    Trivial,
    /// Induced from `Z/2^{k-1}` along the squaring map.
    Induced,
}

impl ComponentAction {
    pub fn as_str(self) -> &'static str {
        match self {
            ComponentAction::Trivial => "trivial",
            ComponentAction::Induced => "induced",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranschromaticRow {
    pub component: LoopComponentCyclic,
    pub value: Sign,
    pub action: ComponentAction,
}

impl TranschromaticRow {
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "coords": self.component.coords,
            "valuation": self.component.valuation,
            "value": self.value.to_i64(),
            "action": self.action.as_str(),
        })
    }
}

/// Component values of the transchromatic character on `⊔_{(Z/2^k)^j} BZ/2^k`,
/// built by induction on `k`: `ω_t` on components that are not 2-divisible,
/// and on `2x` the square of the value at `x` one level down.
pub fn transchromatic_table(exponent: u32, depth: u32, omega_t: Sign) -> Result<Vec<TranschromaticRow>> {
    let components = cyclic_loop_components(2, exponent, depth)?;
    let mut rows = Vec::with_capacity(components.len());
    for component in components {
        let value = component_value(exponent, &component.coords, omega_t);
        let action = if exponent == 0 || !component.is_divisible() {
            ComponentAction::Trivial
        } else {
            ComponentAction::Induced
        };
        rows.push(TranschromaticRow {
            component,
            value,
            action,
        });
    }
    Ok(rows)
}

fn component_value(exponent: u32, coords: &[u64], omega_t: Sign) -> Sign {
    if exponent == 0 || coords.iter().any(|x| x % 2 == 1) {
        return omega_t;
    }
    // coords = 2x with x read in (Z/2^{k-1})^j
    let half: Vec<u64> = coords.iter().map(|x| x / 2).collect();
    let below = component_value(exponent - 1, &half, omega_t);
    below * below
}
