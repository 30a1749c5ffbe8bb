//! Braiding characters of tensor powers.
//!
//! For a dualizable `V` the symmetric group `Σ_m` acts on `V^{⊗m}` through the
//! braiding, and the trace of `σ` is `(dim V)^{c(σ)}` where `c(σ)` counts the
//! cycles of `σ`. In a twisted graded category the object sits in degree one,
//! so `dim V` is replaced by `ε · dim V`, and the whole character is recorded
//! in degree `t^m`.
//!
//! The centralizer `∏_k Z/k ≀ Σ_{N_k}` of `σ` acts on the value at `σ` (the
//! `Z/k` factors rotate the `k`-cycles, the `Σ_{N_k}` factors permute cycles of
//! equal length). For every coefficient ring implemented here that action is
//! trivial, so a row stores a single value and [`ActionFlag::Trivial`].

use num_bigint::{BigInt, BigUint};
use serde_json::Value;

use crate::coeffring::{bigint_to_json, LaurentSeries, Ring};
use crate::error::{Error, Result};
use crate::graded::{dim_shift, Twist};
use crate::symgroup::{partitions, Partition};

/// How the centralizer acts on the value of a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionFlag {
    Trivial,
}

impl ActionFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            ActionFlag::Trivial => "trivial",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterRow<R> {
    pub partition: Partition,
    pub cycles: usize,
    pub class_size: BigUint,
    pub value: R,
    /// Exponent of `t`; always the tensor power `m`.
    pub degree: u32,
    pub action: ActionFlag,
}

/// The braiding character of `V^{⊗m}`, one row per conjugacy class of `Σ_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable<R> {
    pub m: u32,
    pub twist: Twist<R>,
    pub dim: R,
    pub rows: Vec<CharacterRow<R>>,
}

impl<R: Ring> CharacterTable<R> {
    pub fn row(&self, partition: &Partition) -> Option<&CharacterRow<R>> {
        self.rows.iter().find(|r| &r.partition == partition)
    }

    pub fn value(&self, partition: &Partition) -> Option<&R> {
        self.row(partition).map(|r| &r.value)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "partition": r.partition.to_json(),
                    "cycles": r.cycles,
                    "class_size": bigint_to_json(&BigInt::from(r.class_size.clone())),
                    "value": r.value.to_json(),
                    "degree": r.degree,
                    "action": r.action.as_str(),
                })
            })
            .collect();
        let mut obj = serde_json::json!({
            "m": self.m,
            "twist": self.twist.kind(),
            "dim": self.dim.to_json(),
            "rows": rows,
        });
        if let Twist::Unit(eps) = &self.twist {
            obj["epsilon"] = eps.to_json();
        }
        obj
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |k: &str| {
            value
                .get(k)
                .ok_or_else(|| Error::Invalid(format!("character table missing {k:?}")))
        };
        let m = field("m")?
            .as_u64()
            .and_then(|m| u32::try_from(m).ok())
            .ok_or_else(|| Error::Invalid("bad \"m\"".into()))?;
        let twist = match field("twist")?.as_str() {
            Some("trivial") => Twist::Trivial,
            Some("koszul") => Twist::Koszul,
            Some("unit") => Twist::unit(R::from_json(field("epsilon")?)?)?,
            _ => return Err(Error::Invalid("bad \"twist\"".into())),
        };
        let dim = R::from_json(field("dim")?)?;
        let rows = field("rows")?
            .as_array()
            .ok_or_else(|| Error::Invalid("\"rows\" must be an array".into()))?
            .iter()
            .map(|r| {
                let get = |k: &str| {
                    r.get(k)
                        .ok_or_else(|| Error::Invalid(format!("character row missing {k:?}")))
                };
                let partition = Partition::from_json(get("partition")?)?;
                let class_size = crate::coeffring::bigint_from_json(get("class_size")?)?
                    .to_biguint()
                    .ok_or_else(|| Error::Invalid("negative class size".into()))?;
                match r.get("action").and_then(Value::as_str) {
                    None | Some("trivial") => {}
                    Some(other) => return Err(Error::Invalid(format!("unknown action {other:?}"))),
                }
                Ok(CharacterRow {
                    cycles: partition.num_cycles(),
                    partition,
                    class_size,
                    value: R::from_json(get("value")?)?,
                    degree: get("degree")?
                        .as_u64()
                        .and_then(|d| u32::try_from(d).ok())
                        .ok_or_else(|| Error::Invalid("bad \"degree\"".into()))?,
                    action: ActionFlag::Trivial,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { m, twist, dim, rows })
    }
}

/// The class function `λ ↦ (ε · dim)^{c(λ)} t^m` on `Σ_m`.
pub fn braiding_character<R: Ring>(twist: &Twist<R>, dim: &R, m: u32) -> Result<CharacterTable<R>> {
    let shifted = dim_shift(twist, dim);
    let rows = partitions(m)?
        .into_iter()
        .map(|partition| CharacterRow {
            cycles: partition.num_cycles(),
            class_size: partition.class_size(),
            value: shifted.pow(partition.num_cycles() as u32),
            degree: m,
            action: ActionFlag::Trivial,
            partition,
        })
        .collect();
    Ok(CharacterTable {
        m,
        twist: twist.clone(),
        dim: dim.clone(),
        rows,
    })
}

/// Character of `T(X ⊔ Y) ≃ TX ⊗ TY` at a class `λ`, expanded over the ways of
/// splitting the cycles of `λ` between the two factors:
///
/// `Σ_{μ ∪ ν = λ} z_λ / (z_μ z_ν) · (ε₁ D₁)^{c(μ)} · (ε₂ D₂)^{c(ν)}`.
pub fn induced_character_value<R: Ring>(
    partition: &Partition,
    dim1: &R,
    dim2: &R,
    twist1: &Twist<R>,
    twist2: &Twist<R>,
) -> R {
    let x = dim_shift(twist1, dim1);
    let y = dim_shift(twist2, dim2);
    let z_total = partition.centralizer_order();
    let counts: Vec<(u32, u32)> = partition.cycle_counts().into_iter().collect();

    let mut total = R::zero();
    // odometer over (a_k) with 0 ≤ a_k ≤ N_k: a_k cycles of length k go to the first factor
    let mut split = vec![0u32; counts.len()];
    loop {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for (&(k, n), &a) in counts.iter().zip(&split) {
            first.extend(std::iter::repeat_n(k, a as usize));
            second.extend(std::iter::repeat_n(k, (n - a) as usize));
        }
        let mu = Partition::new(first).expect("parts are positive");
        let nu = Partition::new(second).expect("parts are positive");
        let denom = mu.centralizer_order() * nu.centralizer_order();
        debug_assert!((&z_total % &denom) == BigUint::from(0u32));
        let weight = BigInt::from(&z_total / denom);
        total = total
            + R::from_integer(&weight)
                * x.pow(mu.num_cycles() as u32)
                * y.pow(nu.num_cycles() as u32);

        let mut pos = 0;
        loop {
            if pos == split.len() {
                return total;
            }
            if split[pos] < counts[pos].1 {
                split[pos] += 1;
                break;
            }
            split[pos] = 0;
            pos += 1;
        }
    }
}

/// Each row's value as the Laurent monomial `χ(λ) · t^m`, in table order.
pub fn character_to_series_row<R: Ring>(table: &CharacterTable<R>) -> Vec<(Partition, LaurentSeries<R>)> {
    table
        .rows
        .iter()
        .map(|r| {
            (
                r.partition.clone(),
                LaurentSeries::monomial(r.value.clone(), i64::from(r.degree)),
            )
        })
        .collect()
}
