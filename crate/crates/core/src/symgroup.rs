//! Partitions of `m`, conjugacy-class data of the symmetric group, and the
//! component indexing of iterated free loop spaces of `BZ/p^k`.
//!
//! A conjugacy class of `Σ_m` is a cycle type, i.e. a partition of `m`. The
//! components of the free loop space `L BΣ_m` are indexed by these classes,
//! each component being `B` of the centralizer
//! `∏_k (Z/k ≀ Σ_{N_k})`, whose order is `z_λ = ∏_k k^{N_k} · N_k!`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde_json::Value;

use crate::error::{Error, Result};

/// Largest `m` accepted by [`partitions`].
pub const PARTITION_CAP: u32 = 30;

/// Largest number of components accepted by [`cyclic_loop_components`].
pub const COMPONENT_CAP: u128 = 1 << 20;

/// A partition of `m`: a non-increasing list of positive parts.
///
/// The empty list is the unique partition of `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// `[1, 1, …, 1]`, the cycle type of the identity of `Σ_m`.
    pub fn ones(m: u32) -> Self {
        Self {
            parts: vec![1; m as usize],
        }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Cycle type of a permutation given by its images `perm[i] = σ(i)`.
    ///
    /// `perm` must be a bijection of `0..perm.len()`.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiplicities `k ↦ N_k` of each part length.
    pub fn cycle_counts(&self) -> BTreeMap<u32, u32> {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts
    }

    /// Number of cycles `c(σ)` of a permutation of this cycle type.
    pub fn num_cycles(&self) -> usize {
        self.parts.len()
    }

    /// `z_λ = ∏_k k^{N_k} · N_k!`, the order of the centralizer.
    pub fn centralizer_order(&self) -> BigUint {
        self.cycle_counts()
            .into_iter()
            .map(|(k, n)| BigUint::from(k).pow(n) * factorial(n))
            .product()
    }

    /// Number of permutations of this cycle type, `m! / z_λ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }

    /// The permutation `(0 1 … k₁-1)(k₁ … k₁+k₂-1)…` as an image vector.
    pub fn canonical_representative(&self) -> Vec<usize> {
        let mut images = Vec::with_capacity(self.size() as usize);
        let mut start = 0usize;
        for &k in &self.parts {
            let k = k as usize;
            for i in 0..k {
                images.push(start + (i + 1) % k);
            }
            start += k;
        }
        images
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.parts.clone())
    }

    /// Parses a JSON array of positive integers, which must already be non-increasing.
    pub fn from_json(value: &Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Invalid(format!("partition must be a JSON array: {value}")))?;
        let parts = arr
            .iter()
            .map(|v| {
                v.as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| Error::Invalid(format!("bad partition part: {v}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "partition must be non-increasing: {parts:?}"
            )));
        }
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// All partitions of `m` in reverse-lexicographic order, `[m]` first and
/// `[1, …, 1]` last.
pub fn partitions(m: u32) -> Result<Vec<Partition>> {
    if m > PARTITION_CAP {
        return Err(Error::EnumerationLimit {
            what: "partitions",
            requested: m.into(),
            cap: PARTITION_CAP.into(),
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(m, m, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// One component of `L^j BZ/p^k ≃ ⊔_{(Z/p^k)^j} BZ/p^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoopComponentCyclic {
    pub prime: u64,
    pub exponent: u32,
    pub coords: Vec<u64>,
    /// Largest `v ≤ k` with `coords = p^v · x`; equals `k` exactly on the zero vector.
    pub valuation: u32,
}

impl LoopComponentCyclic {
    pub fn new(prime: u64, exponent: u32, coords: Vec<u64>) -> Result<Self> {
        let modulus = checked_pow(prime, exponent)?;
        if let Some(bad) = coords.iter().find(|&&c| c >= modulus) {
            return Err(Error::Invalid(format!(
                "coordinate {bad} out of range for Z/{modulus}"
            )));
        }
        let valuation = coords
            .iter()
            .map(|&c| p_adic_valuation(c, prime, exponent))
            .min()
            .unwrap_or(exponent);
        Ok(Self {
            prime,
            exponent,
            coords,
            valuation,
        })
    }

    pub fn depth(&self) -> usize {
        self.coords.len()
    }

    /// Divisible by `p` inside `(Z/p^k)^j`. Every component is when `k = 0`.
    pub fn is_divisible(&self) -> bool {
        self.exponent == 0 || self.valuation >= 1
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "p": self.prime,
            "k": self.exponent,
            "coords": self.coords,
            "valuation": self.valuation,
        })
    }
}

/// `v_p(x)` for `x ∈ Z/p^k`, with `v_p(0) = k`.
fn p_adic_valuation(mut x: u64, p: u64, k: u32) -> u32 {
    if x == 0 {
        return k;
    }
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

fn checked_pow(p: u64, k: u32) -> Result<u64> {
    p.checked_pow(k)
        .ok_or_else(|| Error::Domain(format!("{p}^{k} does not fit in 64 bits")))
}

/// All `p^{kj}` components of `L^j BZ/p^k`, coordinates in lexicographic order.
pub fn cyclic_loop_components(prime: u64, exponent: u32, depth: u32) -> Result<Vec<LoopComponentCyclic>> {
    if prime < 2 {
        return Err(Error::Domain(format!("{prime} is not a prime")));
    }
    if depth == 0 {
        return Err(Error::Domain("loop depth must be at least 1".into()));
    }
    let requested = (prime as u128)
        .checked_pow(exponent * depth)
        .unwrap_or(u128::MAX);
    if requested > COMPONENT_CAP {
        return Err(Error::EnumerationLimit {
            what: "loop components",
            requested,
            cap: COMPONENT_CAP,
        });
    }
    let modulus = checked_pow(prime, exponent)?;
    let mut out = Vec::with_capacity(requested as usize);
    let mut coords = vec![0u64; depth as usize];
    loop {
        out.push(LoopComponentCyclic::new(prime, exponent, coords.clone())?);
        // odometer increment, last coordinate fastest
        let mut pos = coords.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            coords[pos] += 1;
            if coords[pos] < modulus {
                break;
            }
            coords[pos] = 0;
        }
    }
}
