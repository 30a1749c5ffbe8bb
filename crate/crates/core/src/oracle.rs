//! Brute-force model of `Σ_m` acting on tensor powers of graded vector spaces
//! over `Q`, used to check the closed forms in [`crate::braidchar`] and
//! [`crate::extalg`].
//!
//! Conventions. A permutation `σ` moves the tensor factor in position `i` to
//! position `σ(i)`. Under the Koszul twist every pair of factors that `σ`
//! crosses contributes `(-1)^{deg · deg'}`. The categorical trace of an
//! endomorphism of a graded object is the degree-signed trace
//! `Σ_I ε^{deg e_I} · M_{II}`; for an object concentrated in a single total
//! degree this is `ε^{total degree}` times the ordinary trace.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coeffring::Sign;
use crate::error::{Error, Result};
use crate::graded::Twist;
use crate::symgroup::{factorial, Partition};

/// Largest tensor-power dimension `d^m` the oracle will materialize.
pub const MATRIX_CAP: usize = 4096;

/// A permutation of `0..n`, stored as its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The cycle `(c₀ c₁ … c_{r-1})` on `0..n`.
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &c) in cycle.iter().enumerate() {
            let next = cycle[(i + 1) % cycle.len()];
            if c >= n || next >= n {
                return Err(Error::Invalid(format!("cycle entry out of range for n={n}")));
            }
            images[c] = next;
        }
        Self::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_permutation(&self.images)
    }

    /// Moves the entry in position `i` to position `σ(i)`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        let mut out = items.to_vec();
        for (i, item) in items.iter().enumerate() {
            out[self.images[i]] = item.clone();
        }
        out
    }
}

/// Every permutation of `0..n` in lexicographic order of image vectors.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation {
        images: current.clone(),
    }];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation {
            images: current.clone(),
        });
    }
}

/// `∏_{i<j, σ(i)>σ(j)} (-1)^{d_i d_j}`.
pub fn koszul_sign(sigma: &Permutation, degrees: &[i64]) -> Sign {
    assert_eq!(sigma.len(), degrees.len(), "one degree per tensor factor");
    let mut odd_crossings = 0u64;
    for i in 0..degrees.len() {
        for j in i + 1..degrees.len() {
            if sigma.apply(i) > sigma.apply(j) && degrees[i] % 2 != 0 && degrees[j] % 2 != 0 {
                odd_crossings += 1;
            }
        }
    }
    Sign::Minus.pow(odd_crossings)
}

/// A finite-dimensional graded vector space over `Q`, given by a homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVectorSpace {
    basis: Vec<(usize, i64)>,
}

impl GradedVectorSpace {
    pub fn new(basis: Vec<(usize, i64)>) -> Result<Self> {
        let mut ids: Vec<usize> = basis.iter().map(|b| b.0).collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("basis indices must be distinct".into()));
        }
        Ok(Self { basis })
    }

    /// `Q^dim` placed in a single degree.
    pub fn concentrated(dim: usize, degree: i64) -> Self {
        Self {
            basis: (0..dim).map(|i| (i, degree)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.basis.iter().map(|b| b.1)
    }

    fn tensor_dim(&self, m: u32) -> Result<usize> {
        let requested = (self.dim() as u128).checked_pow(m).unwrap_or(u128::MAX);
        if requested > MATRIX_CAP as u128 {
            return Err(Error::EnumerationLimit {
                what: "tensor power dimension",
                requested,
                cap: MATRIX_CAP as u128,
            });
        }
        Ok(requested as usize)
    }

    /// Decodes basis tensor number `index` of `V^{⊗m}` into its factor indices.
    fn multi_index(&self, mut index: usize, m: u32) -> Vec<usize> {
        let d = self.dim();
        let mut out = vec![0; m as usize];
        for slot in out.iter_mut().rev() {
            *slot = index % d;
            index /= d;
        }
        out
    }

    fn encode(&self, factors: &[usize]) -> usize {
        factors.iter().fold(0, |acc, &f| acc * self.dim() + f)
    }

    /// Degrees of the basis tensors of `V^{⊗m}`.
    pub fn tensor_degrees(&self, m: u32) -> Result<Vec<i64>> {
        let n = self.tensor_dim(m)?;
        Ok((0..n)
            .map(|i| self.multi_index(i, m).iter().map(|&f| self.basis[f].1).sum())
            .collect())
    }
}

/// A monomial matrix with entries `±1`, stored column by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermMatrix {
    /// `columns[c] = (r, s)`: column `c` has entry `s` in row `r`.
    columns: Vec<(usize, Sign)>,
}

impl SignedPermMatrix {
    pub fn identity(n: usize) -> Self {
        Self {
            columns: (0..n).map(|i| (i, Sign::Plus)).collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> (usize, Sign) {
        self.columns[c]
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        match self.columns[col] {
            (r, s) if r == row => s.to_i64(),
            _ => 0,
        }
    }

    /// `self · other`.
    pub fn matmul(&self, other: &Self) -> Self {
        Self {
            columns: other
                .columns
                .iter()
                .map(|&(mid, s)| {
                    let (row, t) = self.columns[mid];
                    (row, s * t)
                })
                .collect(),
        }
    }

    /// The ordinary trace.
    pub fn trace(&self) -> BigInt {
        self.columns
            .iter()
            .enumerate()
            .filter(|(c, (r, _))| c == r)
            .map(|(_, (_, s))| BigInt::from(s.to_i64()))
            .sum()
    }

    /// The degree-signed trace `Σ_I ε^{deg_I} M_{II}`.
    pub fn graded_trace(&self, degrees: &[i64], epsilon: Sign) -> BigInt {
        self.columns
            .iter()
            .enumerate()
            .filter(|(c, (r, _))| c == r)
            .map(|(c, (_, s))| {
                BigInt::from((*s * epsilon.pow(degrees[c].unsigned_abs())).to_i64())
            })
            .sum()
    }
}

fn twist_sign(twist: &Twist<BigInt>) -> Result<Sign> {
    let eps = twist.epsilon();
    i64::try_from(&eps)
        .ok()
        .and_then(Sign::from_i64)
        .ok_or_else(|| Error::Domain(format!("twist unit {eps} is not ±1")))
}

/// Matrix of `σ` on `V^{⊗m}`: `e_{i₁} ⊗ … ⊗ e_{i_m} ↦ ± e_{i_{σ⁻¹(1)}} ⊗ … ⊗ e_{i_{σ⁻¹(m)}}`,
/// with the Koszul sign of `σ` on the factor degrees when `ε = -1`.
pub fn perm_action(
    sigma: &Permutation,
    space: &GradedVectorSpace,
    m: u32,
    twist: &Twist<BigInt>,
) -> Result<SignedPermMatrix> {
    if sigma.len() != m as usize {
        return Err(Error::Mismatch(format!(
            "permutation of {} letters acting on a {m}-fold tensor power",
            sigma.len()
        )));
    }
    let n = space.tensor_dim(m)?;
    let signed = twist_sign(twist)? == Sign::Minus;
    let columns = (0..n)
        .map(|col| {
            let factors = space.multi_index(col, m);
            let sign = if signed {
                let degrees: Vec<i64> = factors.iter().map(|&f| space.basis[f].1).collect();
                koszul_sign(sigma, &degrees)
            } else {
                Sign::Plus
            };
            (space.encode(&sigma.permute(&factors)), sign)
        })
        .collect();
    Ok(SignedPermMatrix { columns })
}

/// `ε^{total_degree}` times the ordinary trace; valid for objects
/// concentrated in `total_degree`.
pub fn categorical_trace(matrix: &SignedPermMatrix, total_degree: i64, twist: &Twist<BigInt>) -> Result<BigRational> {
    let eps = twist_sign(twist)?.pow(total_degree.unsigned_abs());
    Ok(BigRational::from_integer(
        BigInt::from(eps.to_i64()) * matrix.trace(),
    ))
}

/// Categorical trace of `σ` acting on `V^{⊗m}`, for `V` with arbitrary degrees.
pub fn categorical_trace_of(
    sigma: &Permutation,
    space: &GradedVectorSpace,
    m: u32,
    twist: &Twist<BigInt>,
) -> Result<BigRational> {
    let matrix = perm_action(sigma, space, m, twist)?;
    let degrees = space.tensor_degrees(m)?;
    Ok(BigRational::from_integer(
        matrix.graded_trace(&degrees, twist_sign(twist)?),
    ))
}

/// `(1/m!) Σ_{σ ∈ Σ_m}` of the categorical trace of `σ` on `V^{⊗m}`: the
/// dimension of the image of the (twisted) symmetrizing idempotent.
pub fn projector_dim(space: &GradedVectorSpace, m: u32, twist: &Twist<BigInt>) -> Result<BigRational> {
    space.tensor_dim(m)?;
    let mut sum = BigRational::zero();
    for sigma in all_permutations(m as usize) {
        sum += categorical_trace_of(&sigma, space, m, twist)?;
    }
    Ok(sum / BigRational::from_integer(BigInt::from(factorial(m))))
}

/// Helper for tests and the CLI: the categorical trace at the canonical
/// representative of `λ`, on `Q^dim` placed in degree one.
pub fn trace_at_class(partition: &Partition, dim: usize, twist: &Twist<BigInt>) -> Result<BigInt> {
    let m = partition.size();
    let sigma = Permutation::new(partition.canonical_representative())?;
    let space = GradedVectorSpace::concentrated(dim, 1);
    let matrix = perm_action(&sigma, &space, m, twist)?;
    let tr = categorical_trace(&matrix, i64::from(m), twist)?;
    debug_assert!(tr.is_integer());
    Ok(tr.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn swap() -> Permutation {
        Permutation::cycle(2, &[0, 1]).unwrap()
    }

    #[test]
    fn permutation_basics() {
        assert_eq!(all_permutations(0).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        let c = Permutation::cycle(3, &[0, 1, 2]).unwrap();
        assert_eq!(c.compose(&c.inverse()), Permutation::identity(3));
        assert_eq!(c.cycle_type(), Partition::new(vec![3]).unwrap());
        assert_eq!(c.permute(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
        assert!(Permutation::new(vec![0, 0]).is_err());
    }

    #[test]
    fn koszul_sign_examples() {
        assert_eq!(koszul_sign(&swap(), &[1, 1]), Sign::Minus);
        assert_eq!(koszul_sign(&swap(), &[1, 2]), Sign::Plus);
        let c = Permutation::cycle(3, &[0, 1, 2]).unwrap();
        assert_eq!(koszul_sign(&c, &[1, 1, 1]), Sign::Plus);
        for n in -3i64..=3 {
            for m in -3i64..=3 {
                let expected = if (n * m) % 2 == 0 { Sign::Plus } else { Sign::Minus };
                assert_eq!(koszul_sign(&swap(), &[n, m]), expected);
            }
        }
    }

    #[test]
    fn action_examples() {
        let v = GradedVectorSpace::concentrated(2, 0);
        let id = perm_action(&Permutation::identity(3), &v, 3, &Twist::Koszul).unwrap();
        assert_eq!(id, SignedPermMatrix::identity(8));

        let line = GradedVectorSpace::concentrated(1, 1);
        let m = perm_action(&swap(), &line, 2, &Twist::Koszul).unwrap();
        assert_eq!(m.dimension(), 1);
        assert_eq!(m.entry(0, 0), -1);

        let m = perm_action(&swap(), &v, 2, &Twist::Trivial).unwrap();
        assert_eq!(m.dimension(), 4);
        // e0⊗e1 (index 1) ↔ e1⊗e0 (index 2)
        assert_eq!(m.column(1), (2, Sign::Plus));
        assert_eq!(m.column(2), (1, Sign::Plus));
        assert_eq!(m.column(0), (0, Sign::Plus));
        assert_eq!(m.column(3), (3, Sign::Plus));
    }

    #[test]
    fn action_cap() {
        let v = GradedVectorSpace::concentrated(4, 1);
        let sigma = Permutation::identity(7);
        assert!(matches!(
            perm_action(&sigma, &v, 7, &Twist::Trivial),
            Err(Error::EnumerationLimit { .. })
        ));
        assert!(perm_action(&Permutation::identity(6), &v, 6, &Twist::Trivial).is_ok());
    }

    #[test]
    fn trace_examples() {
        let id = SignedPermMatrix::identity(4);
        assert_eq!(categorical_trace(&id, 2, &Twist::Koszul).unwrap(), q(4));

        let v = GradedVectorSpace::concentrated(2, 1);
        let c = Permutation::cycle(3, &[0, 1, 2]).unwrap();
        let m = perm_action(&c, &v, 3, &Twist::Koszul).unwrap();
        assert_eq!(m.trace(), BigInt::from(2));
        assert_eq!(categorical_trace(&m, 3, &Twist::Koszul).unwrap(), q(-2));

        let line = GradedVectorSpace::concentrated(1, 1);
        let m = perm_action(&swap(), &line, 2, &Twist::Koszul).unwrap();
        assert_eq!(categorical_trace(&m, 2, &Twist::Koszul).unwrap(), q(-1));
    }

    #[test]
    fn projector_examples() {
        let v = GradedVectorSpace::concentrated(2, 0);
        assert_eq!(projector_dim(&v, 2, &Twist::Trivial).unwrap(), q(3));
        let v = GradedVectorSpace::concentrated(2, 1);
        assert_eq!(projector_dim(&v, 2, &Twist::Koszul).unwrap(), q(1));
        let line = GradedVectorSpace::concentrated(1, 1);
        assert_eq!(projector_dim(&line, 2, &Twist::Koszul).unwrap(), q(0));
    }

    #[test]
    fn mixed_degree_projector() {
        // (1|1): invariants are e^m (degree 0) and e^{m-1}f (degree 1), so the
        // signed count is 1 - 1 for m ≥ 1
        let v = GradedVectorSpace::new(vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(projector_dim(&v, 0, &Twist::Koszul).unwrap(), q(1));
        for m in 1..=5 {
            assert_eq!(projector_dim(&v, m, &Twist::Koszul).unwrap(), q(0));
        }
        assert!(GradedVectorSpace::new(vec![(0, 0), (0, 1)]).is_err());
    }

    proptest! {
        #[test]
        fn koszul_sign_is_a_cocycle(
            m in 1usize..=6,
            seed_s in any::<u64>(),
            seed_t in any::<u64>(),
            degs in proptest::collection::vec(-3i64..=3, 6),
        ) {
            let perms = all_permutations(m);
            let s = &perms[(seed_s % perms.len() as u64) as usize];
            let t = &perms[(seed_t % perms.len() as u64) as usize];
            let deg = &degs[..m];
            let moved = t.permute(deg);
            prop_assert_eq!(
                koszul_sign(&s.compose(t), deg),
                koszul_sign(s, &moved) * koszul_sign(t, deg)
            );
        }

        #[test]
        fn action_is_a_homomorphism(
            m in 1u32..=4,
            d in 1usize..=2,
            seed_s in any::<u64>(),
            seed_t in any::<u64>(),
            degs in proptest::collection::vec(0i64..=2, 2),
            koszul in any::<bool>(),
        ) {
            let tw = if koszul { Twist::Koszul } else { Twist::Trivial };
            let space = GradedVectorSpace::new((0..d).map(|i| (i, degs[i])).collect()).unwrap();
            let perms = all_permutations(m as usize);
            let s = &perms[(seed_s % perms.len() as u64) as usize];
            let t = &perms[(seed_t % perms.len() as u64) as usize];
            let lhs = perm_action(&s.compose(t), &space, m, &tw).unwrap();
            let rhs = perm_action(s, &space, m, &tw).unwrap().matmul(&perm_action(t, &space, m, &tw).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn trace_is_a_class_function(
            m in 1u32..=5,
            d in 1usize..=3,
            seed_s in any::<u64>(),
            seed_g in any::<u64>(),
            koszul in any::<bool>(),
        ) {
            let tw = if koszul { Twist::Koszul } else { Twist::Trivial };
            let space = GradedVectorSpace::concentrated(d, 1);
            let perms = all_permutations(m as usize);
            let s = &perms[(seed_s % perms.len() as u64) as usize];
            let g = &perms[(seed_g % perms.len() as u64) as usize];
            let conj = g.compose(s).compose(&g.inverse());
            prop_assert_eq!(
                categorical_trace_of(s, &space, m, &tw).unwrap(),
                categorical_trace_of(&conj, &space, m, &tw).unwrap()
            );
        }
    }

    #[test]
    fn projector_dims_are_integers() {
        for d in 1..=3 {
            for m in 0..=5 {
                for tw in [Twist::Trivial, Twist::Koszul] {
                    for deg in 0..=1 {
                        let v = GradedVectorSpace::concentrated(d, deg);
                        assert!(projector_dim(&v, m, &tw).unwrap().is_integer());
                    }
                }
            }
        }
        assert!(BigRational::one().is_integer());
    }
}
