//! The transformation group `T_n = (Z_2)^n ⋊ S_n` and its right actions on
//! real vectors, Boolean vectors, and subsets of `{1..n}`.
//!
//! Conventions (fixed across the crate):
//! - Permutations are 1-based in semantics; `sigma.apply(i)` is `sigma(i)`.
//! - Composition `(sigma tau)(i) = sigma(tau(i))`.
//! - Group law `(nu, sigma)(mu, tau) = (nu + mu o sigma^-1, sigma tau)` where
//!   `(mu^(sigma^-1))_i = mu_(sigma^-1(i))`; inverse `(nu, sigma)^-1 = (nu o sigma, sigma^-1)`.
//! - All actions written exponentially are right actions:
//!   `act(h, act(g, z)) = act(compose(g, h), z)`.

use crate::Rational;
use num::Signed;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors from constructing or combining group data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("mapping is not a bijection of 1..={n}")]
    NotABijection { n: usize },
    #[error("negation entries must be 0 or 1")]
    BadNegationBit,
    #[error("Boolean vectors support n <= 62, got {n}")]
    ArityTooLarge { n: usize },
    #[error("element {element} out of range 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
}

fn check_dims(left: usize, right: usize) -> Result<(), GroupError> {
    if left == right {
        Ok(())
    } else {
        Err(GroupError::DimensionMismatch { left, right })
    }
}

/// A permutation of `{1..n}`, stored 0-based as `map[i-1] = sigma(i) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// Builds from the 1-based image list `[sigma(1), ..., sigma(n)]`.
    pub fn from_one_based(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(GroupError::NotABijection { n });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { map: images.into_iter().map(|v| v - 1).collect() })
    }

    /// Builds from a 0-based image list without the 1-based offset.
    pub fn from_zero_based(map: Vec<usize>) -> Result<Self, GroupError> {
        let shifted: Vec<usize> = map.into_iter().map(|v| v + 1).collect();
        Self::from_one_based(shifted)
    }

    /// The transposition of `a` and `b` (1-based) in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self, GroupError> {
        for &v in &[a, b] {
            if v == 0 || v > n {
                return Err(GroupError::ElementOutOfRange { element: v, n });
            }
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a - 1, b - 1);
        Ok(Permutation { map })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// `sigma(i)` with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    /// The 1-based image list `[sigma(1), ..., sigma(n)]`.
    pub fn one_based(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, GroupError> {
        check_dims(self.n(), other.n())?;
        Ok(Permutation { map: other.map.iter().map(|&i| self.map[i]).collect() })
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// A negation vector `nu` in `(Z_2)^n`, entries 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Negation {
    bits: Vec<u8>,
}

impl Negation {
    pub fn zero(n: usize) -> Self {
        Negation { bits: vec![0; n] }
    }

    pub fn all_ones(n: usize) -> Self {
        Negation { bits: vec![1; n] }
    }

    pub fn from_bits(bits: Vec<u8>) -> Result<Self, GroupError> {
        if bits.iter().any(|&b| b > 1) {
            return Err(GroupError::BadNegationBit);
        }
        Ok(Negation { bits })
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    /// `nu_i` with 1-based `i`.
    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupElementRepr {
    nu: Vec<u8>,
    sigma: Vec<usize>,
}

/// An element `(nu, sigma)` of `T_n`.
///
/// Serializes as `{"nu":[0,1,...],"sigma":[2,1,...]}` with `sigma` listing
/// the 1-based images `sigma(1), ..., sigma(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupElementRepr", into = "GroupElementRepr")]
pub struct GroupElement {
    nu: Negation,
    sigma: Permutation,
}

impl TryFrom<GroupElementRepr> for GroupElement {
    type Error = GroupError;

    fn try_from(repr: GroupElementRepr) -> Result<Self, GroupError> {
        GroupElement::new(Negation::from_bits(repr.nu)?, Permutation::from_one_based(repr.sigma)?)
    }
}

impl From<GroupElement> for GroupElementRepr {
    fn from(g: GroupElement) -> GroupElementRepr {
        GroupElementRepr { nu: g.nu.bits.clone(), sigma: g.sigma.one_based() }
    }
}

impl GroupElement {
    pub fn new(nu: Negation, sigma: Permutation) -> Result<Self, GroupError> {
        check_dims(nu.n(), sigma.n())?;
        Ok(GroupElement { nu, sigma })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement { nu: Negation::zero(n), sigma: Permutation::identity(n) }
    }

    /// A pure permutation `(0, sigma)`.
    pub fn from_permutation(sigma: Permutation) -> Self {
        GroupElement { nu: Negation::zero(sigma.n()), sigma }
    }

    /// A pure negation `(nu, id)`.
    pub fn from_negation(nu: Negation) -> Self {
        let n = nu.n();
        GroupElement { nu, sigma: Permutation::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    pub fn nu(&self) -> &Negation {
        &self.nu
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn is_identity(&self) -> bool {
        self.nu.is_zero() && self.sigma.is_identity()
    }

    /// `(nu, sigma)(mu, tau) = (nu + mu^(sigma^-1), sigma tau)`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        check_dims(self.n(), other.n())?;
        let sigma_inv = self.sigma.inverse();
        let bits = (1..=self.n())
            .map(|i| self.nu.bit(i) ^ other.nu.bit(sigma_inv.apply(i)))
            .collect();
        Ok(GroupElement {
            nu: Negation { bits },
            sigma: self.sigma.compose(&other.sigma).expect("dims checked"),
        })
    }

    /// `(nu, sigma)^-1 = (nu^sigma, sigma^-1)` with `(nu^sigma)_i = nu_(sigma(i))`.
    pub fn inverse(&self) -> GroupElement {
        let bits = (1..=self.n()).map(|i| self.nu.bit(self.sigma.apply(i))).collect();
        GroupElement { nu: Negation { bits }, sigma: self.sigma.inverse() }
    }

    /// Right action on real vectors: `(z^(nu,sigma))_i = (-1)^(nu_sigma(i)) z_sigma(i)`.
    pub fn act_real(&self, z: &[Rational]) -> Result<Vec<Rational>, GroupError> {
        check_dims(self.n(), z.len())?;
        Ok((1..=self.n())
            .map(|i| {
                let j = self.sigma.apply(i);
                if self.nu.bit(j) == 1 {
                    -z[j - 1].clone()
                } else {
                    z[j - 1].clone()
                }
            })
            .collect())
    }

    /// Right action on Boolean vectors: `(x^(nu,sigma))_i = x_sigma(i) + nu_sigma(i) mod 2`.
    pub fn act_bool(&self, x: BoolVec) -> Result<BoolVec, GroupError> {
        check_dims(self.n(), x.n())?;
        let mut out = BoolVec::zero(x.n())?;
        for i in 1..=self.n() {
            let j = self.sigma.apply(i);
            out.set(i, x.get(j) ^ (self.nu.bit(j) == 1));
        }
        Ok(out)
    }

    /// Right action on subsets: `J^(nu,sigma) = sigma^-1(J symdiff chi^-1(nu))`,
    /// implemented through the characteristic vector so that
    /// `chi(act_subset(g, J)) = act_bool(g, chi(J))` holds by construction.
    pub fn act_subset(&self, j: &SubsetOfN) -> Result<SubsetOfN, GroupError> {
        Ok(SubsetOfN { chi: self.act_bool(j.chi)? })
    }
}

/// A Boolean vector `x` in `B_n`, packed into a word with `x_1` as the most
/// significant of the low `n` bits. The word value is exactly the truth-table
/// input index `sum x_j 2^(n-j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolVec {
    n: usize,
    word: u64,
}

impl BoolVec {
    pub const MAX_N: usize = 62;

    pub fn zero(n: usize) -> Result<Self, GroupError> {
        if n > Self::MAX_N {
            return Err(GroupError::ArityTooLarge { n });
        }
        Ok(BoolVec { n, word: 0 })
    }

    /// Builds from the packed word (the truth-table index).
    pub fn from_word(n: usize, word: u64) -> Result<Self, GroupError> {
        if n > Self::MAX_N {
            return Err(GroupError::ArityTooLarge { n });
        }
        if n < 64 && word >> n != 0 {
            return Err(GroupError::ElementOutOfRange { element: word as usize, n });
        }
        Ok(BoolVec { n, word })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self, GroupError> {
        let mut v = BoolVec::zero(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(GroupError::BadNegationBit);
            }
            v.set(i + 1, b == 1);
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The packed word, equal to the truth-table input index of `x`.
    pub fn word(&self) -> u64 {
        self.word
    }

    /// `x_i` with 1-based `i`.
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i >= 1 && i <= self.n);
        (self.word >> (self.n - i)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i >= 1 && i <= self.n);
        let bit = 1u64 << (self.n - i);
        if value {
            self.word |= bit;
        } else {
            self.word &= !bit;
        }
    }

    /// The entrywise complement `x bar`.
    pub fn complement(&self) -> BoolVec {
        let mask = if self.n == 0 { 0 } else { (1u64 << self.n) - 1 };
        BoolVec { n: self.n, word: !self.word & mask }
    }

    /// Number of ones.
    pub fn weight(&self) -> u32 {
        self.word.count_ones()
    }

    /// All `2^n` vectors in index order.
    pub fn all(n: usize) -> impl Iterator<Item = BoolVec> {
        assert!(n <= Self::MAX_N);
        (0u64..(1u64 << n)).map(move |word| BoolVec { n, word })
    }
}

impl std::fmt::Display for BoolVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 1..=self.n {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BoolVec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let bits: Result<Vec<u8>, GroupError> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(GroupError::BadNegationBit),
            })
            .collect();
        BoolVec::from_bits(&bits?)
    }
}

/// A subset `J` of `{1..n}`, stored as its characteristic vector `chi(J)`
/// with `chi(J)_i = 1` iff `i` is in `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetOfN {
    chi: BoolVec,
}

impl SubsetOfN {
    pub fn empty(n: usize) -> Result<Self, GroupError> {
        Ok(SubsetOfN { chi: BoolVec::zero(n)? })
    }

    pub fn from_chi(chi: BoolVec) -> Self {
        SubsetOfN { chi }
    }

    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self, GroupError> {
        let mut chi = BoolVec::zero(n)?;
        for &e in elements {
            if e == 0 || e > n {
                return Err(GroupError::ElementOutOfRange { element: e, n });
            }
            chi.set(e, true);
        }
        Ok(SubsetOfN { chi })
    }

    /// Builds from an LSB-based bitmask (bit `i-1` set iff `i` in `J`).
    pub fn from_mask_lsb(n: usize, mask: u64) -> Result<Self, GroupError> {
        let mut chi = BoolVec::zero(n)?;
        for i in 1..=n {
            if (mask >> (i - 1)) & 1 == 1 {
                chi.set(i, true);
            }
        }
        if n < 64 && mask >> n != 0 {
            return Err(GroupError::ElementOutOfRange { element: mask as usize, n });
        }
        Ok(SubsetOfN { chi })
    }

    pub fn n(&self) -> usize {
        self.chi.n()
    }

    pub fn chi(&self) -> BoolVec {
        self.chi
    }

    pub fn contains(&self, i: usize) -> bool {
        self.chi.get(i)
    }

    pub fn len(&self) -> usize {
        self.chi.weight() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.chi.word() == 0
    }

    /// Elements in ascending order (1-based).
    pub fn elements(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.contains(i)).collect()
    }

    /// The LSB-based bitmask (bit `i-1` set iff `i` in `J`).
    pub fn mask_lsb(&self) -> u64 {
        let mut mask = 0u64;
        for i in 1..=self.n() {
            if self.contains(i) {
                mask |= 1 << (i - 1);
            }
        }
        mask
    }

    pub fn complement(&self) -> SubsetOfN {
        SubsetOfN { chi: self.chi.complement() }
    }
}

impl fmt::Display for SubsetOfN {
    /// Elements in decreasing order, comma-separated; the empty set is `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for i in (1..=self.n()).rev() {
            if self.contains(i) {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{i}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// The canonical representative of the `T_n`-orbit of `z`: entrywise absolute
/// values sorted in non-decreasing order. Two vectors are `T_n`-equivalent
/// iff their canonical forms are equal.
pub fn canonical_real(z: &[Rational]) -> Vec<Rational> {
    let mut abs: Vec<Rational> = z.iter().map(|v| v.abs()).collect();
    abs.sort();
    abs
}

/// Like [`canonical_real`], also returning a group element `g` with
/// `act_real(g, z) = canonical_real(z)`.
pub fn canonical_real_witness(z: &[Rational]) -> (Vec<Rational>, GroupElement) {
    let n = z.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| z[a].abs().cmp(&z[b].abs()).then(a.cmp(&b)));
    let sigma = Permutation { map: order };
    let bits = z.iter().map(|v| u8::from(v.is_negative())).collect();
    let g = GroupElement { nu: Negation { bits }, sigma };
    let canon = g.act_real(z).expect("same n by construction");
    debug_assert_eq!(canon, canonical_real(z));
    (canon, g)
}

/// All `2^n n!` elements of `T_n`, for exhaustive small-n checks.
pub fn all_group_elements(n: usize) -> Vec<GroupElement> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for perm in (0..n).permutations(n) {
        let sigma = Permutation { map: perm };
        for mask in 0u64..(1 << n) {
            let bits = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
            out.push(GroupElement { nu: Negation { bits }, sigma: sigma.clone() });
        }
    }
    if n == 0 {
        out.push(GroupElement::identity(0));
    }
    out
}
