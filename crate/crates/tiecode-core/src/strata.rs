//! Strata of the tie arrangement: signatures, enumeration, and totals.
//!
//! A wall is the hyperplane on which one side of a two-block partition of
//! `{1, ..., n}` balances the other. Inside the open positive orthant the
//! walls indexed by nonempty subsets avoiding `n` are pairwise distinct and
//! exhaust all ties, so a point is classified by the exact three-way
//! comparison it induces on every wall ([`StratumSignature`]). The locus
//! with a fixed signature is convex, hence connected, so strata are in
//! bijection with realizable signatures.
//!
//! [`enumerate_strata_positive`] counts strata meeting the open positive
//! orthant up to coordinate permutations. It seeds a breadth-first search
//! with all chamber signatures and collapses one strict wall at a time to a
//! tie, using exact feasibility checks to identify the face signature that
//! results (including any further ties the collapse forces). The count of
//! canonical signatures is `k(n)`; [`total_strata`] extends it to the count
//! `tk(n)` of all strata of the closed orthant through a recursion on `n`.
//!
//! Long searches can be checkpointed: [`StrataBfs`] serializes its visited
//! set and pending frontier in the binary `STR1` format and resumes from it.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use num::Signed;
use rayon::prelude::*;
use thiserror::Error;

use crate::genetic::{self, CensusMode, GeneticError};
use crate::group::SubsetOfN;
use crate::lp::{lp_feasible, Feasibility, LinearSystem};
use crate::{rat, Rational};

/// Largest arity accepted by signature computations.
pub const MAX_SIGNATURE_N: usize = 10;

/// Largest arity accepted by the stratum enumeration and totals.
pub const MAX_STRATA_N: usize = 8;

/// Errors for stratum computations.
#[derive(Debug, Error)]
pub enum StrataError {
    /// The arity is outside the supported range.
    #[error("arity {n} is out of range (1..={max})")]
    ArityOutOfRange { n: usize, max: usize },
    /// A coordinate that must be strictly positive is not.
    #[error("entry #{index} is not strictly positive")]
    NonpositiveEntry { index: usize },
    /// A candidate wall side is empty or full.
    #[error("a wall side must be a nonempty proper subset of the ground set")]
    BadWall,
    /// A signature has the wrong number of trits for its arity.
    #[error("signature carries {got} trits but arity {n} has {want} walls")]
    WrongSignatureLength { n: usize, got: usize, want: usize },
    /// A signature trit is not one of -1, 0, +1.
    #[error("trit value {value} is not -1, 0 or +1")]
    BadTritValue { value: i8 },
    /// A signature text does not parse.
    #[error("bad signature text: {reason}")]
    BadSignatureText { reason: String },
    /// No strictly positive vector realizes the signature.
    #[error("signature is not realizable by a strictly positive vector")]
    NotRealizable,
    /// A checkpoint file is malformed.
    #[error("bad checkpoint file: {reason}")]
    BadCheckpoint { reason: String },
    /// An underlying I/O operation failed.
    #[error("i/o error")]
    Io(#[from] std::io::Error),
    /// A chamber computation failed.
    #[error(transparent)]
    Genetic(#[from] GeneticError),
}

/// Number of walls meeting the open positive orthant at arity `n`.
fn num_walls(n: usize) -> usize {
    (1usize << (n - 1)) - 1
}

/// A tie wall, stored as the side of the partition that avoids `n`.
///
/// A subset and its complement span the same hyperplane, so normalizing on
/// the side without `n` makes the representation unique. The empty side is
/// excluded because its wall misses the open positive orthant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wall {
    n: usize,
    mask: u64,
}

impl Wall {
    /// Builds the wall spanned by `side`, normalizing to the variant that
    /// avoids the largest element.
    pub fn from_side(side: &SubsetOfN) -> Result<Self, StrataError> {
        let n = side.n();
        let normalized = if side.contains(n) {
            side.complement()
        } else {
            side.clone()
        };
        Self::from_mask(n, normalized.mask_lsb())
    }

    /// Builds a wall from the bitmask of its normalized side
    /// (bit `i-1` set iff `i` belongs to the side; `n` never does).
    pub fn from_mask(n: usize, mask: u64) -> Result<Self, StrataError> {
        if n < 1 || n > MAX_SIGNATURE_N {
            return Err(StrataError::ArityOutOfRange {
                n,
                max: MAX_SIGNATURE_N,
            });
        }
        if mask == 0 || mask >= 1u64 << (n - 1) {
            return Err(StrataError::BadWall);
        }
        Ok(Wall { n, mask })
    }

    /// All walls of arity `n` in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Wall> {
        (1..(1u64 << (n - 1))).map(move |mask| Wall { n, mask })
    }

    /// Ambient arity.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask of the normalized side.
    pub fn mask_lsb(&self) -> u64 {
        self.mask
    }

    /// The stored side, which avoids `n`.
    pub fn side_without_n(&self) -> SubsetOfN {
        SubsetOfN::from_mask_lsb(self.n, self.mask).expect("validated at construction")
    }

    /// The opposite side, which contains `n`.
    pub fn side_with_n(&self) -> SubsetOfN {
        self.side_without_n().complement()
    }
}

impl fmt::Display for Wall {
    /// Prints the side containing the largest element; both sides describe
    /// the same wall.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.side_with_n())
    }
}

/// The exact three-way comparison outcome on every wall of an arrangement
/// point: `+1`, `0`, or `-1` per wall, in increasing order of the wall's
/// normalized bitmask.
///
/// The trit at wall `J` (with `n` outside `J`) is the sign of
/// `sum(complement) - sum(J)`, so `+1` means the stored side is the lighter
/// one. Only realizable signatures can be constructed; [`StratumSignature::new`]
/// verifies feasibility with exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StratumSignature {
    n: usize,
    trits: Vec<i8>,
}

impl StratumSignature {
    /// Validates trit values, length, and realizability.
    pub fn new(n: usize, trits: Vec<i8>) -> Result<Self, StrataError> {
        if n < 1 || n > MAX_SIGNATURE_N {
            return Err(StrataError::ArityOutOfRange {
                n,
                max: MAX_SIGNATURE_N,
            });
        }
        if trits.len() != num_walls(n) {
            return Err(StrataError::WrongSignatureLength {
                n,
                got: trits.len(),
                want: num_walls(n),
            });
        }
        if let Some(&value) = trits.iter().find(|t| !(-1i8..=1).contains(t)) {
            return Err(StrataError::BadTritValue { value });
        }
        let candidate = StratumSignature { n, trits };
        match lp_feasible(&candidate.strict_system()) {
            Feasibility::Feasible(_) => Ok(candidate),
            Feasibility::Infeasible => Err(StrataError::NotRealizable),
        }
    }

    fn new_unchecked(n: usize, trits: Vec<i8>) -> Self {
        debug_assert_eq!(trits.len(), num_walls(n));
        StratumSignature { n, trits }
    }

    /// Ambient arity.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of walls, `2^(n-1) - 1`.
    pub fn num_walls(&self) -> usize {
        self.trits.len()
    }

    /// Trits in wall-bitmask order.
    pub fn trits(&self) -> &[i8] {
        &self.trits
    }

    /// The trit at `wall`.
    ///
    /// # Panics
    /// Panics when the wall belongs to a different arity.
    pub fn trit(&self, wall: &Wall) -> i8 {
        assert_eq!(wall.n(), self.n, "wall arity mismatch");
        self.trits[(wall.mask_lsb() - 1) as usize]
    }

    /// Whether no wall is tied, i.e. the signature names a chamber.
    pub fn is_chamber(&self) -> bool {
        self.trits.iter().all(|&t| t != 0)
    }

    /// The tied walls, in bitmask order.
    pub fn zero_walls(&self) -> Vec<Wall> {
        self.trits
            .iter()
            .enumerate()
            .filter(|(_, &t)| t == 0)
            .map(|(idx, _)| Wall {
                n: self.n,
                mask: idx as u64 + 1,
            })
            .collect()
    }

    /// A strictly positive vector realizing the signature.
    pub fn witness(&self) -> Vec<Rational> {
        match lp_feasible(&self.strict_system()) {
            Feasibility::Feasible(a) => a,
            Feasibility::Infeasible => unreachable!("validated at construction"),
        }
    }

    /// System whose solutions are exactly the points with this signature
    /// (after scaling): ties as equalities, strict walls with unit slack.
    fn strict_system(&self) -> LinearSystem {
        let kinds: Vec<FaceRow> = self
            .trits
            .iter()
            .map(|&t| if t == 0 { FaceRow::Zero } else { FaceRow::Strict(t) })
            .collect();
        face_system(self.n, &kinds)
    }

    /// Lexicographically minimal permuted signature, comparing trits in the
    /// order `+ < 0 < -` along walls in bitmask order.
    pub fn canonicalize(&self) -> StratumSignature {
        let n = self.n;
        let walls = self.trits.len();
        if walls == 0 {
            return self.clone();
        }
        let keys: Vec<u8> = self.trits.iter().map(|&t| trit_key(t)).collect();
        let mut search = CanonSearch {
            n,
            full: (1u64 << n) - 1,
            keys: &keys,
            cur: vec![0; walls],
            img: vec![0; walls + 1],
            best: keys.clone(),
        };
        search.dfs(1, 0);
        let trits = search.best.iter().map(|&k| key_trit(k)).collect();
        StratumSignature::new_unchecked(n, trits)
    }
}

impl fmt::Display for StratumSignature {
    /// One character per wall in bitmask order: `+`, `0`, or `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &t in &self.trits {
            let ch = match t {
                1 => '+',
                0 => '0',
                _ => '-',
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

impl FromStr for StratumSignature {
    type Err = StrataError;

    /// Parses the [`fmt::Display`] form; the arity is recovered from the
    /// length and realizability is verified.
    fn from_str(s: &str) -> Result<Self, StrataError> {
        let len = s.chars().count();
        let size = len + 1;
        if !size.is_power_of_two() {
            return Err(StrataError::BadSignatureText {
                reason: format!("length {len} is not 2^(n-1) - 1 for any arity n"),
            });
        }
        let n = size.trailing_zeros() as usize + 1;
        let mut trits = Vec::with_capacity(len);
        for ch in s.chars() {
            trits.push(match ch {
                '+' => 1,
                '0' => 0,
                '-' => -1,
                other => {
                    return Err(StrataError::BadSignatureText {
                        reason: format!("unexpected character {other:?}"),
                    })
                }
            });
        }
        StratumSignature::new(n, trits)
    }
}

/// Canonical-order key: `+` sorts before `0` before `-`.
fn trit_key(t: i8) -> u8 {
    match t {
        1 => 0,
        0 => 1,
        _ => 2,
    }
}

fn key_trit(k: u8) -> i8 {
    match k {
        0 => 1,
        1 => 0,
        _ => -1,
    }
}

/// Branch-and-bound search for the lexicographically minimal permuted
/// signature. Images of elements `1..n-1` are assigned in order; once the
/// elements `1..m` have images, the trits of all walls inside `{1..m}` (the
/// first `2^m - 1` in bitmask order) are determined, so prefixes can be
/// compared against the best complete candidate found so far.
struct CanonSearch<'a> {
    n: usize,
    full: u64,
    keys: &'a [u8],
    cur: Vec<u8>,
    img: Vec<u64>,
    best: Vec<u8>,
}

impl CanonSearch<'_> {
    fn dfs(&mut self, m: usize, used: u64) {
        if m == self.n {
            if self.cur < self.best {
                self.best.copy_from_slice(&self.cur);
            }
            return;
        }
        let lo = 1usize << (m - 1);
        for cand in 1..=self.n {
            let bit = 1u64 << (cand - 1);
            if used & bit != 0 {
                continue;
            }
            for mask in lo..2 * lo {
                let im = self.img[mask - lo] | bit;
                self.img[mask] = im;
                // A permutation may move the stored side onto the side
                // containing n; the trit then flips with the complement.
                self.cur[mask - 1] = if im & (1 << (self.n - 1)) == 0 {
                    self.keys[im as usize - 1]
                } else {
                    2 - self.keys[(self.full ^ im) as usize - 1]
                };
            }
            let filled = 2 * lo - 1;
            if self.cur[..filled] <= self.best[..filled] {
                self.dfs(m + 1, used | bit);
            }
        }
    }
}

/// Per-wall row kind for [`face_system`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FaceRow {
    /// The wall is a tie: equality.
    Zero,
    /// The wall keeps the given sign strictly (unit slack after scaling).
    Strict(i8),
    /// The wall keeps the given sign weakly.
    Weak(i8),
}

/// Coefficients of `sign * (sum(complement) - sum(side))` for the wall with
/// the given normalized side mask.
fn wall_row(n: usize, mask: u64, sign: i8) -> Vec<Rational> {
    let s = i64::from(sign);
    (0..n)
        .map(|j| {
            if mask & (1 << j) != 0 {
                rat(-s, 1)
            } else {
                rat(s, 1)
            }
        })
        .collect()
}

/// System over `a_1, ..., a_n` combining strict positivity (`a_i >= 1`
/// after scaling) with one row per wall as prescribed by `kinds`.
fn face_system(n: usize, kinds: &[FaceRow]) -> LinearSystem {
    debug_assert_eq!(kinds.len(), num_walls(n));
    let mut sys = LinearSystem::new(n);
    for i in 0..n {
        let mut unit = vec![rat(0, 1); n];
        unit[i] = rat(1, 1);
        sys.ge1(unit);
    }
    for (idx, kind) in kinds.iter().enumerate() {
        let mask = idx as u64 + 1;
        match kind {
            FaceRow::Zero => sys.eq0(wall_row(n, mask, 1)),
            FaceRow::Strict(s) => {
                debug_assert_ne!(*s, 0);
                sys.ge1(wall_row(n, mask, *s));
            }
            FaceRow::Weak(s) => {
                debug_assert_ne!(*s, 0);
                sys.ge0(wall_row(n, mask, *s));
            }
        }
    }
    sys
}

/// Exact signature of a strictly positive point.
pub fn signature_of(a: &[Rational]) -> Result<StratumSignature, StrataError> {
    let n = a.len();
    if n < 1 || n > MAX_SIGNATURE_N {
        return Err(StrataError::ArityOutOfRange {
            n,
            max: MAX_SIGNATURE_N,
        });
    }
    if let Some(index) = a.iter().position(|x| !x.is_positive()) {
        return Err(StrataError::NonpositiveEntry { index: index + 1 });
    }
    // Subset sums over sides avoiding n, by DP on the lowest set bit.
    let size = 1usize << (n - 1);
    let mut sums: Vec<Rational> = Vec::with_capacity(size);
    sums.push(rat(0, 1));
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        let value = &sums[mask & (mask - 1)] + &a[low];
        sums.push(value);
    }
    let total: Rational = a.iter().sum();
    let trits = (1..size)
        .map(|mask| {
            let twice = &sums[mask] + &sums[mask];
            match twice.cmp(&total) {
                std::cmp::Ordering::Less => 1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => -1,
            }
        })
        .collect();
    Ok(StratumSignature::new_unchecked(n, trits))
}

/// Collapses the strict wall at `w_idx` of `sig` to a tie and returns the
/// signature of the relative interior of the resulting face, with every
/// further tie the collapse forces included. Returns `None` when the face
/// misses the open positive orthant.
fn collapse_wall(sig: &StratumSignature, w_idx: usize) -> Option<StratumSignature> {
    let n = sig.n;
    let walls = sig.trits.len();
    let mut kinds: Vec<FaceRow> = sig
        .trits
        .iter()
        .map(|&t| if t == 0 { FaceRow::Zero } else { FaceRow::Weak(t) })
        .collect();
    kinds[w_idx] = FaceRow::Zero;
    let Feasibility::Feasible(mut acc) = lp_feasible(&face_system(n, &kinds)) else {
        return None;
    };
    // `acc` accumulates witnesses; signatures are scale-invariant, so the
    // signature of the sum is the signature of the average, which is strict
    // on every wall that is strict somewhere on the face.
    let mut forced = vec![false; walls];
    loop {
        let s = signature_of(&acc).expect("witness entries are >= 1");
        let candidate = (0..walls).find(|&u| {
            s.trits[u] == 0 && u != w_idx && sig.trits[u] != 0 && !forced[u]
        });
        let Some(u) = candidate else {
            return Some(s);
        };
        let mut probe = kinds.clone();
        probe[u] = FaceRow::Strict(sig.trits[u]);
        match lp_feasible(&face_system(n, &probe)) {
            Feasibility::Feasible(y) => {
                for (a, b) in acc.iter_mut().zip(y) {
                    *a += b;
                }
            }
            Feasibility::Infeasible => forced[u] = true,
        }
    }
}

/// Children of the canonical signature `trits`: one collapse per strict
/// wall, canonicalized, in wall order.
fn expand(n: usize, trits: &[i8]) -> Vec<Vec<i8>> {
    let sig = StratumSignature::new_unchecked(n, trits.to_vec());
    (0..trits.len())
        .filter(|&idx| trits[idx] != 0)
        .filter_map(|idx| collapse_wall(&sig, idx))
        .map(|face| face.canonicalize().trits)
        .collect()
}

/// Resumable breadth-first search over strata of the open positive orthant.
///
/// The visited set holds canonical signatures; the frontier holds those not
/// yet expanded. The final visited count is `k(n)` regardless of expansion
/// order.
#[derive(Debug)]
pub struct StrataBfs {
    n: usize,
    visited: BTreeSet<Vec<i8>>,
    frontier: VecDeque<Vec<i8>>,
}

const STR1_MAGIC: &[u8; 4] = b"STR1";

impl StrataBfs {
    /// Seeds the search with the canonical signatures of all chambers.
    pub fn new(n: usize) -> Result<Self, StrataError> {
        if n < 1 || n > MAX_STRATA_N {
            return Err(StrataError::ArityOutOfRange {
                n,
                max: MAX_STRATA_N,
            });
        }
        let mut visited = BTreeSet::new();
        let mut frontier = VecDeque::new();
        genetic::for_each_chamber(n, |_, witness| {
            let canon = signature_of(witness)
                .expect("chamber witnesses are strictly positive")
                .canonicalize();
            if visited.insert(canon.trits.clone()) {
                frontier.push_back(canon.trits);
            }
        })?;
        Ok(StrataBfs {
            n,
            visited,
            frontier,
        })
    }

    /// Ambient arity.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct canonical signatures found so far.
    pub fn visited_count(&self) -> u64 {
        self.visited.len() as u64
    }

    /// Number of signatures awaiting expansion.
    pub fn pending(&self) -> usize {
        self.frontier.len()
    }

    /// Whether the search has finished.
    pub fn is_done(&self) -> bool {
        self.frontier.is_empty()
    }

    /// Expands one frontier signature; returns whether work remains.
    pub fn step(&mut self) -> bool {
        let Some(trits) = self.frontier.pop_front() else {
            return false;
        };
        for child in expand(self.n, &trits) {
            if self.visited.insert(child.clone()) {
                self.frontier.push_back(child);
            }
        }
        !self.frontier.is_empty()
    }

    /// Runs to completion, expanding frontier batches in parallel.
    pub fn run(&mut self) {
        while !self.frontier.is_empty() {
            let batch: Vec<Vec<i8>> = self.frontier.drain(..).collect();
            let produced: Vec<Vec<Vec<i8>>> = batch
                .par_iter()
                .map(|trits| expand(self.n, trits))
                .collect();
            for children in produced {
                for child in children {
                    if self.visited.insert(child.clone()) {
                        self.frontier.push_back(child);
                    }
                }
            }
        }
    }

    /// Visited canonical signatures in sorted order.
    pub fn signatures(&self) -> impl Iterator<Item = StratumSignature> + '_ {
        self.visited
            .iter()
            .map(|trits| StratumSignature::new_unchecked(self.n, trits.clone()))
    }

    /// Writes an `STR1` checkpoint: magic, arity, visited and frontier
    /// counts, then each signature as a packed trit array (2 bits per trit,
    /// low bits first: `00` = `+`, `01` = `0`, `10` = `-`).
    pub fn save<W: Write>(&self, mut writer: W) -> Result<(), StrataError> {
        writer.write_all(STR1_MAGIC)?;
        writer.write_all(&[self.n as u8])?;
        writer.write_all(&(self.visited.len() as u64).to_le_bytes())?;
        writer.write_all(&(self.frontier.len() as u64).to_le_bytes())?;
        for trits in self.visited.iter().chain(self.frontier.iter()) {
            writer.write_all(&pack_trits(trits))?;
        }
        Ok(())
    }

    /// Restores a search from an `STR1` checkpoint.
    pub fn resume<R: Read>(mut reader: R) -> Result<Self, StrataError> {
        let mut header = [0u8; 21];
        reader.read_exact(&mut header).map_err(|_| {
            StrataError::BadCheckpoint {
                reason: "truncated header".into(),
            }
        })?;
        if &header[..4] != STR1_MAGIC {
            return Err(StrataError::BadCheckpoint {
                reason: "bad magic".into(),
            });
        }
        let n = header[4] as usize;
        if n < 1 || n > MAX_STRATA_N {
            return Err(StrataError::BadCheckpoint {
                reason: format!("arity {n} out of range"),
            });
        }
        let visited_count = u64::from_le_bytes(header[5..13].try_into().unwrap());
        let frontier_count = u64::from_le_bytes(header[13..21].try_into().unwrap());
        let walls = num_walls(n);
        let entry_bytes = walls.div_ceil(4);
        let read_entry = |reader: &mut R| -> Result<Vec<i8>, StrataError> {
            let mut buf = vec![0u8; entry_bytes];
            reader.read_exact(&mut buf).map_err(|_| {
                StrataError::BadCheckpoint {
                    reason: "truncated signature".into(),
                }
            })?;
            unpack_trits(&buf, walls)
        };
        let mut visited = BTreeSet::new();
        for _ in 0..visited_count {
            visited.insert(read_entry(&mut reader)?);
        }
        let mut frontier = VecDeque::new();
        for _ in 0..frontier_count {
            let entry = read_entry(&mut reader)?;
            if !visited.contains(&entry) {
                return Err(StrataError::BadCheckpoint {
                    reason: "frontier entry missing from visited set".into(),
                });
            }
            frontier.push_back(entry);
        }
        Ok(StrataBfs {
            n,
            visited,
            frontier,
        })
    }
}

fn pack_trits(trits: &[i8]) -> Vec<u8> {
    let mut bytes = vec![0u8; trits.len().div_ceil(4)];
    for (j, &t) in trits.iter().enumerate() {
        let code = trit_key(t);
        bytes[j / 4] |= code << (2 * (j % 4));
    }
    bytes
}

fn unpack_trits(bytes: &[u8], walls: usize) -> Result<Vec<i8>, StrataError> {
    let mut trits = Vec::with_capacity(walls);
    for j in 0..walls {
        let code = (bytes[j / 4] >> (2 * (j % 4))) & 0b11;
        if code > 2 {
            return Err(StrataError::BadCheckpoint {
                reason: "invalid trit code".into(),
            });
        }
        trits.push(key_trit(code));
    }
    Ok(trits)
}

/// Enumerates all strata meeting the open positive orthant up to coordinate
/// permutations, visiting canonical signatures in sorted order; returns the
/// count `k(n)`.
pub fn enumerate_strata_positive(
    n: usize,
    mut visit: impl FnMut(&StratumSignature),
) -> Result<u64, StrataError> {
    let mut bfs = StrataBfs::new(n)?;
    bfs.run();
    for sig in bfs.signatures() {
        visit(&sig);
    }
    Ok(bfs.visited_count())
}

/// The stratum count `k(n)` of the open positive orthant up to coordinate
/// permutations.
pub fn count_strata_positive(n: usize) -> Result<u64, StrataError> {
    enumerate_strata_positive(n, |_| {})
}

/// The counts `k(1), ..., k(n)`.
pub fn strata_counts_up_to(n: usize) -> Result<Vec<u64>, StrataError> {
    (1..=n).map(count_strata_positive).collect()
}

/// The totals `tk(1), ..., tk(n)` over the closed orthant, by the recursion
/// `tk(m) = k(m) + tk(m-1) - c(m-1)` with base `tk(1) = 1`.
///
/// The subtracted term removes the chamber classes of the next lower arity,
/// whose closures contribute the boundary strata already counted there; the
/// `m = 2` step subtracts 0 because the single arity-1 chamber contributes
/// no boundary stratum beyond the origin.
pub fn total_strata_up_to(n: usize) -> Result<Vec<u64>, StrataError> {
    if n < 1 || n > MAX_STRATA_N {
        return Err(StrataError::ArityOutOfRange {
            n,
            max: MAX_STRATA_N,
        });
    }
    let mut totals = vec![1u64];
    for m in 2..=n {
        let k_m = count_strata_positive(m)?;
        let c_prev = if m == 2 {
            0
        } else {
            genetic::census(m - 1, CensusMode::Chambers)?
        };
        totals.push(k_m + totals[m - 2] - c_prev);
    }
    Ok(totals)
}

/// The total stratum count `tk(n)` over the closed orthant.
pub fn total_strata(n: usize) -> Result<u64, StrataError> {
    Ok(*total_strata_up_to(n)?.last().expect("nonempty by range check"))
}
