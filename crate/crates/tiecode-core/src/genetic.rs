//! Short sets, the hook order, genetic codes of generic length vectors,
//! virtual-code enumeration, realizability of codes as chambers, and the
//! bijection between codes and self-dual regular Boolean functions.
//!
//! Subsets of `{1..n}` appear in two equivalent encodings: [`SubsetOfN`] for
//! the public API and plain LSB bitmasks (bit `i-1` set iff `i` in the set)
//! for the enumeration inner loops. The bitmask of a gene equals the truth
//! table index of the corresponding `B_n^1` point under the sharp map, which
//! makes the code/function dictionary a direct reinterpretation of bits.

use crate::boolfn::{BoolFnError, BoolFunc, HalfCubeFunc};
use crate::group::{GroupError, SubsetOfN};
use crate::lp::{lp_feasible, Feasibility, LinearSystem};
use crate::{rat, Rational};
use num::{Signed, Zero};
use rayon::prelude::*;
use std::fmt;
use std::io::{self, Read, Seek, SeekFrom, Write};

/// Largest `n` accepted by the enumeration entry points; beyond this the
/// counts leave desk scale.
pub const MAX_ENUM_N: usize = 10;

/// Errors from genetic-code operations.
#[derive(Debug, thiserror::Error)]
pub enum GeneticError {
    #[error("n must be between 1 and {max}, got {n}")]
    ArityOutOfRange { n: usize, max: usize },
    #[error("gene {gene:?} does not fit inside {{1..{n}}} or misses n")]
    BadGene { gene: u64, n: usize },
    #[error("length vector must be sorted non-decreasingly with a_1 >= 0")]
    NotSorted,
    #[error("length vector is non-generic: {wall} ties its complement")]
    NonGeneric { wall: SubsetOfN },
    #[error("genes violate condition (a) or (b): not a virtual genetic code")]
    NotVirtual,
    #[error("function is not self-dual")]
    NotSelfDual,
    #[error("function is not regular")]
    NotRegular,
    #[error("cannot parse genetic code text {text:?}: {reason}")]
    BadCodeText { text: String, reason: &'static str },
    #[error("cache file is corrupt: {reason}")]
    BadCacheFile { reason: String },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    BoolFn(#[from] BoolFnError),
}

/// One gene: a subset of `{1..n}` containing `n`, stored as an LSB bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gene {
    mask: u64,
}

impl Gene {
    pub fn from_mask_lsb(n: usize, mask: u64) -> Result<Self, GeneticError> {
        let in_range = n >= 1 && n <= 62 && (mask >> n) == 0;
        if !in_range || mask >> (n - 1) & 1 == 0 {
            return Err(GeneticError::BadGene { gene: mask, n });
        }
        Ok(Gene { mask })
    }

    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self, GeneticError> {
        let subset = SubsetOfN::from_elements(n, elements)?;
        Gene::from_mask_lsb(n, subset.mask_lsb())
    }

    pub fn mask_lsb(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= 64 && self.mask >> (i - 1) & 1 == 1
    }

    /// Elements in decreasing order.
    pub fn elements_desc(&self) -> Vec<usize> {
        (1..=64 - self.mask.leading_zeros() as usize)
            .rev()
            .filter(|&i| self.contains(i))
            .collect()
    }

    pub fn to_subset(&self, n: usize) -> Result<SubsetOfN, GeneticError> {
        Ok(SubsetOfN::from_mask_lsb(n, self.mask)?)
    }
}

impl fmt::Display for Gene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elements = self.elements_desc();
        let text: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

/// A set of genes over a fixed `n`, stored sorted decreasingly by bitmask;
/// that order coincides with decreasing lexicographic order on the genes'
/// decreasing element lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneticCode {
    n: usize,
    genes: Vec<Gene>,
}

impl GeneticCode {
    pub fn empty(n: usize) -> Self {
        GeneticCode { n, genes: Vec::new() }
    }

    pub fn new(n: usize, mut genes: Vec<Gene>) -> Result<Self, GeneticError> {
        for gene in &genes {
            // Re-validate against this code's n.
            Gene::from_mask_lsb(n, gene.mask)?;
        }
        genes.sort_by(|a, b| b.mask.cmp(&a.mask));
        genes.dedup();
        Ok(GeneticCode { n, genes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn genes(&self) -> &[Gene] {
        &self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }

    /// Parses the text format `"6,3;6,2,1"`. The empty code is `"-"` and
    /// needs an explicit `n`; otherwise `n` defaults to the largest element.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self, GeneticError> {
        let bad = |reason| GeneticError::BadCodeText { text: text.to_string(), reason };
        let trimmed = text.trim();
        if trimmed == "-" {
            let n = n.ok_or_else(|| bad("the empty code needs an explicit n"))?;
            if n == 0 || n > 62 {
                return Err(GeneticError::ArityOutOfRange { n, max: 62 });
            }
            return Ok(GeneticCode::empty(n));
        }
        let mut gene_elements: Vec<Vec<usize>> = Vec::new();
        for gene_text in trimmed.split(';') {
            let mut elements = Vec::new();
            for part in gene_text.split(',') {
                let value: usize =
                    part.trim().parse().map_err(|_| bad("elements must be integers"))?;
                if value == 0 {
                    return Err(bad("elements are 1-based"));
                }
                elements.push(value);
            }
            gene_elements.push(elements);
        }
        let max = gene_elements.iter().flatten().copied().max().expect("nonempty");
        let n = n.unwrap_or(max);
        let genes = gene_elements
            .iter()
            .map(|e| Gene::from_elements(n, e))
            .collect::<Result<Vec<_>, _>>()?;
        GeneticCode::new(n, genes)
    }
}

impl fmt::Display for GeneticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.genes.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.genes.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", text.join(";"))
    }
}

/// The hook order on bitmask-encoded subsets: `a` hooks into `b` iff an
/// injective non-decreasing map `a -> b` with `phi(x) >= x` exists;
/// equivalently every suffix count satisfies
/// `#{x in a : x >= v} <= #{x in b : x >= v}`.
pub(crate) fn hook_leq_masks(a: u64, b: u64) -> bool {
    let joint = a | b;
    if joint == 0 {
        return true;
    }
    let mut count_a = 0u32;
    let mut count_b = 0u32;
    for v in (0..64 - joint.leading_zeros()).rev() {
        count_a += (a >> v & 1) as u32;
        count_b += (b >> v & 1) as u32;
        if count_a > count_b {
            return false;
        }
    }
    true
}

/// The hook order on subsets (see [`hook_leq_masks`] for the test used).
pub fn hook_leq(a: &SubsetOfN, b: &SubsetOfN) -> bool {
    hook_leq_masks(a.mask_lsb(), b.mask_lsb())
}

/// Which subsets of `{1..n}` weigh strictly less than their complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortSetFamily {
    n: usize,
    short: Vec<bool>,
}

impl ShortSetFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_short_mask(&self, mask: u64) -> bool {
        self.short[mask as usize]
    }

    pub fn is_short(&self, j: &SubsetOfN) -> bool {
        self.is_short_mask(j.mask_lsb())
    }

    /// Masks of the `hook`-maximal short sets; with the ordering constraints
    /// `0 <= a_1 <= ... <= a_n` these carry all the strict inequalities of
    /// the family (shortness is downward closed under the hook order).
    pub fn maximal_short_masks(&self) -> Vec<u64> {
        (0..self.short.len() as u64)
            .filter(|&mask| {
                self.short[mask as usize]
                    && up_covers(mask, self.n)
                        .into_iter()
                        .all(|cover| !self.short[cover as usize])
            })
            .collect()
    }
}

/// Immediate successors of `mask` in the hook order inside `{1..n}`:
/// adjoin the element 1, or bump one element `e` to the absent `e + 1`.
fn up_covers(mask: u64, n: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if mask & 1 == 0 {
        out.push(mask | 1);
    }
    for e in 1..n {
        if mask >> (e - 1) & 1 == 1 && mask >> e & 1 == 0 {
            out.push(mask ^ (1 << (e - 1)) ^ (1 << e));
        }
    }
    out
}

/// Classification outcome for a length vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShortFamilyOutcome {
    Generic(ShortSetFamily),
    /// Some subset ties its complement; the witness wall is reported by the
    /// side containing `n`.
    OnWall(SubsetOfN),
}

/// Classifies every subset of `{1..n}` as short or long by exact comparison,
/// or reports a tie witness.
pub fn short_family(a: &[Rational]) -> ShortFamilyOutcome {
    let n = a.len();
    let size = 1usize << n;
    // Subset sums by dynamic programming over the lowest set bit.
    let mut sums: Vec<Rational> = Vec::with_capacity(size);
    sums.push(Rational::zero());
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        let value = &sums[mask & (mask - 1)] + &a[low];
        sums.push(value);
    }
    let total = sums[size - 1].clone();
    let mut short = vec![false; size];
    for mask in 0..size {
        // sum(J) vs sum(complement), as 2 sum(J) vs total, exact.
        let twice = &sums[mask] + &sums[mask];
        match twice.cmp(&total) {
            std::cmp::Ordering::Less => short[mask] = true,
            std::cmp::Ordering::Greater => {}
            std::cmp::Ordering::Equal => {
                let side = if mask >> (n - 1) & 1 == 1 {
                    mask as u64
                } else {
                    (size - 1 - mask) as u64
                };
                let wall = SubsetOfN::from_mask_lsb(n, side).expect("mask fits n");
                return ShortFamilyOutcome::OnWall(wall);
            }
        }
    }
    ShortFamilyOutcome::Generic(ShortSetFamily { n, short })
}

fn require_sorted(a: &[Rational]) -> Result<(), GeneticError> {
    let sorted = !a.is_empty()
        && !a[0].is_negative()
        && a.windows(2).all(|pair| pair[0] <= pair[1]);
    if sorted { Ok(()) } else { Err(GeneticError::NotSorted) }
}

/// The genetic code of a generic sorted length vector: the hook-maximal
/// short subsets containing `n`.
pub fn genetic_code_of(a: &[Rational]) -> Result<GeneticCode, GeneticError> {
    require_sorted(a)?;
    let n = a.len();
    let family = match short_family(a) {
        ShortFamilyOutcome::Generic(family) => family,
        ShortFamilyOutcome::OnWall(wall) => {
            return Err(GeneticError::NonGeneric { wall });
        }
    };
    let with_n: Vec<u64> = (1u64 << (n - 1)..1u64 << n)
        .filter(|&mask| family.is_short_mask(mask))
        .collect();
    let genes: Vec<Gene> = with_n
        .iter()
        .filter(|&&mask| {
            with_n.iter().all(|&other| other == mask || !hook_leq_masks(mask, other))
        })
        .map(|&mask| Gene { mask })
        .collect();
    let code = GeneticCode::new(n, genes).expect("genes lie in {1..n} and contain n");
    debug_assert!(is_virtual_code(&code));
    Ok(code)
}

/// Conditions (a) and (b): the genes form a hook antichain, and no gene's
/// complement hooks into any gene (including itself).
pub fn is_virtual_code(c: &GeneticCode) -> bool {
    let full = (1u64 << c.n) - 1;
    c.genes.iter().all(|a| {
        c.genes.iter().all(|b| {
            (a == b || !hook_leq_masks(a.mask, b.mask))
                && !hook_leq_masks(full ^ a.mask, b.mask)
        })
    })
}

/// Ground set and conflict graph for the antichain enumeration. Candidate
/// genes are sorted by decreasing bitmask, which is a linear extension of
/// the reversed hook order, so depth-first extension by later candidates
/// visits each code exactly once in its sorted gene order.
struct CodeDfs {
    n: usize,
    masks: Vec<u64>,
    conflicts: Vec<Vec<u64>>,
    above: Vec<Vec<u64>>,
}

impl CodeDfs {
    fn new(n: usize) -> CodeDfs {
        let full = (1u64 << n) - 1;
        let masks: Vec<u64> = (1u64 << (n - 1)..1u64 << n)
            .rev()
            .filter(|&mask| !hook_leq_masks(full ^ mask, mask))
            .collect();
        let words = masks.len().div_ceil(64);
        let mut conflicts = vec![vec![0u64; words]; masks.len()];
        for i in 0..masks.len() {
            for j in 0..masks.len() {
                let (a, b) = (masks[i], masks[j]);
                let clash = (i != j && (hook_leq_masks(a, b) || hook_leq_masks(b, a)))
                    || hook_leq_masks(full ^ a, b)
                    || hook_leq_masks(full ^ b, a);
                if clash {
                    conflicts[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        // above[i] = candidate indices > i, to restrict children.
        let mut above = vec![vec![0u64; words]; masks.len()];
        for (i, row) in above.iter_mut().enumerate() {
            for j in i + 1..masks.len() {
                row[j / 64] |= 1 << (j % 64);
            }
        }
        CodeDfs { n, masks, conflicts, above }
    }

    fn initial_available(&self) -> Vec<u64> {
        let words = self.masks.len().div_ceil(64);
        let mut available = vec![0u64; words];
        for j in 0..self.masks.len() {
            available[j / 64] |= 1 << (j % 64);
        }
        available
    }

    fn child_available(&self, available: &[u64], i: usize) -> Vec<u64> {
        available
            .iter()
            .zip(&self.conflicts[i])
            .zip(&self.above[i])
            .map(|((&avail, &clash), &above)| avail & !clash & above)
            .collect()
    }

    /// Counts antichain extensions of the current node, the node included.
    fn count_subtree(&self, available: &[u64]) -> u64 {
        let mut count = 1;
        for (word_idx, &word) in available.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let i = word_idx * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                count += self.count_subtree(&self.child_available(available, i));
            }
        }
        count
    }

    /// Preorder walk; `stack` holds the chosen gene masks in decreasing order.
    fn visit_subtree(
        &self,
        available: &[u64],
        stack: &mut Vec<Gene>,
        visit: &mut impl FnMut(&GeneticCode),
    ) {
        let code = GeneticCode {
            n: self.n,
            genes: stack.clone(),
        };
        visit(&code);
        for (word_idx, &word) in available.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let i = word_idx * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                stack.push(Gene { mask: self.masks[i] });
                self.visit_subtree(&self.child_available(available, i), stack, visit);
                stack.pop();
            }
        }
    }
}

fn check_enum_range(n: usize, max: usize) -> Result<(), GeneticError> {
    if n == 0 || n > max {
        return Err(GeneticError::ArityOutOfRange { n, max });
    }
    Ok(())
}

/// Streams every virtual genetic code of type `n` exactly once, in the fixed
/// depth-first order (genes tried by decreasing bitmask, a code before its
/// supersets). Returns the number of codes visited, `v(n)`.
pub fn enumerate_virtual_codes(
    n: usize,
    mut visit: impl FnMut(&GeneticCode),
) -> Result<u64, GeneticError> {
    check_enum_range(n, MAX_ENUM_N)?;
    let dfs = CodeDfs::new(n);
    let mut count = 0;
    let mut stack = Vec::new();
    dfs.visit_subtree(&dfs.initial_available(), &mut stack, &mut |code| {
        count += 1;
        visit(code);
    });
    Ok(count)
}

/// Counts virtual codes without materializing them, splitting the work by
/// first gene.
pub fn count_virtual_codes(n: usize) -> Result<u64, GeneticError> {
    check_enum_range(n, MAX_ENUM_N)?;
    let dfs = CodeDfs::new(n);
    let available = dfs.initial_available();
    let branches: u64 = (0..dfs.masks.len())
        .into_par_iter()
        .map(|i| dfs.count_subtree(&dfs.child_available(&available, i)))
        .sum();
    Ok(1 + branches)
}

/// The shortness structure a virtual code induces on all subsets: a set
/// containing `n` is short iff it hooks into a gene; a set without `n` is
/// short iff its complement is long.
fn induced_short_family(c: &GeneticCode) -> ShortSetFamily {
    let n = c.n;
    let half = 1u64 << (n - 1);
    let mut short = vec![false; 1 << n];
    for mask in 0..1u64 << n {
        let with_n = if mask & half != 0 { mask } else { (1 << n) - 1 - mask };
        let hooks = c.genes.iter().any(|g| hook_leq_masks(with_n, g.mask));
        short[mask as usize] = if mask & half != 0 { hooks } else { !hooks };
    }
    ShortSetFamily { n, short }
}

/// The realizability system: ordering constraints plus one strict row per
/// hook-maximal short set. `positive` upgrades `a_1 >= 0` to `a_1 >= 1`,
/// selecting a strictly positive witness (possible for every realizable
/// code since chambers are open cones).
fn realize_system(c: &GeneticCode, positive: bool) -> LinearSystem {
    let n = c.n;
    let mut sys = LinearSystem::new(n);
    let mut first = vec![Rational::zero(); n];
    first[0] = rat(1, 1);
    if positive {
        sys.ge1(first);
    } else {
        sys.ge0(first);
    }
    for i in 0..n - 1 {
        let mut row = vec![Rational::zero(); n];
        row[i] = rat(-1, 1);
        row[i + 1] = rat(1, 1);
        sys.ge0(row);
    }
    for mask in induced_short_family(c).maximal_short_masks() {
        // Strictly short: sum over the complement minus sum over J >= 1.
        let row: Vec<Rational> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { rat(-1, 1) } else { rat(1, 1) })
            .collect();
        sys.ge1(row);
    }
    sys
}

fn realize_with(c: &GeneticCode, positive: bool) -> Option<Vec<Rational>> {
    match lp_feasible(&realize_system(c, positive)) {
        Feasibility::Feasible(witness) => {
            #[cfg(debug_assertions)]
            if c.n <= 6 {
                assert_eq!(genetic_code_of(&witness).expect("witness generic"), *c);
            }
            Some(witness)
        }
        Feasibility::Infeasible => None,
    }
}

/// Finds a generic sorted length vector whose genetic code is `c`, or `None`
/// when the virtual code is not realizable as a chamber.
pub fn realize_code(c: &GeneticCode) -> Result<Option<Vec<Rational>>, GeneticError> {
    if !is_virtual_code(c) {
        return Err(GeneticError::NotVirtual);
    }
    Ok(realize_with(c, false))
}

/// Streams every realizable code together with a strictly positive sorted
/// witness; returns the chamber count `c(n)`.
pub fn for_each_chamber(
    n: usize,
    mut visit: impl FnMut(&GeneticCode, &[Rational]),
) -> Result<u64, GeneticError> {
    check_enum_range(n, MAX_ENUM_N - 1)?;
    let mut count = 0;
    enumerate_virtual_codes(n, |code| {
        if let Some(witness) = realize_with(code, true) {
            count += 1;
            visit(code, &witness);
        }
    })?;
    Ok(count)
}

/// Census mode selector for [`census`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusMode {
    /// Count all virtual genetic codes, `v(n)`.
    Virtual,
    /// Count only LP-realizable codes (chambers up to `T_n`), `c(n)`.
    Chambers,
}

/// Streaming count of virtual codes or chambers; work splits by first gene.
pub fn census(n: usize, mode: CensusMode) -> Result<u64, GeneticError> {
    match mode {
        CensusMode::Virtual => count_virtual_codes(n),
        CensusMode::Chambers => {
            check_enum_range(n, MAX_ENUM_N - 1)?;
            let dfs = CodeDfs::new(n);
            let available = dfs.initial_available();
            // The empty code realizes as (0,...,0,1)-like vectors.
            let empty = 1u64;
            let branches: u64 = (0..dfs.masks.len())
                .into_par_iter()
                .map(|i| {
                    let mut stack = vec![Gene { mask: dfs.masks[i] }];
                    let mut count = 0;
                    dfs.visit_subtree(
                        &dfs.child_available(&available, i),
                        &mut stack,
                        &mut |code| {
                            if realize_with(code, false).is_some() {
                                count += 1;
                            }
                        },
                    );
                    count
                })
                .sum();
            Ok(empty + branches)
        }
    }
}

/// The self-dual regular function attached to a virtual code: zero on the
/// points of `B_n^1` dominated by a gene (under the sharp identification),
/// one elsewhere on `B_n^1`, extended self-dually.
pub fn code_to_function(c: &GeneticCode) -> Result<BoolFunc, GeneticError> {
    if !is_virtual_code(c) {
        return Err(GeneticError::NotVirtual);
    }
    let n = c.n;
    if n > crate::boolfn::MAX_TABLE_ARITY {
        return Err(GeneticError::BoolFn(BoolFnError::ArityTooLarge {
            n,
            max: crate::boolfn::MAX_TABLE_ARITY,
        }));
    }
    let half = 1u64 << (n - 1);
    let mut upper = HalfCubeFunc::constant(n, true);
    for j in 0..half {
        // Truth-table index and sharp bitmask coincide.
        let idx = half + j;
        if c.genes.iter().any(|g| hook_leq_masks(idx, g.mask)) {
            upper.set(j, false);
        }
    }
    let f = upper.extend_self_dual();
    debug_assert!(f.is_self_dual() && f.is_regular());
    Ok(f)
}

/// The genetic code of a self-dual regular function: the dominance-maximal
/// zeros on `B_n^1`, read as genes through the sharp identification.
pub fn function_to_code(f: &BoolFunc) -> Result<GeneticCode, GeneticError> {
    if !f.is_self_dual() {
        return Err(GeneticError::NotSelfDual);
    }
    if !f.is_regular() {
        return Err(GeneticError::NotRegular);
    }
    let n = f.n();
    let half = 1u64 << (n - 1);
    let mut genes = Vec::new();
    for idx in half..1u64 << n {
        if f.get(idx) {
            continue;
        }
        // Regularity makes the zero set dominance-downward closed, so
        // maximality is a cover check. Covers that bump an element stay
        // below n because bit n-1 is already set.
        let maximal = up_covers(idx, n).into_iter().all(|cover| f.get(cover));
        if maximal {
            genes.push(Gene { mask: idx });
        }
    }
    let code = GeneticCode::new(n, genes).expect("masks lie in B_n^1");
    debug_assert!(is_virtual_code(&code));
    Ok(code)
}

const VGC1_MAGIC: &[u8; 4] = b"VGC1";

/// Streaming writer for the `VGC1` cache format: magic, `n` (1 byte), code
/// count (u64 LE, patched on finish), then per code one gene-count byte and
/// the genes' LSB bitmasks as u64 LE.
pub struct Vgc1Writer<W: Write + Seek> {
    inner: W,
    count: u64,
}

impl<W: Write + Seek> Vgc1Writer<W> {
    pub fn new(mut inner: W, n: usize) -> Result<Self, GeneticError> {
        check_enum_range(n, MAX_ENUM_N)?;
        inner.write_all(VGC1_MAGIC)?;
        inner.write_all(&[n as u8])?;
        inner.write_all(&0u64.to_le_bytes())?;
        Ok(Vgc1Writer { inner, count: 0 })
    }

    pub fn push(&mut self, code: &GeneticCode) -> Result<(), GeneticError> {
        let genes = code.genes();
        assert!(genes.len() <= u8::MAX as usize, "gene count fits a byte");
        self.inner.write_all(&[genes.len() as u8])?;
        for gene in genes {
            self.inner.write_all(&gene.mask_lsb().to_le_bytes())?;
        }
        self.count += 1;
        Ok(())
    }

    /// Patches the header count and returns it.
    pub fn finish(mut self) -> Result<u64, GeneticError> {
        self.inner.seek(SeekFrom::Start(5))?;
        self.inner.write_all(&self.count.to_le_bytes())?;
        self.inner.flush()?;
        Ok(self.count)
    }
}

/// Reads a `VGC1` cache file back into codes.
pub fn read_vgc1<R: Read>(mut reader: R) -> Result<(usize, Vec<GeneticCode>), GeneticError> {
    let corrupt = |reason: &str| GeneticError::BadCacheFile { reason: reason.to_string() };
    let mut magic = [0u8; 4];
    reader.read_exact(&mut magic)?;
    if &magic != VGC1_MAGIC {
        return Err(corrupt("bad magic"));
    }
    let mut byte = [0u8; 1];
    reader.read_exact(&mut byte)?;
    let n = byte[0] as usize;
    check_enum_range(n, MAX_ENUM_N)?;
    let mut word = [0u8; 8];
    reader.read_exact(&mut word)?;
    let count = u64::from_le_bytes(word);
    let mut codes = Vec::with_capacity(count.min(1 << 24) as usize);
    for _ in 0..count {
        reader.read_exact(&mut byte)?;
        let mut genes = Vec::with_capacity(byte[0] as usize);
        for _ in 0..byte[0] {
            reader.read_exact(&mut word)?;
            let mask = u64::from_le_bytes(word);
            genes.push(
                Gene::from_mask_lsb(n, mask).map_err(|_| corrupt("gene outside range"))?,
            );
        }
        codes.push(GeneticCode::new(n, genes)?);
    }
    Ok((n, codes))
}
