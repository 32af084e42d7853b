//! Boolean functions on `B_n` as explicit truth tables: the `T_n` action,
//! self-duality, monotonicity, the dominance order and regularity, self-dual
//! extension from the upper half-cube, and canonical forms for equivalence
//! classing.
//!
//! Truth-table convention: the bit at index `sum x_j 2^(n-j)` is `f(x_1..x_n)`,
//! so a [`crate::group::BoolVec`] word value is exactly its own table index.
//! Tables are packed most-significant-bit first, which makes lexicographic
//! table order equal to word order.

use crate::group::{BoolVec, GroupElement, GroupError};

/// Errors from constructing or combining truth tables.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoolFnError {
    #[error("explicit truth tables support n <= {max}, got {n}")]
    ArityTooLarge { n: usize, max: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("hex table for n = {n} must have {expected} digits, got {got}")]
    BadHexLength { n: usize, expected: usize, got: usize },
    #[error("invalid hex digit {digit:?}")]
    BadHexDigit { digit: char },
    #[error("hex table has nonzero padding bits past index 2^n")]
    PaddingNotZero,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Largest arity stored as an explicit table.
pub const MAX_TABLE_ARITY: usize = 16;

fn check_arity(n: usize) -> Result<(), BoolFnError> {
    if n > MAX_TABLE_ARITY {
        Err(BoolFnError::ArityTooLarge { n, max: MAX_TABLE_ARITY })
    } else {
        Ok(())
    }
}

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// A Boolean function `f: B_n -> B_1` as a `2^n`-bit truth table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolFunc {
    n: usize,
    table: Vec<u64>,
}

impl BoolFunc {
    /// The constant function.
    pub fn constant(n: usize, value: bool) -> Result<Self, BoolFnError> {
        check_arity(n)?;
        let bits = 1usize << n;
        let mut f = BoolFunc { n, table: vec![0; words_for(bits)] };
        if value {
            for idx in 0..bits as u64 {
                f.set(idx, true);
            }
        }
        Ok(f)
    }

    /// Builds a table by evaluating `rule` on every input.
    pub fn from_fn(n: usize, rule: impl Fn(BoolVec) -> bool) -> Result<Self, BoolFnError> {
        let mut f = BoolFunc::constant(n, false)?;
        for x in BoolVec::all(n) {
            f.set(x.word(), rule(x));
        }
        Ok(f)
    }

    /// The dictator function `f(x) = x_i`.
    pub fn dictator(n: usize, i: usize) -> Result<Self, BoolFnError> {
        if i == 0 || i > n {
            return Err(GroupError::ElementOutOfRange { element: i, n }.into());
        }
        Self::from_fn(n, |x| x.get(i))
    }

    /// The majority function on an odd number of inputs.
    ///
    /// # Panics
    /// Panics if `n` is even.
    pub fn majority(n: usize) -> Result<Self, BoolFnError> {
        assert!(n % 2 == 1, "majority needs an odd arity");
        Self::from_fn(n, |x| x.weight() as usize > n / 2)
    }

    /// The parity (xor) function.
    pub fn parity(n: usize) -> Result<Self, BoolFnError> {
        Self::from_fn(n, |x| x.weight() % 2 == 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of table entries, `2^n`.
    pub fn len(&self) -> u64 {
        1u64 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `f` at table index `idx` (the packed input word).
    pub fn get(&self, idx: u64) -> bool {
        debug_assert!(idx < self.len());
        let i = idx as usize;
        (self.table[i / 64] >> (63 - (i % 64))) & 1 == 1
    }

    /// Evaluates on a Boolean vector.
    pub fn eval(&self, x: BoolVec) -> bool {
        debug_assert_eq!(x.n(), self.n);
        self.get(x.word())
    }

    pub fn set(&mut self, idx: u64, value: bool) {
        debug_assert!(idx < self.len());
        let i = idx as usize;
        let bit = 1u64 << (63 - (i % 64));
        if value {
            self.table[i / 64] |= bit;
        } else {
            self.table[i / 64] &= !bit;
        }
    }

    /// The right action on functions, `f^g(x) = f(x^(g^-1))`.
    pub fn act_fn(&self, g: &GroupElement) -> Result<BoolFunc, BoolFnError> {
        if g.n() != self.n {
            return Err(BoolFnError::DimensionMismatch { left: g.n(), right: self.n });
        }
        let g_inv = g.inverse();
        let mut out = BoolFunc::constant(self.n, false)?;
        for x in BoolVec::all(self.n) {
            let y = g_inv.act_bool(x).expect("same n");
            out.set(x.word(), self.get(y.word()));
        }
        Ok(out)
    }

    /// `f(x bar) = 1 - f(x)` for all inputs.
    pub fn is_self_dual(&self) -> bool {
        let top = self.len() - 1;
        (0..self.len()).all(|idx| self.get(idx) != self.get(top - idx))
    }

    /// Value never drops when any variable flips 0 -> 1.
    pub fn is_monotone(&self) -> bool {
        for idx in 0..self.len() {
            if !self.get(idx) {
                continue;
            }
            for b in 0..self.n {
                if (idx >> b) & 1 == 0 && !self.get(idx | (1 << b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Monotone with respect to the dominance order: `f(x) <= f(y)` whenever
    /// `x` is dominated by `y`.
    ///
    /// Checked on the covering pairs of the order only (an adjacent `01 -> 10`
    /// swap, or setting a trailing 0); transitivity gives all pairs. The
    /// equivalence with the all-pairs definition is oracle-tested.
    pub fn is_regular(&self) -> bool {
        for idx in 0..self.len() {
            if !self.get(idx) {
                continue;
            }
            // f(x) = 1 must force f = 1 at every cover of x.
            for j in 1..self.n {
                let hi = 1u64 << (self.n - j);
                let lo = 1u64 << (self.n - j - 1);
                if idx & hi == 0 && idx & lo != 0 && !self.get(idx + lo) {
                    return false;
                }
            }
            if self.n >= 1 && idx & 1 == 0 && !self.get(idx + 1) {
                return false;
            }
        }
        true
    }

    /// The restriction of `f` to the upper half-cube `B_n^1 = {x : x_1 = 1}`.
    pub fn restrict(&self) -> HalfCubeFunc {
        assert!(self.n >= 1, "restriction needs n >= 1");
        let half = 1u64 << (self.n - 1);
        let mut h = HalfCubeFunc::constant(self.n, false);
        for j in 0..half {
            h.set(j, self.get(half + j));
        }
        h
    }

    /// Lexicographically minimal table over all `n!` variable permutations.
    /// Equal canonical forms iff the functions are in the same `S_n`-orbit.
    pub fn canonical_perm(&self) -> BoolFunc {
        use itertools::Itertools;
        let mut best: Option<BoolFunc> = None;
        for images in (1..=self.n).permutations(self.n) {
            let sigma = crate::group::Permutation::from_one_based(images).expect("valid");
            let g = GroupElement::from_permutation(sigma);
            let cand = self.act_fn(&g).expect("same n");
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.unwrap_or_else(|| self.clone())
    }

    /// Lexicographically minimal table over the full `T_n`-orbit
    /// (`2^n n!` elements). Equal canonical forms iff same `T_n`-orbit.
    pub fn canonical_tn(&self) -> BoolFunc {
        let mut best: Option<BoolFunc> = None;
        for g in crate::group::all_group_elements(self.n) {
            let cand = self.act_fn(&g).expect("same n");
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.unwrap_or_else(|| self.clone())
    }

    /// Lowercase hex serialization, most significant table bit (input index 0)
    /// first, padded at the low end to a whole number of digits.
    pub fn to_hex(&self) -> String {
        let bits = self.len();
        let digits = ((bits + 3) / 4) as usize;
        let mut out = String::with_capacity(digits);
        for k in 0..digits {
            let mut d = 0u8;
            for b in 0..4 {
                let idx = (4 * k + b) as u64;
                d <<= 1;
                if idx < bits && self.get(idx) {
                    d |= 1;
                }
            }
            out.push(char::from_digit(d as u32, 16).expect("nibble"));
        }
        out
    }

    /// Parses the [`to_hex`](Self::to_hex) format; the arity is carried
    /// separately.
    pub fn from_hex(n: usize, hex: &str) -> Result<Self, BoolFnError> {
        check_arity(n)?;
        let bits = 1u64 << n;
        let expected = ((bits + 3) / 4) as usize;
        if hex.len() != expected {
            return Err(BoolFnError::BadHexLength { n, expected, got: hex.len() });
        }
        let mut f = BoolFunc::constant(n, false)?;
        for (k, c) in hex.chars().enumerate() {
            let d = c.to_digit(16).ok_or(BoolFnError::BadHexDigit { digit: c })? as u8;
            for b in 0..4 {
                if (d >> (3 - b)) & 1 == 1 {
                    let idx = (4 * k + b) as u64;
                    if idx >= bits {
                        return Err(BoolFnError::PaddingNotZero);
                    }
                    f.set(idx, true);
                }
            }
        }
        Ok(f)
    }
}

/// A function on the upper half-cube `B_n^1 = {x : x_1 = 1}`, as a
/// `2^(n-1)`-bit table; bit `j` is the value at full table index
/// `2^(n-1) + j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfCubeFunc {
    n: usize,
    table: Vec<u64>,
}

impl HalfCubeFunc {
    pub fn constant(n: usize, value: bool) -> Self {
        assert!(n >= 1 && n <= MAX_TABLE_ARITY);
        let bits = 1usize << (n - 1);
        let mut h = HalfCubeFunc { n, table: vec![0; words_for(bits)] };
        if value {
            for j in 0..bits as u64 {
                h.set(j, true);
            }
        }
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of table entries, `2^(n-1)`.
    pub fn len(&self) -> u64 {
        1u64 << (self.n - 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, j: u64) -> bool {
        debug_assert!(j < self.len());
        let i = j as usize;
        (self.table[i / 64] >> (63 - (i % 64))) & 1 == 1
    }

    pub fn set(&mut self, j: u64, value: bool) {
        debug_assert!(j < self.len());
        let i = j as usize;
        let bit = 1u64 << (63 - (i % 64));
        if value {
            self.table[i / 64] |= bit;
        } else {
            self.table[i / 64] &= !bit;
        }
    }

    /// The unique self-dual extension: agrees with `h` on `B_n^1` and equals
    /// the complement of `h(x bar)` elsewhere.
    pub fn extend_self_dual(&self) -> BoolFunc {
        let half = self.len();
        let top = 2 * half - 1;
        let mut f = BoolFunc::constant(self.n, false).expect("arity checked");
        for j in 0..half {
            let value = self.get(j);
            f.set(half + j, value);
            f.set(top - (half + j), !value);
        }
        debug_assert!(f.is_self_dual());
        f
    }

    /// All `2^(2^(n-1))` half-cube tables, for exhaustive small-n scans.
    pub fn all(n: usize) -> impl Iterator<Item = HalfCubeFunc> {
        assert!(n >= 1 && (1usize << (n - 1)) <= 32, "scan limited to n <= 6");
        let bits = 1usize << (n - 1);
        (0u64..(1u64 << bits)).map(move |code| {
            let mut h = HalfCubeFunc::constant(n, false);
            for j in 0..bits as u64 {
                h.set(j, (code >> j) & 1 == 1);
            }
            h
        })
    }
}

/// The dominance (majorization) order: `x` is dominated by `y` iff every
/// prefix sum of `x` is at most the corresponding prefix sum of `y`.
pub fn dominance_leq(x: BoolVec, y: BoolVec) -> Result<bool, BoolFnError> {
    if x.n() != y.n() {
        return Err(BoolFnError::DimensionMismatch { left: x.n(), right: y.n() });
    }
    Ok(dominance_leq_words(x.word(), y.word(), x.n()))
}

/// Word-level dominance test; `x_1` is the most significant of the `n` bits.
pub(crate) fn dominance_leq_words(x: u64, y: u64, n: usize) -> bool {
    let mut px = 0u32;
    let mut py = 0u32;
    for i in (0..n).rev() {
        px += ((x >> i) & 1) as u32;
        py += ((y >> i) & 1) as u32;
        if px > py {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{all_group_elements, Negation, Permutation};

    fn bv(s: &str) -> BoolVec {
        s.parse().unwrap()
    }

    #[test]
    fn majority3_hex_is_17() {
        let f = BoolFunc::majority(3).unwrap();
        assert_eq!(f.to_hex(), "17");
        assert_eq!(BoolFunc::from_hex(3, "17").unwrap(), f);
    }

    #[test]
    fn hex_round_trip_all_arities() {
        for n in 1..=4usize {
            for code in 0u64..(1 << (1 << n)).min(4096) {
                let mut f = BoolFunc::constant(n, false).unwrap();
                for idx in 0..(1u64 << n) {
                    f.set(idx, (code >> idx) & 1 == 1);
                }
                let back = BoolFunc::from_hex(n, &f.to_hex()).unwrap();
                assert_eq!(back, f);
            }
        }
    }

    #[test]
    fn hex_rejects_bad_input() {
        assert!(matches!(
            BoolFunc::from_hex(3, "171"),
            Err(BoolFnError::BadHexLength { .. })
        ));
        assert!(matches!(
            BoolFunc::from_hex(3, "1g"),
            Err(BoolFnError::BadHexDigit { .. })
        ));
        // n = 1 uses one digit with two padding bits that must stay zero.
        assert!(matches!(BoolFunc::from_hex(1, "1"), Err(BoolFnError::PaddingNotZero)));
        assert_eq!(
            BoolFunc::from_hex(1, "4").unwrap(),
            BoolFunc::dictator(1, 1).unwrap()
        );
    }

    #[test]
    fn act_fn_identity_and_symmetry() {
        let f = BoolFunc::majority(3).unwrap();
        assert_eq!(f.act_fn(&GroupElement::identity(3)).unwrap(), f);
        for images in [[2, 1, 3], [3, 1, 2], [2, 3, 1]] {
            let g = GroupElement::from_permutation(
                Permutation::from_one_based(images.to_vec()).unwrap(),
            );
            assert_eq!(f.act_fn(&g).unwrap(), f);
        }
    }

    #[test]
    fn act_fn_moves_the_dictator() {
        let f = BoolFunc::dictator(2, 1).unwrap();
        let g = GroupElement::from_permutation(Permutation::transposition(2, 1, 2).unwrap());
        assert_eq!(f.act_fn(&g).unwrap(), BoolFunc::dictator(2, 2).unwrap());
    }

    #[test]
    fn act_fn_is_a_right_action_exhaustive_n3() {
        let f = BoolFunc::from_hex(3, "6a").unwrap();
        let all = all_group_elements(3);
        for g in &all {
            for h in &all {
                let gh = g.compose(h).unwrap();
                assert_eq!(
                    f.act_fn(g).unwrap().act_fn(h).unwrap(),
                    f.act_fn(&gh).unwrap()
                );
            }
        }
    }

    #[test]
    fn self_dual_examples() {
        assert!(BoolFunc::dictator(3, 1).unwrap().is_self_dual());
        assert!(!BoolFunc::constant(3, true).unwrap().is_self_dual());
        assert!(BoolFunc::majority(3).unwrap().is_self_dual());
    }

    #[test]
    fn self_duality_preserved_by_action_n4() {
        // Exhaustive over all self-dual tables at n = 4 against a spread of
        // group elements.
        let all = all_group_elements(4);
        for h in HalfCubeFunc::all(4) {
            let f = h.extend_self_dual();
            for g in all.iter().step_by(37) {
                assert!(f.act_fn(g).unwrap().is_self_dual());
            }
        }
    }

    #[test]
    fn self_dual_count_matches_half_cube_freedom() {
        for n in 1..=4usize {
            let mut count = 0u64;
            for code in 0u64..(1u64 << (1 << n)) {
                let mut f = BoolFunc::constant(n, false).unwrap();
                for idx in 0..(1u64 << n) {
                    f.set(idx, (code >> idx) & 1 == 1);
                }
                if f.is_self_dual() {
                    count += 1;
                }
            }
            assert_eq!(count, 1 << (1 << (n - 1)));
        }
    }

    #[test]
    fn monotone_examples() {
        assert!(BoolFunc::constant(3, false).unwrap().is_monotone());
        assert!(BoolFunc::constant(3, true).unwrap().is_monotone());
        assert!(!BoolFunc::parity(2).unwrap().is_monotone());
        assert!(BoolFunc::majority(5).unwrap().is_monotone());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(bv("101"), bv("110")).unwrap());
        assert!(!dominance_leq(bv("110"), bv("101")).unwrap());
        assert!(dominance_leq(bv("000"), bv("001")).unwrap());
        assert!(dominance_leq(bv("011"), bv("110")).unwrap());
        assert!(dominance_leq(bv("100"), bv("100")).unwrap());
        assert!(dominance_leq(bv("00"), bv("11")).unwrap());
        assert!(dominance_leq(bv("10"), bv("1")).is_err());
    }

    #[test]
    fn dominance_complement_reversal_n5() {
        for x in BoolVec::all(5) {
            for y in BoolVec::all(5) {
                assert_eq!(
                    dominance_leq(x, y).unwrap(),
                    dominance_leq(y.complement(), x.complement()).unwrap()
                );
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order_n5() {
        for x in BoolVec::all(5) {
            assert!(dominance_leq(x, x).unwrap());
            for y in BoolVec::all(5) {
                if dominance_leq(x, y).unwrap() && dominance_leq(y, x).unwrap() {
                    assert_eq!(x, y);
                }
                for z in BoolVec::all(5) {
                    if dominance_leq(x, y).unwrap() && dominance_leq(y, z).unwrap() {
                        assert!(dominance_leq(x, z).unwrap());
                    }
                }
            }
        }
    }

    fn is_regular_all_pairs(f: &BoolFunc) -> bool {
        for x in BoolVec::all(f.n()) {
            for y in BoolVec::all(f.n()) {
                if dominance_leq(x, y).unwrap() && f.eval(x) && !f.eval(y) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn regular_examples() {
        assert!(BoolFunc::majority(3).unwrap().is_regular());
        assert!(!BoolFunc::dictator(3, 2).unwrap().is_regular());
        assert!(BoolFunc::dictator(3, 1).unwrap().is_regular());
    }

    #[test]
    fn regular_covering_pairs_match_all_pairs_oracle() {
        // Exhaustive at n = 3, full scan; sampled at n = 5.
        for code in 0u64..256 {
            let mut f = BoolFunc::constant(3, false).unwrap();
            for idx in 0..8 {
                f.set(idx, (code >> idx) & 1 == 1);
            }
            assert_eq!(f.is_regular(), is_regular_all_pairs(&f));
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mut f = BoolFunc::constant(5, false).unwrap();
            for idx in 0..32 {
                f.set(idx, rng.gen_bool(0.5));
            }
            assert_eq!(f.is_regular(), is_regular_all_pairs(&f));
        }
    }

    #[test]
    fn extend_self_dual_examples() {
        let h = HalfCubeFunc::constant(3, true);
        assert_eq!(h.extend_self_dual(), BoolFunc::dictator(3, 1).unwrap());

        let mut h = HalfCubeFunc::constant(3, true);
        // Full index of 100 is 4; the half-cube offset is 4, so local index 0.
        h.set(0, false);
        assert_eq!(h.extend_self_dual(), BoolFunc::majority(3).unwrap());
    }

    #[test]
    fn restrict_round_trip_n4() {
        for h in HalfCubeFunc::all(4) {
            let f = h.extend_self_dual();
            assert!(f.is_self_dual());
            assert_eq!(f.restrict(), h);
        }
    }

    #[test]
    fn regular_and_self_dual_survive_round_trips() {
        for h in HalfCubeFunc::all(4) {
            let f = h.extend_self_dual();
            let again = f.restrict().extend_self_dual();
            assert_eq!(f.is_regular(), again.is_regular());
            assert!(again.is_self_dual());
        }
    }

    #[test]
    fn canonical_perm_examples() {
        let maj = BoolFunc::majority(3).unwrap();
        assert_eq!(maj.canonical_perm(), maj);
        assert_eq!(
            BoolFunc::dictator(3, 2).unwrap().canonical_perm(),
            BoolFunc::dictator(3, 1).unwrap().canonical_perm()
        );
    }

    #[test]
    fn canonical_tn_examples() {
        let d1 = BoolFunc::dictator(2, 1).unwrap();
        let neg = GroupElement::from_negation(Negation::from_bits(vec![1, 0]).unwrap());
        let negated = d1.act_fn(&neg).unwrap();
        assert_ne!(negated, d1);
        assert_eq!(negated.canonical_tn(), d1.canonical_tn());
        let c = d1.canonical_tn();
        assert_eq!(c.canonical_tn(), c);
    }

    #[test]
    fn canonical_forms_are_orbit_invariant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 2..=4usize {
            for _ in 0..20 {
                let mut f = BoolFunc::constant(n, false).unwrap();
                for idx in 0..(1u64 << n) {
                    f.set(idx, rng.gen_bool(0.5));
                }
                let all = all_group_elements(n);
                let g = &all[rng.gen_range(0..all.len())];
                assert_eq!(f.act_fn(g).unwrap().canonical_tn(), f.canonical_tn());
                let sigma_only = GroupElement::from_permutation(g.sigma().clone());
                assert_eq!(
                    f.act_fn(&sigma_only).unwrap().canonical_perm(),
                    f.canonical_perm()
                );
            }
        }
    }
}
