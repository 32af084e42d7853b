//! Exact-arithmetic library for the dictionary between chambers and strata of
//! the tie hyperplane arrangement, self-dual (regular / threshold / 3-valued)
//! Boolean functions, genetic codes, and decisive weighted majority games.
//!
//! All real arithmetic is exact rational ([`Rational`]); no decision procedure
//! uses floating point. All group actions are right actions and all counts are
//! computed up to the stated symmetry group.
//!
//! Module map:
//! - [`group`]: the transformation group `T_n = (Z_2)^n ⋊ S_n` and its actions.
//! - [`boolfn`]: Boolean functions as truth tables; self-duality, monotonicity,
//!   regularity, dominance order, half-cube extension, canonical forms.
//! - [`threshold`]: weighted threshold and 3V-threshold functions, their
//!   transformation law, synthesis, and the exact linear feasibility engine.
//! - [`genetic`]: short sets, the hook order, genetic codes, virtual-code
//!   enumeration, realizability, and the code/function bijection.
//! - [`strata`]: strata of the tie arrangement in the positive orthant and the
//!   total-strata recursion.
//! - [`games`]: simple games, decisiveness, dummies, strategic equivalence,
//!   weighted-majority recognition.

pub mod boolfn;
pub mod games;
pub mod genetic;
pub mod group;
mod lp;
pub mod strata;
pub mod threshold;

/// Exact rational scalar used for every real quantity in the crate.
pub type Rational = num::BigRational;

/// Convenience constructor for small rational constants.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// Parses a comma-separated list of rationals such as `"1,1/2,-3"`.
pub fn parse_rationals(text: &str) -> Result<Vec<Rational>, num::rational::ParseRatioError> {
    text.split(',').map(|part| part.trim().parse()).collect()
}
