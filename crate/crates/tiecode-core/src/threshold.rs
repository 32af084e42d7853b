//! Weighted threshold and 3V-threshold functions, their transformation law
//! under `T_n`, self-duality criteria around the half-perimeter, and threshold
//! synthesis by exact linear feasibility.
//!
//! The linear feasibility engine itself lives in a private module and is
//! re-exported here: see [`LinearSystem`] and [`lp_feasible`].

use crate::boolfn::{BoolFnError, BoolFunc, MAX_TABLE_ARITY};
use crate::group::{GroupElement, GroupError};
use crate::{rat, Rational};
use num::{BigInt, Integer, One, Zero};
use std::cmp::Ordering;

pub use crate::lp::{lp_feasible, Feasibility, LinearSystem, Relation};

/// A threshold pair `(w, t)`: weights `w_1..w_n` and threshold `t`, all exact
/// rationals with no sign restriction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedThreshold {
    w: Vec<Rational>,
    t: Rational,
}

impl WeightedThreshold {
    pub fn new(w: Vec<Rational>, t: Rational) -> Self {
        WeightedThreshold { w, t }
    }

    /// The pair `(w, half_perimeter(w))`.
    pub fn at_half_perimeter(w: Vec<Rational>) -> Self {
        let t = half_perimeter(&w);
        WeightedThreshold { w, t }
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.w
    }

    pub fn threshold(&self) -> &Rational {
        &self.t
    }

    /// The Boolean function `x -> [ <x,w> >= t ]`.
    pub fn to_bool_func(&self) -> Result<BoolFunc, BoolFnError> {
        BoolFunc::from_fn(self.n(), |x| dot(&self.w, x.word()) >= self.t)
    }

    /// The 3V function `x -> sign(<x,w> - t)`.
    pub fn to_3v_func(&self) -> Result<Sign3VFunc, BoolFnError> {
        Sign3VFunc::from_fn(self.n(), |idx| match dot(&self.w, idx).cmp(&self.t) {
            Ordering::Greater => 1,
            Ordering::Equal => 0,
            Ordering::Less => -1,
        })
    }

    /// Scales `(w, t)` by the least common denominator (then divides out the
    /// common integer factor), producing an equivalent integral pair.
    pub fn cleared_denominators(&self) -> WeightedThreshold {
        let mut lcm = BigInt::one();
        for v in self.w.iter().chain(std::iter::once(&self.t)) {
            lcm = lcm.lcm(v.denom());
        }
        let scale = Rational::from(lcm);
        let mut numers: Vec<BigInt> =
            self.w.iter().map(|v| (v * &scale).to_integer()).collect();
        numers.push((&self.t * &scale).to_integer());
        let mut common = BigInt::zero();
        for v in &numers {
            common = common.gcd(v);
        }
        if common > BigInt::one() {
            for v in numers.iter_mut() {
                *v /= &common;
            }
        }
        let t = Rational::from(numers.pop().expect("t was pushed"));
        WeightedThreshold { w: numers.into_iter().map(Rational::from).collect(), t }
    }
}

/// Half the total weight.
pub fn half_perimeter(w: &[Rational]) -> Rational {
    let total: Rational = w.iter().cloned().sum();
    total / rat(2, 1)
}

/// `<x, w>` where the bits of `x` are read off a truth-table index
/// (`x_j` is bit `n - j`, the same convention as [`BoolFunc`]).
fn dot(w: &[Rational], idx: u64) -> Rational {
    let n = w.len();
    let mut sum = Rational::zero();
    for (j, weight) in w.iter().enumerate() {
        if idx >> (n - 1 - j) & 1 == 1 {
            sum += weight;
        }
    }
    sum
}

/// A total map from `2^n` inputs to `{-1, 0, +1}`, indexed like [`BoolFunc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sign3VFunc {
    n: usize,
    values: Vec<i8>,
}

impl Sign3VFunc {
    pub fn from_fn(n: usize, rule: impl Fn(u64) -> i8) -> Result<Self, BoolFnError> {
        if n > MAX_TABLE_ARITY {
            return Err(BoolFnError::ArityTooLarge { n, max: MAX_TABLE_ARITY });
        }
        let values: Vec<i8> = (0..1u64 << n)
            .map(|idx| {
                let v = rule(idx);
                assert!((-1..=1).contains(&v), "3V values must lie in {{-1,0,1}}");
                v
            })
            .collect();
        Ok(Sign3VFunc { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, idx: u64) -> i8 {
        self.values[idx as usize]
    }

    /// `f(complement x) = -f(x)` for every input.
    pub fn is_self_dual(&self) -> bool {
        let top = self.values.len() - 1;
        self.values.iter().enumerate().all(|(i, &v)| self.values[top - i] == -v)
    }
}

/// The pair `(w', t')` with `to_bool_func(transform(g, wt)) =
/// act_fn(g, to_bool_func(wt))`: `w' = act_real(g, w)` and `t' = t - <nu, w>`.
pub fn transform(
    g: &GroupElement,
    wt: &WeightedThreshold,
) -> Result<WeightedThreshold, GroupError> {
    let w = g.act_real(&wt.w)?;
    let negated: Rational = (1..=wt.n())
        .filter(|&i| g.nu().bit(i) == 1)
        .map(|i| wt.w[i - 1].clone())
        .sum();
    Ok(WeightedThreshold::new(w, &wt.t - negated))
}

/// Which reading of threshold self-duality to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfDualMode {
    /// The induced Boolean function equals the one at the half-perimeter and
    /// no input ties the half-perimeter.
    TwoValued,
    /// The induced 3V function satisfies `f(complement x) = -f(x)`.
    ThreeValued,
}

/// Self-duality of `(w, t)` under the selected reading.
pub fn is_self_dual_threshold(
    wt: &WeightedThreshold,
    mode: SelfDualMode,
) -> Result<bool, BoolFnError> {
    let n = wt.n();
    if n > MAX_TABLE_ARITY {
        return Err(BoolFnError::ArityTooLarge { n, max: MAX_TABLE_ARITY });
    }
    match mode {
        SelfDualMode::TwoValued => {
            let half = half_perimeter(wt.weights());
            for idx in 0..1u64 << n {
                let d = dot(&wt.w, idx);
                if d == half || (d >= wt.t) != (d >= half) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        SelfDualMode::ThreeValued => Ok(wt.to_3v_func()?.is_self_dual()),
    }
}

/// Finds `(w, t)` with `to_bool_func((w, t)) = f`, or `None` if `f` is not a
/// threshold function. Exact: strict separation is encoded as slack 1, valid
/// because the solution set is invariant under positive scaling.
pub fn synthesize(f: &BoolFunc) -> Option<WeightedThreshold> {
    let n = f.n();
    let mut sys = LinearSystem::new(n + 1);
    for idx in 0..f.len() {
        let mut row: Vec<Rational> = (0..n)
            .map(|j| {
                if idx >> (n - 1 - j) & 1 == 1 { rat(1, 1) } else { Rational::zero() }
            })
            .collect();
        row.push(rat(-1, 1));
        if !f.get(idx) {
            for c in row.iter_mut() {
                *c = -c.clone();
            }
        }
        sys.ge1(row);
    }
    match lp_feasible(&sys) {
        Feasibility::Feasible(mut witness) => {
            let t = witness.pop().expect("system has n + 1 variables");
            let wt = WeightedThreshold::new(witness, t);
            debug_assert_eq!(wt.to_bool_func().expect("arity of f"), *f);
            Some(wt)
        }
        Feasibility::Infeasible => None,
    }
}

/// Like [`synthesize`] but with the threshold pinned to the half-perimeter,
/// so a success represents `f` as `(w, half_perimeter(w))`.
pub fn synthesize_at_half_perimeter(f: &BoolFunc) -> Option<WeightedThreshold> {
    let n = f.n();
    let mut sys = LinearSystem::new(n);
    for idx in 0..f.len() {
        // <x,w> - half = sum_j (x_j - 1/2) w_j.
        let mut row: Vec<Rational> = (0..n)
            .map(|j| {
                if idx >> (n - 1 - j) & 1 == 1 { rat(1, 2) } else { rat(-1, 2) }
            })
            .collect();
        if !f.get(idx) {
            for c in row.iter_mut() {
                *c = -c.clone();
            }
        }
        sys.ge1(row);
    }
    match lp_feasible(&sys) {
        Feasibility::Feasible(witness) => {
            let wt = WeightedThreshold::at_half_perimeter(witness);
            debug_assert_eq!(wt.to_bool_func().expect("arity of f"), *f);
            Some(wt)
        }
        Feasibility::Infeasible => None,
    }
}
