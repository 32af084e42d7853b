//! Exact rational linear feasibility over homogeneous cones.
//!
//! Systems are built from rows `c . a = 0`, `c . a >= 0`, `c . a >= 1`. All
//! callers encode strict inequalities on open cones as the slack-1 form
//! `>= 1`, which is equivalence-preserving because a strictly feasible point
//! of a cone scales to slack 1.
//!
//! Feasibility is decided by exact phase-1 simplex (Bland's rule, no cycling)
//! on the Farkas alternative system rather than on the primal: the tableau
//! then has `num_vars + 1` rows instead of one row per constraint, which is
//! what keeps enumeration workloads with thousands of constraint rows cheap.
//! With multipliers `y >= 0` for the inequality rows (split `z` for the
//! equality rows), the alternative asks for
//! `S1^T y1 + S0^T y0 + E^T z = 0` with `sum y1 = 1`; it is solvable iff the
//! primal system is infeasible. When the alternative's phase-1 optimum is
//! positive, the phase-1 duals `pi` yield the primal witness
//! `a = -pi[..m] / pi[m]`.

use crate::Rational;
use num::{One, Signed, Zero};

/// Relation tag for one constraint row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `c . a = 0`
    Eq0,
    /// `c . a >= 0`
    Ge0,
    /// `c . a >= 1` (slack-1 encoding of a strict inequality on a cone)
    Ge1,
}

/// A homogeneous-cone feasibility system.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    num_vars: usize,
    rows: Vec<(Vec<Rational>, Relation)>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem { num_vars, rows: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation) {
        assert_eq!(coeffs.len(), self.num_vars, "row width must match num_vars");
        self.rows.push((coeffs, relation));
    }

    pub fn eq0(&mut self, coeffs: Vec<Rational>) {
        self.push(coeffs, Relation::Eq0);
    }

    pub fn ge0(&mut self, coeffs: Vec<Rational>) {
        self.push(coeffs, Relation::Ge0);
    }

    pub fn ge1(&mut self, coeffs: Vec<Rational>) {
        self.push(coeffs, Relation::Ge1);
    }

    pub fn rows(&self) -> impl Iterator<Item = (&[Rational], Relation)> {
        self.rows.iter().map(|(c, r)| (c.as_slice(), *r))
    }

    /// Exact check of a candidate point against every row.
    pub fn satisfied_by(&self, a: &[Rational]) -> bool {
        if a.len() != self.num_vars {
            return false;
        }
        self.rows.iter().all(|(coeffs, relation)| {
            let dot: Rational = coeffs.iter().zip(a).map(|(c, v)| c * v).sum();
            match relation {
                Relation::Eq0 => dot.is_zero(),
                Relation::Ge0 => !dot.is_negative(),
                Relation::Ge1 => dot >= Rational::one(),
            }
        })
    }
}

/// Outcome of [`lp_feasible`]; infeasibility is a value, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }
}

/// Decides feasibility of `sys` exactly; returns a rational witness on
/// success. Deterministic: fixed tableau construction and Bland's rule.
pub fn lp_feasible(sys: &LinearSystem) -> Feasibility {
    let m = sys.num_vars;
    let ge1_rows: Vec<&[Rational]> = sys
        .rows
        .iter()
        .filter(|(_, r)| *r == Relation::Ge1)
        .map(|(c, _)| c.as_slice())
        .collect();
    // Without >= 1 rows the origin satisfies everything.
    if ge1_rows.is_empty() {
        return Feasibility::Feasible(vec![Rational::zero(); m]);
    }
    let ge0_rows: Vec<&[Rational]> = sys
        .rows
        .iter()
        .filter(|(_, r)| *r == Relation::Ge0)
        .map(|(c, _)| c.as_slice())
        .collect();
    let eq_rows: Vec<&[Rational]> = sys
        .rows
        .iter()
        .filter(|(_, r)| *r == Relation::Eq0)
        .map(|(c, _)| c.as_slice())
        .collect();

    // Alternative-system tableau: m+1 equation rows; structural columns are
    // the multipliers y1 | y0 | z+ | z-, then one artificial per row, then
    // the right-hand side.
    let n_struct = ge1_rows.len() + ge0_rows.len() + 2 * eq_rows.len();
    let n_rows = m + 1;
    let n_cols = n_struct + n_rows + 1;
    let rhs_col = n_cols - 1;

    let mut tab: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n_cols]; n_rows];
    let mut col = 0;
    for row in &ge1_rows {
        for i in 0..m {
            tab[i][col] = row[i].clone();
        }
        tab[m][col] = Rational::one();
        col += 1;
    }
    for row in &ge0_rows {
        for i in 0..m {
            tab[i][col] = row[i].clone();
        }
        col += 1;
    }
    for row in &eq_rows {
        for i in 0..m {
            tab[i][col] = row[i].clone();
            tab[i][col + 1] = -row[i].clone();
        }
        col += 2;
    }
    debug_assert_eq!(col, n_struct);
    for i in 0..n_rows {
        tab[i][n_struct + i] = Rational::one();
    }
    tab[m][rhs_col] = Rational::one();

    // Phase-1 objective: minimize the artificial sum. Reduced costs start at
    // -(column sum over rows) for structural columns, 0 for artificials.
    let mut redcost: Vec<Rational> = vec![Rational::zero(); n_cols - 1];
    for (j, rc) in redcost.iter_mut().enumerate().take(n_struct) {
        let mut sum = Rational::zero();
        for row in tab.iter() {
            sum += &row[j];
        }
        *rc = -sum;
    }
    let mut objective = Rational::one();
    let mut basis: Vec<usize> = (n_struct..n_struct + n_rows).collect();

    loop {
        // Bland: entering column = lowest index with negative reduced cost.
        let Some(enter) = redcost.iter().position(|c| c.is_negative()) else {
            break;
        };
        // Ratio test; ties broken by the lowest basic-variable index (Bland).
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for r in 0..n_rows {
            if tab[r][enter].is_positive() {
                let ratio = &tab[r][rhs_col] / &tab[r][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && basis[r] < basis[leave.expect("set with best")])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let r = leave.expect("phase-1 objective is bounded below; a pivot row exists");
        // Normalize the pivot row, then eliminate the column elsewhere.
        let pivot = tab[r][enter].clone();
        for v in tab[r].iter_mut() {
            if !v.is_zero() {
                *v /= &pivot;
            }
        }
        let pivot_row = tab[r].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let factor = row[enter].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        let factor = redcost[enter].clone();
        objective += &factor * &pivot_row[rhs_col];
        for (v, p) in redcost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
        basis[r] = enter;
    }

    if objective.is_zero() {
        // The alternative system is solvable: Farkas certificate of primal
        // infeasibility. Verify the certificate exactly in debug builds.
        #[cfg(debug_assertions)]
        {
            let mut value = vec![Rational::zero(); n_struct];
            for (r, &b) in basis.iter().enumerate() {
                if b < n_struct {
                    value[b] = tab[r][rhs_col].clone();
                }
            }
            assert!(value.iter().all(|v| !v.is_negative()));
            let y1 = &value[..ge1_rows.len()];
            let y1_sum: Rational = y1.iter().cloned().sum();
            assert!(y1_sum.is_one(), "certificate must have sum y1 = 1");
            for i in 0..m {
                let mut sum = Rational::zero();
                for (s, y) in ge1_rows.iter().zip(y1) {
                    sum += &s[i] * y;
                }
                let y0 = &value[ge1_rows.len()..ge1_rows.len() + ge0_rows.len()];
                for (s, y) in ge0_rows.iter().zip(y0) {
                    sum += &s[i] * y;
                }
                let z = &value[ge1_rows.len() + ge0_rows.len()..];
                for (e, zpair) in eq_rows.iter().zip(z.chunks(2)) {
                    sum += &e[i] * &(zpair[0].clone() - zpair[1].clone());
                }
                assert!(sum.is_zero(), "certificate combination must vanish");
            }
        }
        return Feasibility::Infeasible;
    }

    // Positive optimum: the primal is feasible. Phase-1 duals from the
    // artificial columns give pi_i = 1 - redcost(artificial_i), and the
    // witness is a_j = -pi_j / pi_m.
    let pi: Vec<Rational> =
        (0..n_rows).map(|i| Rational::one() - &redcost[n_struct + i]).collect();
    let delta = pi[m].clone();
    debug_assert!(delta.is_positive());
    debug_assert_eq!(delta, objective);
    let witness: Vec<Rational> = (0..m).map(|j| -&pi[j] / &delta).collect();
    debug_assert!(
        sys.satisfied_by(&witness),
        "extracted witness must satisfy the system exactly"
    );
    Feasibility::Feasible(witness)
}
