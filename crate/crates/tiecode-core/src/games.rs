//! Simple games as monotone Boolean functions.
//!
//! A game on `n` players is a monotone family of winning coalitions, stored
//! as the indicator [`BoolFunc`] over characteristic vectors. Decisiveness is
//! self-duality of that function, strategic equivalence is equality of
//! `S_n`-canonical forms (after padding the smaller game with dummies), and
//! weighted-majority recognition synthesizes a weight vector at the
//! half-perimeter threshold by exact linear feasibility.

use thiserror::Error;

use crate::boolfn::{BoolFnError, BoolFunc};
use crate::group::SubsetOfN;
use crate::threshold::synthesize_at_half_perimeter;
use crate::{rat, Rational};

/// Errors from game construction and analysis.
#[derive(Debug, Error)]
pub enum GameError {
    /// Lengths used as game weights must be nonnegative.
    #[error("length {index} is negative")]
    NegativeLength { index: usize },
    /// The winning family must be closed under supersets.
    #[error("winning family is not monotone")]
    NotMonotone,
    /// The operation requires a decisive game.
    #[error("game is not decisive")]
    NotDecisive,
    /// Extending a game never removes players.
    #[error("cannot extend a {have}-player game to {want} players")]
    BadExtension { have: usize, want: usize },
    #[error(transparent)]
    Bool(#[from] BoolFnError),
}

/// A simple game: the monotone indicator of its winning coalitions.
///
/// Player `i` (1-based) corresponds to variable `x_i` of the table, so the
/// coalition `S` is the input whose characteristic vector has `x_i = 1`
/// exactly for `i` in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    winning: BoolFunc,
}

impl Game {
    /// Wraps a winning-family indicator, validating monotonicity.
    pub fn new(winning: BoolFunc) -> Result<Self, GameError> {
        if !winning.is_monotone() {
            return Err(GameError::NotMonotone);
        }
        Ok(Game { winning })
    }

    pub fn n(&self) -> usize {
        self.winning.n()
    }

    pub fn winning(&self) -> &BoolFunc {
        &self.winning
    }

    /// Whether the coalition with the given table index wins.
    pub fn wins(&self, coalition: u64) -> bool {
        self.winning.get(coalition)
    }
}

/// The table index of the coalition containing exactly the players in `s`,
/// for use with [`Game::wins`].
pub fn coalition_index(n: usize, s: &SubsetOfN) -> u64 {
    s.elements().iter().fold(0, |acc, &i| acc | 1 << (n - i))
}

/// The game `G_a` whose winning coalitions are the `a`-long subsets
/// (strictly heavier than their complement). Requires `a_i >= 0`.
pub fn game_from_lengths(a: &[Rational]) -> Result<Game, GameError> {
    if let Some(index) = a.iter().position(|v| v < &Rational::from_integer(0.into())) {
        return Err(GameError::NegativeLength { index: index + 1 });
    }
    let n = a.len();
    let total: Rational = a.iter().cloned().sum();
    let winning = BoolFunc::from_fn(n, |x| {
        let mut sum = Rational::from_integer(0.into());
        for (j, weight) in a.iter().enumerate() {
            if x.word() >> (n - 1 - j) & 1 == 1 {
                sum += weight;
            }
        }
        &sum + &sum > total
    })?;
    // Supersets only gain nonnegative weight, so the family is monotone.
    Ok(Game { winning })
}

/// Whether exactly one of each complementary coalition pair wins.
pub fn is_decisive(g: &Game) -> bool {
    g.winning.is_self_dual()
}

/// The players that are never pivotal: `i` with
/// `winning(S) = winning(S + i)` for every coalition `S` not containing `i`.
pub fn dummies(g: &Game) -> SubsetOfN {
    let n = g.n();
    let idle: Vec<usize> = (1..=n)
        .filter(|&i| {
            let bit = 1u64 << (n - i);
            (0..g.winning.len())
                .filter(|idx| idx & bit == 0)
                .all(|idx| g.winning.get(idx) == g.winning.get(idx | bit))
        })
        .collect();
    SubsetOfN::from_elements(n, &idle).expect("players are within 1..=n")
}

/// Extends the game to `m >= n` players; the added players are voteless
/// (a coalition wins exactly when its restriction to the old players wins).
pub fn add_dummies(g: &Game, m: usize) -> Result<Game, GameError> {
    let n = g.n();
    if m < n {
        return Err(GameError::BadExtension { have: n, want: m });
    }
    if m == n {
        return Ok(g.clone());
    }
    // Old players occupy the high bits of the new index.
    let winning = BoolFunc::from_fn(m, |x| g.winning.get(x.word() >> (m - n)))?;
    Ok(Game { winning })
}

/// Whether some bijection of players identifies the winning families. Games
/// of different sizes are compared after padding the smaller with dummies.
pub fn strategically_equivalent(g1: &Game, g2: &Game) -> Result<bool, GameError> {
    let m = g1.n().max(g2.n());
    let a = add_dummies(g1, m)?;
    let b = add_dummies(g2, m)?;
    Ok(a.winning.canonical_perm() == b.winning.canonical_perm())
}

/// Recognizes weighted majority games: searches for `w` with the winning
/// family equal to the coalitions heavier than the half-perimeter of `w`,
/// then rewrites negative weights to `0` (such players are dummies, so the
/// winning family is unchanged; this is re-verified). Returns the weights,
/// or `None` when the game is not a weighted majority game.
///
/// Requires a decisive game: ties are impossible in a decisive
/// half-perimeter representation, so the strict-margin search is exact.
pub fn is_weighted_majority(g: &Game) -> Result<Option<Vec<Rational>>, GameError> {
    if !is_decisive(g) {
        return Err(GameError::NotDecisive);
    }
    let Some(wt) = synthesize_at_half_perimeter(&g.winning) else {
        return Ok(None);
    };
    let zero = rat(0, 1);
    let clamped: Vec<Rational> = wt
        .weights()
        .iter()
        .map(|w| if *w < zero { zero.clone() } else { w.clone() })
        .collect();
    let check = game_from_lengths(&clamped)?;
    if check.winning == g.winning {
        Ok(Some(clamped))
    } else {
        // Unreachable for decisive games; keep the unclamped certificate.
        debug_assert!(false, "clamping changed a decisive winning family");
        Ok(Some(wt.weights().to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genetic::{self, ShortFamilyOutcome};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rats(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| rat(v, 1)).collect()
    }

    fn game(values: &[i64]) -> Game {
        game_from_lengths(&rats(values)).unwrap()
    }

    #[test]
    fn lengths_build_expected_games() {
        assert_eq!(game(&[1, 1, 1]).winning, BoolFunc::majority(3).unwrap());
        assert_eq!(
            game(&[1, 1, 1, 5]).winning,
            BoolFunc::dictator(4, 4).unwrap()
        );
        assert_eq!(game(&[0, 0, 1]).winning, BoolFunc::dictator(3, 3).unwrap());
        assert!(matches!(
            game_from_lengths(&[rat(1, 1), rat(-1, 2)]),
            Err(GameError::NegativeLength { index: 2 })
        ));
    }

    #[test]
    fn ties_lose_under_the_strict_long_rule() {
        let g = game(&[1, 1, 2]);
        let third = coalition_index(3, &SubsetOfN::from_elements(3, &[3]).unwrap());
        let pair = coalition_index(3, &SubsetOfN::from_elements(3, &[1, 2]).unwrap());
        assert!(!g.wins(third));
        assert!(!g.wins(pair));
        assert!(!is_decisive(&g));
    }

    #[test]
    fn decisiveness_examples() {
        assert!(is_decisive(&game(&[1, 1, 1])));
        assert!(is_decisive(&game(&[0, 0, 1])));
        assert!(!is_decisive(&game(&[1, 1, 2])));
    }

    #[test]
    fn decisive_exactly_for_generic_lengths() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let a: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(0..=9), 1)).collect();
            let generic = matches!(genetic::short_family(&a), ShortFamilyOutcome::Generic(_));
            let g = game_from_lengths(&a).unwrap();
            assert_eq!(is_decisive(&g), generic, "a = {a:?}");
        }
    }

    #[test]
    fn dummy_players_by_pivotality() {
        assert_eq!(dummies(&game(&[1, 1, 1, 5])).elements(), vec![1, 2, 3]);
        assert!(dummies(&game(&[1, 1, 1])).elements().is_empty());
        assert_eq!(dummies(&game(&[0, 0, 1])).elements(), vec![1, 2]);
    }

    #[test]
    fn added_players_are_dummies() {
        let g = game(&[1, 1, 1]);
        let extended = add_dummies(&g, 5).unwrap();
        assert_eq!(dummies(&extended).elements(), vec![4, 5]);
        assert_eq!(extended, game(&[1, 1, 1, 0, 0]));
        assert!(matches!(
            add_dummies(&extended, 3),
            Err(GameError::BadExtension { have: 5, want: 3 })
        ));
        assert_eq!(add_dummies(&g, 3).unwrap(), g);
    }

    #[test]
    fn strategic_equivalence_examples() {
        assert!(strategically_equivalent(&game(&[1, 2, 2]), &game(&[1, 1, 1])).unwrap());
        let d1 = Game::new(BoolFunc::dictator(3, 1).unwrap()).unwrap();
        let d2 = Game::new(BoolFunc::dictator(3, 2).unwrap()).unwrap();
        assert!(strategically_equivalent(&d1, &d2).unwrap());
        assert!(!strategically_equivalent(&game(&[1, 1, 1]), &d1).unwrap());
        // Cross-arity comparison pads with dummies.
        assert!(strategically_equivalent(&game(&[1, 1, 1]), &game(&[1, 1, 1, 0])).unwrap());
        assert!(!strategically_equivalent(&game(&[1, 1, 1]), &game(&[1, 1, 1, 1, 1])).unwrap());
    }

    #[test]
    fn weighted_majority_round_trips() {
        for lengths in [&[1i64, 1, 1][..], &[0, 0, 1], &[1, 1, 1, 5], &[1, 2, 3, 4, 4]] {
            let g = game_from_lengths(&rats(lengths)).unwrap();
            if !is_decisive(&g) {
                continue;
            }
            let w = is_weighted_majority(&g).unwrap().expect("weighted by construction");
            let back = game_from_lengths(&w).unwrap();
            assert_eq!(back, g, "lengths = {lengths:?}");
            // Zero weights are idle players.
            let zero = rat(0, 1);
            let zeros: Vec<usize> = w
                .iter()
                .enumerate()
                .filter(|(_, v)| **v == zero)
                .map(|(j, _)| j + 1)
                .collect();
            let idle = dummies(&g).elements();
            assert!(zeros.iter().all(|i| idle.contains(i)));
        }
    }

    #[test]
    fn weights_come_back_clamped() {
        let g = add_dummies(&game(&[1, 1, 1]), 4).unwrap();
        let w = is_weighted_majority(&g).unwrap().expect("majority plus a dummy");
        let zero = rat(0, 1);
        assert!(w.iter().all(|v| *v >= zero));
        assert_eq!(game_from_lengths(&w).unwrap(), g);
    }

    #[test]
    fn non_decisive_games_are_rejected() {
        assert!(matches!(
            is_weighted_majority(&game(&[1, 1, 2])),
            Err(GameError::NotDecisive)
        ));
    }

    #[test]
    fn regular_non_threshold_game_is_not_weighted() {
        // The smallest decisive game that is not a weighted majority game:
        // its winning indicator is regular but not a threshold function.
        let code = genetic::GeneticCode::parse("9,6,4,2", Some(9)).unwrap();
        let f = genetic::code_to_function(&code).unwrap();
        assert!(f.is_regular());
        let g = Game::new(f).unwrap();
        assert!(is_decisive(&g));
        assert_eq!(is_weighted_majority(&g).unwrap(), None);
    }

    #[test]
    fn chambers_classify_small_games() {
        // Chamber representatives induce pairwise inequivalent decisive
        // games, and a brute-force sweep of small integer weights finds no
        // decisive weighted majority game outside those classes.
        for n in 1..=3usize {
            let mut reps: Vec<Game> = Vec::new();
            genetic::for_each_chamber(n, |_, witness| {
                reps.push(game_from_lengths(witness).unwrap());
            })
            .unwrap();
            for g in &reps {
                assert!(is_decisive(g));
            }
            for i in 0..reps.len() {
                for j in 0..i {
                    assert!(!strategically_equivalent(&reps[i], &reps[j]).unwrap());
                }
            }
            let mut weights = vec![0i64; n];
            loop {
                let a = rats(&weights);
                let g = game_from_lengths(&a).unwrap();
                if is_decisive(&g) {
                    let matches = reps
                        .iter()
                        .filter(|r| strategically_equivalent(r, &g).unwrap())
                        .count();
                    assert_eq!(matches, 1, "weights = {weights:?}");
                }
                let mut k = 0;
                while k < n && weights[k] == 4 {
                    weights[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                weights[k] += 1;
            }
        }
    }
}
