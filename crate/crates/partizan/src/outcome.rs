//! Exact perfect-play outcome solvers for both conventions, and the
//! normal-play order oracle.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashSet;

use crate::algebra::{conjugate, sum};
use crate::arena::{ordered_key, Arena, FormId};
use crate::error::EngineError;

/// Which player moves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left = 0,
    Right = 1,
}

impl Side {
    pub fn opponent(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "Left",
            Side::Right => "Right",
        })
    }
}

/// Ending convention. It only affects the player who cannot move: under
/// misère they win, under normal play they lose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    Normal = 0,
    Misere = 1,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Normal => "normal",
            Convention::Misere => "misere",
        })
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "normal" => Ok(Convention::Normal),
            "misere" => Ok(Convention::Misere),
            _ => Err(format!(
                "unknown convention `{s}` (expected `normal` or `misere`)"
            )),
        }
    }
}

/// Winner of a game with a fixed first player, ordered with `L > R` so
/// that "better for Left" is literally greater.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartialOutcome {
    R,
    L,
}

impl fmt::Display for PartialOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartialOutcome::R => "R",
            PartialOutcome::L => "L",
        })
    }
}

/// Full outcome class, assembled from the two partial outcomes:
/// `(L,R) → N`, `(R,L) → P`, `(L,L) → L`, `(R,R) → R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeClass {
    /// Left wins regardless of who starts.
    Left,
    /// Right wins regardless of who starts.
    Right,
    /// The player who moves first wins.
    Next,
    /// The player who moves second wins.
    Previous,
}

impl OutcomeClass {
    pub fn from_partials(left_starts: PartialOutcome, right_starts: PartialOutcome) -> Self {
        use PartialOutcome::{L, R};
        match (left_starts, right_starts) {
            (L, R) => OutcomeClass::Next,
            (R, L) => OutcomeClass::Previous,
            (L, L) => OutcomeClass::Left,
            (R, R) => OutcomeClass::Right,
        }
    }

    /// The outcome of the conjugate form: the sides swap, `N` and `P`
    /// stay put.
    pub fn mirror(self) -> Self {
        match self {
            OutcomeClass::Left => OutcomeClass::Right,
            OutcomeClass::Right => OutcomeClass::Left,
            other => other,
        }
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeClass::Left => "L",
            OutcomeClass::Right => "R",
            OutcomeClass::Next => "N",
            OutcomeClass::Previous => "P",
        })
    }
}

// The per-form memo byte holds four 2-bit slots, one per
// (convention, side) pair: 0 unset, 1 R, 2 L.
fn slot_shift(conv: Convention, side: Side) -> u32 {
    ((conv as u32) * 2 + side as u32) * 2
}

fn slot_read(byte: u8, conv: Convention, side: Side) -> Option<PartialOutcome> {
    match (byte >> slot_shift(conv, side)) & 0b11 {
        0 => None,
        1 => Some(PartialOutcome::R),
        _ => Some(PartialOutcome::L),
    }
}

fn slot_value(o: PartialOutcome) -> u8 {
    match o {
        PartialOutcome::R => 1,
        PartialOutcome::L => 2,
    }
}

/// Who wins `g` when `side` moves first, playing perfectly.
pub fn outcome_partial(
    arena: &mut Arena,
    g: FormId,
    side: Side,
    conv: Convention,
) -> Result<PartialOutcome, EngineError> {
    arena.check(g)?;
    solve(arena, g, conv);
    Ok(slot_read(arena.outcome_memo[g.index()], conv, side).expect("solve fills both slots"))
}

/// The full outcome class of `g`.
pub fn outcome(
    arena: &mut Arena,
    g: FormId,
    conv: Convention,
) -> Result<OutcomeClass, EngineError> {
    let left_starts = outcome_partial(arena, g, Side::Left, conv)?;
    let right_starts = outcome_partial(arena, g, Side::Right, conv)?;
    Ok(OutcomeClass::from_partials(left_starts, right_starts))
}

/// Solves every unsolved follower of `g` for `conv`, bottom-up. Parents
/// always have larger ids than their options, so ascending id order is a
/// valid evaluation order.
fn solve(arena: &mut Arena, g: FormId, conv: Convention) {
    if arena.outcome_memo.len() < arena.len() {
        arena.outcome_memo.resize(arena.len(), 0);
    }
    if slot_read(arena.outcome_memo[g.index()], conv, Side::Left).is_some() {
        return;
    }
    let mut pending: Vec<FormId> = Vec::new();
    let mut seen = FxHashSet::default();
    let mut stack = vec![g];
    while let Some(id) = stack.pop() {
        if !seen.insert(id) {
            continue;
        }
        if slot_read(arena.outcome_memo[id.index()], conv, Side::Left).is_some() {
            continue;
        }
        pending.push(id);
        stack.extend_from_slice(arena.left(id));
        stack.extend_from_slice(arena.right(id));
    }
    pending.sort_unstable();
    for id in pending {
        let when_left_starts = {
            let opts = arena.left(id);
            if opts.is_empty() {
                match conv {
                    Convention::Misere => PartialOutcome::L,
                    Convention::Normal => PartialOutcome::R,
                }
            } else if opts.iter().any(|&c| {
                slot_read(arena.outcome_memo[c.index()], conv, Side::Right)
                    == Some(PartialOutcome::L)
            }) {
                PartialOutcome::L
            } else {
                PartialOutcome::R
            }
        };
        let when_right_starts = {
            let opts = arena.right(id);
            if opts.is_empty() {
                match conv {
                    Convention::Misere => PartialOutcome::R,
                    Convention::Normal => PartialOutcome::L,
                }
            } else if opts.iter().any(|&c| {
                slot_read(arena.outcome_memo[c.index()], conv, Side::Left)
                    == Some(PartialOutcome::R)
            }) {
                PartialOutcome::R
            } else {
                PartialOutcome::L
            }
        };
        arena.outcome_memo[id.index()] |= slot_value(when_left_starts)
            << slot_shift(conv, Side::Left)
            | slot_value(when_right_starts) << slot_shift(conv, Side::Right);
    }
}

/// Normal-play order: `g >= h` iff Left wins `g - h` moving second under
/// the normal convention. Memoized on the ordered pair.
pub fn geq_np(arena: &mut Arena, g: FormId, h: FormId) -> Result<bool, EngineError> {
    arena.check(g)?;
    arena.check(h)?;
    let key = ordered_key(g, h);
    if let Some(&v) = arena.geq_np_memo.get(&key) {
        return Ok(v);
    }
    let minus_h = conjugate(arena, h)?;
    let difference = sum(arena, g, minus_h)?;
    let v =
        outcome_partial(arena, difference, Side::Right, Convention::Normal)? == PartialOutcome::L;
    arena.geq_np_memo.insert(key, v);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{hat, moves, ostar};

    #[test]
    fn atom_base_cases_differ_by_convention() {
        let mut a = Arena::new();
        let zero = a.zero();
        assert_eq!(
            outcome_partial(&mut a, zero, Side::Left, Convention::Misere).unwrap(),
            PartialOutcome::L
        );
        assert_eq!(
            outcome_partial(&mut a, zero, Side::Left, Convention::Normal).unwrap(),
            PartialOutcome::R
        );
        assert_eq!(
            outcome(&mut a, zero, Convention::Misere).unwrap(),
            OutcomeClass::Next
        );
        assert_eq!(
            outcome(&mut a, zero, Convention::Normal).unwrap(),
            OutcomeClass::Previous
        );
    }

    #[test]
    fn star_is_a_first_player_loss_in_misere() {
        let mut a = Arena::new();
        let star = ostar(&mut a, 0).unwrap();
        assert_eq!(
            outcome_partial(&mut a, star, Side::Left, Convention::Misere).unwrap(),
            PartialOutcome::R
        );
        assert_eq!(
            outcome(&mut a, star, Convention::Misere).unwrap(),
            OutcomeClass::Previous
        );
        assert_eq!(
            outcome(&mut a, star, Convention::Normal).unwrap(),
            OutcomeClass::Next
        );
    }

    #[test]
    fn conjugation_mirrors_the_outcome() {
        let mut a = Arena::new();
        let forms = [
            a.zero(),
            moves(&mut a, 2).unwrap(),
            hat(&mut a, 2).unwrap(),
            ostar(&mut a, 2).unwrap(),
        ];
        for conv in [Convention::Misere, Convention::Normal] {
            for g in forms {
                let c = crate::algebra::conjugate(&mut a, g).unwrap();
                let og = outcome(&mut a, g, conv).unwrap();
                let oc = outcome(&mut a, c, conv).unwrap();
                assert_eq!(oc, og.mirror());
            }
        }
    }

    #[test]
    fn integer_order_under_normal_play() {
        let mut a = Arena::new();
        let zero = a.zero();
        let one = moves(&mut a, 1).unwrap();
        assert!(geq_np(&mut a, one, zero).unwrap());
        assert!(!geq_np(&mut a, zero, one).unwrap());
        assert!(geq_np(&mut a, zero, zero).unwrap());
    }

    #[test]
    fn hat_two_equals_two_in_normal_play() {
        let mut a = Arena::new();
        let h2 = hat(&mut a, 2).unwrap();
        let two = moves(&mut a, 2).unwrap();
        assert!(geq_np(&mut a, h2, two).unwrap());
        assert!(geq_np(&mut a, two, h2).unwrap());
    }

    #[test]
    fn the_first_star_tower_is_positive_but_not_an_integer() {
        let mut a = Arena::new();
        let zero = a.zero();
        let up = ostar(&mut a, 1).unwrap();
        assert!(geq_np(&mut a, up, zero).unwrap());
        assert!(!geq_np(&mut a, zero, up).unwrap());
    }

    #[test]
    fn convention_parses_from_cli_tokens() {
        assert_eq!("misere".parse::<Convention>().unwrap(), Convention::Misere);
        assert_eq!("normal".parse::<Convention>().unwrap(), Convention::Normal);
        assert!("banana".parse::<Convention>().is_err());
    }
}
