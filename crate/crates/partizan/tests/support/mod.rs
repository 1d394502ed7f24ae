//! Independent oracle used by the integration tests: a plain tree
//! representation of forms with textbook, unmemoized recursions. The
//! engine's arena-based, memoized implementations are checked against
//! these on random inputs.

use partizan::{Arena, Convention, EngineError, FormId, PartialOutcome, Side};
use proptest::prelude::*;

/// A form as a plain tree; no sharing, no interning, no memoization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveForm {
    pub left: Vec<NaiveForm>,
    pub right: Vec<NaiveForm>,
}

impl NaiveForm {
    pub fn zero() -> Self {
        NaiveForm {
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    pub fn birthday(&self) -> u32 {
        self.left
            .iter()
            .chain(&self.right)
            .map(|o| o.birthday() + 1)
            .max()
            .unwrap_or(0)
    }
}

/// Interns a naive tree into the arena, bottom-up.
pub fn intern_into(arena: &mut Arena, g: &NaiveForm) -> Result<FormId, EngineError> {
    let mut left = Vec::with_capacity(g.left.len());
    for o in &g.left {
        left.push(intern_into(arena, o)?);
    }
    let mut right = Vec::with_capacity(g.right.len());
    for o in &g.right {
        right.push(intern_into(arena, o)?);
    }
    arena.intern(&left, &right)
}

/// Reads an interned form back out as a plain tree.
pub fn read_back(arena: &Arena, g: FormId) -> NaiveForm {
    let left = arena.left(g).to_vec();
    let right = arena.right(g).to_vec();
    NaiveForm {
        left: left.iter().map(|&o| read_back(arena, o)).collect(),
        right: right.iter().map(|&o| read_back(arena, o)).collect(),
    }
}

/// Textbook partial-outcome recursion. A player with no move loses
/// under the normal convention and wins under misère; otherwise the
/// mover picks the best reply.
pub fn naive_partial(g: &NaiveForm, side: Side, convention: Convention) -> PartialOutcome {
    match side {
        Side::Left => {
            if g.left.is_empty() {
                return match convention {
                    Convention::Misere => PartialOutcome::L,
                    Convention::Normal => PartialOutcome::R,
                };
            }
            if g.left
                .iter()
                .any(|o| naive_partial(o, Side::Right, convention) == PartialOutcome::L)
            {
                PartialOutcome::L
            } else {
                PartialOutcome::R
            }
        }
        Side::Right => {
            if g.right.is_empty() {
                return match convention {
                    Convention::Misere => PartialOutcome::R,
                    Convention::Normal => PartialOutcome::L,
                };
            }
            if g.right
                .iter()
                .any(|o| naive_partial(o, Side::Left, convention) == PartialOutcome::R)
            {
                PartialOutcome::R
            } else {
                PartialOutcome::L
            }
        }
    }
}

/// Textbook disjunctive sum: move in exactly one component.
pub fn naive_sum(g: &NaiveForm, h: &NaiveForm) -> NaiveForm {
    let mut left: Vec<NaiveForm> = g.left.iter().map(|o| naive_sum(o, h)).collect();
    left.extend(h.left.iter().map(|o| naive_sum(g, o)));
    let mut right: Vec<NaiveForm> = g.right.iter().map(|o| naive_sum(o, h)).collect();
    right.extend(h.right.iter().map(|o| naive_sum(g, o)));
    NaiveForm { left, right }
}

/// Textbook conjugate: swap the players everywhere.
pub fn naive_conjugate(g: &NaiveForm) -> NaiveForm {
    NaiveForm {
        left: g.right.iter().map(naive_conjugate).collect(),
        right: g.left.iter().map(naive_conjugate).collect(),
    }
}

/// Random naive trees of depth at most 3 with up to two options per
/// side per node.
pub fn arb_form() -> impl Strategy<Value = NaiveForm> {
    let leaf = Just(NaiveForm::zero());
    leaf.prop_recursive(3, 24, 2, |inner| {
        (
            prop::collection::vec(inner.clone(), 0..=2),
            prop::collection::vec(inner, 0..=2),
        )
            .prop_map(|(left, right)| NaiveForm { left, right })
    })
}
