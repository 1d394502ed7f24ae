//! Named families of forms: integers, controlled moves, star towers and
//! hooks. These are the generators from which the non-trivial universes
//! are built.

use crate::algebra::conjugate;
use crate::arena::{Arena, FormId};
use crate::error::{domain, EngineError};

/// The four built-in families, as they appear in the text grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Integers: `0 = {|}`, `n = {n-1|}`, negatives by conjugation.
    Moves,
    /// Controlled moves: `hat(n) = {0,1,...,n-1|}`, negatives by conjugation.
    Hat,
    /// Star towers: `ostar(0) = *`, `ostar(n) = {0|ostar(n-1)}`.
    Ostar,
    /// Hooks: `zeta(n) = {|n}` for `n >= 2`, negatives by conjugation.
    Zeta,
}

/// Builds the requested family member. `ostar` needs `n >= 0` and `zeta`
/// needs `|n| >= 2`; violations are domain errors.
pub fn construct_family(
    arena: &mut Arena,
    kind: FamilyKind,
    n: i64,
) -> Result<FormId, EngineError> {
    match kind {
        FamilyKind::Moves => moves(arena, n),
        FamilyKind::Hat => hat(arena, n),
        FamilyKind::Ostar => ostar(arena, n),
        FamilyKind::Zeta => zeta(arena, n),
    }
}

/// The integer `n` as a form: a chain of `|n|` free moves for one player.
pub fn moves(arena: &mut Arena, n: i64) -> Result<FormId, EngineError> {
    let pos = moves_nonneg(arena, n.unsigned_abs())?;
    if n < 0 {
        conjugate(arena, pos)
    } else {
        Ok(pos)
    }
}

fn moves_nonneg(arena: &mut Arena, n: u64) -> Result<FormId, EngineError> {
    let mut g = arena.zero();
    for _ in 0..n {
        g = arena.intern(&[g], &[])?;
    }
    Ok(g)
}

/// `hat(n)`: Left may jump to any of `0..n-1` but Right has no move.
/// `hat(0) = 0` and `hat(1) = 1`; negative `n` gives the conjugate.
pub fn hat(arena: &mut Arena, n: i64) -> Result<FormId, EngineError> {
    let k = n.unsigned_abs();
    let mut left = Vec::with_capacity(k as usize);
    for i in 0..k {
        left.push(moves_nonneg(arena, i)?);
    }
    let pos = arena.intern(&left, &[])?;
    if n < 0 {
        conjugate(arena, pos)
    } else {
        Ok(pos)
    }
}

/// The star tower `ostar(n)`; `ostar(0)` is `*` itself.
pub fn ostar(arena: &mut Arena, n: i64) -> Result<FormId, EngineError> {
    if n < 0 {
        return Err(domain(format!(
            "ostar({n}) is undefined; the index must be >= 0"
        )));
    }
    let zero = arena.zero();
    let mut g = arena.intern(&[zero], &[zero])?;
    for _ in 0..n {
        g = arena.intern(&[zero], &[g])?;
    }
    Ok(g)
}

/// The hook `zeta(n) = {|n}` for `n >= 2`, or its conjugate for
/// `n <= -2`. Indices with `|n| < 2` are outside the family.
pub fn zeta(arena: &mut Arena, n: i64) -> Result<FormId, EngineError> {
    if n.unsigned_abs() < 2 {
        return Err(domain(format!(
            "zeta({n}) is undefined; the index must satisfy |n| >= 2"
        )));
    }
    let target = moves_nonneg(arena, n.unsigned_abs())?;
    let pos = arena.intern(&[], &[target])?;
    if n < 0 {
        conjugate(arena, pos)
    } else {
        Ok(pos)
    }
}
