//! Disjunctive sum, conjugate and adjoint.

use crate::arena::{unordered_key, Arena, FormId};
use crate::error::EngineError;

/// Disjunctive sum `g + h`: a move in the sum is a move in exactly one
/// component. Memoized on the unordered pair, so commutativity and
/// associativity hold at the id level.
pub fn sum(arena: &mut Arena, g: FormId, h: FormId) -> Result<FormId, EngineError> {
    arena.check(g)?;
    arena.check(h)?;
    sum_inner(arena, g, h)
}

fn sum_inner(arena: &mut Arena, g: FormId, h: FormId) -> Result<FormId, EngineError> {
    let key = unordered_key(g, h);
    if let Some(&s) = arena.sum_memo.get(&key) {
        return Ok(s);
    }
    let gl: Vec<FormId> = arena.left(g).to_vec();
    let gr: Vec<FormId> = arena.right(g).to_vec();
    let hl: Vec<FormId> = arena.left(h).to_vec();
    let hr: Vec<FormId> = arena.right(h).to_vec();

    let mut left = Vec::with_capacity(gl.len() + hl.len());
    for &x in &gl {
        left.push(sum_inner(arena, x, h)?);
    }
    for &y in &hl {
        left.push(sum_inner(arena, g, y)?);
    }
    let mut right = Vec::with_capacity(gr.len() + hr.len());
    for &x in &gr {
        right.push(sum_inner(arena, x, h)?);
    }
    for &y in &hr {
        right.push(sum_inner(arena, g, y)?);
    }
    left.sort_unstable();
    left.dedup();
    right.sort_unstable();
    right.dedup();
    let s = arena.intern_sorted(&left, &right)?;
    arena.sum_memo.insert(key, s);
    Ok(s)
}

/// Sums an arbitrary list of forms; the empty sum is zero.
pub fn sum_all(arena: &mut Arena, forms: &[FormId]) -> Result<FormId, EngineError> {
    let mut acc = arena.zero();
    for &g in forms {
        acc = sum(arena, acc, g)?;
    }
    Ok(acc)
}

/// Conjugate: swaps the players' roles in every follower.
pub fn conjugate(arena: &mut Arena, g: FormId) -> Result<FormId, EngineError> {
    arena.check(g)?;
    conjugate_inner(arena, g)
}

fn conjugate_inner(arena: &mut Arena, g: FormId) -> Result<FormId, EngineError> {
    if let Some(&c) = arena.conjugate_memo.get(&g) {
        return Ok(c);
    }
    let gl: Vec<FormId> = arena.left(g).to_vec();
    let gr: Vec<FormId> = arena.right(g).to_vec();
    let mut left = Vec::with_capacity(gr.len());
    for &x in &gr {
        left.push(conjugate_inner(arena, x)?);
    }
    let mut right = Vec::with_capacity(gl.len());
    for &x in &gl {
        right.push(conjugate_inner(arena, x)?);
    }
    left.sort_unstable();
    left.dedup();
    right.sort_unstable();
    right.dedup();
    let c = arena.intern_sorted(&left, &right)?;
    arena.conjugate_memo.insert(g, c);
    arena.conjugate_memo.insert(c, g);
    Ok(c)
}

/// Adjoint `g°`: the classical misère companion of `g`.
///
/// `0°` is `{0|0}`; when exactly one option set of `g` is empty the
/// adjoint fills that side with `0` and the other with the adjoints of the
/// existing options, otherwise both sides are adjoints. The result never
/// has an empty option set, and `g + g°` is a previous-player win in
/// misère play.
pub fn adjoint(arena: &mut Arena, g: FormId) -> Result<FormId, EngineError> {
    arena.check(g)?;
    adjoint_inner(arena, g)
}

fn adjoint_inner(arena: &mut Arena, g: FormId) -> Result<FormId, EngineError> {
    if let Some(&d) = arena.adjoint_memo.get(&g) {
        return Ok(d);
    }
    let zero = arena.zero();
    let gl: Vec<FormId> = arena.left(g).to_vec();
    let gr: Vec<FormId> = arena.right(g).to_vec();
    let mut left;
    let mut right;
    if gl.is_empty() && gr.is_empty() {
        left = vec![zero];
        right = vec![zero];
    } else if gl.is_empty() {
        left = Vec::with_capacity(gr.len());
        for &x in &gr {
            left.push(adjoint_inner(arena, x)?);
        }
        right = vec![zero];
    } else if gr.is_empty() {
        left = vec![zero];
        right = Vec::with_capacity(gl.len());
        for &x in &gl {
            right.push(adjoint_inner(arena, x)?);
        }
    } else {
        left = Vec::with_capacity(gr.len());
        for &x in &gr {
            left.push(adjoint_inner(arena, x)?);
        }
        right = Vec::with_capacity(gl.len());
        for &x in &gl {
            right.push(adjoint_inner(arena, x)?);
        }
    }
    left.sort_unstable();
    left.dedup();
    right.sort_unstable();
    right.dedup();
    let d = arena.intern_sorted(&left, &right)?;
    arena.adjoint_memo.insert(g, d);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(a: &mut Arena) -> (FormId, FormId, FormId) {
        let zero = a.zero();
        let one = a.intern(&[zero], &[]).unwrap();
        let star = a.intern(&[zero], &[zero]).unwrap();
        (zero, one, star)
    }

    #[test]
    fn zero_is_the_identity() {
        let mut a = Arena::new();
        let (zero, one, star) = small(&mut a);
        for g in [zero, one, star] {
            assert_eq!(sum(&mut a, g, zero).unwrap(), g);
            assert_eq!(sum(&mut a, zero, g).unwrap(), g);
        }
    }

    #[test]
    fn one_plus_one_is_the_two_move_form() {
        let mut a = Arena::new();
        let (_, one, _) = small(&mut a);
        let two = a.intern(&[one], &[]).unwrap();
        assert_eq!(sum(&mut a, one, one).unwrap(), two);
    }

    #[test]
    fn star_plus_star_has_star_options_on_both_sides() {
        let mut a = Arena::new();
        let (_, _, star) = small(&mut a);
        let s = sum(&mut a, star, star).unwrap();
        assert_eq!(a.left(s), &[star]);
        assert_eq!(a.right(s), &[star]);
    }

    #[test]
    fn sum_commutes_and_birthday_adds() {
        let mut a = Arena::new();
        let (_, one, star) = small(&mut a);
        let gh = sum(&mut a, one, star).unwrap();
        let hg = sum(&mut a, star, one).unwrap();
        assert_eq!(gh, hg);
        assert_eq!(a.birthday(gh), a.birthday(one) + a.birthday(star));
    }

    #[test]
    fn conjugate_swaps_sides_and_is_an_involution() {
        let mut a = Arena::new();
        let (zero, one, star) = small(&mut a);
        let neg_one = conjugate(&mut a, one).unwrap();
        assert!(a.left(neg_one).is_empty());
        assert_eq!(a.right(neg_one), &[zero]);
        assert_eq!(conjugate(&mut a, neg_one).unwrap(), one);
        assert_eq!(conjugate(&mut a, star).unwrap(), star);
        assert_eq!(conjugate(&mut a, zero).unwrap(), zero);
    }

    #[test]
    fn adjoint_of_zero_and_of_the_ends() {
        let mut a = Arena::new();
        let (zero, one, star) = small(&mut a);
        assert_eq!(adjoint(&mut a, zero).unwrap(), star);

        // 1 = {0|} is Right-atomic, so 1° = {0|0°} = {0|*}.
        let adj_one = adjoint(&mut a, one).unwrap();
        assert_eq!(a.left(adj_one), &[zero]);
        assert_eq!(a.right(adj_one), &[star]);

        // * has both options, so *° = {0°|0°} = {*|*}.
        let adj_star = adjoint(&mut a, star).unwrap();
        assert_eq!(a.left(adj_star), &[star]);
        assert_eq!(a.right(adj_star), &[star]);
    }

    #[test]
    fn adjoint_output_never_has_an_empty_side() {
        let mut a = Arena::new();
        let (zero, one, star) = small(&mut a);
        let hook = a.intern(&[], &[one]).unwrap();
        let wide = a.intern(&[one, star], &[]).unwrap();
        for g in [zero, one, star, hook, wide] {
            let d = adjoint(&mut a, g).unwrap();
            assert!(!a.left(d).is_empty());
            assert!(!a.right(d).is_empty());
        }
    }
}
