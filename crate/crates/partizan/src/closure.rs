//! Day-by-day closure of a set of forms under the three set operators:
//! pairwise disjunctive sums, conjugates, and parental combinations
//! (forms `{L|R}` built from non-empty subsets of what exists so far).
//!
//! The full closure is infinite, so enumeration is budgeted: forms above
//! the birthday bound are discarded, the result set is capped, and an
//! internal work cap bounds the number of operator applications. The
//! result carries a `truncated` flag so callers can tell "exhausted
//! within the bounds" apart from "cut off".

use rustc_hash::FxHashSet;

use crate::algebra::{conjugate, sum};
use crate::arena::{Arena, FormId};
use crate::error::EngineError;
use crate::notation::render;
use crate::universe::Budget;

/// Parental combinations draw option subsets of at most this size unless
/// the caller overrides the width.
pub const DEFAULT_WIDTH: usize = 2;

/// Accumulated closure set, sorted by id.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    pub forms: Vec<FormId>,
    /// True when a budget or work cap cut the enumeration short, i.e.
    /// the set may miss forms that the requested days would otherwise
    /// have produced.
    pub truncated: bool,
}

impl ClosureResult {
    pub fn contains(&self, g: FormId) -> bool {
        self.forms.binary_search(&g).is_ok()
    }
}

/// Enumerates the closure of `base` for the given number of days.
///
/// Day 0 is `base` plus the zero form; each later day applies the three
/// operators to the union of all previous days. Every day's output is
/// additionally closed under conjugation, so an untruncated result
/// contains the conjugate of each of its members. `width` bounds the
/// option-subset size used by the parental operator (`None` means
/// unrestricted, feasible only for small sets).
///
/// The base must be hereditarily closed: every option of a base form
/// must itself be in the base.
pub fn closure_enumerate(
    arena: &mut Arena,
    base: &[FormId],
    days: u32,
    width: Option<usize>,
    budget: &Budget,
) -> Result<ClosureResult, EngineError> {
    budget.validate()?;
    for &g in base {
        arena.check(g)?;
    }
    let base_set: FxHashSet<FormId> = base.iter().copied().collect();
    for &g in base {
        let options: Vec<FormId> = arena
            .left(g)
            .iter()
            .chain(arena.right(g))
            .copied()
            .collect();
        for o in options {
            if !base_set.contains(&o) {
                return Err(EngineError::NotHereditary {
                    form: render(arena, g),
                    option: render(arena, o),
                });
            }
        }
    }

    let mut forms: Vec<FormId> = base.to_vec();
    forms.push(arena.zero());
    forms.sort_unstable();
    forms.dedup();

    let mut grower = Grower {
        set: forms.iter().copied().collect(),
        added: Vec::new(),
        max_forms: budget.max_forms,
        work: 0,
        work_cap: (budget.max_forms as u64).saturating_mul(64),
        full: false,
    };
    let max_birthday = budget.max_birthday;

    for _ in 0..days {
        let snapshot = forms.clone();
        grower.added.clear();

        // Sums of unordered pairs; birthdays add, so prune up front.
        'sums: for i in 0..snapshot.len() {
            for j in i..snapshot.len() {
                if !grower.spend() {
                    break 'sums;
                }
                let (g, h) = (snapshot[i], snapshot[j]);
                if arena.birthday(g) + arena.birthday(h) > max_birthday {
                    continue;
                }
                let s = sum(arena, g, h)?;
                if !grower.offer(s) {
                    break 'sums;
                }
            }
        }

        if !grower.full {
            for &g in &snapshot {
                if !grower.spend() {
                    break;
                }
                let c = conjugate(arena, g)?;
                if !grower.offer(c) {
                    break;
                }
            }
        }

        if !grower.full {
            parental_day(arena, &snapshot, width, max_birthday, &mut grower)?;
        }

        // Close the day's additions under conjugation, so the running
        // set stays mirror-symmetric at every day boundary.
        let mut k = 0;
        while k < grower.added.len() && !grower.full {
            if !grower.spend() {
                break;
            }
            let c = conjugate(arena, grower.added[k])?;
            grower.offer(c);
            k += 1;
        }

        let exhausted = grower.added.is_empty();
        forms.append(&mut grower.added);
        if grower.full || exhausted {
            break;
        }
    }

    forms.sort_unstable();
    Ok(ClosureResult {
        forms,
        truncated: grower.full,
    })
}

struct Grower {
    set: FxHashSet<FormId>,
    added: Vec<FormId>,
    max_forms: usize,
    work: u64,
    work_cap: u64,
    full: bool,
}

impl Grower {
    /// Accounts one operator application; false once the work cap is hit.
    fn spend(&mut self) -> bool {
        self.work += 1;
        if self.work > self.work_cap {
            self.full = true;
        }
        !self.full
    }

    /// Records a candidate; false once the result cap is hit.
    fn offer(&mut self, g: FormId) -> bool {
        if self.set.insert(g) {
            self.added.push(g);
            if self.set.len() >= self.max_forms {
                self.full = true;
            }
        }
        !self.full
    }
}

/// One day of the parental operator: interns `{L|R}` for non-empty
/// subsets `L`, `R` of the snapshot, subject to the width bound.
fn parental_day(
    arena: &mut Arena,
    snapshot: &[FormId],
    width: Option<usize>,
    max_birthday: u32,
    grower: &mut Grower,
) -> Result<(), EngineError> {
    match width {
        None => {
            // Full powerset, by bitmask; only feasible for small sets.
            let m = snapshot.len().min(63);
            if m < snapshot.len() {
                grower.full = true;
            }
            let masks = 1u64 << m;
            for lmask in 1..masks {
                let lb = mask_birthday(arena, snapshot, lmask);
                if lb > max_birthday {
                    continue;
                }
                let lsub = mask_extract(snapshot, lmask);
                for rmask in 1..masks {
                    if !grower.spend() {
                        return Ok(());
                    }
                    if lb.max(mask_birthday(arena, snapshot, rmask)) > max_birthday {
                        continue;
                    }
                    let rsub = mask_extract(snapshot, rmask);
                    let g = arena.intern(&lsub, &rsub)?;
                    if !grower.offer(g) {
                        return Ok(());
                    }
                }
            }
        }
        Some(w) => {
            let w = w.max(1).min(snapshot.len());
            let mut lsub = SubsetOdometer::new(snapshot.len(), w);
            while let Some(li) = lsub.next() {
                let lset: Vec<FormId> = li.iter().map(|&i| snapshot[i]).collect();
                let lb = lset
                    .iter()
                    .map(|&g| arena.birthday(g) + 1)
                    .max()
                    .unwrap_or(0);
                if lb > max_birthday {
                    continue;
                }
                let mut rsub = SubsetOdometer::new(snapshot.len(), w);
                while let Some(ri) = rsub.next() {
                    if !grower.spend() {
                        return Ok(());
                    }
                    let rb = ri
                        .iter()
                        .map(|&i| arena.birthday(snapshot[i]) + 1)
                        .max()
                        .unwrap_or(0);
                    if lb.max(rb) > max_birthday {
                        continue;
                    }
                    let rset: Vec<FormId> = ri.iter().map(|&i| snapshot[i]).collect();
                    let g = arena.intern(&lset, &rset)?;
                    if !grower.offer(g) {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

/// Birthday the parental form would get from the options selected by
/// `mask`, so hopeless candidates are skipped without interning.
fn mask_birthday(arena: &Arena, snapshot: &[FormId], mask: u64) -> u32 {
    let mut b = 0;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        b = b.max(arena.birthday(snapshot[i]) + 1);
        rest &= rest - 1;
    }
    b
}

fn mask_extract(snapshot: &[FormId], mask: u64) -> Vec<FormId> {
    let mut v = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        v.push(snapshot[i]);
        rest &= rest - 1;
    }
    v
}

/// Iterates index combinations of sizes 1..=width in deterministic
/// order: all singletons, then all pairs in lexicographic order, and so
/// on.
struct SubsetOdometer {
    n: usize,
    width: usize,
    indices: Vec<usize>,
    started: bool,
}

impl SubsetOdometer {
    fn new(n: usize, width: usize) -> Self {
        SubsetOdometer {
            n,
            width,
            indices: vec![0],
            started: false,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.n == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.indices);
        }
        // Advance the rightmost index that still has room.
        let k = self.indices.len();
        let mut i = k;
        loop {
            if i == 0 {
                // Grow to the next combination size.
                if k >= self.width || k >= self.n {
                    return None;
                }
                self.indices = (0..k + 1).collect();
                return Some(&self.indices);
            }
            i -= 1;
            if self.indices[i] + (k - i) < self.n {
                self.indices[i] += 1;
                for j in i + 1..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                return Some(&self.indices);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::moves;
    use crate::notation::parse;
    use crate::universe::Budget;

    fn small_budget() -> Budget {
        Budget {
            max_birthday: 3,
            max_summands: 3,
            max_forms: 5_000,
        }
    }

    #[test]
    fn one_day_over_zero_creates_star() {
        let mut a = Arena::new();
        let zero = a.zero();
        let out = closure_enumerate(&mut a, &[zero], 1, Some(2), &small_budget()).unwrap();
        let star = parse(&mut a, "*").unwrap();
        assert!(out.contains(zero));
        assert!(out.contains(star));
        assert!(!out.truncated);
    }

    #[test]
    fn sums_appear_on_day_one() {
        let mut a = Arena::new();
        let zero = a.zero();
        let one = moves(&mut a, 1).unwrap();
        let neg = moves(&mut a, -1).unwrap();
        let out =
            closure_enumerate(&mut a, &[zero, one, neg], 1, Some(2), &small_budget()).unwrap();
        let two = moves(&mut a, 2).unwrap();
        assert!(out.contains(two));
    }

    #[test]
    fn two_days_over_zero_reach_the_second_level() {
        let mut a = Arena::new();
        let zero = a.zero();
        let out = closure_enumerate(&mut a, &[zero], 2, Some(2), &small_budget()).unwrap();
        for text in ["{*|*}", "{0,*|0}"] {
            let g = parse(&mut a, text).unwrap();
            assert!(out.contains(g), "missing {text}");
        }
    }

    #[test]
    fn results_are_conjugate_closed_when_not_truncated() {
        let mut a = Arena::new();
        let zero = a.zero();
        let one = moves(&mut a, 1).unwrap();
        let neg = moves(&mut a, -1).unwrap();
        // One day keeps the result comfortably under the caps; two
        // width-2 days over this base already exceed 50k distinct forms.
        let out =
            closure_enumerate(&mut a, &[zero, one, neg], 1, Some(2), &small_budget()).unwrap();
        assert!(!out.truncated);
        for &g in &out.forms {
            let c = conjugate(&mut a, g).unwrap();
            assert!(out.contains(c), "conjugate of {} missing", render(&a, g));
        }
    }

    #[test]
    fn non_hereditary_base_is_rejected() {
        let mut a = Arena::new();
        let one = moves(&mut a, 1).unwrap();
        let err = closure_enumerate(&mut a, &[one], 1, Some(2), &small_budget()).unwrap_err();
        assert!(matches!(err, EngineError::NotHereditary { .. }));
    }

    #[test]
    fn result_cap_sets_the_truncation_flag() {
        let mut a = Arena::new();
        let zero = a.zero();
        let tight = Budget {
            max_birthday: 3,
            max_summands: 3,
            max_forms: 4,
        };
        let out = closure_enumerate(&mut a, &[zero], 2, Some(2), &tight).unwrap();
        assert!(out.truncated);
        assert!(out.forms.len() <= 4);
    }

    #[test]
    fn unrestricted_width_recovers_all_small_dicots() {
        let mut a = Arena::new();
        let zero = a.zero();
        let budget = Budget {
            max_birthday: 2,
            max_summands: 3,
            max_forms: 10_000,
        };
        let out = closure_enumerate(&mut a, &[zero], 2, None, &budget).unwrap();
        // The forms with both sides empty-or-not in lockstep at every
        // follower and birthday <= 2: 0, *, and the nine pairs of
        // non-empty subsets of {0, *}... of which * is one.
        assert!(!out.truncated);
        assert_eq!(out.forms.len(), 10);
        for &g in &out.forms {
            assert!(crate::universe::classify_form(&a, g).unwrap().dicot);
        }
    }

    #[test]
    fn subset_odometer_orders_singletons_before_pairs() {
        let mut it = SubsetOdometer::new(3, 2);
        let mut seen = Vec::new();
        while let Some(ix) = it.next() {
            seen.push(ix.to_vec());
        }
        assert_eq!(
            seen,
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2]
            ]
        );
    }
}
