//! The absolute order modulo a universe: a bounded `>=` test built from
//! three ingredients — a normal-play filter, the atomic-perturbation
//! proviso, and the recursive maintenance clauses — plus bounded
//! equality, witness replay and a distinguishing-game search.

use rustc_hash::FxHashMap;

use crate::algebra::{adjoint, sum};
use crate::arena::{ordered_key, Arena, FormId};
use crate::error::EngineError;
use crate::family::{moves, ostar};
use crate::notation::render;
use crate::outcome::{
    geq_np, outcome, outcome_partial, Convention, OutcomeClass, PartialOutcome, Side,
};
use crate::universe::{Budget, Membership, UniverseName, UniverseSpec};

/// Which maintenance obligation failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaintenanceClause {
    /// Some Right option of `g` is matched neither by a Right option of
    /// `h` nor by one of its own Left options.
    RightOptionOfG,
    /// Some Left option of `h` is matched neither by a Left option of
    /// `g` nor by one of its own Right options.
    LeftOptionOfH,
}

/// The evidence behind a `Refuted` verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// `g >= h` already fails under the normal-play convention, which
    /// is necessary for the absolute order in any of these universes.
    NormalPlay,
    /// An atomic member `x` of the universe for which the misère
    /// partial-outcome inequality fails on the given side.
    Proviso {
        side: Side,
        x: FormId,
        got_g: PartialOutcome,
        got_h: PartialOutcome,
    },
    /// A concrete option whose maintenance obligation cannot be met.
    Maintenance {
        clause: MaintenanceClause,
        option: FormId,
    },
}

/// A refutation of `g >= h`, machine-checkable via [`replay_witness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefutationWitness {
    pub g: FormId,
    pub h: FormId,
    pub kind: WitnessKind,
}

/// Three-valued comparison result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Refuted(RefutationWitness),
    /// Certified: the universe's atomic set was exhausted (only the
    /// dicot universe has a finite one).
    HoldsExact,
    /// No refutation found within the budget.
    HoldsAtBound(Budget),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Refuted(_))
    }
}

struct Comparator<'a> {
    arena: &'a mut Arena,
    /// Left-atomic members of the universe, for the `o_L` proviso.
    left_stream: Vec<FormId>,
    /// Right-atomic members, for the `o_R` proviso.
    right_stream: Vec<FormId>,
    memo: FxHashMap<u64, Option<RefutationWitness>>,
}

impl Comparator<'_> {
    /// `None` means "no refutation found"; recursion is on pairs whose
    /// combined birthday strictly decreases, so plain memoization
    /// suffices — no cycle checks needed.
    fn geq_rec(&mut self, g: FormId, h: FormId) -> Result<Option<RefutationWitness>, EngineError> {
        let key = ordered_key(g, h);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(*hit);
        }
        let result = self.compute(g, h)?;
        self.memo.insert(key, result);
        Ok(result)
    }

    fn compute(&mut self, g: FormId, h: FormId) -> Result<Option<RefutationWitness>, EngineError> {
        // The normal-play filter runs first (it is the cheapest test),
        // but when it refutes we still scan the proviso stream so the
        // reported witness is a concrete atomic form whenever one
        // exists within the budget.
        let np_ok = geq_np(self.arena, g, h)?;
        if let Some(kind) = self.proviso_refutation(g, h)? {
            return Ok(Some(RefutationWitness { g, h, kind }));
        }
        if !np_ok {
            return Ok(Some(RefutationWitness {
                g,
                h,
                kind: WitnessKind::NormalPlay,
            }));
        }

        // Maintenance, first clause: every Right option of g must be
        // answered, either by a Right option of h or by retreating to
        // one of its own Left options.
        let g_rights = self.arena.right(g).to_vec();
        for gr in g_rights {
            let mut met = false;
            for hr in self.arena.right(h).to_vec() {
                if self.geq_rec(gr, hr)?.is_none() {
                    met = true;
                    break;
                }
            }
            if !met {
                for grl in self.arena.left(gr).to_vec() {
                    if self.geq_rec(grl, h)?.is_none() {
                        met = true;
                        break;
                    }
                }
            }
            if !met {
                return Ok(Some(RefutationWitness {
                    g,
                    h,
                    kind: WitnessKind::Maintenance {
                        clause: MaintenanceClause::RightOptionOfG,
                        option: gr,
                    },
                }));
            }
        }

        // Second clause, the mirror image for Left options of h.
        let h_lefts = self.arena.left(h).to_vec();
        for hl in h_lefts {
            let mut met = false;
            for gl in self.arena.left(g).to_vec() {
                if self.geq_rec(gl, hl)?.is_none() {
                    met = true;
                    break;
                }
            }
            if !met {
                for hlr in self.arena.right(hl).to_vec() {
                    if self.geq_rec(g, hlr)?.is_none() {
                        met = true;
                        break;
                    }
                }
            }
            if !met {
                return Ok(Some(RefutationWitness {
                    g,
                    h,
                    kind: WitnessKind::Maintenance {
                        clause: MaintenanceClause::LeftOptionOfH,
                        option: hl,
                    },
                }));
            }
        }

        Ok(None)
    }

    fn proviso_refutation(
        &mut self,
        g: FormId,
        h: FormId,
    ) -> Result<Option<WitnessKind>, EngineError> {
        for i in 0..self.left_stream.len() {
            let x = self.left_stream[i];
            if let Some(kind) = self.proviso_at(g, h, x, Side::Left)? {
                return Ok(Some(kind));
            }
        }
        for i in 0..self.right_stream.len() {
            let x = self.right_stream[i];
            if let Some(kind) = self.proviso_at(g, h, x, Side::Right)? {
                return Ok(Some(kind));
            }
        }
        Ok(None)
    }

    fn proviso_at(
        &mut self,
        g: FormId,
        h: FormId,
        x: FormId,
        side: Side,
    ) -> Result<Option<WitnessKind>, EngineError> {
        let gs = sum(self.arena, g, x)?;
        let hs = sum(self.arena, h, x)?;
        let got_g = outcome_partial(self.arena, gs, side, Convention::Misere)?;
        let got_h = outcome_partial(self.arena, hs, side, Convention::Misere)?;
        if got_g < got_h {
            return Ok(Some(WitnessKind::Proviso {
                side,
                x,
                got_g,
                got_h,
            }));
        }
        Ok(None)
    }
}

fn require_member(
    arena: &mut Arena,
    spec: &UniverseSpec,
    g: FormId,
    budget: &Budget,
) -> Result<(), EngineError> {
    if spec.member_bounded(arena, g, budget)? == Membership::No {
        return Err(EngineError::NotMember {
            form: render(arena, g),
            universe: spec.name().to_string(),
        });
    }
    Ok(())
}

/// Bounded test of `g >= h` modulo the universe, in misère play.
///
/// Both forms must not be provable non-members. `Refuted` verdicts are
/// always sound; affirmative verdicts are exact only when the
/// universe's atomic set is finite (the dicot universe), and
/// bound-stamped otherwise.
pub fn geq_absolute(
    arena: &mut Arena,
    spec: &UniverseSpec,
    g: FormId,
    h: FormId,
    budget: &Budget,
) -> Result<Verdict, EngineError> {
    arena.check(g)?;
    arena.check(h)?;
    budget.validate()?;
    require_member(arena, spec, g, budget)?;
    require_member(arena, spec, h, budget)?;

    let left = spec.atomic_members(arena, Side::Left, budget)?;
    let right = spec.atomic_members(arena, Side::Right, budget)?;
    let exhaustive = left.complete && right.complete;
    let mut cmp = Comparator {
        arena,
        left_stream: left.forms,
        right_stream: right.forms,
        memo: FxHashMap::default(),
    };
    match cmp.geq_rec(g, h)? {
        Some(w) => Ok(Verdict::Refuted(w)),
        None if exhaustive => Ok(Verdict::HoldsExact),
        None => Ok(Verdict::HoldsAtBound(*budget)),
    }
}

/// Bounded equality: `geq_absolute` in both directions.
pub fn equal_bounded(
    arena: &mut Arena,
    spec: &UniverseSpec,
    g: FormId,
    h: FormId,
    budget: &Budget,
) -> Result<Verdict, EngineError> {
    let forward = geq_absolute(arena, spec, g, h, budget)?;
    if let Verdict::Refuted(w) = forward {
        return Ok(Verdict::Refuted(w));
    }
    let backward = geq_absolute(arena, spec, h, g, budget)?;
    if let Verdict::Refuted(w) = backward {
        return Ok(Verdict::Refuted(w));
    }
    Ok(match (forward, backward) {
        (Verdict::HoldsExact, Verdict::HoldsExact) => Verdict::HoldsExact,
        _ => Verdict::HoldsAtBound(*budget),
    })
}

/// Re-checks a refutation from scratch. Normal-play and proviso
/// witnesses replay through the solvers alone; maintenance witnesses
/// re-verify that every escape the clause offers is itself refuted.
pub fn replay_witness(
    arena: &mut Arena,
    spec: &UniverseSpec,
    w: &RefutationWitness,
    budget: &Budget,
) -> Result<bool, EngineError> {
    match w.kind {
        WitnessKind::NormalPlay => Ok(!geq_np(arena, w.g, w.h)?),
        WitnessKind::Proviso {
            side,
            x,
            got_g,
            got_h,
        } => {
            let gs = sum(arena, w.g, x)?;
            let hs = sum(arena, w.h, x)?;
            let og = outcome_partial(arena, gs, side, Convention::Misere)?;
            let oh = outcome_partial(arena, hs, side, Convention::Misere)?;
            Ok(og == got_g && oh == got_h && og < oh)
        }
        WitnessKind::Maintenance { clause, option } => match clause {
            MaintenanceClause::RightOptionOfG => {
                if !arena.right(w.g).contains(&option) {
                    return Ok(false);
                }
                for hr in arena.right(w.h).to_vec() {
                    if geq_absolute(arena, spec, option, hr, budget)?.holds() {
                        return Ok(false);
                    }
                }
                for grl in arena.left(option).to_vec() {
                    if geq_absolute(arena, spec, grl, w.h, budget)?.holds() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            MaintenanceClause::LeftOptionOfH => {
                if !arena.left(w.h).contains(&option) {
                    return Ok(false);
                }
                for gl in arena.left(w.g).to_vec() {
                    if geq_absolute(arena, spec, gl, option, budget)?.holds() {
                        return Ok(false);
                    }
                }
                for hlr in arena.right(option).to_vec() {
                    if geq_absolute(arena, spec, w.g, hlr, budget)?.holds() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        },
    }
}

/// A form that tells `g` and `h` apart, with the two misère outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distinguisher {
    pub x: FormId,
    pub outcome_g: OutcomeClass,
    pub outcome_h: OutcomeClass,
}

/// Searches for an `x` in the universe with
/// `outcome(g+x) != outcome(h+x)` in misère play. Candidates are tried
/// in a deterministic order: the classical witness templates first,
/// then the universe's atomic members and a small closure sample by
/// increasing birthday (ties broken by rendered text). The pool depends
/// only on the unordered pair, so the search is symmetric in `g`, `h`.
pub fn distinguish(
    arena: &mut Arena,
    spec: &UniverseSpec,
    g: FormId,
    h: FormId,
    budget: &Budget,
) -> Result<Option<Distinguisher>, EngineError> {
    arena.check(g)?;
    arena.check(h)?;
    budget.validate()?;
    require_member(arena, spec, g, budget)?;
    require_member(arena, spec, h, budget)?;
    if g == h {
        return Ok(None);
    }

    let pool = candidate_pool(arena, spec, g, h, budget)?;
    let mut seen = rustc_hash::FxHashSet::default();
    for x in pool {
        if !seen.insert(x) {
            continue;
        }
        if spec.member_bounded(arena, x, budget)? == Membership::No {
            continue;
        }
        let gs = sum(arena, g, x)?;
        let hs = sum(arena, h, x)?;
        let outcome_g = outcome(arena, gs, Convention::Misere)?;
        let outcome_h = outcome(arena, hs, Convention::Misere)?;
        if outcome_g != outcome_h {
            return Ok(Some(Distinguisher {
                x,
                outcome_g,
                outcome_h,
            }));
        }
    }
    Ok(None)
}

fn candidate_pool(
    arena: &mut Arena,
    spec: &UniverseSpec,
    g: FormId,
    h: FormId,
    budget: &Budget,
) -> Result<Vec<FormId>, EngineError> {
    let zero = arena.zero();
    let star = arena.intern(&[zero], &[zero])?;
    let zero_star = arena.intern(&[zero], &[star])?;
    let mut pool = vec![zero_star];

    // The tower ladder used against controlled-move sums.
    if let UniverseName::Sbar(n) = spec.name() {
        let mut towers = Vec::new();
        for k in 0..=(n + 1) as i64 {
            towers.push(ostar(arena, k)?);
        }
        pool.push(arena.intern(&[star], &towers)?);
    }

    let neg_one = moves(arena, -1)?;
    pool.push(arena.intern(&[neg_one], &[zero])?);

    // Adjoint-based witnesses, canonicalized on the unordered pair so
    // the pool (and therefore the result) is symmetric in g and h.
    let (a, b) = if g <= h { (g, h) } else { (h, g) };
    for f in [a, b] {
        pool.push(adjoint(arena, f)?);
        let mut adjoints = Vec::new();
        for t in arena.followers(f) {
            adjoints.push(adjoint(arena, t)?);
        }
        let inner = arena.intern(&[zero], &adjoints)?;
        pool.push(arena.intern(&[inner], &[star, zero_star])?);
    }

    // Generated candidates: atomic members of both sides, then a small
    // closure sample, by increasing birthday.
    let mut generated = Vec::new();
    for side in [Side::Left, Side::Right] {
        generated.extend(spec.atomic_members(arena, side, budget)?.forms);
    }
    let probe = Budget {
        max_birthday: budget.max_birthday,
        max_summands: budget.max_summands,
        max_forms: budget.max_forms.min(2_000),
    };
    generated.extend(spec.closure(arena, 2, None, &probe)?.forms);
    generated.sort_unstable();
    generated.dedup();
    let mut keyed: Vec<(u32, String, FormId)> = generated
        .into_iter()
        .map(|x| (arena.birthday(x), render(arena, x), x))
        .collect();
    keyed.sort();
    pool.extend(keyed.into_iter().map(|(_, _, x)| x));
    Ok(pool)
}

/// Human-readable one-liner for CLI output.
pub fn describe_verdict(arena: &Arena, v: &Verdict) -> String {
    match v {
        Verdict::HoldsExact => "holds (exact: atomic set exhausted)".to_string(),
        Verdict::HoldsAtBound(b) => format!(
            "holds at bound (max birthday {}, max summands {}, max forms {})",
            b.max_birthday, b.max_summands, b.max_forms
        ),
        Verdict::Refuted(w) => format!("refuted: {}", describe_witness(arena, w)),
    }
}

fn describe_witness(arena: &Arena, w: &RefutationWitness) -> String {
    let g = render(arena, w.g);
    let h = render(arena, w.h);
    match w.kind {
        WitnessKind::NormalPlay => {
            format!("{g} >= {h} already fails under the normal-play convention")
        }
        WitnessKind::Proviso { side, x, got_g, got_h } => format!(
            "proviso fails for {side}-atomic X = {}: o_{side}({g}+X) = {got_g} < {got_h} = o_{side}({h}+X)",
            render(arena, x)
        ),
        WitnessKind::Maintenance { clause, option } => match clause {
            MaintenanceClause::RightOptionOfG => format!(
                "maintenance fails: Right option {} of {g} is answered neither by a Right option of {h} nor by its own Left options",
                render(arena, option)
            ),
            MaintenanceClause::LeftOptionOfH => format!(
                "maintenance fails: Left option {} of {h} is answered neither by a Left option of {g} nor by its own Right options",
                render(arena, option)
            ),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::conjugate;
    use crate::family::{hat, zeta};
    use crate::notation::parse;

    fn small_budget() -> Budget {
        Budget {
            max_birthday: 3,
            max_summands: 2,
            max_forms: 500,
        }
    }

    #[test]
    fn reflexivity_in_the_dicot_universe_is_exact() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::Dicot).unwrap();
        let zero = a.zero();
        let v = geq_absolute(&mut a, &spec, zero, zero, &small_budget()).unwrap();
        assert_eq!(v, Verdict::HoldsExact);
    }

    #[test]
    fn star_is_not_above_zero_and_the_witness_is_atomic() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::Dicot).unwrap();
        let star = parse(&mut a, "*").unwrap();
        let zero = a.zero();
        let v = geq_absolute(&mut a, &spec, star, zero, &small_budget()).unwrap();
        match v {
            Verdict::Refuted(w) => {
                match w.kind {
                    WitnessKind::Proviso {
                        side,
                        x,
                        got_g,
                        got_h,
                    } => {
                        assert_eq!(side, Side::Left);
                        assert_eq!(x, zero);
                        assert_eq!(got_g, PartialOutcome::R);
                        assert_eq!(got_h, PartialOutcome::L);
                    }
                    other => panic!("expected a proviso witness, got {other:?}"),
                }
                assert!(replay_witness(&mut a, &spec, &w, &small_budget()).unwrap());
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn zero_is_not_above_one_by_normal_play() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::DeadEnding).unwrap();
        let zero = a.zero();
        let one = moves(&mut a, 1).unwrap();
        let v = geq_absolute(&mut a, &spec, zero, one, &small_budget()).unwrap();
        match v {
            Verdict::Refuted(w) => {
                assert_eq!(w.kind, WitnessKind::NormalPlay);
                assert!(replay_witness(&mut a, &spec, &w, &small_budget()).unwrap());
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn move_pair_is_not_above_the_controlled_pair() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::DeadEnding).unwrap();
        let one = moves(&mut a, 1).unwrap();
        let two = sum(&mut a, one, one).unwrap();
        let h2 = hat(&mut a, 2).unwrap();
        let v = geq_absolute(&mut a, &spec, two, h2, &small_budget()).unwrap();
        match v {
            Verdict::Refuted(w) => match w.kind {
                WitnessKind::Proviso { side, x, .. } => {
                    assert_eq!(side, Side::Left);
                    let neg_one = moves(&mut a, -1).unwrap();
                    assert_eq!(x, neg_one);
                    assert!(replay_witness(&mut a, &spec, &w, &small_budget()).unwrap());
                }
                other => panic!("expected a proviso witness, got {other:?}"),
            },
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn controlled_pair_and_move_pair_are_unequal_but_comparable_one_way() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::DeadEnding).unwrap();
        let h2 = hat(&mut a, 2).unwrap();
        let two = moves(&mut a, 2).unwrap();
        let forward = geq_absolute(&mut a, &spec, h2, two, &small_budget()).unwrap();
        assert!(matches!(forward, Verdict::HoldsAtBound(_)));
        let eq = equal_bounded(&mut a, &spec, h2, two, &small_budget()).unwrap();
        assert!(matches!(eq, Verdict::Refuted(_)));
    }

    #[test]
    fn equality_of_a_form_with_itself() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::Dicot).unwrap();
        let star = parse(&mut a, "*").unwrap();
        assert_eq!(
            equal_bounded(&mut a, &spec, star, star, &small_budget()).unwrap(),
            Verdict::HoldsExact
        );
    }

    #[test]
    fn non_member_arguments_are_rejected() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::Dicot).unwrap();
        let one = moves(&mut a, 1).unwrap();
        let zero = a.zero();
        let err = geq_absolute(&mut a, &spec, one, zero, &small_budget()).unwrap_err();
        assert!(matches!(err, EngineError::NotMember { .. }));
    }

    #[test]
    fn hook_extension_cannot_refute_its_own_generator_against_zero() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::Ez1).unwrap();
        let e1 = parse(&mut a, "{|1}").unwrap();
        let zero = a.zero();
        let budget = Budget {
            max_birthday: 3,
            max_summands: 2,
            max_forms: 300,
        };
        let v = equal_bounded(&mut a, &spec, e1, zero, &budget).unwrap();
        assert!(matches!(v, Verdict::HoldsAtBound(_)), "got {v:?}");
    }

    #[test]
    fn distinguishes_controlled_two_from_one_with_the_first_template() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::Sbar(1)).unwrap();
        let h2 = hat(&mut a, 2).unwrap();
        let one = moves(&mut a, 1).unwrap();
        let d = distinguish(&mut a, &spec, h2, one, &small_budget())
            .unwrap()
            .expect("a distinguishing form exists");
        let zero_star = parse(&mut a, "{0|*}").unwrap();
        assert_eq!(d.x, zero_star);
        assert_eq!(d.outcome_g, OutcomeClass::Left);
        assert_eq!(d.outcome_h, OutcomeClass::Previous);
    }

    #[test]
    fn distinguishes_the_first_hook_from_zero_everywhere() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::Omega).unwrap();
        let z2 = zeta(&mut a, 2).unwrap();
        let zero = a.zero();
        let d = distinguish(&mut a, &spec, z2, zero, &small_budget())
            .unwrap()
            .expect("a distinguishing form exists");
        let expected = parse(&mut a, "{-1|0}").unwrap();
        assert_eq!(d.x, expected);
        // Symmetric pool: swapping the arguments finds the same form.
        let d2 = distinguish(&mut a, &spec, zero, z2, &small_budget())
            .unwrap()
            .expect("still distinguishable");
        assert_eq!(d2.x, d.x);
    }

    #[test]
    fn identical_forms_are_indistinguishable() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::Omega).unwrap();
        let g = parse(&mut a, "{1|{0|*}}").unwrap();
        assert!(distinguish(&mut a, &spec, g, g, &small_budget())
            .unwrap()
            .is_none());
    }

    #[test]
    fn refutation_is_monotone_in_the_budget() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::DeadEnding).unwrap();
        let one = moves(&mut a, 1).unwrap();
        let two = sum(&mut a, one, one).unwrap();
        let h2 = hat(&mut a, 2).unwrap();
        let small = Budget {
            max_birthday: 2,
            max_summands: 1,
            max_forms: 50,
        };
        let v1 = geq_absolute(&mut a, &spec, two, h2, &small).unwrap();
        assert!(!v1.holds());
        let v2 = geq_absolute(&mut a, &spec, two, h2, &small.scaled(2)).unwrap();
        assert!(!v2.holds());
    }

    #[test]
    fn conjugation_flips_the_refuted_direction() {
        let mut a = Arena::new();
        let spec = UniverseSpec::new(UniverseName::DeadEnding).unwrap();
        let one = moves(&mut a, 1).unwrap();
        let two = sum(&mut a, one, one).unwrap();
        let h2 = hat(&mut a, 2).unwrap();
        let v = geq_absolute(&mut a, &spec, two, h2, &small_budget()).unwrap();
        assert!(!v.holds());
        // g >= h iff conjugate(h) >= conjugate(g), so the refutation and
        // the non-refutation both swap sides under conjugation.
        let ch2 = conjugate(&mut a, h2).unwrap();
        let neg2 = conjugate(&mut a, two).unwrap();
        let v = geq_absolute(&mut a, &spec, ch2, neg2, &small_budget()).unwrap();
        assert!(!v.holds());
        let v = geq_absolute(&mut a, &spec, neg2, ch2, &small_budget()).unwrap();
        assert!(v.holds());
    }
}
