//! Universe catalog: structural classification of forms, the named
//! universes (dicot, dead-ending, everything, and the two infinite
//! families of extensions), their atomic-member generators, and bounded
//! membership tests.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashSet;

use crate::algebra::{conjugate, sum};
use crate::arena::{flag, Arena, FormId};
use crate::closure::{closure_enumerate, ClosureResult, DEFAULT_WIDTH};
use crate::error::{domain, EngineError};
use crate::family::{hat, moves, zeta};
use crate::notation::render;
use crate::outcome::Side;

/// The six structural predicates of a form, all computed bottom-up when
/// the form is interned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormFlags {
    /// No Left options.
    pub left_atomic: bool,
    /// No Right options.
    pub right_atomic: bool,
    /// No Left options now or after any sequence of Right moves.
    pub left_end: bool,
    /// No Right options now or after any sequence of Left moves.
    pub right_end: bool,
    /// At every follower, both players can move or neither can.
    pub dicot: bool,
    /// Every Left-atomic follower is a Left-end and every Right-atomic
    /// follower is a Right-end: a player with no move never gets one
    /// back.
    pub dead_ending: bool,
}

impl FormFlags {
    fn from_bits(bits: u8) -> Self {
        FormFlags {
            left_atomic: bits & flag::LEFT_ATOMIC != 0,
            right_atomic: bits & flag::RIGHT_ATOMIC != 0,
            left_end: bits & flag::LEFT_END != 0,
            right_end: bits & flag::RIGHT_END != 0,
            dicot: bits & flag::DICOT != 0,
            dead_ending: bits & flag::DEAD_ENDING != 0,
        }
    }
}

/// All six structural flags of `g`.
pub fn classify_form(arena: &Arena, g: FormId) -> Result<FormFlags, EngineError> {
    arena.check(g)?;
    Ok(FormFlags::from_bits(arena.flag_bits(g)))
}

/// Bounds for every enumeration and bounded decision in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest birthday an enumerated form may have.
    pub max_birthday: u32,
    /// Most generator summands used when building atomic members.
    pub max_summands: u32,
    /// Most forms any single enumeration may return.
    pub max_forms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_birthday: 4,
            max_summands: 3,
            max_forms: 20_000,
        }
    }
}

impl Budget {
    pub fn new(
        max_birthday: u32,
        max_summands: u32,
        max_forms: usize,
    ) -> Result<Self, EngineError> {
        let b = Budget {
            max_birthday,
            max_summands,
            max_forms,
        };
        b.validate()?;
        Ok(b)
    }

    /// All bounds must be strictly positive.
    pub fn validate(&self) -> Result<(), EngineError> {
        if self.max_birthday == 0 || self.max_summands == 0 || self.max_forms == 0 {
            return Err(domain(format!(
                "budget bounds must be strictly positive (got birthday {}, summands {}, forms {})",
                self.max_birthday, self.max_summands, self.max_forms
            )));
        }
        Ok(())
    }

    /// Every bound multiplied by `k`, saturating.
    pub fn scaled(&self, k: u32) -> Budget {
        Budget {
            max_birthday: self.max_birthday.saturating_mul(k),
            max_summands: self.max_summands.saturating_mul(k),
            max_forms: self.max_forms.saturating_mul(k as usize),
        }
    }
}

/// Result of a bounded membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    /// Neither certified nor refuted within the budget.
    Unknown,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipMode {
    /// Membership decidable from structural flags alone.
    Exact,
    /// Membership certified or refuted within a budget, `Unknown`
    /// otherwise.
    Bounded,
}

/// The built-in universes.
///
/// `Dicot` and `DeadEnding` are the two classical universes; `Omega` is
/// everything. `Sbar(n)` is the closure of the dicots together with the
/// controlled moves `hat(1)..hat(n+1)` (and conjugates); `Zbar(n)` is
/// the closure of the dead-ending forms together with the hooks
/// `zeta(2)..zeta(n)`; `Ez1` is the closure of the dead-ending forms
/// together with the hook-like form `{|1}`, the universe in which `{|1}`
/// cannot be told apart from `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UniverseName {
    Dicot,
    DeadEnding,
    Omega,
    Sbar(u32),
    Zbar(u32),
    Ez1,
}

impl fmt::Display for UniverseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniverseName::Dicot => f.write_str("D"),
            UniverseName::DeadEnding => f.write_str("E"),
            UniverseName::Omega => f.write_str("Omega"),
            UniverseName::Sbar(n) => write!(f, "Sbar:{n}"),
            UniverseName::Zbar(n) => write!(f, "Zbar:{n}"),
            UniverseName::Ez1 => f.write_str("Ez1"),
        }
    }
}

impl FromStr for UniverseName {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let name = match s {
            "D" => UniverseName::Dicot,
            "E" => UniverseName::DeadEnding,
            "Omega" => UniverseName::Omega,
            "Ez1" => UniverseName::Ez1,
            _ => {
                let parse_index = |rest: &str| {
                    rest.parse::<u32>()
                        .map_err(|_| domain(format!("bad universe index in `{s}`")))
                };
                if let Some(rest) = s.strip_prefix("Sbar:") {
                    UniverseName::Sbar(parse_index(rest)?)
                } else if let Some(rest) = s.strip_prefix("Zbar:") {
                    UniverseName::Zbar(parse_index(rest)?)
                } else {
                    return Err(domain(format!(
                        "unknown universe `{s}` (expected D, E, Omega, Sbar:<n>, Zbar:<n> or Ez1)"
                    )));
                }
            }
        };
        UniverseSpec::new(name)?;
        Ok(name)
    }
}

/// Atomic members of one side of a universe, in deterministic order
/// (birthday, then rendered text).
#[derive(Debug, Clone)]
pub struct AtomicStream {
    pub forms: Vec<FormId>,
    /// True when the list is the whole atomic set, not a budgeted
    /// prefix. Only the dicot universe has a finite atomic set.
    pub complete: bool,
}

/// A named universe with its membership logic and generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniverseSpec {
    name: UniverseName,
}

impl UniverseSpec {
    pub fn new(name: UniverseName) -> Result<Self, EngineError> {
        if let UniverseName::Zbar(n) = name {
            if n < 2 {
                return Err(domain(format!(
                    "Zbar:{n} is undefined; the index must be >= 2"
                )));
            }
        }
        Ok(UniverseSpec { name })
    }

    pub fn name(&self) -> UniverseName {
        self.name
    }

    pub fn membership_mode(&self) -> MembershipMode {
        match self.name {
            UniverseName::Dicot | UniverseName::DeadEnding | UniverseName::Omega => {
                MembershipMode::Exact
            }
            _ => MembershipMode::Bounded,
        }
    }

    /// The atomic members of the given side, within budget.
    ///
    /// - `D`: only `0`, on either side (complete).
    /// - `E`: the Left-ends (respectively Right-ends) up to the birthday
    ///   bound.
    /// - `Omega`: every atomic form up to the birthday bound.
    /// - `Sbar(n)`: Right-atomic members are the sums of `hat(k)`,
    ///   `k <= n+1`, with at most `max_summands` summands; Left-atomic
    ///   members are their conjugates.
    /// - `Zbar(n)` / `Ez1`: Left-atomic members are sums of at most
    ///   `max_summands` hooks plus a Left-end within the birthday bound;
    ///   Right-atomic members are the conjugates.
    pub fn atomic_members(
        &self,
        arena: &mut Arena,
        side: Side,
        budget: &Budget,
    ) -> Result<AtomicStream, EngineError> {
        budget.validate()?;
        let (mut forms, complete) = match self.name {
            UniverseName::Dicot => (vec![arena.zero()], true),
            UniverseName::DeadEnding => {
                let (levels, _) = left_end_levels(arena, budget.max_birthday, budget.max_forms)?;
                let ends: Vec<FormId> = levels.into_iter().flatten().collect();
                (orient(arena, ends, Side::Left, side)?, false)
            }
            UniverseName::Omega => {
                let (all, _) = enumerate_forms(arena, budget.max_birthday, budget.max_forms)?;
                let want = match side {
                    Side::Left => flag::LEFT_ATOMIC,
                    Side::Right => flag::RIGHT_ATOMIC,
                };
                let picked = all
                    .into_iter()
                    .filter(|&g| arena.flag_bits(g) & want != 0)
                    .collect();
                (picked, false)
            }
            UniverseName::Sbar(n) => {
                let sums = hat_sums(arena, n + 1, budget.max_summands, budget.max_forms)?;
                (orient(arena, sums, Side::Right, side)?, false)
            }
            UniverseName::Zbar(_) | UniverseName::Ez1 => {
                let hooks = self.hooks(arena)?;
                let sums = hook_end_sums(arena, &hooks, budget)?;
                (orient(arena, sums, Side::Left, side)?, false)
            }
        };
        sort_by_birthday_text(arena, &mut forms);
        Ok(AtomicStream { forms, complete })
    }

    /// A finite, hereditarily and conjugate closed seed set whose
    /// closure approximates the universe from below.
    pub fn closure_base(
        &self,
        arena: &mut Arena,
        budget: &Budget,
    ) -> Result<Vec<FormId>, EngineError> {
        budget.validate()?;
        let mut base = vec![arena.zero()];
        match self.name {
            UniverseName::Dicot => {}
            UniverseName::DeadEnding => {
                push_ends_both_sides(arena, budget, &mut base)?;
            }
            UniverseName::Omega => {
                let (all, _) =
                    enumerate_forms(arena, budget.max_birthday.min(2), budget.max_forms)?;
                base.extend(all);
            }
            UniverseName::Sbar(n) => {
                for j in 0..=n as i64 {
                    base.push(moves(arena, j)?);
                    base.push(moves(arena, -j)?);
                }
                for k in 1..=(n + 1) as i64 {
                    let h = hat(arena, k)?;
                    base.push(h);
                    base.push(conjugate(arena, h)?);
                }
            }
            UniverseName::Zbar(top) => {
                push_ends_both_sides(arena, budget, &mut base)?;
                for j in 0..=top as i64 {
                    base.push(moves(arena, j)?);
                    base.push(moves(arena, -j)?);
                }
                for k in 2..=top as i64 {
                    let z = zeta(arena, k)?;
                    base.push(z);
                    base.push(conjugate(arena, z)?);
                }
            }
            UniverseName::Ez1 => {
                push_ends_both_sides(arena, budget, &mut base)?;
                base.push(moves(arena, 1)?);
                base.push(moves(arena, -1)?);
                let h = hook_one(arena)?;
                base.push(h);
                base.push(conjugate(arena, h)?);
            }
        }
        base.sort_unstable();
        base.dedup();
        Ok(base)
    }

    /// Bounded membership: exact for `D`, `E` and `Omega`; for the
    /// closure universes, `No` when some atomic follower provably fails
    /// the universe's atomic characterization, `Yes` when `g` is a dicot
    /// (or, for the `E`-side families, dead-ending) or is reached by a
    /// small closure search, and `Unknown` otherwise.
    pub fn member_bounded(
        &self,
        arena: &mut Arena,
        g: FormId,
        budget: &Budget,
    ) -> Result<Membership, EngineError> {
        arena.check(g)?;
        budget.validate()?;
        let bits = arena.flag_bits(g);
        match self.name {
            UniverseName::Dicot => Ok(yes_no(bits & flag::DICOT != 0)),
            UniverseName::DeadEnding => Ok(yes_no(bits & flag::DEAD_ENDING != 0)),
            UniverseName::Omega => Ok(Membership::Yes),
            UniverseName::Sbar(n) => {
                if bits & flag::DICOT != 0 {
                    return Ok(Membership::Yes);
                }
                for t in arena.followers(g) {
                    let tb = arena.flag_bits(t);
                    if tb & flag::RIGHT_ATOMIC != 0 {
                        if let Some(false) = conforms_hat_sum(arena, t, n + 1, budget)? {
                            return Ok(Membership::No);
                        }
                    }
                    if tb & flag::LEFT_ATOMIC != 0 {
                        let c = conjugate(arena, t)?;
                        if let Some(false) = conforms_hat_sum(arena, c, n + 1, budget)? {
                            return Ok(Membership::No);
                        }
                    }
                }
                if self.closure_probe(arena, g, budget)? {
                    return Ok(Membership::Yes);
                }
                Ok(Membership::Unknown)
            }
            UniverseName::Zbar(_) | UniverseName::Ez1 => {
                if bits & flag::DEAD_ENDING != 0 {
                    return Ok(Membership::Yes);
                }
                let hooks = self.hooks(arena)?;
                for t in arena.followers(g) {
                    let tb = arena.flag_bits(t);
                    if tb & flag::LEFT_ATOMIC != 0 {
                        if let Some(false) = conforms_hook_sum(arena, t, &hooks, budget)? {
                            return Ok(Membership::No);
                        }
                    }
                    if tb & flag::RIGHT_ATOMIC != 0 {
                        let c = conjugate(arena, t)?;
                        if let Some(false) = conforms_hook_sum(arena, c, &hooks, budget)? {
                            return Ok(Membership::No);
                        }
                    }
                }
                if self.closure_probe(arena, g, budget)? {
                    return Ok(Membership::Yes);
                }
                Ok(Membership::Unknown)
            }
        }
    }

    /// The hook generators that extend `E`: `zeta(2)..zeta(n)` for
    /// `Zbar(n)`, the single form `{|1}` for `Ez1`.
    fn hooks(&self, arena: &mut Arena) -> Result<Vec<FormId>, EngineError> {
        match self.name {
            UniverseName::Zbar(top) => (2..=top as i64).map(|k| zeta(arena, k)).collect(),
            UniverseName::Ez1 => Ok(vec![hook_one(arena)?]),
            _ => Ok(Vec::new()),
        }
    }

    /// Affirmative membership search: a two-day closure of the base with
    /// a deliberately small cap. Forms it reaches are members; forms it
    /// misses stay undecided.
    fn closure_probe(
        &self,
        arena: &mut Arena,
        g: FormId,
        budget: &Budget,
    ) -> Result<bool, EngineError> {
        if arena.birthday(g) > budget.max_birthday {
            return Ok(false);
        }
        let probe = Budget {
            max_birthday: budget.max_birthday,
            max_summands: budget.max_summands,
            max_forms: budget.max_forms.min(4_000),
        };
        let base = self.closure_base(arena, &probe)?;
        let out = closure_enumerate(arena, &base, 2, Some(DEFAULT_WIDTH), &probe)?;
        Ok(out.contains(g))
    }

    /// Convenience wrapper over [`closure_enumerate`] seeded with this
    /// universe's base.
    pub fn closure(
        &self,
        arena: &mut Arena,
        days: u32,
        width: Option<usize>,
        budget: &Budget,
    ) -> Result<ClosureResult, EngineError> {
        let base = self.closure_base(arena, budget)?;
        closure_enumerate(arena, &base, days, width, budget)
    }
}

fn yes_no(b: bool) -> Membership {
    if b {
        Membership::Yes
    } else {
        Membership::No
    }
}

/// The form `{|1}`: the hook-like extension generator that turns out to
/// be indistinguishable from `0` in its own closure universe. It is kept
/// out of the `zeta` family on purpose (hooks start at order 2).
fn hook_one(arena: &mut Arena) -> Result<FormId, EngineError> {
    let one = moves(arena, 1)?;
    arena.intern(&[], &[one])
}

/// Flips a stream generated for `generated_side` to the requested side
/// by conjugating every element.
fn orient(
    arena: &mut Arena,
    forms: Vec<FormId>,
    generated_side: Side,
    requested: Side,
) -> Result<Vec<FormId>, EngineError> {
    if generated_side == requested {
        return Ok(forms);
    }
    forms.into_iter().map(|g| conjugate(arena, g)).collect()
}

fn sort_by_birthday_text(arena: &Arena, forms: &mut Vec<FormId>) {
    forms.sort_unstable();
    forms.dedup();
    let mut keyed: Vec<(u32, String, FormId)> = forms
        .iter()
        .map(|&g| (arena.birthday(g), render(arena, g), g))
        .collect();
    keyed.sort();
    forms.clear();
    forms.extend(keyed.into_iter().map(|(_, _, g)| g));
}

fn push_ends_both_sides(
    arena: &mut Arena,
    budget: &Budget,
    base: &mut Vec<FormId>,
) -> Result<(), EngineError> {
    let (levels, _) = left_end_levels(arena, budget.max_birthday, budget.max_forms)?;
    for level in levels {
        for g in level {
            base.push(g);
            base.push(conjugate(arena, g)?);
        }
    }
    Ok(())
}

/// Left-ends grouped by exact birthday: level `b` holds the forms
/// `{|S}` where `S` is a set of smaller Left-ends, at least one of
/// birthday `b-1`. The second component is true when the enumeration
/// was cut short (by the cap or by levels too wide to index).
pub(crate) fn left_end_levels(
    arena: &mut Arena,
    max_birthday: u32,
    cap: usize,
) -> Result<(Vec<Vec<FormId>>, bool), EngineError> {
    let mut levels: Vec<Vec<FormId>> = vec![vec![arena.zero()]];
    let mut total = 1usize;
    let mut truncated = false;
    'levels: for _b in 1..=max_birthday {
        let prefix: Vec<FormId> = levels.iter().flatten().copied().collect();
        let newest_start = prefix.len() - levels.last().expect("nonempty").len();
        let m = prefix.len().min(63);
        if m < prefix.len() {
            truncated = true;
        }
        if newest_start >= m {
            // The previous level is out of mask range: nothing of this
            // birthday can be enumerated.
            truncated = true;
            break;
        }
        let mut level = Vec::new();
        for mask in 1u64..(1u64 << m) {
            if mask >> newest_start == 0 {
                continue;
            }
            if total >= cap {
                truncated = true;
                if !level.is_empty() {
                    levels.push(level);
                }
                break 'levels;
            }
            let opts = mask_options(&prefix, mask);
            let g = arena.intern(&[], &opts)?;
            level.push(g);
            total += 1;
        }
        levels.push(level);
    }
    Ok((levels, truncated))
}

fn mask_options(prefix: &[FormId], mask: u64) -> Vec<FormId> {
    let mut v = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        v.push(prefix[i]);
        rest &= rest - 1;
    }
    v
}

/// Every form of birthday at most `max_birthday`, level by level, up to
/// `max_forms` in total. The flag reports truncation.
pub fn enumerate_forms(
    arena: &mut Arena,
    max_birthday: u32,
    max_forms: usize,
) -> Result<(Vec<FormId>, bool), EngineError> {
    let mut levels: Vec<Vec<FormId>> = vec![vec![arena.zero()]];
    let mut total = 1usize;
    let mut truncated = false;
    'levels: for _b in 1..=max_birthday {
        let prefix: Vec<FormId> = levels.iter().flatten().copied().collect();
        let newest_start = prefix.len() - levels.last().expect("nonempty").len();
        let m = prefix.len().min(63);
        if m < prefix.len() {
            truncated = true;
        }
        if newest_start >= m {
            truncated = true;
            break;
        }
        let masks = 1u64 << m;
        let mut level = Vec::new();
        for lmask in 0..masks {
            for rmask in 0..masks {
                if (lmask | rmask) >> newest_start == 0 {
                    continue;
                }
                if total >= max_forms {
                    truncated = true;
                    if !level.is_empty() {
                        levels.push(level);
                    }
                    break 'levels;
                }
                let left = mask_options(&prefix, lmask);
                let right = mask_options(&prefix, rmask);
                let g = arena.intern(&left, &right)?;
                level.push(g);
                total += 1;
            }
        }
        levels.push(level);
    }
    Ok((levels.into_iter().flatten().collect(), truncated))
}

/// All sums of controlled-move forms `hat(k)`, `1 <= k <= max_part`,
/// with at most `max_summands` summands (the empty sum `0` included).
fn hat_sums(
    arena: &mut Arena,
    max_part: u32,
    max_summands: u32,
    cap: usize,
) -> Result<Vec<FormId>, EngineError> {
    let zero = arena.zero();
    let mut seen: FxHashSet<FormId> = FxHashSet::default();
    let mut out = Vec::new();
    seen.insert(zero);
    out.push(zero);
    hat_sums_rec(
        arena,
        zero,
        1,
        max_part,
        max_summands,
        &mut seen,
        &mut out,
        cap,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn hat_sums_rec(
    arena: &mut Arena,
    acc: FormId,
    min_part: u32,
    max_part: u32,
    left: u32,
    seen: &mut FxHashSet<FormId>,
    out: &mut Vec<FormId>,
    cap: usize,
) -> Result<(), EngineError> {
    if left == 0 || out.len() >= cap {
        return Ok(());
    }
    for part in min_part..=max_part {
        let h = hat(arena, part as i64)?;
        let next = sum(arena, acc, h)?;
        if seen.insert(next) {
            out.push(next);
            if out.len() >= cap {
                return Ok(());
            }
        }
        hat_sums_rec(arena, next, part, max_part, left - 1, seen, out, cap)?;
    }
    Ok(())
}

/// All sums of at most `max_summands` hooks plus a Left-end whose
/// birthday fits the budget, generated in order of total birthday.
fn hook_end_sums(
    arena: &mut Arena,
    hooks: &[FormId],
    budget: &Budget,
) -> Result<Vec<FormId>, EngineError> {
    let (levels, _) = left_end_levels(arena, budget.max_birthday, budget.max_forms)?;
    // All hook multisets up to the summand bound, with their birthdays.
    let mut multis: Vec<(FormId, u32)> = vec![(arena.zero(), 0)];
    let mut frontier = vec![(arena.zero(), 0u32, 0usize)];
    for _ in 0..budget.max_summands {
        let mut next_frontier = Vec::new();
        for &(acc, acc_b, min_idx) in &frontier {
            for (idx, &h) in hooks.iter().enumerate().skip(min_idx) {
                let hb = arena.birthday(h);
                let s = sum(arena, acc, h)?;
                next_frontier.push((s, acc_b + hb, idx));
            }
        }
        multis.extend(next_frontier.iter().map(|&(s, b, _)| (s, b)));
        frontier = next_frontier;
    }

    let max_total = multis.iter().map(|&(_, b)| b).max().unwrap_or(0) + budget.max_birthday;
    let mut seen: FxHashSet<FormId> = FxHashSet::default();
    let mut out = Vec::new();
    'total: for total in 0..=max_total {
        for &(s, sb) in &multis {
            if sb > total {
                continue;
            }
            let residual = (total - sb) as usize;
            if residual >= levels.len() {
                continue;
            }
            for &l in &levels[residual] {
                if out.len() >= budget.max_forms {
                    break 'total;
                }
                let member = sum(arena, s, l)?;
                if seen.insert(member) {
                    out.push(member);
                }
            }
        }
    }
    Ok(out)
}

/// Is `f` a sum of `hat(k)` forms with `1 <= k <= max_part`? `None`
/// means the bounded search gave up. The test is exact when it
/// completes: a hat-sum's birthday is the sum of its part sizes, so
/// candidates are the partitions of `birthday(f)` into parts of size at
/// most `max_part`.
fn conforms_hat_sum(
    arena: &mut Arena,
    f: FormId,
    max_part: u32,
    budget: &Budget,
) -> Result<Option<bool>, EngineError> {
    if f == arena.zero() {
        return Ok(Some(true));
    }
    if arena.flag_bits(f) & flag::RIGHT_END == 0 {
        // Hat-sums are Right-atomic at every follower.
        return Ok(Some(false));
    }
    let mut work = 0u64;
    let cap = work_cap(budget);
    hat_partition_rec(
        arena,
        arena.zero(),
        0,
        1,
        max_part,
        arena.birthday(f),
        f,
        &mut work,
        cap,
    )
}

#[allow(clippy::too_many_arguments)]
fn hat_partition_rec(
    arena: &mut Arena,
    acc: FormId,
    acc_b: u32,
    min_part: u32,
    max_part: u32,
    target: u32,
    f: FormId,
    work: &mut u64,
    cap: u64,
) -> Result<Option<bool>, EngineError> {
    if acc_b == target {
        return Ok(Some(acc == f));
    }
    let mut undecided = false;
    for part in min_part..=max_part.min(target - acc_b) {
        *work += 1;
        if *work > cap {
            return Ok(None);
        }
        let h = hat(arena, part as i64)?;
        let next = sum(arena, acc, h)?;
        match hat_partition_rec(
            arena,
            next,
            acc_b + part,
            part,
            max_part,
            target,
            f,
            work,
            cap,
        )? {
            Some(true) => return Ok(Some(true)),
            None => undecided = true,
            Some(false) => {}
        }
    }
    Ok(if undecided { None } else { Some(false) })
}

/// Is the Left-atomic form `f` a sum of hooks plus a Left-end? `None`
/// when the bounded search gave up. Hook birthdays are fixed, so the
/// Left-end part must have birthday `birthday(f)` minus the multiset's
/// total, which prunes the search hard.
fn conforms_hook_sum(
    arena: &mut Arena,
    f: FormId,
    hooks: &[FormId],
    budget: &Budget,
) -> Result<Option<bool>, EngineError> {
    if arena.flag_bits(f) & flag::LEFT_END != 0 {
        return Ok(Some(true));
    }
    let target = arena.birthday(f);
    let (levels, levels_truncated) = left_end_levels(arena, target, budget.max_forms.max(1024))?;
    let complete_upto = if levels_truncated {
        levels.len().saturating_sub(1)
    } else {
        levels.len()
    };
    let mut work = 0u64;
    let cap = work_cap(budget);
    hook_rec(
        arena,
        arena.zero(),
        0,
        0,
        hooks,
        f,
        target,
        &levels,
        complete_upto,
        &mut work,
        cap,
    )
}

#[allow(clippy::too_many_arguments)]
fn hook_rec(
    arena: &mut Arena,
    acc: FormId,
    acc_b: u32,
    min_idx: usize,
    hooks: &[FormId],
    f: FormId,
    target: u32,
    levels: &[Vec<FormId>],
    complete_upto: usize,
    work: &mut u64,
    cap: u64,
) -> Result<Option<bool>, EngineError> {
    let mut undecided = false;
    if acc != arena.zero() {
        let residual = (target - acc_b) as usize;
        if residual < levels.len() {
            for &l in &levels[residual] {
                *work += 1;
                if *work > cap {
                    return Ok(None);
                }
                if sum(arena, acc, l)? == f {
                    return Ok(Some(true));
                }
            }
            if residual >= complete_upto {
                undecided = true;
            }
        } else {
            undecided = true;
        }
    }
    for idx in min_idx..hooks.len() {
        let hb = arena.birthday(hooks[idx]);
        if acc_b + hb > target {
            continue;
        }
        *work += 1;
        if *work > cap {
            return Ok(None);
        }
        let next = sum(arena, acc, hooks[idx])?;
        match hook_rec(
            arena,
            next,
            acc_b + hb,
            idx,
            hooks,
            f,
            target,
            levels,
            complete_upto,
            work,
            cap,
        )? {
            Some(true) => return Ok(Some(true)),
            None => undecided = true,
            Some(false) => {}
        }
    }
    Ok(if undecided { None } else { Some(false) })
}

fn work_cap(budget: &Budget) -> u64 {
    (budget.max_forms as u64).saturating_mul(8).max(1 << 14)
}
