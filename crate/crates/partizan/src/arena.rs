//! Hash-consed arena of game forms.
//!
//! Every structurally distinct form is stored exactly once: interning the
//! same pair of option sets always returns the same [`FormId`], so
//! structural equality of forms is id equality. Option sets are sorted and
//! deduplicated on the way in, ids are dense indices into the arena, and
//! derived data (birthday, structural flags, operation caches) hangs off
//! those indices.

use hashbrown::HashTable;
use rustc_hash::{FxHashMap, FxHashSet};
use std::hash::{Hash, Hasher};

use crate::error::EngineError;

/// Identifier of an interned form.
///
/// Two ids issued by the same arena are equal iff the forms are
/// structurally identical after recursive sorting and deduplication of
/// option sets. Ids from different arenas must not be mixed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FormId(u32);

impl FormId {
    /// The empty form `{|}`, interned at birth in every arena.
    pub const ZERO: FormId = FormId(0);

    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn raw(self) -> u32 {
        self.0
    }
}

/// Structural flag bits, synthesized bottom-up when a form is interned.
pub(crate) mod flag {
    pub const LEFT_ATOMIC: u8 = 1 << 0;
    pub const RIGHT_ATOMIC: u8 = 1 << 1;
    pub const LEFT_END: u8 = 1 << 2;
    pub const RIGHT_END: u8 = 1 << 3;
    pub const DICOT: u8 = 1 << 4;
    pub const DEAD_ENDING: u8 = 1 << 5;
}

#[derive(Clone, Copy)]
struct Span {
    left_start: u32,
    left_len: u32,
    right_start: u32,
    right_len: u32,
}

/// Append-only store of interned forms plus the memo tables used by the
/// operations defined on them.
///
/// The arena is the single mutable context for everything in this crate:
/// construction goes through `&mut Arena`, reads through `&Arena`. A
/// configurable node limit turns runaway computations into
/// [`EngineError::Capacity`] instead of unbounded allocation.
pub struct Arena {
    pool: Vec<FormId>,
    spans: Vec<Span>,
    birthdays: Vec<u32>,
    flags: Vec<u8>,
    index: HashTable<FormId>,
    limit: usize,
    pub(crate) sum_memo: FxHashMap<u64, FormId>,
    pub(crate) conjugate_memo: FxHashMap<FormId, FormId>,
    pub(crate) adjoint_memo: FxHashMap<FormId, FormId>,
    pub(crate) outcome_memo: Vec<u8>,
    pub(crate) geq_np_memo: FxHashMap<u64, bool>,
}

const DEFAULT_LIMIT: usize = 16_000_000;

impl Default for Arena {
    fn default() -> Self {
        Self::new()
    }
}

impl Arena {
    /// A fresh arena containing only the zero form `{|}`.
    pub fn new() -> Self {
        Self::with_limit(DEFAULT_LIMIT)
    }

    /// A fresh arena that refuses to hold more than `limit` forms.
    pub fn with_limit(limit: usize) -> Self {
        let mut arena = Arena {
            pool: Vec::new(),
            spans: Vec::new(),
            birthdays: Vec::new(),
            flags: Vec::new(),
            index: HashTable::new(),
            limit: limit.max(1),
            sum_memo: FxHashMap::default(),
            conjugate_memo: FxHashMap::default(),
            adjoint_memo: FxHashMap::default(),
            outcome_memo: Vec::new(),
            geq_np_memo: FxHashMap::default(),
        };
        arena
            .intern_sorted(&[], &[])
            .expect("interning the zero form cannot fail");
        arena
    }

    /// The zero form `{|}`.
    pub fn zero(&self) -> FormId {
        FormId::ZERO
    }

    /// Number of interned forms.
    pub fn len(&self) -> usize {
        self.spans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    /// The configured node limit.
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Checks that `id` was issued by this arena.
    pub fn check(&self, id: FormId) -> Result<(), EngineError> {
        if id.index() < self.spans.len() {
            Ok(())
        } else {
            Err(EngineError::UnknownId {
                id: id.raw(),
                len: self.spans.len(),
            })
        }
    }

    /// Left options of `id`, sorted by id.
    pub fn left(&self, id: FormId) -> &[FormId] {
        let s = self.spans[id.index()];
        &self.pool[s.left_start as usize..(s.left_start + s.left_len) as usize]
    }

    /// Right options of `id`, sorted by id.
    pub fn right(&self, id: FormId) -> &[FormId] {
        let s = self.spans[id.index()];
        &self.pool[s.right_start as usize..(s.right_start + s.right_len) as usize]
    }

    /// Formal birth day: 0 for the zero form, otherwise one more than the
    /// largest birthday among the options.
    pub fn birthday(&self, id: FormId) -> u32 {
        self.birthdays[id.index()]
    }

    pub(crate) fn flag_bits(&self, id: FormId) -> u8 {
        self.flags[id.index()]
    }

    /// Interns the form with the given option sets, sorting and
    /// deduplicating them first. Returns the existing id when the same
    /// form was interned before.
    pub fn intern(&mut self, left: &[FormId], right: &[FormId]) -> Result<FormId, EngineError> {
        for &o in left.iter().chain(right) {
            self.check(o)?;
        }
        let mut l: Vec<FormId> = left.to_vec();
        let mut r: Vec<FormId> = right.to_vec();
        l.sort_unstable();
        l.dedup();
        r.sort_unstable();
        r.dedup();
        self.intern_sorted(&l, &r)
    }

    /// Interning fast path for option lists that are already sorted,
    /// deduplicated and known to be valid.
    pub(crate) fn intern_sorted(
        &mut self,
        left: &[FormId],
        right: &[FormId],
    ) -> Result<FormId, EngineError> {
        debug_assert!(left.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(right.windows(2).all(|w| w[0] < w[1]));
        let hash = node_hash(left, right);
        let pool = &self.pool;
        let spans = &self.spans;
        if let Some(&id) = self.index.find(hash, |&cand| {
            let s = spans[cand.index()];
            let cl = &pool[s.left_start as usize..(s.left_start + s.left_len) as usize];
            let cr = &pool[s.right_start as usize..(s.right_start + s.right_len) as usize];
            cl == left && cr == right
        }) {
            return Ok(id);
        }
        if self.spans.len() >= self.limit {
            return Err(EngineError::Capacity { limit: self.limit });
        }

        let id = FormId(self.spans.len() as u32);
        let left_start = self.pool.len() as u32;
        self.pool.extend_from_slice(left);
        let right_start = self.pool.len() as u32;
        self.pool.extend_from_slice(right);
        self.spans.push(Span {
            left_start,
            left_len: left.len() as u32,
            right_start,
            right_len: right.len() as u32,
        });

        let mut birthday = 0;
        let mut bits = 0u8;
        let la = left.is_empty();
        let ra = right.is_empty();
        let mut left_end = la;
        let mut right_end = ra;
        let mut children_dicot = true;
        let mut children_de = true;
        for &o in left.iter().chain(right) {
            birthday = birthday.max(self.birthdays[o.index()] + 1);
            let f = self.flags[o.index()];
            children_dicot &= f & flag::DICOT != 0;
            children_de &= f & flag::DEAD_ENDING != 0;
        }
        for &o in right {
            left_end &= self.flags[o.index()] & flag::LEFT_END != 0;
        }
        for &o in left {
            right_end &= self.flags[o.index()] & flag::RIGHT_END != 0;
        }
        if la {
            bits |= flag::LEFT_ATOMIC;
        }
        if ra {
            bits |= flag::RIGHT_ATOMIC;
        }
        if left_end {
            bits |= flag::LEFT_END;
        }
        if right_end {
            bits |= flag::RIGHT_END;
        }
        if la == ra && children_dicot {
            bits |= flag::DICOT;
        }
        if children_de && (!la || left_end) && (!ra || right_end) {
            bits |= flag::DEAD_ENDING;
        }
        self.birthdays.push(birthday);
        self.flags.push(bits);

        let pool = &self.pool;
        let spans = &self.spans;
        self.index.insert_unique(hash, id, |&cand| {
            let s = spans[cand.index()];
            let cl = &pool[s.left_start as usize..(s.left_start + s.left_len) as usize];
            let cr = &pool[s.right_start as usize..(s.right_start + s.right_len) as usize];
            node_hash(cl, cr)
        });
        Ok(id)
    }

    /// `id` together with every position reachable by any sequence of
    /// moves, sorted by id.
    pub fn followers(&self, id: FormId) -> Vec<FormId> {
        let mut seen = FxHashSet::default();
        let mut stack = vec![id];
        while let Some(g) = stack.pop() {
            if seen.insert(g) {
                stack.extend_from_slice(self.left(g));
                stack.extend_from_slice(self.right(g));
            }
        }
        let mut out: Vec<FormId> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }
}

fn node_hash(left: &[FormId], right: &[FormId]) -> u64 {
    let mut h = rustc_hash::FxHasher::default();
    left.len().hash(&mut h);
    for &o in left {
        o.raw().hash(&mut h);
    }
    for &o in right {
        o.raw().hash(&mut h);
    }
    h.finish()
}

/// Packs an ordered pair of ids into a memo key.
pub(crate) fn ordered_key(a: FormId, b: FormId) -> u64 {
    ((a.raw() as u64) << 32) | b.raw() as u64
}

/// Packs an unordered pair of ids into a memo key.
pub(crate) fn unordered_key(a: FormId, b: FormId) -> u64 {
    if a <= b {
        ordered_key(a, b)
    } else {
        ordered_key(b, a)
    }
}
