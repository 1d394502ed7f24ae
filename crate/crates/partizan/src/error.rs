//! Error types shared across the engine.

/// Errors produced by the arena, the family constructors, the universe
/// machinery and the comparison engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    /// A form id that was never issued by the arena it was used with.
    #[error("unknown form id {id} (arena holds {len} forms)")]
    UnknownId { id: u32, len: usize },

    /// The arena refused to intern a new form because its node limit was
    /// reached.
    #[error("arena capacity exceeded ({limit} forms)")]
    Capacity { limit: usize },

    /// A constructor, universe or budget was given parameters outside its
    /// domain.
    #[error("{0}")]
    Domain(String),

    /// A closure base contained a form with an option outside the base.
    #[error("base set is not hereditary closed: {form} has option {option} outside the base")]
    NotHereditary { form: String, option: String },

    /// A comparison was requested for a form that is provably outside the
    /// universe it was to be compared in.
    #[error("{form} is not a member of {universe}")]
    NotMember { form: String, universe: String },
}

impl EngineError {
    /// True when the error signals resource exhaustion rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, EngineError::Capacity { .. })
    }
}

/// Convenience constructor for [`EngineError::Domain`].
pub(crate) fn domain(msg: impl Into<String>) -> EngineError {
    EngineError::Domain(msg.into())
}
