use super::Potential;

/// Why a vertex moved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// A vertex above its part's budget moved to a part where it fits.
    DegreeFix,
    /// A critical vertex moved during a shuffle.
    Shuffle,
    /// A critical vertex moved into a budget-0 part where it has no neighbors.
    Isolation,
    /// A resident pushed over its budget by an arrival was moved out.
    Evict,
    /// Rearrangement: a member of the set `X` left the repeated part.
    ClearX,
    /// Rearrangement: the last shuffled vertex entered the repeated part.
    Insert,
    /// Rearrangement: the common neighbor `z` left the repeated part.
    EvictZ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub vertex: usize,
    pub from: usize,
    pub to: usize,
    pub before: Potential,
    pub after: Potential,
}

/// How a committed transition improved (or, for isolation, traded) the
/// potential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommitKind {
    DegreeFix,
    /// A shuffled vertex found a part where it has slack: `f` fell.
    FDrop,
    /// A shuffled vertex overloaded a resident, which was evicted: `f` fell.
    Overload,
    /// A shuffled vertex joined two or more components: `c` fell.
    Merge,
    /// A shuffled vertex did not raise the height of its new component: `h` fell.
    HDrop,
    /// `f` unchanged, `c` up by one, `h` down by one.
    Isolation,
    /// A repeated leftover was turned into a strict `f` decrease.
    Rearrange,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CommitRecord {
    pub kind: CommitKind,
    pub before: Potential,
    pub after: Potential,
}

/// Per-move and per-commit log of a run.
///
/// Moves made during a shuffle that is later rewound to an earlier snapshot
/// stay in the log; every shuffle step preserves the potential, so the
/// `before` of the first rearrangement move equals the `after` of the last
/// shuffle move.
#[derive(Clone, Debug, Default)]
pub struct Trace {
    pub moves: Vec<MoveRecord>,
    pub commits: Vec<CommitRecord>,
}
