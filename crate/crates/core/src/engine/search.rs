//! The local search behind [`super::Solver`].
//!
//! A [`Run`] owns the current partition and applies moves to it. Every move
//! goes through [`Run::apply`], which enforces the step budget and, when
//! tracing, records the potential on both sides of the move.

use std::fmt::Write as _;

use super::potential::{f_value, potential};
use super::trace::{CommitKind, CommitRecord, MoveKind, MoveRecord, Trace};
use super::{Partition, Potential, Problem, Stats};
use crate::error::{Error, Result};
use crate::heights::{critical_pair_unchecked, critical_unchecked};
use crate::vertex_set::VertexSet;

/// One step of a shuffle: vertex `vertex` left component `leftover ∪ {vertex}`
/// of part `part`, starting from partition `snapshot`.
#[derive(Clone, Debug)]
pub struct ShuffleRecord {
    pub part: usize,
    pub vertex: usize,
    pub leftover: VertexSet,
    pub snapshot: Partition,
}

/// The history of one shuffle, from the first critical vertex onward.
#[derive(Clone, Debug)]
pub struct ShuffleState {
    base: Potential,
    records: Vec<ShuffleRecord>,
}

impl ShuffleState {
    /// `base` is the potential every snapshot must share.
    pub fn new(base: Potential) -> Self {
        Self {
            base,
            records: Vec::new(),
        }
    }

    pub fn base(&self) -> Potential {
        self.base
    }

    pub fn push(&mut self, record: ShuffleRecord) {
        self.records.push(record);
    }

    pub fn records(&self) -> &[ShuffleRecord] {
        &self.records
    }

    /// Index of the step whose leftover was `set` in part `part`.
    pub fn find_repeat(&self, part: usize, set: &VertexSet) -> Option<usize> {
        self.records
            .iter()
            .rposition(|rec| rec.part == part && &rec.leftover == set)
    }

    /// Human-readable dump, 1-indexed like the user-facing formats.
    pub fn dump(&self) -> String {
        let mut out = format!("shuffle history (base potential {}):\n", self.base);
        for (j, rec) in self.records.iter().enumerate() {
            let leftover: Vec<_> = rec.leftover.iter().map(|v| v + 1).collect();
            let _ = writeln!(
                out,
                "  step {}: part {}, vertex {}, leftover {:?}, snapshot {:?}",
                j + 1,
                rec.part + 1,
                rec.vertex + 1,
                leftover,
                rec.snapshot
                    .to_lists()
                    .iter()
                    .map(|p| p.iter().map(|v| v + 1).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            );
        }
        out
    }
}

/// Parts `j != i` where `x` has at most `r_j` neighbors, best first: most
/// slack, then parts where `x` has a neighbor, then lowest index.
pub fn find_targets(problem: &Problem, partition: &Partition, x: usize, i: usize) -> Vec<usize> {
    let g = problem.graph();
    let mut targets: Vec<(i64, bool, usize)> = (0..problem.k())
        .filter(|&j| j != i)
        .filter_map(|j| {
            let d = g.degree_in(x, partition.part(j));
            let r = problem.budget(j);
            (d <= r).then_some((d as i64 - r as i64, d == 0, j))
        })
        .collect();
    targets.sort_unstable();
    targets.into_iter().map(|(_, _, j)| j).collect()
}

pub(crate) fn default_step_budget(problem: &Problem) -> usize {
    let g = problem.graph();
    let n = g.n();
    let r_sum = problem.budgets().iter().sum::<usize>();
    let inner = g
        .edge_count()
        .saturating_add(r_sum.saturating_mul(n))
        .saturating_add(n)
        .saturating_add(1);
    10usize
        .saturating_mul(n)
        .saturating_mul(n)
        .saturating_mul(inner)
}

pub(crate) struct Run<'a> {
    problem: &'a Problem,
    pub(crate) partition: Partition,
    last_commit: Partition,
    trace: Option<Trace>,
    budget: usize,
    pub(crate) stats: Stats,
}

impl<'a> Run<'a> {
    pub(crate) fn new(
        problem: &'a Problem,
        partition: Partition,
        budget: usize,
        record_trace: bool,
    ) -> Self {
        Self {
            problem,
            last_commit: partition.clone(),
            partition,
            trace: record_trace.then(Trace::default),
            budget,
            stats: Stats::default(),
        }
    }

    pub(crate) fn into_parts(self) -> (Partition, Option<Trace>, Stats) {
        (self.partition, self.trace, self.stats)
    }

    fn potential(&self) -> Potential {
        potential(self.problem, &self.partition)
    }

    /// Potential at the start of a transition, when tracing.
    fn begin(&self) -> Option<Potential> {
        self.trace.as_ref().map(|_| self.potential())
    }

    fn apply(&mut self, kind: MoveKind, v: usize, to: usize) -> Result<()> {
        if self.stats.moves >= self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                best: Box::new(self.last_commit.clone()),
            });
        }
        self.stats.moves += 1;
        let from = self.partition.part_of(v);
        if self.trace.is_some() {
            let before = self.potential();
            self.partition.move_vertex(v, to);
            let after = self.potential();
            if let Some(trace) = &mut self.trace {
                trace.moves.push(MoveRecord {
                    kind,
                    vertex: v,
                    from,
                    to,
                    before,
                    after,
                });
            }
        } else {
            self.partition.move_vertex(v, to);
        }
        Ok(())
    }

    fn commit(&mut self, kind: CommitKind, before: Option<Potential>) {
        self.stats.commits += 1;
        match kind {
            CommitKind::Isolation => self.stats.isolations += 1,
            CommitKind::Rearrange => self.stats.rearrangements += 1,
            _ => {}
        }
        self.last_commit = self.partition.clone();
        if let Some(before) = before {
            let after = self.potential();
            if let Some(trace) = &mut self.trace {
                trace.commits.push(CommitRecord {
                    kind,
                    before,
                    after,
                });
            }
        }
    }

    /// Moves vertices above their part's budget until none remain. Each move
    /// strictly lowers `f`.
    pub(crate) fn degree_fix(&mut self) -> Result<()> {
        let g = self.problem.graph();
        loop {
            let violating = (0..g.n()).find(|&v| {
                let i = self.partition.part_of(v);
                g.degree_in(v, self.partition.part(i)) > self.problem.budget(i)
            });
            let Some(x) = violating else {
                return Ok(());
            };
            let i = self.partition.part_of(x);
            let target = (0..self.problem.k())
                .filter(|&j| j != i)
                .map(|j| (g.degree_in(x, self.partition.part(j)), j))
                .filter(|&(d, j)| d <= self.problem.budget(j))
                .min();
            let Some((_, j)) = target else {
                return Err(Error::Hypothesis {
                    required: self.problem.lovasz_bound(),
                    actual: self.problem.budget_sum(),
                });
            };
            let before = self.begin();
            self.apply(MoveKind::DegreeFix, x, j)?;
            self.stats.degree_fix_moves += 1;
            self.commit(CommitKind::DegreeFix, before);
        }
    }

    /// The first component of positive height: lowest part, then smallest
    /// member.
    pub(crate) fn find_bad_component(&self) -> Option<(usize, VertexSet)> {
        let g = self.problem.graph();
        (0..self.problem.k()).find_map(|i| {
            let h = self.problem.height(i);
            if h.is_zero() {
                return None;
            }
            g.components(self.partition.part(i))
                .into_iter()
                .find(|d| h.value(g, d) > 0)
                .map(|d| (i, d))
        })
    }

    fn contract_error(&self, part: usize, property: u8, detail: String) -> Error {
        Error::HeightContract {
            name: self.problem.height(part).name().to_string(),
            property,
            detail,
        }
    }

    /// Shuffles critical vertices out of the bad component `first` of part
    /// `first_part` until some step improves the potential, then commits.
    ///
    /// Expects a degree-feasible partition.
    pub(crate) fn resolve(&mut self, first_part: usize, first: VertexSet) -> Result<()> {
        let problem = self.problem;
        let g = problem.graph();
        let base = self.potential();
        let commit_base = self.trace.as_ref().map(|_| base);
        let mut state = ShuffleState::new(base);

        let mut part = first_part;
        let mut comp = first;
        let mut previous: Option<usize> = None;
        loop {
            let h = problem.height(part);
            let r = problem.budget(part);
            let mut candidates = critical_unchecked(h, g, &comp, r);
            if let Some(p) = previous {
                candidates.retain(|&y| y != p && !g.has_edge(p, y));
            }
            let Some(&x) = candidates.last() else {
                let (property, detail) = match previous {
                    None => (
                        1,
                        format!("no critical vertex of degree >= {r} in {comp:?}"),
                    ),
                    Some(p) => (
                        3,
                        format!(
                            "no critical vertex of degree >= {r} outside the closed \
                             neighborhood of {p} in {comp:?}"
                        ),
                    ),
                };
                return Err(self.contract_error(part, property, detail));
            };
            let leftover = comp.without(x);
            let height_before = h.value(g, &comp);
            if h.value(g, &leftover) + 1 != height_before {
                return Err(self.contract_error(
                    part,
                    2,
                    format!("deleting critical vertex {x} from {comp:?} does not lower the height by one"),
                ));
            }
            state.push(ShuffleRecord {
                part,
                vertex: x,
                leftover,
                snapshot: self.partition.clone(),
            });
            self.stats.shuffle_steps += 1;

            let targets = find_targets(problem, &self.partition, x, part);
            let Some(&j) = targets.first() else {
                return Err(Error::Internal {
                    detail: format!("no target part for critical vertex {x}"),
                    history: state.dump(),
                });
            };
            let d = g.degree_in(x, self.partition.part(j));
            let rj = problem.budget(j);
            if d < rj {
                self.apply(MoveKind::Shuffle, x, j)?;
                self.commit(CommitKind::FDrop, commit_base);
                return Ok(());
            }
            if rj == 0 {
                // Every target is an empty-budget part with no neighbor of x.
                self.apply(MoveKind::Isolation, x, j)?;
                self.commit(CommitKind::Isolation, commit_base);
                return Ok(());
            }

            let neighbors = g.neighbors(x).intersection(self.partition.part(j));
            let overloaded = neighbors
                .iter()
                .find(|&y| g.degree_in(y, self.partition.part(j)) == rj);
            let touched: Vec<VertexSet> = g
                .components(self.partition.part(j))
                .into_iter()
                .filter(|c| c.intersects(&neighbors))
                .collect();
            self.apply(MoveKind::Shuffle, x, j)?;

            if let Some(y) = overloaded {
                let Some(&out) = find_targets(problem, &self.partition, y, j).first() else {
                    return Err(Error::Internal {
                        detail: format!("no target part for overloaded vertex {y}"),
                        history: state.dump(),
                    });
                };
                self.apply(MoveKind::Evict, y, out)?;
                self.commit(CommitKind::Overload, commit_base);
                return Ok(());
            }
            if touched.len() >= 2 {
                self.commit(CommitKind::Merge, commit_base);
                return Ok(());
            }
            let joined = &touched[0];
            let grown = joined.with(x);
            let hj = problem.height(j);
            let (joined_height, grown_height) = (hj.value(g, joined), hj.value(g, &grown));
            if grown_height <= joined_height {
                self.commit(CommitKind::HDrop, commit_base);
                return Ok(());
            }
            if grown_height > joined_height + 1 {
                return Err(self.contract_error(
                    j,
                    2,
                    format!("vertex {x} raised the height of {joined:?} by more than one"),
                ));
            }

            let now = self.potential();
            if now != base {
                return Err(Error::Internal {
                    detail: format!("shuffle step changed the potential from {base} to {now}"),
                    history: state.dump(),
                });
            }

            if let Some(s) = state.find_repeat(j, joined) {
                self.rearrange(&state, s)?;
                self.commit(CommitKind::Rearrange, commit_base);
                return Ok(());
            }
            part = j;
            comp = grown;
            previous = Some(x);
        }
    }

    /// Rewinds to the snapshot of step `s` and turns the repeat between step
    /// `s` and the last recorded step `t` into a strict `f` decrease.
    pub(crate) fn rearrange(&mut self, state: &ShuffleState, s: usize) -> Result<()> {
        let problem = self.problem;
        let g = problem.graph();
        let records = state.records();
        let t = records.len() - 1;
        let (at_s, at_t) = (&records[s], &records[t]);
        let fail = |detail: String| Error::Internal {
            detail,
            history: state.dump(),
        };
        if s >= t {
            return Err(fail(format!(
                "repeat at step {} is not before step {}",
                s + 1,
                t + 1
            )));
        }

        let i = at_s.part;
        let r = problem.budget(i);
        let (xs, xt) = (at_s.vertex, at_t.vertex);
        let q = at_s.leftover.with(xs).with(xt);
        if !g.is_connected_set(&q) {
            return Err(fail(format!("Q = {q:?} is not connected")));
        }
        if !critical_pair_unchecked(problem.height(i), g, &q, xs, xt) {
            return Err(fail(format!(
                "{{{xs}, {xt}}} is not a critical pair in {q:?}"
            )));
        }
        if g.degree_in(xs, &q.without(xt)) < r || g.degree_in(xt, &q.without(xs)) < r {
            return Err(fail(format!(
                "critical pair {{{xs}, {xt}}} has a member of degree below {r} in {q:?}"
            )));
        }
        let Some(z) = g
            .neighbors(xs)
            .intersection(g.neighbors(xt))
            .intersection(&q)
            .iter()
            .find(|&z| g.degree_in(z, &q) > r)
        else {
            return Err(self.contract_error(
                i,
                4,
                format!("no common neighbor of {xs} and {xt} with degree above {r} in {q:?}"),
            ));
        };

        let snapshot = &at_s.snapshot;
        let x_set: VertexSet = records[s + 1..t]
            .iter()
            .map(|rec| rec.vertex)
            .filter(|&v| snapshot.part_of(v) == i)
            .collect();
        if !g.is_independent_set(&x_set) {
            return Err(fail(format!("X = {x_set:?} is not independent")));
        }
        if x_set.contains(z) {
            return Err(fail(format!("z = {z} belongs to X = {x_set:?}")));
        }

        let f_start = f_value(problem, snapshot);
        self.partition = snapshot.clone();
        for x in &x_set {
            if g.degree_in(x, self.partition.part(i)) < r {
                return Err(fail(format!(
                    "member {x} of X has fewer than {r} neighbors in part {}",
                    i + 1
                )));
            }
            let Some(&to) = find_targets(problem, &self.partition, x, i).first() else {
                return Err(fail(format!("no target part for member {x} of X")));
            };
            self.apply(MoveKind::ClearX, x, to)?;
        }

        if self.partition.part_of(z) != i {
            return Err(fail(format!("z = {z} left part {} with X", i + 1)));
        }
        let home = self.partition.part_of(xt);
        if home == i {
            return Err(fail(format!("x_t = {xt} is already in part {}", i + 1)));
        }
        let d_in = g.degree_in(xt, self.partition.part(i));
        if d_in != r {
            return Err(fail(format!(
                "x_t = {xt} has {d_in} neighbors in part {}, expected exactly {r}",
                i + 1
            )));
        }
        if g.degree_in(xt, self.partition.part(home)) < problem.budget(home) {
            return Err(fail(format!(
                "x_t = {xt} has slack in its own part {}",
                home + 1
            )));
        }
        self.apply(MoveKind::Insert, xt, i)?;

        if g.degree_in(z, self.partition.part(i)) <= r {
            return Err(fail(format!(
                "z = {z} is not above budget {r} after inserting {xt}"
            )));
        }
        let Some(&to) = find_targets(problem, &self.partition, z, i).first() else {
            return Err(fail(format!("no target part for z = {z}")));
        };
        self.apply(MoveKind::EvictZ, z, to)?;

        let f_end = f_value(problem, &self.partition);
        if f_end >= f_start {
            return Err(fail(format!(
                "rearrangement did not lower f ({f_start} -> {f_end})"
            )));
        }
        Ok(())
    }
}
