//! Potential-descent partitioning.
//!
//! [`partition_main`] alternates two phases until neither applies:
//!
//! 1. [`degree_fix`]: any vertex with more than `r_i` neighbors in its part
//!    `V_i` moves to a part where it has at most `r_j` neighbors, which lowers
//!    `f`. The budget hypothesis guarantees such a part exists.
//! 2. [`resolve_bad_component`]: a component of positive height is broken up
//!    by a shuffle of critical vertices, which ends in a committed
//!    improvement of the potential.
//!
//! [`partition_lovasz`] runs phase 1 alone under the weaker bound
//! `Σ r_i >= Δ(G) + 1 - k`.

mod partition;
mod potential;
mod problem;
mod search;
mod trace;

pub use partition::Partition;
pub use potential::{potential, Potential};
pub use problem::Problem;
pub use search::{find_targets, ShuffleRecord, ShuffleState};
pub use trace::{CommitKind, CommitRecord, MoveKind, MoveRecord, Trace};

use search::{default_step_budget, Run};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Counters collected over one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Every vertex move, including shuffle moves later rewound.
    pub moves: usize,
    pub degree_fix_moves: usize,
    pub commits: usize,
    pub shuffle_steps: usize,
    pub isolations: usize,
    pub rearrangements: usize,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub partition: Partition,
    pub trace: Option<Trace>,
    pub stats: Stats,
}

/// Configures and runs the partitioners.
///
/// ```
/// use hpart::{Graph, Partition, Problem, Solver};
///
/// let problem = Problem::with_builtin_heights(Graph::cycle(5), vec![2, 0]);
/// let outcome = Solver::new(&problem)
///     .initial(Partition::all_in(5, 2, 0).unwrap())
///     .record_trace(true)
///     .run_main()
///     .unwrap();
/// assert_eq!(outcome.stats.isolations, 1);
/// ```
pub struct Solver<'a> {
    problem: &'a Problem,
    initial: Option<Partition>,
    step_budget: Option<usize>,
    record_trace: bool,
}

impl<'a> Solver<'a> {
    pub fn new(problem: &'a Problem) -> Self {
        Self {
            problem,
            initial: None,
            step_budget: None,
            record_trace: false,
        }
    }

    /// Starting partition; round-robin (`v mod k`) when unset.
    pub fn initial(mut self, partition: Partition) -> Self {
        self.initial = Some(partition);
        self
    }

    /// Maximum number of vertex moves. Defaults to
    /// `10 n² (|E| + n Σ r_i + n + 1)`.
    pub fn step_budget(mut self, budget: usize) -> Self {
        self.step_budget = Some(budget);
        self
    }

    pub fn record_trace(mut self, on: bool) -> Self {
        self.record_trace = on;
        self
    }

    /// The default value of [`Solver::step_budget`] for `problem`.
    pub fn default_step_budget(problem: &Problem) -> usize {
        default_step_budget(problem)
    }

    fn start(&self) -> Result<Run<'a>> {
        let n = self.problem.graph().n();
        let k = self.problem.k();
        let partition = match &self.initial {
            Some(p) if p.n() != n || p.k() != k => {
                return Err(Error::Contract(format!(
                    "initial partition has {} vertices in {} parts, expected {n} in {k}",
                    p.n(),
                    p.k()
                )))
            }
            Some(p) => p.clone(),
            None => Partition::round_robin(n, k),
        };
        let budget = self
            .step_budget
            .unwrap_or_else(|| default_step_budget(self.problem));
        Ok(Run::new(self.problem, partition, budget, self.record_trace))
    }

    fn finish(run: Run<'_>) -> Outcome {
        let (partition, trace, stats) = run.into_parts();
        Outcome {
            partition,
            trace,
            stats,
        }
    }

    /// Partition with `Δ(G[V_i]) <= r_i` and `h_i(D) = 0` for every component
    /// `D` of every `G[V_i]`. Requires `Σ r_i >= Δ(G) + 2 - k`.
    pub fn run_main(&self) -> Result<Outcome> {
        let mut run = self.start()?;
        if self.problem.graph().n() == 0 {
            return Ok(Self::finish(run));
        }
        self.problem.check_main_hypothesis()?;
        loop {
            run.degree_fix()?;
            match run.find_bad_component() {
                None => break,
                Some((part, comp)) => run.resolve(part, comp)?,
            }
        }
        Ok(Self::finish(run))
    }

    /// Partition with `Δ(G[V_i]) <= r_i`. Requires `Σ r_i >= Δ(G) + 1 - k`.
    pub fn run_lovasz(&self) -> Result<Outcome> {
        let mut run = self.start()?;
        if self.problem.graph().n() == 0 {
            return Ok(Self::finish(run));
        }
        self.problem.check_lovasz_hypothesis()?;
        run.degree_fix()?;
        Ok(Self::finish(run))
    }
}

pub fn partition_main(problem: &Problem) -> Result<Partition> {
    Solver::new(problem).run_main().map(|o| o.partition)
}

pub fn partition_lovasz(problem: &Problem) -> Result<Partition> {
    Solver::new(problem).run_lovasz().map(|o| o.partition)
}

fn check_shape(problem: &Problem, partition: &Partition) -> Result<()> {
    if partition.n() != problem.graph().n() || partition.k() != problem.k() {
        return Err(Error::Contract(format!(
            "partition has {} vertices in {} parts, expected {} in {}",
            partition.n(),
            partition.k(),
            problem.graph().n(),
            problem.k()
        )));
    }
    Ok(())
}

/// Moves over-budget vertices (lowest id first, to the part where they have
/// the fewest neighbors) until every part respects its budget.
pub fn degree_fix(problem: &Problem, partition: &Partition) -> Result<Partition> {
    check_shape(problem, partition)?;
    let mut run = Run::new(
        problem,
        partition.clone(),
        default_step_budget(problem),
        false,
    );
    run.degree_fix()?;
    Ok(run.into_parts().0)
}

/// Runs one shuffle from the bad component `component` of part `part` and
/// returns the committed partition, whose potential is lexicographically
/// smaller than that of `partition`, or trades one unit of `c` for one unit
/// of `h` via an isolation move.
pub fn resolve_bad_component(
    problem: &Problem,
    partition: &Partition,
    part: usize,
    component: &VertexSet,
) -> Result<Partition> {
    check_shape(problem, partition)?;
    let g = problem.graph();
    let is_component = part < problem.k()
        && component.is_subset(partition.part(part))
        && g.is_connected_set(component)
        && component.iter().all(|v| {
            g.neighbors(v)
                .intersection(partition.part(part))
                .is_subset(component)
        });
    if !is_component {
        return Err(Error::Contract(format!(
            "{component:?} is not a component of part {part}"
        )));
    }
    if problem.height(part).value(g, component) == 0 {
        return Err(Error::Contract(format!(
            "component {component:?} already has height zero"
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| {
        let i = partition.part_of(v);
        g.degree_in(v, partition.part(i)) > problem.budget(i)
    }) {
        return Err(Error::Contract(format!(
            "partition is not degree-feasible at vertex {v}"
        )));
    }
    let mut run = Run::new(
        problem,
        partition.clone(),
        default_step_budget(problem),
        false,
    );
    run.resolve(part, component.clone())?;
    Ok(run.into_parts().0)
}

/// Rearranges the snapshot of step `s` of `state`, whose last record must
/// repeat the leftover of step `s`. The result has `f` strictly below the
/// snapshot's.
pub fn rearrange(problem: &Problem, state: &ShuffleState, s: usize) -> Result<Partition> {
    let start = state
        .records()
        .get(s)
        .ok_or_else(|| Error::Contract(format!("no shuffle step {s}")))?
        .snapshot
        .clone();
    check_shape(problem, &start)?;
    let mut run = Run::new(problem, start, default_step_budget(problem), false);
    run.rearrange(state, s)?;
    Ok(run.into_parts().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::heights::HeightFunction;
    use crate::verify::verify_partition;

    fn c5_problem() -> Problem {
        Problem::new(
            Graph::cycle(5),
            vec![2, 0],
            vec![
                HeightFunction::noncomplete_regular(2).unwrap(),
                HeightFunction::zero(0),
            ],
        )
        .unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_slice(vs)
    }

    #[test]
    fn degree_fix_k4() {
        let problem = Problem::with_zero_heights(Graph::complete(4), vec![2, 1]);
        let start = Partition::all_in(4, 2, 0).unwrap();
        let fixed = degree_fix(&problem, &start).unwrap();
        assert_eq!(fixed.to_lists(), vec![vec![1, 2, 3], vec![0]]);
        assert_eq!(potential(&problem, &start).f, -2);
        assert_eq!(potential(&problem, &fixed).f, -4);
    }

    #[test]
    fn degree_fix_fixpoints() {
        let problem = c5_problem();
        let start = Partition::all_in(5, 2, 0).unwrap();
        assert_eq!(degree_fix(&problem, &start).unwrap(), start);
        let feasible = Partition::from_parts(5, &[vec![0, 1, 2, 3], vec![4]]).unwrap();
        assert_eq!(degree_fix(&problem, &feasible).unwrap(), feasible);
    }

    #[test]
    fn degree_fix_reports_missing_target() {
        let problem = Problem::with_zero_heights(Graph::complete(3), vec![0, 0]);
        let start = Partition::all_in(3, 2, 0).unwrap();
        assert!(matches!(
            degree_fix(&problem, &start),
            Err(Error::Hypothesis { .. })
        ));
    }

    #[test]
    fn find_targets_examples() {
        let problem = c5_problem();
        let p = Partition::all_in(5, 2, 0).unwrap();
        assert_eq!(find_targets(&problem, &p, 0, 0), vec![1]);

        let problem = Problem::with_zero_heights(Graph::complete(4), vec![2, 1]);
        let p = Partition::from_parts(4, &[vec![1, 2, 3], vec![0]]).unwrap();
        assert_eq!(find_targets(&problem, &p, 1, 0), vec![1]);

        let problem = Problem::with_zero_heights(Graph::complete(4), vec![3]);
        let p = Partition::all_in(4, 1, 0).unwrap();
        assert!(find_targets(&problem, &p, 1, 0).is_empty());
    }

    #[test]
    fn find_targets_prefers_slack_then_neighbors() {
        // Vertex 0 of a star with three leaves, each leaf in its own part.
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let problem = Problem::with_zero_heights(g, vec![0, 1, 2, 0]);
        let p = Partition::from_parts(4, &[vec![0], vec![1], vec![2], vec![3]]).unwrap();
        // Index 2 has slack, index 1 is tight, index 3 would go over its
        // zero budget.
        assert_eq!(find_targets(&problem, &p, 0, 0), vec![2, 1]);
    }

    #[test]
    fn resolve_c5_isolates_one_vertex() {
        let problem = c5_problem();
        let start = Partition::all_in(5, 2, 0).unwrap();
        let out = resolve_bad_component(&problem, &start, 0, &set(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(out.to_lists(), vec![vec![0, 1, 2, 3], vec![4]]);
        assert_eq!(potential(&problem, &out).h, 0);
        assert!(verify_partition(&problem, &out).is_ok());
    }

    #[test]
    fn resolve_rejects_non_components() {
        let problem = c5_problem();
        let start = Partition::all_in(5, 2, 0).unwrap();
        assert!(resolve_bad_component(&problem, &start, 0, &set(&[0, 1])).is_err());
        let fine = Partition::from_parts(5, &[vec![0, 1, 2, 3], vec![4]]).unwrap();
        assert!(resolve_bad_component(&problem, &fine, 0, &set(&[0, 1, 2, 3])).is_err());
    }

    #[test]
    fn resolve_two_squares() {
        let g = Graph::cycle(4).disjoint_union(&Graph::cycle(4));
        let problem = Problem::with_builtin_heights(g, vec![2, 2]);
        let start = Partition::from_parts(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).unwrap();
        let before = potential(&problem, &start);
        let out = resolve_bad_component(&problem, &start, 0, &set(&[0, 1, 2, 3])).unwrap();
        assert!(potential(&problem, &out) < before);

        let full = Solver::new(&problem).initial(start).run_main().unwrap();
        assert!(verify_partition(&problem, &full.partition).is_ok());
    }

    #[test]
    fn main_examples() {
        let problem = c5_problem();
        let out = partition_main(&problem).unwrap();
        assert!(verify_partition(&problem, &out).is_ok());
        assert!(out.part(0).len() <= 4);

        let petersen = Problem::with_zero_heights(Graph::petersen(), vec![1, 1, 1]);
        let out = partition_main(&petersen).unwrap();
        let g = petersen.graph();
        assert!((0..3).all(|i| g.max_degree_in(out.part(i)) <= 1));

        let k1 = Problem::with_zero_heights(Graph::empty(1), vec![1]);
        assert_eq!(partition_main(&k1).unwrap().to_lists(), vec![vec![0]]);
    }

    #[test]
    fn main_rejects_small_budgets() {
        let problem = Problem::with_zero_heights(Graph::cycle(5), vec![0, 0]);
        assert!(matches!(
            partition_main(&problem),
            Err(Error::Hypothesis {
                required: 2,
                actual: 0
            })
        ));
        // Δ + 2 - k = 1 for a single vertex in a single part.
        let k1 = Problem::with_zero_heights(Graph::empty(1), vec![0]);
        assert!(partition_main(&k1).is_err());
    }

    #[test]
    fn empty_graph_gives_empty_parts() {
        let problem = Problem::with_zero_heights(Graph::empty(0), vec![0, 0, 0]);
        let out = partition_main(&problem).unwrap();
        assert_eq!(out.to_lists(), vec![Vec::<usize>::new(); 3]);
        assert_eq!(partition_lovasz(&problem).unwrap().k(), 3);
    }

    #[test]
    fn lovasz_examples() {
        let k3 = Problem::with_zero_heights(Graph::complete(3), vec![1, 0]);
        let out = partition_lovasz(&k3).unwrap();
        let g = k3.graph();
        assert!(g.max_degree_in(out.part(0)) <= 1);
        assert!(g.is_independent_set(out.part(1)));

        let c5 = Problem::with_zero_heights(Graph::cycle(5), vec![1, 1]);
        let out = partition_lovasz(&c5).unwrap();
        assert!((0..2).all(|i| c5.graph().max_degree_in(out.part(i)) <= 1));

        let edgeless = Problem::with_zero_heights(Graph::empty(6), vec![0, 0, 0]);
        let outcome = Solver::new(&edgeless).run_lovasz().unwrap();
        assert_eq!(outcome.partition, Partition::round_robin(6, 3));
        assert_eq!(outcome.stats.moves, 0);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let problem = Problem::with_zero_heights(Graph::complete(4), vec![2, 1]);
        let err = Solver::new(&problem)
            .initial(Partition::all_in(4, 2, 0).unwrap())
            .step_budget(0)
            .run_main()
            .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 0, .. }));
    }

    #[test]
    fn invalid_height_surfaces_as_contract_error() {
        // Height 1 on the triangle only, which fails property 3. Vertex 2
        // leaves the triangle {0, 1, 2} and closes a new triangle with the
        // edge {3, 4}; no critical vertex there avoids N[2].
        let tri = HeightFunction::custom("triangle", 2, |g: &Graph, d: &VertexSet| {
            u64::from(d.len() == 3 && g.is_complete_set(d))
        });
        let g =
            Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let problem = Problem::new(g, vec![2, 2], vec![tri.clone(), tri]).unwrap();
        let start = Partition::from_parts(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        let err = Solver::new(&problem).initial(start).run_main().unwrap_err();
        assert!(
            matches!(err, Error::HeightContract { property: 3, .. }),
            "{err}"
        );
    }
}
