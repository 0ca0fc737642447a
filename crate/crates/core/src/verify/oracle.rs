use crate::engine::{Partition, Problem};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

use super::validate::verify_partition;

/// Largest `k^n` [`brute_force_exists`] will search.
pub const DEFAULT_ASSIGNMENT_CAP: u128 = 10_000_000;

/// The lexicographically first assignment (vertex 0 most significant, parts
/// in index order) that passes [`verify_partition`], or `None`.
pub fn brute_force_exists(problem: &Problem) -> Result<Option<Partition>> {
    brute_force_exists_capped(problem, DEFAULT_ASSIGNMENT_CAP)
}

pub fn brute_force_exists_capped(problem: &Problem, cap: u128) -> Result<Option<Partition>> {
    let n = problem.graph().n();
    let k = problem.k();
    let space = u32::try_from(n)
        .ok()
        .and_then(|n| (k as u128).checked_pow(n));
    match space {
        Some(space) if space <= cap => {}
        _ => {
            return Err(Error::Size(format!(
                "{k}^{n} assignments exceed the search cap of {cap}"
            )))
        }
    }
    let mut search = Search {
        problem,
        assign: vec![0; n],
        parts: vec![VertexSet::new(); k],
        inner_degree: vec![0; n],
    };
    Ok(search.descend(0))
}

/// Depth-first search over assignments in lexicographic order. Induced
/// degrees only grow as vertices are added, so a prefix that already breaks a
/// budget cannot be completed and is skipped; heights are checked on full
/// assignments only.
struct Search<'a> {
    problem: &'a Problem,
    assign: Vec<usize>,
    parts: Vec<VertexSet>,
    inner_degree: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, v: usize) -> Option<Partition> {
        let g = self.problem.graph();
        if v == g.n() {
            let candidate = Partition::new(self.problem.k(), self.assign.clone()).ok()?;
            return verify_partition(self.problem, &candidate)
                .is_ok()
                .then_some(candidate);
        }
        for j in 0..self.problem.k() {
            let r = self.problem.budget(j);
            let neighbors = g.neighbors(v).intersection(&self.parts[j]);
            if neighbors.len() > r || neighbors.iter().any(|u| self.inner_degree[u] >= r) {
                continue;
            }
            for u in &neighbors {
                self.inner_degree[u] += 1;
            }
            self.inner_degree[v] = neighbors.len();
            self.parts[j].insert(v);
            self.assign[v] = j;
            if let Some(found) = self.descend(v + 1) {
                return Some(found);
            }
            self.parts[j].remove(v);
            for u in &neighbors {
                self.inner_degree[u] -= 1;
            }
        }
        None
    }
}
