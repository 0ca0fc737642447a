use std::fmt;

use super::{Partition, Problem};

/// The lexicographic key `(f, c, h)` minimized by the search.
///
/// * `f = Σ_i (|E(G[V_i])| - r_i |V_i|)`
/// * `c = Σ_i c(G[V_i])`, the total number of components over all parts
/// * `h = Σ_i h_i(G[V_i])`
///
/// Field order matters: the derived `Ord` is the lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Potential {
    pub f: i64,
    pub c: usize,
    pub h: u64,
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(f={}, c={}, h={})", self.f, self.c, self.h)
    }
}

pub fn potential(problem: &Problem, partition: &Partition) -> Potential {
    let g = problem.graph();
    let mut out = Potential { f: 0, c: 0, h: 0 };
    for (i, part) in partition.parts().iter().enumerate() {
        out.f += g.edge_count_in(part) as i64 - (problem.budget(i) * part.len()) as i64;
        let height = problem.height(i);
        for comp in g.components(part) {
            out.c += 1;
            out.h += height.value(g, &comp);
        }
    }
    out
}

/// Only the `f` component; cheaper than [`potential`].
pub(crate) fn f_value(problem: &Problem, partition: &Partition) -> i64 {
    let g = problem.graph();
    partition
        .parts()
        .iter()
        .enumerate()
        .map(|(i, part)| g.edge_count_in(part) as i64 - (problem.budget(i) * part.len()) as i64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Graph, HeightFunction};

    #[test]
    fn c4_split_into_edges() {
        let problem = Problem::with_zero_heights(Graph::cycle(4), vec![1, 1]);
        let p = Partition::from_parts(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(potential(&problem, &p), Potential { f: -2, c: 2, h: 0 });
    }

    #[test]
    fn c5_all_in_first_part() {
        let problem = Problem::new(
            Graph::cycle(5),
            vec![2, 0],
            vec![
                HeightFunction::noncomplete_regular(2).unwrap(),
                HeightFunction::zero(0),
            ],
        )
        .unwrap();
        let p = Partition::all_in(5, 2, 0).unwrap();
        assert_eq!(potential(&problem, &p), Potential { f: -5, c: 1, h: 1 });
        assert_eq!(f_value(&problem, &p), -5);
    }

    #[test]
    fn empty_graph() {
        let problem = Problem::with_zero_heights(Graph::empty(0), vec![3, 1]);
        let p = Partition::round_robin(0, 2);
        assert_eq!(potential(&problem, &p), Potential { f: 0, c: 0, h: 0 });
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a = Potential { f: -3, c: 9, h: 9 };
        let b = Potential { f: -2, c: 0, h: 0 };
        let c = Potential { f: -2, c: 0, h: 1 };
        assert!(a < b && b < c);
    }
}
