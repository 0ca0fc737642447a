use rayon::prelude::*;

use super::enumerate::{connected_graphs_up_to_isomorphism, enumerate_connected_graphs};
use crate::error::Result;
use crate::graph::Graph;
use crate::heights::{critical_pair_unchecked, is_critical_in, HeightFunction};

/// A graph on which a height function breaks one of its four properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    /// 1 to 4.
    pub property: u8,
    pub witness: Graph,
    /// Property 1: empty. Properties 2 and 3: the critical vertex `x`.
    /// Property 4: the critical pair `x, y`.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// Failures at the smallest vertex count where any occurred.
    pub failures: Vec<AxiomFailure>,
    pub graphs_checked: usize,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AxiomOptions {
    pub n_max: usize,
    /// Check one graph per isomorphism class instead of every labeled graph.
    pub up_to_isomorphism: bool,
    pub parallel: bool,
    /// Failures kept in the report.
    pub max_failures: usize,
}

impl AxiomOptions {
    pub fn new(n_max: usize) -> Self {
        Self {
            n_max,
            up_to_isomorphism: false,
            parallel: false,
            max_failures: 16,
        }
    }
}

/// Exhaustively checks properties 1 to 4 for `h` with budget `r` on every
/// connected labeled graph with at most `n_max` vertices.
pub fn check_height_properties(h: &HeightFunction, r: usize, n_max: usize) -> Result<AxiomReport> {
    check_height_properties_with(h, r, &AxiomOptions::new(n_max))
}

pub fn check_height_properties_with(
    h: &HeightFunction,
    r: usize,
    options: &AxiomOptions,
) -> Result<AxiomReport> {
    let mut report = AxiomReport::default();
    for n in 1..=options.n_max {
        let (failures, checked) = if options.up_to_isomorphism {
            let graphs = connected_graphs_up_to_isomorphism(n)?;
            let failures: Vec<_> = graphs
                .iter()
                .flat_map(|g| check_graph_properties(h, r, g))
                .collect();
            (failures, graphs.len())
        } else if options.parallel {
            let all = enumerate_connected_graphs(n)?;
            let total = all.mask_count();
            let chunk = 1u64 << 12;
            let shards: Vec<(Vec<AxiomFailure>, usize)> = (0..total.div_ceil(chunk))
                .into_par_iter()
                .map(|i| {
                    let mut count = 0;
                    let mut failures = Vec::new();
                    for g in all.clone().range(i * chunk, (i + 1) * chunk) {
                        count += 1;
                        failures.extend(check_graph_properties(h, r, &g));
                    }
                    (failures, count)
                })
                .collect();
            shards
                .into_iter()
                .fold((Vec::new(), 0), |(mut f, c), (sf, sc)| {
                    f.extend(sf);
                    (f, c + sc)
                })
        } else {
            let mut count = 0;
            let mut failures = Vec::new();
            for g in enumerate_connected_graphs(n)? {
                count += 1;
                failures.extend(check_graph_properties(h, r, &g));
            }
            (failures, count)
        };
        report.graphs_checked += checked;
        if !failures.is_empty() {
            report.failures = failures;
            report.failures.truncate(options.max_failures);
            break;
        }
    }
    Ok(report)
}

/// Properties 1 to 4 on a single connected graph.
pub fn check_graph_properties(h: &HeightFunction, r: usize, g: &Graph) -> Vec<AxiomFailure> {
    let mut failures = Vec::new();
    if h.is_zero() {
        return failures;
    }
    let fail = |property: u8, vertices: Vec<usize>| AxiomFailure {
        property,
        witness: g.clone(),
        vertices,
    };
    let all = g.vertices();
    let height = h.value(g, &all);
    let strong: Vec<usize> = (0..g.n())
        .filter(|&x| g.degree(x) >= r && is_critical_in(h, g, &all, height, x))
        .collect();

    if height > 0 && strong.is_empty() {
        failures.push(fail(1, Vec::new()));
    }
    for &x in &strong {
        if h.value(g, &all.without(x)) + 1 != height {
            failures.push(fail(2, vec![x]));
        }
    }
    for &x in &strong {
        if !strong.iter().any(|&y| y != x && !g.has_edge(x, y)) {
            failures.push(fail(3, vec![x]));
        }
    }
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if !critical_pair_unchecked(h, g, &all, x, y)
                || g.degree_in(x, &all.without(y)) < r
                || g.degree_in(y, &all.without(x)) < r
            {
                continue;
            }
            let has_z = g
                .neighbors(x)
                .intersection(g.neighbors(y))
                .iter()
                .any(|z| g.degree(z) > r);
            if !has_z {
                failures.push(fail(4, vec![x, y]));
            }
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexSet;

    fn triangle_only() -> HeightFunction {
        HeightFunction::custom("triangle", 2, |g: &Graph, d: &VertexSet| {
            u64::from(d.len() == 3 && g.is_complete_set(d))
        })
    }

    #[test]
    fn builtin_passes_small_graphs() {
        let h = HeightFunction::noncomplete_regular(2).unwrap();
        let report = check_height_properties(&h, 2, 5).unwrap();
        assert!(report.is_ok(), "{:?}", report.failures);
        assert_eq!(report.graphs_checked, 1 + 1 + 4 + 38 + 728);
    }

    #[test]
    fn zero_passes_trivially() {
        let report = check_height_properties(&HeightFunction::zero(1), 1, 6).unwrap();
        assert!(report.is_ok());
    }

    #[test]
    fn triangle_height_fails_property_three() {
        let report = check_height_properties(&triangle_only(), 2, 3).unwrap();
        assert_eq!(report.failures.len(), 3);
        for f in &report.failures {
            assert_eq!(f.property, 3);
            assert_eq!(f.witness, Graph::complete(3));
        }
    }

    #[test]
    fn modes_agree() {
        let h = triangle_only();
        let mut opts = AxiomOptions::new(4);
        let plain = check_height_properties_with(&h, 2, &opts).unwrap();
        opts.parallel = true;
        assert_eq!(check_height_properties_with(&h, 2, &opts).unwrap(), plain);
        opts.up_to_isomorphism = true;
        let reduced = check_height_properties_with(&h, 2, &opts).unwrap();
        assert_eq!(reduced.failures[0].property, 3);
    }

    #[test]
    fn constant_one_fails_property_one_on_k1() {
        let one = HeightFunction::custom("one", 2, |_: &Graph, _: &VertexSet| 1);
        let report = check_height_properties(&one, 2, 3).unwrap();
        assert_eq!(report.failures[0].property, 1);
        assert_eq!(report.failures[0].witness, Graph::empty(1));
    }

    #[test]
    fn vertex_count_height_fails_on_an_edge() {
        // h = |V| - 1: both ends of K_2 are critical and adjacent.
        let size = HeightFunction::custom("size", 1, |_: &Graph, d: &VertexSet| d.len() as u64 - 1);
        let report = check_height_properties(&size, 1, 4).unwrap();
        assert_eq!(report.graphs_checked, 2);
        assert!(report
            .failures
            .iter()
            .all(|f| f.property == 3 && f.witness == Graph::complete(2)));
    }
}
