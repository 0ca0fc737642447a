//! Height functions on connected graphs, and criticality computed from them.
//!
//! A height function maps every finite simple connected graph to a natural
//! number. It is an *r-height function* when it satisfies four properties
//! relating its value to deletions of high-degree critical vertices; those
//! properties are checked exhaustively by [`crate::verify::check_height_properties`],
//! never assumed by this module.
//!
//! A height function is evaluated on `G[D]` for a connected vertex set `D` of
//! some ambient graph `G`, so the engine never has to materialize subgraphs.
//! It extends to arbitrary vertex sets by summing over components
//! ([`height_of_graph`]).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

type Evaluator = dyn Fn(&Graph, &VertexSet) -> u64 + Send + Sync;

#[derive(Clone)]
enum Kind {
    Zero,
    NoncompleteRegular,
    Custom(Arc<Evaluator>),
}

/// A named height function together with the budget `r` it is meant for.
#[derive(Clone)]
pub struct HeightFunction {
    name: String,
    r: usize,
    kind: Kind,
}

impl HeightFunction {
    /// Zero on every connected graph. Valid for every `r`.
    pub fn zero(r: usize) -> Self {
        Self {
            name: "zero".into(),
            r,
            kind: Kind::Zero,
        }
    }

    /// One on non-complete `r`-regular graphs, zero elsewhere. Only defined for
    /// `r >= 2`.
    pub fn noncomplete_regular(r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::Contract(format!(
                "the non-complete regular height function needs r >= 2, got r = {r}"
            )));
        }
        Ok(Self {
            name: "regular".into(),
            r,
            kind: Kind::NoncompleteRegular,
        })
    }

    /// A user-supplied height. `value` receives the ambient graph and a
    /// connected, nonempty vertex set, and must depend only on the induced
    /// subgraph.
    pub fn custom<F>(name: impl Into<String>, r: usize, value: F) -> Self
    where
        F: Fn(&Graph, &VertexSet) -> u64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            r,
            kind: Kind::Custom(Arc::new(value)),
        }
    }

    /// Registry lookup: `"zero"` or `"regular"`.
    pub fn from_name(name: &str, r: usize) -> Result<Self> {
        match name {
            "zero" => Ok(Self::zero(r)),
            "regular" => Self::noncomplete_regular(r),
            other => Err(Error::Contract(format!(
                "unknown height function `{other}` (expected `zero` or `regular`)"
            ))),
        }
    }

    /// The builtin choice used throughout the test corpora: `regular` where
    /// it is defined, `zero` otherwise.
    pub fn builtin_for(r: usize) -> Self {
        Self::noncomplete_regular(r).unwrap_or_else(|_| Self::zero(r))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `h(G[component])`. `component` must be nonempty and connected in `g`.
    pub fn value(&self, g: &Graph, component: &VertexSet) -> u64 {
        match &self.kind {
            Kind::Zero => 0,
            Kind::NoncompleteRegular => {
                let size = component.len();
                let regular = component
                    .iter()
                    .all(|v| g.degree_in(v, component) == self.r);
                u64::from(regular && self.r + 1 != size)
            }
            Kind::Custom(f) => f(g, component),
        }
    }

    /// Whether the function is identically zero, which lets callers skip
    /// component scans.
    pub fn is_zero(&self) -> bool {
        matches!(self.kind, Kind::Zero)
    }
}

impl fmt::Debug for HeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HeightFunction")
            .field("name", &self.name)
            .field("r", &self.r)
            .finish()
    }
}

/// `h(G[s])`: the sum of `h` over the components of `G[s]`.
pub fn height_of_graph(h: &HeightFunction, g: &Graph, s: &VertexSet) -> u64 {
    if h.is_zero() {
        return 0;
    }
    g.components(s).iter().map(|d| h.value(g, d)).sum()
}

fn require_connected(g: &Graph, d: &VertexSet) -> Result<()> {
    if g.is_connected_set(d) {
        Ok(())
    } else {
        Err(Error::Contract(format!(
            "expected a nonempty connected vertex set, got {d:?}"
        )))
    }
}

/// Whether `x` is critical in the connected graph `G[d]`: `G[d] - x` is
/// connected and nonempty, and its height is below `h(G[d])`.
pub(crate) fn is_critical_in(
    h: &HeightFunction,
    g: &Graph,
    d: &VertexSet,
    height: u64,
    x: usize,
) -> bool {
    let rest = d.without(x);
    height > 0 && g.is_connected_set(&rest) && h.value(g, &rest) < height
}

/// The `h`-critical vertices of the connected graph `G[d]` with
/// `d_D(x) >= min_degree`, ascending.
pub fn critical_vertices(
    h: &HeightFunction,
    g: &Graph,
    d: &VertexSet,
    min_degree: usize,
) -> Result<Vec<usize>> {
    require_connected(g, d)?;
    Ok(critical_unchecked(h, g, d, min_degree))
}

pub(crate) fn critical_unchecked(
    h: &HeightFunction,
    g: &Graph,
    d: &VertexSet,
    min_degree: usize,
) -> Vec<usize> {
    let height = h.value(g, d);
    if height == 0 {
        return Vec::new();
    }
    d.iter()
        .filter(|&x| g.degree_in(x, d) >= min_degree && is_critical_in(h, g, d, height, x))
        .collect()
}

/// Whether `{x, y}` is an `h`-critical pair in the connected graph `G[q]`.
pub fn is_critical_pair(
    h: &HeightFunction,
    g: &Graph,
    q: &VertexSet,
    x: usize,
    y: usize,
) -> Result<bool> {
    if x == y {
        return Err(Error::Contract(format!(
            "a critical pair needs two distinct vertices, got {x} twice"
        )));
    }
    require_connected(g, q)?;
    if !q.contains(x) || !q.contains(y) {
        return Err(Error::Contract(format!(
            "vertices {x} and {y} must both lie in {q:?}"
        )));
    }
    Ok(critical_pair_unchecked(h, g, q, x, y))
}

pub(crate) fn critical_pair_unchecked(
    h: &HeightFunction,
    g: &Graph,
    q: &VertexSet,
    x: usize,
    y: usize,
) -> bool {
    let both = q.without(x).without(y);
    if !g.is_connected_set(&both) {
        return false;
    }
    let q_minus_y = q.without(y);
    let q_minus_x = q.without(x);
    if !g.is_connected_set(&q_minus_y) || !g.is_connected_set(&q_minus_x) {
        return false;
    }
    let inner = h.value(g, &both);
    inner < h.value(g, &q_minus_y) && inner < h.value(g, &q_minus_x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all(g: &Graph) -> VertexSet {
        g.vertices()
    }

    fn regular2() -> HeightFunction {
        HeightFunction::noncomplete_regular(2).unwrap()
    }

    #[test]
    fn zero_height_is_zero() {
        let h = HeightFunction::zero(3);
        for g in [Graph::cycle(5), Graph::complete(7), Graph::empty(1)] {
            assert_eq!(h.value(&g, &all(&g)), 0);
        }
    }

    #[test]
    fn regular_height_examples() {
        let h = regular2();
        let c5 = Graph::cycle(5);
        assert_eq!(h.value(&c5, &all(&c5)), 1);
        let k3 = Graph::complete(3);
        assert_eq!(h.value(&k3, &all(&k3)), 0);
        let p4 = Graph::path(4);
        assert_eq!(h.value(&p4, &all(&p4)), 0);
        let c4 = Graph::cycle(4);
        assert_eq!(height_of_graph(&h, &c4, &all(&c4)), 1);
    }

    #[test]
    fn regular_height_rejects_small_budgets() {
        assert!(HeightFunction::noncomplete_regular(1).is_err());
        assert!(HeightFunction::noncomplete_regular(0).is_err());
        assert!(HeightFunction::from_name("regular", 1).is_err());
        assert!(HeightFunction::from_name("tall", 2).is_err());
        assert_eq!(HeightFunction::from_name("zero", 0).unwrap().name(), "zero");
    }

    #[test]
    fn height_sums_over_components() {
        let g = Graph::cycle(5)
            .disjoint_union(&Graph::cycle(4))
            .disjoint_union(&Graph::complete(3));
        assert_eq!(height_of_graph(&regular2(), &g, &all(&g)), 2);
        assert_eq!(height_of_graph(&regular2(), &g, &VertexSet::new()), 0);
    }

    #[test]
    fn critical_vertex_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            critical_vertices(&regular2(), &c5, &all(&c5), 2).unwrap(),
            vec![0, 1, 2, 3, 4]
        );
        let k3 = Graph::complete(3);
        assert!(critical_vertices(&regular2(), &k3, &all(&k3), 2)
            .unwrap()
            .is_empty());
        assert!(
            critical_vertices(&HeightFunction::zero(0), &c5, &all(&c5), 0)
                .unwrap()
                .is_empty()
        );
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(critical_vertices(&regular2(), &split, &all(&split), 0).is_err());
    }

    #[test]
    fn critical_pair_examples() {
        let c6 = Graph::cycle(6);
        let q = all(&c6);
        assert!(!is_critical_pair(&regular2(), &c6, &q, 0, 3).unwrap());
        assert!(!is_critical_pair(&regular2(), &c6, &q, 0, 2).unwrap());
        assert!(!is_critical_pair(&HeightFunction::zero(2), &c6, &q, 0, 1).unwrap());
        assert!(is_critical_pair(&regular2(), &c6, &q, 1, 1).is_err());
    }

    #[test]
    fn critical_pair_positive_case() {
        // C4 on 0-1-2-3 plus a vertex 4 adjacent to 1 and 3: deleting either
        // 0 or 4 leaves a 4-cycle, deleting both leaves a path.
        let g =
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 1), (4, 3)]).unwrap();
        let q = all(&g);
        assert!(is_critical_pair(&regular2(), &g, &q, 0, 4).unwrap());
        assert!(is_critical_pair(&regular2(), &g, &q, 4, 0).unwrap());
    }

    #[test]
    fn single_vertex_has_height_zero() {
        let k1 = Graph::empty(1);
        for h in [
            HeightFunction::zero(0),
            regular2(),
            HeightFunction::noncomplete_regular(3).unwrap(),
        ] {
            assert_eq!(h.value(&k1, &all(&k1)), 0);
        }
    }

    fn arb_connected() -> impl Strategy<Value = Graph> {
        (2usize..9).prop_flat_map(|n| {
            (
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
                Just(n),
            )
                .prop_filter_map("connected", |(bits, n)| {
                    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                    let edges: Vec<_> = pairs
                        .zip(bits)
                        .filter(|(_, b)| *b)
                        .map(|(e, _)| e)
                        .collect();
                    let g = Graph::from_edge_list(n, &edges).unwrap();
                    g.is_connected().then_some(g)
                })
        })
    }

    proptest! {
        #[test]
        fn regular_height_is_isomorphism_invariant(
            g in arb_connected(),
            r in 2usize..5,
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            let relabeled = Graph::from_edge_list(g.n(), &edges).unwrap();
            let h = HeightFunction::noncomplete_regular(r).unwrap();
            prop_assert_eq!(h.value(&g, &all(&g)), h.value(&relabeled, &all(&relabeled)));
        }

        #[test]
        fn critical_deletions_stay_connected(g in arb_connected(), r in 2usize..4) {
            let h = HeightFunction::noncomplete_regular(r).unwrap();
            let d = all(&g);
            let value = h.value(&g, &d);
            prop_assert!(value <= 1);
            if value == 1 {
                prop_assert!((0..g.n()).all(|v| g.degree(v) == r));
                prop_assert!(!g.is_complete_set(&d));
            }
            for x in critical_vertices(&h, &g, &d, 0).unwrap() {
                prop_assert!(g.is_connected_set(&d.without(x)));
            }
        }
    }
}
