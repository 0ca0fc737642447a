use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::heights::HeightFunction;

/// A graph together with per-part degree budgets and height functions.
#[derive(Clone, Debug)]
pub struct Problem {
    graph: Graph,
    budgets: Vec<usize>,
    heights: Vec<HeightFunction>,
}

impl Problem {
    /// `heights[i]` must be an `r`-height function for `r = budgets[i]`.
    pub fn new(graph: Graph, budgets: Vec<usize>, heights: Vec<HeightFunction>) -> Result<Self> {
        if budgets.is_empty() {
            return Err(Error::Contract("at least one part is required".into()));
        }
        if budgets.len() != heights.len() {
            return Err(Error::Contract(format!(
                "{} budgets but {} height functions",
                budgets.len(),
                heights.len()
            )));
        }
        if let Some((i, h)) = heights
            .iter()
            .enumerate()
            .find(|(i, h)| h.r() != budgets[*i])
        {
            return Err(Error::Contract(format!(
                "part {} has budget {} but its height function `{}` is for r = {}",
                i + 1,
                budgets[i],
                h.name(),
                h.r()
            )));
        }
        Ok(Self {
            graph,
            budgets,
            heights,
        })
    }

    /// Zero height on every part: only the degree bounds matter.
    pub fn with_zero_heights(graph: Graph, budgets: Vec<usize>) -> Self {
        let heights = budgets.iter().map(|&r| HeightFunction::zero(r)).collect();
        Self::new(graph, budgets, heights).expect("lengths agree")
    }

    /// The non-complete regular height where `r >= 2`, zero elsewhere.
    pub fn with_builtin_heights(graph: Graph, budgets: Vec<usize>) -> Self {
        let heights = budgets
            .iter()
            .map(|&r| HeightFunction::builtin_for(r))
            .collect();
        Self::new(graph, budgets, heights).expect("lengths agree")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn budgets(&self) -> &[usize] {
        &self.budgets
    }

    #[inline]
    pub fn budget(&self, i: usize) -> usize {
        self.budgets[i]
    }

    pub fn heights(&self) -> &[HeightFunction] {
        &self.heights
    }

    #[inline]
    pub fn height(&self, i: usize) -> &HeightFunction {
        &self.heights[i]
    }

    pub fn k(&self) -> usize {
        self.budgets.len()
    }

    pub fn budget_sum(&self) -> i64 {
        self.budgets.iter().map(|&r| r as i64).sum()
    }

    /// `Δ(G) + 2 - k`.
    pub fn main_bound(&self) -> i64 {
        self.graph.max_degree() as i64 + 2 - self.k() as i64
    }

    /// `Δ(G) + 1 - k`.
    pub fn lovasz_bound(&self) -> i64 {
        self.graph.max_degree() as i64 + 1 - self.k() as i64
    }

    pub fn check_main_hypothesis(&self) -> Result<()> {
        check_bound(self.budget_sum(), self.main_bound())
    }

    pub fn check_lovasz_hypothesis(&self) -> Result<()> {
        check_bound(self.budget_sum(), self.lovasz_bound())
    }
}

fn check_bound(actual: i64, required: i64) -> Result<()> {
    if actual >= required {
        Ok(())
    } else {
        Err(Error::Hypothesis { required, actual })
    }
}
