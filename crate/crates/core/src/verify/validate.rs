use crate::engine::{Partition, Problem};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// A vertex has more neighbors in its part than the part's budget.
    Degree,
    /// A component of a part has positive height.
    Height,
    /// The parts do not cover every vertex exactly once.
    Cover,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::Degree => "degree",
            ViolationKind::Height => "height",
            ViolationKind::Cover => "cover",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Part index, when the violation belongs to one part.
    pub part: Option<usize>,
    /// The offending vertex, or the offending component.
    pub vertices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_partition(problem: &Problem, partition: &Partition) -> ValidationReport {
    let mut report = ValidationReport::default();
    if partition.n() != problem.graph().n() || partition.k() != problem.k() {
        report.violations.push(Violation {
            kind: ViolationKind::Cover,
            part: None,
            vertices: Vec::new(),
            detail: format!(
                "partition has {} vertices in {} parts, expected {} in {}",
                partition.n(),
                partition.k(),
                problem.graph().n(),
                problem.k()
            ),
        });
        return report;
    }
    check_parts(problem, partition.parts(), &mut report);
    report
}

/// Like [`verify_partition`], for parts given as plain vertex lists. Missing,
/// repeated and out-of-range vertices become cover violations.
pub fn verify_parts(problem: &Problem, parts: &[Vec<usize>]) -> ValidationReport {
    let n = problem.graph().n();
    let mut report = ValidationReport::default();
    let cover = |vertices: Vec<usize>, part: Option<usize>, detail: String| Violation {
        kind: ViolationKind::Cover,
        part,
        vertices,
        detail,
    };
    if parts.len() != problem.k() {
        report.violations.push(cover(
            Vec::new(),
            None,
            format!("expected {} parts, got {}", problem.k(), parts.len()),
        ));
    }
    let mut seen = vec![false; n];
    let mut sets = Vec::with_capacity(parts.len());
    for (i, members) in parts.iter().enumerate() {
        let mut set = VertexSet::new();
        for &v in members {
            if v >= n {
                report.violations.push(cover(
                    vec![v],
                    Some(i),
                    format!("vertex out of range 0..{n}"),
                ));
            } else if seen[v] {
                report.violations.push(cover(
                    vec![v],
                    Some(i),
                    "vertex assigned more than once".into(),
                ));
            } else {
                seen[v] = true;
                set.insert(v);
            }
        }
        sets.push(set);
    }
    for (v, _) in seen.iter().enumerate().filter(|(_, s)| !**s) {
        report
            .violations
            .push(cover(vec![v], None, "vertex in no part".into()));
    }
    sets.truncate(problem.k());
    check_parts(problem, &sets, &mut report);
    report
}

fn check_parts(problem: &Problem, parts: &[VertexSet], report: &mut ValidationReport) {
    let g = problem.graph();
    for (i, part) in parts.iter().enumerate() {
        let r = problem.budget(i);
        for v in part {
            let d = g.degree_in(v, part);
            if d > r {
                report.violations.push(Violation {
                    kind: ViolationKind::Degree,
                    part: Some(i),
                    vertices: vec![v],
                    detail: format!("induced degree {d} exceeds budget {r}"),
                });
            }
        }
        let h = problem.height(i);
        if h.is_zero() {
            continue;
        }
        for comp in g.components(part) {
            let value = h.value(g, &comp);
            if value > 0 {
                report.violations.push(Violation {
                    kind: ViolationKind::Height,
                    part: Some(i),
                    vertices: comp.to_vec(),
                    detail: format!("component has {} height {value}", h.name()),
                });
            }
        }
    }
}
