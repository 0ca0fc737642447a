use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An assignment of every vertex to one of `k` parts.
///
/// Parts are numbered `0..k` internally; user-facing formats shift them to
/// `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    assign: Vec<usize>,
    parts: Vec<VertexSet>,
}

impl Partition {
    /// `assign[v]` is the part of vertex `v`.
    pub fn new(k: usize, assign: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Contract(
                "a partition needs at least one part".into(),
            ));
        }
        let mut parts = vec![VertexSet::new(); k];
        for (v, &p) in assign.iter().enumerate() {
            if p >= k {
                return Err(Error::InputFormat(format!(
                    "vertex {v} is assigned to part {p}, but there are only {k} parts"
                )));
            }
            parts[p].insert(v);
        }
        Ok(Self { assign, parts })
    }

    /// Builds a partition of `0..n` from explicit parts, which must be
    /// disjoint and cover every vertex.
    pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let mut assign = vec![usize::MAX; n];
        for (p, members) in parts.iter().enumerate() {
            for &v in members {
                if v >= n {
                    return Err(Error::InputFormat(format!(
                        "vertex {v} in part {p} is out of range 0..{n}"
                    )));
                }
                if assign[v] != usize::MAX {
                    return Err(Error::InputFormat(format!(
                        "vertex {v} appears in parts {} and {p}",
                        assign[v]
                    )));
                }
                assign[v] = p;
            }
        }
        if let Some(v) = assign.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InputFormat(format!("vertex {v} is in no part")));
        }
        Self::new(parts.len(), assign)
    }

    /// Vertex `v` goes to part `v mod k`.
    pub fn round_robin(n: usize, k: usize) -> Self {
        Self::new(k, (0..n).map(|v| v % k.max(1)).collect()).expect("k >= 1")
    }

    /// Every vertex in `part`.
    pub fn all_in(n: usize, k: usize, part: usize) -> Result<Self> {
        Self::new(k, vec![part; n])
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.assign.len()
    }

    #[inline]
    pub fn part_of(&self, v: usize) -> usize {
        self.assign[v]
    }

    #[inline]
    pub fn part(&self, i: usize) -> &VertexSet {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    pub fn move_vertex(&mut self, v: usize, to: usize) {
        let from = self.assign[v];
        self.parts[from].remove(v);
        self.parts[to].insert(v);
        self.assign[v] = to;
    }

    /// Parts as sorted vertex lists.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(VertexSet::to_vec).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_robin_spreads_vertices() {
        let p = Partition::round_robin(5, 2);
        assert_eq!(p.to_lists(), vec![vec![0, 2, 4], vec![1, 3]]);
        let empty = Partition::round_robin(0, 3);
        assert_eq!(empty.to_lists(), vec![Vec::<usize>::new(); 3]);
    }

    #[test]
    fn from_parts_checks_cover() {
        assert!(Partition::from_parts(3, &[vec![0, 1], vec![2]]).is_ok());
        assert!(Partition::from_parts(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_parts(3, &[vec![0], vec![2]]).is_err());
        assert!(Partition::from_parts(3, &[vec![0, 1, 3], vec![2]]).is_err());
    }

    #[test]
    fn moves_update_both_views() {
        let mut p = Partition::all_in(3, 2, 0).unwrap();
        p.move_vertex(1, 1);
        assert_eq!(p.part_of(1), 1);
        assert_eq!(p.to_lists(), vec![vec![0, 2], vec![1]]);
        assert!(Partition::new(2, vec![0, 2]).is_err());
        assert!(Partition::new(0, vec![]).is_err());
    }
}
