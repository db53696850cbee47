use serde::{Deserialize, Serialize};

use super::DeltaComplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// start → end
    Forward,
    /// end → start
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub edge: usize,
    pub direction: Direction,
}

impl Step {
    pub fn source(&self, x: &DeltaComplex) -> usize {
        let (s, e) = x.edge_endpoints(self.edge);
        match self.direction {
            Direction::Forward => s,
            Direction::Backward => e,
        }
    }

    pub fn target(&self, x: &DeltaComplex) -> usize {
        let (s, e) = x.edge_endpoints(self.edge);
        match self.direction {
            Direction::Forward => e,
            Direction::Backward => s,
        }
    }
}

/// A walk along edges. An empty walk is the constant path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePath {
    pub start: usize,
    pub end: usize,
    pub steps: Vec<Step>,
}

impl EdgePath {
    pub fn constant(v: usize) -> EdgePath {
        EdgePath { start: v, end: v, steps: Vec::new() }
    }

    /// Checks that consecutive steps meet.
    pub fn new(x: &DeltaComplex, start: usize, steps: Vec<Step>) -> Result<EdgePath> {
        if start >= x.vertex_count() {
            return Err(Error::InvalidInput(format!("path starts at missing vertex {start}")));
        }
        let mut at = start;
        for (i, s) in steps.iter().enumerate() {
            if s.edge >= x.edge_count() {
                return Err(Error::InvalidInput(format!("step {i} uses missing edge {}", s.edge)));
            }
            if s.source(x) != at {
                return Err(Error::InvalidInput(format!("step {i} along edge {} does not start at vertex {at}", s.edge)));
            }
            at = s.target(x);
        }
        Ok(EdgePath { start, end: at, steps })
    }

    /// Walk through the vertices `vs` of a simplex along its edges.
    pub fn through_simplex(x: &DeltaComplex, n: usize, k: usize, upto: usize) -> EdgePath {
        let vs = x.vertices(n, k);
        let steps = (0..upto)
            .map(|i| Step { edge: x.edge_of(n, k, i, i + 1), direction: Direction::Forward })
            .collect();
        EdgePath { start: vs[0], end: vs[upto], steps }
    }

    pub fn is_constant(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn reversed(&self) -> EdgePath {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| Step {
                edge: s.edge,
                direction: match s.direction {
                    Direction::Forward => Direction::Backward,
                    Direction::Backward => Direction::Forward,
                },
            })
            .collect();
        EdgePath { start: self.end, end: self.start, steps }
    }

    /// `self` followed by `other`; caller guarantees `self.end == other.start`.
    pub fn concat(&self, other: &EdgePath) -> EdgePath {
        assert_eq!(self.end, other.start, "paths do not meet");
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().copied());
        EdgePath { start: self.start, end: other.end, steps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::circle3;

    #[test]
    fn loop_around_circle() {
        let c = circle3();
        let p = EdgePath::new(
            &c,
            0,
            vec![
                Step { edge: 0, direction: Direction::Forward },
                Step { edge: 2, direction: Direction::Forward },
                Step { edge: 1, direction: Direction::Backward },
            ],
        )
        .unwrap();
        assert_eq!((p.start, p.end), (0, 0));
        assert_eq!(p.reversed().steps[0], Step { edge: 1, direction: Direction::Forward });
    }

    #[test]
    fn broken_path_rejected() {
        let c = circle3();
        assert!(EdgePath::new(&c, 0, vec![Step { edge: 2, direction: Direction::Forward }]).is_err());
    }
}
