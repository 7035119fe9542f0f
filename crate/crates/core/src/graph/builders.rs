use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Path lengths (in edges) of a theta graph, ordered so that `l1` is the
/// minimum and both `l2, l3 >= 2`. At most one path may be a single edge,
/// otherwise the graph would have parallel edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub l1: usize,
    pub l2: usize,
    pub l3: usize,
}

impl ThetaSpec {
    pub fn new(l1: usize, l2: usize, l3: usize) -> Result<Self> {
        let fail = |reason: &str| Error::InvalidTheta {
            l1,
            l2,
            l3,
            reason: reason.into(),
        };
        if l1 == 0 || l2 == 0 || l3 == 0 {
            return Err(fail("path lengths must be positive"));
        }
        if [l1, l2, l3].iter().filter(|&&l| l == 1).count() > 1 {
            return Err(fail("two paths of length 1 would be parallel edges"));
        }
        if l1 > l2 || l1 > l3 {
            return Err(fail("l1 must be the minimum length"));
        }
        if l2 < 2 || l3 < 2 {
            return Err(fail("l2 and l3 must be at least 2"));
        }
        Ok(ThetaSpec { l1, l2, l3 })
    }

    /// Puts three lengths in the standard order: the minimum first; when the
    /// first length shares its parity with exactly one other, that one goes
    /// last; otherwise the remaining two are placed larger first.
    pub fn canonical(a: usize, b: usize, c: usize) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        let l1 = v[0];
        let (x, y) = (v[2], v[1]);
        let (l2, l3) = if x % 2 != y % 2 {
            if x % 2 == l1 % 2 {
                (y, x)
            } else {
                (x, y)
            }
        } else {
            (x, y)
        };
        ThetaSpec::new(l1, l2, l3)
    }

    /// The canonical ordering, and whether it differs from the input order.
    pub fn normalize(a: usize, b: usize, c: usize) -> Result<(Self, bool)> {
        let spec = ThetaSpec::canonical(a, b, c)?;
        Ok((spec, spec.lengths() != [a, b, c]))
    }

    /// Canonical representatives of every theta graph with all lengths `<= l_max`,
    /// one per isomorphism class, sorted.
    pub fn enumerate(l_max: usize) -> Vec<ThetaSpec> {
        let mut out = Vec::new();
        for a in 1..=l_max {
            for b in a..=l_max {
                for c in b..=l_max {
                    if let Ok(s) = ThetaSpec::canonical(a, b, c) {
                        out.push(s);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn lengths(&self) -> [usize; 3] {
        [self.l1, self.l2, self.l3]
    }

    pub fn total_length(&self) -> usize {
        self.l1 + self.l2 + self.l3
    }

    pub fn vertex_count(&self) -> usize {
        self.total_length() - 1
    }

    pub fn all_same_parity(&self) -> bool {
        self.l1 % 2 == self.l2 % 2 && self.l2 % 2 == self.l3 % 2
    }

    /// `l1` and `l3` share a parity that differs from `l2`'s.
    pub fn l1_l3_match_l2_differs(&self) -> bool {
        self.l1 % 2 == self.l3 % 2 && self.l1 % 2 != self.l2 % 2
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.l1, self.l2, self.l3)
    }
}

impl FromStr for ThetaSpec {
    type Err = Error;

    /// Parses `l1,l2,l3` without reordering.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Malformed(format!("theta lengths `{s}`: {e}")))?;
        match parts.as_slice() {
            &[a, b, c] => ThetaSpec::new(a, b, c),
            _ => Err(Error::Malformed(format!("expected three lengths, got `{s}`"))),
        }
    }
}

/// A theta graph together with its path structure.
///
/// Vertex 0 is the end vertex `u`, vertex 1 is `v`, followed by the internal
/// vertices of the three paths in order. `paths[i]` lists the full vertex
/// sequence of path `i` from `u` to `v`.
#[derive(Clone, Debug)]
pub struct ThetaGraph {
    pub spec: ThetaSpec,
    pub graph: Graph,
    pub paths: [Vec<usize>; 3],
}

impl ThetaGraph {
    pub fn build(spec: ThetaSpec) -> Self {
        let mut next = 2;
        let mut edges = Vec::with_capacity(spec.total_length());
        let paths = spec.lengths().map(|len| {
            let mut path = vec![0];
            for _ in 1..len {
                path.push(next);
                next += 1;
            }
            path.push(1);
            for w in path.windows(2) {
                edges.push((w[0], w[1]));
            }
            path
        });
        let graph = Graph::new(next, edges).expect("theta spec invariants guarantee a simple graph");
        ThetaGraph { spec, graph, paths }
    }

    /// `(path index, position along the path)` of an internal vertex; `None`
    /// for the two end vertices.
    pub fn locate(&self, v: usize) -> Option<(usize, usize)> {
        if v < 2 {
            return None;
        }
        self.paths.iter().enumerate().find_map(|(i, p)| {
            p.iter().position(|&w| w == v).map(|pos| (i, pos))
        })
    }
}

/// Standard graph families with canonical vertex ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Path(n) => {
                if n == 0 {
                    return Err(Error::InvalidGraph("path needs at least one vertex".into()));
                }
                Graph::new(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidGraph(format!("cycle needs n >= 3, got {n}")));
                }
                Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::Complete(n) => {
                Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
            }
            Family::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(Error::InvalidGraph("both parts must be nonempty".into()));
                }
                Graph::new(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `path:N`, `cycle:N`, `complete:N` or `bipartite:A,B`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("unknown family `{s}`"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match (kind, nums.as_slice()) {
            ("path", &[n]) => Ok(Family::Path(n)),
            ("cycle", &[n]) => Ok(Family::Cycle(n)),
            ("complete", &[n]) => Ok(Family::Complete(n)),
            ("bipartite", &[a, b]) => Ok(Family::CompleteBipartite(a, b)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "bipartite:{a},{b}"),
        }
    }
}
