//! The two circulant families: 4-regular on `2k+1` vertices with distances
//! {1, 3}, and 6-regular on `3k+1` vertices with distances {1, 2, 4}.
//!
//! Cut generators are written with 1-based labels `v_1..v_n` and are
//! functions of `k`, so every member of a family is covered.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::EdgeWitnessHint;
use crate::error::{FamilyError, GraphError};
use crate::graph::{circulant, cyclic_distance, CirculantSpec, Edge, Graph, VertexSet, MAX_ORDER};
use crate::ratio::Ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    #[serde(rename = "4reg")]
    FourRegular,
    #[serde(rename = "6reg")]
    SixRegular,
}

impl FamilyKind {
    pub fn distances(self) -> &'static [usize] {
        match self {
            FamilyKind::FourRegular => &[1, 3],
            FamilyKind::SixRegular => &[1, 2, 4],
        }
    }

    pub fn degree(self) -> usize {
        match self {
            FamilyKind::FourRegular => 4,
            FamilyKind::SixRegular => 6,
        }
    }

    pub fn order(self, k: usize) -> usize {
        match self {
            FamilyKind::FourRegular => 2 * k + 1,
            FamilyKind::SixRegular => 3 * k + 1,
        }
    }

    /// Largest `k` whose member fits in 64 vertices.
    pub fn max_k(self) -> usize {
        match self {
            FamilyKind::FourRegular => (MAX_ORDER - 1) / 2,
            FamilyKind::SixRegular => (MAX_ORDER - 1) / 3,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::FourRegular => "4reg",
            FamilyKind::SixRegular => "6reg",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "4reg" => Ok(FamilyKind::FourRegular),
            "6reg" => Ok(FamilyKind::SixRegular),
            other => Err(format!("unknown family kind `{other}` (expected 4reg or 6reg)")),
        }
    }
}

/// A family member, identified by kind and `k >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub k: usize,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, k: usize) -> Result<FamilyId, FamilyError> {
        if k < 3 {
            return Err(FamilyError::KTooSmall(k));
        }
        if k > kind.max_k() {
            return Err(FamilyError::KTooLarge { k, n: kind.order(k) });
        }
        Ok(FamilyId { kind, k })
    }

    pub fn four_regular(k: usize) -> Result<FamilyId, FamilyError> {
        FamilyId::new(FamilyKind::FourRegular, k)
    }

    pub fn six_regular(k: usize) -> Result<FamilyId, FamilyError> {
        FamilyId::new(FamilyKind::SixRegular, k)
    }

    pub fn order(&self) -> usize {
        self.kind.order(self.k)
    }

    pub fn spec(&self) -> CirculantSpec {
        CirculantSpec::new(self.order(), self.kind.distances()).expect("family parameters validated")
    }

    pub fn graph(&self) -> Graph {
        circulant(&self.spec())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={}", self.kind, self.k)
    }
}

pub fn four_regular_family(k: usize) -> Result<Graph, FamilyError> {
    Ok(FamilyId::four_regular(k)?.graph())
}

pub fn six_regular_family(k: usize) -> Result<Graph, FamilyError> {
    Ok(FamilyId::six_regular(k)?.graph())
}

/// `(k+1)/(k-1)` for the 4-regular family, `2k/(k-1)` for the 6-regular one.
pub fn expected_toughness(id: FamilyId) -> Ratio {
    let k = id.k as u64;
    let r = match id.kind {
        FamilyKind::FourRegular => Ratio::new(k + 1, k - 1),
        FamilyKind::SixRegular => Ratio::new(2 * k, k - 1),
    };
    r.expect("k >= 3")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessContext {
    Tight,
    EdgeDeleted(Edge),
}

/// A cut together with the size and component count it is expected to have
/// in its context (the family graph, or the graph minus one edge).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessCut {
    pub cut: VertexSet,
    pub expected_size: usize,
    pub expected_components: usize,
    pub context: WitnessContext,
}

impl WitnessCut {
    pub fn ratio(&self) -> Ratio {
        Ratio::of_cut(self.expected_size, self.expected_components)
    }

    /// Recomputes size and component count on `g` (with the context edge
    /// removed) and compares them with the expectation.
    pub fn holds_on(&self, g: &Graph) -> Result<bool, GraphError> {
        let host = match self.context {
            WitnessContext::Tight => g.clone(),
            WitnessContext::EdgeDeleted(e) => g.delete_edge(e.0, e.1)?,
        };
        Ok(self.cut.len() == self.expected_size && host.components(self.cut)? == self.expected_components)
    }
}

/// Fixed labels plus a run of two-element blocks.
fn labels(fixed: &[usize], blocks: impl Iterator<Item = [usize; 2]>) -> VertexSet {
    VertexSet::from_labels(fixed.iter().copied().chain(blocks.flatten())).expect("labels are 1-based and small")
}

/// `{v_{2i+1} : 0 <= i <= k}` (4-regular) or
/// `{v_1, v_3} ∪ {v_{3t-1}, v_{3t} : 2 <= t <= k}` (6-regular).
pub fn tight_cut(id: FamilyId) -> WitnessCut {
    let k = id.k;
    let (cut, size, comps) = match id.kind {
        FamilyKind::FourRegular => (
            VertexSet::from_labels((0..=k).map(|i| 2 * i + 1)).unwrap(),
            k + 1,
            k - 1,
        ),
        FamilyKind::SixRegular => (labels(&[1, 3], (2..=k).map(|t| [3 * t - 1, 3 * t])), 2 * k, k - 1),
    };
    WitnessCut {
        cut,
        expected_size: size,
        expected_components: comps,
        context: WitnessContext::Tight,
    }
}

/// Witness for the class representative `v_1 v_{1+d}`, with its expected
/// `(size, components)` on the edge-deleted graph.
fn representative_witness(id: FamilyId, distance: usize) -> Option<(VertexSet, usize, usize)> {
    let k = id.k;
    Some(match (id.kind, distance) {
        (FamilyKind::FourRegular, 1) => (VertexSet::from_labels((1..=k).map(|i| 2 * i + 1)).unwrap(), k, k - 1),
        (FamilyKind::FourRegular, 3) => (
            VertexSet::from_labels(std::iter::once(2).chain((2..=k).map(|i| 2 * i + 1))).unwrap(),
            k,
            k - 1,
        ),
        (FamilyKind::SixRegular, 1) => (
            labels(&[3, 3 * k - 1, 3 * k + 1], (2..k).map(|t| [3 * t - 1, 3 * t])),
            2 * k - 1,
            k - 1,
        ),
        (FamilyKind::SixRegular, 2) => (
            labels(
                &[2, 3 * k - 2, 3 * k, 3 * k + 1],
                (2..k).map(|t| [3 * t - 2, 3 * t - 1]),
            ),
            2 * k,
            k,
        ),
        (FamilyKind::SixRegular, 4) => (
            labels(&[2, 3, 3 * k + 1], (2..=k).map(|t| [3 * t - 2, 3 * t])),
            2 * k + 1,
            k,
        ),
        _ => return None,
    })
}

/// Certificate that deleting `e` lowers the toughness: the class
/// representative's cut, rotated by the automorphism `i -> i + a` that
/// carries `v_1 v_{1+d}` onto `e = v_a v_{a+d}`.
pub fn edge_witness(id: FamilyId, e: Edge) -> Result<WitnessCut, FamilyError> {
    let n = id.order();
    let (u, v) = (e.0, e.1);
    if u >= n || v >= n || u == v {
        return Err(GraphError::EdgeNotPresent(u, v).into());
    }
    let d = cyclic_distance(u, v, n);
    let (cut, size, comps) = representative_witness(id, d).ok_or(FamilyError::ForeignDistance(u, v))?;
    // lower endpoint in cyclic order: the one from which the other is d steps ahead
    let lower = if (u + d) % n == v { u } else { v };
    Ok(WitnessCut {
        cut: cut.rotate(lower, n),
        expected_size: size,
        expected_components: comps,
        context: WitnessContext::EdgeDeleted(Edge::new(u, v)),
    })
}

impl EdgeWitnessHint for FamilyId {
    fn edge_witness(&self, g: &Graph, e: Edge) -> Option<VertexSet> {
        if g.order() != self.order() {
            return None;
        }
        edge_witness(*self, e).ok().map(|w| w.cut)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KriesellGap {
    pub degree: usize,
    pub ceil_2t: u64,
    pub violates: bool,
}

/// Compares the common degree with `ceil(2t)`; a violation means the member
/// has no vertex of degree `ceil(2t)`.
pub fn kriesell_gap(id: FamilyId) -> KriesellGap {
    let degree = id.kind.degree();
    let ceil_2t = expected_toughness(id).scale(2).ceil().expect("finite");
    KriesellGap {
        degree,
        ceil_2t,
        violates: ceil_2t < degree as u64,
    }
}
