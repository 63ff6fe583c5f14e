//! Exact toughness, the `t`-tough predicate and minimal toughness.
//!
//! Toughness is `min |S| / c(G - S)` over vertex sets `S` whose removal
//! leaves at least two components. Complete graphs (including `K1`, `K2`)
//! have infinite toughness; a disconnected graph has toughness `0` with the
//! empty set as witness.
//!
//! The optimized sweep prunes whole size classes with the bound
//! `c(G - S) <= min(alpha(G), n - |S|)`. Among optimal cuts the reported
//! witness is the smallest one, ties going to the smallest bitmask.

mod oracle;
mod search;

use serde::{Deserialize, Serialize};

pub use oracle::{toughness_oracle, ORACLE_MAX_ORDER};
pub use search::SearchOptions;

use crate::error::EngineError;
use crate::graph::{Edge, Graph, VertexSet};
use crate::invariants::independence_number;
use crate::ratio::Ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToughnessResult {
    pub value: Ratio,
    /// Optimal cut; `None` iff the value is infinite.
    pub witness: Option<VertexSet>,
    pub witness_components: Option<usize>,
}

impl ToughnessResult {
    pub fn infinite() -> Self {
        ToughnessResult {
            value: Ratio::INFINITY,
            witness: None,
            witness_components: None,
        }
    }

    /// Re-derives the value from the witness with an independent component count.
    pub fn is_sound_for(&self, g: &Graph) -> bool {
        match (self.value, self.witness, self.witness_components) {
            (Ratio::Infinity, None, None) => g.is_complete(),
            (value, Some(w), Some(c)) => g.components(w) == Ok(c) && c >= 2 && Ratio::of_cut(w.len(), c) == value,
            _ => false,
        }
    }
}

pub fn toughness(g: &Graph) -> ToughnessResult {
    toughness_with(g, &SearchOptions::parallel()).expect("no deadline set")
}

pub fn toughness_with(g: &Graph, opts: &SearchOptions) -> Result<ToughnessResult, EngineError> {
    if g.is_complete() {
        return Ok(ToughnessResult::infinite());
    }
    let c0 = g.count_components(0);
    if c0 >= 2 {
        return Ok(ToughnessResult {
            value: Ratio::ZERO,
            witness: Some(VertexSet::EMPTY),
            witness_components: Some(c0),
        });
    }
    let alpha = independence_number(g);
    let (value, mask, c) =
        search::minimum_cut_ratio(g, alpha, opts)?.expect("a connected noncomplete graph has a vertex cut");
    Ok(ToughnessResult {
        value,
        witness: Some(VertexSet(mask)),
        witness_components: Some(c),
    })
}

/// Outcome of the `t`-tough test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Toughness {
    Tough,
    /// A cut `X` with `t * c(G - X) > |X|`.
    Violated {
        cut: VertexSet,
        components: usize,
    },
}

impl Toughness {
    pub fn is_tough(&self) -> bool {
        matches!(self, Toughness::Tough)
    }
}

/// Checks `t * c(G - X) <= |X|` for every cut `X`. The reported violation is
/// the first one in (size, bitmask) order.
pub fn is_t_tough(g: &Graph, t: Ratio) -> Toughness {
    is_t_tough_with(g, t, &SearchOptions::parallel()).expect("no deadline set")
}

pub fn is_t_tough_with(g: &Graph, t: Ratio, opts: &SearchOptions) -> Result<Toughness, EngineError> {
    let alpha = independence_number(g);
    Ok(match search::first_violation(g, t, alpha, opts)? {
        Some((mask, components)) => Toughness::Violated {
            cut: VertexSet(mask),
            components,
        },
        None => Toughness::Tough,
    })
}

/// Supplies candidate certificates for `tau(G - e) < t`, typically the
/// closed-form witnesses of a known family. Candidates are always re-checked.
pub trait EdgeWitnessHint {
    fn edge_witness(&self, g: &Graph, e: Edge) -> Option<VertexSet>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessSource {
    Canonical,
    Search,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DropVerdict {
    pub dropped: bool,
    pub witness: Option<VertexSet>,
    pub components: Option<usize>,
    pub source: Option<WitnessSource>,
}

/// Decides `tau(G - e) < t`, returning a cut `W` with `|W| < t * c(G - e - W)`
/// when it holds. Stops at the first certificate.
pub fn tau_drops_below(
    g: &Graph,
    e: Edge,
    t: Ratio,
    hint: Option<&dyn EdgeWitnessHint>,
    opts: &SearchOptions,
) -> Result<DropVerdict, EngineError> {
    let reduced = g.delete_edge(e.0, e.1)?;

    if let Some(w) = hint.and_then(|h| h.edge_witness(g, e)) {
        if let Ok(c) = reduced.components(w) {
            if c >= 2 && t.exceeds_cut(w.len(), c) {
                return Ok(DropVerdict {
                    dropped: true,
                    witness: Some(w),
                    components: Some(c),
                    source: Some(WitnessSource::Canonical),
                });
            }
        }
    }

    Ok(match is_t_tough_with(&reduced, t, opts)? {
        Toughness::Violated { cut, components } => DropVerdict {
            dropped: true,
            witness: Some(cut),
            components: Some(components),
            source: Some(WitnessSource::Search),
        },
        Toughness::Tough => DropVerdict {
            dropped: false,
            witness: None,
            components: None,
            source: None,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeVerdict {
    pub edge: Edge,
    pub verdict: DropVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub tau: ToughnessResult,
    pub per_edge: Vec<EdgeVerdict>,
    pub minimally_tough: bool,
}

pub fn is_minimally_tough(g: &Graph) -> MinimalityReport {
    is_minimally_tough_with(g, None, &SearchOptions::parallel()).expect("no deadline set")
}

/// Computes `tau(G)` and checks every edge individually.
pub fn is_minimally_tough_with(
    g: &Graph,
    hint: Option<&dyn EdgeWitnessHint>,
    opts: &SearchOptions,
) -> Result<MinimalityReport, EngineError> {
    let tau = toughness_with(g, opts)?;
    minimality_given_tau(g, tau, hint, opts)
}

/// Per-edge phase of [`is_minimally_tough_with`] for an already known `tau(G)`.
pub fn minimality_given_tau(
    g: &Graph,
    tau: ToughnessResult,
    hint: Option<&dyn EdgeWitnessHint>,
    opts: &SearchOptions,
) -> Result<MinimalityReport, EngineError> {
    if !tau.value.is_finite() {
        return Ok(MinimalityReport {
            tau,
            per_edge: Vec::new(),
            minimally_tough: false,
        });
    }
    let mut per_edge = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let verdict = tau_drops_below(g, e, tau.value, hint, opts)?;
        per_edge.push(EdgeVerdict { edge: e, verdict });
    }
    let minimally_tough = per_edge.iter().all(|v| v.verdict.dropped);
    Ok(MinimalityReport {
        tau,
        per_edge,
        minimally_tough,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GraphError;
    use crate::graph::{circulant, CirculantSpec};
    use std::time::{Duration, Instant};

    fn c(n: usize, d: &[usize]) -> Graph {
        circulant(&CirculantSpec::new(n, d).unwrap())
    }

    fn r(p: u64, q: u64) -> Ratio {
        Ratio::new(p, q).unwrap()
    }

    #[test]
    fn named_values() {
        let t = toughness(&c(7, &[1, 3]));
        assert_eq!(t.value, r(2, 1));
        assert!(t.is_sound_for(&c(7, &[1, 3])));
        assert_eq!(toughness(&Graph::complete(5).unwrap()).value, Ratio::INFINITY);
        assert_eq!(toughness(&Graph::complete(1).unwrap()), ToughnessResult::infinite());
        assert_eq!(toughness(&Graph::complete(2).unwrap()), ToughnessResult::infinite());
        assert_eq!(toughness(&Graph::cycle(6).unwrap()).value, r(1, 1));
        assert_eq!(toughness(&c(10, &[1, 2, 4])).value, r(3, 1));
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let t = toughness(&g);
        assert_eq!(t.value, Ratio::ZERO);
        assert_eq!(t.witness, Some(VertexSet::EMPTY));
        assert_eq!(t.witness_components, Some(2));
        assert!(t.is_sound_for(&g));
    }

    #[test]
    fn oracle_values() {
        // pinned from the exhaustive oracle
        assert_eq!(toughness_oracle(&Graph::petersen()).unwrap().value, r(4, 3));
        assert_eq!(
            toughness_oracle(&Graph::complete_bipartite(1, 3).unwrap())
                .unwrap()
                .value,
            r(1, 3)
        );
        assert_eq!(
            toughness_oracle(&Graph::complete_bipartite(2, 3).unwrap())
                .unwrap()
                .value,
            r(2, 3)
        );
        assert_eq!(
            toughness_oracle(&Graph::complete_bipartite(3, 3).unwrap())
                .unwrap()
                .value,
            r(1, 1)
        );
        assert_eq!(toughness_oracle(&Graph::cycle(6).unwrap()).unwrap().value, r(1, 1));
        assert_eq!(
            toughness_oracle(&Graph::complete(4).unwrap()).unwrap(),
            ToughnessResult::infinite()
        );
        assert!(matches!(
            toughness_oracle(&Graph::empty(21).unwrap()),
            Err(EngineError::OrderTooLarge { n: 21, max: 20 })
        ));
    }

    #[test]
    fn witnesses_match_oracle_tie_break() {
        for g in [
            Graph::petersen(),
            c(7, &[1, 3]),
            c(10, &[1, 2, 4]),
            Graph::cycle(7).unwrap(),
        ] {
            assert_eq!(toughness(&g), toughness_oracle(&g).unwrap());
        }
    }

    #[test]
    fn t_tough_predicate() {
        let g = c(11, &[1, 3]);
        assert!(is_t_tough(&g, r(3, 2)).is_tough());
        match is_t_tough(&g, r(2, 1)) {
            Toughness::Violated { cut, components } => {
                assert_eq!(g.components(cut).unwrap(), components);
                assert!(r(2, 1).exceeds_cut(cut.len(), components));
                // first violation in (size, mask) order
                assert_eq!(cut.labels(), vec![1, 3, 5, 7, 9]);
            }
            Toughness::Tough => panic!("not 2-tough"),
        }
        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            is_t_tough(&disconnected, r(1, 100)),
            Toughness::Violated {
                cut: VertexSet::EMPTY,
                components: 2
            }
        );
        assert!(is_t_tough(&disconnected, Ratio::ZERO).is_tough());
        assert!(is_t_tough(&Graph::complete(6).unwrap(), r(100, 1)).is_tough());
    }

    #[test]
    fn drop_without_hint_is_certified() {
        let g = c(7, &[1, 3]);
        for e in [Edge(0, 1), Edge(0, 3)] {
            let v = tau_drops_below(&g, e, r(2, 1), None, &SearchOptions::sequential()).unwrap();
            assert!(v.dropped);
            let w = v.witness.unwrap();
            let h = g.delete_edge(e.0, e.1).unwrap();
            assert_eq!(h.components(w).unwrap(), v.components.unwrap());
            assert!(r(2, 1).exceeds_cut(w.len(), v.components.unwrap()));
            assert_eq!(v.source, Some(WitnessSource::Search));
        }
    }

    #[test]
    fn k4_does_not_drop_below_one() {
        let k4 = Graph::complete(4).unwrap();
        for e in k4.edges() {
            let v = tau_drops_below(&k4, e, r(1, 1), None, &SearchOptions::parallel()).unwrap();
            assert!(!v.dropped);
            assert_eq!(v.witness, None);
        }
        assert_eq!(
            tau_drops_below(
                &k4.delete_edge(0, 1).unwrap(),
                Edge(0, 1),
                r(1, 1),
                None,
                &SearchOptions::default()
            ),
            Err(EngineError::Graph(GraphError::EdgeNotPresent(0, 1)))
        );
    }

    struct Bogus;
    impl EdgeWitnessHint for Bogus {
        fn edge_witness(&self, _: &Graph, _: Edge) -> Option<VertexSet> {
            Some(VertexSet(1))
        }
    }

    #[test]
    fn bad_hints_fall_back_to_search() {
        let g = c(7, &[1, 3]);
        let v = tau_drops_below(&g, Edge(0, 1), r(2, 1), Some(&Bogus), &SearchOptions::default()).unwrap();
        assert!(v.dropped);
        assert_eq!(v.source, Some(WitnessSource::Search));
    }

    #[test]
    fn minimality() {
        let rep = is_minimally_tough(&c(7, &[1, 3]));
        assert!(rep.minimally_tough);
        assert_eq!(rep.tau.value, r(2, 1));
        assert_eq!(rep.per_edge.len(), 14);

        let rep = is_minimally_tough(&Graph::cycle(6).unwrap());
        assert!(rep.minimally_tough);
        assert_eq!(rep.tau.value, r(1, 1));

        let rep = is_minimally_tough(&Graph::complete(4).unwrap());
        assert!(!rep.minimally_tough);
        assert!(rep.per_edge.is_empty());

        // triangle with a pendant vertex: tau = 1/2, and deleting 0-1 or 0-2
        // leaves a path P4 whose toughness is still 1/2
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let rep = is_minimally_tough(&g);
        assert_eq!(rep.tau.value, r(1, 2));
        assert!(!rep.minimally_tough);
        let kept: Vec<Edge> = rep
            .per_edge
            .iter()
            .filter(|v| !v.verdict.dropped)
            .map(|v| v.edge)
            .collect();
        assert_eq!(kept, vec![Edge(0, 1), Edge(0, 2)]);
    }

    #[test]
    fn parallel_equals_sequential() {
        for g in [c(13, &[1, 3]), c(13, &[1, 2, 4]), Graph::petersen()] {
            let a = toughness_with(&g, &SearchOptions::sequential()).unwrap();
            let b = toughness_with(&g, &SearchOptions::parallel()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn expired_deadline_times_out() {
        let g = c(15, &[1, 3]);
        let opts = SearchOptions::parallel().with_deadline(Some(Instant::now() - Duration::from_secs(1)));
        assert_eq!(toughness_with(&g, &opts), Err(EngineError::Timeout));
    }
}
