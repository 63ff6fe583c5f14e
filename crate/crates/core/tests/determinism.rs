//! Results, witnesses included, must not depend on the worker count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toughlab::engine::{is_minimally_tough_with, tau_drops_below, toughness_with, SearchOptions, WitnessSource};
use toughlab::families::FamilyId;
use toughlab::graph::{Edge, Graph, VertexSet};
use toughlab::Ratio;

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.4) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn toughness_is_thread_count_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xde7);
    let mut graphs: Vec<Graph> = (0..40).map(|_| random_graph(&mut rng, 14)).collect();
    graphs.push(FamilyId::four_regular(8).unwrap().graph());
    graphs.push(FamilyId::six_regular(5).unwrap().graph());
    for g in &graphs {
        let base = in_pool(1, || toughness_with(g, &SearchOptions::parallel()).unwrap());
        assert_eq!(base, toughness_with(g, &SearchOptions::sequential()).unwrap());
        for threads in [2, 4] {
            assert_eq!(
                base,
                in_pool(threads, || toughness_with(g, &SearchOptions::parallel()).unwrap())
            );
        }
    }
}

#[test]
fn minimality_reports_are_thread_count_independent() {
    let id = FamilyId::four_regular(5).unwrap();
    let g = id.graph();
    let run = || is_minimally_tough_with(&g, None, &SearchOptions::parallel()).unwrap();
    let base = in_pool(1, run);
    assert!(base.minimally_tough);
    assert_eq!(base, in_pool(3, run));
}

#[test]
fn plain_search_finds_the_least_violating_cut() {
    // Without a hint the search returns the first violating cut in
    // (size, mask) order, which differs from the closed-form witness.
    let id = FamilyId::four_regular(3).unwrap();
    let g = id.graph();
    let t = Ratio::integer(2);
    let e = Edge::new(0, 1);
    let v = tau_drops_below(&g, e, t, None, &SearchOptions::sequential()).unwrap();
    assert!(v.dropped);
    assert_eq!(v.source, Some(WitnessSource::Search));
    assert_eq!(v.witness, Some(VertexSet::from_labels([3, 5, 6]).unwrap()));
    assert_eq!(v.components, Some(2));

    let v = tau_drops_below(&g, e, t, Some(&id), &SearchOptions::sequential()).unwrap();
    assert_eq!(v.source, Some(WitnessSource::Canonical));
}
