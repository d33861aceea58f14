use gbell_core::lab::catalogue::{catalogue_up_to, dedup_classes, exhaustive_catalogue, extend_catalogue, graph_catalogue};
use gbell_core::*;

#[test]
fn class_counts_through_order_eight() {
    let counts: Vec<usize> = (1..=8).map(|n| graph_catalogue(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044, 12346]);
}

#[test]
fn generators_agree_at_order_seven() {
    let exhaustive = exhaustive_catalogue(7).unwrap();
    let extended = extend_catalogue(&exhaustive_catalogue(6).unwrap());
    assert_eq!(exhaustive, extended);
    assert_eq!(dedup_classes(&exhaustive).unwrap(), exhaustive);
}

#[test]
fn engine_matches_oracle_on_every_class_up_to_seven() {
    let mut e = Engine::new();
    for n in 1..=7 {
        for g in graph_catalogue(n).unwrap() {
            assert_eq!(e.s_vector(&g).unwrap(), oracle_s_vector(&g).unwrap(), "{g}");
        }
    }
}

#[test]
fn sizes_are_symmetric_under_complement() {
    let cat = graph_catalogue(6).unwrap();
    let mut by_size = [0usize; 16];
    for g in &cat {
        by_size[g.size()] += 1;
    }
    assert!((0..=15).all(|m| by_size[m] == by_size[15 - m]));
    let complements: Vec<Graph> = cat.iter().map(Graph::complement).collect();
    assert_eq!(dedup_classes(&complements).unwrap(), cat);
}

#[test]
fn chordal_graphs_that_are_not_complete_have_two_separated_simplicial_vertices() {
    for g in catalogue_up_to(7).unwrap().into_iter().filter(|g| g.is_chordal() && !g.is_complete()) {
        let simplicial: Vec<usize> = (0..g.order()).filter(|&v| g.is_simplicial(v)).collect();
        let separated = simplicial
            .iter()
            .any(|&u| simplicial.iter().any(|&v| u != v && !g.has_edge(u, v)));
        assert!(separated, "{g}");
    }
}

#[test]
fn graph6_round_trips_every_class_up_to_eight() {
    for g in catalogue_up_to(8).unwrap() {
        let text = graph6::encode(&g).unwrap();
        assert_eq!(graph6::decode(&text).unwrap(), g);
        assert_eq!(graph6::encode(&graph6::decode(&text).unwrap()).unwrap(), text);
    }
}
