use hpart::verify::{connected_graphs_up_to_isomorphism, enumerate_connected_graphs};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Connected labeled graphs on `n` vertices, by conditioning on the size of
/// the component containing vertex 1.
fn connected_labeled(n: u64) -> u64 {
    let all = |m: u64| 1u64 << (m * m.saturating_sub(1) / 2);
    let mut c = vec![0u64; n as usize + 1];
    for m in 1..=n {
        let disconnected: u64 = (1..m)
            .map(|j| binomial(m - 1, j - 1) * c[j as usize] * all(m - j))
            .sum();
        c[m as usize] = all(m) - disconnected;
    }
    c[n as usize]
}

#[test]
fn labeled_counts_match_the_recurrence() {
    for n in 1..=7 {
        let counted = enumerate_connected_graphs(n).unwrap().count() as u64;
        assert_eq!(counted, connected_labeled(n as u64), "n = {n}");
    }
    assert_eq!(connected_labeled(7), 1_866_256);
}

#[test]
fn every_enumerated_graph_is_connected_and_distinct() {
    let graphs: Vec<_> = enumerate_connected_graphs(5).unwrap().collect();
    assert!(graphs.iter().all(|g| g.is_connected() && g.n() == 5));
    let distinct: std::collections::HashSet<_> =
        graphs.iter().map(|g| g.edges().to_vec()).collect();
    assert_eq!(distinct.len(), graphs.len());
}

#[test]
fn unlabeled_counts() {
    let counts: Vec<usize> = (1..=6)
        .map(|n| connected_graphs_up_to_isomorphism(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
}
