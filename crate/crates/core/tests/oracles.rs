mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wheelshp::{
    bridges, components_minus, find_k_wheel, is_2connected, is_3connected, is_isomorphic, make_wheel, Graph, VertexSet,
};

#[test]
fn atlas_fixture_is_complete_and_distinct() {
    let atlas = atlas();
    assert_eq!(atlas.len(), 1253);
    let mut per_size = [0usize; 8];
    for (n, _) in &atlas {
        per_size[*n] += 1;
    }
    assert_eq!(per_size, [1, 1, 2, 4, 11, 34, 156, 1044]);
    // no two entries of the same size and edge count are isomorphic
    let graphs: Vec<Graph> = atlas.iter().map(|(n, e)| to_graph(*n, e)).collect();
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            if atlas[i].0 == atlas[j].0 && atlas[i].1.len() == atlas[j].1.len() {
                assert!(!is_isomorphic(&graphs[i], &graphs[j]));
            }
        }
    }
}

#[test]
fn wheel_oracle_recognizes_wheels() {
    for k in 3..=7 {
        let (_, e) = dense_edges(&make_wheel(k).unwrap());
        assert!(is_wheel_subdivision_oracle(&e, k));
        assert!(!is_wheel_subdivision_oracle(&e, k + 1));
    }
    // hub plus two disjoint triangles has the W_6 degree signature but is not W_6
    let mut fake = vec![];
    for v in 1..=6 {
        fake.push((0, v));
    }
    fake.extend([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]);
    assert!(!is_wheel_subdivision_oracle(&fake, 6));
}

#[test]
fn three_connectivity_matches_oracle_on_atlas() {
    for (n, e) in atlas().iter().filter(|(n, _)| *n > 0) {
        let g = to_graph(*n, e);
        assert_eq!(is_3connected(&g), three_connected_oracle(*n, e), "{g:?}");
        if is_3connected(&g) {
            assert!(is_2connected(&g));
        }
    }
    let k4_minus = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
    assert!(!three_connected_oracle(4, &k4_minus));
    assert!(!is_3connected(&to_graph(4, &k4_minus)));
}

#[test]
fn wheels_are_three_connected() {
    for k in 3..=9 {
        assert!(is_3connected(&make_wheel(k).unwrap()), "W_{k}");
    }
}

#[test]
fn two_connectivity_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2c0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let m = rng.gen_range(0..=n * (n - 1) / 2);
        let (n, e) = random_graph(&mut rng, n, m);
        assert_eq!(is_2connected(&to_graph(n, &e)), two_connected_oracle(n, &e), "{e:?}");
    }
}

#[test]
fn bridges_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb41d);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(0..=n * (n - 1) / 2);
        let (n, e) = random_graph(&mut rng, n, m);
        let w: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let g = to_graph(n, &e);
        let got: Vec<Vec<usize>> =
            bridges(&g, &VertexSet::new(w.clone()).unwrap()).into_iter().map(Vec::from).collect();
        assert_eq!(got, bridges_oracle(n, &e, &w), "edges {e:?} w {w:?}");
    }
    // frozen from the oracle
    let c6: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    assert_eq!(bridges_oracle(6, &c6, &[0, 3]), vec![vec![0, 1, 2, 3], vec![0, 3, 4, 5]]);
    assert_eq!(bridges_oracle(2, &[(0, 1)], &[0, 1]), vec![vec![0, 1]]);
}

#[test]
fn components_partition_the_remainder() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0);
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let m = rng.gen_range(0..=2 * n);
        let (n, e) = random_graph(&mut rng, n, m);
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let g = to_graph(n, &e);
        let parts = components_minus(&g, &VertexSet::new(s.clone()).unwrap());
        let mut all: Vec<usize> = parts.iter().flat_map(|p| p.iter()).collect();
        all.sort_unstable();
        let expected: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
        assert_eq!(all, expected);
        for p in &parts {
            let mask = p.iter().fold(0u64, |acc, v| acc | 1 << v);
            assert!(connected_within(mask, &e));
        }
        let firsts: Vec<usize> = parts.iter().map(|p| p.as_slice()[0]).collect();
        assert!(firsts.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn isomorphism_matches_permutation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..400 {
        let n = rng.gen_range(1..=7);
        let m = rng.gen_range(0..=n * (n - 1) / 2);
        let (_, e1) = random_graph(&mut rng, n, m);
        // half the time compare against a relabelled copy
        let e2 = if rng.gen_bool(0.5) {
            let mut perm: Vec<usize> = (0..n).collect();
            rand::seq::SliceRandom::shuffle(&mut perm[..], &mut rng);
            e1.iter().map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b]))).collect()
        } else {
            random_graph(&mut rng, n, m).1
        };
        let (g1, g2) = (to_graph(n, &e1), to_graph(n, &e2));
        assert_eq!(is_isomorphic(&g1, &g2), isomorphic_oracle(n, &e1, &e2), "{e1:?} vs {e2:?}");
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xe9);
    let sample: Vec<Graph> = (0..40)
        .map(|_| {
            let m = rng.gen_range(3..=6);
            let (n, e) = random_graph(&mut rng, 5, m);
            to_graph(n, &e)
        })
        .collect();
    for a in &sample {
        assert!(is_isomorphic(a, a));
        for b in &sample {
            assert_eq!(is_isomorphic(a, b), is_isomorphic(b, a));
            for c in &sample {
                if is_isomorphic(a, b) && is_isomorphic(b, c) {
                    assert!(is_isomorphic(a, c));
                }
            }
        }
    }
}

#[test]
fn find_k_wheel_matches_oracle_on_small_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf1d);
    for _ in 0..200 {
        let n = rng.gen_range(4..=8);
        let m = rng.gen_range(0..=13.min(n * (n - 1) / 2));
        let (n, e) = random_graph(&mut rng, n, m);
        let g = to_graph(n, &e);
        for k in [4, 5] {
            assert_eq!(find_k_wheel(&g, k).is_found(), contains_wheel_oracle(n, &e, k), "k={k} {e:?}");
        }
    }
}
