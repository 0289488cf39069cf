use proptest::prelude::*;
use ramsey_trees::tree::bipartition_sizes;
use ramsey_trees::{contains_tree, from_graph6, to_graph6, Graph};

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Decodes a Prüfer sequence into a labelled tree on `seq.len() + 2` vertices.
fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

fn tree_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (2..=max_order).prop_flat_map(|n| proptest::collection::vec(0..n, n - 2).prop_map(|seq| prufer_tree(&seq)))
}

/// Tries every injective placement of the tree's vertices.
fn contains_by_placement(host: &Graph, tree: &Graph) -> bool {
    fn place(host: &Graph, tree: &Graph, image: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = image.len();
        if v == tree.order() {
            return true;
        }
        for h in 0..host.order() {
            if used[h] || (0..v).any(|u| tree.has_edge(u, v) && !host.has_edge(image[u], h)) {
                continue;
            }
            used[h] = true;
            image.push(h);
            if place(host, tree, image, used) {
                return true;
            }
            image.pop();
            used[h] = false;
        }
        false
    }
    tree.order() <= host.order() && place(host, tree, &mut Vec::new(), &mut vec![false; host.order()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(40)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_edges_add_up(g in graph_strategy(40)) {
        let n = g.order();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn disjoint_union_adds_orders_and_edges(a in graph_strategy(20), b in graph_strategy(20)) {
        let u = Graph::disjoint_union(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(u.order(), a.order() + b.order());
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
    }

    #[test]
    fn graph6_round_trips(g in graph_strategy(70)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn embedding_matches_placement_search(host in graph_strategy(7), tree in tree_strategy(5)) {
        prop_assert_eq!(contains_tree(&host, &tree).unwrap(), contains_by_placement(&host, &tree));
    }

    #[test]
    fn embedding_is_monotone_under_edge_addition(
        host in graph_strategy(9),
        tree in tree_strategy(6),
        pick in any::<prop::sample::Index>(),
    ) {
        let missing: Vec<(usize, usize)> = host.complement().edges().collect();
        prop_assume!(!missing.is_empty());
        let extra = missing[pick.index(missing.len())];
        let bigger = Graph::from_edges(host.order(), host.edges().chain([extra])).unwrap();
        if contains_tree(&host, &tree).unwrap() {
            prop_assert!(contains_tree(&bigger, &tree).unwrap());
        }
    }

    #[test]
    fn tree_fits_complete_bipartite_iff_sides_fit(tree in tree_strategy(10), a in 1usize..9, b in 1usize..9) {
        let (s, t) = bipartition_sizes(&tree).unwrap();
        let fits = (s <= a && t <= b) || (s <= b && t <= a);
        let host = Graph::complete_bipartite(a, b).unwrap();
        prop_assert_eq!(contains_tree(&host, &tree).unwrap(), fits);
    }
}
