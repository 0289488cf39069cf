use ramsey_trees::tree::{alpha2, canonical_form, enumerate_trees, is_isomorphic_tree};
use ramsey_trees::{Graph, Tree, TreeFamily};

/// Automorphisms of a small graph, counted over all vertex permutations.
fn automorphisms(g: &Graph) -> usize {
    fn extend(g: &Graph, image: &mut Vec<usize>, used: &mut Vec<bool>) -> usize {
        let v = image.len();
        if v == g.order() {
            return 1;
        }
        let mut count = 0;
        for h in 0..g.order() {
            if used[h] || (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], h)) {
                continue;
            }
            used[h] = true;
            image.push(h);
            count += extend(g, image, used);
            image.pop();
            used[h] = false;
        }
        count
    }
    extend(g, &mut Vec::new(), &mut vec![false; g.order()])
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn class_sizes_sum_to_labelled_tree_count() {
    for n in [5usize, 6, 7] {
        let trees = enumerate_trees(n).unwrap();
        let labelled: usize = trees.iter().map(|t| factorial(n) / automorphisms(t)).sum();
        assert_eq!(labelled, n.pow(n as u32 - 2), "n = {n}");
    }
}

#[test]
fn enumeration_counts() {
    let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (i, &count) in expected.iter().enumerate() {
        let trees = enumerate_trees(i + 1).unwrap();
        assert_eq!(trees.len(), count, "n = {}", i + 1);
        assert!(trees.iter().all(|t| t.is_tree() && t.order() == i + 1));
    }
}

#[test]
fn enumerated_trees_are_pairwise_distinct() {
    let trees = enumerate_trees(8).unwrap();
    for (i, a) in trees.iter().enumerate() {
        for b in &trees[i + 1..] {
            assert!(!is_isomorphic_tree(a, b).unwrap());
        }
    }
}

#[test]
fn canonical_form_ignores_labels() {
    let tstar = TreeFamily::TStar(9).realize().unwrap();
    let n = tstar.order();
    let relabel = |v: usize| (v * 4 + 3) % n;
    let shuffled = Graph::from_edges(n, tstar.edges().map(|(u, v)| (relabel(u), relabel(v)))).unwrap();
    assert_eq!(canonical_form(&tstar).unwrap(), canonical_form(&shuffled).unwrap());
}

#[test]
fn named_families_are_the_expected_shapes() {
    for n in 5..=12 {
        let star = TreeFamily::Star(n).realize().unwrap();
        let broom = TreeFamily::TPrime(n).realize().unwrap();
        let tstar = TreeFamily::TStar(n).realize().unwrap();
        let path = TreeFamily::Path(n).realize().unwrap();
        assert_eq!(star.max_degree(), n - 1);
        assert_eq!(broom.max_degree(), n - 2);
        assert_eq!(path.max_degree(), 2);
        // a center of degree n-3 whose pendant path has length three
        assert_eq!(tstar.max_degree(), (n - 3).max(2));
        assert_eq!(alpha2(&tstar).unwrap(), n - 2);
        assert_eq!(alpha2(&path).unwrap(), n.div_ceil(2));
    }
    // T*_5 is the path on five vertices
    let t5 = TreeFamily::TStar(5).realize().unwrap();
    assert!(is_isomorphic_tree(&t5, &TreeFamily::Path(5).realize().unwrap()).unwrap());
}

#[test]
fn explicit_trees_are_identified() {
    let tstar = TreeFamily::TStar(8).realize().unwrap();
    let shuffled = Graph::from_edges(8, tstar.edges().map(|(u, v)| (7 - u, 7 - v))).unwrap();
    let explicit = TreeFamily::Explicit(Tree::new(shuffled).unwrap());
    assert_eq!(explicit.identify().unwrap(), TreeFamily::TStar(8));
    // a spider with three legs of length two is none of the named shapes
    let spider = Tree::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    assert!(!TreeFamily::Explicit(spider).identify().unwrap().is_named());
}

#[test]
fn family_tags_round_trip() {
    for tag in ["path:8", "star:7", "tprime:6", "tstar:9"] {
        let f: TreeFamily = tag.parse().unwrap();
        assert_eq!(f.to_string(), tag);
    }
    assert!("tstar:4".parse::<TreeFamily>().is_err());
    assert!("tree:4".parse::<TreeFamily>().is_err());
}
