use ramsey_trees::tree::alpha2;
use ramsey_trees::verify::witness_grid;
use ramsey_trees::witness::Method;
use ramsey_trees::{build_witness, contains_tree, validate_witness, Claim, Construction, Graph, TreeFamily};
use TreeFamily::*;

fn expected_order(c: &Construction) -> usize {
    match *c {
        Construction::CliqueUnion { m, n, .. } => m + n - 5,
        Construction::EqualCliques { m, n } => m + n - 4,
        Construction::ShiftedCliqueUnion { m, n } => m + n - 6,
        Construction::StarCliqueUnion { m, n } => m + n - 4,
        Construction::CliqueBipartiteUnion { m, n, .. } => m + n - 4,
        _ => unreachable!("not on the grid"),
    }
}

#[test]
fn grid_witnesses_avoid_both_trees() {
    let grid = witness_grid(5, 9, 14);
    assert!(grid.len() > 100);
    for (recipe, claim) in grid {
        let w = build_witness(recipe, claim.clone()).unwrap();
        assert_eq!(w.graph.order(), expected_order(&recipe), "{recipe:?}");
        let left = claim.left.graph().unwrap();
        let right = claim.right.realize().unwrap();
        // direct searches, without the component and degree shortcuts
        assert!(
            !contains_tree(&w.graph, &left).unwrap(),
            "{recipe:?} contains {}",
            claim.left
        );
        assert!(
            !contains_tree(&w.graph.complement(), &right).unwrap(),
            "{recipe:?}: complement contains {}",
            claim.right
        );
        assert!(validate_witness(&w).unwrap().passed);
    }
}

#[test]
fn two_cliques_block_tstar_by_bipartition_size() {
    for n in 6..=10 {
        let w = build_witness(
            Construction::TwoCliquesBelowOrder { n },
            Claim::trees(Path(n), TStar(n)),
        )
        .unwrap();
        let complement = w.graph.complement();
        assert_eq!(complement, Graph::complete_bipartite(n - 3, n - 3).unwrap());
        // T*_n has n - 2 vertices on one side, which K_{n-3,n-3} cannot hold
        assert_eq!(alpha2(&TStar(n).realize().unwrap()).unwrap(), n - 2);
        assert!(!contains_tree(&complement, &TStar(n).realize().unwrap()).unwrap());
        let report = validate_witness(&w).unwrap();
        assert!(report.passed);
        assert_eq!(report.right.method, Method::EmbeddingSearch);
    }
}

#[test]
fn wrong_claims_fail_with_an_embedding() {
    // K_6 ∪ K_6 holds a star on six vertices
    let w = build_witness(
        Construction::TwoCliquesBelowOrder { n: 9 },
        Claim::trees(Star(6), TStar(9)),
    )
    .unwrap();
    let report = validate_witness(&w).unwrap();
    assert!(!report.passed);
    let image = report.left.embedding.expect("an embedding is reported");
    let star = Star(6).realize().unwrap();
    for (u, v) in star.edges() {
        assert!(w.graph.has_edge(image[u], image[v]));
    }
}

#[test]
fn infeasible_parameters_are_rejected() {
    // 10 - 3 is not a multiple of 6
    assert!(build_witness(
        Construction::EqualCliques { m: 7, n: 10 },
        Claim::trees(Path(7), TStar(10))
    )
    .is_err());
    assert!(build_witness(
        Construction::CliqueUnion {
            m: 7,
            n: 11,
            x: 1,
            y: 1
        },
        Claim::trees(Path(7), Star(11))
    )
    .is_err());
}

#[test]
fn recipes_serialize_with_id_and_params() {
    let recipe = Construction::CliqueUnion { m: 6, n: 8, x: 1, y: 1 };
    let value = serde_json::to_value(recipe).unwrap();
    assert_eq!(value["construction_id"], "clique-union");
    assert_eq!(value["params"]["x"], 1);
    let back: Construction = serde_json::from_value(value).unwrap();
    assert_eq!(back, recipe);
}
