//! Graph families checked through their constructed degree sequences.

use curlgraph_core::graphs::{
    complete, complete_bipartite, cycle, jaco, ladder, path, rasta, rasta_predicted_degree_string,
    set_graph, set_graph_compound_closed_form, wheel, JacoDegrees, SetGraphSpec,
    JACO_REFERENCE_TABLE,
};
use curlgraph_core::{
    cn_graph, compound_cn, curling_index, degree_sequence, delete_edge, edge_deletion_prediction,
    enumerate_summand_sets, greedy_summand_chain, group_degrees, ic_graph, l_star,
    max_product_summand, merge_union, rasta_compound_series, split2, verify_conjecture,
    Arrangement, DeletionOrdering, GraphInvariants, IdentityString, IntString, SimpleGraph,
    SummandSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ids_of(g: &SimpleGraph) -> IdentityString {
    group_degrees(&degree_sequence(g).unwrap()).unwrap()
}

#[test]
fn jaco_reference_table() {
    for (idx, (row, ic, index, cn)) in JACO_REFERENCE_TABLE.iter().enumerate() {
        let n = idx + 1;
        let degrees = degree_sequence(&jaco(n).unwrap().underlying()).unwrap();
        let inv = GraphInvariants::of(&group_degrees(&degrees).unwrap()).unwrap();
        assert_eq!(
            (inv.ic, inv.curling_index, inv.cn),
            (*ic, *index, *cn),
            "n = {n}"
        );
        if n == 24 {
            continue;
        }
        assert_eq!(degrees.entries(), *row, "degree sequence for n = {n}");
    }
}

#[test]
fn jaco_reference_row_24_is_short() {
    // The published row for n = 24 lists 23 degrees; the constructed graph
    // has a final vertex of degree 9 (v_24 has in-arcs from v_15..v_23).
    let (row, ..) = JACO_REFERENCE_TABLE[23];
    let degrees = degree_sequence(&jaco(24).unwrap().underlying()).unwrap();
    assert_eq!(row.len(), 23);
    assert_eq!(&degrees.entries()[..23], row);
    assert_eq!(degrees.entries()[23], 9);
    assert_eq!(degrees.entries().iter().sum::<u64>() % 2, 0);
}

#[test]
fn jaco_curling_structure_up_to_200() {
    let jd = JacoDegrees::new(200).unwrap();
    let mut prev_ic = 0;
    for n in 1..=200 {
        let d = group_degrees(&jd.degrees(n).unwrap()).unwrap();
        let cn = cn_graph(&d).unwrap();
        assert!((1..=3).contains(&cn), "n = {n}: cn = {cn}");
        if n >= 5 {
            assert_eq!(cn, 3, "n = {n}");
            assert!(d.runs().iter().all(|r| r.multiplicity <= 3));
        }
        let ic = ic_graph(&d).unwrap();
        if n == 5 {
            // cn jumps from 2 to 3 here, so the count of maximal runs resets.
            assert_eq!((prev_ic, ic), (2, 1));
        } else {
            assert!(ic >= prev_ic, "ic decreased at n = {n}");
        }
        prev_ic = ic;
    }
}

#[test]
fn set_graph_invariants_from_construction() {
    for n in 1..=6u32 {
        let g = set_graph(SetGraphSpec { n }).unwrap();
        assert_eq!(g.vertex_count(), (1 << n) - 1);
        assert_eq!(g.vertex_count() % 2, 1);
        let deg = g.degrees();
        for a in 0..deg.len() {
            for b in 0..deg.len() {
                let (sa, sb) = (SetGraphSpec::subset_of(a), SetGraphSpec::subset_of(b));
                if sa.count_ones() == sb.count_ones() {
                    assert_eq!(deg[a], deg[b]);
                }
            }
        }
        let d = ids_of(&g);
        let binom = |k: u32| -> u64 {
            (0..k).fold(1u64, |acc, i| acc * u64::from(n - i) / u64::from(i + 1))
        };
        assert_eq!(cn_graph(&d).unwrap(), binom(n / 2));
        let cc = compound_cn(&d).unwrap();
        let closed = set_graph_compound_closed_form(n).unwrap();
        assert_eq!(cc, closed.product);
        assert!(closed.identity_holds);
        let root = (cc as f64).sqrt().round() as u128;
        assert_eq!(root * root == cc, n % 2 == 1, "n = {n}");
    }
}

#[test]
fn hyperfactorial_identity_to_12() {
    for n in 1..=12 {
        let c = set_graph_compound_closed_form(n).unwrap();
        assert!(c.identity_holds, "n = {n}");
    }
}

#[test]
fn rasta_degree_strings_match_prediction() {
    for n in 5..=60 {
        for s in greedy_summand_chain(n).unwrap() {
            let built = ids_of(&rasta(&s).unwrap().underlying());
            let predicted = IdentityString::from_runs(rasta_predicted_degree_string(&s)).unwrap();
            assert_eq!(built, predicted, "{s}");
        }
    }
    for (a, b) in [(3, 2), (9, 4), (16, 14)] {
        let s = SummandSet::new(vec![a, b]).unwrap();
        assert_eq!(
            rasta(&s).unwrap().underlying(),
            complete_bipartite(a as usize, b as usize).unwrap()
        );
    }
}

/// Brute-force maximiser over unordered triples, independent of the
/// enumeration routine.
fn best_triple(n: u64) -> Option<(u64, u64, u64)> {
    let mut best: Option<(u64, (u64, u64, u64))> = None;
    for a in 2..n {
        for b in 2..a {
            for c in 2..b {
                if a + b + c == n {
                    let p = a * b * c;
                    if best.is_none_or(|(bp, _)| p > bp) {
                        best = Some((p, (a, b, c)));
                    }
                }
            }
        }
    }
    best.map(|(_, t)| t)
}

#[test]
fn max_product_three_terms_matches_brute_force() {
    assert_eq!(best_triple(30), Some((11, 10, 9)));
    for n in 9..=80 {
        let got = max_product_summand(n, 3).unwrap().map(|s| {
            let p = s.parts();
            (p[0], p[1], p[2])
        });
        let expected = best_triple(n);
        // Products must agree; ties may pick different sets.
        let prod = |t: Option<(u64, u64, u64)>| t.map(|(a, b, c)| a * b * c);
        assert_eq!(prod(got), prod(expected), "n = {n}");
    }
}

#[test]
fn summand_invariants() {
    for n in 5..=200u64 {
        for s in greedy_summand_chain(n).unwrap() {
            assert_eq!(s.target(), n);
            assert!(SummandSet::new(s.parts().to_vec()).is_ok());
            if n <= 120 {
                let best = max_product_summand(n, s.len()).unwrap().unwrap();
                assert!(best.product() >= s.product(), "n = {n}, {s} vs {best}");
            }
        }
        assert_eq!(
            max_product_summand(n, 2).unwrap().unwrap(),
            split2(n).unwrap()
        );
    }
    for n in 5..=100u64 {
        let ls = l_star(n).unwrap();
        assert!(!enumerate_summand_sets(n, ls).unwrap().is_empty());
        assert!(enumerate_summand_sets(n, ls + 1).unwrap().is_empty());
        for l in 2..=ls {
            for s in enumerate_summand_sets(n, l).unwrap() {
                assert_eq!((s.len(), s.target()), (l, n));
            }
        }
    }
}

#[test]
fn three_term_rasta_is_series_minimum() {
    for n in 12..=40 {
        let series = rasta_compound_series(n).unwrap();
        if series.len() >= 3 {
            let min = series.iter().map(|&(_, v)| v).min().unwrap();
            assert_eq!(series[1], (3, min), "n = {n}: {series:?}");
        }
    }
}

#[test]
fn regular_graphs_have_equal_cn_and_compound() {
    for n in 3..20 {
        for g in [cycle(n).unwrap(), complete(n).unwrap()] {
            let d = ids_of(&g);
            assert_eq!(u128::from(cn_graph(&d).unwrap()), compound_cn(&d).unwrap());
        }
    }
}

#[test]
fn union_curling_number() {
    let parts = [
        cycle(5).unwrap(),
        complete(4).unwrap(),
        path(6).unwrap(),
        wheel(7).unwrap(),
    ];
    let strings: Vec<IdentityString> = parts.iter().map(ids_of).collect();
    let merged = merge_union(&strings).unwrap();
    let mut by_value = std::collections::BTreeMap::new();
    for d in &strings {
        for r in d.runs() {
            *by_value.entry(r.value).or_insert(0) += r.multiplicity;
        }
    }
    assert_eq!(
        cn_graph(&merged).unwrap(),
        *by_value.values().max().unwrap()
    );

    // No shared values: the union's curling number is the largest part's.
    let disjoint = [ids_of(&complete(5).unwrap()), ids_of(&cycle(3).unwrap())];
    let merged = merge_union(&disjoint).unwrap();
    assert_eq!(cn_graph(&merged).unwrap(), 5);
}

#[test]
fn regular_edge_deletion() {
    for n in 4..=20 {
        let g = complete(n).unwrap();
        let d = ids_of(&g);
        let (u, v) = g.edges().next().unwrap();
        let after = compound_cn(&ids_of(&delete_edge(&g, u, v).unwrap())).unwrap();
        assert_eq!(after, 2 * (n as u128 - 2));
        let pred = edge_deletion_prediction(&d, (n - 1) as u64).unwrap();
        assert_eq!(pred, DeletionOrdering::AtLeast);
        assert!(after >= compound_cn(&d).unwrap());
    }
}

#[test]
fn deletion_witness_for_less_prediction() {
    // Two adjacent degree-3 vertices (0, 1) and five degree-2 vertices.
    // 0 and 1 each also see two vertices of a 5-cycle-like chain.
    let g = SimpleGraph::from_edges(
        7,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (1, 5),
            (2, 6),
            (3, 4),
            (5, 6),
        ],
    )
    .unwrap();
    let d = ids_of(&g);
    assert_eq!(d.as_pairs(), vec![(3, 2), (2, 5)]);
    assert_eq!(
        edge_deletion_prediction(&d, 3).unwrap(),
        DeletionOrdering::Less
    );
    let after = compound_cn(&ids_of(&delete_edge(&g, 0, 1).unwrap())).unwrap();
    assert!(after < compound_cn(&d).unwrap());
}

/// Compound curling number after deleting an edge between two degree-`dj`
/// vertices, derived from the degree string alone. Runs that drop to zero
/// vanish from the product.
fn compound_after_deletion(d: &IdentityString, dj: u64) -> u128 {
    let mut pairs = d.as_pairs();
    for p in pairs.iter_mut() {
        if p.0 == dj {
            p.1 -= 2;
        }
    }
    pairs.push((dj - 1, 2));
    IdentityString::from_runs(pairs.into_iter().filter(|p| p.1 > 0))
        .and_then(|d| compound_cn(&d))
        .unwrap()
}

#[test]
fn deletion_prediction_is_exact_away_from_empty_runs() {
    // The t* >= t_next rule compares t*(t_next + 2) with (t* + 2) t_next,
    // which is the true product ratio whenever neither factor is an absent
    // run. Check that regime on random graphs against the constructed graph.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 300 {
        let n = rng.random_range(5..=18);
        let p: f64 = rng.random_range(0.2..0.8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = SimpleGraph::from_edges(n, edges).unwrap();
        let deg = g.degrees();
        let d = ids_of(&g);
        let Some((u, v)) = g.edges().find(|&(u, v)| {
            deg[u] == deg[v] && d.multiplicity_of(deg[u]) >= 3 && d.multiplicity_of(deg[u] - 1) >= 1
        }) else {
            continue;
        };
        let dj = deg[u];
        let before = compound_cn(&d).unwrap();
        let after = compound_cn(&ids_of(&delete_edge(&g, u, v).unwrap())).unwrap();
        assert_eq!(after, compound_after_deletion(&d, dj));
        let predicted = edge_deletion_prediction(&d, dj).unwrap();
        let actual = if after >= before {
            DeletionOrdering::AtLeast
        } else {
            DeletionOrdering::Less
        };
        assert_eq!(predicted, actual, "{d}");
        checked += 1;
    }
}

fn conjecture_inputs() -> Vec<(String, IntString)> {
    let mut out = Vec::new();
    for n in 1..=25 {
        out.push((
            format!("jaco {n}"),
            degree_sequence(&jaco(n).unwrap().underlying()).unwrap(),
        ));
    }
    for n in 1..=6 {
        out.push((
            format!("setgraph {n}"),
            degree_sequence(&set_graph(SetGraphSpec { n }).unwrap()).unwrap(),
        ));
    }
    for n in 3..=30 {
        out.push((
            format!("ladder {n}"),
            degree_sequence(&ladder(n).unwrap()).unwrap(),
        ));
        out.push((
            format!("wheel {n}"),
            degree_sequence(&wheel(n + 1).unwrap()).unwrap(),
        ));
    }
    for s in greedy_summand_chain(30).unwrap() {
        out.push((
            format!("rasta {s}"),
            degree_sequence(&rasta(&s).unwrap().underlying()).unwrap(),
        ));
    }
    out
}

#[test]
fn conjecture_reaches_one_on_families() {
    for (name, s) in conjecture_inputs() {
        for a in Arrangement::ALL {
            let t = verify_conjecture(&a.apply(&s), 1000).unwrap();
            assert!(t.reached_one, "{name} ({a}) did not reach 1");
        }
    }
}

#[test]
fn curling_index_agrees_with_table_column() {
    for (idx, (row, _, index, _)) in JACO_REFERENCE_TABLE.iter().enumerate() {
        let d = group_degrees(&IntString::from(*row)).unwrap();
        assert_eq!(curling_index(&d).unwrap(), *index, "n = {}", idx + 1);
    }
}
