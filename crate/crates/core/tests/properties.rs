use proptest::prelude::*;

use antimagic::construct_la::label_firecracker;
use antimagic::construct_lat::total_label_fn1;
use antimagic::graphs::*;
use antimagic::io;
use antimagic::matrixlab::{reverse, split3, Corona, LabelVector, LabelingMatrix};
use antimagic::oracle::{exact_chi_la, exact_chi_lat, naive_chi, SearchBudget};
use antimagic::verify::{check_edge, check_total, clique_lower_bound, leaf_lower_bound};
use antimagic::{AnyLabeling, EdgeLabeling, Family, Graph, LabelKind, TotalLabeling, VertexRef};

/// A simple graph on `n` vertices from an edge mask over all pairs.
fn masked(n: usize, mask: u32) -> Option<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let edges: Vec<_> = pairs.into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p).collect();
    if edges.is_empty() {
        return None;
    }
    let vertices = (1..=n as u32).map(VertexRef::SpineLink).collect();
    Graph::from_parts(Family::Custom, vertices, edges).ok()
}

fn vertex_ref() -> impl Strategy<Value = VertexRef> {
    prop_oneof![
        (1u32..50).prop_map(VertexRef::SpineCenter),
        (1u32..50).prop_map(VertexRef::SpineLink),
        (1u32..50, 1u32..50).prop_map(|(i, j)| VertexRef::Leaf(i, j)),
        (0u32..3).prop_map(VertexRef::HubCenter),
        (1u32..50).prop_map(VertexRef::HubLeaf),
        (1u32..50, 1u32..50, 0u32..3).prop_map(|(i, j, s)| VertexRef::CopyVertex(i, j, s)),
        Just(VertexRef::Apex),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reverse_is_an_involution(v in prop::collection::vec(1u64..1000, 0..20)) {
        let lv = LabelVector(v);
        prop_assert_eq!(reverse(&reverse(&lv)), lv);
    }

    #[test]
    fn split3_concat_round_trip(v in prop::collection::vec(1u64..1000, 1..20), a in 0usize..20, b in 0usize..20) {
        let lv = LabelVector(v);
        match split3(&lv, a, b) {
            Ok(t) => {
                prop_assert_eq!(t.mid.len(), a);
                prop_assert_eq!(t.concat(), lv);
            }
            Err(_) => prop_assert!(1 + a + b > lv.len() || 1 + a + b < lv.len()),
        }
    }

    #[test]
    fn handshake_identity(
        n in 2usize..7,
        mask in 1u32..(1 << 15),
        perm in Just((1..=15u64).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let Some(g) = masked(n, mask) else { return Ok(()) };
        let m = g.size() as u64;
        // the order in which 1..=m appear in a shuffle of 1..=15 is a uniform permutation
        let labels: Vec<u64> = perm.into_iter().filter(|&x| x <= m).collect();
        let r = check_edge(&g, &labels);
        prop_assert!(r.bijection_ok);
        prop_assert_eq!(r.weights.iter().sum::<u64>(), 2 * m * (m + 1) / 2);
        prop_assert_eq!(r.color_count, r.color_classes.len());
        let order = g.order() as u64;
        let vl: Vec<u64> = (m + 1..=m + order).collect();
        let rt = check_total(&g, &vl, &labels);
        prop_assert_eq!(rt.weights.iter().sum::<u64>(), vl.iter().sum::<u64>() + m * (m + 1));
    }

    #[test]
    fn oracle_matches_naive(n in 2usize..6, mask in 1u32..(1 << 10)) {
        let Some(g) = masked(n, mask) else { return Ok(()) };
        prop_assume!(g.size() <= 7);
        let r = exact_chi_la(&g, SearchBudget::default()).unwrap();
        prop_assert_eq!(r.value(), naive_chi(&g, LabelKind::Edge));
        if let Some(w) = &r.witness {
            prop_assert_eq!(Some(w.check().color_count), r.value());
        }
        if g.size() + g.order() <= 9 {
            let t = exact_chi_lat(&g, SearchBudget::default()).unwrap();
            prop_assert_eq!(t.value(), naive_chi(&g, LabelKind::Total));
        }
    }

    #[test]
    fn vertex_names_round_trip(v in vertex_ref()) {
        prop_assert_eq!(v.to_string().parse::<VertexRef>().unwrap(), v);
    }

    #[test]
    fn firecracker_constructions_meet_bounds(n in 2u32..14, k in 2u32..14) {
        let l = label_firecracker(n, k).unwrap();
        let r = l.check();
        prop_assert!(r.certified());
        prop_assert_eq!(r.color_count as u32, n * k - n + 1);
        prop_assert_eq!(leaf_lower_bound(&l.graph), Some(r.color_count));
    }

    #[test]
    fn corona_constructions_meet_bounds(k1 in 1u32..6, extra in 0u32..3, r in 1u32..8, which in 0usize..4) {
        let k2 = k1 + extra;
        let c = match which {
            0 => Corona::SkEmpty { k: k2.max(2), r },
            1 => Corona::SkK2 { k: k2, r },
            2 => Corona::DstarEmpty { k1, k2, r },
            _ => Corona::DstarK2 { k1, k2, r },
        };
        let l = c.labeling().unwrap();
        let rep = l.check();
        prop_assert_eq!(rep.color_count, c.claimed_colors());
        prop_assert!(rep.color_count >= clique_lower_bound(&l.graph));
        let m = LabelingMatrix::from_labeling(&l);
        prop_assert!(m.is_permutation());
        prop_assert_eq!(m.row_sums(), l.weights());
    }

    #[test]
    fn mutated_labels_are_caught(n in 2u32..7, k in 2u32..7, e in any::<prop::sample::Index>(), delta in 1u64..5) {
        let mut l = label_firecracker(n, k).unwrap();
        let i = e.index(l.labels.len());
        l.labels[i] += delta * l.labels.len() as u64;
        let r = l.check();
        prop_assert!(!r.bijection_ok);
        prop_assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn labeling_json_round_trip(n in 3u32..12, k in 2u32..6, total in any::<bool>()) {
        let l = if total {
            AnyLabeling::Total(total_label_fn1(n).unwrap())
        } else {
            AnyLabeling::Edge(label_firecracker(n, k).unwrap())
        };
        let (back, c) = io::labeling_from_json(&io::labeling_to_json(&l, Some(7))).unwrap();
        prop_assert_eq!(c, Some(7));
        prop_assert_eq!(&back, &l);
        let g = l.graph();
        prop_assert_eq!(&io::graph_from_json(&io::graph_to_json(g)).unwrap(), g);
        let rep = l.check();
        prop_assert_eq!(io::report_from_json(&io::report_to_json(&rep, g)).unwrap(), rep);
    }
}

#[test]
fn matrix_json_round_trip() {
    for c in [Corona::SkEmpty { k: 3, r: 6 }, Corona::DstarK2 { k1: 2, k2: 3, r: 3 }] {
        let m = c.matrix().unwrap();
        let (back, src) = io::matrix_from_json(&io::matrix_to_json(&m, Some(c))).unwrap();
        assert_eq!((back, src), (m, Some(c)));
    }
}

#[test]
fn edge_and_total_kinds_are_distinct() {
    let t: TotalLabeling = total_label_fn1(5).unwrap();
    let e: EdgeLabeling = label_firecracker(5, 2).unwrap();
    assert_eq!(AnyLabeling::Total(t).kind(), LabelKind::Total);
    assert_eq!(AnyLabeling::Edge(e).kind(), LabelKind::Edge);
}
