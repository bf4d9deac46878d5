use antimagic::construct_la::{claimed_color_count_la, label_firecracker};
use antimagic::construct_lat::{join_transfer, printed_fn1, total_label_f2k, total_label_fn1, total_label_firecracker};
use antimagic::verify::{clique_lower_bound, leaf_lower_bound};
use antimagic::VertexRef;

#[test]
fn la_grid_hits_claimed_count() {
    for n in 2..=10 {
        for k in 2..=10 {
            let l = label_firecracker(n, k).unwrap_or_else(|e| panic!("({n},{k}): {e}"));
            let r = l.check();
            assert!(r.certified());
            assert_eq!(r.color_count as u64, claimed_color_count_la(n, k).unwrap());
            assert_eq!(Some(r.color_count), leaf_lower_bound(&l.graph));
        }
    }
}

#[test]
fn la_named_anchors() {
    assert_eq!(label_firecracker(3, 2).unwrap().check().color_count, 4);
    let l = label_firecracker(3, 3).unwrap();
    let w = l.weights();
    let at = |v: VertexRef| w[l.graph.vertex(&v).unwrap()];
    for i in 1..=3 {
        assert_eq!(at(VertexRef::SpineCenter(i)), 21);
    }
    assert_eq!(at(VertexRef::Leaf(1, 1)), 5);
    assert_eq!(at(VertexRef::Leaf(2, 1)), 9);
    let l = label_firecracker(2, 3).unwrap();
    let w = l.weights();
    assert_eq!(w[l.graph.vertex(&VertexRef::SpineCenter(1)).unwrap()], 13);
}

#[test]
fn fn1_two_classes_on_bipartition() {
    for n in 3..=30u32 {
        let t = total_label_fn1(n).unwrap();
        let r = t.check();
        assert_eq!(r.colors(), vec![5 * n as u64 - 1, 5 * n as u64], "n={n}");
        // adjacent vertices alternate, so each class is one side of the bipartition
        for &(a, b) in t.graph.edges() {
            assert_ne!(r.weights[a], r.weights[b]);
        }
    }
}

#[test]
fn printed_fn1_anchors() {
    assert_eq!(printed_fn1(3).unwrap().check().colors(), vec![12, 16]);
    assert_eq!(printed_fn1(4).unwrap().check().colors(), vec![18, 20]);
}

#[test]
fn f2k_classes() {
    for k in 3..=12u64 {
        let t = total_label_f2k(k as u32).unwrap();
        let r = t.check();
        let mut want = if k % 2 == 1 {
            vec![4 * k + 5, 4 * k + 7, (2 * k * k + 7 * k + 5) / 2]
        } else {
            vec![4 * k + 4, 4 * k + 5, (2 * k * k + 7 * k + 8) / 2]
        };
        want.sort();
        assert_eq!(r.colors(), want, "k={k}");
        assert_eq!(t.vertex_labels.len() + t.edge_labels.len(), 4 * k as usize + 3);
    }
    assert_eq!(total_label_f2k(3).unwrap().check().colors(), vec![17, 19, 22]);
    assert_eq!(total_label_f2k(4).unwrap().check().colors(), vec![20, 21, 34]);
}

#[test]
fn fnk_at_most_three() {
    for n in 3..=8 {
        for k in 2..=8 {
            let r = total_label_firecracker(n, k).unwrap().check();
            assert!(r.certified() && r.color_count <= 3, "({n},{k})");
        }
    }
}

#[test]
fn join_transfer_three_colors() {
    for n in 3..=10 {
        let t = total_label_fn1(n).unwrap();
        let e = join_transfer(&t);
        let r = e.check();
        assert!(r.certified());
        assert_eq!(r.color_count, 3);
        assert!(r.color_count >= clique_lower_bound(&e.graph));
        let apex = e.graph.vertex(&VertexRef::Apex).unwrap();
        assert_eq!(r.weights[apex], t.vertex_labels.iter().sum::<u64>());
        let wt = t.weights();
        assert_eq!(&r.weights[..wt.len()], &wt[..]);
    }
}
