//! Inverse-semigroup laws of the normal forms, checked exhaustively over
//! the fixture graphs at bounded path length.

use netlat::{
    all_generators, bar_add, normal_forms_up_to, verify_generator_relations, DirectedGraph,
    Network, NormalForm,
};

fn graph(text: &str) -> DirectedGraph {
    DirectedGraph::from_network(&Network::parse(text).unwrap()).unwrap()
}

fn fixtures() -> Vec<DirectedGraph> {
    vec![
        graph("network directed\nvertex a\nvertex b\nedge e a b\n"),
        graph("network directed\nvertex a\nvertex b\nedge e a b\nedge f b a\n"),
        graph("network directed\nvertex v\nvertex a\nvertex b\nedge e v a\nedge f v b\n"),
    ]
}

#[test]
fn product_is_associative_on_all_triples_up_to_length_three() {
    for g in fixtures() {
        let forms = normal_forms_up_to(&g, 3);
        for a in &forms {
            for b in &forms {
                let ab = a.product(b);
                for c in &forms {
                    assert_eq!(
                        ab.product(c),
                        a.product(&b.product(c)),
                        "({a}) ({b}) ({c})"
                    );
                }
            }
        }
    }
}

#[test]
fn idempotents_commute_and_follow_the_three_branch_display() {
    for g in fixtures() {
        let idempotents: Vec<NormalForm> = normal_forms_up_to(&g, 3)
            .into_iter()
            .filter(NormalForm::is_idempotent)
            .collect();
        for a in &idempotents {
            for b in &idempotents {
                let ab = a.product(b);
                assert_eq!(ab, b.product(a), "({a}) ({b})");
                // pp* qq* = pp* when p extends q, qq* when q extends p,
                // zero otherwise.
                let expect = match (a.paths(), b.paths()) {
                    (None, _) | (_, None) => NormalForm::Zero,
                    (Some((p, _)), Some((q, _))) => {
                        if p.strip_prefix(q).is_some() {
                            a.clone()
                        } else if q.strip_prefix(p).is_some() {
                            b.clone()
                        } else {
                            NormalForm::Zero
                        }
                    }
                };
                assert_eq!(ab, expect, "({a}) ({b})");
            }
        }
    }
}

#[test]
fn products_of_normal_forms_stay_in_normal_form() {
    for g in fixtures() {
        let forms = normal_forms_up_to(&g, 2);
        for a in &forms {
            for b in &forms {
                if let Some((p, q)) = a.product(b).paths() {
                    assert_eq!(p.range(), q.range());
                }
            }
        }
    }
}

#[test]
fn every_element_has_its_swapped_inverse_and_no_other() {
    for g in fixtures() {
        let forms = normal_forms_up_to(&g, 3);
        for nf in &forms {
            let inv = nf.inverse();
            assert_eq!(nf.product(&inv).product(nf), *nf);
            assert_eq!(inv.product(nf).product(&inv), inv);
            if let (Some((p, q)), Some((ip, iq))) = (nf.paths(), inv.paths()) {
                assert_eq!((p, q), (iq, ip));
            }
            // Uniqueness over the bounded universe: nothing else inverts nf.
            for other in &forms {
                let mutual = nf.product(other).product(nf) == *nf
                    && other.product(nf).product(other) == *other;
                assert_eq!(mutual, *other == inv, "{nf} has a second inverse {other}");
            }
        }
    }
}

#[test]
fn generator_products_match_the_presentation() {
    for g in fixtures() {
        assert!(verify_generator_relations(&g).unwrap());
        for a in all_generators(&g) {
            for b in all_generators(&g) {
                let direct = bar_add(&g, &a, &b).unwrap();
                let embedded = NormalForm::from_generator(&g, &a)
                    .unwrap()
                    .product(&NormalForm::from_generator(&g, &b).unwrap());
                assert_eq!(direct, embedded);
            }
        }
    }
}
