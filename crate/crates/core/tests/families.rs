mod common;

use zfcore::families::{
    counterexample16, enumerate_family, enumerate_family_members, find_four_cycle, heawood,
    is_connected_cubic, necklace, permutation_prism, satisfies_family_invariants, Block,
    FamilySpec, Generator, Sigma,
};
use zfcore::iso::dedup_isomorphic;
use zfcore::recognizer::recognize_z3;
use zfcore::{are_isomorphic, edge_connectivity, is_zero_forcing_set, zero_forcing_number};

#[test]
fn members_have_z3_up_to_order_20() {
    for order in (4..=20).step_by(2) {
        let members = enumerate_family_members(order).unwrap();
        assert!(!members.is_empty(), "order {order}");
        for m in &members {
            assert_eq!(m.graph.order(), order);
            assert!(satisfies_family_invariants(&m.graph), "{}", m.spec);
            assert_eq!(
                zero_forcing_number(&m.graph, None).unwrap().z,
                3,
                "{}",
                m.spec
            );
            assert_eq!(m.spec.assemble().unwrap(), m.graph);
        }
        let graphs: Vec<_> = members.iter().map(|m| m.graph.clone()).collect();
        assert_eq!(dedup_isomorphic(graphs.clone()).len(), graphs.len());
    }
    for order in [0, 2, 5, 7] {
        assert!(enumerate_family(order).unwrap().is_empty());
    }
}

#[test]
fn family_is_exactly_z3_on_catalog() {
    // every connected cubic graph up to 12 vertices: Z = 3 iff family member
    let mut z3 = 0;
    for g in common::catalog() {
        let z = zero_forcing_number(&g, None).unwrap().z;
        let in_family = enumerate_family(g.order())
            .unwrap()
            .iter()
            .any(|h| are_isomorphic(&g, h).is_isomorphic());
        assert_eq!(z == 3, in_family, "{:?}", g);
        assert_eq!(recognize_z3(&g).unwrap().is_member(), z == 3);
        if z == 3 {
            z3 += 1;
            assert!(edge_connectivity(&g) >= 3);
        }
    }
    assert!(z3 > 0);
}

#[test]
fn first_orders() {
    assert_eq!(enumerate_family(4).unwrap().len(), 1);
    let six = enumerate_family(6).unwrap();
    assert_eq!(six.len(), 1);
    // the triangular prism, not K3,3
    assert!(six[0].girth() == Some(3));
}

#[test]
fn spec_shape_and_order() {
    let spec = FamilySpec::apex_chain(&[1, 0], 2, vec![[0, 1, 2], [2, 1, 0]]);
    assert_eq!(spec.blocks, vec![Block::M(1), Block::M(0), Block::T(2)]);
    assert_eq!(spec.order(), 6 + 4 + 7 + 1);
    assert_eq!(spec.assemble().unwrap().order(), 18);
    assert!(spec.to_string().starts_with("apex(M1+M0+T2)"));
}

#[test]
fn prisms_have_z4() {
    for n in 4..=8 {
        let mut sigmas = vec![Sigma::Identity];
        for j in 2..=n {
            sigmas.push(Sigma::Transposition(1, j));
        }
        for sigma in sigmas {
            let g = permutation_prism(n, sigma).unwrap();
            assert!(is_connected_cubic(&g));
            assert_eq!(zero_forcing_number(&g, None).unwrap().z, 4, "n={n} {sigma}");
            let c4 = find_four_cycle(&g).expect("prism contains a 4-cycle");
            assert_eq!(c4.count_ones(), 4);
            assert!(is_zero_forcing_set(&g, c4).unwrap());
        }
    }
}

#[test]
fn named_graphs() {
    let h = heawood();
    assert!(is_connected_cubic(&h));
    assert_eq!((h.order(), h.girth()), (14, Some(6)));
    let c = counterexample16();
    assert!(is_connected_cubic(&c) && c.order() == 16);
    for b in 2..=4 {
        let g = necklace(b).unwrap();
        assert!(is_connected_cubic(&g));
        assert_eq!(g.order(), 6 * b);
    }
    assert!(necklace(1).is_err());
}

#[test]
fn generator_grammar() {
    let cases = [
        ("heawood", 1),
        ("cex16", 1),
        ("necklace 3", 1),
        ("prism 5 sigma=1,2", 1),
        ("prism 6", 1),
        ("family order=8", enumerate_family(8).unwrap().len()),
        ("family --order 10", enumerate_family(10).unwrap().len()),
        ("family t=1 m=0 1", 1),
    ];
    for (text, count) in cases {
        let gen: Generator = text.parse().unwrap();
        assert_eq!(gen.graphs().unwrap().len(), count, "{text}");
        let again: Generator = gen.to_string().parse().unwrap();
        assert_eq!(again, gen);
    }
    for bad in [
        "",
        "nope",
        "prism",
        "prism x",
        "necklace 200",
        "heawood 2",
        "family t=2 m=0 1",
    ] {
        assert!(bad.parse::<Generator>().is_err(), "{bad:?}");
    }
}
