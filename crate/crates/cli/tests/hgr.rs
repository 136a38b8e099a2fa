use hyperconn::{Edge, Hypergraph};
use hyperconn_cli::hgr::{parse_hgr, write_hgr};
use proptest::prelude::*;

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (0usize..10).prop_flat_map(|n| {
        let edge = if n == 0 {
            Just(Vec::new()).boxed()
        } else {
            proptest::collection::vec(0..n, 0..6).boxed()
        };
        proptest::collection::vec(edge, 0..8)
            .prop_map(move |edges| Hypergraph::from_edge_lists(n, &edges).unwrap())
    })
}

proptest! {
    #[test]
    fn round_trip(h in arb_hypergraph()) {
        let text = write_hgr(&h);
        prop_assert_eq!(parse_hgr(&text).unwrap(), h.clone());
        let commented = format!("c generated\n{}c trailing\n\n", text);
        prop_assert_eq!(parse_hgr(&commented).unwrap(), h);
    }

    #[test]
    fn garbage_never_panics(text in "[ -~\n]{0,60}") {
        let _ = parse_hgr(&text);
    }
}

#[test]
fn multiplicities_are_written_out() {
    let h = Hypergraph::new(2, vec![Edge::from_multiplicities([(0, 3), (1, 1)]), Edge::empty()]).unwrap();
    assert_eq!(write_hgr(&h), "p hgr 2 2\n1 1 1 2\n\n");
}

#[test]
fn crlf_input() {
    let h = parse_hgr("p hgr 3 2\r\n1 2\r\n2 3\r\n").unwrap();
    assert_eq!(h.edge_count(), 2);
}
