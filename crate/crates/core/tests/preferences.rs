mod common;

use preference_surfaces::preferences::{
    enumerate_strict_orders, enumerate_weak_orders, valid_cycles, AlternativeSet, Decoded, PreferenceCycle, Restrict,
    StrictOrder, StrictRelation, TernaryCode, WeakOrder,
};
use proptest::prelude::*;

fn set(n: usize) -> AlternativeSet {
    AlternativeSet::first(n).unwrap()
}

fn symbols(code: &TernaryCode) -> Vec<char> {
    code.entries().iter().map(|r| r.symbol()).collect()
}

#[test]
fn weak_orders_match_transitive_codes() {
    for n in 1..=4 {
        let oracle: Vec<Vec<char>> =
            common::all_symbol_strings(n).into_iter().filter(|s| common::is_transitive(s, n)).collect();
        let mut ours: Vec<Vec<char>> =
            enumerate_weak_orders(&set(n)).iter().map(|o| symbols(&TernaryCode::encode_order(o))).collect();
        ours.sort();
        let mut oracle = oracle;
        oracle.sort();
        assert_eq!(ours, oracle, "n = {n}");
    }
    assert_eq!(enumerate_weak_orders(&set(3)).len(), 13);
    assert_eq!(enumerate_weak_orders(&set(4)).len(), 75);
}

#[test]
fn strict_orders_are_codes_without_ties() {
    for n in 1..=4 {
        let oracle = common::all_symbol_strings(n)
            .into_iter()
            .filter(|s| common::is_transitive(s, n) && !s.contains(&'e'))
            .count();
        assert_eq!(enumerate_strict_orders(&set(n)).len(), oracle);
    }
}

#[test]
fn decode_inverts_encode_on_orders_and_cycles() {
    for n in 1..=4 {
        for o in enumerate_weak_orders(&set(n)) {
            let code = TernaryCode::encode_order(&o);
            assert_eq!(code.decode(), Decoded::Order(o.clone()));
            assert_eq!(code.to_string().parse::<TernaryCode>().map(|c| c.entries().to_vec()), Ok(code.entries().to_vec()));
        }
    }
    for c in valid_cycles(&set(3)).unwrap() {
        assert_eq!(TernaryCode::encode_cycle(&c).unwrap().decode(), Decoded::Cycle(c.clone()));
    }
}

#[test]
fn the_two_cycles_and_their_codes() {
    let [a, b] = valid_cycles(&set(3)).unwrap();
    assert_eq!(a.to_string(), "1<2<3<1");
    assert_eq!(b.to_string(), "1<3<2<1");
    let code = TernaryCode::encode_cycle(&a).unwrap();
    assert_eq!(code.to_string(), "(0,1,0)");
    let cyc = code.cyclic_tuple().unwrap().map(|r| r.symbol());
    assert_eq!(cyc, ['0', '0', '0']);
    assert_eq!(TernaryCode::encode_cycle(&b).unwrap().cyclic_tuple().unwrap().map(|r| r.symbol()), ['1', '1', '1']);
}

#[test]
fn restrict_commutes_with_encode_exhaustively() {
    for n in 1..=4 {
        let full = set(n);
        for o in enumerate_weak_orders(&full) {
            for mask in 1u32..(1 << n) {
                let sub = AlternativeSet::new(full.iter().filter(|a| mask & (1 << a.index()) != 0).collect()).unwrap();
                let left = TernaryCode::encode_order(&o.restrict(&sub).unwrap());
                let right = TernaryCode::encode_order(&o).restrict(&sub).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn strict_relation_text_forms() {
    let o: StrictRelation = "2<3<1".parse().unwrap();
    assert!(!o.is_cycle());
    assert_eq!(o.reversed().to_string(), "1<3<2");
    let c: StrictRelation = "1<2<3<1".parse().unwrap();
    assert!(c.is_cycle());
    assert_eq!(c.reversed().to_string(), "1<3<2<1");
    assert!("1<2<2".parse::<StrictRelation>().is_err());
    assert!("1~2<3".parse::<StrictOrder>().is_err());
    assert!("1<2<3~1".parse::<PreferenceCycle>().is_ok());
}

fn weak_order(n: usize) -> impl Strategy<Value = WeakOrder> {
    let all = enumerate_weak_orders(&set(n));
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn text_form_round_trips(o in (1usize..=5).prop_flat_map(weak_order)) {
        let back: WeakOrder = o.to_string().parse().unwrap();
        prop_assert_eq!(back, o);
    }

    #[test]
    fn reversal_flips_every_pair(o in (2usize..=5).prop_flat_map(weak_order)) {
        let code = TernaryCode::encode_order(&o);
        let rev = TernaryCode::encode_order(&o.reversed());
        for (x, y) in code.entries().iter().zip(rev.entries()) {
            prop_assert_eq!(x.flipped(), *y);
        }
    }

    #[test]
    fn restriction_to_pairs_reads_the_code(o in (2usize..=5).prop_flat_map(weak_order), seed in any::<u64>()) {
        let members = o.alternatives();
        let k = members.len();
        let i = (seed % k as u64) as usize;
        let j = ((seed / 7) % (k as u64 - 1)) as usize;
        let j = if j >= i { j + 1 } else { j };
        let (a, b) = (members.members()[i.min(j)], members.members()[i.max(j)]);
        let sub = AlternativeSet::new(vec![a, b]).unwrap();
        let small = TernaryCode::encode_order(&o.restrict(&sub).unwrap());
        prop_assert_eq!(Some(small.entries()[0]), TernaryCode::encode_order(&o).relation(a, b));
    }
}
