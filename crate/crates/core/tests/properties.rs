mod common;

use lambdd::{
    covering_pairs, parse_expr, push_neg, Combinator, Edge, Expr, Letter, Manager, ModelSpec, Node, TruthTable, Word,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{all_tables, presets, random_raw};

fn model() -> impl Strategy<Value = ModelSpec> {
    (0..ModelSpec::PRESETS.len()).prop_map(|i| ModelSpec::PRESETS[i].1)
}

fn table(max_arity: usize) -> impl Strategy<Value = TruthTable> {
    (0..=max_arity, any::<u64>()).prop_map(|(n, seed)| {
        TruthTable::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
    })
}

fn table_pair(arity: usize) -> impl Strategy<Value = (TruthTable, TruthTable)> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (
            TruthTable::random(arity, &mut rng).unwrap(),
            TruthTable::random(arity, &mut rng).unwrap(),
        )
    })
}

fn expr(arity: usize) -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        any::<bool>().prop_map(Expr::Const),
        (0..arity).prop_map(Expr::Var),
    ];
    leaf.prop_recursive(5, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Not(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::And(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Or(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Xor(Box::new(a), Box::new(b))),
        ]
    })
}

/// Arity recomputed from the leaves upwards, independent of stored values.
fn recomputed_arity(mgr: &Manager, e: &Edge) -> usize {
    let below = match mgr.node(e.target()) {
        Node::Zero | Node::One => 0,
        Node::Diamond { lo, hi } => {
            let (a, b) = (recomputed_arity(mgr, lo), recomputed_arity(mgr, hi));
            assert_eq!(a, b);
            a + 1
        }
    };
    below + e.word().elementary_len()
}

/// Does the pair `(s0, s1)` match the intro pattern of `l`?
fn absorbed(l: Letter, s0: &TruthTable, s1: &TruthTable) -> bool {
    match l {
        Letter::U => s0 == s1,
        Letter::X => *s1 == s0.not(),
        Letter::C00 => s0.as_constant() == Some(false),
        Letter::C01 => s0.as_constant() == Some(true),
        Letter::C10 => s1.as_constant() == Some(false),
        Letter::C11 => s1.as_constant() == Some(true),
        Letter::N => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn shannon_rebuilds_from_top_cofactors(f in table(10)) {
        prop_assume!(f.arity() > 0);
        let top = f.classify_top().unwrap();
        prop_assert_eq!(TruthTable::combine(Combinator::Shannon, &top.lo, &top.hi).unwrap(), f);
    }

    #[test]
    fn functor_arities_and_negation_involution(f in table(8)) {
        for l in Letter::ELEMENTARY {
            prop_assert_eq!(TruthTable::apply_functor(l, &f).unwrap().arity(), f.arity() + 1);
        }
        let once = TruthTable::apply_functor(Letter::N, &f).unwrap();
        prop_assert_eq!(once.arity(), f.arity());
        prop_assert_eq!(TruthTable::apply_functor(Letter::N, &once).unwrap(), f);
    }

    #[test]
    fn raw_graphs_keep_consistent_arities(seed in any::<u64>(), arity in 0usize..7) {
        let mut mgr = Manager::new();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let raw = random_raw(&mut mgr, &mut rng, arity);
        prop_assert_eq!(recomputed_arity(&mgr, raw.edge()), arity);
        for id in mgr.reachable_nodes(raw.edge()) {
            let e = Edge::new(Word::empty(), id);
            prop_assert_eq!(recomputed_arity(&mgr, &e), mgr.node_arity(id));
        }
    }

    #[test]
    fn compile_is_hash_consed(m in model(), f in table(7)) {
        let mut mgr = Manager::new();
        let a = mgr.compile(m, &f).unwrap();
        let nodes = mgr.node_count();
        let b = mgr.compile(m, &f).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!(mgr.node_count(), nodes);
    }

    #[test]
    fn reduce_preserves_semantics_and_is_canonical(m in model(), seed in any::<u64>(), arity in 0usize..7) {
        let mut mgr = Manager::new();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let raw = random_raw(&mut mgr, &mut rng, arity);
        let tt = mgr.to_truth_table(&raw).unwrap();
        let r = mgr.reduce(m, &raw).unwrap();
        prop_assert_eq!(&mgr.to_truth_table(&r).unwrap(), &tt);
        prop_assert_eq!(&r, &mgr.compile(m, &tt).unwrap());
        prop_assert_eq!(&mgr.reduce(m, &r).unwrap(), &r);
        // sat/taut are exact on raw graphs as well
        prop_assert_eq!(mgr.is_sat(&raw).unwrap(), tt.popcount() > 0);
        prop_assert_eq!(mgr.is_taut(&raw).unwrap(), tt.popcount() as usize == tt.len());
    }

    #[test]
    fn reduced_diamonds_absorb_no_model_letter(m in model(), f in table(6)) {
        let mut mgr = Manager::new();
        let h = mgr.compile(m, &f).unwrap();
        for id in mgr.reachable_nodes(h.edge()) {
            if let Node::Diamond { lo, hi } = mgr.node(id).clone() {
                let s0 = mgr.to_truth_table(&mgr.raw_handle(lo.clone())).unwrap();
                let s1 = mgr.to_truth_table(&mgr.raw_handle(hi)).unwrap();
                for l in m.letters() {
                    prop_assert!(!absorbed(l, &s0, &s1), "{} absorbs a diamond of {:?}", l, f);
                }
                if m.negation() {
                    prop_assert!(!lo.starts_with_neg());
                }
            }
        }
    }

    #[test]
    fn negation_only_leads_words(m in model(), f in table(6)) {
        let mut mgr = Manager::new();
        let h = mgr.compile(m, &f).unwrap();
        for e in mgr.reachable_edges(h.edge()) {
            let letters = e.word().letters();
            let negs: Vec<usize> = (0..letters.len()).filter(|&i| letters[i] == Letter::N).collect();
            prop_assert!(negs.is_empty() || (m.negation() && negs == vec![0]), "word {}", e.word());
        }
    }

    #[test]
    fn negation_toggles_the_root_letter(f in table(7)) {
        for m in [ModelSpec::O_NU, ModelSpec::O_NUC, ModelSpec::O_NUCX] {
            let mut mgr = Manager::new();
            let h = mgr.compile(m, &f).unwrap();
            let g = mgr.compile(m, &f.not()).unwrap();
            prop_assert_eq!(g.edge(), &push_neg(h.edge()));
        }
    }

    #[test]
    fn connectives_match_pointwise_reference(m in model(), (fa, fb) in table_pair(6)) {
        let mut mgr = Manager::new();
        let a = mgr.compile(m, &fa).unwrap();
        let b = mgr.compile(m, &fb).unwrap();
        let and = mgr.andb(&a, &b).unwrap();
        prop_assert_eq!(mgr.to_truth_table(&and).unwrap(), common::pointwise(&fa, &fb, |x, y| x && y));
        let n = mgr.negb(&a).unwrap();
        prop_assert_eq!(mgr.to_truth_table(&n).unwrap(), fa.not());
    }

    #[test]
    fn cofactors_recombine(m in model(), f in table(7)) {
        prop_assume!(f.arity() > 0);
        let mut mgr = Manager::new();
        let h = mgr.compile(m, &f).unwrap();
        let lo = mgr.cofactor(false, &h).unwrap();
        let hi = mgr.cofactor(true, &h).unwrap();
        prop_assert_eq!(lo.arity(), f.arity() - 1);
        let (f0, f1) = f.cofactors().unwrap();
        prop_assert_eq!(mgr.to_truth_table(&lo).unwrap(), f0);
        prop_assert_eq!(mgr.to_truth_table(&hi).unwrap(), f1);
        let back = mgr.cons_diamond(m, lo.edge(), hi.edge()).unwrap();
        prop_assert_eq!(&back, h.edge());
    }

    #[test]
    fn count_of_negation_is_complementary(m in model(), f in table(9)) {
        let mut mgr = Manager::new();
        let h = mgr.compile(m, &f).unwrap();
        let n = mgr.negb(&h).unwrap();
        let total = BigUint::from(1u32) << f.arity();
        prop_assert_eq!(mgr.count_sat(&n).unwrap(), total - mgr.count_sat(&h).unwrap());
    }

    #[test]
    fn sat_probe_reads_at_most_the_root_word(m in model(), f in table(8)) {
        let mut mgr = Manager::new();
        let h = mgr.compile(m, &f).unwrap();
        let (constant, touched) = mgr.constant_probe(&h).unwrap();
        prop_assert!(touched <= f.arity() + 1);
        prop_assert_eq!(constant, f.as_constant());
    }

    #[test]
    fn all_sat_is_ordered_and_exact(m in model(), f in table(6)) {
        let mut mgr = Manager::new();
        let h = mgr.compile(m, &f).unwrap();
        let got: Vec<usize> = mgr.all_sat(&h).unwrap().map(|v| TruthTable::index_of(&v)).collect();
        let want: Vec<usize> = (0..f.len()).filter(|&i| f.get(i)).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn diamonds_shrink_along_lattice_edges(f in table(10)) {
        let models = presets();
        let mut mgr = Manager::new();
        for (a, b) in covering_pairs(&models) {
            let ha = mgr.compile(a, &f).unwrap();
            let hb = mgr.compile(b, &f).unwrap();
            prop_assert!(mgr.measure(&hb).unwrap().diamonds <= mgr.measure(&ha).unwrap().diamonds);
        }
    }

    #[test]
    fn label_bound(m in model(), f in table(9)) {
        let mut mgr = Manager::new();
        let h = mgr.compile(m, &f).unwrap();
        prop_assert!(mgr.measure(&h).unwrap().label_bound_holds());
    }

    #[test]
    fn expressions_round_trip_and_build(e in expr(5)) {
        let printed = e.to_string();
        prop_assert_eq!(&parse_expr(&printed, 5).unwrap(), &e);
        let tt = e.to_truth_table(5).unwrap();
        let mut mgr = Manager::new();
        for m in [ModelSpec::S, ModelSpec::O_UC, ModelSpec::O_NUCX] {
            let h = mgr.build_expr(m, &e, 5).unwrap();
            prop_assert_eq!(&h, &mgr.compile(m, &tt).unwrap());
        }
    }
}

#[test]
fn equivalence_matches_tables() {
    for m in [ModelSpec::O_U, ModelSpec::O_NUCX, ModelSpec::S_N] {
        let mut mgr = Manager::new();
        for n in 0..=3 {
            let tables: Vec<_> = all_tables(n).collect();
            let handles: Vec<_> = tables.iter().map(|f| mgr.compile(m, f).unwrap()).collect();
            let nots: Vec<_> = handles.iter().map(|h| mgr.negb(h).unwrap()).collect();
            for (i, a) in handles.iter().enumerate() {
                for (j, b) in nots.iter().enumerate() {
                    assert_eq!(mgr.equiv(a, b).unwrap(), tables[i] == tables[j].not());
                }
            }
        }
    }
}
