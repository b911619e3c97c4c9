#![allow(dead_code)]

use lambdd::{Edge, FuncHandle, Letter, Manager, ModelSpec, NodeId, TruthTable, Word};
use rand::Rng;

pub fn presets() -> Vec<ModelSpec> {
    ModelSpec::PRESETS.iter().map(|p| p.1).collect()
}

/// Every function of arity `n`, ordered by table value.
pub fn all_tables(n: usize) -> impl Iterator<Item = TruthTable> {
    let len = 1u64 << n;
    (0..1u64 << len).map(move |code| {
        TruthTable::from_fn(n, |i| (code >> (len as usize - 1 - i)) & 1 == 1).unwrap()
    })
}

/// Bit-by-bit reference for binary connectives, independent of the table
/// operations under test.
pub fn pointwise(a: &TruthTable, b: &TruthTable, op: impl Fn(bool, bool) -> bool) -> TruthTable {
    TruthTable::from_fn(a.arity(), |i| op(a.get(i), b.get(i))).unwrap()
}

/// A random well-formed raw graph of the given arity: arbitrary letters
/// (including `N` anywhere), unreduced diamonds, and some node sharing.
pub fn random_raw<R: Rng>(mgr: &mut Manager, rng: &mut R, arity: usize) -> FuncHandle {
    let mut pool: Vec<Vec<NodeId>> = vec![Vec::new(); arity + 1];
    let e = raw_edge(mgr, rng, arity, &mut pool);
    let h = mgr.raw_handle(e);
    assert_eq!(h.arity(), arity);
    h
}

fn raw_edge<R: Rng>(mgr: &mut Manager, rng: &mut R, arity: usize, pool: &mut Vec<Vec<NodeId>>) -> Edge {
    let elementary = if arity == 0 { 0 } else { rng.gen_range(0..=arity.min(3)) };
    let mut letters = Vec::new();
    for _ in 0..elementary {
        if rng.gen_bool(0.2) {
            letters.push(Letter::N);
        }
        letters.push(Letter::ELEMENTARY[rng.gen_range(0..6)]);
    }
    if rng.gen_bool(0.2) {
        letters.push(Letter::N);
    }
    let below = arity - elementary;
    let target = if below == 0 {
        NodeId::terminal(rng.gen())
    } else if !pool[below].is_empty() && rng.gen_bool(0.3) {
        pool[below][rng.gen_range(0..pool[below].len())]
    } else {
        let lo = raw_edge(mgr, rng, below - 1, pool);
        let hi = if rng.gen_bool(0.15) {
            lo.clone()
        } else {
            raw_edge(mgr, rng, below - 1, pool)
        };
        let id = mgr.intern_diamond(&lo, &hi).unwrap().target();
        pool[below].push(id);
        id
    };
    Edge::new(Word::from(letters), target)
}
