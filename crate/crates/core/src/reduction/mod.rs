//! Normalization: the reducing diamond constructor, the reduction operator
//! and compilation of truth tables into canonical graphs.
//!
//! Every canonical edge is built by [`Manager::cons_diamond`] from two
//! canonical children, so every suffix of a canonical word is itself
//! canonical. Two reduced edges of one model are therefore equal iff they
//! denote the same function.

mod davio;
mod model;

pub use davio::{translate_letter, DAVIO_TABLE};
pub use model::{covering_pairs, lattice_leq, neg_conjugate, ModelSpec};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, FuncHandle, Manager, Node};
use crate::letter::Letter;
use crate::oracle::TruthTable;

/// Order in which intro rules are tried by [`Manager::cons_diamond`],
/// restricted to the letters of the active model.
pub const INTRO_PRIORITY: [Letter; 6] = [
    Letter::U,
    Letter::X,
    Letter::C11,
    Letter::C10,
    Letter::C01,
    Letter::C00,
];

/// Toggles output negation on `edge`: strips a leading `N`, or prepends one.
pub fn push_neg(edge: &Edge) -> Edge {
    if edge.starts_with_neg() {
        edge.tail()
    } else {
        edge.prepend_letter(Letter::N)
    }
}

fn prepend_normalized(letter: Letter, edge: &Edge) -> Edge {
    // ℓ.• = •.ℓ_• keeps negation at the front of the word
    if edge.starts_with_neg() {
        let conj = neg_conjugate(letter).expect("elementary letter");
        edge.tail().prepend_letter(conj).prepend_letter(Letter::N)
    } else {
        edge.prepend_letter(letter)
    }
}

pub(crate) fn ensure_model(m: ModelSpec) -> Result<()> {
    if m.negation() && !m.is_stable() {
        return Err(Error::UnstableModel(m.name()));
    }
    Ok(())
}

impl Manager {
    /// Canonical edge of the constant `value` of the given arity under `m`.
    pub fn constant_edge(&mut self, m: ModelSpec, value: bool, arity: usize) -> Result<Edge> {
        ensure_model(m)?;
        if m.negation() && value {
            return Ok(push_neg(&self.constant_edge(m, false, arity)?));
        }
        if let Some(e) = self.caches.constants.get(&(m, value, arity)) {
            return Ok(e.clone());
        }
        // build bottom-up so each level finds the one below it cached
        let mut known = (0..arity)
            .rev()
            .find(|k| self.caches.constants.contains_key(&(m, value, *k)));
        if known.is_none() {
            self.caches
                .constants
                .insert((m, value, 0), Edge::terminal(value));
            known = Some(0);
        }
        let mut e = self.caches.constants[&(m, value, known.unwrap())].clone();
        for k in known.unwrap() + 1..=arity {
            e = self.cons_diamond(m, &e, &e)?;
            self.caches.constants.insert((m, value, k), e.clone());
        }
        Ok(e)
    }

    /// Handle for the constant `value` of the given arity.
    pub fn constant(&mut self, m: ModelSpec, value: bool, arity: usize) -> Result<FuncHandle> {
        let e = self.constant_edge(m, value, arity)?;
        Ok(self.reduced_handle(e, m))
    }

    /// Canonical negation of a reduced edge. Constant time in models with
    /// negation, a memoized descent otherwise.
    pub(crate) fn complement_edge(&mut self, m: ModelSpec, e: &Edge) -> Result<Edge> {
        if m.negation() {
            return Ok(push_neg(e));
        }
        self.complement_rec(m, e)
    }

    fn complement_rec(&mut self, m: ModelSpec, e: &Edge) -> Result<Edge> {
        let n = self.edge_arity(e);
        if let Some(c) = self.edge_constant(e) {
            return self.constant_edge(m, !c, n);
        }
        if let Some(r) = self.caches.complement.get(&(m, e.clone())) {
            return Ok(r.clone());
        }
        self.stats.negb_recursions += 1;
        let lo = self.cofactor_edge(m, false, e)?;
        let hi = self.cofactor_edge(m, true, e)?;
        let lo = self.complement_rec(m, &lo)?;
        let hi = self.complement_rec(m, &hi)?;
        let r = self.cons_diamond(m, &lo, &hi)?;
        self.caches.complement.insert((m, e.clone()), r.clone());
        Ok(r)
    }

    /// The reducing diamond constructor.
    ///
    /// With negation, a negated `e0` is first pulled above the diamond
    /// (`•a ⋄ b = •(a ⋄ •b)`). The intro rules of [`INTRO_PRIORITY`] are then
    /// tried in order; the first that matches prepends its letter to the
    /// surviving child, otherwise a diamond node is interned. Both inputs must
    /// already be reduced under `m`.
    pub fn cons_diamond(&mut self, m: ModelSpec, e0: &Edge, e1: &Edge) -> Result<Edge> {
        let a0 = self.edge_arity(e0);
        let a1 = self.edge_arity(e1);
        if a0 != a1 {
            return Err(Error::ArityMismatch {
                expected: a0,
                found: a1,
            });
        }
        if m.negation() && e0.starts_with_neg() {
            let inner = self.cons_plain(m, &e0.tail(), &push_neg(e1))?;
            return Ok(push_neg(&inner));
        }
        self.cons_plain(m, e0, e1)
    }

    fn cons_plain(&mut self, m: ModelSpec, e0: &Edge, e1: &Edge) -> Result<Edge> {
        for letter in INTRO_PRIORITY {
            if !m.contains(letter) {
                continue;
            }
            let hit = match letter {
                Letter::U => (e0 == e1).then_some(e0),
                Letter::X => {
                    let neg = self.complement_edge(m, e0)?;
                    (*e1 == neg).then_some(e0)
                }
                Letter::C11 => (self.edge_constant(e1) == Some(true)).then_some(e0),
                Letter::C10 => (self.edge_constant(e1) == Some(false)).then_some(e0),
                Letter::C01 => (self.edge_constant(e0) == Some(true)).then_some(e1),
                Letter::C00 => (self.edge_constant(e0) == Some(false)).then_some(e1),
                Letter::N => unreachable!(),
            };
            if let Some(survivor) = hit {
                return Ok(prepend_normalized(letter, survivor));
            }
        }
        self.intern_diamond(e0, e1)
    }

    /// Reverses the intro rule of `letter` over the edge `e` below it,
    /// returning the two children of the equivalent diamond.
    pub fn elim_letter(&mut self, m: ModelSpec, letter: Letter, e: &Edge) -> Result<(Edge, Edge)> {
        let n = self.edge_arity(e);
        match letter {
            Letter::N => Err(Error::NotElementary(Letter::N)),
            Letter::U => Ok((e.clone(), e.clone())),
            Letter::X => Ok((e.clone(), push_neg(e))),
            _ => {
                let (branch, value) = letter.as_canalizing().unwrap();
                let c = self.constant_edge(m, value, n)?;
                Ok(if branch {
                    (e.clone(), c)
                } else {
                    (c, e.clone())
                })
            }
        }
    }

    /// The reduction operator: rebuilds `h` bottom-up under `m`.
    ///
    /// `h` may be any well-formed graph using any letters; letters outside
    /// `m` are eliminated into diamonds before reintroduction.
    pub fn reduce(&mut self, m: ModelSpec, h: &FuncHandle) -> Result<FuncHandle> {
        self.check_owner(h)?;
        ensure_model(m)?;
        let e = self.reduce_edge(m, h.edge())?;
        self.enforce_memo_limit();
        Ok(self.reduced_handle(e, m))
    }

    pub(crate) fn reduce_edge(&mut self, m: ModelSpec, e: &Edge) -> Result<Edge> {
        if let Some(r) = self.caches.reduce.get(&(m, e.clone())) {
            return Ok(r.clone());
        }
        let r = match e.word().first() {
            None => match self.node(e.target()).clone() {
                Node::Zero => self.constant_edge(m, false, 0)?,
                Node::One => self.constant_edge(m, true, 0)?,
                Node::Diamond { lo, hi } => {
                    let lo = self.reduce_edge(m, &lo)?;
                    let hi = self.reduce_edge(m, &hi)?;
                    self.cons_diamond(m, &lo, &hi)?
                }
            },
            Some(Letter::N) => {
                let inner = self.reduce_edge(m, &e.tail())?;
                self.complement_edge(m, &inner)?
            }
            Some(letter) => {
                let (lo, hi) = self.elim_letter(m, letter, &e.tail())?;
                let lo = self.reduce_edge(m, &lo)?;
                let hi = self.reduce_edge(m, &hi)?;
                self.cons_diamond(m, &lo, &hi)?
            }
        };
        self.caches.reduce.insert((m, e.clone()), r.clone());
        Ok(r)
    }

    /// Canonical graph of `f` under `m`, by recursive Shannon expansion.
    pub fn compile(&mut self, m: ModelSpec, f: &TruthTable) -> Result<FuncHandle> {
        ensure_model(m)?;
        let e = self.compile_edge(m, f)?;
        self.enforce_memo_limit();
        Ok(self.reduced_handle(e, m))
    }

    fn compile_edge(&mut self, m: ModelSpec, f: &TruthTable) -> Result<Edge> {
        if f.arity() == 0 {
            return self.constant_edge(m, f.get(0), 0);
        }
        if let Some(e) = self.caches.compile.get(&(m, f.clone())) {
            return Ok(e.clone());
        }
        let (lo, hi) = f.cofactors()?;
        let lo = self.compile_edge(m, &lo)?;
        let hi = self.compile_edge(m, &hi)?;
        let e = self.cons_diamond(m, &lo, &hi)?;
        self.caches.compile.insert((m, f.clone()), e.clone());
        Ok(e)
    }
}

/// Exhaustively checks, for every function of arity at most 3, that `m`
/// compiles injectively, round-trips through the truth table, is a fixed
/// point of [`Manager::reduce`], and (with negation) that negating a function
/// toggles only the root letter.
///
/// Presets pass by construction; this is the opt-in gate for custom
/// alphabets.
pub fn certify_model(m: ModelSpec) -> Result<()> {
    let fail = |reason: String| Error::Certification {
        model: m.name(),
        reason,
    };
    ensure_model(m)?;
    let mut mgr = Manager::new();
    for n in 0..=3usize {
        let len = 1usize << n;
        let mut seen = HashSet::new();
        for code in 0..1u64 << len {
            let f = TruthTable::from_fn(n, |i| (code >> i) & 1 == 1)?;
            let h = mgr.compile(m, &f)?;
            if mgr.to_truth_table(&h)? != f {
                return Err(fail(format!("round trip of {f:?}")));
            }
            if !seen.insert(mgr.signature(&h)) {
                return Err(fail(format!("signature collision at {f:?}")));
            }
            if mgr.reduce(m, &h)? != h {
                return Err(fail(format!("not a fixed point at {f:?}")));
            }
            if m.negation() {
                let neg = mgr.compile(m, &f.not())?;
                if *neg.edge() != push_neg(h.edge()) {
                    return Err(fail(format!("negation changes more than the root at {f:?}")));
                }
            }
        }
    }
    Ok(())
}
