//! Satisfiability, tautology, equivalence and model counting/enumeration.
//!
//! All queries here are exact on raw graphs too: they rely only on the
//! per-node constant flag maintained by the manager, never on the model.

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Edge, FuncHandle, Manager, Node, NodeId};
use crate::letter::Letter;
use crate::num::Count;

impl Manager {
    /// Constant value of `h` (if any) and the number of letters inspected to
    /// decide it, which never exceeds the root word length.
    pub fn constant_probe(&self, h: &FuncHandle) -> Result<(Option<bool>, usize)> {
        self.check_owner(h)?;
        Ok((self.edge_constant(h.edge()), h.edge().word().len()))
    }

    pub fn is_sat(&self, h: &FuncHandle) -> Result<bool> {
        Ok(self.constant_probe(h)?.0 != Some(false))
    }

    pub fn is_taut(&self, h: &FuncHandle) -> Result<bool> {
        Ok(self.constant_probe(h)?.0 == Some(true))
    }

    /// Semantic equality of two handles reduced under the same model.
    pub fn equiv(&self, a: &FuncHandle, b: &FuncHandle) -> Result<bool> {
        self.check_owner(a)?;
        self.check_owner(b)?;
        let (ma, mb) = (
            a.model().ok_or(Error::NotReduced)?,
            b.model().ok_or(Error::NotReduced)?,
        );
        if ma != mb {
            return Err(Error::ModelMismatch(ma.name(), mb.name()));
        }
        Ok(a.arity() == b.arity() && a.edge() == b.edge())
    }

    /// Number of satisfying valuations.
    pub fn count_sat(&self, h: &FuncHandle) -> Result<BigUint> {
        self.count_sat_as::<BigUint>(h)
    }

    /// [`Manager::count_sat`] accumulated in any numeric type.
    pub fn count_sat_as<T: Count>(&self, h: &FuncHandle) -> Result<T> {
        self.check_owner(h)?;
        let mut memo = HashMap::new();
        Ok(self.count_edge(h.edge(), &mut memo))
    }

    fn count_edge<T: Count>(&self, e: &Edge, memo: &mut HashMap<NodeId, T>) -> T {
        let mut count = self.count_node(e.target(), memo);
        let mut arity = self.node_arity(e.target());
        for &l in e.word().letters().iter().rev() {
            count = match l {
                Letter::N => T::pow2(arity) - count,
                Letter::U => count.clone() + count,
                Letter::X => T::pow2(arity),
                _ => {
                    let (_, value) = l.as_canalizing().unwrap();
                    if value {
                        T::pow2(arity) + count
                    } else {
                        count
                    }
                }
            };
            if l.is_elementary() {
                arity += 1;
            }
        }
        count
    }

    fn count_node<T: Count>(&self, id: NodeId, memo: &mut HashMap<NodeId, T>) -> T {
        if let Some(c) = memo.get(&id) {
            return c.clone();
        }
        let c = match self.node(id) {
            Node::Zero => T::zero(),
            Node::One => T::one(),
            Node::Diamond { lo, hi } => self.count_edge(lo, memo) + self.count_edge(hi, memo),
        };
        memo.insert(id, c.clone());
        c
    }

    /// Some satisfying valuation, found in one root-to-leaf descent.
    pub fn any_sat(&self, h: &FuncHandle) -> Result<Option<Vec<bool>>> {
        self.check_owner(h)?;
        let mut cur = Cursor::root(self, h.edge());
        if !cur.satisfiable() {
            return Ok(None);
        }
        let mut out = Vec::with_capacity(h.arity());
        for _ in 0..h.arity() {
            let zero = cur.step(self, false);
            if zero.satisfiable() {
                out.push(false);
                cur = zero;
            } else {
                out.push(true);
                cur = cur.step(self, true);
            }
        }
        Ok(Some(out))
    }

    /// Every satisfying valuation exactly once, lexicographically (`x0`
    /// most significant, `false < true`), produced lazily.
    pub fn all_sat<'a>(&'a self, h: &'a FuncHandle) -> Result<AllSat<'a>> {
        self.check_owner(h)?;
        let root = Cursor::root(self, h.edge());
        let stack = if root.satisfiable() {
            vec![Frame {
                depth: 0,
                bit: false,
                cursor: root,
            }]
        } else {
            Vec::new()
        };
        Ok(AllSat {
            mgr: self,
            arity: h.arity(),
            stack,
            current: Vec::with_capacity(h.arity()),
        })
    }
}

/// Position inside the graph during a descent: a letter of some edge under a
/// negation parity, or a subfunction already known to be constant.
#[derive(Clone)]
enum Cursor<'a> {
    Const(bool),
    At {
        edge: &'a Edge,
        consts: Rc<[Option<bool>]>,
        pos: usize,
        parity: bool,
    },
}

impl<'a> Cursor<'a> {
    fn root(mgr: &Manager, edge: &'a Edge) -> Cursor<'a> {
        Cursor::enter(mgr, edge, false)
    }

    fn enter(mgr: &Manager, edge: &'a Edge, parity: bool) -> Cursor<'a> {
        Cursor::At {
            edge,
            consts: mgr.suffix_constants(edge).into(),
            pos: 0,
            parity,
        }
    }

    fn satisfiable(&self) -> bool {
        match self {
            Cursor::Const(v) => *v,
            Cursor::At {
                consts,
                pos,
                parity,
                ..
            } => consts[*pos].is_none_or(|c| c ^ parity),
        }
    }

    /// Consumes the next variable with value `bit`.
    fn step(&self, mgr: &'a Manager, bit: bool) -> Cursor<'a> {
        let Cursor::At {
            edge,
            consts,
            mut pos,
            mut parity,
        } = self.clone()
        else {
            return self.clone();
        };
        let letters = edge.word().letters();
        while pos < letters.len() && letters[pos] == Letter::N {
            parity = !parity;
            pos += 1;
        }
        let at = |pos, parity| Cursor::At {
            edge,
            consts: consts.clone(),
            pos,
            parity,
        };
        if pos < letters.len() {
            return match letters[pos] {
                Letter::U => at(pos + 1, parity),
                Letter::X => at(pos + 1, parity ^ bit),
                l => {
                    let (branch, value) = l.as_canalizing().unwrap();
                    if bit == branch {
                        Cursor::Const(value ^ parity)
                    } else {
                        at(pos + 1, parity)
                    }
                }
            };
        }
        match mgr.node(edge.target()) {
            Node::Diamond { lo, hi } => Cursor::enter(mgr, if bit { hi } else { lo }, parity),
            _ => unreachable!("descended past the last variable"),
        }
    }
}

struct Frame<'a> {
    depth: usize,
    bit: bool,
    cursor: Cursor<'a>,
}

/// Iterator returned by [`Manager::all_sat`].
pub struct AllSat<'a> {
    mgr: &'a Manager,
    arity: usize,
    stack: Vec<Frame<'a>>,
    current: Vec<bool>,
}

impl Iterator for AllSat<'_> {
    type Item = Vec<bool>;

    fn next(&mut self) -> Option<Vec<bool>> {
        while let Some(frame) = self.stack.pop() {
            if frame.depth > 0 {
                self.current.truncate(frame.depth - 1);
                self.current.push(frame.bit);
            }
            if frame.depth == self.arity {
                return Some(self.current.clone());
            }
            for bit in [true, false] {
                let next = frame.cursor.step(self.mgr, bit);
                if next.satisfiable() {
                    self.stack.push(Frame {
                        depth: frame.depth + 1,
                        bit,
                        cursor: next,
                    });
                }
            }
        }
        None
    }
}
