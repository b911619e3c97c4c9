//! Hash-consed diagram storage.
//!
//! A [`Manager`] owns every node of one diagram universe. Nodes are either one
//! of the two terminals or a diamond whose two children are word-labelled
//! [`Edge`]s of equal arity; structurally equal diamonds are interned to the
//! same [`NodeId`], so two edges denote the same subgraph iff they compare
//! equal.

mod dot;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use crate::error::{Error, Result};
use crate::letter::{Letter, Word};
use crate::oracle::{Combinator, TruthTable, MAX_ORACLE_ARITY};
use crate::reduction::ModelSpec;

static NEXT_MANAGER_ID: AtomicU32 = AtomicU32::new(0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ManagerId(u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(u32);

impl NodeId {
    /// The `0` terminal (■).
    pub const ZERO: NodeId = NodeId(0);
    /// The `1` terminal (□).
    pub const ONE: NodeId = NodeId(1);

    pub fn terminal(value: bool) -> NodeId {
        if value {
            NodeId::ONE
        } else {
            NodeId::ZERO
        }
    }

    pub fn is_terminal(self) -> bool {
        self.0 < 2
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A word-labelled pointer to an interned node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    word: Word,
    target: NodeId,
}

impl Edge {
    pub fn new(word: Word, target: NodeId) -> Edge {
        Edge { word, target }
    }

    /// ε-labelled edge to a terminal.
    pub fn terminal(value: bool) -> Edge {
        Edge::new(Word::empty(), NodeId::terminal(value))
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn target(&self) -> NodeId {
        self.target
    }

    /// Concatenates `word` in front of this edge's word. No normalization.
    pub fn prepend(&self, word: &Word) -> Edge {
        Edge::new(word.concat(&self.word), self.target)
    }

    pub fn prepend_letter(&self, letter: Letter) -> Edge {
        let mut word = self.word.clone();
        word.push_front(letter);
        Edge::new(word, self.target)
    }

    pub fn starts_with_neg(&self) -> bool {
        self.word.first() == Some(Letter::N)
    }

    /// The same edge without its first letter.
    pub fn tail(&self) -> Edge {
        Edge::new(self.word.tail(), self.target)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    /// ■
    Zero,
    /// □
    One,
    /// `lo ⋄ hi`; `lo` is the `x0 = 0` branch.
    Diamond { lo: Edge, hi: Edge },
}

#[derive(Clone, Debug)]
struct NodeData {
    node: Node,
    arity: usize,
    constant: Option<bool>,
}

/// A function handle: a root edge together with its arity.
///
/// `model` is the model the edge was reduced under, or `None` for raw graphs
/// assembled by hand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FuncHandle {
    edge: Edge,
    arity: usize,
    model: Option<ModelSpec>,
    manager: ManagerId,
}

impl FuncHandle {
    pub fn edge(&self) -> &Edge {
        &self.edge
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn model(&self) -> Option<ModelSpec> {
        self.model
    }

    pub fn manager(&self) -> ManagerId {
        self.manager
    }
}

/// Counters for the instrumented operations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpStats {
    /// Distinct `(a, b)` pairs for which `andb` recursed.
    pub andb_pairs: u64,
    /// Distinct pairs for which the xor recursion ran.
    pub xor_pairs: u64,
    /// Recursive calls made by negation (zero in models with negation).
    pub negb_recursions: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum BinKind {
    And,
    Xor,
}

#[derive(Default)]
pub(crate) struct Caches {
    pub constants: HashMap<(ModelSpec, bool, usize), Edge>,
    pub compile: HashMap<(ModelSpec, TruthTable), Edge>,
    pub reduce: HashMap<(ModelSpec, Edge), Edge>,
    pub complement: HashMap<(ModelSpec, Edge), Edge>,
    pub binary: HashMap<(BinKind, ModelSpec, Edge, Edge), Edge>,
}

impl Caches {
    fn memo_len(&self) -> usize {
        self.compile.len() + self.reduce.len() + self.complement.len() + self.binary.len()
    }
}

/// Interning and memoization authority for one diagram universe.
pub struct Manager {
    id: ManagerId,
    nodes: Vec<NodeData>,
    unique: HashMap<(Edge, Edge), NodeId>,
    pub(crate) caches: Caches,
    pub(crate) stats: OpStats,
    memo_limit: Option<usize>,
}

impl Default for Manager {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Debug for Manager {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Manager")
            .field("id", &self.id)
            .field("nodes", &self.nodes.len())
            .finish()
    }
}

impl Manager {
    pub fn new() -> Manager {
        let terminal = |node, value| NodeData {
            node,
            arity: 0,
            constant: Some(value),
        };
        Manager {
            id: ManagerId(NEXT_MANAGER_ID.fetch_add(1, Ordering::Relaxed)),
            nodes: vec![terminal(Node::Zero, false), terminal(Node::One, true)],
            unique: HashMap::new(),
            caches: Caches::default(),
            stats: OpStats::default(),
            memo_limit: None,
        }
    }

    /// Caps the number of memoized results; once exceeded, all operation
    /// memo tables are flushed. Interned nodes are never dropped.
    pub fn with_memo_limit(mut self, limit: usize) -> Manager {
        self.memo_limit = Some(limit);
        self
    }

    pub fn id(&self) -> ManagerId {
        self.id
    }

    /// Total interned nodes, terminals included.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.index()].node
    }

    pub fn node_arity(&self, id: NodeId) -> usize {
        self.nodes[id.index()].arity
    }

    pub fn edge_arity(&self, edge: &Edge) -> usize {
        edge.word.elementary_len() + self.node_arity(edge.target)
    }

    pub fn stats(&self) -> OpStats {
        self.stats
    }

    pub fn reset_stats(&mut self) {
        self.stats = OpStats::default();
    }

    /// Drops every operation memo table (constants and interned nodes stay).
    pub fn clear_memo(&mut self) {
        let constants = std::mem::take(&mut self.caches.constants);
        self.caches = Caches {
            constants,
            ..Caches::default()
        };
    }

    pub(crate) fn enforce_memo_limit(&mut self) {
        if let Some(limit) = self.memo_limit {
            if self.caches.memo_len() > limit {
                self.clear_memo();
            }
        }
    }

    /// Interns `lo ⋄ hi` without any reduction and returns an ε-edge to it.
    pub fn intern_diamond(&mut self, lo: &Edge, hi: &Edge) -> Result<Edge> {
        let lo_arity = self.edge_arity(lo);
        let hi_arity = self.edge_arity(hi);
        if lo_arity != hi_arity {
            return Err(Error::ArityMismatch {
                expected: lo_arity,
                found: hi_arity,
            });
        }
        let key = (lo.clone(), hi.clone());
        if let Some(&id) = self.unique.get(&key) {
            return Ok(Edge::new(Word::empty(), id));
        }
        let constant = match (self.edge_constant(lo), self.edge_constant(hi)) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        let id = NodeId(u32::try_from(self.nodes.len()).expect("node table overflow"));
        self.nodes.push(NodeData {
            node: Node::Diamond {
                lo: lo.clone(),
                hi: hi.clone(),
            },
            arity: lo_arity + 1,
            constant,
        });
        self.unique.insert(key, id);
        Ok(Edge::new(Word::empty(), id))
    }

    /// Constant value of the function below `edge`, if it is constant.
    ///
    /// Exact for raw graphs too: a diamond is constant iff both children are
    /// the same constant.
    pub fn edge_constant(&self, edge: &Edge) -> Option<bool> {
        let node_const = self.nodes[edge.target.index()].constant;
        edge.word
            .letters()
            .iter()
            .rev()
            .fold(node_const, |c, &l| letter_constant(l, c))
    }

    /// `out[i]` is the constant value of the suffix of `edge` starting at
    /// letter `i`; `out[len]` is the target node's.
    pub(crate) fn suffix_constants(&self, edge: &Edge) -> Vec<Option<bool>> {
        let letters = edge.word.letters();
        let mut out = vec![None; letters.len() + 1];
        out[letters.len()] = self.nodes[edge.target.index()].constant;
        for i in (0..letters.len()).rev() {
            out[i] = letter_constant(letters[i], out[i + 1]);
        }
        out
    }

    /// Wraps a hand-built edge into a handle (no model attached).
    pub fn raw_handle(&self, edge: Edge) -> FuncHandle {
        let arity = self.edge_arity(&edge);
        FuncHandle {
            edge,
            arity,
            model: None,
            manager: self.id,
        }
    }

    pub(crate) fn reduced_handle(&self, edge: Edge, model: ModelSpec) -> FuncHandle {
        let arity = self.edge_arity(&edge);
        FuncHandle {
            edge,
            arity,
            model: Some(model),
            manager: self.id,
        }
    }

    pub(crate) fn check_owner(&self, h: &FuncHandle) -> Result<()> {
        if h.manager != self.id {
            return Err(Error::ForeignManager);
        }
        Ok(())
    }

    /// Evaluates `h` on `valuation` by walking the graph from the root.
    pub fn eval(&self, h: &FuncHandle, valuation: &[bool]) -> Result<bool> {
        self.check_owner(h)?;
        if valuation.len() != h.arity {
            return Err(Error::ValuationLength {
                expected: h.arity,
                found: valuation.len(),
            });
        }
        let mut parity = false;
        let mut var = 0;
        let mut edge = &h.edge;
        loop {
            for &l in edge.word.letters() {
                match l {
                    Letter::N => parity = !parity,
                    Letter::U => var += 1,
                    Letter::X => {
                        parity ^= valuation[var];
                        var += 1;
                    }
                    _ => {
                        let (branch, value) = l.as_canalizing().unwrap();
                        if valuation[var] == branch {
                            return Ok(value ^ parity);
                        }
                        var += 1;
                    }
                }
            }
            match self.node(edge.target) {
                Node::Zero => return Ok(parity),
                Node::One => return Ok(!parity),
                Node::Diamond { lo, hi } => {
                    edge = if valuation[var] { hi } else { lo };
                    var += 1;
                }
            }
        }
    }

    /// Dense truth table of `h`.
    pub fn to_truth_table(&self, h: &FuncHandle) -> Result<TruthTable> {
        self.check_owner(h)?;
        if h.arity > MAX_ORACLE_ARITY {
            return Err(Error::ArityTooLarge {
                arity: h.arity,
                max: MAX_ORACLE_ARITY,
            });
        }
        let mut memo = HashMap::new();
        self.edge_table(&h.edge, &mut memo)
    }

    pub(crate) fn edge_table(
        &self,
        edge: &Edge,
        memo: &mut HashMap<NodeId, TruthTable>,
    ) -> Result<TruthTable> {
        let mut t = self.node_table(edge.target, memo)?;
        for &l in edge.word.letters().iter().rev() {
            t = TruthTable::apply_functor(l, &t)?;
        }
        Ok(t)
    }

    pub(crate) fn node_table(
        &self,
        id: NodeId,
        memo: &mut HashMap<NodeId, TruthTable>,
    ) -> Result<TruthTable> {
        if let Some(t) = memo.get(&id) {
            return Ok(t.clone());
        }
        let t = match self.node(id) {
            Node::Zero => TruthTable::constant(0, false)?,
            Node::One => TruthTable::constant(0, true)?,
            Node::Diamond { lo, hi } => {
                let (lo, hi) = (lo.clone(), hi.clone());
                let a = self.edge_table(&lo, memo)?;
                let b = self.edge_table(&hi, memo)?;
                TruthTable::combine(Combinator::Shannon, &a, &b)?
            }
        };
        memo.insert(id, t.clone());
        Ok(t)
    }

    /// Deterministic textual form of the graph below `h`.
    ///
    /// `sig(edge) = "[" word "]" sig(target)` with the word dot-joined (`e`
    /// when empty); `sig(■) = "0"`, `sig(□) = "1"`,
    /// `sig(lo ⋄ hi) = "(" sig(lo) "," sig(hi) ")"`.
    pub fn signature(&self, h: &FuncHandle) -> String {
        let mut memo = HashMap::new();
        let mut out = String::new();
        self.write_edge_sig(&h.edge, &mut memo, &mut out);
        out
    }

    fn write_edge_sig(&self, edge: &Edge, memo: &mut HashMap<NodeId, String>, out: &mut String) {
        out.push('[');
        out.push_str(&edge.word.to_string());
        out.push(']');
        if let Some(s) = memo.get(&edge.target) {
            out.push_str(s);
            return;
        }
        let mut s = String::new();
        match self.node(edge.target) {
            Node::Zero => s.push('0'),
            Node::One => s.push('1'),
            Node::Diamond { lo, hi } => {
                s.push('(');
                self.write_edge_sig(lo, memo, &mut s);
                s.push(',');
                self.write_edge_sig(hi, memo, &mut s);
                s.push(')');
            }
        }
        out.push_str(&s);
        memo.insert(edge.target, s);
    }

    /// Distinct nodes reachable from `edge`, in depth-first preorder.
    pub fn reachable_nodes(&self, edge: &Edge) -> Vec<NodeId> {
        let mut seen = std::collections::HashSet::new();
        let mut order = Vec::new();
        let mut stack = vec![edge.target];
        while let Some(id) = stack.pop() {
            if !seen.insert(id) {
                continue;
            }
            order.push(id);
            if let Node::Diamond { lo, hi } = self.node(id) {
                stack.push(hi.target);
                stack.push(lo.target);
            }
        }
        order
    }

    /// Distinct edges reachable from `edge`, the root edge included.
    pub fn reachable_edges(&self, edge: &Edge) -> Vec<Edge> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        if seen.insert(edge.clone()) {
            out.push(edge.clone());
        }
        for id in self.reachable_nodes(edge) {
            if let Node::Diamond { lo, hi } = self.node(id) {
                for e in [lo, hi] {
                    if seen.insert(e.clone()) {
                        out.push(e.clone());
                    }
                }
            }
        }
        out
    }
}

fn letter_constant(letter: Letter, below: Option<bool>) -> Option<bool> {
    match letter {
        Letter::N => below.map(|c| !c),
        Letter::U => below,
        Letter::X => None,
        _ => {
            let (_, value) = letter.as_canalizing().unwrap();
            (below == Some(value)).then_some(value)
        }
    }
}
