//! Boolean connectives over reduced graphs.

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::graph::{BinKind, Edge, FuncHandle, Manager, Node};
use crate::letter::Letter;
use crate::oracle::TruthTable;
use crate::reduction::{push_neg, ModelSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    And,
    Or,
    Xor,
    Implies,
}

impl std::str::FromStr for BinOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "and" => Ok(BinOp::And),
            "or" => Ok(BinOp::Or),
            "xor" => Ok(BinOp::Xor),
            "implies" | "imp" => Ok(BinOp::Implies),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown operator `{other}`"),
            }),
        }
    }
}

fn ordered(a: &Edge, b: &Edge) -> (Edge, Edge) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl Manager {
    fn model_of(&self, h: &FuncHandle) -> Result<ModelSpec> {
        self.check_owner(h)?;
        h.model().ok_or(Error::NotReduced)
    }

    fn binary_model(&self, a: &FuncHandle, b: &FuncHandle) -> Result<ModelSpec> {
        let ma = self.model_of(a)?;
        let mb = self.model_of(b)?;
        if ma != mb {
            return Err(Error::ModelMismatch(ma.name(), mb.name()));
        }
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch {
                expected: a.arity(),
                found: b.arity(),
            });
        }
        Ok(ma)
    }

    /// `h` with `x0` fixed to `value`; the result has arity `n - 1`.
    pub fn cofactor(&mut self, value: bool, h: &FuncHandle) -> Result<FuncHandle> {
        let m = self.model_of(h)?;
        if h.arity() == 0 {
            return Err(Error::ArityZero);
        }
        let e = self.cofactor_edge(m, value, h.edge())?;
        Ok(self.reduced_handle(e, m))
    }

    pub(crate) fn cofactor_edge(&mut self, m: ModelSpec, value: bool, e: &Edge) -> Result<Edge> {
        if e.starts_with_neg() {
            let inner = self.cofactor_edge(m, value, &e.tail())?;
            return self.complement_edge(m, &inner);
        }
        match e.word().first() {
            None => match self.node(e.target()) {
                Node::Diamond { lo, hi } => Ok(if value { hi.clone() } else { lo.clone() }),
                _ => Err(Error::ArityZero),
            },
            Some(Letter::U) => Ok(e.tail()),
            Some(Letter::X) => {
                if value {
                    self.complement_edge(m, &e.tail())
                } else {
                    Ok(e.tail())
                }
            }
            Some(l) => {
                let (branch, constant) = l.as_canalizing().expect("N handled above");
                if value == branch {
                    let n = self.edge_arity(e) - 1;
                    self.constant_edge(m, constant, n)
                } else {
                    Ok(e.tail())
                }
            }
        }
    }

    /// Conjunction.
    pub fn andb(&mut self, a: &FuncHandle, b: &FuncHandle) -> Result<FuncHandle> {
        let m = self.binary_model(a, b)?;
        let e = self.and_edge(m, a.edge(), b.edge())?;
        self.enforce_memo_limit();
        Ok(self.reduced_handle(e, m))
    }

    fn and_edge(&mut self, m: ModelSpec, a: &Edge, b: &Edge) -> Result<Edge> {
        if a == b {
            return Ok(a.clone());
        }
        if m.negation() && *a == push_neg(b) {
            let n = self.edge_arity(a);
            return self.constant_edge(m, false, n);
        }
        match self.edge_constant(a) {
            Some(false) => return Ok(a.clone()),
            Some(true) => return Ok(b.clone()),
            None => {}
        }
        match self.edge_constant(b) {
            Some(false) => return Ok(b.clone()),
            Some(true) => return Ok(a.clone()),
            None => {}
        }
        let (ka, kb) = ordered(a, b);
        let key = (BinKind::And, m, ka, kb);
        if let Some(r) = self.caches.binary.get(&key) {
            return Ok(r.clone());
        }
        self.stats.andb_pairs += 1;
        let a0 = self.cofactor_edge(m, false, a)?;
        let a1 = self.cofactor_edge(m, true, a)?;
        let b0 = self.cofactor_edge(m, false, b)?;
        let b1 = self.cofactor_edge(m, true, b)?;
        let lo = self.and_edge(m, &a0, &b0)?;
        let hi = self.and_edge(m, &a1, &b1)?;
        let r = self.cons_diamond(m, &lo, &hi)?;
        self.caches.binary.insert(key, r.clone());
        Ok(r)
    }

    /// Negation: toggles the root letter in models with negation, rebuilds
    /// the graph otherwise.
    pub fn negb(&mut self, h: &FuncHandle) -> Result<FuncHandle> {
        let m = self.model_of(h)?;
        let e = self.complement_edge(m, h.edge())?;
        Ok(self.reduced_handle(e, m))
    }

    fn xor_edge(&mut self, m: ModelSpec, a: &Edge, b: &Edge) -> Result<Edge> {
        if m.negation() && (a.starts_with_neg() || b.starts_with_neg()) {
            let flip = a.starts_with_neg() != b.starts_with_neg();
            let a = if a.starts_with_neg() { a.tail() } else { a.clone() };
            let b = if b.starts_with_neg() { b.tail() } else { b.clone() };
            let r = self.xor_edge(m, &a, &b)?;
            return Ok(if flip { push_neg(&r) } else { r });
        }
        let n = self.edge_arity(a);
        if a == b {
            return self.constant_edge(m, false, n);
        }
        if m.negation() && *a == push_neg(b) {
            return self.constant_edge(m, true, n);
        }
        match self.edge_constant(a) {
            Some(false) => return Ok(b.clone()),
            Some(true) => return self.complement_edge(m, b),
            None => {}
        }
        match self.edge_constant(b) {
            Some(false) => return Ok(a.clone()),
            Some(true) => return self.complement_edge(m, a),
            None => {}
        }
        let (ka, kb) = ordered(a, b);
        let key = (BinKind::Xor, m, ka, kb);
        if let Some(r) = self.caches.binary.get(&key) {
            return Ok(r.clone());
        }
        self.stats.xor_pairs += 1;
        let a0 = self.cofactor_edge(m, false, a)?;
        let a1 = self.cofactor_edge(m, true, a)?;
        let b0 = self.cofactor_edge(m, false, b)?;
        let b1 = self.cofactor_edge(m, true, b)?;
        let lo = self.xor_edge(m, &a0, &b0)?;
        let hi = self.xor_edge(m, &a1, &b1)?;
        let r = self.cons_diamond(m, &lo, &hi)?;
        self.caches.binary.insert(key, r.clone());
        Ok(r)
    }

    /// Binary connective; `or` and `implies` go through `andb` and negation.
    pub fn apply(&mut self, op: BinOp, a: &FuncHandle, b: &FuncHandle) -> Result<FuncHandle> {
        let m = self.binary_model(a, b)?;
        let (a, b) = (a.edge(), b.edge());
        let e = match op {
            BinOp::And => self.and_edge(m, a, b)?,
            BinOp::Xor => self.xor_edge(m, a, b)?,
            BinOp::Or => {
                let na = self.complement_edge(m, a)?;
                let nb = self.complement_edge(m, b)?;
                let r = self.and_edge(m, &na, &nb)?;
                self.complement_edge(m, &r)?
            }
            BinOp::Implies => {
                let nb = self.complement_edge(m, b)?;
                let r = self.and_edge(m, a, &nb)?;
                self.complement_edge(m, &r)?
            }
        };
        self.enforce_memo_limit();
        Ok(self.reduced_handle(e, m))
    }

    /// Builds the diagram of `expr` over `arity` variables bottom-up.
    pub fn build_expr(&mut self, m: ModelSpec, expr: &Expr, arity: usize) -> Result<FuncHandle> {
        if let Some(index) = expr.max_var().filter(|&v| v >= arity) {
            return Err(Error::VariableOutOfRange {
                index,
                arity,
                offset: 0,
            });
        }
        match expr {
            Expr::Const(v) => self.constant(m, *v, arity),
            Expr::Var(i) => self.compile(m, &TruthTable::projection(arity, *i)?),
            Expr::Not(inner) => {
                let h = self.build_expr(m, inner, arity)?;
                self.negb(&h)
            }
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Xor(a, b) => {
                let op = match expr {
                    Expr::And(..) => BinOp::And,
                    Expr::Or(..) => BinOp::Or,
                    _ => BinOp::Xor,
                };
                let a = self.build_expr(m, a, arity)?;
                let b = self.build_expr(m, b, arity)?;
                self.apply(op, &a, &b)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    const NUCX: ModelSpec = ModelSpec::O_NUCX;

    fn proj(m: &mut Manager, n: usize, i: usize) -> FuncHandle {
        m.compile(NUCX, &TruthTable::projection(n, i).unwrap()).unwrap()
    }

    #[test]
    fn cofactor_examples() {
        let mut m = Manager::new();
        let x = proj(&mut m, 1, 0);
        let c = m.cofactor(true, &x).unwrap();
        assert_eq!(m.signature(&c), "[N]0");

        let u = m.constant(NUCX, false, 1).unwrap();
        let u2 = m.compile(NUCX, &TruthTable::from_hex(2, "5").unwrap()).unwrap();
        assert_eq!(m.signature(&u2), "[U.X]0");
        let c = m.cofactor(false, &u2).unwrap();
        assert_eq!(m.signature(&c), "[X]0");

        let f = m.compile(NUCX, &TruthTable::from_hex(2, "1").unwrap()).unwrap();
        assert_eq!(m.cofactor(false, &f).unwrap(), u);
        let zero = m.constant(NUCX, false, 0).unwrap();
        assert_eq!(m.cofactor(false, &zero), Err(Error::ArityZero));
    }

    #[test]
    fn andb_examples() {
        let mut m = Manager::new();
        let x0 = proj(&mut m, 2, 0);
        let x1 = proj(&mut m, 2, 1);
        assert_eq!(m.andb(&x0, &x0).unwrap(), x0);
        let nx0 = m.negb(&x0).unwrap();
        let z = m.andb(&x0, &nx0).unwrap();
        assert_eq!(m.signature(&z), "[U.U]0");
        let a = m.andb(&x0, &x1).unwrap();
        assert_eq!(m.signature(&a), "[C00.X]0");
    }

    #[test]
    fn negb_examples() {
        let mut m = Manager::new();
        let x = proj(&mut m, 1, 0);
        let n = m.negb(&x).unwrap();
        assert_eq!(m.signature(&n), "[N.X]0");
        assert_eq!(m.negb(&n).unwrap(), x);

        let z = m.constant(ModelSpec::S, false, 2).unwrap();
        let one = m.negb(&z).unwrap();
        assert_eq!(one, m.constant(ModelSpec::S, true, 2).unwrap());
    }

    #[test]
    fn apply_examples() {
        let mut m = Manager::new();
        let a = m.compile(NUCX, &TruthTable::from_hex(2, "6").unwrap()).unwrap();
        let zero = m.constant(NUCX, false, 2).unwrap();
        assert_eq!(m.apply(BinOp::Or, &a, &zero).unwrap(), a);
        assert_eq!(m.apply(BinOp::Xor, &a, &a).unwrap(), zero);

        let e = parse_expr("x1 ^ x2", 4).unwrap();
        let p = m.build_expr(NUCX, &e, 4).unwrap();
        let e = parse_expr("~x0 & x3", 4).unwrap();
        let q = m.build_expr(NUCX, &e, 4).unwrap();
        let r = m.apply(BinOp::Xor, &p, &q).unwrap();
        let oracle = m.to_truth_table(&p).unwrap().xor(&m.to_truth_table(&q).unwrap()).unwrap();
        assert_eq!(r, m.compile(NUCX, &oracle).unwrap());
    }

    #[test]
    fn mixed_operands_are_rejected() {
        let mut m = Manager::new();
        let a = m.constant(NUCX, false, 2).unwrap();
        let b = m.constant(ModelSpec::O_U, false, 2).unwrap();
        assert!(matches!(m.andb(&a, &b), Err(Error::ModelMismatch(..))));
        let c = m.constant(NUCX, false, 1).unwrap();
        assert!(matches!(m.andb(&a, &c), Err(Error::ArityMismatch { .. })));
        let mut other = Manager::new();
        let d = other.constant(NUCX, false, 2).unwrap();
        assert_eq!(m.andb(&a, &d), Err(Error::ForeignManager));
        let raw = m.raw_handle(a.edge().clone());
        assert_eq!(m.andb(&raw, &a), Err(Error::NotReduced));
    }

    #[test]
    fn build_expr_examples() {
        let mut m = Manager::new();
        let h = m.build_expr(NUCX, &parse_expr("x0", 1).unwrap(), 1).unwrap();
        assert_eq!(m.signature(&h), "[X]0");
        let h = m
            .build_expr(NUCX, &parse_expr("~x0 & x3 ^ x1 ^ x2", 4).unwrap(), 4)
            .unwrap();
        assert_eq!(m.measure(&h).unwrap().diamonds, 1);
        let h = m.build_expr(NUCX, &parse_expr("0", 3).unwrap(), 3).unwrap();
        assert_eq!(h, m.constant(NUCX, false, 3).unwrap());
        assert!(m.build_expr(NUCX, &Expr::Var(3), 3).is_err());
    }
}
