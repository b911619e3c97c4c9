//! Canonical ordered decision diagrams whose edges carry words of typed
//! variable letters.
//!
//! A [`Manager`] owns a hash-consed node store. Functions are built either
//! from truth tables ([`Manager::compile`]), from expressions
//! ([`Manager::build_expr`]) or by reducing raw graphs ([`Manager::reduce`]),
//! always with respect to a [`ModelSpec`] naming which letters may label
//! edges. Within one model, equal functions get identical root edges.
//!
//! ```
//! use lambdd::{parse_expr, Manager, ModelSpec};
//!
//! let mut mgr = Manager::new();
//! let e = parse_expr("x1 ^ x2 ^ (~x0 & x3)", 4).unwrap();
//! let f = mgr.build_expr(ModelSpec::O_NUCX, &e, 4).unwrap();
//! assert_eq!(mgr.measure(&f).unwrap().diamonds, 1);
//! assert_eq!(mgr.count_sat(&f).unwrap(), 8u32.into());
//! ```

pub mod connectives;
pub mod error;
pub mod expr;
pub mod graph;
pub mod letter;
pub mod metrics;
pub mod num;
pub mod oracle;
pub mod queries;
pub mod reduction;

pub use connectives::BinOp;
pub use error::{Error, Result};
pub use expr::{parse_expr, Expr};
pub use graph::{Edge, FuncHandle, Manager, ManagerId, Node, NodeId, OpStats};
pub use letter::{Letter, Word};
pub use metrics::{check_bounds, run_bench, BenchConfig, BenchOutcome, BoundVerdict, SizeReport, CSV_HEADER};
pub use num::Count;
pub use oracle::{BoolOp, Combinator, TruthTable, TopVariable, VarKind};
pub use queries::AllSat;
pub use reduction::{certify_model, covering_pairs, lattice_leq, push_neg, translate_letter, ModelSpec, DAVIO_TABLE};

/// Exact model count type returned by [`Manager::count_sat`].
pub type ModelCount = num_bigint::BigUint;
