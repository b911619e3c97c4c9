//! Size accounting and empirical checks of the compression bounds between
//! comparable models.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{FuncHandle, Manager, Node};
use crate::oracle::TruthTable;
use crate::reduction::ModelSpec;

pub const CSV_HEADER: &str = "model,arity,seed,diamonds,letters,s_size";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeReport {
    pub model: String,
    pub arity: usize,
    /// Distinct reachable diamond nodes.
    pub diamonds: usize,
    /// Distinct reachable terminal nodes (0, 1 or 2).
    pub terminals: usize,
    /// Elementary letters summed over distinct reachable edges.
    pub letters: usize,
    /// Negation letters summed over distinct reachable edges.
    pub neg_letters: usize,
    /// `diamonds + letters`.
    pub s_size: usize,
}

impl SizeReport {
    /// Node count used by the bounds: diamonds plus reachable terminals.
    pub fn nodes(&self) -> usize {
        self.diamonds + self.terminals
    }

    /// `letters <= (2 * diamonds + 1) * arity`.
    pub fn label_bound_holds(&self) -> bool {
        self.letters <= (2 * self.diamonds + 1) * self.arity
    }

    /// One CSV row; `seed` is left empty when `None`.
    pub fn csv_row(&self, seed: Option<u64>) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.model,
            self.arity,
            seed.map(|s| s.to_string()).unwrap_or_default(),
            self.diamonds,
            self.letters,
            self.s_size
        )
    }
}

impl Manager {
    pub fn measure(&self, h: &FuncHandle) -> Result<SizeReport> {
        self.check_owner(h)?;
        let mut diamonds = 0;
        let mut terminals = 0;
        for id in self.reachable_nodes(h.edge()) {
            match self.node(id) {
                Node::Diamond { .. } => diamonds += 1,
                _ => terminals += 1,
            }
        }
        let (mut letters, mut neg_letters) = (0, 0);
        for e in self.reachable_edges(h.edge()) {
            let total = e.word().len();
            let elementary = e.word().elementary_len();
            letters += elementary;
            neg_letters += total - elementary;
        }
        Ok(SizeReport {
            model: h.model().map_or_else(|| "raw".to_string(), |m| m.name()),
            arity: h.arity(),
            diamonds,
            terminals,
            letters,
            neg_letters,
            s_size: diamonds + letters,
        })
    }

    /// Compiles `f` under `a` and `b` (`a <= b`) and compares their sizes.
    pub fn check_bounds(&mut self, f: &TruthTable, a: ModelSpec, b: ModelSpec) -> Result<BoundVerdict> {
        if !a.leq(b) {
            return Err(Error::IncomparableModels(a.name(), b.name()));
        }
        let ha = self.compile(a, f)?;
        let hb = self.compile(b, f)?;
        let n_a = self.measure(&ha)?.nodes();
        let n_b = self.measure(&hb)?.nodes();
        let n = f.arity();
        let negation_pair = !a.negation() && b == a.with_negation(true);
        Ok(BoundVerdict {
            a,
            b,
            arity: n,
            n_a,
            n_b,
            lower: n_b <= n_a,
            upper: 2 * n_a <= (n + 1) * (n_b + 1),
            negation: negation_pair.then_some(n_a <= 2 * n_b),
        })
    }

    /// Bound between two models that need not be comparable, routed through
    /// their meet: `N_b1 <= (n+1)/2 * (N_b2 + 1)`.
    pub fn check_cross_bound(&mut self, f: &TruthTable, b1: ModelSpec, b2: ModelSpec) -> Result<bool> {
        let lower = b1.meet(b2);
        let h1 = self.compile(b1, f)?;
        let h2 = self.compile(b2, f)?;
        let hl = self.compile(lower, f)?;
        let n1 = self.measure(&h1)?.nodes();
        let n2 = self.measure(&h2)?.nodes();
        let nl = self.measure(&hl)?.nodes();
        let n = f.arity();
        let through_meet = n1 <= nl && 2 * nl <= (n + 1) * (n2 + 1);
        Ok(through_meet && 2 * n1 <= (n + 1) * (n2 + 1))
    }
}

/// [`Manager::check_bounds`] in a throwaway manager.
pub fn check_bounds(f: &TruthTable, a: ModelSpec, b: ModelSpec) -> Result<BoundVerdict> {
    Manager::new().check_bounds(f, a, b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundVerdict {
    pub a: ModelSpec,
    pub b: ModelSpec,
    pub arity: usize,
    pub n_a: usize,
    pub n_b: usize,
    /// `N_b <= N_a`.
    pub lower: bool,
    /// `N_a <= (n+1)/2 * (N_b + 1)`.
    pub upper: bool,
    /// `N_a <= 2 * N_b`, present when `b` is `a` plus negation.
    pub negation: Option<bool>,
}

impl BoundVerdict {
    pub fn holds(&self) -> bool {
        self.lower && self.upper && self.negation != Some(false)
    }
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} <= {} at n={}: N_a={} N_b={} lower={} upper={}",
            self.a, self.b, self.arity, self.n_a, self.n_b, self.lower, self.upper
        )?;
        if let Some(neg) = self.negation {
            write!(f, " negation={neg}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub arity: usize,
    pub samples: usize,
    pub seed: u64,
    pub models: Vec<ModelSpec>,
    /// Flush operation caches when they exceed this many entries.
    pub memo_limit: Option<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct BenchOutcome {
    /// CSV rows (without header), one per sample and model.
    pub rows: Vec<String>,
    /// Human-readable description of each failed check.
    pub violations: Vec<String>,
}

/// Samples random functions and checks every size bound between the given
/// models. Sample `i` is drawn from a generator seeded with `seed + i`.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchOutcome> {
    let mut mgr = Manager::new();
    if let Some(limit) = cfg.memo_limit {
        mgr = mgr.with_memo_limit(limit);
    }
    let mut out = BenchOutcome::default();
    for i in 0..cfg.samples {
        let seed = cfg.seed.wrapping_add(i as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = TruthTable::random(cfg.arity, &mut rng)?;
        for &m in &cfg.models {
            let h = mgr.compile(m, &f)?;
            let report = mgr.measure(&h)?;
            if !report.label_bound_holds() {
                out.violations
                    .push(format!("seed {seed}: label bound fails for {m}: {report:?}"));
            }
            out.rows.push(report.csv_row(Some(seed)));
        }
        for (j, &a) in cfg.models.iter().enumerate() {
            for &b in &cfg.models[j + 1..] {
                if a.leq(b) || b.leq(a) {
                    let (lo, hi) = if a.leq(b) { (a, b) } else { (b, a) };
                    let v = mgr.check_bounds(&f, lo, hi)?;
                    if !v.holds() {
                        out.violations.push(format!("seed {seed}: {v}"));
                    }
                } else {
                    for (x, y) in [(a, b), (b, a)] {
                        if !mgr.check_cross_bound(&f, x, y)? {
                            out.violations
                                .push(format!("seed {seed}: cross bound fails for {x} vs {y}"));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
