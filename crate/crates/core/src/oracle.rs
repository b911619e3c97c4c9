//! Dense truth tables: the brute-force ground truth every diagram is checked
//! against.
//!
//! Indexing is MSB-first: the valuation `(x0, ..., x_{n-1})` maps to the index
//! whose most significant bit is `x0`. Hence the `x0 = 0` cofactor is the first
//! half of the table and the `x0 = 1` cofactor the second half, which is
//! exactly the Shannon operator `f ⋆ g = concat(f, g)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::letter::Letter;

/// Largest arity a [`TruthTable`] may have.
pub const MAX_ORACLE_ARITY: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    arity: usize,
    // bit i of the table lives at words[i / 64] >> (i % 64); padding bits are 0
    words: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoolOp {
    Not,
    And,
    Or,
    Xor,
}

/// Elementary, universal binary combinators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Combinator {
    /// `(¬x0 ∧ f) ∨ (x0 ∧ g)`
    Shannon,
    /// `f ⊕ (x0 ∧ g)`
    DavioPos,
    /// `f ⊕ (¬x0 ∧ g)`
    DavioNeg,
}

impl Combinator {
    pub fn name(self) -> &'static str {
        match self {
            Combinator::Shannon => "s",
            Combinator::DavioPos => "d+",
            Combinator::DavioNeg => "d-",
        }
    }
}

impl std::str::FromStr for Combinator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "s" | "shannon" => Ok(Combinator::Shannon),
            "d+" | "davio+" => Ok(Combinator::DavioPos),
            "d-" | "davio-" => Ok(Combinator::DavioNeg),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown combinator `{other}` (expected s, d+ or d-)"),
            }),
        }
    }
}

/// Type of a prepended variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarKind {
    Useless,
    /// Setting `x0 = branch` forces the output to `value`.
    Canalizing { branch: bool, value: bool },
    Xor,
}

/// Result of [`TruthTable::classify_top`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopVariable {
    /// Every category `x0` falls in; empty means plain.
    pub kinds: Vec<VarKind>,
    pub lo: TruthTable,
    pub hi: TruthTable,
}

impl TopVariable {
    pub fn is_plain(&self) -> bool {
        self.kinds.is_empty()
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if arity > MAX_ORACLE_ARITY {
        return Err(Error::ArityTooLarge {
            arity,
            max: MAX_ORACLE_ARITY,
        });
    }
    Ok(())
}

fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

impl TruthTable {
    fn zeroed(arity: usize) -> TruthTable {
        let len = 1usize << arity;
        TruthTable {
            arity,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn constant(arity: usize, value: bool) -> Result<TruthTable> {
        check_arity(arity)?;
        let mut t = Self::zeroed(arity);
        if value {
            let len = t.len();
            for (k, w) in t.words.iter_mut().enumerate() {
                *w = low_mask(len - k * 64);
            }
        }
        Ok(t)
    }

    /// Table whose bit at index `i` is `f(i)`.
    pub fn from_fn(arity: usize, mut f: impl FnMut(usize) -> bool) -> Result<TruthTable> {
        check_arity(arity)?;
        let mut t = Self::zeroed(arity);
        for i in 0..t.len() {
            if f(i) {
                t.set(i, true);
            }
        }
        Ok(t)
    }

    /// `bits.len()` must be a power of two.
    pub fn from_bits(bits: &[bool]) -> Result<TruthTable> {
        if !bits.len().is_power_of_two() {
            return Err(Error::BadTruthTable {
                text: format!("{} bits", bits.len()),
                reason: "length is not a power of two".into(),
            });
        }
        let arity = bits.len().trailing_zeros() as usize;
        Self::from_fn(arity, |i| bits[i])
    }

    /// The projection `x_var` over `arity` variables.
    pub fn projection(arity: usize, var: usize) -> Result<TruthTable> {
        if var >= arity {
            return Err(Error::VariableOutOfRange {
                index: var,
                arity,
                offset: 0,
            });
        }
        let shift = arity - 1 - var;
        Self::from_fn(arity, |i| (i >> shift) & 1 == 1)
    }

    /// Uniformly random table drawn from `rng`.
    pub fn random<R: rand::Rng + ?Sized>(arity: usize, rng: &mut R) -> Result<TruthTable> {
        check_arity(arity)?;
        let mut t = Self::zeroed(arity);
        let len = t.len();
        for (k, w) in t.words.iter_mut().enumerate() {
            *w = rng.gen::<u64>() & low_mask(len - k * 64);
        }
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of entries, `2^arity`.
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, index: usize) -> bool {
        (self.words[index / 64] >> (index % 64)) & 1 == 1
    }

    fn set(&mut self, index: usize, value: bool) {
        let w = &mut self.words[index / 64];
        if value {
            *w |= 1 << (index % 64);
        } else {
            *w &= !(1 << (index % 64));
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }

    pub fn index_of(valuation: &[bool]) -> usize {
        valuation
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | usize::from(b))
    }

    /// `f(v)`.
    pub fn eval(&self, valuation: &[bool]) -> Result<bool> {
        if valuation.len() != self.arity {
            return Err(Error::ValuationLength {
                expected: self.arity,
                found: valuation.len(),
            });
        }
        Ok(self.get(Self::index_of(valuation)))
    }

    pub fn popcount(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn as_constant(&self) -> Option<bool> {
        let ones = self.popcount();
        if ones == 0 {
            Some(false)
        } else if ones == self.len() as u64 {
            Some(true)
        } else {
            None
        }
    }

    pub fn not(&self) -> TruthTable {
        let len = self.len();
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(k, w)| !w & low_mask(len - k * 64))
            .collect();
        TruthTable {
            arity: self.arity,
            words,
        }
    }

    fn zip_with(&self, other: &TruthTable, op: impl Fn(u64, u64) -> u64) -> Result<TruthTable> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| op(*a, *b))
            .collect();
        Ok(TruthTable {
            arity: self.arity,
            words,
        })
    }

    pub fn and(&self, other: &TruthTable) -> Result<TruthTable> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn or(&self, other: &TruthTable) -> Result<TruthTable> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn xor(&self, other: &TruthTable) -> Result<TruthTable> {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn implies(&self, other: &TruthTable) -> Result<TruthTable> {
        Ok(self.and(&other.not())?.not())
    }

    /// Pointwise application; `g` is required for binary operators and
    /// ignored for `Not`.
    pub fn apply(op: BoolOp, f: &TruthTable, g: Option<&TruthTable>) -> Result<TruthTable> {
        let need = || {
            g.ok_or(Error::ArityMismatch {
                expected: f.arity,
                found: 0,
            })
        };
        match op {
            BoolOp::Not => Ok(f.not()),
            BoolOp::And => f.and(need()?),
            BoolOp::Or => f.or(need()?),
            BoolOp::Xor => f.xor(need()?),
        }
    }

    /// Restrictions `x0 = 0` and `x0 = 1`.
    pub fn cofactors(&self) -> Result<(TruthTable, TruthTable)> {
        if self.arity == 0 {
            return Err(Error::ArityZero);
        }
        let sub = self.arity - 1;
        let half = 1usize << sub;
        if half >= 64 {
            let n = half / 64;
            let lo = TruthTable {
                arity: sub,
                words: self.words[..n].to_vec(),
            };
            let hi = TruthTable {
                arity: sub,
                words: self.words[n..].to_vec(),
            };
            Ok((lo, hi))
        } else {
            let w = self.words[0];
            let lo = TruthTable {
                arity: sub,
                words: vec![w & low_mask(half)],
            };
            let hi = TruthTable {
                arity: sub,
                words: vec![(w >> half) & low_mask(half)],
            };
            Ok((lo, hi))
        }
    }

    /// `f ⋆S g`: the table `f` followed by `g`.
    fn shannon(f: &TruthTable, g: &TruthTable) -> Result<TruthTable> {
        if f.arity != g.arity {
            return Err(Error::ArityMismatch {
                expected: f.arity,
                found: g.arity,
            });
        }
        check_arity(f.arity + 1)?;
        let half = f.len();
        if half >= 64 {
            let mut words = f.words.clone();
            words.extend_from_slice(&g.words);
            Ok(TruthTable {
                arity: f.arity + 1,
                words,
            })
        } else {
            Ok(TruthTable {
                arity: f.arity + 1,
                words: vec![f.words[0] | (g.words[0] << half)],
            })
        }
    }

    /// Builds an arity `n + 1` table from two arity `n` tables.
    pub fn combine(comb: Combinator, f: &TruthTable, g: &TruthTable) -> Result<TruthTable> {
        match comb {
            Combinator::Shannon => Self::shannon(f, g),
            Combinator::DavioPos => Self::shannon(f, &f.xor(g)?),
            Combinator::DavioNeg => Self::shannon(&f.xor(g)?, f),
        }
    }

    /// The intro pattern of an elementary `letter`, built with `comb` instead
    /// of necessarily Shannon: `U ↦ f∘f`, `X ↦ f∘¬f`, `C00 ↦ 0∘f`, `C01 ↦ 1∘f`,
    /// `C10 ↦ f∘0`, `C11 ↦ f∘1`. `N` negates.
    pub fn pattern(comb: Combinator, letter: Letter, f: &TruthTable) -> Result<TruthTable> {
        let n = f.arity;
        match letter {
            Letter::N => Ok(f.not()),
            Letter::U => Self::combine(comb, f, f),
            Letter::X => Self::combine(comb, f, &f.not()),
            Letter::C00 => Self::combine(comb, &Self::constant(n, false)?, f),
            Letter::C01 => Self::combine(comb, &Self::constant(n, true)?, f),
            Letter::C10 => Self::combine(comb, f, &Self::constant(n, false)?),
            Letter::C11 => Self::combine(comb, f, &Self::constant(n, true)?),
        }
    }

    /// The functor denoted by `letter`.
    pub fn apply_functor(letter: Letter, f: &TruthTable) -> Result<TruthTable> {
        Self::pattern(Combinator::Shannon, letter, f)
    }

    /// Classifies `x0` and returns both cofactors.
    pub fn classify_top(&self) -> Result<TopVariable> {
        let (lo, hi) = self.cofactors()?;
        let mut kinds = Vec::new();
        if lo == hi {
            kinds.push(VarKind::Useless);
        }
        if let Some(value) = lo.as_constant() {
            kinds.push(VarKind::Canalizing {
                branch: false,
                value,
            });
        }
        if let Some(value) = hi.as_constant() {
            kinds.push(VarKind::Canalizing {
                branch: true,
                value,
            });
        }
        if hi == lo.not() {
            kinds.push(VarKind::Xor);
        }
        Ok(TopVariable { kinds, lo, hi })
    }

    /// Hex digits, MSB-first, `ceil(2^n / 4)` of them (at least one).
    pub fn to_hex(&self) -> String {
        let len = self.len();
        if len < 4 {
            let v = self
                .bits()
                .fold(0u32, |acc, b| (acc << 1) | u32::from(b));
            return format!("{v:X}");
        }
        (0..len / 4)
            .map(|k| {
                let d = (0..4).fold(0u32, |acc, j| (acc << 1) | u32::from(self.get(4 * k + j)));
                char::from_digit(d, 16).unwrap().to_ascii_uppercase()
            })
            .collect()
    }

    pub fn from_hex(arity: usize, text: &str) -> Result<TruthTable> {
        check_arity(arity)?;
        let bad = |reason: String| Error::BadTruthTable {
            text: text.to_string(),
            reason,
        };
        let len = 1usize << arity;
        let digits = len.div_ceil(4);
        let chars: Vec<char> = text.trim().chars().collect();
        if chars.len() != digits {
            return Err(bad(format!(
                "expected {digits} hex digits for arity {arity}, got {}",
                chars.len()
            )));
        }
        let mut values = Vec::with_capacity(digits);
        for c in &chars {
            values.push(c.to_digit(16).ok_or_else(|| bad(format!("`{c}` is not a hex digit")))?);
        }
        if len < 4 {
            let v = values[0];
            if v >> len != 0 {
                return Err(bad(format!("value does not fit in {len} bits")));
            }
            return Self::from_fn(arity, |i| (v >> (len - 1 - i)) & 1 == 1);
        }
        Self::from_fn(arity, |i| (values[i / 4] >> (3 - i % 4)) & 1 == 1)
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({}, {})", self.arity, self.to_hex())
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(bits: &[u8]) -> TruthTable {
        TruthTable::from_bits(&bits.iter().map(|&b| b == 1).collect::<Vec<_>>()).unwrap()
    }

    fn all_tables(n: usize) -> impl Iterator<Item = TruthTable> {
        let len = 1usize << n;
        (0..1u64 << len).map(move |code| TruthTable::from_fn(n, |i| (code >> i) & 1 == 1).unwrap())
    }

    #[test]
    fn eval_examples() {
        let zero = TruthTable::constant(0, false).unwrap();
        assert!(!zero.eval(&[]).unwrap());
        let g = tt(&[0, 0, 1, 0]);
        assert!(g.eval(&[true, false]).unwrap());
        assert!(tt(&[0, 1]).eval(&[true]).unwrap());
        assert_eq!(
            g.eval(&[true]),
            Err(Error::ValuationLength {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn apply_examples() {
        assert_eq!(TruthTable::apply(BoolOp::Not, &tt(&[0, 1]), None).unwrap(), tt(&[1, 0]));
        let f = tt(&[0, 1, 1, 0]);
        assert_eq!(f.and(&f).unwrap(), f);
        assert_eq!(f.xor(&tt(&[0, 0, 1, 1])).unwrap(), tt(&[0, 1, 0, 1]));
        assert!(f.and(&tt(&[0, 1])).is_err());
    }

    #[test]
    fn combine_examples() {
        let zero = TruthTable::constant(0, false).unwrap();
        let one = TruthTable::constant(0, true).unwrap();
        assert_eq!(TruthTable::combine(Combinator::Shannon, &zero, &one).unwrap(), tt(&[0, 1]));
        assert_eq!(
            TruthTable::combine(Combinator::DavioPos, &tt(&[0, 1]), &tt(&[1, 1])).unwrap(),
            tt(&[0, 1, 1, 0])
        );
        for n in 0..=3 {
            let z = TruthTable::constant(n, false).unwrap();
            for f in all_tables(n) {
                assert_eq!(
                    TruthTable::combine(Combinator::Shannon, &f, &f).unwrap(),
                    TruthTable::combine(Combinator::DavioPos, &f, &z).unwrap()
                );
            }
        }
    }

    #[test]
    fn functor_examples() {
        assert_eq!(TruthTable::apply_functor(Letter::C00, &tt(&[1, 0])).unwrap(), tt(&[0, 0, 1, 0]));
        let zero = TruthTable::constant(0, false).unwrap();
        assert_eq!(TruthTable::apply_functor(Letter::X, &zero).unwrap(), tt(&[0, 1]));
        for n in 0..=3 {
            for f in all_tables(n) {
                let u = TruthTable::apply_functor(Letter::U, &f).unwrap();
                let (lo, hi) = u.cofactors().unwrap();
                assert_eq!(lo, hi);
                assert_eq!(u.arity(), n + 1);
                let nn = TruthTable::apply_functor(Letter::N, &f).unwrap();
                assert_eq!(nn.arity(), n);
                assert_eq!(TruthTable::apply_functor(Letter::N, &nn).unwrap(), f);
                for l in Letter::ELEMENTARY {
                    assert_eq!(TruthTable::apply_functor(l, &f).unwrap().arity(), n + 1);
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = tt(&[0, 0, 1, 0]).classify_top().unwrap();
        assert_eq!(
            c.kinds,
            vec![VarKind::Canalizing {
                branch: false,
                value: false
            }]
        );
        assert_eq!(c.lo, TruthTable::constant(1, false).unwrap());
        assert_eq!(c.hi, tt(&[1, 0]));

        let c = tt(&[0, 1, 0, 1]).classify_top().unwrap();
        assert_eq!(c.kinds, vec![VarKind::Useless]);
        assert_eq!(c.lo, tt(&[0, 1]));

        let c = tt(&[0, 1, 1, 0]).classify_top().unwrap();
        assert_eq!(c.kinds, vec![VarKind::Xor]);

        // x0 of the constant is useless and canalizing on both sides at once
        let c = TruthTable::constant(2, true).unwrap().classify_top().unwrap();
        assert_eq!(c.kinds.len(), 3);

        assert_eq!(
            TruthTable::constant(0, true).unwrap().classify_top(),
            Err(Error::ArityZero)
        );
    }

    #[test]
    fn shannon_universality() {
        for n in 1..=3 {
            for f in all_tables(n) {
                let c = f.classify_top().unwrap();
                assert_eq!(TruthTable::combine(Combinator::Shannon, &c.lo, &c.hi).unwrap(), f);
            }
        }
    }

    #[test]
    fn large_tables_split_and_join() {
        let mut rng = rand::rngs::mock::StepRng::new(0x9E37_79B9_7F4A_7C15, 0x6A09_E667_F3BC_C909);
        for n in [6, 7, 9] {
            let f = TruthTable::random(n, &mut rng).unwrap();
            let (lo, hi) = f.cofactors().unwrap();
            assert_eq!(TruthTable::combine(Combinator::Shannon, &lo, &hi).unwrap(), f);
            assert_eq!(f.not().not(), f);
            assert_eq!(f.popcount() + f.not().popcount(), 1 << n);
        }
    }

    #[test]
    fn hex_format() {
        let f = TruthTable::from_hex(3, "6A").unwrap();
        assert_eq!(f.to_string(), "01101010");
        assert_eq!(f.to_hex(), "6A");
        assert_eq!(TruthTable::from_hex(1, "1").unwrap(), tt(&[0, 1]));
        assert_eq!(TruthTable::from_hex(2, "2").unwrap(), tt(&[0, 0, 1, 0]));
        assert_eq!(TruthTable::from_hex(0, "1").unwrap(), TruthTable::constant(0, true).unwrap());
        assert!(TruthTable::from_hex(1, "4").is_err());
        assert!(TruthTable::from_hex(3, "6").is_err());
        assert!(TruthTable::from_hex(3, "6G").is_err());
        for n in 0..=3 {
            for f in all_tables(n) {
                assert_eq!(TruthTable::from_hex(n, &f.to_hex()).unwrap(), f);
            }
        }
    }

    #[test]
    fn arity_limit() {
        assert!(TruthTable::constant(MAX_ORACLE_ARITY + 1, false).is_err());
    }
}
