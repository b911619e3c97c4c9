//! Edge-label alphabet.
//!
//! A word `l1.l2...lk` labelling an edge denotes the composition
//! `δ_l1 ∘ δ_l2 ∘ ... ∘ δ_lk` applied to the function below the edge, so the
//! first letter of a word types the first variable `x0`.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::Error;

/// One letter of an edge label.
///
/// Every letter except [`Letter::N`] is *elementary*: it prepends one fresh
/// variable and raises the arity by one. `N` is output negation and keeps the
/// arity unchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Output negation.
    N,
    /// Useless variable: `f ↦ f ⋆ f`.
    U,
    /// Xor variable: `f ↦ f ⋆ ¬f`.
    X,
    /// Canalizing, `x0 = 0` forces `0`: `f ↦ 0 ⋆ f`.
    C00,
    /// Canalizing, `x0 = 0` forces `1`: `f ↦ 1 ⋆ f`.
    C01,
    /// Canalizing, `x0 = 1` forces `0`: `f ↦ f ⋆ 0`.
    C10,
    /// Canalizing, `x0 = 1` forces `1`: `f ↦ f ⋆ 1`.
    C11,
}

impl Letter {
    /// The six elementary letters, in declaration order.
    pub const ELEMENTARY: [Letter; 6] = [
        Letter::U,
        Letter::X,
        Letter::C00,
        Letter::C01,
        Letter::C10,
        Letter::C11,
    ];

    pub fn is_elementary(self) -> bool {
        self != Letter::N
    }

    /// Canalizing letter for `(branch, value)`.
    pub fn canalizing(branch: bool, value: bool) -> Letter {
        match (branch, value) {
            (false, false) => Letter::C00,
            (false, true) => Letter::C01,
            (true, false) => Letter::C10,
            (true, true) => Letter::C11,
        }
    }

    /// `(branch, value)` of a canalizing letter.
    pub fn as_canalizing(self) -> Option<(bool, bool)> {
        match self {
            Letter::C00 => Some((false, false)),
            Letter::C01 => Some((false, true)),
            Letter::C10 => Some((true, false)),
            Letter::C11 => Some((true, true)),
            _ => None,
        }
    }

    /// Bit position used by alphabet bitmasks. `None` for `N`.
    pub(crate) fn mask_bit(self) -> Option<u8> {
        match self {
            Letter::N => None,
            Letter::U => Some(1),
            Letter::X => Some(1 << 1),
            Letter::C00 => Some(1 << 2),
            Letter::C01 => Some(1 << 3),
            Letter::C10 => Some(1 << 4),
            Letter::C11 => Some(1 << 5),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Letter::N => "N",
            Letter::U => "U",
            Letter::X => "X",
            Letter::C00 => "C00",
            Letter::C01 => "C01",
            Letter::C10 => "C10",
            Letter::C11 => "C11",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Letter {
    type Err = Error;

    /// Case-insensitive; accepts `N`/`neg` for negation.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "N" | "NEG" => Ok(Letter::N),
            "U" => Ok(Letter::U),
            "X" => Ok(Letter::X),
            "C00" => Ok(Letter::C00),
            "C01" => Ok(Letter::C01),
            "C10" => Ok(Letter::C10),
            "C11" => Ok(Letter::C11),
            _ => Err(Error::UnknownLetter(s.to_string())),
        }
    }
}

/// A finite sequence of letters; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(SmallVec<[Letter; 6]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// Number of elementary letters, i.e. the arity this word adds.
    pub fn elementary_len(&self) -> usize {
        self.0.iter().filter(|l| l.is_elementary()).count()
    }

    /// `self.other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn push_front(&mut self, letter: Letter) {
        self.0.insert(0, letter);
    }

    /// Drops the first letter.
    pub fn tail(&self) -> Word {
        Word(self.0.iter().skip(1).copied().collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v.into())
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.into())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    /// Dot-joined tokens, `e` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(l.token())?;
        }
        Ok(())
    }
}
