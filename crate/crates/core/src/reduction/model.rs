//! Ordered models: an alphabet of elementary letters plus an optional
//! negation letter. Models are ordered by inclusion, forming a lattice where
//! the more expressive model always yields the smaller canonical diagram.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::letter::Letter;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelSpec {
    letters: u8,
    negation: bool,
}

const fn mask(letters: &[Letter]) -> u8 {
    let mut m = 0;
    let mut i = 0;
    while i < letters.len() {
        m |= match letters[i] {
            Letter::N => 0,
            Letter::U => 1,
            Letter::X => 1 << 1,
            Letter::C00 => 1 << 2,
            Letter::C01 => 1 << 3,
            Letter::C10 => 1 << 4,
            Letter::C11 => 1 << 5,
        };
        i += 1;
    }
    m
}

const fn preset(letters: &[Letter], negation: bool) -> ModelSpec {
    ModelSpec {
        letters: mask(letters),
        negation,
    }
}

use Letter::{C00, C01, C10, C11, U, X};

impl ModelSpec {
    /// Plain Shannon graphs (quasi-reduced BDDs).
    pub const S: ModelSpec = preset(&[], false);
    pub const S_N: ModelSpec = preset(&[], true);
    /// ROBDD.
    pub const O_U: ModelSpec = preset(&[U], false);
    /// ROBDD with complement edges.
    pub const O_NU: ModelSpec = preset(&[U], true);
    /// ZDD.
    pub const O_C10: ModelSpec = preset(&[C10], false);
    /// Chain-BDD / ESR-L0.
    pub const O_UC10: ModelSpec = preset(&[U, C10], false);
    /// Chain-BDD with complement edges.
    pub const O_NUC10C11: ModelSpec = preset(&[U, C10, C11], true);
    /// ESRBDD.
    pub const O_UC0: ModelSpec = preset(&[U, C00, C10], false);
    pub const O_UC: ModelSpec = preset(&[U, C00, C01, C10, C11], false);
    pub const O_NUC: ModelSpec = preset(&[U, C00, C01, C10, C11], true);
    /// Every elementary letter plus negation.
    pub const O_NUCX: ModelSpec = preset(&[U, X, C00, C01, C10, C11], true);

    /// Named presets, in the order they are usually listed.
    pub const PRESETS: [(&'static str, ModelSpec); 11] = [
        ("s", Self::S),
        ("s-n", Self::S_N),
        ("o-u", Self::O_U),
        ("o-nu", Self::O_NU),
        ("o-c10", Self::O_C10),
        ("o-uc10", Self::O_UC10),
        ("o-nuc10c11", Self::O_NUC10C11),
        ("o-uc0", Self::O_UC0),
        ("o-uc", Self::O_UC),
        ("o-nuc", Self::O_NUC),
        ("o-nucx", Self::O_NUCX),
    ];

    /// Builds a model from elementary letters; `N` in `letters` is the same as
    /// `negation = true`.
    pub fn new(letters: &[Letter], negation: bool) -> ModelSpec {
        ModelSpec {
            letters: mask(letters),
            negation: negation || letters.contains(&Letter::N),
        }
    }

    pub fn negation(self) -> bool {
        self.negation
    }

    pub fn with_negation(self, negation: bool) -> ModelSpec {
        ModelSpec { negation, ..self }
    }

    /// Whether `letter` belongs to the alphabet (`N` iff negation is on).
    pub fn contains(self, letter: Letter) -> bool {
        match letter.mask_bit() {
            Some(bit) => self.letters & bit != 0,
            None => self.negation,
        }
    }

    /// Elementary letters in declaration order.
    pub fn letters(self) -> Vec<Letter> {
        Letter::ELEMENTARY
            .into_iter()
            .filter(|&l| self.contains(l))
            .collect()
    }

    /// Closed under `neg_conjugate`.
    pub fn is_stable(self) -> bool {
        Letter::ELEMENTARY
            .into_iter()
            .filter(|&l| self.contains(l))
            .all(|l| self.contains(neg_conjugate(l).unwrap()))
    }

    /// Lattice order: `self ≤ other` iff `other` is at least as expressive.
    pub fn leq(self, other: ModelSpec) -> bool {
        self.letters & !other.letters == 0 && (!self.negation || other.negation)
    }

    pub fn comparable(self, other: ModelSpec) -> bool {
        self.leq(other) || other.leq(self)
    }

    pub fn join(self, other: ModelSpec) -> ModelSpec {
        ModelSpec {
            letters: self.letters | other.letters,
            negation: self.negation || other.negation,
        }
    }

    pub fn meet(self, other: ModelSpec) -> ModelSpec {
        ModelSpec {
            letters: self.letters & other.letters,
            negation: self.negation && other.negation,
        }
    }

    pub fn preset_name(self) -> Option<&'static str> {
        Self::PRESETS
            .iter()
            .find(|(_, m)| *m == self)
            .map(|(name, _)| *name)
    }

    pub fn is_preset(self) -> bool {
        self.preset_name().is_some()
    }

    pub fn name(self) -> String {
        match self.preset_name() {
            Some(n) => n.to_string(),
            None => {
                let letters: Vec<&str> = self.letters().iter().map(|l| l.token()).collect();
                let neg = if self.negation { "+neg" } else { "" };
                format!("custom:{}{neg}", letters.join(","))
            }
        }
    }
}

/// `ℓ_•`: the letter with `ℓ.• ≡ •.ℓ_•`.
pub fn neg_conjugate(letter: Letter) -> Result<Letter> {
    Ok(match letter {
        Letter::N => return Err(Error::NotElementary(Letter::N)),
        Letter::U => Letter::U,
        Letter::X => Letter::X,
        Letter::C00 => Letter::C01,
        Letter::C01 => Letter::C00,
        Letter::C10 => Letter::C11,
        Letter::C11 => Letter::C10,
    })
}

pub fn lattice_leq(a: ModelSpec, b: ModelSpec) -> bool {
    a.leq(b)
}

/// Covering pairs `(a, b)` (`a < b` with nothing in between) among `models`.
pub fn covering_pairs(models: &[ModelSpec]) -> Vec<(ModelSpec, ModelSpec)> {
    let mut out = Vec::new();
    for &a in models {
        for &b in models {
            if a == b || !a.leq(b) {
                continue;
            }
            let between = models
                .iter()
                .any(|&c| c != a && c != b && a.leq(c) && c.leq(b));
            if !between {
                out.push((a, b));
            }
        }
    }
    out
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModelSpec({})", self.name())
    }
}

impl FromStr for ModelSpec {
    type Err = Error;

    /// A preset name, or `custom:L1,L2,...[+neg]`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if let Some((_, m)) = Self::PRESETS.iter().find(|(name, _)| *name == lower) {
            return Ok(*m);
        }
        let Some(body) = lower.strip_prefix("custom:") else {
            return Err(Error::UnknownModel(s.to_string()));
        };
        let (body, negation) = match body.strip_suffix("+neg") {
            Some(rest) => (rest, true),
            None => (body, false),
        };
        let mut letters = Vec::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let l: Letter = tok.parse()?;
            if l == Letter::N {
                return Err(Error::UnknownModel(s.to_string()));
            }
            letters.push(l);
        }
        Ok(ModelSpec::new(&letters, negation))
    }
}
