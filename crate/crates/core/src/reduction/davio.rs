//! Correspondence between letters introduced under the Shannon combinator and
//! the letters capturing the same functor under the Davio combinators.
//!
//! Each row `(s, d+, d-)` states that the Shannon intro pattern of `s` applied
//! to `f` equals the `d+` (resp. `d-`) intro pattern built with the Davio
//! combinator, applied to `f` or `¬f`.

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::oracle::Combinator;

/// Rows `(Shannon, Davio+, Davio-)`.
pub const DAVIO_TABLE: [(Letter, Letter, Letter); 6] = [
    (Letter::U, Letter::C10, Letter::C10),
    (Letter::X, Letter::C11, Letter::C11),
    (Letter::C00, Letter::C00, Letter::U),
    (Letter::C01, Letter::C01, Letter::X),
    (Letter::C10, Letter::U, Letter::C00),
    (Letter::C11, Letter::X, Letter::C01),
];

fn column(row: &(Letter, Letter, Letter), comb: Combinator) -> Letter {
    match comb {
        Combinator::Shannon => row.0,
        Combinator::DavioPos => row.1,
        Combinator::DavioNeg => row.2,
    }
}

/// Looks `letter` up in the `from` column and returns the `to` column of the
/// same row.
pub fn translate_letter(from: Combinator, to: Combinator, letter: Letter) -> Result<Letter> {
    if !letter.is_elementary() {
        return Err(Error::NotElementary(letter));
    }
    let row = DAVIO_TABLE
        .iter()
        .find(|row| column(row, from) == letter)
        .expect("every column is a permutation of the elementary letters");
    Ok(column(row, to))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Combinator::*;

    #[test]
    fn table_rows() {
        assert_eq!(translate_letter(Shannon, DavioPos, Letter::U).unwrap(), Letter::C10);
        assert_eq!(translate_letter(Shannon, DavioNeg, Letter::C00).unwrap(), Letter::U);
        assert_eq!(translate_letter(Shannon, DavioPos, Letter::X).unwrap(), Letter::C11);
        assert!(translate_letter(Shannon, DavioPos, Letter::N).is_err());
    }

    #[test]
    fn translation_is_invertible() {
        for l in Letter::ELEMENTARY {
            for a in [Shannon, DavioPos, DavioNeg] {
                assert_eq!(translate_letter(a, a, l).unwrap(), l);
                for b in [Shannon, DavioPos, DavioNeg] {
                    let there = translate_letter(a, b, l).unwrap();
                    assert_eq!(translate_letter(b, a, there).unwrap(), l);
                }
            }
        }
    }

    #[test]
    fn davio_columns_compose_through_shannon() {
        for l in Letter::ELEMENTARY {
            let via = translate_letter(Shannon, DavioNeg, translate_letter(DavioPos, Shannon, l).unwrap()).unwrap();
            assert_eq!(translate_letter(DavioPos, DavioNeg, l).unwrap(), via);
        }
    }
}
