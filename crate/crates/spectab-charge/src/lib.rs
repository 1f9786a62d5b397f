//! Charge of words and semistandard tableaux.
//!
//! A standard word (each of 1..N once) is indexed by: the index of 1 is 0,
//! and the index of k+1 is the index of k if k+1 lies to the right of k,
//! else one more. Its charge is the sum of indices. A word of dominant
//! (partition) weight is split into standard subwords by repeatedly picking
//! the leftmost unused 1, then the nearest unused 2 to its right, and so
//! on, wrapping around to the beginning when the end is reached; the charge
//! of the word is the sum over the extracted subwords, and the charge of a
//! tableau is the charge of its reading word.

use spectab_shapes::Composition;
use spectab_tableaux::{is_semistandard, reading_word, Tableau, Word};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChargeError {
    #[error("word is not standard (weight must be (1,..,1))")]
    NotStandard,
    #[error("word weight {0:?} is not a partition")]
    NotDominant(Vec<u32>),
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("exponent vector has length {got}, expected {want}")]
    LengthMismatch { got: usize, want: usize },
}

/// A standard word together with the index of each symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedWord {
    pub symbols: Word,
    pub indices: Vec<u32>,
}

/// Assign indices to a standard word: index(1) = 0 and index(k+1) is
/// index(k) plus one exactly when k+1 lies to the left of k.
pub fn index_standard(w: &Word) -> Result<IndexedWord, ChargeError> {
    let syms = w.symbols();
    let m = syms.len();
    let mut pos_of = vec![usize::MAX; m + 1];
    for (i, &s) in syms.iter().enumerate() {
        let s = s as usize;
        if s == 0 || s > m || pos_of[s] != usize::MAX {
            return Err(ChargeError::NotStandard);
        }
        pos_of[s] = i;
    }
    let mut index_of = vec![0u32; m + 1];
    for k in 2..=m {
        index_of[k] = index_of[k - 1] + u32::from(pos_of[k] < pos_of[k - 1]);
    }
    let indices = syms.iter().map(|&s| index_of[s as usize]).collect();
    Ok(IndexedWord {
        symbols: w.clone(),
        indices,
    })
}

/// Charge of a standard word: the sum of its indices.
pub fn charge_standard(w: &Word) -> Result<u64, ChargeError> {
    Ok(index_standard(w)?
        .indices
        .iter()
        .map(|&i| u64::from(i))
        .sum())
}

fn require_dominant(w: &Word) -> Result<(), ChargeError> {
    let content = w.content();
    if content.windows(2).any(|p| p[0] < p[1]) {
        return Err(ChargeError::NotDominant(content));
    }
    Ok(())
}

/// Split a word of dominant weight into standard subwords: each pass marks
/// the leftmost unused 1, then scans cyclically rightward for 2, 3, ...
/// until no next symbol remains; the marked symbols, in word order, form the
/// next subword.
pub fn extract_standard_subwords(w: &Word) -> Result<Vec<Word>, ChargeError> {
    require_dominant(w)?;
    let syms = w.symbols();
    let n = syms.len();
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut out = Vec::new();
    while remaining > 0 {
        let start = (0..n)
            .find(|&i| !used[i] && syms[i] == 1)
            .expect("a word of dominant weight always has a 1 left");
        used[start] = true;
        let mut picked = vec![start];
        let mut pos = start;
        let mut next = 2u8;
        while let Some(i) = (1..n)
            .map(|off| (pos + off) % n)
            .find(|&i| !used[i] && syms[i] == next)
        {
            used[i] = true;
            picked.push(i);
            pos = i;
            next += 1;
        }
        picked.sort_unstable();
        remaining -= picked.len();
        let sub = Word::new(picked.into_iter().map(|i| syms[i]).collect())
            .expect("symbols come from a valid word");
        out.push(sub);
    }
    Ok(out)
}

/// Charge of a word of dominant weight: the sum of the charges of its
/// extracted standard subwords.
pub fn charge_word(w: &Word) -> Result<u64, ChargeError> {
    let mut total = 0;
    for sub in extract_standard_subwords(w)? {
        total += charge_standard(&sub).expect("extracted subwords are standard");
    }
    Ok(total)
}

/// Charge of a semistandard tableau with dominant content: the charge of
/// its reading word.
pub fn charge_tableau(t: &Tableau) -> Result<u64, ChargeError> {
    if !is_semistandard(t) {
        return Err(ChargeError::NotSemistandard);
    }
    charge_word(&reading_word(t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeVariant {
    /// c(d) = sum over i of (m-i) d_i.
    C,
    /// ind(d) = sum over i of i d_i.
    Ind,
}

/// The weighted sums c(d) and ind(d) of an exponent vector of length m-1.
pub fn charge_of_d(d: &Composition, m: usize, variant: ChargeVariant) -> Result<u64, ChargeError> {
    if d.len() + 1 != m {
        return Err(ChargeError::LengthMismatch {
            got: d.len(),
            want: m.saturating_sub(1),
        });
    }
    Ok(d.parts()
        .iter()
        .enumerate()
        .map(|(i0, &di)| {
            let i = (i0 + 1) as u64;
            let weight = match variant {
                ChargeVariant::C => m as u64 - i,
                ChargeVariant::Ind => i,
            };
            weight * u64::from(di)
        })
        .sum())
}
