//! Skew tableaux: fillings, predicates, constrained enumeration, descent
//! exponents, and the row-index bijections theta_nu / theta_d.
//!
//! Conventions are English throughout: row 1 is the top row, columns grow
//! downward strictly in a semistandard tableau, and the reading word scans
//! each row right to left, top row first.

use std::fmt;
use std::str::FromStr;

use spectab_shapes::{Composition, Partition, ShapeError, SkewShape};
use thiserror::Error;

mod theta;

pub use theta::{theta_d, theta_d_inverse, theta_d_inverse_extended, theta_nu, theta_nu_inverse};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("row {row} has {got} entries but the shape row holds {want} boxes")]
    RowCount { row: usize, got: usize, want: usize },
    #[error("tableau has {got} entry rows but the shape has {want}")]
    RowNumber { got: usize, want: usize },
    #[error("entries must lie in 1..=255")]
    EntryRange,
    #[error("content mismatch: tableau has content {got:?}, expected {want:?}")]
    ContentMismatch { got: Vec<u32>, want: Vec<u32> },
    #[error("expected a semistandard tableau")]
    NotSemistandard,
    #[error("expected a straight (non-skew) shape")]
    NotStraight,
    #[error("tableau is not in the image of the bijection: {0}")]
    NotInImage(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A word in the symbols 1, 2, ...; the reading word of a tableau.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: Vec<u8>) -> Result<Self, TableauError> {
        if symbols.iter().any(|&a| a == 0) {
            return Err(TableauError::EntryRange);
        }
        Ok(Word(symbols))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Content vector: entry i-1 counts the occurrences of the symbol i,
    /// up to the largest symbol present.
    pub fn content(&self) -> Vec<u32> {
        let m = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; m];
        for &a in &self.0 {
            counts[a as usize - 1] += 1;
        }
        counts
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a <= 9) {
            for &a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word(Vec::new()));
        }
        let symbols: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>())
                .collect::<Result<_, _>>()
                .map_err(|e| TableauError::Parse(format!("bad word symbol: {e}")))?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| TableauError::Parse(format!("bad word digit {c:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        Word::new(symbols)
    }
}

/// A filling of a skew shape by positive integers, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u8>>) -> Result<Self, TableauError> {
        if rows.len() != shape.rows() {
            return Err(TableauError::RowNumber {
                got: rows.len(),
                want: shape.rows(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return Err(TableauError::RowCount {
                    row: i + 1,
                    got: row.len(),
                    want: shape.row_len(i),
                });
            }
            if row.iter().any(|&e| e == 0) {
                return Err(TableauError::EntryRange);
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: SkewShape::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry in box `(row, col)` with 0-based absolute column, if the box
    /// belongs to the shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<u8> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        let (start, _) = self.shape.row_range(row);
        Some(self.rows[row][col - start])
    }

    /// Content vector over the alphabet 1..=max entry.
    pub fn content(&self) -> Vec<u32> {
        let m = self
            .rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        let mut counts = vec![0u32; m];
        for row in &self.rows {
            for &e in row {
                counts[e as usize - 1] += 1;
            }
        }
        counts
    }

    /// Content vector padded or checked against an alphabet of size m;
    /// errors when an entry exceeds m.
    pub fn content_padded(&self, m: usize) -> Result<Vec<u32>, TableauError> {
        let mut counts = self.content();
        if counts.len() > m {
            return Err(TableauError::ContentMismatch {
                got: counts,
                want: vec![0; m],
            });
        }
        counts.resize(m, 0);
        Ok(counts)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, row) in self.rows.iter().enumerate() {
            if !first {
                write!(f, ";")?;
            }
            first = false;
            let inner = self.shape.inner()[i] as usize;
            let mut cells: Vec<String> = vec![".".into(); inner];
            cells.extend(row.iter().map(|e| e.to_string()));
            write!(f, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty());
        }
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for part in s.split(';') {
            let mut dots = 0u32;
            let mut entries = Vec::new();
            for cell in part.split(',') {
                let cell = cell.trim();
                if cell == "." {
                    if !entries.is_empty() {
                        return Err(TableauError::Parse(
                            "inner-box dots must precede the entries of a row".into(),
                        ));
                    }
                    dots += 1;
                } else {
                    let e: u8 = cell
                        .parse()
                        .map_err(|e| TableauError::Parse(format!("bad entry {cell:?}: {e}")))?;
                    entries.push(e);
                }
            }
            outer.push(dots + entries.len() as u32);
            inner.push(dots);
            rows.push(entries);
        }
        let outer = Partition::new(outer).map_err(|e| TableauError::Parse(e.to_string()))?;
        let inner = Partition::new(inner).map_err(|e| TableauError::Parse(e.to_string()))?;
        let shape =
            SkewShape::new(outer, &inner).map_err(|e| TableauError::Parse(e.to_string()))?;
        Tableau::new(shape, rows)
    }
}

/// Reading word: each row right to left, top row first.
pub fn reading_word(t: &Tableau) -> Word {
    let mut symbols = Vec::with_capacity(t.size());
    for row in t.rows() {
        symbols.extend(row.iter().rev().copied());
    }
    Word(symbols)
}

/// A word is a lattice word when every prefix contains at least as many
/// i's as (i+1)'s, for every i.
pub fn is_lattice_word(w: &Word) -> bool {
    let m = w.symbols().iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; m + 1];
    for &a in w.symbols() {
        let a = a as usize;
        counts[a] += 1;
        if a >= 2 && counts[a] > counts[a - 1] {
            return false;
        }
    }
    true
}

/// Rows weakly increase left to right and columns strictly increase top to
/// bottom.
pub fn is_semistandard(t: &Tableau) -> bool {
    let shape = t.shape();
    for (i, row) in t.rows().iter().enumerate() {
        if row.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        if i + 1 < shape.rows() {
            let (s0, e0) = shape.row_range(i);
            let (s1, e1) = shape.row_range(i + 1);
            // NOTE: s0 >= s1 in a skew shape, so the shared columns are
            // s0..min(e0, e1).
            for c in s0..e0.min(e1) {
                if t.rows()[i][c - s0] >= t.rows()[i + 1][c - s1] {
                    return false;
                }
            }
        }
    }
    true
}

/// LR tableau: every row weakly increases and the reading word is a
/// lattice word. Columns are NOT required to be strict.
pub fn is_lr_tableau(t: &Tableau) -> bool {
    t.rows().iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
        && is_lattice_word(&reading_word(t))
}

/// Nonmovable tableau: semistandard, and for every row i the tableau
/// obtained by displacing row i one box to the left (other rows fixed) is
/// of non-skew shape or fails to be semistandard.
pub fn is_nonmovable(t: &Tableau) -> bool {
    if !is_semistandard(t) {
        return false;
    }
    let shape = t.shape();
    let m = shape.rows();
    for i in 0..m {
        let inner_i = shape.inner()[i];
        if inner_i == 0 {
            continue;
        }
        let mut outer = shape.outer().padded(m);
        let mut inner = shape.inner().to_vec();
        outer[i] -= 1;
        inner[i] -= 1;
        let outer = match Partition::new(outer) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let inner = match Partition::new(inner) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let shifted_shape = match SkewShape::new(outer, &inner) {
            Ok(s) => s,
            Err(_) => continue,
        };
        // NOTE: normalization may drop trailing empty rows of the shifted
        // presentation; their fillings are empty, so truncation is safe.
        let mut rows = t.rows().to_vec();
        rows.truncate(shifted_shape.rows());
        let shifted = Tableau::new(shifted_shape, rows)
            .expect("shifting a row preserves the lengths of surviving rows");
        if is_semistandard(&shifted) {
            return false;
        }
    }
    true
}

/// Descent multiplicities zeta_1..zeta_{m-1}: zeta_i is the size of a
/// maximum matching between the boxes holding i and the boxes holding i+1
/// in a strictly lower row, both endpoints distinct. Computed by a greedy
/// sweep over the (i+1)-boxes in row order, matching each to the smallest
/// unused i-row strictly above; see [`zeta_by_matching`] for the
/// augmenting-path oracle.
pub fn zeta(t: &Tableau, m: usize) -> Vec<u32> {
    let rows_of = rows_of_letters(t, m);
    let mut result = Vec::with_capacity(m.saturating_sub(1));
    for i in 1..m {
        let upper = &rows_of[i - 1];
        let lower = &rows_of[i];
        let mut ri = 0usize;
        let mut count = 0u32;
        for &s in lower {
            if ri < upper.len() && upper[ri] < s {
                count += 1;
                ri += 1;
            }
        }
        result.push(count);
    }
    result
}

/// Maximum-matching computation of the descent multiplicities via
/// augmenting paths; an independent oracle for [`zeta`].
pub fn zeta_by_matching(t: &Tableau, m: usize) -> Vec<u32> {
    let rows_of = rows_of_letters(t, m);
    let mut result = Vec::with_capacity(m.saturating_sub(1));
    for i in 1..m {
        let upper = &rows_of[i - 1];
        let lower = &rows_of[i];
        let mut matched: Vec<Option<usize>> = vec![None; lower.len()];
        let mut size = 0u32;
        for u in 0..upper.len() {
            let mut seen = vec![false; lower.len()];
            if augment(u, upper, lower, &mut matched, &mut seen) {
                size += 1;
            }
        }
        result.push(size);
    }
    result
}

fn augment(
    u: usize,
    upper: &[u32],
    lower: &[u32],
    matched: &mut Vec<Option<usize>>,
    seen: &mut Vec<bool>,
) -> bool {
    for v in 0..lower.len() {
        if upper[u] < lower[v] && !seen[v] {
            seen[v] = true;
            if matched[v].is_none()
                || augment(matched[v].unwrap(), upper, lower, matched, seen)
            {
                matched[v] = Some(u);
                return true;
            }
        }
    }
    false
}

/// 1-based row indices of the boxes holding each letter 1..=m, in row
/// order (hence sorted).
fn rows_of_letters(t: &Tableau, m: usize) -> Vec<Vec<u32>> {
    let mut rows_of = vec![Vec::new(); m];
    for (r, row) in t.rows().iter().enumerate() {
        for &e in row {
            let e = e as usize;
            if e <= m {
                rows_of[e - 1].push(r as u32 + 1);
            }
        }
    }
    rows_of
}

/// Exponents d_i = mu_{i+1} - zeta_i for i = 1..m-1; with `extended` the
/// vector is prefixed by d_0 = mu_1 - zeta_0, where zeta_0 counts the 1's
/// outside the first row.
pub fn descents_exponents(
    t: &Tableau,
    content: &Composition,
    extended: bool,
) -> Result<Composition, TableauError> {
    let m = content.len();
    let got = t.content_padded(m).map_err(|_| TableauError::ContentMismatch {
        got: t.content(),
        want: content.parts().to_vec(),
    })?;
    if got != content.parts() {
        return Err(TableauError::ContentMismatch {
            got,
            want: content.parts().to_vec(),
        });
    }
    let zetas = zeta(t, m);
    let mut d = Vec::with_capacity(m);
    if extended && m > 0 {
        let ones_below: u32 = t
            .rows()
            .iter()
            .skip(1)
            .map(|row| row.iter().filter(|&&e| e == 1).count() as u32)
            .sum();
        d.push(content.parts()[0] - ones_below);
    }
    for i in 1..m {
        d.push(content.parts()[i] - zetas[i - 1]);
    }
    Ok(Composition::new(d))
}

/// Families of fillings the enumerator can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauKind {
    Semistandard,
    AllFillings,
    Nonmovable,
    Lr,
    NonmovableLr,
}

impl TableauKind {
    fn column_strict(self) -> bool {
        matches!(
            self,
            TableauKind::Semistandard | TableauKind::Nonmovable | TableauKind::NonmovableLr
        )
    }

    fn row_weak(self) -> bool {
        !matches!(self, TableauKind::AllFillings)
    }

    fn lattice(self) -> bool {
        matches!(self, TableauKind::Lr | TableauKind::NonmovableLr)
    }

    fn nonmovable(self) -> bool {
        matches!(self, TableauKind::Nonmovable | TableauKind::NonmovableLr)
    }
}

impl FromStr for TableauKind {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "semistandard" => Ok(TableauKind::Semistandard),
            "all-fillings" => Ok(TableauKind::AllFillings),
            "nonmovable" => Ok(TableauKind::Nonmovable),
            "LR" | "lr" => Ok(TableauKind::Lr),
            "nonmovable-LR" | "nonmovable-lr" => Ok(TableauKind::NonmovableLr),
            other => Err(TableauError::Parse(format!("unknown tableau kind {other:?}"))),
        }
    }
}

/// Enumerate the fillings of a shape in row-lexicographic order.
///
/// `content`, when given, fixes the number of occurrences of each letter;
/// `alphabet` bounds the entries in every case. Kinds `nonmovable` and
/// `nonmovable-LR` post-filter the semistandard stream through
/// [`is_nonmovable`]; kind `LR` drops the column condition but keeps rows
/// weakly increasing and prunes on the lattice property row by row.
pub fn enumerate_tableaux(
    shape: &SkewShape,
    content: Option<&[u32]>,
    kind: TableauKind,
    alphabet: u8,
) -> Vec<Tableau> {
    let mut alphabet = alphabet;
    let mut budget: Option<Vec<u32>> = None;
    if let Some(c) = content {
        if c.iter().map(|&x| x as usize).sum::<usize>() != shape.size() {
            return Vec::new();
        }
        alphabet = alphabet.min(c.len() as u8);
        budget = Some(c.to_vec());
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); shape.rows()];
    let counts = vec![0u32; alphabet as usize + 1];
    fill_row(
        shape, kind, alphabet, &mut budget, &mut rows, 0, counts, &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    shape: &SkewShape,
    kind: TableauKind,
    alphabet: u8,
    budget: &mut Option<Vec<u32>>,
    rows: &mut Vec<Vec<u8>>,
    r: usize,
    counts: Vec<u32>,
    out: &mut Vec<Tableau>,
) {
    if r == shape.rows() {
        let t = Tableau::new(shape.clone(), rows.clone()).expect("enumerated rows fit the shape");
        if !kind.nonmovable() || is_nonmovable(&t) {
            out.push(t);
        }
        return;
    }
    fill_cell(shape, kind, alphabet, budget, rows, r, 0, &counts, out);
}

#[allow(clippy::too_many_arguments)]
fn fill_cell(
    shape: &SkewShape,
    kind: TableauKind,
    alphabet: u8,
    budget: &mut Option<Vec<u32>>,
    rows: &mut Vec<Vec<u8>>,
    r: usize,
    j: usize,
    counts: &[u32],
    out: &mut Vec<Tableau>,
) {
    let len = shape.row_len(r);
    if j == len {
        // NOTE: the lattice property is checked prefix by prefix, reading
        // the completed row right to left; every prefix of a lattice word
        // is one, so pruning here is sound.
        let mut counts = counts.to_vec();
        if kind.lattice() {
            for &e in rows[r].iter().rev() {
                let e = e as usize;
                counts[e] += 1;
                if e >= 2 && counts[e] > counts[e - 1] {
                    return;
                }
            }
        }
        fill_row(shape, kind, alphabet, budget, rows, r + 1, counts, out);
        return;
    }
    let (start, _) = shape.row_range(r);
    let c = start + j;
    let lo = if kind.row_weak() && j > 0 {
        rows[r][j - 1]
    } else {
        1
    };
    let above = if kind.column_strict() && r > 0 && shape.contains_cell(r - 1, c) {
        let (s_up, _) = shape.row_range(r - 1);
        rows[r - 1][c - s_up] + 1
    } else {
        1
    };
    for e in lo.max(above)..=alphabet {
        if let Some(b) = budget.as_mut() {
            if b[e as usize - 1] == 0 {
                continue;
            }
            b[e as usize - 1] -= 1;
        }
        rows[r].push(e);
        fill_cell(shape, kind, alphabet, budget, rows, r, j + 1, counts, out);
        rows[r].pop();
        if let Some(b) = budget.as_mut() {
            b[e as usize - 1] += 1;
        }
    }
}
