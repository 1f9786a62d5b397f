//! Partitions, compositions, and skew diagrams in English convention.
//!
//! Row 1 is the top row and row lengths weakly decrease downward. A skew
//! shape `outer/inner` keeps, in row `i`, the 0-based columns
//! `inner[i] <= c < outer[i]`. Besides the basic operations (conjugate,
//! containment, 180-degree rotation) this crate builds the two families of
//! shapes the rest of the workspace feeds on:
//!
//! * staircase shapes `Sh_nu(mu)` whose rows have lengths `mu_i` and whose
//!   row `i` starts `nu_i` columns to the right of row `i+1`, optionally with
//!   a rotated partition block stacked on top ([`shape_sh`]);
//! * the truncation `kappa(h)` of the infinite staircase attached to an
//!   energy sequence `h` over a ground weight cycle ([`kappa_from_h`]).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },
    #[error("invalid staircase data: {0}")]
    InvalidStaircase(String),
    #[error("invalid energy sequence: {0}")]
    InvalidEnergies(String),
    #[error("invalid border strip heights: {0}")]
    InvalidBorderStrip(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// An integer partition: a weakly decreasing tuple of positive integers.
///
/// Stored without trailing zeros; the empty partition prints and parses as
/// `"0"`. `part(i)` is total (returns 0 past the end), which keeps index
/// juggling out of the callers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, ShapeError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The `i`-th part (0-based), or 0 when `i >= len()`.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Parts padded with zeros to length `len` (which must be >= `len()`).
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.parts.len());
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    /// Conjugate partition: `conj_j = #{i : part_i > j}`.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.first() as usize);
        for j in 0..self.first() {
            parts.push(self.parts.iter().filter(|&&p| p > j).count() as u32);
        }
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .enumerate()
                .all(|(i, &p)| p <= self.part(i))
    }

    /// Dominance order: same size and all prefix sums of `self` are >= those
    /// of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..n {
            a += self.part(i) as usize;
            b += other.part(i) as usize;
            if a < b {
                return false;
            }
        }
        true
    }

    /// `self + (width^rows)` componentwise; requires `len() <= rows`.
    pub fn plus_rectangle(&self, rows: usize, width: u32) -> Result<Partition, ShapeError> {
        if self.len() > rows {
            return Err(ShapeError::NotAPartition(format!(
                "{self} has more than {rows} rows"
            )));
        }
        let mut parts = self.padded(rows);
        for p in &mut parts {
            *p += width;
        }
        Partition::new(parts)
    }

    /// Multiplicity of each part value, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ShapeError::Parse("empty partition text".into()));
        }
        let parts = parse_u32_list(s)?;
        Partition::new(parts)
    }
}

/// A composition: an arbitrary tuple of nonnegative integers, kept verbatim
/// (trailing zeros are significant, unlike for [`Partition`]).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.parts.iter().all(|&p| p > 0)
    }

    /// Weakly decreasing, i.e. already a partition.
    pub fn is_dominant(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The parts sorted decreasingly, as a partition.
    pub fn sorted_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts form a partition")
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Composition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ShapeError::Parse("empty composition text".into()));
        }
        Ok(Composition::new(parse_u32_list(s)?))
    }
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, ShapeError> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|e| ShapeError::Parse(format!("bad entry {tok:?}: {e}")))
        })
        .collect()
}

/// A skew diagram `outer/inner` with `inner` contained in `outer`.
///
/// The inner shape is stored padded to `outer.len()`; rows with
/// `inner[i] == outer[i]` are legitimate empty rows (they can occur at the
/// top of a shape). Text form is `"6,6,6,6/4,3,2"`, or just the outer
/// partition when the inner one is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Vec<u32>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: &Partition) -> Result<Self, ShapeError> {
        if !outer.contains(inner) {
            return Err(ShapeError::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        let padded = inner.padded(outer.len());
        Ok(SkewShape {
            outer,
            inner: padded,
        })
    }

    pub fn straight(outer: Partition) -> Self {
        let rows = outer.len();
        SkewShape {
            outer,
            inner: vec![0; rows],
        }
    }

    pub fn empty() -> Self {
        SkewShape::straight(Partition::empty())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// Inner row offsets, padded to `rows()` entries.
    pub fn inner(&self) -> &[u32] {
        &self.inner
    }

    pub fn inner_partition(&self) -> Partition {
        Partition::new(self.inner.clone()).expect("stored inner is a partition")
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// 0-based column range of row `i`: columns `start..end`.
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner[i] as usize, self.outer.part(i) as usize)
    }

    pub fn row_len(&self, i: usize) -> usize {
        let (s, e) = self.row_range(i);
        e - s
    }

    pub fn size(&self) -> usize {
        (0..self.rows()).map(|i| self.row_len(i)).sum()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&x| x == 0)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row < self.rows() && {
            let (s, e) = self.row_range(row);
            (s..e).contains(&col)
        }
    }

    /// Cells in row-major order, as 0-based `(row, col)` pairs.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows()).flat_map(move |r| {
            let (s, e) = self.row_range(r);
            (s..e).map(move |c| (r, c))
        })
    }

    /// Height of each column, indexed 0..outer_1.
    pub fn column_heights(&self) -> Vec<usize> {
        let width = self.outer.first() as usize;
        let mut heights = vec![0usize; width];
        for r in 0..self.rows() {
            let (s, e) = self.row_range(r);
            for h in heights.iter_mut().take(e).skip(s) {
                *h += 1;
            }
        }
        heights
    }

    /// The length of the longest column.
    pub fn skew_length(&self) -> usize {
        self.column_heights().into_iter().max().unwrap_or(0)
    }

    /// 180-degree rotation inside the `rows() x outer_1` bounding box.
    ///
    /// With `m = rows()` and `L = outer_1`, the box `(i, j)` maps to
    /// `(m+1-i, L+1-j)`; the result has outer row `j` equal to
    /// `L - inner[m-1-j]` and inner row `j` equal to `L - outer[m-1-j]`.
    /// Rotating twice is the identity exactly when the shape touches the
    /// left edge and its top row is nonempty (otherwise the rotation
    /// translates the diagram inside its box).
    pub fn rotate180(&self) -> SkewShape {
        let m = self.rows();
        if m == 0 {
            return SkewShape::empty();
        }
        let width = self.outer.first();
        let mut outer = Vec::with_capacity(m);
        let mut inner = Vec::with_capacity(m);
        for j in 0..m {
            outer.push(width - self.inner[m - 1 - j]);
            inner.push(width - self.outer.part(m - 1 - j));
        }
        let outer = Partition::new(outer).expect("rotation of outer is a partition");
        let inner = Partition::new(inner).expect("rotation of inner is a partition");
        SkewShape::new(outer, &inner).expect("rotation preserves containment")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self.inner_partition();
        if inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.split_once('/') {
            Some((out, inn)) => {
                let outer: Partition = out.parse()?;
                let inner: Partition = inn.parse()?;
                SkewShape::new(outer, &inner)
            }
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Staircase shape with row lengths `mu` and inter-row offsets `nu`.
///
/// Plain form (`nu.len() == mu.len() - 1`, `inner_tail` empty): rows are
/// numbered 1..m top to bottom, row m starts in column 1, and row i starts
/// `nu[i]` columns to the right of the start of row i+1, so row i starts at
/// column `1 + nu[i] + ... + nu[m-1]` and has length `mu[i]`.
///
/// Extended form (`nu.len() == mu.len()`): the leading entry `nu[0]` is an
/// extra offset `d_0`, and the 180-degree rotation of the partition
/// `inner_tail` is stacked on top of the staircase with its bottom-left
/// corner `d_0` columns to the right of the start of row 1 (the rotated
/// block's rows are right-justified to a common right edge).
///
/// Errors when some `mu[i]` is zero, when `nu[i] + mu[i] < mu[i+1]` (the
/// rows would not form a skew shape), or, in the extended form, when
/// `d_0 + inner_tail_1 < mu[0]`.
pub fn shape_sh(
    nu: &[u32],
    mu: &[u32],
    inner_tail: &Partition,
) -> Result<SkewShape, ShapeError> {
    let m = mu.len();
    if m == 0 {
        return Err(ShapeError::InvalidStaircase("mu is empty".into()));
    }
    if mu.iter().any(|&x| x == 0) {
        return Err(ShapeError::InvalidStaircase(format!(
            "mu {mu:?} has a zero part"
        )));
    }
    let (d0, offsets) = if nu.len() == m - 1 && inner_tail.is_empty() {
        (None, nu)
    } else if nu.len() == m {
        (Some(nu[0]), &nu[1..])
    } else {
        return Err(ShapeError::InvalidStaircase(format!(
            "offset list has length {} but mu has length {m}",
            nu.len()
        )));
    };

    // Staircase rows, top to bottom; row i starts at the sum of the offsets
    // below it.
    let mut starts = vec![0u32; m];
    for i in (0..m - 1).rev() {
        starts[i] = starts[i + 1] + offsets[i];
    }
    for i in 0..m - 1 {
        if starts[i] + mu[i] < starts[i + 1] + mu[i + 1] {
            return Err(ShapeError::InvalidStaircase(format!(
                "row {} would end left of row {} (offset {} too small for lengths {} -> {})",
                i + 1,
                i + 2,
                offsets[i],
                mu[i],
                mu[i + 1]
            )));
        }
    }

    let mut outer: Vec<u32> = Vec::new();
    let mut inner: Vec<u32> = Vec::new();
    if let Some(d0) = d0 {
        if !inner_tail.is_empty() || d0 != mu[0] {
            let nu1 = inner_tail.first();
            if d0 + nu1 < mu[0] {
                return Err(ShapeError::InvalidStaircase(format!(
                    "rotated block offset {d0} plus width {nu1} is less than top row length {}",
                    mu[0]
                )));
            }
            let p = inner_tail.len();
            let edge = starts[0] + d0 + nu1;
            for j in 0..p {
                // Row j of the rotated block has the length of inner_tail's
                // row p-j, right-justified to the common right edge.
                outer.push(edge);
                inner.push(edge - inner_tail.part(p - 1 - j));
            }
            if p == 0 && d0 > mu[0] {
                return Err(ShapeError::InvalidStaircase(format!(
                    "empty rotated block with offset {d0} exceeding top row length {}",
                    mu[0]
                )));
            }
        }
    }
    for i in 0..m {
        outer.push(starts[i] + mu[i]);
        inner.push(starts[i]);
    }
    let outer = Partition::new(outer)
        .map_err(|_| ShapeError::InvalidStaircase("rows do not stack into a partition".into()))?;
    let inner = Partition::new(inner)
        .map_err(|_| ShapeError::InvalidStaircase("row starts do not weakly decrease".into()))?;
    SkewShape::new(outer, &inner)
}

/// Truncation `kappa(h)` of the staircase attached to an energy sequence.
///
/// The infinite staircase has rows i = 1, 2, ... (bottom to top), each of
/// length `l`; row 1 starts in column 1 and row i+1 starts `h_i` columns to
/// the right of row i, where `h_i = h_fin[i]` for `i <= J` and `h_i` equals
/// the ground cycle value `k[(i-1) mod n]` beyond. `kappa(h)` keeps every
/// column up to and including the rightmost column whose height differs
/// from `n`; all discarded columns have height exactly `n`. Rows are
/// returned in English convention, top row = highest staircase row met.
///
/// Entries of `h_fin` must lie in `0..=l`; membership of `h_fin` in the
/// spectrum is not required. Signed character sums evaluate this on
/// decremented sequences, whose staircases can contain columns of height
/// `> n`; those columns are kept (they make the Schur term vanish in `n`
/// variables, matching the empty set of column-strict fillings of the
/// staircase). On spectrum sequences every column height is at most `n`,
/// so the cut is the classical "rightmost deficient column".
pub fn kappa_from_h(
    h_fin: &[u32],
    k_cycle: &[u32],
    l: u32,
    n: usize,
) -> Result<SkewShape, ShapeError> {
    if n < 2 || k_cycle.len() != n {
        return Err(ShapeError::InvalidEnergies(format!(
            "ground cycle length {} does not match n = {n}",
            k_cycle.len()
        )));
    }
    if k_cycle.iter().map(|&k| k as u64).sum::<u64>() != l as u64 || l == 0 {
        return Err(ShapeError::InvalidEnergies(format!(
            "ground cycle {k_cycle:?} does not sum to the level {l}"
        )));
    }
    if let Some(&bad) = h_fin.iter().find(|&&h| h > l) {
        return Err(ShapeError::InvalidEnergies(format!(
            "entry {bad} exceeds the level {l}"
        )));
    }

    let j = h_fin.len();
    let rows = j + 2 * n;
    // starts[i] = 1-based first column of staircase row i+1.
    let mut starts = Vec::with_capacity(rows);
    starts.push(1u64);
    for i in 0..rows - 1 {
        let h = if i < j {
            h_fin[i] as u64
        } else {
            k_cycle[i % n] as u64
        };
        starts.push(starts[i] + h);
    }
    let top_start = starts[rows - 1];

    let width = (top_start + l as u64 - 1) as usize;
    let mut heights = vec![0u32; width + 1];
    for &s in &starts {
        for c in s..s + l as u64 {
            heights[c as usize] += 1;
        }
    }

    // The rightmost column whose height is not exactly n; everything beyond
    // it is full. Columns at or beyond starts[j] + l are covered by ground
    // rows alone and are exactly full, so the cut always falls inside the
    // region whose covering rows were all built.
    let mut cut = 0usize;
    for c in 1..top_start as usize {
        if heights[c] != n as u32 {
            cut = c;
        }
    }
    assert!(
        (cut as u64) < starts[j] + l as u64,
        "cut {cut} escaped the prefix region (J = {j}, l = {l})"
    );

    if cut == 0 {
        return Ok(SkewShape::empty());
    }

    let kept = starts.iter().filter(|&&s| s <= cut as u64).count();
    let mut outer = Vec::with_capacity(kept);
    let mut inner = Vec::with_capacity(kept);
    for i in (0..kept).rev() {
        let s = starts[i];
        outer.push((s + l as u64 - 1).min(cut as u64) as u32);
        inner.push((s - 1) as u32);
    }
    let outer = Partition::new(outer).expect("clipped staircase rows form a partition");
    let inner = Partition::new(inner).expect("staircase starts form a partition");
    SkewShape::new(outer, &inner)
}

/// The border strip whose columns, left to right, have heights `heights`
/// (all positive): consecutive columns overlap in exactly one row, and the
/// leftmost column reaches the bottom row.
pub fn border_strip(heights: &[u32]) -> Result<SkewShape, ShapeError> {
    if heights.is_empty() {
        return Ok(SkewShape::empty());
    }
    if heights.iter().any(|&m| m == 0) {
        return Err(ShapeError::InvalidBorderStrip(format!(
            "{heights:?} has a zero height"
        )));
    }
    let r = heights.len();
    // Column c spans staircase rows lo[c]..=hi[c], bottom row = 1; column
    // c+1 starts on the row where column c ends.
    let mut lo = Vec::with_capacity(r);
    let mut hi = Vec::with_capacity(r);
    let mut bottom = 1u32;
    for &m in heights {
        lo.push(bottom);
        hi.push(bottom + m - 1);
        bottom += m - 1;
    }
    let total_rows = hi[r - 1];
    let mut outer = Vec::with_capacity(total_rows as usize);
    let mut inner = Vec::with_capacity(total_rows as usize);
    for er in 1..=total_rows {
        let fr = total_rows - er + 1; // bottom-up row index
        let mut min_c = None;
        let mut max_c = 0usize;
        for c in 0..r {
            if lo[c] <= fr && fr <= hi[c] {
                min_c.get_or_insert(c);
                max_c = c;
            }
        }
        let min_c = min_c.expect("border strip rows are nonempty");
        outer.push(max_c as u32 + 1);
        inner.push(min_c as u32);
    }
    let outer = Partition::new(outer).expect("border strip outer is a partition");
    let inner = Partition::new(inner).expect("border strip inner is a partition");
    SkewShape::new(outer, &inner)
}

/// All partitions of `size` with at most `max_len` parts, each of size at
/// most `max_part`, in decreasing lexicographic order.
pub fn partitions_of(size: usize, max_len: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(
        remaining: usize,
        slots: usize,
        cap: u32,
        stack: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(stack.clone()).expect("descending parts"));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = (cap as usize).min(remaining) as u32;
        for p in (1..=hi).rev() {
            // Feasibility: the rest must fit in the remaining slots.
            if (remaining - p as usize) > (slots - 1) * p as usize {
                continue;
            }
            stack.push(p);
            rec(remaining - p as usize, slots - 1, p, stack, out);
            stack.pop();
        }
    }
    rec(size, max_len, max_part, &mut stack, &mut out);
    out
}

/// All partitions (any size, including empty) fitting in a `rows x cols` box.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack: Vec<u32> = Vec::new();
    fn rec(slots: usize, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if slots == 0 {
            return;
        }
        for p in (1..=cap).rev() {
            stack.push(p);
            out.push(Partition::new(stack.clone()).expect("descending parts"));
            rec(slots - 1, p, stack, out);
            stack.pop();
        }
    }
    rec(rows, cols, &mut stack, &mut out);
    out
}

/// All compositions of `size` into exactly `len` parts, each at least
/// `min_part`.
pub fn compositions_of(size: u32, len: usize, min_part: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(
        remaining: u32,
        slots: usize,
        min_part: u32,
        stack: &mut Vec<u32>,
        out: &mut Vec<Composition>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Composition::new(stack.clone()));
            }
            return;
        }
        let reserve = min_part * (slots as u32 - 1);
        if remaining < min_part + reserve {
            return;
        }
        for p in min_part..=remaining - reserve {
            stack.push(p);
            rec(remaining - p, slots - 1, min_part, stack, out);
            stack.pop();
        }
    }
    rec(size, len, min_part, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn partition_parse_and_display() {
        assert_eq!(pt("4,3,2,1").parts(), &[4, 3, 2, 1]);
        assert_eq!(pt("4,3,0").parts(), &[4, 3]);
        assert_eq!(pt("0"), Partition::empty());
        assert_eq!(pt("4,3,2,1").to_string(), "4,3,2,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert!("3,4".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_golden() {
        assert_eq!(pt("4,3,1").conjugate(), pt("3,2,2,1"));
        assert_eq!(pt("4,3,1").conjugate().conjugate(), pt("4,3,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn skew_parse_display_and_size() {
        let s = sk("6,6,6,6/4,3,2");
        assert_eq!(s.rows(), 4);
        assert_eq!(s.size(), 24 - 9);
        assert_eq!(s.to_string(), "6,6,6,6/4,3,2");
        assert_eq!(sk("4,3,2,1").to_string(), "4,3,2,1");
        assert!("2,2/3".parse::<SkewShape>().is_err());
    }

    #[test]
    fn skew_length_is_longest_column() {
        assert_eq!(sk("6,6,6,6/4,3,2").skew_length(), 4);
        assert_eq!(sk("3,3/1").skew_length(), 2);
        assert_eq!(sk("5,2/2").skew_length(), 1);
        assert_eq!(SkewShape::empty().skew_length(), 0);
    }

    #[test]
    fn rotate180_goldens() {
        assert_eq!(sk("6,6,6,6/4,3,2").rotate180(), sk("6,4,3,2"));
        assert_eq!(sk("2,1/1").rotate180(), sk("2,1/1"));
        // A shape not touching the left edge translates under rotation.
        assert_eq!(sk("2,2/1,1").rotate180(), sk("1,1"));
    }

    #[test]
    fn shape_sh_plain_goldens() {
        assert_eq!(shape_sh(&[1], &[2, 2], &Partition::empty()).unwrap(), sk("3,2/1"));
        assert_eq!(
            shape_sh(&[1, 1, 2], &[2, 3, 4, 6], &Partition::empty()).unwrap(),
            sk("6,6,6,6/4,3,2")
        );
        // Offset too small for the next row length.
        assert!(shape_sh(&[0], &[1, 3], &Partition::empty()).is_err());
        assert!(shape_sh(&[0], &[1, 0], &Partition::empty()).is_err());
    }

    #[test]
    fn shape_sh_extended_golden() {
        // Rotated block of (2,1) on top of a two-row staircase.
        let s = shape_sh(&[1, 1], &[2, 2], &pt("2,1")).unwrap();
        // Staircase rows: row 2 at columns 1-2, row 1 at columns 2-3;
        // block right edge at column 1 + d0 + nu_1 = 4, block rows of
        // lengths 1, 2 right-justified.
        assert_eq!(s, sk("4,4,3,2/3,2,1"));
        // d0 + nu_1 < mu_1 is rejected.
        assert!(shape_sh(&[0, 0], &[3, 3], &pt("2,1")).is_err());
        // Empty block: d0 must equal mu_1.
        assert_eq!(
            shape_sh(&[2, 1], &[2, 2], &Partition::empty()).unwrap(),
            shape_sh(&[1], &[2, 2], &Partition::empty()).unwrap()
        );
        assert!(shape_sh(&[1, 1], &[2, 2], &Partition::empty()).is_err());
        assert!(shape_sh(&[3, 1], &[2, 2], &Partition::empty()).is_err());
    }

    #[test]
    fn kappa_two_row_golden() {
        // J = 1, n = 2: kappa((d)) over cycle (k1, k2) is the two-row shape
        // (d + k2, l) / (d) whenever k1 < d <= l.
        for k1 in 0u32..=2 {
            for k2 in 1u32..=2 {
                let l = k1 + k2;
                for d in k1 + 1..=l {
                    let got = kappa_from_h(&[d], &[k1, k2], l, 2).unwrap();
                    let outer = Partition::new(vec![d + k2, l]).unwrap();
                    let inner = Partition::new(vec![d]).unwrap();
                    assert_eq!(got, SkewShape::new(outer, &inner).unwrap());
                }
            }
        }
    }

    #[test]
    fn kappa_of_empty_sequence_depends_on_the_cycle() {
        // The ground staircase is not generally fully covered near its
        // bottom-left corner; the leftover columns survive the cut.
        assert_eq!(kappa_from_h(&[], &[1, 1], 2, 2).unwrap(), sk("1"));
        assert_eq!(kappa_from_h(&[], &[2, 0], 2, 2).unwrap(), sk("2"));
        assert_eq!(kappa_from_h(&[], &[0, 2], 2, 2).unwrap(), SkewShape::empty());
        assert_eq!(kappa_from_h(&[], &[0, 1], 1, 2).unwrap(), SkewShape::empty());
    }

    #[test]
    fn kappa_keeps_overfull_columns() {
        // Decrementing both entries of the spectrum point (1,1) for the
        // cycle (1,0) stacks three length-1 rows in column 1; the column of
        // height 3 > n = 2 must survive so its Schur term can vanish.
        let shape = kappa_from_h(&[0, 0], &[1, 0], 1, 2).unwrap();
        assert_eq!(shape, sk("1,1,1"));
    }

    #[test]
    fn kappa_errors() {
        assert!(kappa_from_h(&[3], &[1, 1], 2, 2).is_err());
        assert!(kappa_from_h(&[1], &[1, 1], 3, 2).is_err());
        assert!(kappa_from_h(&[1], &[2], 2, 1).is_err());
    }

    #[test]
    fn border_strip_goldens() {
        assert_eq!(border_strip(&[1, 1, 1]).unwrap(), sk("3"));
        assert_eq!(border_strip(&[2, 2]).unwrap(), sk("2,2,1/1"));
        assert_eq!(border_strip(&[3]).unwrap(), sk("1,1,1"));
        assert_eq!(border_strip(&[]).unwrap(), SkewShape::empty());
        assert!(border_strip(&[1, 0]).is_err());
    }

    #[test]
    fn enumeration_helpers() {
        assert_eq!(partitions_of(4, 4, 4).len(), 5);
        assert_eq!(partitions_of(4, 2, 4).len(), 3);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(compositions_of(4, 2, 1).len(), 3);
        assert_eq!(compositions_of(4, 2, 0).len(), 5);
    }

    #[test]
    fn dominance_and_rectangles() {
        assert!(pt("3,1").dominates(&pt("2,2")));
        assert!(!pt("2,2").dominates(&pt("3,1")));
        assert!(pt("2,2").dominates(&pt("2,2")));
        assert!(!pt("2,1").dominates(&pt("2,2")));
        assert_eq!(pt("2,1").plus_rectangle(3, 2).unwrap(), pt("4,3,2"));
        assert!(pt("2,1").plus_rectangle(1, 2).is_err());
    }
}
