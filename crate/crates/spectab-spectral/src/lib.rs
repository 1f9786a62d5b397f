//! Spectral decomposition of vertex-model path spaces.
//!
//! A cyclic level datum `K = (k_1, ..., k_n)`, read periodically as `k_i`,
//! fixes a ground path: site `i` carries the element of `B_l` whose letter
//! `j + 1` occurs `k_{i+j}` times, where `l = k_1 + ... + k_n`. The paths of
//! the model are the sequences in `B_l` that agree with the ground path far
//! to the right. The local energies `h_i = H(s_{i+1}, s_i)` of such a path
//! stabilize to `k_i`, and the trimmed sequence `(h_1, ..., h_J)` is the
//! spectral projection of the path. Grouping paths by their projection slices
//! the graded character of the path space into finite pieces: the piece at
//! `h` sits in degree `E(h) = sum_i i (h_i - k_i)` and is spanned by the
//! nonmovable tableaux on a skew shape `kappa(h)` cut from a staircase.
//!
//! The other half of the story truncates the path space at a finite length
//! `m` and expands the resulting polynomial character in Schur functions; the
//! coefficients are Kostka-Foulkes polynomials (rectangular datum) or their
//! skew generalizations, and suitably normalized they stabilize, degree by
//! degree, to the branching functions of the full space.

use std::collections::BTreeMap;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use spectab_crystal::{
    energy, enumerate_bl, ground_element, CrystalElement, CrystalError, WeightK,
};
use spectab_shapes::{
    kappa_from_h, partitions_of, shape_sh, Composition, Partition, ShapeError, SkewShape,
};
use spectab_symfunc::{
    g_polynomial, kostka_foulkes, lr0_count, schur, schur_expansion_from_graded,
    MonomialExpansion, QPolynomial, SchurExpansion, SymfuncError,
};
use spectab_tableaux::{
    enumerate_tableaux, is_nonmovable, is_semistandard, Tableau, TableauError, TableauKind,
};

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("crystal element rank {0} does not match the weight datum rank {1}")]
    RankMismatch(u8, usize),
    #[error("crystal element length {0} does not match the level {1}")]
    LevelMismatch(usize, u32),
    #[error("exponent h_{index} = {value} exceeds the level {level}")]
    ExponentTooLarge { index: usize, value: u32, level: u32 },
    #[error("exponent sequence is not trimmed: h_{index} equals the ground exponent there")]
    NotTrimmed { index: usize },
    #[error("window sum {sum} starting at position {index} is below the level {level}")]
    WindowViolation { index: usize, sum: u32, level: u32 },
    #[error("truncation length {m} is not congruent to {k} mod {n}")]
    CongruenceViolation { k: usize, m: usize, n: usize },
    #[error("cannot pad {lambda:?} with equal columns to a partition of {total} on {n} rows")]
    PaddingNotIntegral { lambda: Vec<u32>, total: usize, n: usize },
    #[error("weight datum {0:?} is not a level multiple of one fundamental weight")]
    NotRectangular(Vec<u32>),
    #[error("path tuple must be nonempty")]
    EmptyTuple,
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
    #[error(transparent)]
    Symfunc(#[from] SymfuncError),
}

/// A path that agrees with the ground path of `k` beyond an explicit prefix:
/// site `i` carries `prefix[i-1]` for `i <= prefix.len()` and the ground
/// element of site `i` after that.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FinitePath {
    prefix: Vec<CrystalElement>,
    k: WeightK,
}

impl FinitePath {
    pub fn new(prefix: Vec<CrystalElement>, k: WeightK) -> Result<Self, SpectralError> {
        for s in &prefix {
            if s.rank() as usize != k.rank() {
                return Err(SpectralError::RankMismatch(s.rank(), k.rank()));
            }
            if s.entries().len() != k.level() as usize {
                return Err(SpectralError::LevelMismatch(s.entries().len(), k.level()));
            }
        }
        Ok(FinitePath { prefix, k })
    }

    pub fn prefix(&self) -> &[CrystalElement] {
        &self.prefix
    }

    pub fn weight_k(&self) -> &WeightK {
        &self.k
    }

    /// The element at 1-based site `i` (the ground element beyond the prefix).
    pub fn site(&self, i: usize) -> CrystalElement {
        assert!(i >= 1, "sites are 1-based");
        if i <= self.prefix.len() {
            self.prefix[i - 1].clone()
        } else {
            ground_element(&self.k, i)
        }
    }

    /// Local energies h_i = H(s_{i+1}, s_i) for i = 1..=prefix length; all
    /// later ones equal the ground exponents k_i.
    pub fn exponents(&self) -> Vec<u32> {
        (1..=self.prefix.len())
            .map(|i| energy(&self.site(i + 1), &self.site(i)))
            .collect()
    }

    /// Drop trailing prefix elements that already agree with the ground path.
    pub fn trimmed(&self) -> FinitePath {
        let mut prefix = self.prefix.clone();
        while let Some(last) = prefix.last() {
            if *last == ground_element(&self.k, prefix.len()) {
                prefix.pop();
            } else {
                break;
            }
        }
        FinitePath { prefix, k: self.k.clone() }
    }
}

/// A point of the energy spectrum: a trimmed exponent sequence
/// `(h_1, ..., h_J)` that some eventually-ground path realizes. Validity
/// means every `h_i <= l`, the last entry differs from its ground exponent,
/// and every window of `n` consecutive exponents (ground-extended past `J`)
/// sums to at least `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumPoint {
    h: Vec<u32>,
    k: WeightK,
}

impl SpectrumPoint {
    pub fn new(h: Vec<u32>, k: WeightK) -> Result<Self, SpectralError> {
        let l = k.level();
        let n = k.rank();
        let j = h.len();
        for (idx, &v) in h.iter().enumerate() {
            if v > l {
                return Err(SpectralError::ExponentTooLarge {
                    index: idx + 1,
                    value: v,
                    level: l,
                });
            }
        }
        if let Some(&last) = h.last() {
            if last == k.k(j) {
                return Err(SpectralError::NotTrimmed { index: j });
            }
        }
        for i in 1..=j {
            let sum: u32 = (i..i + n).map(|t| if t <= j { h[t - 1] } else { k.k(t) }).sum();
            if sum < l {
                return Err(SpectralError::WindowViolation { index: i, sum, level: l });
            }
        }
        // NOTE: the window at i = J together with trimming forces h_J > k_J.
        debug_assert!(h.last().map_or(true, |&last| last > k.k(j)));
        Ok(SpectrumPoint { h, k })
    }

    /// Trim trailing ground exponents, then validate.
    pub fn from_exponents(mut h: Vec<u32>, k: WeightK) -> Result<Self, SpectralError> {
        while let Some(&last) = h.last() {
            if last == k.k(h.len()) {
                h.pop();
            } else {
                break;
            }
        }
        SpectrumPoint::new(h, k)
    }

    pub fn h_fin(&self) -> &[u32] {
        &self.h
    }

    pub fn weight_k(&self) -> &WeightK {
        &self.k
    }

    pub fn is_ground(&self) -> bool {
        self.h.is_empty()
    }

    /// E(h) = sum_i i (h_i - k_i), the degree of the slice; nonnegative.
    pub fn energy(&self) -> u64 {
        let mut e: i64 = 0;
        for (i, &v) in self.h.iter().enumerate() {
            e += (i as i64 + 1) * (v as i64 - self.k.k(i + 1) as i64);
        }
        assert!(e >= 0, "spectrum points have nonnegative energy");
        e as u64
    }

    /// The skew shape kappa(h) cut from the staircase whose row at site `i`
    /// has length `l` and starts `h_i` columns right of the row below it.
    pub fn kappa(&self) -> Result<SkewShape, SpectralError> {
        Ok(kappa_from_h(&self.h, self.k.cycle(), self.k.level(), self.k.rank())?)
    }
}

/// The ground path of `k` with the first `len` sites recorded explicitly.
pub fn ground_path(k: &WeightK, len: usize) -> FinitePath {
    let prefix = (1..=len).map(|i| ground_element(k, i)).collect();
    FinitePath { prefix, k: k.clone() }
}

/// Spectral projection: the trimmed exponent sequence of a path.
pub fn rho(p: &FinitePath) -> Result<SpectrumPoint, SpectralError> {
    SpectrumPoint::from_exponents(p.exponents(), p.weight_k().clone())
}

/// Exact energy and weight of a path: E = sum_i i (h_i - k_i), and the
/// weight starts from the base (v_1, ..., v_n) with v_j = k_j + ... + k_{n-1}
/// (the finite part of the highest weight of the space) and adds the content
/// difference to the ground path site by site. The result is canonicalized
/// so that its minimum entry is zero, matching reduced monomial weights.
pub fn path_energy_weight(p: &FinitePath) -> (u64, Vec<i32>) {
    let k = p.weight_k();
    let n = k.rank();
    let mut e: i64 = 0;
    for (i, &h) in p.exponents().iter().enumerate() {
        e += (i as i64 + 1) * (h as i64 - k.k(i + 1) as i64);
    }
    assert!(e >= 0, "eventually-ground paths have nonnegative energy");
    let mut w: Vec<i64> = (1..=n).map(|j| (j..n).map(|i| k.k(i) as i64).sum()).collect();
    for i in 1..=p.prefix().len() {
        let s = p.site(i);
        let g = ground_element(k, i);
        for (a, (sc, gc)) in s.weight().iter().zip(g.weight()).enumerate() {
            w[a] += *sc as i64 - gc as i64;
        }
    }
    let min = w.iter().copied().min().unwrap_or(0);
    (e as u64, w.iter().map(|&x| (x - min) as i32).collect())
}

// NOTE: mirrors the staircase geometry behind kappa_from_h, with extra tail
// rows so the letters forced in full columns can be counted exactly. Row at
// site i occupies columns starts[i-1] .. starts[i-1]+l-1 (1-based), the cut
// is the rightmost column not covered by exactly n rows, and kappa keeps the
// rows that reach the cut, clipped to it.
struct Staircase {
    starts: Vec<usize>,
    cut: usize,
    kept: usize,
    l: usize,
}

fn staircase(h_fin: &[u32], k: &WeightK) -> Staircase {
    let n = k.rank();
    let l = k.level() as usize;
    let j = h_fin.len();
    let rows = j + 4 * n;
    let mut starts = vec![1usize];
    for i in 0..rows - 1 {
        let step = if i < j { h_fin[i] } else { k.k(i + 1) } as usize;
        starts.push(starts[i] + step);
    }
    let top = starts[j + 2 * n - 1];
    let mut cut = 0;
    for c in (1..top).rev() {
        let height = starts.iter().filter(|&&s| s <= c && c < s + l).count();
        if height != n {
            cut = c;
            break;
        }
    }
    let kept = starts.iter().filter(|&&s| s <= cut).count();
    Staircase { starts, cut, kept, l }
}

/// The fiber of rho over a spectrum point: one path per nonmovable tableau
/// on kappa(h) with entries at most n. Row `i` of the tableau (from the
/// bottom) supplies the letters of site `i` up to the cut column; every
/// column beyond the cut is full, so its letters read 1..n downwards and the
/// remaining letters of the site are forced.
pub fn paths_for_spectrum(point: &SpectrumPoint) -> Result<Vec<FinitePath>, SpectralError> {
    let k = point.weight_k().clone();
    let n = k.rank();
    let shape = point.kappa()?;
    let st = staircase(point.h_fin(), &k);
    assert_eq!(shape.outer().len(), st.kept, "kappa rows must match kept staircase rows");
    let mut out = Vec::new();
    for t in enumerate_tableaux(&shape, None, TableauKind::Nonmovable, n as u8) {
        let mut prefix = Vec::with_capacity(st.kept);
        for site in 1..=st.kept {
            let start = st.starts[site - 1];
            let mut letters = t.rows()[st.kept - site].clone();
            for c in start..start + st.l {
                if c <= st.cut {
                    continue;
                }
                let above = st.starts[site..]
                    .iter()
                    .filter(|&&s| s <= c && c < s + st.l)
                    .count();
                letters.push((above + 1) as u8);
            }
            letters.sort_unstable();
            prefix.push(CrystalElement::new(letters, n as u8)?);
        }
        let path = FinitePath::new(prefix, k.clone())?;
        let back = rho(&path)?;
        assert_eq!(back.h_fin(), point.h_fin(), "fiber element must project onto the point");
        out.push(path);
    }
    Ok(out)
}

/// Character of the nonmovable tableaux on `shape` with entries at most `n`:
/// t_shape = sum over such tableaux of x^content, optionally reduced modulo
/// x_1 ... x_n = 1.
pub fn t_character(
    shape: &SkewShape,
    n: usize,
    reduced: bool,
) -> Result<MonomialExpansion, SpectralError> {
    let mut me = MonomialExpansion::zero(n);
    for t in enumerate_tableaux(shape, None, TableauKind::Nonmovable, n as u8) {
        let content: Vec<i32> = t.content_padded(n)?.iter().map(|&x| x as i32).collect();
        me.add_term(content, BigInt::one());
    }
    Ok(if reduced { me.reduce() } else { me })
}

/// Alternating Schur-function expression for the slice at `h`:
/// sum over subsets P of the nonzero positions of h of
/// (-1)^|P| s_{kappa(h - 1_P)}, reduced modulo x_1 ... x_n = 1.
/// Equals the nonmovable character t_{kappa(h)}.
pub fn alt_schur_sum(point: &SpectrumPoint) -> Result<MonomialExpansion, SpectralError> {
    let k = point.weight_k();
    let n = k.rank();
    let h = point.h_fin();
    let nonzero: Vec<usize> = h
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v != 0)
        .map(|(i, _)| i)
        .collect();
    let mut acc = MonomialExpansion::zero(n).reduce();
    for mask in 0u32..(1 << nonzero.len()) {
        let mut hh = h.to_vec();
        for (bit, &pos) in nonzero.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                hh[pos] -= 1;
            }
        }
        let shape = kappa_from_h(&hh, k.cycle(), k.level(), n)?;
        let sign = if mask.count_ones() % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        acc.add_scaled(&schur(&shape, n).reduce(), &sign);
    }
    Ok(acc)
}

/// All spectrum points of energy at most `max_degree`, sorted by energy and
/// then by exponent sequence.
///
/// The search places the last deviation at position J <= n * max_degree and
/// fills h right to left. With T_i = sum_{t >= i} (h_t - k_t), every valid
/// point keeps all T_i >= 0 and T_i >= T_{i+n} (the window condition), and
/// E = sum_i T_i, which prunes the search exactly.
pub fn spectrum_points(k: &WeightK, max_degree: u64) -> Result<Vec<SpectrumPoint>, SpectralError> {
    fn rec(
        i: usize,
        acc: u64,
        j: usize,
        k: &WeightK,
        max_degree: u64,
        h: &mut Vec<u32>,
        t_suffix: &mut Vec<i64>,
        out: &mut Vec<SpectrumPoint>,
    ) -> Result<(), SpectralError> {
        if i == 0 {
            let point = SpectrumPoint::new(h.clone(), k.clone())?;
            assert_eq!(point.energy(), acc, "accumulated defects must equal the energy");
            out.push(point);
            return Ok(());
        }
        let n = k.rank();
        let lo = if i == j { k.k(i) + 1 } else { 0 };
        for v in lo..=k.level() {
            let t_i = v as i64 - k.k(i) as i64 + t_suffix[i + 1];
            if t_i < 0 || t_i < t_suffix[i + n] {
                continue;
            }
            let acc2 = acc + t_i as u64;
            // every position below i congruent to i mod n carries at least t_i
            if acc2 + t_i as u64 * ((i - 1) / n) as u64 > max_degree {
                continue;
            }
            h[i - 1] = v;
            t_suffix[i] = t_i;
            rec(i - 1, acc2, j, k, max_degree, h, t_suffix, out)?;
        }
        Ok(())
    }

    let n = k.rank();
    let mut out = vec![SpectrumPoint::new(Vec::new(), k.clone())?];
    for j in 1..=n * max_degree as usize {
        let mut h = vec![0u32; j];
        let mut t_suffix = vec![0i64; j + n + 1];
        rec(j, 0, j, k, max_degree, &mut h, &mut t_suffix, &mut out)?;
    }
    out.sort_by_key(|p| (p.energy(), p.h_fin().to_vec()));
    Ok(out)
}

/// The graded character truncated at `max_degree`, computed through the
/// spectral decomposition: degree d collects q^{E(h)} t_{kappa(h)} over the
/// spectrum points with E(h) = d, with reduced monomial weights.
pub fn character_partial_sum(
    k: &WeightK,
    max_degree: u64,
) -> Result<BTreeMap<u64, MonomialExpansion>, SpectralError> {
    let n = k.rank();
    let mut out: BTreeMap<u64, MonomialExpansion> = (0..=max_degree)
        .map(|d| (d, MonomialExpansion::zero(n).reduce()))
        .collect();
    for point in spectrum_points(k, max_degree)? {
        let t = t_character(&point.kappa()?, n, true)?;
        out.get_mut(&point.energy())
            .expect("spectrum_points respects the degree bound")
            .add_scaled(&t, &BigInt::one());
    }
    Ok(out)
}

/// Brute-force enumeration of all eventually-ground paths of energy at most
/// `max_degree`, returned trimmed. A path within the bound deviates from the
/// ground path only at sites below n (max_degree + 1), so the search fixes
/// that horizon and walks right to left; with T_i = sum_{t >= i} (h_t - k_t)
/// it prunes on T_i < 0 (suffix defects never go negative) and on the partial
/// energy sum_t T_t exceeding the bound.
pub fn paths_with_energy_at_most(
    k: &WeightK,
    max_degree: u64,
) -> Result<Vec<FinitePath>, SpectralError> {
    struct Search<'a> {
        bl: &'a [CrystalElement],
        emat: Vec<Vec<u32>>,
        kv: Vec<u32>,
        sites: usize,
        max_degree: u64,
        k: &'a WeightK,
        choice: Vec<usize>,
        out: Vec<FinitePath>,
    }

    impl Search<'_> {
        fn rec(&mut self, i: usize, next_idx: usize, t_next: i64, acc: u64) {
            if i == 0 {
                let prefix: Vec<CrystalElement> =
                    (1..=self.sites).map(|t| self.bl[self.choice[t]].clone()).collect();
                let path = FinitePath { prefix, k: self.k.clone() };
                self.out.push(path.trimmed());
                return;
            }
            for ci in 0..self.bl.len() {
                let t_i = self.emat[next_idx][ci] as i64 - self.kv[i] as i64 + t_next;
                if t_i < 0 {
                    continue;
                }
                let acc2 = acc + t_i as u64;
                if acc2 > self.max_degree {
                    continue;
                }
                self.choice[i] = ci;
                self.rec(i - 1, ci, t_i, acc2);
            }
        }
    }

    let n = k.rank();
    let bl = enumerate_bl(k.level() as usize, n as u8);
    let sites = n * (max_degree as usize + 1);
    let emat: Vec<Vec<u32>> = bl
        .iter()
        .map(|x| bl.iter().map(|y| energy(x, y)).collect())
        .collect();
    let kv: Vec<u32> = (0..=sites).map(|i| if i == 0 { 0 } else { k.k(i) }).collect();
    let top = ground_element(k, sites + 1);
    let top_idx = bl
        .iter()
        .position(|x| *x == top)
        .expect("ground elements lie in B_l");
    let mut search = Search {
        bl: &bl,
        emat,
        kv,
        sites,
        max_degree,
        k,
        choice: vec![0; sites + 1],
        out: Vec::new(),
    };
    search.rec(sites, top_idx, 0, 0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// The graded character truncated at `max_degree`, computed directly from
/// paths: each path of energy E <= max_degree contributes q^E x^weight.
/// The independent oracle side of the spectral decomposition.
pub fn character_by_paths(
    k: &WeightK,
    max_degree: u64,
) -> Result<BTreeMap<u64, MonomialExpansion>, SpectralError> {
    let n = k.rank();
    let mut out: BTreeMap<u64, MonomialExpansion> = (0..=max_degree)
        .map(|d| (d, MonomialExpansion::zero(n).reduce()))
        .collect();
    for p in paths_with_energy_at_most(k, max_degree)? {
        let (e, w) = path_energy_weight(&p);
        out.get_mut(&e)
            .expect("paths_with_energy_at_most respects the degree bound")
            .add_term(w, BigInt::one());
    }
    Ok(out)
}

fn nonzero_terms(e: &SchurExpansion) -> BTreeMap<Partition, QPolynomial> {
    e.terms()
        .iter()
        .filter(|(_, p)| !p.terms().is_empty())
        .map(|(lam, p)| (lam.clone(), p.clone()))
        .collect()
}

/// Truncated character of the path space of `l` times the `k`-th fundamental
/// weight, cut at length `m` with `m ≡ k (mod n)`: the sum over free tuples
/// `(s_1, ..., s_m)` in `B_l^m` of `q^{sum_{i<m} i h_i} x^content` with
/// `h_i = H(s_{i+1}, s_i)`, expanded in Schur functions of n variables.
///
/// Three routes are cross-checked exactly: the free tuples; the offset sums
/// `sum_d q^{c(d)} t_{Sh_d}` over offsets `d` in `[0..l]^{m-1}` with
/// `c(d) = sum_i (m - i) d_i`; and per-shape counts of lattice nonmovable
/// tableaux. The Schur coefficients are the Kostka-Foulkes polynomials
/// `K_{lambda, (l^m)}(q)`, which is also asserted against the charge method.
pub fn truncated_character(
    k: usize,
    m: usize,
    l: u32,
    n: usize,
) -> Result<SchurExpansion, SpectralError> {
    if m == 0 {
        return Err(SpectralError::Invalid("truncation length must be positive".into()));
    }
    if m % n != k % n {
        return Err(SpectralError::CongruenceViolation { k, m, n });
    }
    let kk = rectangular_cycle(k, l, n)?;
    let bl = enumerate_bl(l as usize, n as u8);
    let next_ground = ground_element(&kk, m + 1);
    assert!(
        next_ground.entries().iter().all(|&a| a as usize == n),
        "m ≡ k (mod n) puts the ground tail in phase"
    );

    // free tuples, graded by sum_{i=1}^{m-1} i H(s_{i+1}, s_i)
    let mut graded: BTreeMap<u64, MonomialExpansion> = BTreeMap::new();
    for tuple in (0..m).map(|_| bl.iter()).multi_cartesian_product() {
        let mut deg = 0u64;
        for i in 1..m {
            deg += i as u64 * energy(tuple[i], tuple[i - 1]) as u64;
        }
        debug_assert_eq!(energy(&next_ground, tuple[m - 1]), l);
        let mut content = vec![0i32; n];
        for s in &tuple {
            for (a, c) in s.weight().iter().enumerate() {
                content[a] += *c as i32;
            }
        }
        graded
            .entry(deg)
            .or_insert_with(|| MonomialExpansion::zero(n))
            .add_term(content, BigInt::one());
    }

    // offset route: sum_d q^{c(d)} t_{Sh_d((l^m))}
    let mu: Vec<u32> = vec![l; m];
    let d_list: Vec<Vec<u32>> = if m == 1 {
        vec![Vec::new()]
    } else {
        (0..m - 1).map(|_| 0..=l).multi_cartesian_product().collect()
    };
    let mut graded_b: BTreeMap<u64, MonomialExpansion> = BTreeMap::new();
    let mut shapes: Vec<(u64, SkewShape)> = Vec::new();
    for d in &d_list {
        let c: u64 = d
            .iter()
            .enumerate()
            .map(|(i, &di)| (m - 1 - i) as u64 * di as u64)
            .sum();
        let shape = shape_sh(d, &mu, &Partition::empty())?;
        let t = t_character(&shape, n, false)?;
        graded_b
            .entry(c)
            .or_insert_with(|| MonomialExpansion::zero(n))
            .add_scaled(&t, &BigInt::one());
        shapes.push((c, shape));
    }
    assert_eq!(
        graded, graded_b,
        "free tuples and offset-graded nonmovable characters must agree"
    );

    // Schur routes: lattice nonmovable counts per offset shape, and
    // Kostka-Foulkes polynomials directly
    let size = l as usize * m;
    let lambdas = partitions_of(size, n, size as u32);
    let mut by_lr0 = SchurExpansion::new(n);
    for (c, shape) in &shapes {
        for lambda in &lambdas {
            let cnt = lr0_count(shape, lambda, "enumerate")?;
            if cnt > 0 {
                by_lr0.add_term(lambda.clone(), &QPolynomial::monomial(*c, BigInt::from(cnt)));
            }
        }
    }
    let expansion = schur_expansion_from_graded(n, &graded)?;
    assert_eq!(
        nonzero_terms(&expansion),
        nonzero_terms(&by_lr0),
        "offset shapes must resolve into lattice nonmovable counts"
    );
    let mu_comp = Composition::new(mu);
    let mut by_kf = SchurExpansion::new(n);
    for lambda in &lambdas {
        let kf = kostka_foulkes(lambda, &mu_comp, "charge")?;
        if !kf.terms().is_empty() {
            by_kf.add_term(lambda.clone(), &kf);
        }
    }
    assert_eq!(
        nonzero_terms(&expansion),
        nonzero_terms(&by_kf),
        "Schur coefficients of the truncated character must be Kostka-Foulkes polynomials"
    );
    Ok(expansion)
}

/// The inner shape at truncation length m: nu_j = k_{m+j} + ... + k_{m+n-1}
/// for j = 1..n-1.
pub fn nu_km(kk: &WeightK, m: usize) -> Partition {
    let n = kk.rank();
    let parts: Vec<u32> = (1..n).map(|j| (j..n).map(|t| kk.k(m + t)).sum()).collect();
    Partition::new(parts).expect("tail sums decrease weakly")
}

/// Truncated character of a general path space at length `m`: the free data
/// are tuples `(s_1, ..., s_{m+n-1})` whose tail satisfies the ground
/// constraints `H(s_{i+1}, s_i) = k_i` for `i = m+1 .. m+n-1` (with
/// `s_{m+n}` the ground element), graded by `sum_{i<=m} i h_i` and weighted
/// by the total content minus the twist `w_j = k_m + ... + k_{m+j-2}` in
/// variable j. Expanded in Schur functions, the coefficient of `s_lambda` is
/// the skew tableau polynomial `G_{lambda/nu, (l^m)}(q)`, which is asserted.
pub fn truncated_character_general(
    kk: &WeightK,
    m: usize,
) -> Result<SchurExpansion, SpectralError> {
    if m == 0 {
        return Err(SpectralError::Invalid("truncation length must be positive".into()));
    }
    let n = kk.rank();
    let l = kk.level();
    let bl = enumerate_bl(l as usize, n as u8);
    let top = ground_element(kk, m + n);

    // admissible tails (s_{m+n-1}, ..., s_{m+1}), built downward from the top
    let mut tails: Vec<Vec<&CrystalElement>> = vec![Vec::new()];
    for i in (m + 1..m + n).rev() {
        let mut grown = Vec::new();
        for tail in &tails {
            let upper = tail.last().copied().unwrap_or(&top);
            for cand in &bl {
                if energy(upper, cand) == kk.k(i) {
                    let mut t2 = tail.clone();
                    t2.push(cand);
                    grown.push(t2);
                }
            }
        }
        tails = grown;
    }

    let b_const: u64 = (1..=m).map(|i| i as u64 * kk.k(i) as u64).sum();
    let w: Vec<i64> = (0..n).map(|j| (0..j).map(|t| kk.k(m + t) as i64).sum()).collect();
    let mut graded: BTreeMap<u64, MonomialExpansion> = BTreeMap::new();
    for prefix in (0..m).map(|_| bl.iter()).multi_cartesian_product() {
        for tail in &tails {
            let site = |i: usize| -> &CrystalElement {
                if i <= m {
                    prefix[i - 1]
                } else if i < m + n {
                    tail[m + n - 1 - i]
                } else {
                    &top
                }
            };
            let mut deg = 0u64;
            for i in 1..=m {
                deg += i as u64 * energy(site(i + 1), site(i)) as u64;
            }
            assert!(deg >= b_const, "truncated paths sit at or above the ground degree");
            let mut content = vec![0i64; n];
            for i in 1..m + n {
                for (a, c) in site(i).weight().iter().enumerate() {
                    content[a] += *c as i64;
                }
            }
            let expo: Vec<i32> = content
                .iter()
                .zip(&w)
                .map(|(&c, &wj)| {
                    let e = c - wj;
                    assert!(e >= 0, "the twist keeps all exponents nonnegative");
                    e as i32
                })
                .collect();
            graded
                .entry(deg)
                .or_insert_with(|| MonomialExpansion::zero(n))
                .add_term(expo, BigInt::one());
        }
    }

    let nu = nu_km(kk, m);
    let total = l as usize * m + nu.size();
    let mu_comp = Composition::new(vec![l; m]);
    let mut by_g = SchurExpansion::new(n);
    for lambda in partitions_of(total, n, total as u32) {
        if !lambda.contains(&nu) {
            continue;
        }
        let g = g_polynomial(&SkewShape::new(lambda.clone(), &nu)?, &mu_comp)?;
        if !g.terms().is_empty() {
            by_g.add_term(lambda, &g);
        }
    }
    let expansion = schur_expansion_from_graded(n, &graded)?;
    assert_eq!(
        nonzero_terms(&expansion),
        nonzero_terms(&by_g),
        "Schur coefficients of the general truncated character must be skew tableau polynomials"
    );
    Ok(expansion)
}

/// The cyclic datum of `l` times the `k`-th fundamental weight: k_i = l when
/// i ≡ k (mod n), and 0 otherwise.
pub fn rectangular_cycle(k: usize, l: u32, n: usize) -> Result<WeightK, SpectralError> {
    if n < 2 {
        return Err(SpectralError::Invalid(format!("rank {n} must be at least 2")));
    }
    let mut cycle = vec![0u32; n];
    let idx = if k % n == 0 { n - 1 } else { k % n - 1 };
    cycle[idx] = l;
    Ok(WeightK::new(cycle)?)
}

/// Pad `lambda` with equal columns to a partition of `total` on `n` rows.
fn pad_to(lambda: &Partition, total: usize, n: usize) -> Result<Partition, SpectralError> {
    let err = || SpectralError::PaddingNotIntegral {
        lambda: lambda.parts().to_vec(),
        total,
        n,
    };
    if lambda.len() > n || lambda.size() > total || (total - lambda.size()) % n != 0 {
        return Err(err());
    }
    let c = ((total - lambda.size()) / n) as u32;
    let parts: Vec<u32> = (0..n)
        .map(|i| lambda.parts().get(i).copied().unwrap_or(0) + c)
        .collect();
    Ok(Partition::new(parts)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchingVariant {
    Rectangular,
    General,
}

impl FromStr for BranchingVariant {
    type Err = SpectralError;
    fn from_str(s: &str) -> Result<Self, SpectralError> {
        match s {
            "rectangular" => Ok(BranchingVariant::Rectangular),
            "general" => Ok(BranchingVariant::General),
            other => Err(SpectralError::Invalid(format!(
                "unknown branching variant {other:?}; expected rectangular or general"
            ))),
        }
    }
}

fn rebase(p: QPolynomial, base: u64) -> Result<QPolynomial, SpectralError> {
    let mut out = QPolynomial::zero();
    for (&d, c) in p.terms() {
        if d < base {
            return Err(SpectralError::Invalid(format!(
                "degree {d} lies below the ground normalization {base}"
            )));
        }
        out.add_term(d - base, c.clone());
    }
    Ok(out)
}

/// The `steps`-th approximant of the branching function of `lambda` in the
/// path space of `kk`, normalized so the ground contribution sits in degree
/// zero. Rectangular variant: `kk` must be `l` times the `k`-th fundamental
/// weight, the truncation is `m = k + steps * n`, and the approximant is
/// `q^{-A} K_{lambda + column padding, (l^m)}(q)` with
/// `A = sum_{i<m} i k_i`. General variant: the truncation is `m = steps` and
/// the approximant is `q^{-B} G_{padded lambda / nu, (l^m)}(q)` with
/// `B = sum_{i<=m} i k_i`. Successive approximants agree degree by degree on
/// an initial segment that grows with `steps`.
pub fn branching_approximant(
    lambda: &Partition,
    kk: &WeightK,
    steps: usize,
    variant: BranchingVariant,
) -> Result<QPolynomial, SpectralError> {
    let n = kk.rank();
    let l = kk.level();
    match variant {
        BranchingVariant::Rectangular => {
            let cycle = kk.cycle();
            let nonzero: Vec<usize> = (0..n).filter(|&i| cycle[i] != 0).collect();
            if nonzero.len() != 1 {
                return Err(SpectralError::NotRectangular(cycle.to_vec()));
            }
            let k_res = nonzero[0] + 1;
            let m = k_res + steps * n;
            let padded = pad_to(lambda, l as usize * m, n)?;
            let kf = kostka_foulkes(&padded, &Composition::new(vec![l; m]), "charge")?;
            let a: u64 = (1..m).map(|i| i as u64 * kk.k(i) as u64).sum();
            rebase(kf, a)
        }
        BranchingVariant::General => {
            if steps == 0 {
                return Err(SpectralError::Invalid("the general variant needs steps >= 1".into()));
            }
            let m = steps;
            let nu = nu_km(kk, m);
            let padded = pad_to(lambda, l as usize * m + nu.size(), n)?;
            if !padded.contains(&nu) {
                return Ok(QPolynomial::zero());
            }
            let g = g_polynomial(&SkewShape::new(padded, &nu)?, &Composition::new(vec![l; m]))?;
            let b: u64 = (1..=m).map(|i| i as u64 * kk.k(i) as u64).sum();
            rebase(g, b)
        }
    }
}

/// Row reading of a straight semistandard tableau with rectangular content
/// (l^m): the i-th output element of B_l lists, weakly increasing, the rows
/// of the tableau containing the letter i (with multiplicity).
pub fn pi(t: &Tableau, rank: u8) -> Result<Vec<CrystalElement>, SpectralError> {
    if !t.shape().inner_partition().is_empty() {
        return Err(SpectralError::Invalid("row reading needs a straight shape".into()));
    }
    if !is_semistandard(t) {
        return Err(SpectralError::Invalid("row reading needs a semistandard tableau".into()));
    }
    let content = t.content();
    let m = content.len();
    if m == 0 {
        return Err(SpectralError::EmptyTuple);
    }
    let l = content[0];
    if content.iter().any(|&c| c != l) {
        return Err(SpectralError::Invalid(format!(
            "content {content:?} is not rectangular"
        )));
    }
    let mut rows_of: Vec<Vec<u8>> = vec![Vec::new(); m];
    for (r, row) in t.rows().iter().enumerate() {
        for &a in row {
            rows_of[a as usize - 1].push((r + 1) as u8);
        }
    }
    rows_of
        .into_iter()
        .map(|v| Ok(CrystalElement::new(v, rank)?))
        .collect()
}

/// Inverse of the row reading on a free tuple: the offsets are
/// d_i = H(s_i, s_{i+1}), the rows of the output are the words of the s_i
/// from the top down, and the filled staircase Sh_d((l^m)) is always
/// semistandard and nonmovable (and is the unique such choice of offsets).
pub fn phi(s: &[CrystalElement]) -> Result<(Vec<u32>, Tableau), SpectralError> {
    if s.is_empty() {
        return Err(SpectralError::EmptyTuple);
    }
    let l = s[0].entries().len();
    for x in s {
        if x.entries().len() != l {
            return Err(SpectralError::LevelMismatch(x.entries().len(), l as u32));
        }
        if x.rank() != s[0].rank() {
            return Err(SpectralError::RankMismatch(x.rank(), s[0].rank() as usize));
        }
    }
    let m = s.len();
    let d: Vec<u32> = (0..m - 1).map(|i| energy(&s[i], &s[i + 1])).collect();
    let shape = shape_sh(&d, &vec![l as u32; m], &Partition::empty())?;
    let rows: Vec<Vec<u8>> = s.iter().map(|x| x.entries().to_vec()).collect();
    let t = Tableau::new(shape, rows)?;
    assert!(
        is_semistandard(&t) && is_nonmovable(&t),
        "the offset-filled staircase must be nonmovable"
    );
    Ok((d, t))
}
