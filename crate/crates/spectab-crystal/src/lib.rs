//! The one-row crystal B_l over sl_n, tensor products, and the local
//! energy function H.
//!
//! An element of B_l is a weakly increasing word a_1 <= .. <= a_l over
//! 1..=n. For it, eps_i counts the letters i+1 and phi_i counts the
//! letters i; etilde_i turns the leftmost i+1 into i, ftilde_i the
//! rightmost i into i+1. On a tensor product the operators follow the
//! signature rule: write eps_i(b) minuses then phi_i(b) pluses for each
//! factor left to right, cancel adjacent "+-" pairs, then etilde_i acts on
//! the factor holding the rightmost surviving minus and ftilde_i on the
//! factor holding the leftmost surviving plus.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CrystalError {
    #[error("entries must be weakly increasing with values in 1..={n}")]
    InvalidElement { n: u8 },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u8, u8),
    #[error("tensor product needs at least one factor")]
    EmptyTensor,
    #[error("min-perm energy requires rows of equal length, got {0} and {1}")]
    MinPermLengths(usize, usize),
    #[error("min-perm energy is an oracle for rows of length <= 6, got {0}")]
    MinPermTooLong(usize),
    #[error("unknown energy method {0:?}; expected component, offset, or min-perm")]
    UnknownEnergyMethod(String),
    #[error("cyclic weight needs at least two parts, got {0}")]
    WeightRank(usize),
    #[error("weight level is {got}, expected {want}")]
    LevelMismatch { got: u32, want: u32 },
    #[error("failed to parse crystal element: {0}")]
    Parse(String),
}

/// An element v_{a_1 .. a_l} of the one-row crystal B_l over sl_n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrystalElement {
    entries: Vec<u8>,
    n: u8,
}

impl CrystalElement {
    pub fn new(entries: Vec<u8>, n: u8) -> Result<Self, CrystalError> {
        if n < 2
            || entries.iter().any(|&a| a == 0 || a > n)
            || entries.windows(2).any(|p| p[0] > p[1])
        {
            return Err(CrystalError::InvalidElement { n });
        }
        Ok(CrystalElement { entries, n })
    }

    /// Parse concatenated digits, e.g. "1123" for v_{1123}.
    pub fn parse_with_rank(s: &str, n: u8) -> Result<Self, CrystalError> {
        let entries = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| CrystalError::Parse(format!("bad digit {c:?}")))
            })
            .collect::<Result<Vec<u8>, _>>()?;
        CrystalElement::new(entries, n)
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn rank(&self) -> u8 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Letter multiplicities (w_1, .., w_n).
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.n as usize];
        for &a in &self.entries {
            w[a as usize - 1] += 1;
        }
        w
    }

    /// eps_i = number of letters i+1 (no internal cancellation in a row).
    pub fn eps(&self, i: u8) -> u32 {
        debug_assert!(1 <= i && i < self.n);
        self.entries.iter().filter(|&&a| a == i + 1).count() as u32
    }

    /// phi_i = number of letters i.
    pub fn phi(&self, i: u8) -> u32 {
        debug_assert!(1 <= i && i < self.n);
        self.entries.iter().filter(|&&a| a == i).count() as u32
    }

    /// Turn the leftmost i+1 into i; null when eps_i = 0.
    pub fn etilde(&self, i: u8) -> Option<Self> {
        assert!(1 <= i && i < self.n, "operator index out of range");
        let pos = self.entries.iter().position(|&a| a == i + 1)?;
        let mut entries = self.entries.clone();
        entries[pos] = i;
        Some(CrystalElement { entries, n: self.n })
    }

    /// Turn the rightmost i into i+1; null when phi_i = 0.
    pub fn ftilde(&self, i: u8) -> Option<Self> {
        assert!(1 <= i && i < self.n, "operator index out of range");
        let pos = self.entries.iter().rposition(|&a| a == i)?;
        let mut entries = self.entries.clone();
        entries[pos] = i + 1;
        Some(CrystalElement { entries, n: self.n })
    }

    pub fn is_highest_weight(&self) -> bool {
        (1..self.n).all(|i| self.eps(i) == 0)
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.entries {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// All of B_l: weakly increasing words of length l over 1..=n.
pub fn enumerate_bl(l: usize, n: u8) -> Vec<CrystalElement> {
    (1..=n)
        .combinations_with_replacement(l)
        .map(|entries| CrystalElement { entries, n })
        .collect()
}

/// A tensor product b_1 (x) .. (x) b_m of one-row crystal elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorElement {
    factors: Vec<CrystalElement>,
}

impl TensorElement {
    pub fn new(factors: Vec<CrystalElement>) -> Result<Self, CrystalError> {
        let Some(first) = factors.first() else {
            return Err(CrystalError::EmptyTensor);
        };
        let n = first.rank();
        for f in &factors {
            if f.rank() != n {
                return Err(CrystalError::RankMismatch(n, f.rank()));
            }
        }
        Ok(TensorElement { factors })
    }

    pub fn pair(b1: CrystalElement, b2: CrystalElement) -> Result<Self, CrystalError> {
        TensorElement::new(vec![b1, b2])
    }

    pub fn factors(&self) -> &[CrystalElement] {
        &self.factors
    }

    pub fn rank(&self) -> u8 {
        self.factors[0].rank()
    }

    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.rank() as usize];
        for f in &self.factors {
            for (acc, x) in w.iter_mut().zip(f.weight()) {
                *acc += x;
            }
        }
        w
    }

    /// The factor indices acted on by etilde_i (rightmost surviving minus)
    /// and ftilde_i (leftmost surviving plus) after signature cancellation.
    fn signature_targets(&self, i: u8) -> (Option<usize>, Option<usize>) {
        let mut plus_stack: Vec<usize> = Vec::new();
        let mut last_minus: Option<usize> = None;
        for (j, f) in self.factors.iter().enumerate() {
            for _ in 0..f.eps(i) {
                if plus_stack.pop().is_none() {
                    last_minus = Some(j);
                }
            }
            for _ in 0..f.phi(i) {
                plus_stack.push(j);
            }
        }
        (last_minus, plus_stack.first().copied())
    }

    pub fn etilde(&self, i: u8) -> Option<Self> {
        let (minus, _) = self.signature_targets(i);
        let j = minus?;
        let mut factors = self.factors.clone();
        factors[j] = factors[j].etilde(i).expect("surviving minus has an i+1");
        Some(TensorElement { factors })
    }

    pub fn ftilde(&self, i: u8) -> Option<Self> {
        let (_, plus) = self.signature_targets(i);
        let j = plus?;
        let mut factors = self.factors.clone();
        factors[j] = factors[j].ftilde(i).expect("surviving plus has an i");
        Some(TensorElement { factors })
    }

    pub fn is_highest_weight(&self) -> bool {
        (1..self.rank()).all(|i| self.signature_targets(i).0.is_none())
    }

    /// Raise with etilde operators (round-robin over i) until none applies.
    pub fn raise_to_highest(&self) -> Self {
        let mut x = self.clone();
        'raise: loop {
            for i in 1..x.rank() {
                if let Some(y) = x.etilde(i) {
                    x = y;
                    continue 'raise;
                }
            }
            return x;
        }
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for factor in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{factor}")?;
            first = false;
        }
        Ok(())
    }
}

/// A strategy for computing the local energy H(b_1 (x) b_2).
pub trait EnergyMethod {
    fn name(&self) -> &'static str;
    fn energy(&self, b1: &CrystalElement, b2: &CrystalElement) -> Result<u32, CrystalError>;
}

/// Raise b_1 (x) b_2 to its highest weight element 1^{l_1} (x) 1^a 2^b;
/// the component index is d = min(l_1, l_2) - b.
pub struct ComponentEnergy;

impl EnergyMethod for ComponentEnergy {
    fn name(&self) -> &'static str {
        "component"
    }

    fn energy(&self, b1: &CrystalElement, b2: &CrystalElement) -> Result<u32, CrystalError> {
        let x = TensorElement::pair(b1.clone(), b2.clone())?;
        let top = x.raise_to_highest();
        let [left, right] = top.factors() else {
            unreachable!("pair has two factors");
        };
        assert!(
            left.entries().iter().all(|&a| a == 1),
            "left factor of a highest weight pair is all ones"
        );
        let twos = right.entries().iter().filter(|&&a| a == 2).count();
        assert!(right.entries().iter().all(|&a| a <= 2));
        Ok(b1.len().min(b2.len()) as u32 - twos as u32)
    }
}

/// Place b_1 as the top row of a two-row skew tableau over b_2, with D
/// counted as the top row's left indent when l_1 >= l_2 and as its right
/// overhang when l_1 <= l_2; H is the least D >= 0 making the tableau
/// column-strict (the same D is the unique nonmovable one).
pub struct OffsetEnergy;

impl EnergyMethod for OffsetEnergy {
    fn name(&self) -> &'static str {
        "offset"
    }

    fn energy(&self, b1: &CrystalElement, b2: &CrystalElement) -> Result<u32, CrystalError> {
        if b1.rank() != b2.rank() {
            return Err(CrystalError::RankMismatch(b1.rank(), b2.rank()));
        }
        let (l1, l2) = (b1.len(), b2.len());
        let base = l2.saturating_sub(l1);
        for d in 0..=l1.min(l2) {
            let shift = base + d;
            let lo = shift.max(0);
            let hi = (shift + l1).min(l2);
            if (lo..hi).all(|c| b1.entries()[c - shift] < b2.entries()[c]) {
                return Ok(d as u32);
            }
        }
        unreachable!("D = min(l1, l2) leaves no overlapping column");
    }
}

/// Brute-force assignment oracle for l_1 = l_2 = l <= 6:
/// H = min over permutations of sum_j H_1(b_1[perm(j)], b_2[j]) with
/// H_1(a, b) = 1 if a >= b, else 0.
pub struct MinPermEnergy;

impl EnergyMethod for MinPermEnergy {
    fn name(&self) -> &'static str {
        "min-perm"
    }

    fn energy(&self, b1: &CrystalElement, b2: &CrystalElement) -> Result<u32, CrystalError> {
        if b1.len() != b2.len() {
            return Err(CrystalError::MinPermLengths(b1.len(), b2.len()));
        }
        let l = b1.len();
        if l > 6 {
            return Err(CrystalError::MinPermTooLong(l));
        }
        if l == 0 {
            return Ok(0);
        }
        let best = (0..l)
            .permutations(l)
            .map(|perm| {
                perm.iter()
                    .enumerate()
                    .filter(|&(j, &pj)| b1.entries()[pj] >= b2.entries()[j])
                    .count() as u32
            })
            .min()
            .expect("at least one permutation");
        Ok(best)
    }
}

/// Look up an energy strategy by name.
pub fn energy_method(name: &str) -> Result<Box<dyn EnergyMethod>, CrystalError> {
    match name {
        "component" => Ok(Box::new(ComponentEnergy)),
        "offset" => Ok(Box::new(OffsetEnergy)),
        "min-perm" => Ok(Box::new(MinPermEnergy)),
        other => Err(CrystalError::UnknownEnergyMethod(other.into())),
    }
}

/// All registered energy strategies.
pub fn energy_methods() -> Vec<Box<dyn EnergyMethod>> {
    vec![
        Box::new(ComponentEnergy),
        Box::new(OffsetEnergy),
        Box::new(MinPermEnergy),
    ]
}

/// The default (fastest) strategy, used by the path modules.
pub fn energy(b1: &CrystalElement, b2: &CrystalElement) -> u32 {
    OffsetEnergy
        .energy(b1, b2)
        .expect("offset energy is total on equal ranks")
}

/// A level-l cyclic weight K = (k_1, .., k_n)^infinity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightK {
    cycle: Vec<u32>,
}

impl WeightK {
    pub fn new(cycle: Vec<u32>) -> Result<Self, CrystalError> {
        if cycle.len() < 2 {
            return Err(CrystalError::WeightRank(cycle.len()));
        }
        Ok(WeightK { cycle })
    }

    pub fn cycle(&self) -> &[u32] {
        &self.cycle
    }

    pub fn rank(&self) -> usize {
        self.cycle.len()
    }

    /// The level l = k_1 + .. + k_n.
    pub fn level(&self) -> u32 {
        self.cycle.iter().sum()
    }

    /// k_i with 1-based cyclic index.
    pub fn k(&self, i: usize) -> u32 {
        self.cycle[(i - 1) % self.cycle.len()]
    }
}

impl fmt::Display for WeightK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycle.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The ground element s_i^{(K)} = v_{1..1 2..2 .. n..n} with k_i ones,
/// k_{i+1} twos, .., k_{i+n-1} letters n.
pub fn ground_element(k: &WeightK, i: usize) -> CrystalElement {
    let n = k.rank();
    let mut entries = Vec::with_capacity(k.level() as usize);
    for j in 0..n {
        for _ in 0..k.k(i + j) {
            entries.push((j + 1) as u8);
        }
    }
    CrystalElement::new(entries, n as u8).expect("ground entries are sorted and in range")
}

/// The reference energy of the ground path at site i:
/// H(s_{i+1}^{(K)}, s_i^{(K)}) = k_i.
pub fn ground_energy_row(k: &WeightK, i: usize, l: u32, n: usize) -> Result<u32, CrystalError> {
    if k.level() != l {
        return Err(CrystalError::LevelMismatch {
            got: k.level(),
            want: l,
        });
    }
    if k.rank() != n {
        return Err(CrystalError::RankMismatch(k.rank() as u8, n as u8));
    }
    Ok(k.k(i))
}
