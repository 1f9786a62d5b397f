//! Exact symmetric-function arithmetic on top of the tableau layer: sparse
//! polynomials in q, expansions in the monomial and Schur bases with an
//! optional reduction modulo x1*...*xn = 1, Kostka numbers, Littlewood-
//! Richardson coefficients, counts of nonmovable LR tableaux by two
//! independent strategies, Kostka-Foulkes polynomials by three independent
//! strategies, and evaluation of Hall-Littlewood polynomials.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use spectab_charge::{charge_of_d, charge_tableau, ChargeVariant};
use spectab_shapes::{shape_sh, Composition, Partition, SkewShape};
use spectab_tableaux::{
    descents_exponents, enumerate_tableaux, is_lattice_word, reading_word, TableauKind,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymfuncError {
    #[error("shape has {shape} cells but the content sums to {content}")]
    SizeMismatch { shape: usize, content: usize },
    #[error("unknown method `{0}`")]
    UnknownMethod(String),
    #[error("content {0:?} is not weakly decreasing")]
    NotDominant(Vec<u32>),
    #[error("content {0:?} is not rectangular")]
    NotRectangular(Vec<u32>),
    #[error("partition needs {need} variables but only {got} are given")]
    TooFewVariables { need: usize, got: usize },
    #[error("evaluation point has repeated coordinates")]
    RepeatedVariable,
    #[error("normalization denominator vanishes at q = {0}")]
    NormalizationVanishes(String),
    #[error("expansion is not symmetric at pivot exponent {0:?}")]
    NotSymmetric(Vec<i32>),
    #[error("negative exponent {0:?} in a monomial pivot")]
    NegativeExponent(Vec<i32>),
    #[error("mixed reduced and unreduced expansions")]
    MixedReduction,
}

/// Sparse polynomial in q with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QPolynomial {
    terms: BTreeMap<u64, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::monomial(0, BigInt::one())
    }

    /// The single term coeff * q^degree.
    pub fn monomial(degree: u64, coeff: BigInt) -> Self {
        let mut p = QPolynomial::default();
        p.add_term(degree, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<u64, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, degree: u64) -> BigInt {
        self.terms.get(&degree).cloned().unwrap_or_default()
    }

    /// Largest degree with a nonzero coefficient; None for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, degree: u64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(degree).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&deg, c) in &other.terms {
            out.add_term(deg, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QPolynomial::zero();
        for (&da, ca) in &self.terms {
            for (&db, cb) in &other.terms {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        let mut out = QPolynomial::zero();
        for (&deg, coeff) in &self.terms {
            out.add_term(deg, coeff * c);
        }
        out
    }

    /// Multiply by q^k.
    pub fn shifted(&self, k: u64) -> Self {
        QPolynomial {
            terms: self.terms.iter().map(|(&d, c)| (d + k, c.clone())).collect(),
        }
    }

    pub fn evaluate(&self, q: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (&deg, coeff) in &self.terms {
            total += BigRational::from_integer(coeff.clone()) * pow_rational(q, deg as u32);
        }
        total
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&deg, coeff)) in self.terms.iter().enumerate() {
            if coeff.is_negative() {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let mag = coeff.abs();
            match deg {
                0 => write!(f, "{mag}")?,
                1 => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "q")?;
                }
                d => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "q^{d}")?;
                }
            }
        }
        Ok(())
    }
}

fn pow_rational(x: &BigRational, k: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..k {
        out *= x.clone();
    }
    out
}

/// Integer combination of monomials x^v in n variables. When `reduced`, every
/// exponent vector is the canonical representative modulo x1*...*xn = 1, i.e.
/// the vector shifted so that its minimum entry is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialExpansion {
    n: usize,
    reduced: bool,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl MonomialExpansion {
    pub fn zero(n: usize) -> Self {
        MonomialExpansion {
            n,
            reduced: false,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        let mut out = MonomialExpansion::zero(n);
        out.add_term(vec![0; n], c);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reduced(&self) -> bool {
        self.reduced
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn canonical(mut expo: Vec<i32>) -> Vec<i32> {
        if let Some(&min) = expo.iter().min() {
            if min != 0 {
                for e in &mut expo {
                    *e -= min;
                }
            }
        }
        expo
    }

    pub fn add_term(&mut self, expo: Vec<i32>, coeff: BigInt) {
        assert_eq!(expo.len(), self.n, "exponent vector length must equal n");
        if coeff.is_zero() {
            return;
        }
        let key = if self.reduced {
            Self::canonical(expo)
        } else {
            expo
        };
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, expo: &[i32]) -> BigInt {
        let key = if self.reduced {
            Self::canonical(expo.to_vec())
        } else {
            expo.to_vec()
        };
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// self += c * other. Both sides must agree on n and on the reduced flag.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        assert_eq!(self.n, other.n);
        assert_eq!(self.reduced, other.reduced);
        for (expo, coeff) in &other.terms {
            self.add_term(expo.clone(), coeff * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one());
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        assert_eq!(self.reduced, other.reduced);
        let mut out = MonomialExpansion {
            n: self.n,
            reduced: self.reduced,
            terms: BTreeMap::new(),
        };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let expo: Vec<i32> = a.iter().zip(b).map(|(u, v)| u + v).collect();
                out.add_term(expo, ca * cb);
            }
        }
        out
    }

    /// Canonicalize every exponent vector modulo the all-ones shift.
    pub fn reduce(&self) -> Self {
        let mut out = MonomialExpansion {
            n: self.n,
            reduced: true,
            terms: BTreeMap::new(),
        };
        for (expo, coeff) in &self.terms {
            out.add_term(expo.clone(), coeff.clone());
        }
        out
    }

    /// Evaluate at a point. Coordinates must be nonzero wherever a negative
    /// exponent occurs.
    pub fn evaluate(&self, x: &[BigRational]) -> BigRational {
        assert_eq!(x.len(), self.n, "need one coordinate per variable");
        let mut total = BigRational::zero();
        for (expo, coeff) in &self.terms {
            let mut term = BigRational::from_integer(coeff.clone());
            for (xi, &e) in x.iter().zip(expo) {
                let p = pow_rational(xi, e.unsigned_abs());
                if e >= 0 {
                    term *= p;
                } else {
                    term /= p;
                }
            }
            total += term;
        }
        total
    }
}

impl fmt::Display for MonomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (expo, coeff)) in self.terms.iter().enumerate() {
            if coeff.is_negative() {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let mag = coeff.abs();
            if expo.iter().all(|&e| e == 0) {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "x^({})", expo.iter().join(","))?;
            }
        }
        Ok(())
    }
}

/// Combination of Schur functions with QPolynomial coefficients. When
/// `reduced`, every key has had its full columns stripped (the canonical
/// representative modulo x1*...*xn = 1 in the Schur basis), so keys have
/// fewer than n parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    n: usize,
    reduced: bool,
    terms: BTreeMap<Partition, QPolynomial>,
}

impl SchurExpansion {
    pub fn new(n: usize) -> Self {
        SchurExpansion {
            n,
            reduced: false,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reduced(&self) -> bool {
        self.reduced
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QPolynomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, poly: &QPolynomial) {
        assert!(
            lambda.len() <= self.n,
            "partition has more parts than variables"
        );
        if self.reduced {
            assert!(
                lambda.is_empty() || lambda.len() < self.n,
                "reduced keys must have no full column"
            );
        }
        if poly.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot = slot.add(poly);
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Strip full columns from every key: lambda -> lambda - (lambda_n^n).
    pub fn reduce(&self) -> Self {
        let mut out = SchurExpansion {
            n: self.n,
            reduced: true,
            terms: BTreeMap::new(),
        };
        for (lambda, poly) in &self.terms {
            let padded = lambda.padded(self.n);
            let last = *padded.last().unwrap_or(&0);
            let stripped = Partition::new(padded.iter().map(|&p| p - last).collect())
                .expect("stripping full columns preserves weak decrease");
            out.add_term(stripped, poly);
        }
        out
    }

    /// Expand every Schur function into monomials, grouping by q-degree.
    pub fn expand_monomials(&self) -> BTreeMap<u64, MonomialExpansion> {
        let mut out: BTreeMap<u64, MonomialExpansion> = BTreeMap::new();
        for (lambda, poly) in &self.terms {
            let mut mono = schur(&SkewShape::straight(lambda.clone()), self.n);
            if self.reduced {
                mono = mono.reduce();
            }
            for (&deg, coeff) in poly.terms() {
                out.entry(deg)
                    .or_insert_with(|| {
                        if self.reduced {
                            MonomialExpansion::zero(self.n).reduce()
                        } else {
                            MonomialExpansion::zero(self.n)
                        }
                    })
                    .add_scaled(&mono, coeff);
            }
        }
        out.retain(|_, m| !m.is_zero());
        out
    }
}

/// Write a symmetric monomial expansion in the Schur basis by repeatedly
/// subtracting the Schur function of the lexicographically greatest exponent
/// vector. Works on reduced expansions too, where the result is expressed in
/// the Schur functions of column-stripped partitions.
pub fn monomials_to_schur(
    me: &MonomialExpansion,
) -> Result<BTreeMap<Partition, BigInt>, SymfuncError> {
    let mut rem = me.clone();
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    while let Some((expo, coeff)) = rem
        .terms()
        .iter()
        .next_back()
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        if expo.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymfuncError::NotSymmetric(expo));
        }
        if expo.last().is_some_and(|&e| e < 0) {
            return Err(SymfuncError::NegativeExponent(expo));
        }
        let lambda = Partition::new(expo.iter().map(|&e| e as u32).collect())
            .expect("a weakly decreasing nonnegative vector is a partition");
        let mut s = schur(&SkewShape::straight(lambda.clone()), rem.n());
        if me.reduced() {
            s = s.reduce();
        }
        rem.add_scaled(&s, &(-coeff.clone()));
        let slot = out.entry(lambda.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            out.remove(&lambda);
        }
    }
    Ok(out)
}

/// Assemble a SchurExpansion from monomial expansions grouped by q-degree.
pub fn schur_expansion_from_graded(
    n: usize,
    graded: &BTreeMap<u64, MonomialExpansion>,
) -> Result<SchurExpansion, SymfuncError> {
    let mut reduced = None;
    for me in graded.values() {
        if me.n() != n {
            return Err(SymfuncError::TooFewVariables { need: me.n(), got: n });
        }
        match reduced {
            None => reduced = Some(me.reduced()),
            Some(r) if r != me.reduced() => return Err(SymfuncError::MixedReduction),
            _ => {}
        }
    }
    let mut out = SchurExpansion::new(n);
    out.reduced = reduced.unwrap_or(false);
    for (&deg, me) in graded {
        for (lambda, coeff) in monomials_to_schur(me)? {
            out.add_term(lambda, &QPolynomial::monomial(deg, coeff));
        }
    }
    Ok(out)
}

/// Skew Schur function as a sum of content monomials over all semistandard
/// tableaux of the shape with entries at most n.
pub fn schur(shape: &SkewShape, n: usize) -> MonomialExpansion {
    let mut out = MonomialExpansion::zero(n);
    for t in enumerate_tableaux(shape, None, TableauKind::Semistandard, n as u8) {
        let content = t
            .content_padded(n)
            .expect("entries are bounded by the alphabet");
        out.add_term(content.iter().map(|&c| c as i32).collect(), BigInt::one());
    }
    out
}

fn complete_homogeneous(k: u32, n: usize) -> MonomialExpansion {
    let mut out = MonomialExpansion::zero(n);
    if n == 0 {
        if k == 0 {
            out.add_term(Vec::new(), BigInt::one());
        }
        return out;
    }
    for combo in (0..n).combinations_with_replacement(k as usize) {
        let mut expo = vec![0i32; n];
        for i in combo {
            expo[i] += 1;
        }
        out.add_term(expo, BigInt::one());
    }
    out
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Independent route to the skew Schur function: the determinant
/// det(h_{outer_i - inner_j - i + j}) expanded by the Leibniz rule, with
/// h_0 = 1 and h_k = 0 for k < 0.
pub fn schur_jacobi_trudi(shape: &SkewShape, n: usize) -> MonomialExpansion {
    let r = shape.rows();
    if r == 0 {
        return MonomialExpansion::constant(n, BigInt::one());
    }
    let outer = shape.outer().padded(r);
    let inner = shape.inner().to_vec();
    let mut cache: BTreeMap<u32, MonomialExpansion> = BTreeMap::new();
    let mut out = MonomialExpansion::zero(n);
    for perm in (0..r).permutations(r) {
        let mut degrees = Vec::with_capacity(r);
        let mut ok = true;
        for (i, &j) in perm.iter().enumerate() {
            let deg = outer[i] as i64 - inner[j] as i64 - i as i64 + j as i64;
            if deg < 0 {
                ok = false;
                break;
            }
            degrees.push(deg as u32);
        }
        if !ok {
            continue;
        }
        let mut prod = MonomialExpansion::constant(n, BigInt::one());
        for &deg in degrees.iter().filter(|&&d| d > 0) {
            let h = cache
                .entry(deg)
                .or_insert_with(|| complete_homogeneous(deg, n))
                .clone();
            prod = prod.mul(&h);
        }
        out.add_scaled(&prod, &BigInt::from(permutation_sign(&perm)));
    }
    out
}

/// Number of semistandard tableaux of the given shape and content.
pub fn kostka_number(shape: &SkewShape, mu: &Composition) -> Result<u64, SymfuncError> {
    let total: usize = mu.parts().iter().map(|&p| p as usize).sum();
    if total != shape.size() {
        return Err(SymfuncError::SizeMismatch {
            shape: shape.size(),
            content: total,
        });
    }
    Ok(
        enumerate_tableaux(shape, Some(mu.parts()), TableauKind::Semistandard, mu.len() as u8)
            .len() as u64,
    )
}

fn column_strict_lattice_count(shape: &SkewShape, content: &Partition) -> u64 {
    if shape.size() != content.size() {
        return 0;
    }
    enumerate_tableaux(
        shape,
        Some(content.parts()),
        TableauKind::Semistandard,
        content.len() as u8,
    )
    .iter()
    .filter(|t| is_lattice_word(&reading_word(t)))
    .count() as u64
}

/// Littlewood-Richardson coefficient c_{lambda,mu}^nu: the number of
/// semistandard tableaux of shape nu/lambda and content mu whose reading
/// word is a lattice word. Returns 0 when nu/lambda is not a skew diagram.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    match SkewShape::new(nu.clone(), lambda) {
        Ok(shape) => column_strict_lattice_count(&shape, mu),
        Err(_) => 0,
    }
}

/// Strategy for counting nonmovable LR tableaux of a given shape and content.
pub trait Lr0Method {
    fn name(&self) -> &'static str;
    fn count(&self, shape: &SkewShape, lambda: &Partition) -> u64;
}

/// Direct enumeration of nonmovable LR tableaux.
pub struct EnumerateLr0;

impl Lr0Method for EnumerateLr0 {
    fn name(&self) -> &'static str {
        "enumerate"
    }

    fn count(&self, shape: &SkewShape, lambda: &Partition) -> u64 {
        enumerate_tableaux(
            shape,
            Some(lambda.parts()),
            TableauKind::NonmovableLr,
            lambda.len() as u8,
        )
        .len() as u64
    }
}

/// Signed sum over nested prefix displacements. A subset S of row indices
/// selects, for each j in S, a shift of rows 1..=j one box left; row i is
/// therefore displaced by k_i = #{j in S : j >= i}, a weakly decreasing
/// vector with unit steps. The column-strict LR count of each displaced
/// diagram enters with sign (-1)^|S|, and summands whose displaced boundary
/// is no longer a pair of nested partitions contribute 0.
///
/// The displacement events make this a genuine inclusion-exclusion: moving a
/// single row j left keeps the seam above it semistandard automatically (row
/// weakness plus column strictness), so single-row movability coincides with
/// prefix movability, and an intersection of prefix events is exactly the set
/// of fillings that stay column strict on the cumulatively displaced diagram.
pub struct InclusionExclusionLr0;

impl Lr0Method for InclusionExclusionLr0 {
    fn name(&self) -> &'static str {
        "inclusion-exclusion"
    }

    fn count(&self, shape: &SkewShape, lambda: &Partition) -> u64 {
        let rows = shape.rows();
        assert!(rows < 63, "row count out of range for subset masks");
        let alpha = shape.outer().padded(rows);
        let beta = shape.inner().to_vec();
        let mut total: i64 = 0;
        'subsets: for mask in 0u64..(1u64 << rows) {
            let mut a = Vec::with_capacity(rows);
            let mut b = Vec::with_capacity(rows);
            for i in 0..rows {
                let k = (mask >> i).count_ones();
                if beta[i] < k {
                    continue 'subsets;
                }
                a.push(alpha[i] - k);
                b.push(beta[i] - k);
            }
            let Ok(ap) = Partition::new(a) else { continue };
            let Ok(bp) = Partition::new(b) else { continue };
            let Ok(displaced) = SkewShape::new(ap, &bp) else {
                continue;
            };
            let c = column_strict_lattice_count(&displaced, lambda) as i64;
            if mask.count_ones() % 2 == 0 {
                total += c;
            } else {
                total -= c;
            }
        }
        assert!(total >= 0, "signed displacement sum must be nonnegative");
        total as u64
    }
}

/// Look up a nonmovable-count strategy by name.
pub fn lr0_method(name: &str) -> Result<Box<dyn Lr0Method>, SymfuncError> {
    match name {
        "enumerate" => Ok(Box::new(EnumerateLr0)),
        "inclusion-exclusion" => Ok(Box::new(InclusionExclusionLr0)),
        other => Err(SymfuncError::UnknownMethod(other.into())),
    }
}

/// All registered nonmovable-count strategies.
pub fn lr0_methods() -> Vec<Box<dyn Lr0Method>> {
    vec![Box::new(EnumerateLr0), Box::new(InclusionExclusionLr0)]
}

pub fn lr0_count(
    shape: &SkewShape,
    lambda: &Partition,
    method: &str,
) -> Result<u64, SymfuncError> {
    Ok(lr0_method(method)?.count(shape, lambda))
}

/// Strategy for the Kostka-Foulkes polynomial K_{lambda,mu}(q).
pub trait KostkaFoulkesMethod {
    fn name(&self) -> &'static str;
    fn polynomial(
        &self,
        lambda: &Partition,
        mu: &Composition,
    ) -> Result<QPolynomial, SymfuncError>;
}

/// K_{lambda,mu}(q) = sum of q^charge(T) over semistandard tableaux of shape
/// lambda and content mu. Requires weakly decreasing mu.
pub struct ChargeKostkaFoulkes;

impl KostkaFoulkesMethod for ChargeKostkaFoulkes {
    fn name(&self) -> &'static str {
        "charge"
    }

    fn polynomial(
        &self,
        lambda: &Partition,
        mu: &Composition,
    ) -> Result<QPolynomial, SymfuncError> {
        let parts = mu.parts();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymfuncError::NotDominant(parts.to_vec()));
        }
        let shape = SkewShape::straight(lambda.clone());
        let mut out = QPolynomial::zero();
        for t in enumerate_tableaux(&shape, Some(parts), TableauKind::Semistandard, parts.len() as u8)
        {
            let c = charge_tableau(&t)
                .expect("enumerated tableaux are semistandard with dominant content");
            out.add_term(c, BigInt::one());
        }
        Ok(out)
    }
}

/// Shared core of the spectral strategies: sum q^{weight(d)} |LR0(Sh_d(mu),
/// lambda)| over all offset vectors of the staircase family of the
/// rectangular content mu = (l^m).
fn spectral_sum(
    lambda: &Partition,
    mu: &Composition,
    variant: ChargeVariant,
) -> Result<QPolynomial, SymfuncError> {
    let parts = mu.parts();
    if parts.is_empty() {
        return Ok(if lambda.is_empty() {
            QPolynomial::one()
        } else {
            QPolynomial::zero()
        });
    }
    let l = parts[0];
    if l == 0 || parts.iter().any(|&p| p != l) {
        return Err(SymfuncError::NotRectangular(parts.to_vec()));
    }
    let m = parts.len();
    let offsets: Vec<Vec<u32>> = if m == 1 {
        vec![Vec::new()]
    } else {
        (0..m - 1)
            .map(|_| (0..=l).collect::<Vec<u32>>())
            .multi_cartesian_product()
            .collect()
    };
    let mut out = QPolynomial::zero();
    for d in offsets {
        let shape = shape_sh(&d, parts, &Partition::empty())
            .expect("offsets within the content box give a valid staircase");
        let count = EnumerateLr0.count(&shape, lambda);
        if count != 0 {
            let exponent = charge_of_d(&Composition::new(d), m, variant)
                .expect("offset vector has one entry per descent slot");
            out.add_term(exponent, BigInt::from(count));
        }
    }
    Ok(out)
}

/// Spectral strategy with exponent c(d) = sum_i (m-i) d_i.
pub struct SpectralCKostkaFoulkes;

impl KostkaFoulkesMethod for SpectralCKostkaFoulkes {
    fn name(&self) -> &'static str {
        "spectral-c"
    }

    fn polynomial(
        &self,
        lambda: &Partition,
        mu: &Composition,
    ) -> Result<QPolynomial, SymfuncError> {
        spectral_sum(lambda, mu, ChargeVariant::C)
    }
}

/// Spectral strategy with exponent ind(d) = sum_i i d_i.
pub struct SpectralIndKostkaFoulkes;

impl KostkaFoulkesMethod for SpectralIndKostkaFoulkes {
    fn name(&self) -> &'static str {
        "spectral-ind"
    }

    fn polynomial(
        &self,
        lambda: &Partition,
        mu: &Composition,
    ) -> Result<QPolynomial, SymfuncError> {
        spectral_sum(lambda, mu, ChargeVariant::Ind)
    }
}

/// Look up a Kostka-Foulkes strategy by name.
pub fn kostka_foulkes_method(name: &str) -> Result<Box<dyn KostkaFoulkesMethod>, SymfuncError> {
    match name {
        "charge" => Ok(Box::new(ChargeKostkaFoulkes)),
        "spectral-c" => Ok(Box::new(SpectralCKostkaFoulkes)),
        "spectral-ind" => Ok(Box::new(SpectralIndKostkaFoulkes)),
        other => Err(SymfuncError::UnknownMethod(other.into())),
    }
}

/// All registered Kostka-Foulkes strategies.
pub fn kostka_foulkes_methods() -> Vec<Box<dyn KostkaFoulkesMethod>> {
    vec![
        Box::new(ChargeKostkaFoulkes),
        Box::new(SpectralCKostkaFoulkes),
        Box::new(SpectralIndKostkaFoulkes),
    ]
}

pub fn kostka_foulkes(
    lambda: &Partition,
    mu: &Composition,
    method: &str,
) -> Result<QPolynomial, SymfuncError> {
    kostka_foulkes_method(method)?.polynomial(lambda, mu)
}

/// Generating polynomial of the extended exponents over semistandard
/// tableaux of the shape with content mu:
/// G(q) = sum_T q^{sum_{i=0}^{m-1} (m-i) d_i(T)}.
pub fn g_polynomial(shape: &SkewShape, mu: &Composition) -> Result<QPolynomial, SymfuncError> {
    let total: usize = mu.parts().iter().map(|&p| p as usize).sum();
    if total != shape.size() {
        return Err(SymfuncError::SizeMismatch {
            shape: shape.size(),
            content: total,
        });
    }
    let m = mu.len();
    let mut out = QPolynomial::zero();
    for t in enumerate_tableaux(shape, Some(mu.parts()), TableauKind::Semistandard, m as u8) {
        let d = descents_exponents(&t, mu, true)
            .expect("enumerated tableaux have the requested content");
        let exponent: u64 = d
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &di)| (m - i) as u64 * di as u64)
            .sum();
        out.add_term(exponent, BigInt::one());
    }
    Ok(out)
}

fn v_factor(r: u32, q: &BigRational) -> BigRational {
    let mut out = BigRational::one();
    for j in 1..=r {
        let mut sum = BigRational::zero();
        let mut power = BigRational::one();
        for _ in 0..j {
            sum += power.clone();
            power *= q.clone();
        }
        out *= sum;
    }
    out
}

/// Evaluate the Hall-Littlewood polynomial P_mu(x; q) in m = x.len()
/// variables by explicit symmetrization:
///
/// P_mu = c * sum_{w in S_m} w( x^mu prod_{i<j} (x_i - q x_j)/(x_i - x_j) )
///
/// with c = 1 / (v_{m - l(mu)}(q) * prod_{i >= 1} v_{r_i}(q)), where r_i is
/// the multiplicity of the part i in mu and v_r(q) = prod_{j=1}^r
/// (1 + q + ... + q^{j-1}). At q = 0 this is the Schur polynomial; at q = 1
/// it is the monomial symmetric polynomial.
pub fn hall_littlewood_eval(
    mu: &Partition,
    x: &[BigRational],
    q: &BigRational,
) -> Result<BigRational, SymfuncError> {
    let m = x.len();
    if mu.len() > m {
        return Err(SymfuncError::TooFewVariables {
            need: mu.len(),
            got: m,
        });
    }
    for i in 0..m {
        for j in i + 1..m {
            if x[i] == x[j] {
                return Err(SymfuncError::RepeatedVariable);
            }
        }
    }
    let mut denom = v_factor((m - mu.len()) as u32, q);
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        denom *= v_factor((j - i) as u32, q);
        i = j;
    }
    if denom.is_zero() {
        return Err(SymfuncError::NormalizationVanishes(q.to_string()));
    }
    let exponents = mu.padded(m);
    let mut sum = BigRational::zero();
    for perm in (0..m).permutations(m) {
        let mut term = BigRational::one();
        for (slot, &var) in perm.iter().enumerate() {
            term *= pow_rational(&x[var], exponents[slot]);
        }
        for a in 0..m {
            for b in a + 1..m {
                let num = x[perm[a]].clone() - q.clone() * x[perm[b]].clone();
                let den = x[perm[a]].clone() - x[perm[b]].clone();
                term *= num / den;
            }
        }
        sum += term;
    }
    Ok(sum / denom)
}
