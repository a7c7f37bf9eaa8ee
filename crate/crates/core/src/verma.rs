//! Imaginary Verma modules over the single-copy algebra `H_q`, truncated to
//! generator indices `<= N` and exponents `<= E`, and their `n`-fold products
//! over `G_q`.
//!
//! For a sign function `phi`, the lowering generator at index `i` is `a_{-i}`
//! when `phi(i) = +` and `a_i` when `phi(i) = -`; its partner annihilates the
//! highest vector `v`, and `gamma` acts by `q^level`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::heisenberg::HqTable;
use crate::matrix::{self, Matrix};
use crate::qscalar::Scalar;
use crate::termalg::{normal_order, Central, Flavor, GenId, RelationTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '\u{2212}' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// An eventually periodic `phi: Z_{>0} -> {+, -}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiSignature {
    prefix: Vec<Sign>,
    period: Vec<Sign>,
}

impl PhiSignature {
    pub fn new(prefix: Vec<Sign>, period: Vec<Sign>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidPhi("empty period".into()));
        }
        Ok(PhiSignature { prefix, period })
    }

    pub fn constant(sign: Sign) -> Self {
        PhiSignature { prefix: Vec::new(), period: vec![sign] }
    }

    pub fn prefix(&self) -> &[Sign] {
        &self.prefix
    }

    pub fn period(&self) -> &[Sign] {
        &self.period
    }

    /// `phi(i)` for `i >= 1`.
    pub fn eval(&self, i: usize) -> Sign {
        assert!(i >= 1);
        match self.prefix.get(i - 1) {
            Some(s) => *s,
            None => self.period[(i - 1 - self.prefix.len()) % self.period.len()],
        }
    }

    /// The common value when `phi` is constant on all of `Z_{>0}`.
    pub fn global_sign(&self) -> Option<Sign> {
        let s = self.period[0];
        self.prefix.iter().chain(&self.period).all(|&t| t == s).then_some(s)
    }

    /// Some `k, l <= n` with `phi(k) != phi(l)`.
    pub fn mixed_up_to(&self, n: usize) -> bool {
        n >= 1 && (2..=n).any(|i| self.eval(i) != self.eval(1))
    }

    fn signs_string(signs: &[Sign]) -> String {
        signs.iter().map(|s| s.as_char()).collect()
    }
}

impl fmt::Display for PhiSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let period = Self::signs_string(&self.period);
        if self.prefix.is_empty() {
            f.write_str(&period)
        } else {
            write!(f, "{}:{}", Self::signs_string(&self.prefix), period)
        }
    }
}

/// `"<prefix>:<period>"`, or just `"<period>"`.
impl FromStr for PhiSignature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = |t: &str| -> Result<Vec<Sign>> {
            t.trim()
                .chars()
                .map(|c| Sign::from_char(c).ok_or_else(|| Error::InvalidPhi(format!("bad sign `{c}` in `{s}`"))))
                .collect()
        };
        let (prefix, period) = match s.split_once(':') {
            Some((p, q)) => (signs(p)?, signs(q)?),
            None => (Vec::new(), signs(s)?),
        };
        PhiSignature::new(prefix, period)
    }
}

impl Serialize for PhiSignature {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            prefix: String,
            period: String,
        }
        Repr { prefix: Self::signs_string(&self.prefix), period: Self::signs_string(&self.period) }.serialize(serializer)
    }
}

/// Dimension verdict for a weight space of the untruncated module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimVerdict {
    Finite(u128),
    Infinite,
    Unknown,
}

impl fmt::Display for DimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimVerdict::Finite(v) => write!(f, "FINITE({v})"),
            DimVerdict::Infinite => f.write_str("INFINITE"),
            DimVerdict::Unknown => f.write_str("UNKNOWN_AT_TRUNCATION"),
        }
    }
}

impl Serialize for DimVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDimReport {
    pub n: i64,
    pub dim: u128,
    pub verdict: DimVerdict,
}

/// `p(n)` by Euler's pentagonal recurrence; `p(n) = 0` for `n < 0`.
pub fn partition_count(n: i64) -> u128 {
    if n < 0 {
        return 0;
    }
    partition_table(n as usize)[n as usize]
}

/// `[p(0), ..., p(n)]`.
pub fn partition_table(n: usize) -> Vec<u128> {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        for j in 1.. {
            let j = j as i64;
            let g1 = (j * (3 * j - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1] as i128;
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
        }
        p[m] = acc as u128;
    }
    p
}

/// A vector of the truncated module: exponent vectors `(e_1, ..., e_N)` with coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleVector {
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    pub fn basis(e: Vec<u32>) -> Self {
        let mut out = ModuleVector::zero();
        out.add_term(e, Scalar::one());
        out
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Scalar::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let exps: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                format!("({c}) * v[{}]", exps.join(","))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Normal order for the induced module: lowering generators left of raising
/// ones, so any word ending in a raising generator kills `v`.
struct VermaTable<'a> {
    module: &'a VermaModule,
    hq: HqTable,
}

impl VermaTable<'_> {
    fn key(&self, g: &GenId) -> (bool, i64, i64) {
        (self.module.is_raising(g.degree), g.degree.abs(), g.degree)
    }
}

impl RelationTable for VermaTable<'_> {
    fn compare(&self, a: &GenId, b: &GenId) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    fn commutator(&self, a: &GenId, b: &GenId) -> Central {
        self.hq.commutator(a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub max_index: usize,
    pub max_exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaModule {
    phi: PhiSignature,
    level: i64,
    max_index: usize,
    max_exponent: u32,
}

/// `c_k = [a_k, a_{-k}]` at `gamma = q^level`, i.e. `([2k]_q / k) [k level]_q`.
pub fn pairing_scalar(k: i64, level: i64) -> Scalar {
    HqTable::with_gamma_level(Some(level)).pairing(k).specialize(0)
}

impl VermaModule {
    /// `level = 0` is allowed.
    pub fn build(phi: PhiSignature, level: i64, max_index: usize, max_exponent: u32) -> Result<Self> {
        if max_index == 0 || max_exponent == 0 {
            return Err(Error::InvalidBound("truncation bounds must be >= 1".into()));
        }
        Ok(VermaModule { phi, level, max_index, max_exponent })
    }

    pub fn phi(&self) -> &PhiSignature {
        &self.phi
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn truncation(&self) -> Truncation {
        Truncation { max_index: self.max_index, max_exponent: self.max_exponent }
    }

    /// Degree of the lowering generator at index `i`.
    pub fn lowering_degree(&self, i: usize) -> i64 {
        match self.phi.eval(i) {
            Sign::Plus => -(i as i64),
            Sign::Minus => i as i64,
        }
    }

    pub fn lowering_generator(&self, i: usize) -> GenId {
        GenId::a(self.lowering_degree(i))
    }

    /// `a_j` annihilates `v`.
    pub fn is_raising(&self, j: i64) -> bool {
        assert!(j != 0);
        self.lowering_degree(j.unsigned_abs() as usize) != j
    }

    pub fn degree_of(&self, e: &[u32]) -> i64 {
        e.iter().enumerate().map(|(i, &x)| self.lowering_degree(i + 1) * x as i64).sum()
    }

    fn word_of(&self, e: &[u32]) -> Vec<GenId> {
        let mut w = Vec::new();
        for (i, &x) in e.iter().enumerate() {
            w.extend(std::iter::repeat_n(self.lowering_generator(i + 1), x as usize));
        }
        w
    }

    fn table(&self) -> VermaTable<'_> {
        VermaTable { module: self, hq: HqTable::with_gamma_level(Some(self.level)) }
    }

    /// Truncated basis of the degree-`n` component, lex order on exponent vectors.
    pub fn basis(&self, n: i64) -> Vec<Vec<u32>> {
        // reach[i]: range of degrees reachable from indices i+1..=N
        let mut reach = vec![(0i64, 0i64); self.max_index + 1];
        for i in (0..self.max_index).rev() {
            let span = self.lowering_degree(i + 1) * self.max_exponent as i64;
            let (lo, hi) = reach[i + 1];
            reach[i] = (lo + span.min(0), hi + span.max(0));
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.max_index];
        self.enumerate(0, n, &reach, &mut cur, &mut out);
        out
    }

    fn enumerate(&self, i: usize, remaining: i64, reach: &[(i64, i64)], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let (lo, hi) = reach[i];
        if remaining < lo || remaining > hi {
            return;
        }
        if i == self.max_index {
            out.push(cur.clone());
            return;
        }
        let deg = self.lowering_degree(i + 1);
        for e in 0..=self.max_exponent {
            cur[i] = e;
            self.enumerate(i + 1, remaining - deg * e as i64, reach, cur, out);
        }
        cur[i] = 0;
    }

    /// Truncated dimension of every nonempty degree, from the product
    /// `prod_i (1 + t^{deg_i} + ... + t^{E deg_i})`.
    pub fn dims_table(&self) -> BTreeMap<i64, u128> {
        let mut poly: BTreeMap<i64, u128> = BTreeMap::from([(0, 1)]);
        for i in 1..=self.max_index {
            let deg = self.lowering_degree(i);
            let mut next = BTreeMap::new();
            for (&d, &c) in &poly {
                for e in 0..=self.max_exponent as i64 {
                    *next.entry(d + deg * e).or_insert(0) += c;
                }
            }
            poly = next;
        }
        poly
    }

    /// Verdict for the untruncated degree-`n` component.
    pub fn dim_verdict(&self, n: i64) -> DimVerdict {
        if self.phi.mixed_up_to(self.max_index) {
            return DimVerdict::Infinite;
        }
        match self.phi.global_sign() {
            Some(Sign::Plus) => DimVerdict::Finite(if n <= 0 { partition_count(-n) } else { 0 }),
            Some(Sign::Minus) => DimVerdict::Finite(if n >= 0 { partition_count(n) } else { 0 }),
            None => DimVerdict::Unknown,
        }
    }

    pub fn graded_dim(&self, n: i64) -> GradedDimReport {
        GradedDimReport { n, dim: self.dims_table().get(&n).copied().unwrap_or(0), verdict: self.dim_verdict(n) }
    }

    /// `a_j` applied to the basis vector `e`.
    pub fn act(&self, j: i64, e: &[u32]) -> Result<ModuleVector> {
        let mut word = vec![GenId::a(j)];
        word.extend(self.word_of(e));
        let nf = normal_order(&word, &self.table());
        let mut out = ModuleVector::zero();
        for (m, c) in nf.terms() {
            debug_assert_eq!(m.gamma_half, 0);
            if m.word.last().is_some_and(|g| self.is_raising(g.degree)) {
                continue;
            }
            out.add_term(self.exponents_of(&m.word)?, c.clone());
        }
        Ok(out)
    }

    /// `a_j` applied to a vector.
    pub fn act_vector(&self, j: i64, x: &ModuleVector) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (e, c) in x.terms() {
            out = out.add(&self.act(j, e)?.scale(c));
        }
        Ok(out)
    }

    fn exponents_of(&self, word: &[GenId]) -> Result<Vec<u32>> {
        let mut e = vec![0u32; self.max_index];
        for g in word {
            debug_assert_eq!(g.flavor, Flavor::Heis);
            let i = g.degree.unsigned_abs() as usize;
            if i > self.max_index {
                return Err(Error::TruncationExceeded(format!("index {i} > {}", self.max_index)));
            }
            e[i - 1] += 1;
            if e[i - 1] > self.max_exponent {
                return Err(Error::TruncationExceeded(format!(
                    "exponent of {g} > {}",
                    self.max_exponent
                )));
            }
        }
        Ok(e)
    }

    /// `<u v, w v>` = coefficient of `v` in `sigma(u) w v`, with `sigma(a_i) = a_{-i}`.
    pub fn pairing(&self, u: &[u32], w: &[u32]) -> Result<Scalar> {
        let mut x = ModuleVector::basis(w.to_vec());
        // sigma reverses the word of u, so its last letter acts first
        for (i, &k) in u.iter().enumerate() {
            let raising = -self.lowering_degree(i + 1);
            for _ in 0..k {
                x = self.act_vector(raising, &x)?;
                if x.is_zero() {
                    return Ok(Scalar::zero());
                }
            }
        }
        Ok(x.coefficient(&vec![0; self.max_index]))
    }

    pub fn gram_matrix(&self, n: i64) -> Result<Matrix> {
        let basis = self.basis(n);
        if basis.is_empty() {
            return Err(Error::EmptyComponent(n));
        }
        basis
            .par_iter()
            .map(|u| basis.iter().map(|w| self.pairing(u, w)).collect::<Result<Vec<_>>>())
            .collect()
    }

    /// Degrees with `|n| <= N` in the order `1, -1, 2, -2, ..., N, -N, 0`.
    fn scan_degrees(&self) -> Vec<i64> {
        let n = self.max_index as i64;
        (1..=n).flat_map(|k| [k, -k]).chain([0]).collect()
    }

    pub fn irreducible_at_truncation(&self) -> Result<IrreducibilityReport> {
        let zero_pairings: Vec<i64> =
            (1..=self.max_index as i64).filter(|&k| pairing_scalar(k, self.level).is_zero()).collect();
        let mut gram = Vec::new();
        for n in self.scan_degrees() {
            if self.basis(n).is_empty() {
                continue;
            }
            let det = matrix::determinant(&self.gram_matrix(n)?);
            gram.push(GramEntry { n, nonzero: !det.is_zero(), det: det.to_string() });
        }
        let witness = gram.iter().find(|g| !g.nonzero).map(|g| g.n);
        let verdict = match witness {
            None if zero_pairings.is_empty() => Irreducibility::Consistent,
            _ => Irreducibility::Reducible,
        };
        Ok(IrreducibilityReport { verdict, witness_degree: witness, zero_pairings, gram })
    }

    /// Full report over degrees `-N..=N`.
    pub fn report(&self) -> Result<VermaReport> {
        let n = self.max_index as i64;
        let table = self.dims_table();
        let degrees = (-n..=n)
            .map(|d| GradedDimReport { n: d, dim: table.get(&d).copied().unwrap_or(0), verdict: self.dim_verdict(d) })
            .collect();
        let irr = self.irreducible_at_truncation()?;
        Ok(VermaReport {
            phi: self.phi.clone(),
            level: self.level,
            truncation: self.truncation(),
            degrees,
            gram: irr.gram,
            verdict: irr.verdict,
            witness_degree: irr.witness_degree,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Consistent,
    Reducible,
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Irreducibility::Consistent => "IRREDUCIBLE-CONSISTENT",
            Irreducibility::Reducible => "REDUCIBLE",
        })
    }
}

impl Serialize for Irreducibility {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramEntry {
    pub n: i64,
    pub det: String,
    pub nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityReport {
    pub verdict: Irreducibility,
    pub witness_degree: Option<i64>,
    /// Indices `k <= N` with `c_k = 0`.
    pub zero_pairings: Vec<i64>,
    pub gram: Vec<GramEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VermaReport {
    pub phi: PhiSignature,
    pub level: i64,
    pub truncation: Truncation,
    pub degrees: Vec<GradedDimReport>,
    pub gram: Vec<GramEntry>,
    pub verdict: Irreducibility,
    pub witness_degree: Option<i64>,
}

/// Tensor product of one imaginary Verma module per finite node, all at the same level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductVerma {
    factors: Vec<VermaModule>,
}

impl ProductVerma {
    pub fn build(phis: Vec<PhiSignature>, level: i64, max_index: usize, max_exponent: u32) -> Result<Self> {
        if phis.is_empty() {
            return Err(Error::InvalidPhi("no nodes".into()));
        }
        let factors = phis
            .into_iter()
            .map(|p| VermaModule::build(p, level, max_index, max_exponent))
            .collect::<Result<_>>()?;
        Ok(ProductVerma { factors })
    }

    pub fn factors(&self) -> &[VermaModule] {
        &self.factors
    }

    pub fn dims_table(&self) -> BTreeMap<i64, u128> {
        let mut acc: BTreeMap<i64, u128> = BTreeMap::from([(0, 1)]);
        for f in &self.factors {
            let t = f.dims_table();
            let mut next = BTreeMap::new();
            for (&a, &x) in &acc {
                for (&b, &y) in &t {
                    *next.entry(a + b).or_insert(0) += x * y;
                }
            }
            acc = next;
        }
        acc
    }

    pub fn dim_verdict(&self, n: i64) -> DimVerdict {
        let first = &self.factors[0];
        let n_max = first.max_index;
        let mixed = self.factors.iter().any(|f| {
            (1..=n_max).any(|i| f.phi.eval(i) != first.phi.eval(1))
        });
        if mixed {
            return DimVerdict::Infinite;
        }
        let signs: Vec<Option<Sign>> = self.factors.iter().map(|f| f.phi.global_sign()).collect();
        if signs.iter().any(|s| *s != signs[0]) || signs[0].is_none() {
            return DimVerdict::Unknown;
        }
        let m = match signs[0] {
            Some(Sign::Plus) if n <= 0 => -n,
            Some(Sign::Minus) if n >= 0 => n,
            _ => return DimVerdict::Finite(0),
        } as usize;
        // coefficient of t^m in P(t)^r
        let p = partition_table(m);
        let mut acc = vec![0u128; m + 1];
        acc[0] = 1;
        for _ in &self.factors {
            let mut next = vec![0u128; m + 1];
            for a in 0..=m {
                for b in 0..=m - a {
                    next[a + b] += acc[a] * p[b];
                }
            }
            acc = next;
        }
        DimVerdict::Finite(acc[m])
    }

    pub fn graded_dim(&self, n: i64) -> GradedDimReport {
        GradedDimReport { n, dim: self.dims_table().get(&n).copied().unwrap_or(0), verdict: self.dim_verdict(n) }
    }
}
