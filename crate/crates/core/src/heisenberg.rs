//! The quantum Heisenberg subalgebra generated by `h_{ik}` (`i` a finite node,
//! `k != 0`) and central `gamma^{1/2}`.
//!
//! For `k > 0` the only nonzero brackets are
//! `[h_{ik}, h_{j,-k}] = a_{ij;q}^k (gamma^k - gamma^{-k}) / (q - q^{-1})`,
//! extended to `k < 0` by antisymmetry. The matrix `(a_{ij;q}^k)` is invertible
//! for every `k`; with `b` its inverse, the primed generators
//! `h'_{j,-k} = sum_m b_{mj;q}^k h_{m,-k}` pair canonically with `h_{ik}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::qscalar::{q_minus_qinv, qint, Scalar};
use crate::termalg::{self, AlgebraElement, Central, Flavor, GenId, RelationTable};

/// Normalization of the structure constants
/// `a_{ij;q}^k = [k a_ij]_{q_i} / (k * D_j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum StructureConvention {
    /// `D_j = [d_j]_{q_j}`. Specializes to `(alpha_i|alpha_j)/(d_i d_j)` at
    /// `q = 1`; not symmetric in `i, j` when `d_i != d_j`.
    #[default]
    NodeBase,
    /// `D_j = [d_j]_q`, i.e. the `1/(q_j - q_j^{-1})` normalization of the
    /// Drinfeld `[h, h]` relation. Symmetric.
    Drinfeld,
}

impl StructureConvention {
    pub const ALL: [StructureConvention; 2] = [StructureConvention::NodeBase, StructureConvention::Drinfeld];

    pub fn name(self) -> &'static str {
        match self {
            StructureConvention::NodeBase => "paper",
            StructureConvention::Drinfeld => "drinfeld",
        }
    }
}

impl fmt::Display for StructureConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" | "node-base" => Ok(StructureConvention::NodeBase),
            "drinfeld" => Ok(StructureConvention::Drinfeld),
            _ => Err(Error::Parse(format!("unknown convention `{s}` (expected paper|drinfeld)"))),
        }
    }
}

/// `G_q` for a given affine type, optionally with `gamma` specialized to `q^level`.
#[derive(Debug)]
pub struct HeisenbergAlgebra {
    cartan: CartanData,
    convention: StructureConvention,
    level: Option<i64>,
    a_cache: RwLock<BTreeMap<i64, Arc<Matrix>>>,
    b_cache: RwLock<BTreeMap<i64, Arc<Matrix>>>,
}

impl Clone for HeisenbergAlgebra {
    fn clone(&self) -> Self {
        HeisenbergAlgebra {
            cartan: self.cartan.clone(),
            convention: self.convention,
            level: self.level,
            a_cache: RwLock::new(self.a_cache.read().unwrap().clone()),
            b_cache: RwLock::new(self.b_cache.read().unwrap().clone()),
        }
    }
}

/// One row of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    #[serde(rename = "relation-id")]
    pub relation_id: String,
    pub lhs: String,
    pub rhs: String,
    pub residue: String,
    pub pass: bool,
}

impl RelationCheck {
    pub fn new(relation_id: String, lhs: &AlgebraElement, rhs: &AlgebraElement) -> Self {
        let residue = lhs.sub(rhs);
        RelationCheck {
            relation_id,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass: residue.is_zero(),
            residue: residue.to_string(),
        }
    }
}

pub fn all_pass(report: &[RelationCheck]) -> bool {
    report.iter().all(|r| r.pass)
}

/// `(gamma^k - gamma^{-k}) / (q - q^{-1})`, times `c`, with `gamma = q^level`
/// when a level is given.
pub fn canonical_central(k: i64, c: &Scalar, level: Option<i64>) -> Central {
    let coeff = c.checked_div(&q_minus_qinv()).expect("q - q^-1 is nonzero");
    let central = Central::gamma_difference(k, coeff);
    match level {
        Some(l) => Central::scalar(central.specialize(l)),
        None => central,
    }
}

impl HeisenbergAlgebra {
    pub fn new(cartan: CartanData, convention: StructureConvention) -> Self {
        HeisenbergAlgebra {
            cartan,
            convention,
            level: None,
            a_cache: RwLock::default(),
            b_cache: RwLock::default(),
        }
    }

    /// The quotient by `gamma - q^level`.
    pub fn at_level(&self, level: i64) -> Result<Self> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        let mut out = self.clone();
        out.level = Some(level);
        Ok(out)
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn convention(&self) -> StructureConvention {
        self.convention
    }

    pub fn level(&self) -> Option<i64> {
        self.level
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, max: self.rank() });
        }
        Ok(())
    }

    /// `a_{ij;q}^k` for finite nodes `i, j` in `1..=n`.
    pub fn structure_constant(&self, i: usize, j: usize, k: i64) -> Result<Scalar> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        self.check_node(i)?;
        self.check_node(j)?;
        Ok(self.raw_constant(i, j, k))
    }

    fn raw_constant(&self, i: usize, j: usize, k: i64) -> Scalar {
        let cd = &self.cartan;
        let di = cd.d[i] as u32;
        let dj = cd.d[j] as u32;
        let top = qint(k * cd.a(i, j), di);
        let bottom = match self.convention {
            StructureConvention::NodeBase => qint(dj as i64, dj),
            StructureConvention::Drinfeld => qint(dj as i64, 1),
        };
        top.checked_div(&(bottom * Scalar::from_int(k))).expect("q-integer denominators are nonzero")
    }

    /// `(a_{ij;q}^k)_{i,j in 1..=n}`, 0-based.
    pub fn a_matrix(&self, k: i64) -> Result<Arc<Matrix>> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if let Some(m) = self.a_cache.read().unwrap().get(&k) {
            return Ok(m.clone());
        }
        let n = self.rank();
        let m: Matrix = (1..=n).map(|i| (1..=n).map(|j| self.raw_constant(i, j, k)).collect()).collect();
        let m = Arc::new(m);
        self.a_cache.write().unwrap().insert(k, m.clone());
        Ok(m)
    }

    /// Exact inverse of [`a_matrix`](Self::a_matrix).
    pub fn b_matrix(&self, k: i64) -> Result<Arc<Matrix>> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if let Some(m) = self.b_cache.read().unwrap().get(&k) {
            return Ok(m.clone());
        }
        let b = Arc::new(matrix::inverse(&*self.a_matrix(k)?)?);
        self.b_cache.write().unwrap().insert(k, b.clone());
        Ok(b)
    }

    /// `h'_{j,-k} = sum_m b_{mj;q}^k h_{m,-k}` in unprimed generators.
    pub fn primed_generator(&self, j: usize, k: i64) -> Result<AlgebraElement> {
        self.check_node(j)?;
        if k < 1 {
            return Err(Error::ZeroK);
        }
        let b = self.b_matrix(k)?;
        let mut out = AlgebraElement::zero();
        for m in 1..=self.rank() {
            out = out.add(&AlgebraElement::monomial(vec![GenId::h(m, -k)], b[m - 1][j - 1].clone()));
        }
        Ok(out)
    }

    /// Rewrite unprimed negative generators through `h_{m,-k} = sum_j a_{jm}^k h'_{j,-k}`.
    /// The result is normal-ordered for [`PrimedTable`].
    pub fn to_primed_basis(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        let table = PrimedTable::new(self.level);
        x.substitute(&table, |g| match g.flavor {
            Flavor::Heis if g.node >= 1 && g.degree < 0 => {
                let k = -g.degree;
                let a = self.a_matrix(k)?;
                let mut out = AlgebraElement::zero();
                for j in 1..=self.rank() {
                    out = out.add(&AlgebraElement::monomial(vec![GenId::h_primed(j, k)], a[j - 1][g.node - 1].clone()));
                }
                Ok(out)
            }
            Flavor::Heis | Flavor::Primed if g.node >= 1 => Ok(AlgebraElement::gen(*g)),
            _ => Err(Error::ForeignGenerator(g.to_string())),
        })
    }

    /// Inverse of [`to_primed_basis`](Self::to_primed_basis); normal-ordered for `self`.
    pub fn from_primed_basis(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        x.substitute(self, |g| match g.flavor {
            Flavor::Primed => self.primed_generator(g.node, -g.degree),
            Flavor::Heis if g.node >= 1 => Ok(AlgebraElement::gen(*g)),
            _ => Err(Error::ForeignGenerator(g.to_string())),
        })
    }

    fn expected_pair(&self, i: usize, j: usize, k: i64, l: i64) -> AlgebraElement {
        if i == j && k == l {
            canonical_central(k, &Scalar::one(), self.level).to_element()
        } else {
            AlgebraElement::zero()
        }
    }

    /// Checks, for all nodes `i, j` and `1 <= k, l <= max_k`:
    /// `[h_{ik}, h'_{j,-l}] = delta_kl delta_ij (gamma^k - gamma^{-k})/(q - q^{-1})`,
    /// `[h_{ik}, h_{jl}] = 0` and `[h'_{i,-k}, h'_{j,-l}] = 0`, by normal ordering in
    /// the unprimed presentation.
    pub fn verify_canonical_relations(&self, max_k: i64) -> Result<Vec<RelationCheck>> {
        let n = self.rank();
        for k in 1..=max_k {
            self.b_matrix(k)?;
        }
        let cells: Vec<(usize, usize, i64, i64)> = (1..=n)
            .flat_map(|i| (1..=n).flat_map(move |j| (1..=max_k).flat_map(move |k| (1..=max_k).map(move |l| (i, j, k, l)))))
            .collect();
        let rows: Vec<Vec<RelationCheck>> = cells
            .par_iter()
            .map(|&(i, j, k, l)| -> Result<Vec<RelationCheck>> {
                let hik = AlgebraElement::gen(GenId::h(i, k));
                let hjl = AlgebraElement::gen(GenId::h(j, l));
                let pik = self.primed_generator(i, k)?;
                let pjl = self.primed_generator(j, l)?;
                let tag = format!("i={i},j={j},k={k},l={l}");
                Ok(vec![
                    RelationCheck::new(
                        format!("pair[{tag}]"),
                        &termalg::commutator(&hik, &pjl, self),
                        &self.expected_pair(i, j, k, l),
                    ),
                    RelationCheck::new(
                        format!("positive[{tag}]"),
                        &termalg::commutator(&hik, &hjl, self),
                        &AlgebraElement::zero(),
                    ),
                    RelationCheck::new(
                        format!("primed[{tag}]"),
                        &termalg::commutator(&pik, &pjl, self),
                        &AlgebraElement::zero(),
                    ),
                ])
            })
            .collect::<Result<_>>()?;
        let mut out: Vec<RelationCheck> = rows.into_iter().flatten().collect();
        // pair / positive / primed blocks, each in cell order
        out.sort_by_key(|r| match r.relation_id.split('[').next() {
            Some("pair") => 0,
            Some("positive") => 1,
            _ => 2,
        });
        Ok(out)
    }
}

fn heisenberg_order(a: &GenId, b: &GenId) -> Ordering {
    let key = |g: &GenId| (!g.is_negative(), g.flavor, g.node, g.degree);
    key(a).cmp(&key(b))
}

/// Unprimed presentation. Negative-degree generators precede positive ones;
/// within a side, by node then degree.
impl RelationTable for HeisenbergAlgebra {
    fn compare(&self, a: &GenId, b: &GenId) -> Ordering {
        heisenberg_order(a, b)
    }

    fn commutator(&self, a: &GenId, b: &GenId) -> Central {
        if a.flavor != Flavor::Heis || b.flavor != Flavor::Heis || a.node == 0 || b.node == 0 {
            return Central::zero();
        }
        if a.degree + b.degree != 0 {
            return Central::zero();
        }
        if a.degree < 0 {
            return self.commutator(b, a).neg();
        }
        let k = a.degree;
        let c = &self.a_matrix(k).expect("k != 0")[a.node - 1][b.node - 1];
        canonical_central(k, c, self.level)
    }
}

/// The presentation on `h_{ik}` (`k > 0`) and `h'_{i,-k}` by canonical pairs.
#[derive(Clone, Copy, Debug, Default)]
pub struct PrimedTable {
    level: Option<i64>,
}

impl PrimedTable {
    pub fn new(level: Option<i64>) -> Self {
        PrimedTable { level }
    }

    pub fn level(&self) -> Option<i64> {
        self.level
    }
}

impl RelationTable for PrimedTable {
    fn compare(&self, a: &GenId, b: &GenId) -> Ordering {
        heisenberg_order(a, b)
    }

    fn commutator(&self, a: &GenId, b: &GenId) -> Central {
        match (a.flavor, b.flavor) {
            (Flavor::Heis, Flavor::Primed) if a.degree > 0 && a.node == b.node && a.degree == -b.degree => {
                canonical_central(a.degree, &Scalar::one(), self.level)
            }
            (Flavor::Primed, Flavor::Heis) => self.commutator(b, a).neg(),
            _ => Central::zero(),
        }
    }
}

/// Single-copy algebra on `a_i`, `i != 0`:
/// `[a_i, a_j] = delta_{i+j,0} ([2i]_q / i) (gamma^i - gamma^{-i}) / (q - q^{-1})`.
#[derive(Clone, Copy, Debug, Default)]
pub struct HqTable {
    level: Option<i64>,
}

impl HqTable {
    /// Accepts level 0 (`gamma = 1`), where every bracket vanishes.
    pub(crate) fn with_gamma_level(level: Option<i64>) -> Self {
        HqTable { level }
    }

    pub fn level(&self) -> Option<i64> {
        self.level
    }

    /// `[a_k, a_{-k}]` as a central element.
    pub fn pairing(&self, k: i64) -> Central {
        assert!(k != 0);
        let c = qint(2 * k, 1).checked_div(&Scalar::from_int(k)).unwrap();
        canonical_central(k, &c, self.level)
    }
}

/// Relation table of the single-copy algebra, `gamma = q^level` when a level is given.
pub fn hq_relation_table(level: Option<i64>) -> Result<HqTable> {
    if level == Some(0) {
        return Err(Error::ZeroLevel);
    }
    Ok(HqTable { level })
}

impl RelationTable for HqTable {
    fn compare(&self, a: &GenId, b: &GenId) -> Ordering {
        heisenberg_order(a, b)
    }

    fn commutator(&self, a: &GenId, b: &GenId) -> Central {
        if a.flavor != Flavor::Heis || b.flavor != Flavor::Heis || a.node != 0 || b.node != 0 {
            return Central::zero();
        }
        if a.degree + b.degree != 0 {
            return Central::zero();
        }
        self.pairing(a.degree)
    }
}
