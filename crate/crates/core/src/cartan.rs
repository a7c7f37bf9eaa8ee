//! Untwisted affine Cartan data `X_n^{(1)}` and finite root systems.
//!
//! Index 0 is always the affine node; the finite simple roots are `1..=n`.
//! Conventions: `a_ij = <alpha_i^vee, alpha_j>`, `(alpha_i|alpha_j) = d_i a_ij`,
//! with `d` coprime so the shortest finite simple roots have `d_i = 1`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    pub fn is_valid_rank(self, n: usize) -> bool {
        match self {
            Series::A => n >= 1,
            Series::B => n >= 3,
            Series::C => n >= 2,
            Series::D => n >= 4,
            Series::E => (6..=8).contains(&n),
            Series::F => n == 4,
            Series::G => n == 2,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Series> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Series::from_letter(c).ok_or_else(|| Error::Parse(format!("unknown series `{s}`"))),
            _ => Err(Error::Parse(format!("unknown series `{s}`"))),
        }
    }
}

/// Affine generalized Cartan matrix with its symmetrizer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanData {
    pub series: Series,
    pub rank: usize,
    pub gcm: Vec<Vec<i64>>,
    pub d: Vec<i64>,
}

/// A finite root as coefficients over `alpha_1..alpha_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteRoot(pub Vec<i64>);

impl FiniteRoot {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

/// An integral weight stored by its values on `h_1..h_n`, `c` and `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineWeight {
    pub hvalues: Vec<i64>,
    pub cvalue: i64,
    pub dvalue: i64,
}

/// Element `beta + m*delta` of the affine root lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub finite_part: Vec<i64>,
    pub delta_coeff: i64,
}

impl LatticePoint {
    pub fn new(finite_part: Vec<i64>, delta_coeff: i64) -> Self {
        LatticePoint { finite_part, delta_coeff }
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            finite_part: self.finite_part.iter().zip(&other.finite_part).map(|(a, b)| a + b).collect(),
            delta_coeff: self.delta_coeff + other.delta_coeff,
        }
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint {
            finite_part: self.finite_part.iter().map(|a| -a).collect(),
            delta_coeff: -self.delta_coeff,
        }
    }
}

/// Finite Cartan matrix of `series_rank`, Bourbaki numbering, 0-based.
pub fn finite_cartan(series: Series, n: usize) -> Result<Vec<Vec<i64>>> {
    if !series.is_valid_rank(n) && !(series == Series::B && n == 2) {
        return Err(Error::InvalidType { series: series.letter(), rank: n });
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match series {
        Series::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Series::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n short
            link(n - 2, n - 1, -1, -2);
        }
        Series::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n long
            link(n - 2, n - 1, -2, -1);
        }
        Series::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Series::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Series::F => {
            link(0, 1, -1, -1);
            // alpha_1, alpha_2 long
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Series::G => link(0, 1, -3, -1),
    }
    Ok(a)
}

/// Coprime positive `d` with `d_i a_ij = d_j a_ji`, for a connected
/// symmetrizable matrix.
pub fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::from_integer(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Ratio::new(a[i][j], a[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("Dynkin diagram is disconnected")).collect();
    let lcm = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

/// Positive roots of the finite root system of `a` by closing the simple
/// roots under simple reflections. Sorted by height, then lexicographically.
pub fn positive_roots_of(a: &[Vec<i64>]) -> Vec<FiniteRoot> {
    let n = a.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            // <alpha_i^vee, beta> = sum_j beta_j a_ij
            let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
            let mut img = beta.clone();
            img[i] -= pairing;
            if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    let mut roots: Vec<FiniteRoot> = seen.into_iter().map(FiniteRoot).collect();
    roots.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| x.0.cmp(&y.0)));
    roots
}

/// Standard untwisted affine Cartan data for `series_rank^{(1)}`.
pub fn load_type(series: Series, rank: usize) -> Result<CartanData> {
    if !series.is_valid_rank(rank) {
        return Err(Error::InvalidType { series: series.letter(), rank });
    }
    let fin = finite_cartan(series, rank)?;
    let dfin = symmetrizer(&fin);
    let theta = positive_roots_of(&fin).pop().expect("nonempty root system").0;
    let form = |x: &[i64], j: usize| -> i64 { (0..rank).map(|i| x[i] * dfin[i] * fin[i][j]).sum() };
    let theta_theta: i64 = (0..rank).map(|j| theta[j] * form(&theta, j)).sum();

    let mut gcm = vec![vec![0i64; rank + 1]; rank + 1];
    gcm[0][0] = 2;
    for i in 0..rank {
        for j in 0..rank {
            gcm[i + 1][j + 1] = fin[i][j];
        }
        // a_{i0} = -<alpha_i^vee, theta>
        gcm[i + 1][0] = -(0..rank).map(|j| theta[j] * fin[i][j]).sum::<i64>();
        // a_{0j} = -<theta^vee, alpha_j> = -2 (theta|alpha_j) / (theta|theta)
        gcm[0][i + 1] = -2 * form(&theta, i) / theta_theta;
    }
    let d = symmetrizer(&gcm);
    Ok(CartanData { series, rank, gcm, d })
}

impl CartanData {
    pub fn load(series: Series, rank: usize) -> Result<CartanData> {
        load_type(series, rank)
    }

    /// The finite Cartan matrix (indices 1..=n of the affine one, shifted to 0-based).
    pub fn finite_gcm(&self) -> Vec<Vec<i64>> {
        self.gcm[1..].iter().map(|row| row[1..].to_vec()).collect()
    }

    /// `a_ij` with affine indexing.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.gcm[i][j]
    }

    pub fn positive_roots(&self) -> Vec<FiniteRoot> {
        positive_roots_of(&self.finite_gcm())
    }

    /// `(alpha_i | alpha_j) = d_i a_ij`.
    pub fn bilinear(&self, i: usize, j: usize) -> Result<i64> {
        for idx in [i, j] {
            if idx > self.rank {
                return Err(Error::IndexOutOfRange { index: idx, max: self.rank });
            }
        }
        Ok(self.d[i] * self.gcm[i][j])
    }

    /// Symmetric form on finite root-lattice vectors.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank;
        let mut acc = 0;
        for i in 0..n {
            for j in 0..n {
                acc += x[i] * y[j] * self.d[i + 1] * self.gcm[i + 1][j + 1];
            }
        }
        acc
    }

    /// Checks the GCM axioms and the symmetrizer condition.
    pub fn validate(&self) -> bool {
        let m = self.rank + 1;
        if self.gcm.len() != m || self.d.len() != m || self.gcm.iter().any(|r| r.len() != m) {
            return false;
        }
        let g = self.d.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 || self.d.iter().any(|&x| x <= 0) {
            return false;
        }
        (0..m).all(|i| {
            self.gcm[i][i] == 2
                && (0..m).all(|j| {
                    i == j
                        || (self.gcm[i][j] <= 0
                            && (self.gcm[i][j] == 0) == (self.gcm[j][i] == 0)
                            && self.d[i] * self.gcm[i][j] == self.d[j] * self.gcm[j][i])
                })
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "series": self.series.to_string(),
            "rank": self.rank,
            "gcm": self.gcm,
            "d": self.d,
        })
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }
}

/// Every valid `(series, rank)` pair with rank at most `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<(Series, usize)> {
    use Series::*;
    let mut out = Vec::new();
    for s in [A, B, C, D, E, F, G] {
        for n in 1..=max_rank {
            if s.is_valid_rank(n) {
                out.push((s, n));
            }
        }
    }
    out
}
