//! Linear combinations of generator words and normal ordering for
//! presentations in which every commutator of two generators is central.
//!
//! A [`RelationTable`] supplies a total order on generators and the central
//! value of `[a, b] = ab - ba`. Normal ordering repeatedly rewrites an
//! adjacent out-of-order pair `ab` as `ba + [a, b]`, which strictly lowers
//! either the inversion count or the word length, so it terminates. Since the
//! commutators are central, the result does not depend on which pair is
//! rewritten first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qscalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// `h_{ik}` of the Drinfeld presentation, or `a_k` of the single-copy
    /// algebra when `node == 0`.
    Heis,
    /// `h'_{i,-k}`, stored with negative degree.
    Primed,
    /// Weyl-algebra `X_{ik}`.
    WeylX,
    /// Weyl-algebra `d_{ik}`.
    WeylD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenId {
    pub flavor: Flavor,
    pub node: usize,
    pub degree: i64,
}

impl GenId {
    pub fn h(node: usize, degree: i64) -> GenId {
        assert!(node >= 1 && degree != 0);
        GenId { flavor: Flavor::Heis, node, degree }
    }

    /// `h'_{node,-k}` for `k >= 1`.
    pub fn h_primed(node: usize, k: i64) -> GenId {
        assert!(node >= 1 && k >= 1);
        GenId { flavor: Flavor::Primed, node, degree: -k }
    }

    /// `a_degree` of the single-copy algebra.
    pub fn a(degree: i64) -> GenId {
        assert!(degree != 0);
        GenId { flavor: Flavor::Heis, node: 0, degree }
    }

    pub fn x(node: usize, k: i64) -> GenId {
        assert!(k >= 1);
        GenId { flavor: Flavor::WeylX, node, degree: k }
    }

    pub fn d(node: usize, k: i64) -> GenId {
        assert!(k >= 1);
        GenId { flavor: Flavor::WeylD, node, degree: k }
    }

    /// Grading in which every presentation here is homogeneous: the loop
    /// degree for Heisenberg flavors, `-k` for `X_{ik}` and `+k` for `d_{ik}`.
    pub fn grade(&self) -> i64 {
        match self.flavor {
            Flavor::Heis | Flavor::Primed => self.degree,
            Flavor::WeylX => -self.degree,
            Flavor::WeylD => self.degree,
        }
    }

    /// Negative degree in the Heisenberg sense (creation side).
    pub fn is_negative(&self) -> bool {
        self.grade() < 0
    }
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.flavor, self.node) {
            (Flavor::Heis, 0) => write!(f, "a[{}]", self.degree),
            (Flavor::Heis, n) => write!(f, "h[{},{}]", n, self.degree),
            (Flavor::Primed, n) => write!(f, "h'[{},{}]", n, self.degree),
            (Flavor::WeylX, n) => write!(f, "X[{},{}]", n, self.degree),
            (Flavor::WeylD, n) => write!(f, "D[{},{}]", n, self.degree),
        }
    }
}

impl FromStr for GenId {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenId> {
        let bad = || Error::Parse(format!("malformed generator `{s}`"));
        let (head, rest) = s.split_once('[').ok_or_else(bad)?;
        let inner = rest.strip_suffix(']').ok_or_else(bad)?;
        let nums: Vec<i64> = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let g = match (head, nums.as_slice()) {
            ("a", [k]) if *k != 0 => GenId::a(*k),
            ("h", [n, k]) if *n >= 1 && *k != 0 => GenId::h(*n as usize, *k),
            ("h'", [n, k]) if *n >= 1 && *k <= -1 => GenId::h_primed(*n as usize, -*k),
            ("X", [n, k]) if *n >= 0 && *k >= 1 => GenId::x(*n as usize, *k),
            ("D", [n, k]) if *n >= 0 && *k >= 1 => GenId::d(*n as usize, *k),
            _ => return Err(bad()),
        };
        Ok(g)
    }
}

/// A central element `sum_m c_m gamma^{m/2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Central {
    terms: BTreeMap<i64, Scalar>,
}

impl Central {
    pub fn zero() -> Self {
        Central::default()
    }

    pub fn scalar(c: Scalar) -> Self {
        Central::gamma_term(0, c)
    }

    /// `c * gamma^{half/2}`.
    pub fn gamma_term(half: i64, c: Scalar) -> Self {
        let mut out = Central::zero();
        out.add_term(half, c);
        out
    }

    /// `c * (gamma^k - gamma^{-k})`.
    pub fn gamma_difference(k: i64, c: Scalar) -> Self {
        let mut out = Central::gamma_term(2 * k, c.clone());
        out.add_term(-2 * k, -c);
        out
    }

    pub fn add_term(&mut self, half: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(half).or_insert_with(Scalar::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&half);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn neg(&self) -> Central {
        Central { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Central {
        let mut out = Central::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    pub fn add(&self, other: &Central) -> Central {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    /// Substitute `gamma = q^level`, i.e. `gamma^{1/2} = s^level`.
    pub fn specialize(&self, level: i64) -> Scalar {
        self.terms.iter().map(|(m, c)| c * &Scalar::s_pow(level * m)).sum()
    }

    pub fn to_element(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(Vec::new(), *m), c.clone());
        }
        out
    }
}

/// Presentation data for normal ordering.
pub trait RelationTable: Send + Sync {
    /// Total order; words are normal when non-decreasing.
    fn compare(&self, a: &GenId, b: &GenId) -> Ordering;

    /// `[a, b] = ab - ba`, a central element.
    fn commutator(&self, a: &GenId, b: &GenId) -> Central;
}

/// Checks `[a,b] = -[b,a]` on every pair from `gens`.
pub fn is_antisymmetric<T: RelationTable + ?Sized>(table: &T, gens: &[GenId]) -> bool {
    gens.iter()
        .all(|a| gens.iter().all(|b| table.commutator(a, b) == table.commutator(b, a).neg()))
}

/// A generator word with a power of `gamma^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub word: Vec<GenId>,
    pub gamma_half: i64,
}

impl Monomial {
    pub fn new(word: Vec<GenId>, gamma_half: i64) -> Self {
        Monomial { word, gamma_half }
    }

    pub fn unit() -> Self {
        Monomial::new(Vec::new(), 0)
    }

    pub fn grade(&self) -> i64 {
        self.word.iter().map(GenId::grade).sum()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut out = AlgebraElement::zero();
        out.add_term(Monomial::unit(), c);
        out
    }

    pub fn gen(g: GenId) -> Self {
        AlgebraElement::monomial(vec![g], Scalar::one())
    }

    /// `c * word`, stored verbatim; only meaningful for normal words.
    pub fn monomial(word: Vec<GenId>, c: Scalar) -> Self {
        let mut out = AlgebraElement::zero();
        out.add_term(Monomial::new(word, 0), c);
        out
    }

    pub fn gamma_power(half: i64) -> Self {
        let mut out = AlgebraElement::zero();
        out.add_term(Monomial::new(Vec::new(), half), Scalar::one());
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// True when every term is a pure `gamma` power.
    pub fn is_central_scalar(&self) -> bool {
        self.terms.keys().all(|m| m.word.is_empty())
    }

    pub fn as_central(&self) -> Option<Central> {
        if !self.is_central_scalar() {
            return None;
        }
        let mut c = Central::zero();
        for (m, x) in &self.terms {
            c.add_term(m.gamma_half, x.clone());
        }
        Some(c)
    }

    /// Substitute `gamma = q^level` in every term.
    pub fn specialize_gamma(&self, level: i64) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(m.word.clone(), 0), c * &Scalar::s_pow(level * m.gamma_half));
        }
        out
    }

    pub fn has_gamma(&self) -> bool {
        self.terms.keys().any(|m| m.gamma_half != 0)
    }

    pub fn is_normal<T: RelationTable + ?Sized>(&self, table: &T) -> bool {
        self.terms
            .keys()
            .all(|m| m.word.windows(2).all(|w| table.compare(&w[0], &w[1]) != Ordering::Greater))
    }

    /// Substitute every generator by an element and renormalize.
    pub fn substitute<T, F>(&self, table: &T, mut image: F) -> Result<AlgebraElement>
    where
        T: RelationTable + ?Sized,
        F: FnMut(&GenId) -> Result<AlgebraElement>,
    {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            let mut acc = AlgebraElement::gamma_power(m.gamma_half).scale(c);
            for g in &m.word {
                acc = multiply(&acc, &image(g)?, table);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Rewrite the leftmost out-of-order pair first.
    #[default]
    Leftmost,
    /// Rewrite the rightmost out-of-order pair first.
    Rightmost,
}

fn find_inversion<T: RelationTable + ?Sized>(word: &[GenId], table: &T, strategy: Strategy) -> Option<usize> {
    let out_of_order = |i: &usize| table.compare(&word[*i], &word[*i + 1]) == Ordering::Greater;
    let n = word.len().saturating_sub(1);
    match strategy {
        Strategy::Leftmost => (0..n).find(out_of_order),
        Strategy::Rightmost => (0..n).rev().find(out_of_order),
    }
}

/// Normal form of `coeff * gamma^{gamma_half/2} * word`, accumulated into `out`.
pub fn normal_order_into<T: RelationTable + ?Sized>(
    out: &mut AlgebraElement,
    word: Vec<GenId>,
    gamma_half: i64,
    coeff: Scalar,
    table: &T,
    strategy: Strategy,
) {
    let mut pending: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    pending.insert(Monomial::new(word, gamma_half), coeff);
    while let Some((m, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let Some(i) = find_inversion(&m.word, table, strategy) else {
            out.add_term(m, c);
            continue;
        };
        let (a, b) = (m.word[i], m.word[i + 1]);
        let comm = table.commutator(&a, &b);
        if !comm.is_zero() {
            let mut shorter = m.word.clone();
            shorter.drain(i..i + 2);
            for (half, x) in comm.terms() {
                push(&mut pending, Monomial::new(shorter.clone(), m.gamma_half + half), &c * x);
            }
        }
        let mut swapped = m.word;
        swapped.swap(i, i + 1);
        push(&mut pending, Monomial::new(swapped, m.gamma_half), c);
    }
}

fn push(pending: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    let slot = pending.entry(m).or_insert_with(Scalar::zero);
    *slot = &*slot + &c;
}

pub fn normal_order<T: RelationTable + ?Sized>(word: &[GenId], table: &T) -> AlgebraElement {
    normal_order_with(word, table, Strategy::Leftmost)
}

pub fn normal_order_with<T: RelationTable + ?Sized>(word: &[GenId], table: &T, strategy: Strategy) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    normal_order_into(&mut out, word.to_vec(), 0, Scalar::one(), table, strategy);
    out
}

/// Bilinear product followed by normal ordering.
pub fn multiply<T: RelationTable + ?Sized>(x: &AlgebraElement, y: &AlgebraElement, table: &T) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (mx, cx) in &x.terms {
        for (my, cy) in &y.terms {
            let mut word = mx.word.clone();
            word.extend_from_slice(&my.word);
            normal_order_into(&mut out, word, mx.gamma_half + my.gamma_half, cx * cy, table, Strategy::Leftmost);
        }
    }
    out
}

/// `xy - yx` in normal form.
pub fn commutator<T: RelationTable + ?Sized>(x: &AlgebraElement, y: &AlgebraElement, table: &T) -> AlgebraElement {
    multiply(x, y, table).sub(&multiply(y, x, table))
}

/// Terms joined by ` + `, each `(<scalar>)[ * gamma^{m/2}][ * g1 g2 ...]`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if m.gamma_half != 0 {
                write!(f, " * gamma^{{{}/2}}", m.gamma_half)?;
            }
            if !m.word.is_empty() {
                write!(f, " *")?;
                for g in &m.word {
                    write!(f, " {g}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for AlgebraElement {
    type Err = Error;

    fn from_str(src: &str) -> Result<AlgebraElement> {
        let bad = |why: &str| Error::Parse(format!("{why} in `{src}`"));
        let src = src.trim();
        let mut out = AlgebraElement::zero();
        if src == "0" {
            return Ok(out);
        }
        let mut rest = src;
        loop {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("term must start with `(`"))?;
            let close = body.find(')').ok_or_else(|| bad("unbalanced parenthesis"))?;
            let coeff: Scalar = body[..close].parse()?;
            let tail = &body[close + 1..];
            let (term, next) = match tail.find(" + (") {
                Some(i) => (&tail[..i], Some(&tail[i + 3..])),
                None => (tail, None),
            };
            let mut gamma_half = 0;
            let mut word = Vec::new();
            for part in term.split(" * ").skip(1) {
                if let Some(g) = part.strip_prefix("gamma^{").and_then(|p| p.strip_suffix("/2}")) {
                    gamma_half = g.parse().map_err(|_| bad("bad gamma exponent"))?;
                } else {
                    for tok in part.split_whitespace() {
                        word.push(tok.parse()?);
                    }
                }
            }
            if !term.is_empty() && !term.starts_with(" * ") {
                return Err(bad("expected ` * ` after coefficient"));
            }
            out.add_term(Monomial::new(word, gamma_half), coeff);
            match next {
                Some(n) => rest = n,
                None => break,
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::qint;

    /// One canonical pair `[D, X] = 1` on node 1, degree 1.
    struct OnePair;

    impl RelationTable for OnePair {
        fn compare(&self, a: &GenId, b: &GenId) -> Ordering {
            (a.flavor == Flavor::WeylD, a.node, a.degree).cmp(&(b.flavor == Flavor::WeylD, b.node, b.degree))
        }

        fn commutator(&self, a: &GenId, b: &GenId) -> Central {
            match (a.flavor, b.flavor) {
                (Flavor::WeylD, Flavor::WeylX) if (a.node, a.degree) == (b.node, b.degree) => Central::scalar(Scalar::one()),
                (Flavor::WeylX, Flavor::WeylD) if (a.node, a.degree) == (b.node, b.degree) => Central::scalar(-Scalar::one()),
                _ => Central::zero(),
            }
        }
    }

    #[test]
    fn leibniz_on_x_squared() {
        // d (x^2 f) = x^2 df + 2x f
        let (d, x) = (GenId::d(1, 1), GenId::x(1, 1));
        let nf = normal_order(&[d, x, x], &OnePair);
        let mut expected = AlgebraElement::monomial(vec![x, x, d], Scalar::one());
        expected.add_term(Monomial::new(vec![x], 0), Scalar::from_int(2));
        assert_eq!(nf, expected);
    }

    #[test]
    fn commutator_of_self_vanishes() {
        let x = AlgebraElement::gen(GenId::d(1, 1)).add(&AlgebraElement::gen(GenId::x(1, 1)).scale(&qint(2, 1)));
        assert!(commutator(&x, &x, &OnePair).is_zero());
    }

    #[test]
    fn gamma_is_central() {
        let g = AlgebraElement::gamma_power(3);
        let x = AlgebraElement::gen(GenId::d(1, 1));
        assert!(commutator(&g, &x, &OnePair).is_zero());
    }

    #[test]
    fn render_and_parse() {
        let (d, x) = (GenId::d(1, 1), GenId::x(1, 2));
        let mut e = AlgebraElement::monomial(vec![x, d], qint(3, 1).recip().unwrap());
        e.add_term(Monomial::new(vec![], -2), Scalar::from_int(-7));
        e.add_term(Monomial::new(vec![GenId::h_primed(2, 3), GenId::a(-1)], 4), Scalar::q_pow(1));
        let text = e.to_string();
        let back: AlgebraElement = text.parse().unwrap();
        assert_eq!(back, e, "{text}");
        assert_eq!("0".parse::<AlgebraElement>().unwrap(), AlgebraElement::zero());
    }

    #[test]
    fn generator_tokens() {
        for g in [GenId::a(-3), GenId::h(2, 5), GenId::h_primed(1, 4), GenId::x(3, 1), GenId::d(1, 9)] {
            assert_eq!(g.to_string().parse::<GenId>().unwrap(), g);
        }
        assert!("h'[1,2]".parse::<GenId>().is_err());
        assert!("a[0]".parse::<GenId>().is_err());
    }
}
