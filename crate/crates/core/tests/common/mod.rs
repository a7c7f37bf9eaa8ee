//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

pub mod golden;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use proptest::prelude::*;
use qaff_core::cartan::{CartanData, FiniteRoot};
use qaff_core::loopweights::GradedDims;
use qaff_core::termalg::{AlgebraElement, GenId};
use qaff_core::Scalar;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Laurent polynomial in `s` with small integer coefficients.
pub fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..4)
        .prop_map(|t| Scalar::laurent(t.into_iter().map(|(e, c)| (e, rat(c, 1)))))
}

/// Quotient of two Laurent polynomials, denominator nonzero.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent().prop_filter("nonzero", |d| !d.is_zero())).prop_map(|(n, d)| &n / &d)
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

// ---- root systems ---------------------------------------------------------

/// Positive roots from simple roots by `alpha_i`-strings: `beta + alpha_i` is a
/// root iff `p - <beta, alpha_i^vee> > 0`, where `p` is the length of the string
/// below `beta`.
pub fn roots_by_strings(a: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = a.len();
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    while !layer.is_empty() {
        roots.extend(layer.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    roots
}

// ---- partitions and Verma bases -------------------------------------------

/// Partitions of `m` into parts `<= max_part`, each part used at most
/// `max_mult` times, listed explicitly.
pub fn bounded_partitions(m: u32, max_part: u32, max_mult: u32) -> Vec<Vec<u32>> {
    fn go(m: u32, largest: u32, max_mult: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=largest.min(m)).rev() {
            let used = cur.iter().filter(|&&p| p == part).count() as u32;
            if used >= max_mult {
                continue;
            }
            cur.push(part);
            go(m - part, part, max_mult, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, max_part, max_mult, &mut Vec::new(), &mut out);
    out
}

/// Exponent vectors `e in [0, max_exp]^max_index` with `sum_i deg(i) e_i = n`,
/// by exhaustive enumeration.
pub fn brute_force_basis(degrees: &[i64], max_exp: u32, n: i64) -> usize {
    let mut count = 0;
    let mut e = vec![0u32; degrees.len()];
    loop {
        let d: i64 = e.iter().zip(degrees).map(|(&x, &g)| x as i64 * g).sum();
        if d == n {
            count += 1;
        }
        let mut i = 0;
        while i < e.len() && e[i] == max_exp {
            e[i] = 0;
            i += 1;
        }
        if i == e.len() {
            return count;
        }
        e[i] += 1;
    }
}

// ---- loop-module multiplicities -------------------------------------------

/// All multisets of parts `(alpha, k)`, `alpha` a positive root, `|k| <= window`,
/// with `sum alpha = beta`. Returns the `sum k` of each multiset.
pub fn multiset_delta_sums(positive: &[FiniteRoot], beta: &[i64], window: i64) -> Vec<i64> {
    let parts: Vec<(&Vec<i64>, i64)> =
        positive.iter().flat_map(|r| (-window..=window).map(move |k| (&r.0, k))).collect();
    let mut out = Vec::new();
    fn go(parts: &[(&Vec<i64>, i64)], from: usize, rest: Vec<i64>, ksum: i64, out: &mut Vec<i64>) {
        if rest.iter().all(|&c| c == 0) {
            out.push(ksum);
            return;
        }
        for idx in from..parts.len() {
            let (alpha, k) = parts[idx];
            let left: Vec<i64> = rest.iter().zip(alpha).map(|(x, a)| x - a).collect();
            if left.iter().all(|&c| c >= 0) {
                go(parts, idx, left, ksum + k, out);
            }
        }
    }
    go(&parts, 0, beta.to_vec(), 0, &mut out);
    out
}

/// Brute-force count of the `lambda - beta + k delta` weight space.
pub fn oracle_multiplicity(cartan: &CartanData, beta: &[i64], k: i64, v: &GradedDims, window: i64) -> u128 {
    multiset_delta_sums(&cartan.positive_roots(), beta, window).into_iter().map(|s| v.dim(k - s)).sum()
}

/// Every `beta >= 0` of height `1..=max_height` in rank `n`.
pub fn betas(n: usize, max_height: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=max_height).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| (1..=max_height).contains(&v.iter().sum()));
    out
}

pub fn dims(pairs: &[(i64, u128)]) -> GradedDims {
    GradedDims::explicit(pairs.iter().copied().collect::<BTreeMap<_, _>>())
}

// ---- algebra elements -----------------------------------------------------

/// `h_{ik}` (`k > 0`) and `h'_{i,-k}` for nodes `1..=rank`, `k <= max_k`.
pub fn primed_generators(rank: usize, max_k: i64) -> Vec<GenId> {
    let mut g = Vec::new();
    for i in 1..=rank {
        for k in 1..=max_k {
            g.push(GenId::h(i, k));
            g.push(GenId::h_primed(i, k));
        }
    }
    g
}

/// `h_{ik}` with `0 < |k| <= max_k`.
pub fn heisenberg_generators(rank: usize, max_k: i64) -> Vec<GenId> {
    let mut g = Vec::new();
    for i in 1..=rank {
        for k in 1..=max_k {
            g.push(GenId::h(i, k));
            g.push(GenId::h(i, -k));
        }
    }
    g
}

/// Words over `gens` with total `|degree|` at most `max_total`.
pub fn word(gens: Vec<GenId>, max_len: usize, max_total: i64) -> impl Strategy<Value = Vec<GenId>> {
    prop::collection::vec(prop::sample::select(gens), 0..=max_len)
        .prop_filter("total degree", move |w| w.iter().map(|g| g.degree.abs()).sum::<i64>() <= max_total)
}

/// Small linear combinations of words with Laurent coefficients.
pub fn element(gens: Vec<GenId>, max_len: usize, max_total: i64) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((word(gens, max_len, max_total), laurent()), 1..4).prop_map(|terms| {
        terms.into_iter().fold(AlgebraElement::zero(), |acc, (w, c)| acc.add(&AlgebraElement::monomial(w, c)))
    })
}
