//! The Weyl algebra on `X_{ik}, d_{ik}` (`i` a finite node, `k >= 1`) and the
//! isomorphism `psi` from the level-`l` quotient of the Heisenberg algebra:
//! `h_{ik} -> [kl]_q d_{ik}`, `h'_{i,-k} -> X_{ik}`.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::heisenberg::{HeisenbergAlgebra, PrimedTable, RelationCheck, StructureConvention};
use crate::qscalar::{level_pairing, Scalar};
use crate::termalg::{self, AlgebraElement, Central, Flavor, GenId, RelationTable};

/// `[d_{ik}, X_{jl}] = delta_ij delta_kl`, everything else commutes.
/// Normal order puts every `X` to the left of every `d`.
#[derive(Clone, Copy, Debug, Default)]
pub struct WeylTable;

impl RelationTable for WeylTable {
    fn compare(&self, a: &GenId, b: &GenId) -> Ordering {
        let key = |g: &GenId| (!g.is_negative(), g.flavor, g.node, g.degree);
        key(a).cmp(&key(b))
    }

    fn commutator(&self, a: &GenId, b: &GenId) -> Central {
        if a.node != b.node || a.degree != b.degree {
            return Central::zero();
        }
        match (a.flavor, b.flavor) {
            (Flavor::WeylD, Flavor::WeylX) => Central::scalar(Scalar::one()),
            (Flavor::WeylX, Flavor::WeylD) => Central::scalar(-Scalar::one()),
            _ => Central::zero(),
        }
    }
}

fn check_level(level: i64) -> Result<()> {
    if level == 0 {
        Err(Error::ZeroLevel)
    } else {
        Ok(())
    }
}

/// Image of one Heisenberg generator under `psi`.
pub fn psi_generator(g: &GenId, level: i64) -> Result<AlgebraElement> {
    match g.flavor {
        Flavor::Heis if g.node >= 1 && g.degree > 0 => Ok(AlgebraElement::monomial(
            vec![GenId::d(g.node, g.degree)],
            level_pairing(g.degree, level),
        )),
        Flavor::Heis if g.node >= 1 => Err(Error::NotPrimedBasis(g.to_string())),
        Flavor::Primed => Ok(AlgebraElement::gen(GenId::x(g.node, -g.degree))),
        _ => Err(Error::ForeignGenerator(g.to_string())),
    }
}

/// `psi(x)` in Weyl normal form. `x` must be written in `h_{ik}` (`k > 0`) and
/// `h'_{i,-k}` with `gamma` already specialized.
pub fn psi_image(x: &AlgebraElement, level: i64) -> Result<AlgebraElement> {
    check_level(level)?;
    if x.has_gamma() {
        return Err(Error::UnspecializedGamma);
    }
    x.substitute(&WeylTable, |g| psi_generator(g, level))
}

/// `psi^{-1}(y)`, normal-ordered in the primed presentation at `gamma = q^level`.
pub fn psi_inverse_image(y: &AlgebraElement, level: i64) -> Result<AlgebraElement> {
    check_level(level)?;
    let table = PrimedTable::new(Some(level));
    y.substitute(&table, |g| match g.flavor {
        Flavor::WeylD => {
            let c = level_pairing(g.degree, level).recip()?;
            Ok(AlgebraElement::monomial(vec![GenId::h(g.node, g.degree)], c))
        }
        Flavor::WeylX => Ok(AlgebraElement::gen(GenId::h_primed(g.node, g.degree))),
        _ => Err(Error::ForeignGenerator(g.to_string())),
    })
}

/// For all nodes `i, j` and `1 <= k, l <= max_k`, checks that `psi` carries the
/// canonical relations at `gamma = q^level` to relations of the Weyl algebra.
///
/// The pairing is checked twice: once by computing the bracket in the
/// Heisenberg algebra and mapping it, once by bracketing the images.
pub fn verify_iso(
    cartan: &CartanData,
    convention: StructureConvention,
    level: i64,
    max_k: i64,
) -> Result<Vec<RelationCheck>> {
    check_level(level)?;
    let heis = HeisenbergAlgebra::new(cartan.clone(), convention).at_level(level)?;
    let n = heis.rank();
    for k in 1..=max_k {
        heis.b_matrix(k)?;
    }
    let cells: Vec<(usize, usize, i64, i64)> = (1..=n)
        .flat_map(|i| (1..=n).flat_map(move |j| (1..=max_k).flat_map(move |k| (1..=max_k).map(move |l| (i, j, k, l)))))
        .collect();
    let rows: Vec<Vec<RelationCheck>> = cells
        .par_iter()
        .map(|&(i, j, k, l)| -> Result<Vec<RelationCheck>> {
            let tag = format!("i={i},j={j},k={k},l={l},level={level}");
            let hik = AlgebraElement::gen(GenId::h(i, k));
            let hjl = AlgebraElement::gen(GenId::h(j, l));
            let pjl = heis.primed_generator(j, l)?;
            let psi_h_ik = psi_image(&hik, level)?;
            let psi_h_jl = psi_image(&hjl, level)?;
            let psi_p_ik = psi_image(&AlgebraElement::gen(GenId::h_primed(i, k)), level)?;
            let psi_p_jl = psi_image(&AlgebraElement::gen(GenId::h_primed(j, l)), level)?;

            let expected = if i == j && k == l {
                AlgebraElement::scalar(level_pairing(k, level))
            } else {
                AlgebraElement::zero()
            };
            let mapped = psi_image(&heis.to_primed_basis(&termalg::commutator(&hik, &pjl, &heis))?, level)?;
            let bracketed = termalg::commutator(&psi_h_ik, &psi_p_jl, &WeylTable);
            let zero = AlgebraElement::zero();
            Ok(vec![
                RelationCheck::new(format!("psi-pair[{tag}]"), &mapped, &expected),
                RelationCheck::new(format!("image-pair[{tag}]"), &bracketed, &expected),
                RelationCheck::new(
                    format!("image-positive[{tag}]"),
                    &termalg::commutator(&psi_h_ik, &psi_h_jl, &WeylTable),
                    &zero,
                ),
                RelationCheck::new(
                    format!("image-primed[{tag}]"),
                    &termalg::commutator(&psi_p_ik, &psi_p_jl, &WeylTable),
                    &zero,
                ),
            ])
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}
