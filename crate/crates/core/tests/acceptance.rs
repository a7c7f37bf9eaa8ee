//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{betas, bounded_partitions, dims, oracle_multiplicity, primed_generators};
use qaff_core::cartan::{all_types, load_type, Series};
use qaff_core::heisenberg::{all_pass, HeisenbergAlgebra, PrimedTable, StructureConvention};
use qaff_core::loopweights::{weight_multiplicity, GradedDims};
use qaff_core::matrix::{determinant, is_identity, mat_mul};
use qaff_core::qscalar::{qint, specialize_q1};
use qaff_core::termalg::{self, normal_order_with, AlgebraElement, GenId, Strategy};
use qaff_core::verma::{DimVerdict, Irreducibility, PhiSignature, VermaModule};
use qaff_core::weyliso::{psi_image, psi_inverse_image, verify_iso};
use qaff_core::{Error, Scalar};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const RELATION_TYPES: [(Series, usize); 6] =
    [(Series::A, 1), (Series::A, 2), (Series::A, 3), (Series::B, 3), (Series::C, 2), (Series::G, 2)];

fn canonical_relations() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (s, n) in RELATION_TYPES {
        for conv in StructureConvention::ALL {
            let h = HeisenbergAlgebra::new(load_type(s, n).unwrap(), conv);
            let report = h.verify_canonical_relations(6).map_err(|e| e.to_string())?;
            ensure!(report.len() == 3 * n * n * 36, "{s}{n} {conv}: {} rows", report.len());
            if let Some(bad) = report.iter().find(|r| !r.pass) {
                return Err(format!("{s}{n} {conv}: {} residue {}", bad.relation_id, bad.residue));
            }
            checked += report.len();
        }
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(60), "took {took:.1?}");
    Ok(format!("{checked} relations, 6 types x 2 conventions, k,l <= 6, {took:.1?}"))
}

fn limit_check() -> Outcome {
    let mut checked = 0;
    for (s, n) in RELATION_TYPES {
        let h = HeisenbergAlgebra::new(load_type(s, n).unwrap(), StructureConvention::NodeBase);
        let cd = h.cartan().clone();
        for i in 1..=n {
            for j in 1..=n {
                let want = common::rat(cd.bilinear(i, j).unwrap(), cd.d[i] * cd.d[j]);
                for k in 1..=6 {
                    let got = specialize_q1(&h.structure_constant(i, j, k).unwrap()).map_err(|e| e.to_string())?;
                    ensure!(got == want, "{s}{n} i={i} j={j} k={k}: {got} != {want}");
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} constants specialize to (alpha_i|alpha_j)/(d_i d_j)"))
}

fn random_primed_element(rng: &mut ChaCha8Rng, rank: usize) -> AlgebraElement {
    let gens = primed_generators(rank, 6);
    let mut x = AlgebraElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut word = Vec::new();
        let mut total = 0;
        for _ in 0..rng.gen_range(0..=4) {
            let g = *gens.choose(rng).unwrap();
            if total + g.degree.abs() > 6 {
                break;
            }
            total += g.degree.abs();
            word.push(g);
        }
        let c = Scalar::laurent([(rng.gen_range(-3..=3), common::rat(rng.gen_range(1..=5), 1))]);
        x = x.add(&AlgebraElement::monomial(word, c));
    }
    x
}

fn isomorphism() -> Outcome {
    let mut checked = 0;
    for (s, n) in [(Series::A, 2), (Series::B, 3)] {
        for conv in StructureConvention::ALL {
            for level in [-2, -1, 1, 2, 3] {
                let report = verify_iso(&load_type(s, n).unwrap(), conv, level, 6).map_err(|e| e.to_string())?;
                ensure!(all_pass(&report), "{s}{n} {conv} level {level}");
                checked += report.len();
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x51);
    for trial in 0..200 {
        let rank = if trial % 2 == 0 { 2 } else { 3 };
        let level = *[-2i64, -1, 1, 2, 3].choose(&mut rng).unwrap();
        let x = random_primed_element(&mut rng, rank);
        let back = psi_inverse_image(&psi_image(&x, level).unwrap(), level).unwrap();
        let nf = termalg::multiply(&AlgebraElement::one(), &x, &PrimedTable::new(Some(level)));
        ensure!(back == nf, "round trip {trial}: {x} -> {back}");
    }
    Ok(format!("{checked} relation images, 200 round trips"))
}

fn confluence() -> Outcome {
    let h = HeisenbergAlgebra::new(load_type(Series::B, 3).unwrap(), StructureConvention::NodeBase);
    let gens = common::heisenberg_generators(3, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0);
    for trial in 0..1000 {
        let len = rng.gen_range(0..=8);
        let word: Vec<GenId> = (0..len).map(|_| *gens.choose(&mut rng).unwrap()).collect();
        let l = normal_order_with(&word, &h, Strategy::Leftmost).to_string();
        let r = normal_order_with(&word, &h, Strategy::Rightmost).to_string();
        ensure!(l == r, "word {trial}: {l} vs {r}");
    }
    Ok("1000 words, leftmost and rightmost rewriting agree".into())
}

fn partition_dimensions() -> Outcome {
    let expected = [1u128, 1, 2, 3, 5, 7, 11, 15, 22, 30];
    for (p, sign) in [("+", -1i64), ("-", 1)] {
        let m = VermaModule::build(p.parse().unwrap(), 1, 9, 9).unwrap();
        for (d, &want) in expected.iter().enumerate() {
            let n = sign * d as i64;
            let got = m.graded_dim(n);
            let brute = bounded_partitions(d as u32, 9, 9).len() as u128;
            ensure!(got.dim == want && brute == want, "phi={p} n={n}: {} / {brute} != {want}", got.dim);
            ensure!(m.basis(n).len() as u128 == want, "phi={p} n={n}: basis size");
            ensure!(got.verdict == DimVerdict::Finite(want), "phi={p} n={n}: {}", got.verdict);
        }
    }
    Ok("degrees 0..-9 give 1,1,2,3,5,7,11,15,22,30".into())
}

fn infinite_witness() -> Outcome {
    let phi: PhiSignature = "+-:+".parse().unwrap();
    let mut seq = Vec::new();
    for e in 1..=6 {
        let g = VermaModule::build(phi.clone(), 1, 6, e).unwrap().graded_dim(0);
        ensure!(g.verdict == DimVerdict::Infinite, "E={e}: {}", g.verdict);
        seq.push(g.dim);
    }
    ensure!(seq.windows(2).all(|w| w[0] < w[1]), "not increasing: {seq:?}");
    Ok(format!("degree-0 dims {seq:?}, INFINITE"))
}

fn irreducibility() -> Outcome {
    let mut dets = 0;
    for (p, e) in [("+", 6), ("-", 6), ("+-:+", 2)] {
        for level in [-3, -2, -1, 1, 2, 3] {
            let m = VermaModule::build(p.parse().unwrap(), level, 6, e).unwrap();
            let r = m.irreducible_at_truncation().map_err(|e| e.to_string())?;
            ensure!(r.verdict == Irreducibility::Consistent, "phi={p} level={level}: {}", r.verdict);
            if let Some(g) = r.gram.iter().find(|g| !g.nonzero) {
                return Err(format!("phi={p} level={level}: zero determinant in degree {}", g.n));
            }
            dets += r.gram.len();
        }
        let m = VermaModule::build(p.parse().unwrap(), 0, 6, e).unwrap();
        let r = m.irreducible_at_truncation().map_err(|e| e.to_string())?;
        ensure!(r.verdict == Irreducibility::Reducible, "phi={p} level=0: {}", r.verdict);
        for n in [-1, 1] {
            match m.gram_matrix(n) {
                Ok(g) => ensure!(determinant(&g).is_zero(), "phi={p} level=0 degree {n}: nonzero"),
                Err(Error::EmptyComponent(_)) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!("{dets} nonzero Gram determinants at level != 0, degree +-1 degenerate at level 0"))
}

fn multiplicity_oracle() -> Outcome {
    let vs = [dims(&[(0, 1)]), dims(&[(-2, 1), (-1, 2), (0, 3), (1, 1), (3, 2)]), GradedDims::loop_line(3)];
    let mut checked = 0;
    for (s, n) in [(Series::A, 1), (Series::A, 2)] {
        let cd = load_type(s, n).unwrap();
        for v in &vs {
            for window in 0..=3 {
                for k in -3..=3 {
                    let zero = weight_multiplicity(&cd, &vec![0; n], k, v, window).unwrap();
                    ensure!(zero.count == v.dim(k), "{s}{n} beta=0 k={k}");
                    for beta in betas(n, 3) {
                        let got = weight_multiplicity(&cd, &beta, k, v, window).unwrap().count;
                        let want = oracle_multiplicity(&cd, &beta, k, v, window);
                        ensure!(got == want, "{s}{n} beta={beta:?} k={k} window={window}: {got} != {want}");
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} weight spaces match multiset enumeration"))
}

fn b_matrix_identity() -> Outcome {
    let mut checked = 0;
    for (s, n) in all_types(4) {
        for conv in StructureConvention::ALL {
            let h = HeisenbergAlgebra::new(load_type(s, n).unwrap(), conv);
            for k in (-6..=6).filter(|&k| k != 0) {
                let b = h.b_matrix(k).map_err(|e| format!("{s}{n} {conv} k={k}: {e}"))?;
                ensure!(is_identity(&mat_mul(&h.a_matrix(k).unwrap(), &b)), "{s}{n} {conv} k={k}");
                checked += 1;
            }
        }
    }
    // spot value: A1, k = 1 gives a = [2]_q / [1] and b = 1 / [2]_q
    let h = HeisenbergAlgebra::new(load_type(Series::A, 1).unwrap(), StructureConvention::NodeBase);
    ensure!(h.b_matrix(1).unwrap()[0][0] == qint(2, 1).recip().unwrap(), "A1 b-matrix");
    Ok(format!("{checked} matrices inverted exactly"))
}

fn cli_golden() -> Outcome {
    let bad = common::golden::golden_mismatches();
    ensure!(bad.is_empty(), "{bad:?}");
    for (name, args, env, _) in common::golden::CASES {
        let a = common::golden::run(args, *env);
        let b = common::golden::run(args, *env);
        ensure!(a.stdout == b.stdout, "{name}: nondeterministic");
    }
    Ok(format!("{} golden cases, exit codes and bytes stable", common::golden::CASES.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("canonical relations", canonical_relations),
        ("q -> 1 limit", limit_check),
        ("Weyl isomorphism", isomorphism),
        ("confluence", confluence),
        ("partition dimensions", partition_dimensions),
        ("infinite-dimension witness", infinite_witness),
        ("irreducibility dichotomy", irreducibility),
        ("multiplicity oracle", multiplicity_oracle),
        ("b-matrix identity", b_matrix_identity),
        ("CLI golden files", cli_golden),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{took:.1?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{took:.1?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
