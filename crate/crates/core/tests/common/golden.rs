//! Golden-file cases for the `qaff` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

/// `(golden name, argv, QAFF_FORMAT, expected exit code)`
pub const CASES: &[(&str, &[&str], Option<&str>, i32)] = &[
    ("cartan_a2_json", &["cartan", "--type", "A", "--rank", "2"], None, 0),
    ("cartan_g2_table", &["cartan", "--type", "G", "--rank", "2", "--format", "table"], None, 0),
    ("cartan_f4_env_table", &["cartan", "--type", "F", "--rank", "4"], Some("table"), 0),
    ("qnum_3_2_at_q1", &["qnum", "--n", "3", "--d", "2", "--at-q1"], None, 0),
    ("qnum_2_1", &["qnum", "--n", "2"], None, 0),
    ("qnum_neg_3_2", &["qnum", "--n", "-3", "--d", "2"], None, 0),
    ("heis_verify_a2_k4", &["heis-verify", "--type", "A", "--rank", "2", "--max-k", "4"], None, 0),
    (
        "heis_verify_g2_drinfeld_table",
        &["heis-verify", "--type", "G", "--rank", "2", "--max-k", "2", "--convention", "drinfeld", "--format", "table"],
        None,
        0,
    ),
    ("heis_verify_a1_level", &["heis-verify", "--type", "A", "--rank", "1", "--max-k", "2", "--level", "-1"], None, 0),
    ("weyl_verify_a1_table", &["weyl-verify", "--type", "A", "--rank", "1", "--level", "2", "--max-k", "2"], Some("table"), 0),
    ("weyl_verify_c2", &["weyl-verify", "--type", "C", "--rank", "2", "--level", "-2", "--max-k", "1"], None, 0),
    (
        "verma_dims_plus_table",
        &["verma-dims", "--phi", "+", "--level", "1", "--max-index", "6", "--max-exponent", "6", "--format", "table"],
        None,
        0,
    ),
    (
        "verma_dims_mixed",
        &["verma-dims", "--phi", "+-:+", "--level", "1", "--max-index", "3", "--max-exponent", "2", "--min-degree", "-2", "--max-degree", "2"],
        None,
        0,
    ),
    ("verma_irred_plus_level0", &["verma-irred", "--phi", "+", "--level", "0", "--max-index", "4"], None, 0),
    (
        "verma_irred_minus_level2_table",
        &["verma-irred", "--phi", "-", "--level", "2", "--max-index", "3", "--max-exponent", "3", "--format", "table"],
        None,
        0,
    ),
    (
        "loop_mult_a1_line",
        &["loop-mult", "--type", "A", "--rank", "1", "--beta", "1", "--k-from", "-3", "--k-to", "3", "--window", "3", "--vdims", "-3:1,-2:1,-1:1,0:1,1:1,2:1,3:1", "--format", "table"],
        None,
        0,
    ),
    (
        "loop_mult_a2_phi",
        &["loop-mult", "--type", "A", "--rank", "2", "--beta", "1,1", "--k", "0", "--window", "1", "--phi", "+", "--level", "1", "--max-index", "2", "--max-exponent", "2"],
        None,
        0,
    ),
    ("usage_unknown_subcommand", &["bogus"], None, 2),
    ("usage_unknown_flag", &["heis-verify", "--type", "A", "--rank", "1", "--nope"], None, 2),
    ("usage_invalid_type", &["cartan", "--type", "E", "--rank", "5"], None, 2),
    ("usage_zero_level", &["weyl-verify", "--type", "A", "--rank", "1", "--level", "0"], None, 2),
    ("usage_missing_level", &["weyl-verify", "--type", "A", "--rank", "1"], None, 2),
    ("usage_bad_phi", &["verma-dims", "--phi", "+x", "--level", "1"], None, 2),
    ("usage_irred_zero_exponent", &["verma-irred", "--phi", "+", "--level", "1", "--max-exponent", "0"], None, 2),
    ("usage_zero_bound", &["heis-verify", "--type", "A", "--rank", "1", "--max-k", "0"], None, 2),
    ("usage_bad_env_format", &["qnum", "--n", "1"], Some("xml"), 2),
    ("usage_beta_rank", &["loop-mult", "--type", "A", "--rank", "2", "--beta", "1", "--k", "0", "--vdims", "0:1"], None, 2),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run(args: &[&str], env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qaff"));
    cmd.args(args).env_remove("QAFF_FORMAT");
    if let Some(f) = env {
        cmd.env("QAFF_FORMAT", f);
    }
    cmd.output().expect("qaff runs")
}

pub fn render(out: &Output) -> String {
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

/// Names of cases whose output differs from the stored file. With
/// `QAFF_BLESS` set, rewrites the files instead.
pub fn golden_mismatches() -> Vec<String> {
    let bless = std::env::var_os("QAFF_BLESS").is_some();
    let mut bad = Vec::new();
    for (name, args, env, code) in CASES {
        let out = run(args, *env);
        let text = render(&out);
        if out.status.code() != Some(*code) {
            bad.push(format!("{name}: exit {:?}, expected {code}", out.status.code()));
            continue;
        }
        let path = golden_dir().join(format!("{name}.golden"));
        if bless {
            std::fs::write(&path, &text).unwrap();
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(text.as_str()) {
            bad.push(format!("{name}: output differs from {}", path.display()));
        }
    }
    bad
}
