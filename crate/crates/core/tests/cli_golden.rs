mod common;

use common::golden::{golden_mismatches, run, CASES};

#[test]
fn golden_outputs() {
    let bad = golden_mismatches();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn output_is_deterministic() {
    for (name, args, env, _) in CASES {
        let a = run(args, *env);
        let b = run(args, *env);
        assert_eq!(a.stdout, b.stdout, "{name}");
        assert_eq!(a.stderr, b.stderr, "{name}");
    }
}

#[test]
fn every_subcommand_is_covered() {
    for sub in ["cartan", "qnum", "heis-verify", "weyl-verify", "verma-dims", "verma-irred", "loop-mult"] {
        assert!(CASES.iter().any(|(_, args, _, code)| args[0] == sub && *code == 0), "{sub}");
        assert!(CASES.iter().any(|(_, args, _, code)| args[0] == sub && *code == 2), "{sub}");
    }
}

#[test]
fn usage_errors_name_the_offending_flag() {
    let out = run(&["heis-verify", "--type", "A", "--rank", "1", "--nope"], None);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--nope"));
    assert!(out.stdout.is_empty());
}

#[test]
fn env_format_matches_explicit_flag() {
    let args = ["verma-dims", "--phi", "-", "--level", "2", "--max-index", "3", "--max-exponent", "2"];
    let via_env = run(&args, Some("table"));
    let mut with_flag = args.to_vec();
    with_flag.extend(["--format", "table"]);
    assert_eq!(via_env.stdout, run(&with_flag, None).stdout);
    // the flag wins over the environment
    with_flag.truncate(args.len());
    with_flag.extend(["--format", "json"]);
    assert_eq!(run(&with_flag, Some("table")).stdout, run(&args, None).stdout);
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("loop-mult"));
}
