//! Golden regression tests: every frozen report must regenerate
//! byte-identically from the command-line driver.

use bialg::cli;

fn run(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["bialg".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let code = cli::run(&argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn golden(args: &[&str], expected: &str, expected_code: i32) {
    let (code, text) = run(args);
    assert_eq!(code, expected_code, "exit code for {args:?}\noutput:\n{text}");
    assert_eq!(text, expected, "output drifted for {args:?}");
}

#[test]
fn double_e2() {
    golden(
        &["double", "e2"],
        include_str!("golden/double-e2.txt"),
        0,
    );
}

#[test]
fn contract_galilei() {
    golden(
        &["contract", "e2", "--m", "1,0,1", "--n", "0,1,0"],
        include_str!("golden/contract-galilei.txt"),
        0,
    );
}

#[test]
fn solve_exponents_e2() {
    golden(
        &["solve-exponents", "e2", "--m", "1,0,1"],
        include_str!("golden/solve-exponents-e2.txt"),
        0,
    );
}

#[test]
fn constants_e2() {
    golden(
        &["constants", "e2", "--m", "1,0,1"],
        include_str!("golden/constants-e2.txt"),
        0,
    );
}

#[test]
fn classical_limit_e2() {
    golden(
        &["classical-limit", "e2"],
        include_str!("golden/classical-limit-e2.txt"),
        0,
    );
}

#[test]
fn dual_classical_limit_e2() {
    golden(
        &["classical-limit", "e2", "--dual"],
        include_str!("golden/dual-classical-limit-e2.txt"),
        0,
    );
}

#[test]
fn validate_e2() {
    golden(&["validate", "e2"], include_str!("golden/validate-e2.txt"), 0);
}

#[test]
fn catalog_list() {
    golden(
        &["catalog", "list"],
        include_str!("golden/catalog-list.txt"),
        0,
    );
}

#[test]
fn catalog_show_round_trips_documents() {
    for key in ["e2", "e2-double", "galilei-double"] {
        let (code, text) = run(&["catalog", "show", key]);
        assert_eq!(code, 0);
        assert_eq!(text.trim_end(), bialg::catalog::source(key).unwrap().trim_end());
    }
}
