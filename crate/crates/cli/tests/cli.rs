use std::process::{Command, Output};

fn maxgenus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxgenus")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn reduce_prints_genus_and_trace() {
    let o = maxgenus(&["reduce", "a b a^-1 c b^-1 c^-1", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("genus=1\n"), "{out}");
    assert!(out.lines().any(|l| l.starts_with("STEP 1 T")));
}

#[test]
fn reduce_rejects_a_singleton_letter() {
    let o = maxgenus(&["reduce", "a b a^-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_overrun_exits_three() {
    let o = maxgenus(&["max-genus", "--family", "mobius:3", "--no-early-exit", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn algorithm_two_matches_the_oracle() {
    let o = maxgenus(&["max-genus", "--family", "extspiral:5,6:13-14", "--method", "alg2", "--check", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total"], 5);
    assert_eq!(v["check"]["agree"], true);
}

#[test]
fn fig1_fixture_word() {
    let o = maxgenus(&["joint-tree", "--fixture", "fig1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("word=e1 e1^-1 e2 e2^-1 e3 e3^-1\n"));
}

#[test]
fn family_edge_list_round_trips() {
    let o = maxgenus(&["family", "neckband:4"]);
    let g = maxgenus_core::graph::Multigraph::parse_edge_list(&stdout(&o)).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
}

#[test]
fn unknown_suite_is_an_input_error() {
    let o = maxgenus(&["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}
