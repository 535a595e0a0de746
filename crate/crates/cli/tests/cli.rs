//! End-to-end tests of the `dyckdiv` binary: golden outputs, exit codes,
//! and the JSON round-trip guarantee.

use std::process::{Command, Output};

use serde_json::Value;

fn dyckdiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyckdiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dyckdiv(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn stdout_json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).expect("valid JSON")
}

fn exit_code(args: &[&str]) -> i32 {
    dyckdiv(args).status.code().expect("exit code")
}

#[test]
fn word_reproduces_the_golden_words() {
    let out = stdout(&["word", "126", "--lambda", "2"]);
    assert_eq!(out.lines().next(), Some("aabaababbabb"));

    let out = stdout(&["word", "126", "--lambda", "2", "--kind", "hooley"]);
    assert_eq!(out.lines().next(), Some("acabcaabccabbcabcb"));

    let out = stdout(&["word", "126", "--lambda", "2", "--kind", "right-limit"]);
    assert_eq!(out.lines().next(), Some("aabababaababababbabababb"));

    let out = stdout(&["word", "126", "--lambda", "2.001"]);
    assert_eq!(out.lines().next(), Some("aabababaababababbabababb"));
}

#[test]
fn word_json_round_trips() {
    let value = stdout_json(&["word", "126", "--lambda", "2", "--format", "json"]);
    assert_eq!(value["n"], 126);
    assert_eq!(value["lambda"], "2");
    assert_eq!(value["kind"], "class");

    // Reparse the emitted word and recompute everything it claims.
    let word: dyckdiv::BalancedWord = value["word"].as_str().unwrap().parse().unwrap();
    assert_eq!(value["length"].as_u64().unwrap(), word.len() as u64);
    assert_eq!(value["omega"].as_u64().unwrap(), word.omega().unwrap() as u64);
    assert_eq!(value["height"].as_u64().unwrap(), word.height().unwrap() as u64);

    let lambda: dyckdiv::Rational = value["lambda"].as_str().unwrap().parse().unwrap();
    let recomputed = dyckdiv::class_word_of_int(126, &lambda).unwrap();
    assert_eq!(recomputed, word);
    let regular =
        dyckdiv::is_regular(dyckdiv::divisors(126).unwrap().divisors(), &lambda).unwrap();
    assert_eq!(value["regular"].as_bool().unwrap(), regular);
}

#[test]
fn hooley_word_json_round_trips() {
    let value = stdout_json(&[
        "word", "126", "--lambda", "2", "--kind", "hooley", "--format", "json",
    ]);
    let word: dyckdiv::TriWord = value["word"].as_str().unwrap().parse().unwrap();
    assert_eq!(value["theta"].as_u64().unwrap(), word.theta().unwrap() as u64);
    assert_eq!(value["length"].as_u64().unwrap(), word.len() as u64);
}

#[test]
fn dense_exit_codes_follow_the_verdict() {
    assert_eq!(exit_code(&["dense", "126", "--lambda", "2"]), 0);
    assert_eq!(exit_code(&["dense", "10", "--lambda", "2"]), 1);
    assert_eq!(exit_code(&["dense", "1", "--lambda", "3/2"]), 0);

    let out = stdout(&["dense", "126", "--lambda", "2"]);
    assert_eq!(out.trim(), "yes (3/3 deciders agree)");

    let value = stdout_json(&["dense", "126", "--lambda", "2", "--format", "json"]);
    assert_eq!(value["densely_divisible"], true);
    assert_eq!(value["deciders"]["consecutive_ratio"], true);
    assert_eq!(value["deciders"]["sweep"], true);
    assert_eq!(value["deciders"]["word"], true);
}

#[test]
fn delta_prints_the_height() {
    assert_eq!(stdout(&["delta", "126", "--lambda", "2"]).trim(), "3");
    let value = stdout_json(&["delta", "126", "--lambda", "2", "--format", "json"]);
    assert_eq!(value["delta"], 3);
}

#[test]
fn components_reports_exact_spans() {
    let value = stdout_json(&["components", "10", "--lambda", "2", "--format", "json"]);
    assert_eq!(value["components"], 2);
    let spans = value["spans"].as_array().unwrap();
    assert_eq!(spans[0]["start"], "1");
    assert_eq!(spans[0]["end"], "4");
    assert_eq!(spans[1]["start"], "5");
    assert_eq!(spans[1]["end"], "20");
}

#[test]
fn scan_columns_agree() {
    let value = stdout_json(&["scan", "10", "--format", "json"]);
    let breakpoints: Vec<&str> = value["breakpoints"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_str().unwrap())
        .collect();
    assert_eq!(breakpoints, ["2", "5/2", "5", "10"]);
    for interval in value["intervals"].as_array().unwrap() {
        assert_eq!(interval["omega"], interval["components"]);
    }

    let value = stdout_json(&["scan", "1", "--format", "json"]);
    assert!(value["breakpoints"].as_array().unwrap().is_empty());
    assert_eq!(value["intervals"][0]["omega"], 1);

    // 126 is 2-densely divisible, so the count is 1 from lambda = 2 onward.
    let value = stdout_json(&["scan", "126", "--format", "json"]);
    for interval in value["intervals"].as_array().unwrap() {
        let from: dyckdiv::Rational = interval["from"].as_str().unwrap().parse().unwrap();
        if from >= dyckdiv::Rational::from_integer(2) {
            assert_eq!(interval["omega"], 1, "interval from {from}");
        }
    }
}

#[test]
fn render_ascii_golden() {
    assert_eq!(stdout(&["render", "ab"]), "/\\\n");
}

#[test]
fn render_svg_golden_polyline() {
    let out = stdout(&["render", "aabaababbabb", "--format", "svg"]);
    assert!(out.contains(
        "points=\"0,0 1,1 2,2 3,1 4,2 5,3 6,2 7,3 8,2 9,1 10,2 11,1 12,0\""
    ));
    assert_eq!(out.matches("<polyline").count(), 1);

    let out = stdout(&["render", "acb", "--format", "svg"]);
    assert!(out.contains("points=\"0,0 1,1 2,1 3,0\""));
}

#[test]
fn rendering_is_byte_deterministic() {
    let first = stdout(&["render", "acabcaabccabbcabcb", "--format", "svg"]);
    let second = stdout(&["render", "acabcaabccabbcabcb", "--format", "svg"]);
    assert_eq!(first, second);
}

#[test]
fn check_passes_on_a_small_range() {
    let out = dyckdiv(&["check", "200", "--lambdas", "3/2,2,7/3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("checks passed"), "got: {text}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(exit_code(&["check", "10", "--lambdas", "1"]), 2);
    assert_eq!(exit_code(&["word", "126"]), 2);
    assert_eq!(exit_code(&["word", "126", "--lambda", "1"]), 2);
    assert_eq!(exit_code(&["word", "126", "--lambda", "0.5"]), 2);
    assert_eq!(exit_code(&["render", "abxy"]), 2);
    assert_eq!(exit_code(&["render", ""]), 2);
    assert_eq!(exit_code(&["word", "126", "--set", "1,2", "--lambda", "2"]), 2);
    assert_eq!(exit_code(&["dense", "10", "--set", "1,2", "--lambda", "2"]), 2);
    assert_eq!(exit_code(&["components", "--lambda", "2"]), 2);
    assert_eq!(exit_code(&["word", "126", "--lambda", "2", "--format", "svg"]), 2);
}

#[test]
fn factor_splits_words_and_integers() {
    let out = stdout(&["factor", "abab"]);
    assert_eq!(out, "ab · ab\nomega 2\n");

    let out = stdout(&["factor", "acbacb"]);
    assert_eq!(out, "acb · acb\ntheta 2\n");

    let value = stdout_json(&["factor", "126", "--lambda", "2", "--format", "json"]);
    assert_eq!(value["omega"], 1);
    assert_eq!(value["factors"][0], "aabaababbabb");

    let value = stdout_json(&[
        "factor", "--set", "1,2,5,10", "--lambda", "2", "--format", "json",
    ]);
    assert_eq!(value["omega"], 2);
    assert_eq!(value["word"], "abab");

    // The empty word factors into nothing and prints as ε.
    let out = stdout(&["factor", ""]);
    assert_eq!(out, "ε\nomega 0\n");

    // Not in the language: rejected.
    assert_eq!(exit_code(&["factor", "ba"]), 2);
    assert_eq!(exit_code(&["factor", "cab"]), 2);
}

#[test]
fn explicit_sets_flow_through_word_and_components() {
    let out = stdout(&["word", "--set", "1,2,5,10", "--lambda", "2"]);
    assert_eq!(out.lines().next(), Some("abab"));

    let value = stdout_json(&[
        "word", "--set", "1,2,5,10", "--lambda", "2", "--format", "json",
    ]);
    assert_eq!(value["set"][0], "1");
    assert_eq!(value["word"], "abab");
    assert!(value.get("n").is_none());

    // Scale invariance is visible from the CLI too.
    let scaled = stdout(&["word", "--set", "3,6,15,30", "--lambda", "2"]);
    assert_eq!(stdout(&["word", "--set", "1,2,5,10", "--lambda", "2"]), scaled);
}
