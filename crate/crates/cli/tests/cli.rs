use std::process::{Command, Output};

fn drawings(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drawings")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = drawings(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_odd_minima_partitions() {
    assert_eq!(stdout(&["count", "ordered-partitions-odd-minima", "3"]), "7\n");
}

#[test]
fn convert_code_to_signed_permutation() {
    let out = stdout(&["convert", "--from", "code", "--to", "signed-perm", "0+ 1- 1+ 1+ 0+ 3+"]);
    assert_eq!(out, "5+ 1+ 4- 3- 6+ 2+\n");
}

#[test]
fn series_b_prints_one_coefficient_per_line() {
    let out = stdout(&["series", "b", "--order", "7"]);
    assert_eq!(out.lines().collect::<Vec<_>>(), ["1", "1", "2", "7", "35", "226", "1787", "16717"]);
    let out = stdout(&["series", "p", "--order", "8"]);
    assert_eq!(out.lines().last(), Some("11025"));
}

#[test]
fn count_bounded_regions() {
    assert_eq!(stdout(&["count-bounded", "h", "3"]), "7\n");
    assert_eq!(stdout(&["count-bounded", "b", "3"]), "15\n");
}

#[test]
fn enumerate_is_sorted_and_stable() {
    let first = stdout(&["enumerate", "klazar-trees", "4"]);
    assert_eq!(first, stdout(&["enumerate", "klazar-trees", "4"]));
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines.len(), 35);
    assert!(lines.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn enumerate_json_has_count() {
    let out = stdout(&["enumerate", "ordered-partitions-odd-minima", "3", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["count"], 7);
    assert_eq!(doc["objects"][0], "123");
    assert_eq!(doc["objects"].as_array().unwrap().len(), 7);
}

#[test]
fn convert_there_and_back() {
    let classes = ["partition", "signed-perm", "code", "code-before", "klazar-tree", "drawing"];
    for text in stdout(&["enumerate", "ordered-partitions-odd-minima", "4"]).lines() {
        for target in &classes[1..] {
            let there = stdout(&["convert", "--from", "partition", "--to", target, text]);
            let back = stdout(&["convert", "--from", target, "--to", "partition", there.trim_end()]);
            assert_eq!(back.trim_end(), text, "via {target}");
        }
    }
}

#[test]
fn classify_reports_class_and_certificate() {
    let out = stdout(&["classify", "b", "1+ 3- 2+"]);
    assert!(out.contains("class: bounded"));
    assert!(out.contains("certificate: simplex"));
    let out = stdout(&["classify", "b", "2+ 1-"]);
    assert!(out.contains("class: unbounded") && out.contains("certificate: ray"));
    let out = stdout(&["classify", "h", "1|3|2", "--orientation", "-"]);
    assert!(out.contains("class: empty"));
    assert!(out.contains("x_1<0,x_2<0,x_3>0,|x_1|>|x_3|>|x_2|"));
}

#[test]
fn parse_failures_exit_one() {
    for args in [
        &["count", "no-such-class", "3"][..],
        &["convert", "--from", "code", "--to", "signed-perm", "0- 1+"],
        &["convert", "--from", "partition", "--to", "code", "2|1"],
        &["classify", "b", "1+ 1-"],
        &["count", "drawings", "9"],
    ] {
        let out = drawings(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1, "{args:?}");
    }
}

#[test]
fn verify_passes() {
    let out = drawings(&["verify", "--n-max", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().last().unwrap().ends_with("0 failed"));
    assert!(!text.contains("FAIL"));
}
