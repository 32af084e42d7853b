//! End-to-end tests of the `tiecode` binary: every subcommand is exercised
//! through `std::process::Command`, checking stdout bytes, stderr wording,
//! and exit codes.

use std::process::{Command, Output};

use tiecode_core::genetic::read_vgc1;

fn tiecode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiecode"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn assert_exit(output: &Output, code: i32) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        stdout_of(output),
        stderr_of(output)
    );
}

#[test]
fn classify_reports_the_generic_code() {
    let out = tiecode(&["classify", "--lengths", "1,1,2,3,3,5"]);
    assert_exit(&out, 0);
    assert_eq!(
        stdout_of(&out),
        "{\"canonical\":[\"1\",\"1\",\"2\",\"3\",\"3\",\"5\"],\
         \"verdict\":\"generic\",\"code\":\"6,3;6,2,1\"}\n"
    );
}

#[test]
fn classify_canonicalizes_signs_and_order() {
    let negated = tiecode(&["classify", "--lengths", "-4,1/1,-2"]);
    let sorted = tiecode(&["classify", "--lengths", "1,2,4"]);
    assert_exit(&negated, 0);
    assert_eq!(stdout_of(&negated), stdout_of(&sorted));
}

#[test]
fn classify_rejects_non_generic_vectors_by_default() {
    let out = tiecode(&["classify", "--lengths", "1,1,2"]);
    assert_exit(&out, 1);
    let message = stderr_of(&out);
    assert!(message.contains("non-generic"), "stderr: {message}");
    assert!(message.contains("--allow-strata"), "stderr: {message}");
}

#[test]
fn classify_with_allow_strata_reports_the_signature() {
    let out = tiecode(&["classify", "--lengths", "1,1,2", "--allow-strata"]);
    assert_exit(&out, 0);
    assert_eq!(
        stdout_of(&out),
        "{\"canonical\":[\"1\",\"1\",\"2\"],\"verdict\":\"stratum\",\
         \"wall\":\"3\",\"signature\":\"++0\",\"zero_walls\":[\"3\"]}\n"
    );
}

#[test]
fn malformed_lengths_fail_validation() {
    let out = tiecode(&["classify", "--lengths", "1,2,x"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("--lengths"));
}

#[test]
fn realize_round_trips_through_classify() {
    let out = tiecode(&["realize", "--code", "6,3;6,2,1", "--n", "6"]);
    assert_exit(&out, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("JSON");
    assert_eq!(json["realizable"], serde_json::Value::Bool(true));
    let witness: Vec<String> = json["witness"]
        .as_array()
        .expect("witness present")
        .iter()
        .map(|v| v.as_str().expect("fraction string").to_owned())
        .collect();

    let back = tiecode(&["classify", "--lengths", &witness.join(",")]);
    assert_exit(&back, 0);
    let classified: serde_json::Value = serde_json::from_str(&stdout_of(&back)).expect("JSON");
    assert_eq!(classified["code"], serde_json::Value::String("6,3;6,2,1".into()));
}

#[test]
fn realize_reports_unrealizable_virtual_codes() {
    let out = tiecode(&["realize", "--code", "9,6,4,2", "--n", "9"]);
    assert_exit(&out, 0);
    assert_eq!(
        stdout_of(&out),
        "{\"code\":\"9,6,4,2\",\"n\":9,\"realizable\":false}\n"
    );
}

#[test]
fn realize_rejects_non_virtual_codes() {
    let out = tiecode(&["realize", "--code", "3,1", "--n", "3"]);
    assert_exit(&out, 1);
    assert!(stderr_of(&out).contains("not a virtual genetic code"));
}

#[test]
fn realize_rejects_malformed_codes() {
    let out = tiecode(&["realize", "--code", "6,3;;1", "--n", "6"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("--code"));
}

#[test]
fn synthesize_finds_majority_weights() {
    let plain = tiecode(&["synthesize", "--table", "17", "--n", "3"]);
    assert_exit(&plain, 0);
    assert_eq!(
        stdout_of(&plain),
        "{\"threshold_function\":true,\"weights\":[\"2\",\"2\",\"2\"],\"threshold\":\"3\"}\n"
    );

    let pinned = tiecode(&[
        "synthesize",
        "--table",
        "17",
        "--n",
        "3",
        "--self-dual-at-half",
        "--integral",
    ]);
    assert_exit(&pinned, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&pinned)).expect("JSON");
    assert_eq!(json["threshold_function"], serde_json::Value::Bool(true));
}

#[test]
fn synthesize_rejects_non_threshold_tables() {
    // x1 XOR x2 XOR x3 has no separating hyperplane.
    let out = tiecode(&["synthesize", "--table", "69", "--n", "3"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "{\"threshold_function\":false}\n");

    let bad = tiecode(&["synthesize", "--table", "zz", "--n", "3"]);
    assert_exit(&bad, 2);
    assert!(stderr_of(&bad).contains("--table"));
}

#[test]
fn count_matches_published_small_values() {
    for (what, n, want) in [
        ("codes", "5", "7"),
        ("chambers", "5", "7"),
        ("strata", "4", "7"),
        ("total-strata", "4", "10"),
    ] {
        let out = tiecode(&["count", "--what", what, "--n", n]);
        assert_exit(&out, 0);
        assert_eq!(stdout_of(&out), format!("{want}\n"), "count --what {what} --n {n}");
    }
}

#[test]
fn count_respects_an_explicit_thread_cap() {
    let out = tiecode(&["--parallel", "1", "count", "--what", "codes", "--n", "6"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "21\n");
}

#[test]
fn count_validates_the_arity() {
    let out = tiecode(&["count", "--what", "codes", "--n", "99"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("--n"));
}

#[test]
fn tables_csv_is_byte_deterministic() {
    let first = tiecode(&["tables", "--max-n", "4"]);
    let second = tiecode(&["tables", "--max-n", "4"]);
    assert_exit(&first, 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        stdout_of(&first),
        "quantity,n,value\n\
         c,3,2\nc,4,3\n\
         v,3,2\nv,4,3\n\
         k,1,1\nk,2,2\nk,3,3\nk,4,7\n\
         tk,1,1\ntk,2,3\ntk,3,5\ntk,4,10\n"
    );
    // Progress chatter stays on stderr.
    assert!(!stdout_of(&first).contains("computing"));
    assert!(stderr_of(&first).contains("computing c(3)..."));
}

#[test]
fn tables_json_round_trips() {
    let out = tiecode(&["tables", "--max-n", "3", "--format", "json"]);
    assert_exit(&out, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("JSON");
    let rows = json["rows"].as_array().expect("rows");
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["quantity"], "c");
    assert_eq!(rows[0]["n"], 3);
    assert_eq!(rows[0]["value"], 2);
}

#[test]
fn tables_check_passes_up_to_n5() {
    let out = tiecode(&["tables", "--max-n", "5", "--check"]);
    assert_exit(&out, 0);
}

#[test]
fn tables_check_reports_the_divergent_stratum_counts() {
    // At n = 6 this build counts 118 positive classes and 139 in total,
    // one more than the published table rows; --check must say so and fail.
    let out = tiecode(&["tables", "--max-n", "6", "--check"]);
    assert_exit(&out, 1);
    let message = stderr_of(&out);
    assert!(message.contains("k(6) = 118"), "stderr: {message}");
    assert!(message.contains("tk(6) = 139"), "stderr: {message}");
    assert!(message.contains("2 table entries disagree"), "stderr: {message}");
}

#[test]
fn orbit_reports_canonical_form_and_witness() {
    let out = tiecode(&["orbit", "--lengths", "-3,1,-2"]);
    assert_exit(&out, 0);
    assert_eq!(
        stdout_of(&out),
        "{\"canonical\":[\"1\",\"2\",\"3\"],\
         \"group_element\":{\"nu\":[1,0,1],\"sigma\":[2,3,1]}}\n"
    );
}

#[test]
fn game_analyses_match_known_examples() {
    let majority = tiecode(&["game", "--lengths", "1,1,1", "--weights"]);
    assert_exit(&majority, 0);
    assert_eq!(
        stdout_of(&majority),
        "{\"game\":{\"n\":3,\"winning_table_hex\":\"17\"},\"decisive\":true,\
         \"weighted\":true,\"weights\":[\"2\",\"2\",\"2\"]}\n"
    );

    let tied = tiecode(&["game", "--lengths", "1,1,2"]);
    assert_exit(&tied, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&tied)).expect("JSON");
    assert_eq!(json["decisive"], serde_json::Value::Bool(false));

    let dummies = tiecode(&["game", "--lengths", "1,1,1,5", "--dummies"]);
    assert_exit(&dummies, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&dummies)).expect("JSON");
    assert_eq!(json["dummies"], serde_json::json!([1, 2, 3]));

    let equiv = tiecode(&["game", "--lengths", "1,2,2", "--equiv", "1,1,1"]);
    assert_exit(&equiv, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&equiv)).expect("JSON");
    assert_eq!(json["equivalent"], serde_json::Value::Bool(true));
}

#[test]
fn game_weights_require_a_decisive_game() {
    let out = tiecode(&["game", "--lengths", "1,1,2", "--weights"]);
    assert_exit(&out, 1);
    assert!(stderr_of(&out).contains("not decisive"));
}

#[test]
fn game_analysis_flags_are_mutually_exclusive() {
    let out = tiecode(&["game", "--lengths", "1,1,1", "--dummies", "--weights"]);
    assert_exit(&out, 2);
}

#[test]
fn game_rejects_negative_lengths() {
    let out = tiecode(&["game", "--lengths", "1,-1,2"]);
    assert_exit(&out, 1);
    assert!(stderr_of(&out).contains("negative"));
}

#[test]
fn enumerate_codes_writes_a_readable_cache() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("v5.vgc1");
    let out = tiecode(&["enumerate", "--codes", "--n", "5", "--out", path.to_str().unwrap()]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "7\n");

    let file = std::fs::File::open(&path).expect("cache file exists");
    let (n, codes) = read_vgc1(std::io::BufReader::new(file)).expect("valid VGC1 file");
    assert_eq!(n, 5);
    assert_eq!(codes.len(), 7);
    assert!(codes.iter().all(|c| c.n() == 5));
}

#[test]
fn enumerate_strata_checkpoints_resume_cleanly() {
    let dir = tempfile::tempdir().expect("temp dir");
    let first_path = dir.path().join("s4.str1");
    let second_path = dir.path().join("s4-resumed.str1");

    let first = tiecode(&["enumerate", "--strata", "--n", "4", "--out", first_path.to_str().unwrap()]);
    assert_exit(&first, 0);
    assert_eq!(stdout_of(&first), "7\n");

    // Resuming a finished checkpoint is a no-op that reproduces the same file.
    let second = tiecode(&[
        "enumerate",
        "--strata",
        "--resume",
        first_path.to_str().unwrap(),
        "--out",
        second_path.to_str().unwrap(),
    ]);
    assert_exit(&second, 0);
    assert_eq!(stdout_of(&second), "7\n");
    assert_eq!(
        std::fs::read(&first_path).expect("first checkpoint"),
        std::fs::read(&second_path).expect("second checkpoint")
    );
}

#[test]
fn enumerate_validates_its_flag_combinations() {
    let neither = tiecode(&["enumerate", "--n", "4", "--out", "/tmp/unused"]);
    assert_exit(&neither, 2);

    let missing_n = tiecode(&["enumerate", "--codes", "--out", "/tmp/unused"]);
    assert_exit(&missing_n, 2);
    assert!(stderr_of(&missing_n).contains("--n"));

    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("s3.str1");
    let made = tiecode(&["enumerate", "--strata", "--n", "3", "--out", path.to_str().unwrap()]);
    assert_exit(&made, 0);
    let wrong_n = tiecode(&[
        "enumerate",
        "--strata",
        "--n",
        "5",
        "--resume",
        path.to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_exit(&wrong_n, 2);
    assert!(stderr_of(&wrong_n).contains("checkpoint is for n = 3"));
}

#[test]
fn unknown_flags_are_rejected() {
    let out = tiecode(&["classify", "--lengths", "1,2,3", "--bogus"]);
    assert_exit(&out, 2);
}
