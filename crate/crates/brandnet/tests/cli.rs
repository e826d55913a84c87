//! End-to-end tests of the `brandnet` binary: subcommand flows, config
//! handling, and exit codes (0 success, 1 validation, 2 computation).

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn brandnet(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brandnet"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn generate(dir: &Path, extra: &[&str]) {
    let mut args = vec![
        "gen",
        "--out",
        "data",
        "--nodes",
        "200",
        "--planted",
        "5",
        "--engagement",
        "12",
        "--seed",
        "11",
    ];
    args.extend_from_slice(extra);
    let out = brandnet(&args, dir);
    assert!(out.status.success(), "gen failed: {}", stderr(&out));
}

#[test]
fn gen_build_rank_flow_produces_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), &[]);
    for f in ["posts.csv", "comments.csv", "follows.csv", "users.csv"] {
        assert!(dir.path().join("data").join(f).is_file(), "missing {f}");
    }

    let out = brandnet(
        &[
            "build",
            "--posts",
            "data/posts.csv",
            "--comments",
            "data/comments.csv",
            "--follows",
            "data/follows.csv",
            "--out",
            "out",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "build failed: {}", stderr(&out));
    assert!(stdout(&out).contains("pruned graph"));
    assert!(dir.path().join("out/stats.json").is_file());
    assert!(dir.path().join("out/ccdf.csv").is_file());

    let out = brandnet(
        &[
            "rank",
            "--posts",
            "data/posts.csv",
            "--comments",
            "data/comments.csv",
            "--follows",
            "data/follows.csv",
            "--users",
            "data/users.csv",
            "--out",
            "out",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "rank failed: {}", stderr(&out));
    for f in [
        "ranking.csv",
        "baseline.csv",
        "scores.csv",
        "stats.json",
        "comparison.csv",
        "ccdf.csv",
        "verified.csv",
        "run.json",
    ] {
        assert!(dir.path().join("out").join(f).is_file(), "missing {f}");
    }
    let ranking = fs::read_to_string(dir.path().join("out/ranking.csv")).unwrap();
    assert!(ranking.starts_with("rank,user_id,phi,score_network,score_brand,value_indv"));
}

#[test]
fn compare_reports_coverage_and_verified() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), &[]);
    let out = brandnet(
        &[
            "compare",
            "--posts",
            "data/posts.csv",
            "--comments",
            "data/comments.csv",
            "--follows",
            "data/follows.csv",
            "--users",
            "data/users.csv",
            "--out",
            "out",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "compare failed: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("coverage at n%"));
    assert!(text.contains("potential"));
    assert!(text.contains("verified users"));
    let comparison = fs::read_to_string(dir.path().join("out/comparison.csv")).unwrap();
    assert!(comparison.starts_with("method,n_percent,coverage"));
    assert!(comparison.contains("random"));
}

#[test]
fn baseline_subcommand_writes_selected_methods() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), &[]);
    let out = brandnet(
        &[
            "baseline",
            "--method",
            "pagerank",
            "--posts",
            "data/posts.csv",
            "--comments",
            "data/comments.csv",
            "--follows",
            "data/follows.csv",
            "--out",
            "out",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "baseline failed: {}", stderr(&out));
    let baseline = fs::read_to_string(dir.path().join("out/baseline.csv")).unwrap();
    assert!(baseline.contains("pagerank"));
    assert!(!baseline.contains("hits-authority"));
}

#[test]
fn config_file_applies_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), &[]);
    fs::write(
        dir.path().join("run.conf"),
        "posts = data/posts.csv\ncomments = data/comments.csv\nfollows = data/follows.csv\nout_dir = confout\ntop_percent = 50\n",
    )
    .unwrap();

    let out = brandnet(&["stats", "--config", "run.conf"], dir.path());
    assert!(out.status.success(), "stats failed: {}", stderr(&out));
    assert!(dir.path().join("confout/stats.json").is_file());

    // The explicit flag overrides the config file's out_dir.
    let out = brandnet(
        &["stats", "--config", "run.conf", "--out", "flagout", "--raw"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(dir.path().join("flagout/stats.json").is_file());
    assert!(stdout(&out).contains("raw graph"));
}

#[test]
fn validation_problems_exit_with_code_one() {
    let dir = tempfile::tempdir().unwrap();

    // Missing input file.
    let out = brandnet(
        &[
            "build",
            "--posts",
            "nope.csv",
            "--comments",
            "nope.csv",
            "--follows",
            "nope.csv",
            "--out",
            "out",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1), "stderr: {}", stderr(&out));

    // Domain violation in a row.
    fs::create_dir(dir.path().join("data")).unwrap();
    fs::write(
        dir.path().join("data/posts.csv"),
        "post_id,author_id,polarity,likes,favorites,text\np1,a,2,0,0,\n",
    )
    .unwrap();
    fs::write(
        dir.path().join("data/comments.csv"),
        "comment_id,post_id,author_id,parent_comment_id,polarity,text\n",
    )
    .unwrap();
    fs::write(dir.path().join("data/follows.csv"), "follower_id,followee_id\n").unwrap();
    let out = brandnet(
        &[
            "build",
            "--posts",
            "data/posts.csv",
            "--comments",
            "data/comments.csv",
            "--follows",
            "data/follows.csv",
            "--out",
            "out",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("polarity"));

    // Unknown config key.
    fs::write(dir.path().join("bad.conf"), "nonsense = 1\n").unwrap();
    let out = brandnet(&["stats", "--config", "bad.conf"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn node_cap_refusal_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), &[]);
    let out = brandnet(
        &[
            "rank",
            "--posts",
            "data/posts.csv",
            "--comments",
            "data/comments.csv",
            "--follows",
            "data/follows.csv",
            "--out",
            "out",
            "--node-cap",
            "10",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("cap"));
    // A failed run leaves no partial artifacts behind.
    assert!(!dir.path().join("out/ranking.csv").exists());
}

#[test]
fn gen_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), &[]);
    let first = fs::read(dir.path().join("data/posts.csv")).unwrap();
    fs::remove_dir_all(dir.path().join("data")).unwrap();
    generate(dir.path(), &[]);
    let second = fs::read(dir.path().join("data/posts.csv")).unwrap();
    assert_eq!(first, second);
}

#[test]
fn duplicate_follows_warn_but_do_not_fail() {
    let dir = tempfile::tempdir().unwrap();
    fs::create_dir(dir.path().join("data")).unwrap();
    fs::write(
        dir.path().join("data/posts.csv"),
        "post_id,author_id,polarity,likes,favorites,text\np1,a,1,2,1,nice phone\n",
    )
    .unwrap();
    fs::write(
        dir.path().join("data/comments.csv"),
        "comment_id,post_id,author_id,parent_comment_id,polarity,text\nc1,p1,b,,1,love it\nc2,p1,b,,,great value\n",
    )
    .unwrap();
    fs::write(
        dir.path().join("data/follows.csv"),
        "follower_id,followee_id\nb,a\nb,a\na,b\n",
    )
    .unwrap();
    let out = brandnet(
        &[
            "build",
            "--posts",
            "data/posts.csv",
            "--comments",
            "data/comments.csv",
            "--follows",
            "data/follows.csv",
            "--out",
            "out",
            "--min-weight",
            "1",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("duplicate follow"));
}
