use std::path::PathBuf;
use std::process::Command;

use ararank_cli::Report;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ararank(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ararank"))
        .args(args)
        .env("ARARANK_THREADS", "2")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ararank-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &PathBuf, file: &str, body: &str) -> String {
    let p = dir.join(file);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

fn in_order(text: &str, pieces: &[&str]) -> bool {
    let mut rest = text;
    for p in pieces {
        match rest.find(p) {
            Some(i) => rest = &rest[i + p.len()..],
            None => return false,
        }
    }
    true
}

#[test]
fn pentagon_is_a_complete_intersection_set_theoretically() {
    let r = ararank(&["analyze", "--fixture", "example1", "--search"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(in_order(&r.stdout, &["height 3", "ara = 3", "STCI: yes"]), "{}", r.stdout);
}

#[test]
fn second_family_member_is_not() {
    let r = ararank(&["analyze", "--fixture", "im", "--m", "2", "--search"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("height 4, lower 5, upper 5"), "{}", r.stdout);
    assert!(r.stdout.contains("STCI: no"), "{}", r.stdout);
}

#[test]
fn single_generator_file() {
    let dir = scratch("single");
    let f = write(&dir, "one.ideal", "ring 2\nx1*x2\n");
    let r = ararank(&["analyze", &f, "--search"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(in_order(&r.stdout, &["height 1", "ara = 1"]), "{}", r.stdout);
}

#[test]
fn square_is_a_complete_intersection() {
    let r = ararank(&["analyze", "--fixture", "ngon", "--n", "4"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("complete intersection: 2 generators"), "{}", r.stdout);
}

#[test]
fn missing_parameter_is_a_usage_error() {
    let r = ararank(&["analyze", "--fixture", "im"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--m"), "{}", r.stderr);
}

#[test]
fn parse_error_exits_two() {
    let dir = scratch("parse");
    let f = write(&dir, "bad.ideal", "ring 2\nx1*x9\n");
    let r = ararank(&["analyze", &f]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
}

#[test]
fn exhausted_budget_exits_one() {
    let r = ararank(&["search", "--fixture", "octagon_bridged", "--node-budget", "50"]);
    assert_eq!(r.code, 1, "{}", r.stdout);
    assert!(r.stdout.contains("budget-exhausted"));
}

#[test]
fn hexagon_certificate_with_oracle() {
    let r = ararank(&["check", "--fixture", "hexagon", "--oracle"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("gsv certificate accepted"));
    assert!(r.stdout.contains("oracle over QQ: confirmed"), "{}", r.stdout);
}

#[test]
fn oracle_over_a_finite_field() {
    let r = ararank(&["check", "--fixture", "example1", "--oracle", "--field", "GF(3)"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("oracle over GF(3): confirmed"), "{}", r.stdout);
    let r = ararank(&["check", "--fixture", "example1", "--oracle", "--field", "GF(6)"]);
    assert_eq!(r.code, 2);
}

#[test]
fn rejected_grouping_exits_three() {
    let dir = scratch("reject");
    let f = write(
        &dir,
        "pent.cert",
        "ring 5\nkind: sv\npart 0: x1*x3\npart 1: x1*x4, x2*x5\npart 2: x2*x4, x3*x5\n",
    );
    let r = ararank(&["check", &f]);
    assert_eq!(r.code, 3);
    assert!(r.stdout.contains("rejected"));
    assert!(r.stdout.contains("x1*x4 and x2*x5"), "{}", r.stdout);

    let g = write(&dir, "stuck.cert", "ring 6\npart 0: x1*x2\npart 1: x3*x4, x5*x6\n");
    let r = ararank(&["check", &g, "--trace"]);
    assert_eq!(r.code, 3);
    assert!(in_order(&r.stdout, &["pick x1", "stuck"]), "{}", r.stdout);
}

#[test]
fn one_part_certificate() {
    let dir = scratch("one");
    let f = write(&dir, "one.cert", "ring 2\npart 0: x1*x2\n");
    let r = ararank(&["check", &f]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("q0 = x1*x2"));
}

#[test]
fn identities_from_fixtures() {
    for name in ["example4_char0", "example4_char2", "example2"] {
        let r = ararank(&["verify-identities", "--fixture", name]);
        assert_eq!(r.code, 0, "{name}: {}", r.stdout);
        assert!(r.stdout.contains("2/2 pass"), "{name}: {}", r.stdout);
    }
}

#[test]
fn perturbed_identity_fails() {
    let dir = scratch("ident");
    let f = write(
        &dir,
        "bad.identities",
        "ring 2 over GF(2) params t\nname: perturbed\nlhs: x1\nrhs: t*x1\nclear: t + 1\n",
    );
    let r = ararank(&["verify-identities", &f]);
    assert_eq!(r.code, 3);
    assert!(r.stdout.contains("perturbed: FAIL"));
    assert!(r.stdout.contains("0/1 pass"));
}

#[test]
fn machine_reports_parse_back() {
    let runs = [
        ararank(&["analyze", "--fixture", "im", "--m", "2", "--search", "--machine"]),
        ararank(&["check", "--fixture", "example2", "--oracle", "--machine"]),
        ararank(&["verify-identities", "--fixture", "example4_char2", "--machine"]),
    ];
    for r in runs {
        assert_eq!(r.code, 0, "{}", r.stderr);
        let parsed = Report::parse_machine(&r.stdout).unwrap();
        assert_eq!(parsed.to_machine(), r.stdout);
    }
    let r = ararank(&["analyze", "--fixture", "im", "--m", "2", "--search", "--machine"]);
    let b = Report::parse_machine(&r.stdout).unwrap().bounds.unwrap();
    assert_eq!((b.height, b.lower, b.upper, b.stci), (4, 5, Some(5), Some(false)));
}

#[test]
fn dumped_fixture_files_feed_back_in() {
    let dir = scratch("dump");
    let out = dir.display().to_string();
    let r = ararank(&["fixtures", "dump", "hexagon", "--out", &out]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = ararank(&["check", &format!("{out}/hexagon.cert")]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = ararank(&["search", &format!("{out}/hexagon.complex")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("ara = 4"), "{}", r.stdout);
    let found = r.stdout.split_once("ring 6").map(|(_, c)| format!("ring 6{c}")).unwrap();
    let f = write(&dir, "found.cert", &found);
    let r = ararank(&["check", &f, "--oracle"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

#[test]
fn fixture_list_names_every_family() {
    let r = ararank(&["fixtures", "list"]);
    assert_eq!(r.code, 0);
    for name in ["example1", "im(4)", "octagon_bridged", "ngon(7)"] {
        assert!(r.stdout.contains(name), "{name}");
    }
}
