use a1pic_cli::{run, EXIT_FALSE, EXIT_INPUT, EXIT_OK};
use serde_json::json;

#[test]
fn joker_is_invertible_with_signature() {
    let r = run(["invertible", "builtin:J"]);
    assert_eq!(r.status, EXIT_OK);
    assert_eq!(r.command, "invertible");
    assert_eq!(r.inputs, vec!["builtin:J"]);
    assert_eq!(
        r.payload["signature"],
        json!({ "q0": {"s": 2, "w": 0}, "q1": {"s": 2, "w": 0}, "sq2": {"s": 0, "w": 0} })
    );
}

#[test]
fn a1_tilde_is_not_projective() {
    let r = run(["projective", "builtin:A1tilde"]);
    assert_eq!(r.status, EXIT_FALSE);
    assert_eq!(r.payload["projective"], json!(false));
    assert_eq!(run(["projective", "builtin:A1"]).status, EXIT_OK);
}

#[test]
fn unit_has_zero_coordinates() {
    let r = run(["--json", "coords", "builtin:M2"]);
    assert_eq!(r.status, EXIT_OK);
    assert_eq!(r.payload, json!({ "a": 0, "b": 0, "c": 0, "d": 0 }));
    let compact: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(compact, r.payload);
}

#[test]
fn coordinates_of_a_non_invertible_module() {
    let r = run(["coords", "builtin:A1tilde"]);
    assert_eq!(r.status, EXIT_FALSE);
    assert!(r.stderr.contains("not invertible"));
}

#[test]
fn joker_power_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("j2.a1mod");
    let p = path.to_str().unwrap();
    assert_eq!(run(["joker-power", "2", "-o", p]).status, EXIT_OK);
    let r = run(["coords", p]);
    assert_eq!(r.payload, json!({ "a": 0, "b": 0, "c": 0, "d": 2 }));
}

#[test]
fn json_payloads_are_deterministic() {
    for argv in [
        vec!["--json", "margolis", "builtin:J"],
        vec!["--json", "info", "builtin:A1tilde"],
        vec!["--json", "invertible", "builtin:J"],
        vec!["--json", "render", "builtin:J", "--format", "svg"],
    ] {
        let a = run(argv.clone());
        let b = run(argv);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a, b);
    }
}

#[test]
fn functor_outputs_revalidate() {
    let dir = tempfile::tempdir().unwrap();
    let file = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let cases: Vec<(String, Vec<String>)> = vec![
        (
            file("jj.a1mod"),
            vec![
                "tensor".into(),
                "builtin:J".into(),
                "builtin:A1tilde".into(),
            ],
        ),
        (file("dj.a1mod"), vec!["dual".into(), "builtin:J".into()]),
        (file("om2.a1mod"), vec!["loop".into(), "builtin:M2".into()]),
        (
            file("om2inv.a1mod"),
            vec!["loop".into(), "builtin:J".into(), "-k".into(), "-1".into()],
        ),
    ];
    for (out, mut argv) in cases {
        argv.extend(["-o".to_string(), out.clone()]);
        let r = run(&argv);
        assert_eq!(r.status, EXIT_OK, "{argv:?}: {}", r.stderr);
        let v = run(["validate", out.as_str()]);
        assert_eq!(v.status, EXIT_OK, "{argv:?}: {}", v.stderr);
        assert_eq!(v.payload["valid"], json!(true));
    }
}

#[test]
fn stdout_module_text_round_trips() {
    let r = run(["dual", "builtin:J"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dj.a1mod");
    std::fs::write(&path, &r.stdout).unwrap();
    let coords = run(["coords", path.to_str().unwrap()]);
    assert_eq!(coords.payload, json!({ "a": 0, "b": 0, "c": 0, "d": -1 }));
}

#[test]
fn render_counts_for_joker() {
    let ascii = run(["render", "builtin:J"]).stdout;
    let count = |prefix: &str| ascii.lines().filter(|l| l.starts_with(prefix)).count();
    assert_eq!(count("node "), 5);
    assert_eq!(count("edge sq1 solid"), 2);
    assert_eq!(count("edge sq1 dashed"), 0);
    assert_eq!(count("edge sq2 solid"), 2);
    assert_eq!(count("edge sq2 dashed"), 1);

    let svg = run(["render", "builtin:J", "--format", "svg"]).stdout;
    assert_eq!(svg.matches("<circle").count(), 5);
    let edges = |class: &str, dashed: bool| {
        svg.lines()
            .filter(|l| l.contains(&format!(r#"class="{class}""#)))
            .filter(|l| l.contains("stroke-dasharray") == dashed)
            .count()
    };
    assert_eq!(edges("sq1", false), 2);
    assert_eq!(edges("sq1", true), 0);
    assert_eq!(edges("sq2", false), 2);
    assert_eq!(edges("sq2", true), 1);
}

#[test]
fn input_errors_exit_two() {
    let unknown = run(["frobnicate"]);
    assert_eq!(unknown.status, EXIT_INPUT);
    assert!(!unknown.stderr.is_empty());

    assert_eq!(run(["info", "builtin:Q"]).status, EXIT_INPUT);
    let missing = run(["info", "/nonexistent/m.a1mod"]);
    assert_eq!(missing.status, EXIT_INPUT);
    assert!(missing.stderr.contains("/nonexistent/m.a1mod"));
}

#[test]
fn relation_failures_exit_two_with_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.a1mod");
    // The joker without its `Sq2 x1 = z3` edge.
    std::fs::write(
        &path,
        "module broken\n\
         gen x 0 0\ngen x1 1 0\ngen y 2 0\ngen z3 3 1\ngen z4 4 1\n\
         sq1 x x1\nsq1 z3 z4\n\
         sq2 x y\nsq2 y z4\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let v = run(["validate", p]);
    assert_eq!(v.status, EXIT_INPUT);
    assert_eq!(v.payload["valid"], json!(false));
    assert!(v.stderr.contains("at x "), "{}", v.stderr);
    let i = run(["invertible", p]);
    assert_eq!(i.status, EXIT_INPUT);
    assert!(i.stderr.contains("not an A(1)-module"));
}

#[test]
fn parse_errors_report_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.a1mod");
    std::fs::write(&path, "module bad\ngen x 0 0\ngen x 1 0\n").unwrap();
    let r = run(["validate", path.to_str().unwrap()]);
    assert_eq!(r.status, EXIT_INPUT);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
}

#[test]
fn human_tables_are_aligned() {
    let r = run(["info", "builtin:J"]);
    let lines: Vec<&str> = r.stdout.lines().skip(1).collect();
    assert!(lines[1].starts_with("---------"));
    let column = lines[0].find(" s ").unwrap() + 1;
    for line in &lines[2..] {
        assert!(line[..column].ends_with("  "), "{line:?}");
        assert_ne!(line.as_bytes()[column], b' ', "{line:?}");
    }
}

#[test]
fn check_theorems_all_pass() {
    let r = run(["--json", "check-theorems"]);
    assert_eq!(r.status, EXIT_OK, "{}", r.stdout);
    assert_eq!(r.payload["checks"].as_array().unwrap().len(), 11);
    assert_eq!(r.payload["passed"], json!(true));
}

#[test]
fn help_exits_zero() {
    let r = run(["--help"]);
    assert_eq!(r.status, EXIT_OK);
    assert!(r.stdout.contains("check-theorems"));
}
