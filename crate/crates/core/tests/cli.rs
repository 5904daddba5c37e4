use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use vsplit::cli::run;
use vsplit::families::{gen_family, FAMILY_TAGS};
use vsplit::io::parse_edge_list;
use vsplit::ParseMode;

fn vsplit(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("vsplit").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn scratch(name: &str, text: &str) -> String {
    let dir: PathBuf = std::env::temp_dir().join(format!("vsplit-it-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn params(tag: &str) -> Vec<&'static str> {
    match tag {
        "fig4_gk" | "star_of_c4" => vec!["2"],
        "t_d_star" => vec!["3", "2"],
        "cycle" | "path" => vec!["6"],
        "cubic_sample" => vec!["prism"],
        _ => vec![],
    }
}

#[test]
fn generated_files_round_trip() {
    for tag in FAMILY_TAGS {
        let p = params(tag);
        let mut args = vec!["gen", tag];
        args.extend(&p);
        let (code, text) = vsplit(&args);
        assert_eq!(code, 0, "{tag}");
        let g = gen_family(tag, &p).unwrap();
        assert_eq!(parse_edge_list(&text, ParseMode::Strict).unwrap().graph, g, "{tag}");
        let f = scratch(&format!("{tag}.edges"), &text);
        let (_, stats) = vsplit(&["--format", "records", "stats", &f]);
        assert!(stats.starts_with(&format!("N\t{}\nM\t{}\n", g.n(), g.m())), "{tag}: {stats}");
    }
}

#[test]
fn nine_vertex_example_deletion_witness() {
    let (_, text) = vsplit(&["gen", "fig6"]);
    let f = scratch("fig6.edges", &text);
    let (code, out) = vsplit(&["solve", "ChVD", "--kmax", "2", &f]);
    assert_eq!(code, 0);
    assert!(out.contains("OPT 2\nWITNESS 7 8\n"), "{out}");
}

#[test]
fn solve_witnesses_pass_verify() {
    let cases: [(&str, &[&str]); 6] = [
        ("claw", &[]),
        ("net", &[]),
        ("tent", &[]),
        ("cycle", &["5"]),
        ("star_of_c4", &["2"]),
        ("fig4_gk", &["2"]),
    ];
    for (tag, p) in cases {
        let mut args = vec!["gen", tag];
        args.extend(p);
        let g = scratch(&format!("{tag}.g"), &vsplit(&args).1);
        for param in ["ChVS", "ChVXS", "IVS", "IVXS", "UIVS", "UIVXS", "PVS", "ChVD", "ChED"] {
            for format in ["human", "records"] {
                let (code, report) = vsplit(&["--format", format, "solve", param, &g, "--kmax", "3"]);
                if code != 0 {
                    assert_eq!(code, 1, "{tag} {param}: {report}");
                    continue;
                }
                let r = scratch(&format!("{tag}.{param}.{format}"), &report);
                let (code, out) = vsplit(&["verify", &g, &r]);
                assert_eq!(code, 0, "{tag} {param}: {report}\n{out}");
            }
        }
    }
}

#[test]
fn verify_rejects_wrong_witnesses() {
    let g = scratch("c5.g", &vsplit(&["gen", "cycle", "5"]).1);
    let short = scratch("c5.short", "PARAM ChVD\nOPT 0\nNODES 1\nSECS 0.000\n");
    assert_eq!(vsplit(&["verify", &g, &short]).0, 1);
    let miscounted = scratch("c5.miscount", "PARAM ChED\nOPT 2\nWITNESS 0-1\nNODES 1\nSECS 0.000\n");
    let (code, out) = vsplit(&["verify", &g, &miscounted]);
    assert_eq!(code, 1, "{out}");
    let claw = scratch("claw.g", "0 1\n0 2\n0 3\n");
    let inclusive = scratch("claw.inc", "PARAM UIVS\nOPT 1\nWITNESS 0 : 1,2 | 2,3\n");
    assert_eq!(vsplit(&["verify", &claw, &inclusive]).0, 0);
    let not_exclusive = scratch("claw.notx", "PARAM UIVXS\nOPT 1\nWITNESS 0 : 1,2 | 2,3\n");
    let (code, out) = vsplit(&["verify", &claw, &not_exclusive]);
    assert_eq!(code, 1);
    assert!(out.contains("EXCLUSIVE false\n"));
}

fn binary(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vsplit"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // usage errors exit before reading stdin
    if let Err(e) = child.stdin.take().unwrap().write_all(stdin.as_bytes()) {
        assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe);
    }
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn binary_reads_standard_input() {
    let (code, out) = binary(&["recognize", "unit-interval", "-"], "0 1\n0 2\n0 3\n", &[]);
    assert_eq!(code, 1);
    assert!(out.contains("WITNESS claw 0 1 2 3\n"));
    let (code, out) = binary(&["split-paths"], "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n", &[]);
    assert_eq!(code, 0);
    assert!(out.starts_with("OPT 1\nSPLIT "));
}

#[test]
fn budget_from_the_environment() {
    let c4 = "0 1\n1 2\n2 3\n3 0\n";
    assert_eq!(binary(&["solve", "ChVS"], c4, &[("VSPLIT_BUDGET_NODES", "1")]).0, 3);
    assert_eq!(binary(&["solve", "ChVS", "--budget-nodes", "1000"], c4, &[("VSPLIT_BUDGET_NODES", "1")]).0, 0);
    assert_eq!(binary(&["solve", "ChVS"], c4, &[("VSPLIT_BUDGET_NODES", "lots")]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let (_, a) = binary(&["gen", "star_of_c4", "3"], "", &[]);
    let f = scratch("star3.g", &a);
    let strip = |s: String| s.lines().filter(|l| !l.starts_with("SECS")).collect::<Vec<_>>().join("\n");
    let first = strip(binary(&["solve", "ChVS", &f, "--kmax", "3"], "", &[]).1);
    let second = strip(binary(&["solve", "ChVS", &f, "--kmax", "3"], "", &[]).1);
    assert_eq!(first, second);
    assert!(first.contains("OPT 3"));
}
