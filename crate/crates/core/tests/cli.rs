use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus_file(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("corpus");
    p.push(format!("{name}.rg"));
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_internorm"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> String {
    let mut p = std::env::temp_dir();
    p.push(format!("internorm-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn check_reports_counts() {
    let o = run(&["check", &corpus_file("torus-square")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "vertices: 1\nedges: 2\nfaces: 1\ngenus: 1\ncomponents: 2\n"
    );
}

#[test]
fn norm_of_torus_square() {
    let t1 = corpus_file("torus-square");
    assert_eq!(stdout(&run(&["norm", &t1, "1,1"])), "2\n");
    assert_eq!(
        stdout(&run(&["norm", &t1, "1,0", "--oracle", "--bound", "4"])),
        "1\n"
    );
    assert_eq!(stdout(&run(&["norm", &t1, "-3,2"])), "5\n");
    assert_eq!(run(&["norm", &t1, "1,2,3"]).status.code(), Some(3));
    assert_eq!(run(&["norm", &t1, "1.5,0"]).status.code(), Some(2));
}

#[test]
fn ball_of_sphere_is_degenerate() {
    let o = run(&["ball", &corpus_file("sphere-figure-eight")]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("genus 0: trivial norm"));
}

#[test]
fn ball_output_layout() {
    let o = run(&["ball", &corpus_file("torus-square")]);
    assert_eq!(
        stdout(&o),
        "dim 2\nv -1 -1\nv -1 1\nv 1 -1\nv 1 1\nsymmetric: true\nparity: true\n"
    );
}

#[test]
fn certify_reports_verdicts() {
    let t1 = stdout(&run(&["certify", &corpus_file("torus-square")]));
    assert!(t1.lines().any(|l| l == "verdict: REALIZABLE"));
    assert!(t1.lines().any(|l| l == "certificate: +1 +1"));
    let sep = stdout(&run(&["certify", &corpus_file("genus2-separating")]));
    assert!(sep.lines().any(|l| l == "verdict: INAPPLICABLE_EVEN_NORM"));
    assert!(sep.lines().any(|l| l == "certificate: NONE"));
    let t0 = stdout(&run(&["certify", &corpus_file("sphere-figure-eight")]));
    assert!(t0.lines().any(|l| l == "verdict: TRIVIAL_GENUS_ZERO"));
}

#[test]
fn realize_torus_polygons() {
    let square = temp_file("square", "v 1 1\nv 1 -1\nv -1 1\nv -1 -1\n");
    let o = run(&["realize-torus", &square]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "slopes: 2\ngeodesic 0 1 1\ngeodesic 1 0 1\n");
    let segment = temp_file("segment", "v 2 0\nv -2 0\n");
    assert_eq!(run(&["realize-torus", &segment]).status.code(), Some(4));
    let odd = temp_file("odd", "v 1 0\nv 0 1\nv -1 0\nv 0 -1\n");
    assert_eq!(run(&["realize-torus", &odd]).status.code(), Some(4));
}

#[test]
fn error_exit_codes() {
    let bad = temp_file("bad", "vertices one\n");
    assert_eq!(run(&["check", &bad]).status.code(), Some(2));
    let invalid = temp_file(
        "invalid",
        "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 0\n1 2\nend\n",
    );
    assert_eq!(run(&["check", &invalid]).status.code(), Some(3));
    let sep = corpus_file("genus2-separating");
    assert_eq!(
        run(&["ball", &sep, "--max-edges", "8"]).status.code(),
        Some(5)
    );
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(
        run(&["check", "/nonexistent/file.rg"]).status.code(),
        Some(1)
    );
}

#[test]
fn corpus_is_deterministic() {
    let first = run(&["corpus"]);
    let second = run(&["corpus"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.ends_with("corpus: 6/6 passed\n"));
    assert_eq!(stdout(&run(&["corpus", "--quiet"])), "corpus: 6/6 passed\n");
}
