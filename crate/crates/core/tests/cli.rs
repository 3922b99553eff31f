use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const K4: &str = "graph 4 6\n0 0 1\n1 0 2\n2 0 3\n3 1 2\n4 1 3\n5 2 3\n";
const K4_TRIANGLES: &str = "0 1 3\n0 2 4\n1 2 5\n";

fn k5() -> String {
    let mut s = String::from("graph 5 10\n");
    let mut id = 0;
    for a in 0..5 {
        for b in a + 1..5 {
            s += &format!("{id} {a} {b}\n");
            id += 1;
        }
    }
    s
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn maclane(args: &[&Path]) -> Output {
    maclane_env(args, None)
}

fn maclane_env(args: &[&Path], budget: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_maclane"));
    cmd.args(args).env_remove("MACLANE_BUDGET");
    if let Some(b) = budget {
        cmd.env("MACLANE_BUDGET", b);
    }
    cmd.output().unwrap()
}

fn p(s: &str) -> &Path {
    Path::new(s)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_basis_exit_codes() {
    let d = Dir::new();
    let g = d.file("k4.txt", K4);
    let good = d.file("b3.txt", K4_TRIANGLES);
    let o = maclane(&[p("verify-basis"), &g, &good]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "simple-basis: yes\n");

    let four = d.file("b4.txt", "0 1 3\n0 2 4\n1 2 5\n3 4 5\n");
    let o = maclane(&[p("verify-basis"), &g, &four]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("simple-basis: no\n"));
    assert!(out.contains("wrong count: 4 elements, cycle space dimension 3"));
    assert!(out.contains("dependent: rank 3 of 4 elements"));

    let bad = d.file("bad.txt", "graph 4\n");
    assert_eq!(
        maclane(&[p("verify-basis"), &bad, &good]).status.code(),
        Some(2)
    );
    let missing = d.path("nope.txt");
    assert_eq!(
        maclane(&[p("verify-basis"), &g, &missing]).status.code(),
        Some(2)
    );
}

#[test]
fn embed_then_extract_then_verify() {
    let d = Dir::new();
    let g = d.file("k4.txt", K4);
    let b = d.file("b.txt", K4_TRIANGLES);
    let emb = d.path("k4.emb");
    let svg = d.path("k4.svg");
    let o = maclane(&[p("embed"), &g, &b, p("--out"), &emb, p("--svg"), &svg]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let report = stdout(&o);
    assert!(report.starts_with("planar: yes\nresidual: 3 4 5\nfaces: 4\n"));
    assert_eq!(fs::read_to_string(&emb).unwrap().lines().count(), 4);
    assert!(fs::read_to_string(&svg).unwrap().contains("<svg"));

    for face in 0..4 {
        let out = d.path(&format!("face{face}.txt"));
        let face = face.to_string();
        let o = maclane(&[p("extract-basis"), &emb, p(&face), p("--out"), &out]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 3);
        let o = maclane(&[p("verify-basis"), &g, &out]);
        assert_eq!(stdout(&o), "simple-basis: yes\n");
    }
    assert_eq!(
        maclane(&[p("extract-basis"), &emb, p("99")]).status.code(),
        Some(2)
    );
}

#[test]
fn embed_rejections() {
    let d = Dir::new();
    let g = d.file("k5.txt", &k5());
    let b = d.file("b.txt", "0 1 4\n0 2 5\n");
    let o = maclane(&[p("embed"), &g, &b, p("--out"), &d.path("x")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a simple basis"));

    let path = d.file("path.txt", "graph 3 2\n0 0 1\n1 1 2\n");
    let o = maclane(&[p("embed"), &path, &b, p("--out"), &d.path("y")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cycle_embeds_with_two_faces() {
    let d = Dir::new();
    let g = d.file("c.txt", "graph 3 3\n0 0 1\n1 1 2\n2 2 0\n");
    let b = d.file("b.txt", "0 1 2\n");
    let o = maclane(&[p("embed"), &g, &b, p("--out"), &d.path("c.emb")]);
    assert_eq!(
        stdout(&o),
        "planar: yes\nresidual: 0 1 2\nfaces: 2\n0 1 2\n0 1 2\n"
    );
    let o = maclane(&[p("extract-basis"), &d.path("c.emb"), p("1")]);
    assert_eq!(stdout(&o), "0 1 2\n");
}

#[test]
fn planarity_verdicts() {
    let d = Dir::new();
    let k4 = d.file("k4.txt", K4);
    let k5 = d.file("k5.txt", &k5());
    for method in ["basis", "rotations"] {
        let o = maclane(&[p("planarity"), &k4, p("--method"), p(method)]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).starts_with("planar: yes\n"));
        let o = maclane(&[p("planarity"), &k5, p("--method"), p(method)]);
        assert_eq!(o.status.code(), Some(1));
        assert!(stdout(&o).starts_with("planar: no\n"));
    }
    let o = maclane(&[p("planarity"), &k5, p("--budget"), p("10")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("planar: unknown(10)\n"));

    let o = maclane_env(&[p("planarity"), &k5], Some("10"));
    assert_eq!(o.status.code(), Some(3));
    let o = maclane_env(
        &[p("planarity"), &k5, p("--budget"), p("1000000")],
        Some("10"),
    );
    assert_eq!(o.status.code(), Some(1));
    let o = maclane_env(&[p("planarity"), &k5], Some("lots"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn planarity_of_general_graphs_goes_by_blocks() {
    let d = Dir::new();
    // two triangles joined by a bridge
    let g = d.file(
        "g.txt",
        "graph 6 7\n0 0 1\n1 1 2\n2 2 0\n3 2 3\n4 3 4\n5 4 5\n6 5 3\n",
    );
    let o = maclane(&[p("planarity"), &g]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches("block ").count(), 3);
    assert!(out.contains("  bridge\n"));
}

#[test]
fn certificate_embedding_is_planar() {
    let d = Dir::new();
    let k4 = d.file("k4.txt", K4);
    let out = stdout(&maclane(&[p("planarity"), &k4]));
    let rotation: String = out
        .lines()
        .filter_map(|l| l.strip_prefix("  rotation "))
        .map(|l| format!("{l}\n"))
        .collect();
    let emb = maclane::io::read_embedding(&rotation).unwrap();
    assert!(emb.is_planar().unwrap());
}

#[test]
fn generators() {
    let o = maclane(&[p("gen"), p("enumerate"), p("--max-vertices"), p("4")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("graph ").count(), 4 + 4);

    let d = Dir::new();
    let emb = d.path("r.emb");
    let args = [
        p("gen"),
        p("random"),
        p("--seed"),
        p("5"),
        p("--vertices"),
        p("12"),
        p("--embedding"),
        &emb,
    ];
    let a = maclane(&args);
    let b = maclane(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let g = maclane::io::read_graph(&stdout(&a)).unwrap();
    assert_eq!(g.vertex_count(), 12);
    let e = maclane::io::read_embedding(&fs::read_to_string(&emb).unwrap()).unwrap();
    assert_eq!(e.graph(), &g);

    let o = maclane(&[
        p("gen"),
        p("enumerate"),
        p("--max-vertices"),
        p("3"),
        p("--multiplicity"),
        p("3"),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn render_is_deterministic() {
    let d = Dir::new();
    let g = d.file("k4.txt", K4);
    let b = d.file("b.txt", K4_TRIANGLES);
    let emb = d.path("k4.emb");
    maclane(&[p("embed"), &g, &b, p("--out"), &emb]);
    let (one, two) = (d.path("1.svg"), d.path("2.svg"));
    assert_eq!(
        maclane(&[p("render"), &emb, p("--out"), &one])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        maclane(&[p("render"), &emb, p("--out"), &two])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(fs::read(&one).unwrap(), fs::read(&two).unwrap());
    let o = maclane(&[p("render"), &emb, p("--face"), p("7"), p("--out"), &one]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(maclane(&[p("frobnicate")]).status.code(), Some(2));
    assert_eq!(maclane(&[p("--help")]).status.code(), Some(0));
}

#[cfg(unix)]
#[test]
fn interrupt_exits_with_budget_code() {
    use std::process::Stdio;
    use std::time::Duration;

    let d = Dir::new();
    let mut k7 = String::from("graph 7 21\n");
    let mut id = 0;
    for a in 0..7 {
        for b in a + 1..7 {
            k7 += &format!("{id} {a} {b}\n");
            id += 1;
        }
    }
    let g = d.file("k7.txt", &k7);
    let mut child = Command::new(env!("CARGO_BIN_EXE_maclane"))
        .args([
            p("planarity"),
            &g,
            p("--method"),
            p("rotations"),
            p("--budget"),
            p("18446744073709551615"),
        ])
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    std::thread::sleep(Duration::from_millis(500));
    let killed = Command::new("kill")
        .args(["-INT", &child.id().to_string()])
        .status()
        .unwrap();
    assert!(killed.success());
    for _ in 0..100 {
        if let Some(status) = child.try_wait().unwrap() {
            assert_eq!(status.code(), Some(3));
            return;
        }
        std::thread::sleep(Duration::from_millis(100));
    }
    child.kill().unwrap();
    panic!("interrupt was ignored");
}
