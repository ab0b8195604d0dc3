use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn shiftchain(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftchain"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

struct Work {
    dir: TempDir,
}

impl Work {
    fn new() -> Self {
        Work {
            dir: TempDir::new().unwrap(),
        }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn run(&self, args: &[&str]) -> Output {
        shiftchain(args, self.dir.path())
    }

    fn write(&self, name: &str, text: &str) {
        fs::write(self.path(name), text).unwrap();
    }

    fn read(&self, name: &str) -> String {
        fs::read_to_string(self.path(name)).unwrap()
    }

    fn construct(&self, m: usize, name: &str) {
        let out = self.run(&["construct", &m.to_string(), "-o", name]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn construct_writes_file_and_trace() {
    let w = Work::new();
    let out = w.run(&["construct", "3", "-o", "h3.txt"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 1 1\n2 3 2\n3 8 6\n");
    let text = w.read("h3.txt");
    assert!(text.starts_with("SHIFTCHAIN v1\nm=3 n=8 t=6\n"));

    let one = w.run(&["construct", "1"]);
    assert_eq!(stdout(&one), "SHIFTCHAIN v1\nm=1 n=1 t=1\n1\n");

    assert_eq!(code(&w.run(&["construct", "9"])), 2);
}

#[test]
fn construct_limit_comes_from_config() {
    let w = Work::new();
    w.write("limits.conf", "# small\nconstruct_max_m=2\n");
    assert_eq!(
        code(&w.run(&["--config", "limits.conf", "construct", "3"])),
        2
    );
    assert_eq!(
        code(&w.run(&["--config", "limits.conf", "construct", "2"])),
        0
    );
    w.write("typo.conf", "construct_max=2\n");
    assert_eq!(
        code(&w.run(&["--config", "typo.conf", "construct", "2"])),
        2
    );
}

#[test]
fn construct_output_is_stable() {
    let w = Work::new();
    w.construct(4, "a.txt");
    w.construct(4, "b.txt");
    assert_eq!(w.read("a.txt"), w.read("b.txt"));
}

#[test]
fn validate_reports_bound() {
    let w = Work::new();
    w.construct(3, "h3.txt");
    let out = w.run(&["validate", "h3.txt"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "shift-chain: m=3 n=8 t=6\nedge bound: 6 <= 16\n"
    );

    w.write("cross.txt", "ORDEREDHG v1\nm=2 n=4 t=2\n1 4\n2 3\n");
    let out = w.run(&["validate", "cross.txt"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("not a shift-chain"));
}

#[test]
fn verify_exit_codes() {
    let w = Work::new();
    w.construct(3, "h3.txt");
    let none = w.run(&[
        "verify",
        "h3.txt",
        "--k",
        "3",
        "--mode",
        "polychromatic",
        "--oracle",
        "both",
    ]);
    assert_eq!(code(&none), 1);
    let text = stdout(&none);
    assert!(
        text.contains("exhaustive: no polychromatic 3-coloring (6561 nodes)"),
        "{text}"
    );
    assert!(
        text.contains("backtracking: no polychromatic 3-coloring"),
        "{text}"
    );

    let some = w.run(&["verify", "h3.txt", "--k", "3", "--witness", "w.txt"]);
    assert_eq!(code(&some), 0);
    assert_eq!(code(&w.run(&["check", "h3.txt", "w.txt"])), 0);

    w.write("bad.txt", "SHIFTCHAIN v1\nm=2 n=3 t=1\n3 1\n");
    assert_eq!(code(&w.run(&["verify", "bad.txt", "--k", "2"])), 2);
    assert_eq!(code(&w.run(&["verify", "missing.txt", "--k", "2"])), 2);
}

#[test]
fn verify_parallel_and_symmetry_flags_agree() {
    let w = Work::new();
    w.construct(3, "h3.txt");
    for extra in [
        &["--workers", "3"][..],
        &["--symmetry-breaking"],
        &["--workers", "2", "--symmetry-breaking"],
    ] {
        let mut args = vec!["verify", "h3.txt", "--k", "3", "--mode", "polychromatic"];
        args.extend_from_slice(extra);
        assert_eq!(code(&w.run(&args)), 1, "{extra:?}");
    }
}

#[test]
fn verify_exhaustive_cap_from_config() {
    let w = Work::new();
    w.construct(3, "h3.txt");
    w.write("tight.conf", "exhaustive_cap=100\n");
    let out = w.run(&[
        "--config",
        "tight.conf",
        "verify",
        "h3.txt",
        "--k",
        "3",
        "--oracle",
        "exhaustive",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn color_then_check() {
    let w = Work::new();
    for m in 2..=6 {
        let (inst, col) = (format!("h{m}.txt"), format!("c{m}.txt"));
        w.construct(m, &inst);
        assert_eq!(code(&w.run(&["color", &inst, "-o", &col])), 0);
        let out = w.run(&["check", &inst, &col]);
        assert_eq!(code(&out), 0, "m={m}");
        assert_eq!(stdout(&out), "proper: ok\n");
    }
    w.construct(1, "h1.txt");
    assert_eq!(code(&w.run(&["color", "h1.txt"])), 2);
}

#[test]
fn check_failures() {
    let w = Work::new();
    w.construct(3, "h3.txt");
    w.write("ones.txt", "COLORING v1\nn=8 k=1\n1 1 1 1 1 1 1 1\n");
    assert_eq!(code(&w.run(&["check", "h3.txt", "ones.txt"])), 1);
    w.write("short.txt", "COLORING v1\nn=3 k=1\n1 1 1\n");
    assert_eq!(code(&w.run(&["check", "h3.txt", "short.txt"])), 2);
    w.write("poly.txt", "COLORING v1\nn=8 k=3\n1 2 3 3 3 1 2 2\n");
    assert_eq!(
        code(&w.run(&["check", "h3.txt", "poly.txt", "--mode", "polychromatic"])),
        1
    );
}

#[test]
fn encode_decode_round_trip() {
    let w = Work::new();
    w.write("edge.txt", "SHIFTCHAIN v1\nm=3 n=3 t=1\n1 2 3\n");
    let out = w.run(&[
        "encode",
        "edge.txt",
        "--k",
        "3",
        "--mode",
        "polychromatic",
        "-o",
        "edge.cnf",
    ]);
    assert_eq!(code(&out), 0);
    let cnf = w.read("edge.cnf");
    assert!(
        cnf.starts_with("c shiftchain-lab polychromatic k=3\np cnf 9 15\n"),
        "{cnf}"
    );

    // Vertex 1 color 1, vertex 2 color 2, vertex 3 color 3.
    w.write("model.txt", "s SATISFIABLE\nv 1 -2 -3 -4 5 -6 -7 -8 9 0\n");
    let out = w.run(&["decode", "model.txt", "--n", "3", "--k", "3", "-o", "c.txt"]);
    assert_eq!(code(&out), 0);
    assert_eq!(w.read("c.txt"), "COLORING v1\nn=3 k=3\n1 2 3\n");
    assert_eq!(
        code(&w.run(&["check", "edge.txt", "c.txt", "--mode", "polychromatic"])),
        0
    );

    w.write("ambiguous.txt", "1 2 -3 -4 5 -6 -7 -8 9\n");
    assert_eq!(
        code(&w.run(&["decode", "ambiguous.txt", "--n", "3", "--k", "3"])),
        2
    );
}

#[test]
fn hunt_is_deterministic() {
    let w = Work::new();
    let args = [
        "hunt",
        "--m",
        "2",
        "--n-range",
        "3..7",
        "--edges-range",
        "1..8",
        "--seed",
        "9",
        "--budget",
        "50",
    ];
    let a = w.run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&w.run(&args)));
    assert!(stdout(&a).starts_with("instances tested: 50\n"));

    let empty = w.run(&[
        "hunt",
        "--m",
        "3",
        "--n-range",
        "3..5",
        "--edges-range",
        "1..3",
        "--budget",
        "0",
    ]);
    assert!(stdout(&empty).starts_with("instances tested: 0\n"));
    let enumerate = w.run(&[
        "hunt",
        "--m",
        "3",
        "--n-range",
        "3..5",
        "--edges-range",
        "1..3",
        "--strategy",
        "enumerate",
    ]);
    assert_eq!(code(&enumerate), 0);
    assert!(stdout(&enumerate).contains("uncertified candidates: 0"));

    assert_eq!(
        code(&w.run(&[
            "hunt",
            "--m",
            "3",
            "--n-range",
            "5..4",
            "--edges-range",
            "1"
        ])),
        2
    );
    assert_eq!(
        code(&w.run(&["hunt", "--m", "3", "--n-range", "x", "--edges-range", "1"])),
        2
    );
}

#[test]
fn render_writes_svg() {
    let w = Work::new();
    w.construct(3, "h3.txt");
    w.write("ones.txt", "COLORING v1\nn=8 k=1\n1 1 1 1 1 1 1 1\n");
    let out = w.run(&[
        "render",
        "h3.txt",
        "--coloring",
        "ones.txt",
        "--highlight-monochromatic",
        "-o",
        "h3.svg",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let svg = w.read("h3.svg");
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<polyline").count(), 6);
    assert_eq!(svg.matches("stroke-width=\"4\"").count(), 6);

    let plain = stdout(&w.run(&["render", "h3.txt"]));
    assert_eq!(plain.matches("<circle").count(), 8);
    assert_eq!(plain.matches("stroke-width=\"4\"").count(), 0);
    assert_eq!(plain, stdout(&w.run(&["render", "h3.txt"])));
    assert_eq!(
        code(&w.run(&["render", "h3.txt", "--highlight-monochromatic"])),
        2
    );
}

#[test]
fn union_reports_chain_status() {
    let w = Work::new();
    w.construct(3, "h3.txt");
    let out = w.run(&["union", "h3.txt", "h3.txt", "-o", "u.txt"]);
    assert_eq!(stdout(&out), "shift-chain: yes\n");
    assert_eq!(code(&w.run(&["validate", "u.txt"])), 0);
    assert_eq!(code(&w.run(&["verify", "u.txt", "--k", "3"])), 0);

    w.write("a.txt", "ORDEREDHG v1\nm=2 n=4 t=1\n1 4\n");
    w.write("b.txt", "ORDEREDHG v1\nm=2 n=4 t=1\n2 3\n");
    let out = w.run(&["union", "a.txt", "b.txt", "-o", "ab.txt"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "shift-chain: no\n");
    assert_eq!(w.read("ab.txt"), "ORDEREDHG v1\nm=2 n=4 t=2\n1 4\n2 3\n");
    assert_eq!(
        code(&w.run(&["verify", "ab.txt", "--k", "2", "--mode", "proper"])),
        0
    );

    w.write("c.txt", "ORDEREDHG v1\nm=2 n=5 t=1\n1 4\n");
    assert_eq!(code(&w.run(&["union", "a.txt", "c.txt"])), 2);
}

#[test]
fn written_files_round_trip() {
    let w = Work::new();
    w.construct(3, "h3.txt");
    let again = shiftchain(&["color", "h3.txt"], w.dir.path());
    let out = w.run(&["color", "h3.txt", "-o", "c.txt"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&again), w.read("c.txt"));
    // A SHIFTCHAIN file re-read through union with itself keeps its edges.
    w.run(&["union", "h3.txt", "h3.txt", "-o", "u.txt"]);
    let chain = w.read("h3.txt");
    let merged = w.read("u.txt");
    assert_eq!(
        chain.lines().skip(1).collect::<Vec<_>>(),
        merged.lines().skip(1).collect::<Vec<_>>()
    );
}
