use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;
use topsnut::graph::{generate, io::write_graph};
use topsnut::Labelling;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn topsnut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topsnut")).args(args).env_remove("TOPSNUT_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_string).collect()
}

fn has(o: &Output, line: &str) -> bool {
    lines(o).iter().any(|l| l == line)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn path_strings() {
    let (g, l) = (data("caterpillar.g"), data("caterpillar.lab"));
    let vv = topsnut(&["tbpaw", "path", "--graph", s(&g), "--labels", s(&l), "--path", "u1,u2,u3,u4,u5", "--kind", "vv"]);
    assert!(vv.status.success());
    assert!(has(&vv, "037102512"));
    let vev = topsnut(&["tbpaw", "path", "--graph", s(&g), "--labels", s(&l), "--path", "0,1,2,3,4", "--kind", "vev"]);
    assert!(has(&vev, "03737271015251312"));
}

#[test]
fn counts() {
    assert_eq!(lines(&topsnut(&["count", "tbpaws", "--q", "2"]))[0], "2880");
    assert_eq!(lines(&topsnut(&["count", "matrices", "--q", "4"]))[0], "384");
    assert_eq!(lines(&topsnut(&["count", "raw-pairs", "--q", "190"]))[0], "(570!)·(190!)·2^190");
    assert_eq!(topsnut(&["count", "raw-pairs", "--q", "900", "--expand"]).status.code(), Some(2));
    assert_eq!(lines(&topsnut(&["count", "partitions", "--m", "5", "--k", "2"]))[0], "3");
}

#[test]
fn six_c_round_trip_and_failure_exit() {
    let dir = TempDir::new().unwrap();
    let lab = dir.path().join("t13.lab");
    let made = topsnut(&["label", "--graph", s(&data("tree13.g")), "--scheme", "6c", "--out", s(&lab)]);
    assert!(made.status.success());
    let ok = topsnut(&["verify", "--scheme", "6c", "--graph", s(&data("tree13.g")), "--labels", s(&lab)]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(has(&ok, "k=13") && has(&ok, "k2=26") && has(&ok, "singularity=13"));
    // the scheme line in the file is enough
    let implicit = topsnut(&["verify", "--graph", s(&data("tree13.g")), "--labels", s(&lab)]);
    assert!(implicit.status.success());

    let wrong = topsnut(&["verify", "--scheme", "graceful", "--graph", s(&data("tree13.g")), "--labels", s(&lab)]);
    assert_eq!(wrong.status.code(), Some(1));
    assert!(lines(&wrong).iter().any(|l| l.starts_with("violated=")));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(topsnut(&["nonsense"]).status.code(), Some(2));
    assert_eq!(topsnut(&["verify", "--graph", "x.g"]).status.code(), Some(2));
    assert_eq!(topsnut(&["classify", "--graph", "/no/such/file"]).status.code(), Some(2));
    let bad = topsnut(&["verify", "--scheme", "nope", "--graph", s(&data("tree13.g")), "--labels", s(&data("caterpillar.lab"))]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn matrix_file_round_trip() {
    let dir = TempDir::new().unwrap();
    let m = dir.path().join("a.mat");
    let (g, l) = (data("caterpillar.g"), data("caterpillar.lab"));
    assert!(topsnut(&["matrix", "--graph", s(&g), "--labels", s(&l), "--out", s(&m)]).status.success());
    let direct = topsnut(&["tbpaw", "matrix", "--graph", s(&g), "--labels", s(&l), "--route", "met3"]);
    let again = topsnut(&["matrix", "--matrix", s(&m), "--route", "met3"]);
    assert!(again.status.success());
    assert_eq!(lines(&direct)[1], lines(&again)[1]);
}

#[test]
fn group_commands() {
    assert_eq!(lines(&topsnut(&["group", "add", "--n", "14", "--zero", "1", "2", "5"]))[0], "6");
    let t = data("tree13.g");
    let a = topsnut(&["group", "colour", "--graph", s(&t), "--n", "7", "--zero", "3", "--seed", "4"]);
    let b = topsnut(&["group", "colour", "--graph", s(&t), "--n", "7", "--zero", "3", "--seed", "4"]);
    assert!(a.status.success() && has(&a, "check=ok"));
    assert_eq!(a.stdout, b.stdout);
    let given = topsnut(&["group", "colour", "--graph", s(&t), "--n", "13", "--sequence", "1,2,3,4,5,6,7,8,9,10,11,12"]);
    assert!(has(&given, "sequence=1,2,3,4,5,6,7,8,9,10,11,12"));
    let short = topsnut(&["group", "colour", "--graph", s(&t), "--n", "13", "--sequence", "1,2"]);
    assert_eq!(short.status.code(), Some(2));
}

#[test]
fn seed_env_fallback_and_flag_agree() {
    let t = data("tree13.g");
    let flag = topsnut(&["group", "colour", "--graph", s(&t), "--n", "9", "--seed", "17"]);
    let env = Command::new(env!("CARGO_BIN_EXE_topsnut"))
        .args(["group", "colour", "--graph", s(&t), "--n", "9"])
        .env("TOPSNUT_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
}

fn base_files(dir: &Path) -> (PathBuf, PathBuf) {
    let h = generate::path(4);
    let l = Labelling::total(&h, &[0, 3, 1, 2], &[3, 2, 1]);
    let (gp, lp) = (dir.join("h.g"), dir.join("h.lab"));
    std::fs::write(&gp, write_graph(&h)).unwrap();
    std::fs::write(&lp, l.write(&h)).unwrap();
    (gp, lp)
}

#[test]
fn encrypt_is_deterministic_and_dumps() {
    let dir = TempDir::new().unwrap();
    let (h, f) = base_files(dir.path());
    let snap = dir.path().join("snap.g");
    std::fs::write(&snap, write_graph(&generate::preferential_attachment(50, 2, 7))).unwrap();
    let dump = dir.path().join("net.txt");
    let args = |tree: &'static str, policy: &'static str| {
        let mut v: Vec<String> = ["encrypt", "--graph", s(&snap), "--base", s(&h), "--labels", s(&f), "--n", "14"]
            .iter()
            .map(|x| x.to_string())
            .collect();
        v.extend(["--tree", tree, "--policy", policy, "--seed", "7"].map(String::from));
        v.extend(["--dump".to_string(), s(&dump).to_string()]);
        v
    };
    let run = |a: Vec<String>| topsnut(&a.iter().map(String::as_str).collect::<Vec<_>>());
    let one = run(args("a", "smallest"));
    let two = run(args("a", "smallest"));
    assert!(one.status.success() && has(&one, "check=ok") && has(&one, "blocks=99"));
    assert_eq!(one.stdout, two.stdout);
    let bytes: usize = lines(&one).iter().find_map(|l| l.strip_prefix("bytes=")).unwrap().parse().unwrap();
    assert_eq!(lines(&one)[0].len(), bytes);
    assert!(std::fs::read_to_string(&dump).unwrap().starts_with("host 50 49"));
    for (tree, policy) in [("b", "seeded:3"), ("c", "smallest")] {
        assert!(has(&run(args(tree, policy)), "check=ok"));
    }
}

#[test]
fn spanning_and_classify() {
    let t = data("tree13.g");
    let out = topsnut(&["spantree", "--graph", s(&t)]);
    assert!(has(&out, "edges=12") && has(&out, "leaves=9"));
    let dir = TempDir::new().unwrap();
    let tree = dir.path().join("t.g");
    assert!(topsnut(&["spantree", "--graph", s(&t), "--algo", "random", "--out", s(&tree)]).status.success());
    let c = topsnut(&["classify", "--graph", s(&tree)]);
    assert!(c.status.success() && has(&c, "leaf_identity=true") && has(&c, "kind=caterpillar"));
    let p = topsnut(&["spantree", "--graph", s(&t), "--algo", "predefined", "--require", "u5"]);
    assert!(lines(&p)[0].starts_with("dominating=") && lines(&p)[0].contains('4'));
}

#[test]
fn noise_round_trip() {
    let enc = topsnut(&[
        "noise",
        "--tokens",
        "11,1,2,3,1,34,1,34,1,4,5,1,4,5,1,56,1,56,1,6,7,11,1,34,1,2,3,11,11,2,22,1,0,1,33",
        "--table",
        "x=11,y=22,z=33,a=34,b=56",
    ]);
    let e = lines(&enc)[0].clone();
    assert_eq!(e, "x1231a1a1451451b1b167x1a123xx2y101z");
    let plain = lines(&enc).iter().find_map(|l| l.strip_prefix("plain=").map(String::from)).unwrap();
    let dec = topsnut(&["noise", "--decode", &e, "--table", "x=11,y=22,z=33,a=34,b=56"]);
    assert_eq!(lines(&dec)[0], plain);
    let letters = topsnut(&["noise", "--tokens", "1,2,3", "--letters", "3", "--seed", "5"]);
    let noisy = lines(&letters)[0].clone();
    assert_eq!(noisy.len(), 6);
    assert_eq!(lines(&topsnut(&["noise", "--decode", &noisy]))[0], "123");
}
