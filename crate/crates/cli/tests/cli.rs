use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_transversal")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn generate_draw_verify() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("g.map");
    let coords = dir.path().join("g.txt");
    let svg = dir.path().join("g.svg");
    assert!(run(&["generate", "-n", "40", "--seed", "9", "-o", p(&map)]).status.success());
    let o = run(&["draw", p(&map), "--compact", "--svg", p(&svg), "--unit", "8", "-o", p(&coords)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let o = run(&["verify", p(&map), "--coords", p(&coords)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for row in ["map\tPASS", "partition\tPASS", "minimal\tyes", "structure\tPASS", "drawing\tPASS"] {
        assert!(text.contains(row), "{text}");
    }
}

#[test]
fn single_vertex_draws_on_two_by_two_grid() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("one.map");
    assert!(run(&["generate", "-n", "1", "-o", p(&map)]).status.success());
    let o = run(&["draw", p(&map)]);
    assert!(stdout(&o).starts_with("grid 2 2\n"));
}

#[test]
fn generation_is_reproducible() {
    let a = run(&["generate", "-n", "25", "--seed", "4"]);
    let b = run(&["generate", "-n", "25", "--seed", "4"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&run(&["generate", "-n", "25", "--seed", "5"])));
}

#[test]
fn close_then_open() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("t.txt");
    let map = dir.path().join("t.map");
    fs::write(&tree, "NNLLLNLLLL blue\n").unwrap();
    assert!(run(&["close", p(&tree), "-o", p(&map)]).status.success());
    assert_eq!(stdout(&run(&["open", p(&map)])), "NNLLLNLLLL blue\n");
    // without the root line the canonical root is used
    let text: String = fs::read_to_string(&map)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with("root"))
        .map(|l| format!("{l}\n"))
        .collect();
    fs::write(&map, text).unwrap();
    let o = run(&["open", p(&map)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim().split(' ').next().unwrap().len(), 10);
}

#[test]
fn corrupted_color_fails_c1() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("c.map");
    let text = stdout(&run(&["generate", "-n", "30", "--seed", "2"]));
    let bad = text.replacen("red >", "blue >", 1);
    fs::write(&map, bad).unwrap();
    let o = run(&["verify", p(&map)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("partition\tFAIL"));
    assert!(stdout(&o).contains("C1"));
    assert_eq!(run(&["draw", p(&map)]).status.code(), Some(1));
}

#[test]
fn off_grid_coordinates_fail() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("o.map");
    let coords = dir.path().join("o.txt");
    assert!(run(&["generate", "-n", "5", "-o", p(&map)]).status.success());
    let good = stdout(&run(&["draw", p(&map)]));
    let bad: String = good
        .lines()
        .map(|l| if l.starts_with("0\t") { "0\t99\t99".to_string() } else { l.to_string() } + "\n")
        .collect();
    fs::write(&coords, bad).unwrap();
    let o = run(&["verify", p(&map), "--coords", p(&coords)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("drawing\tFAIL\tnot planar"));
}

#[test]
fn separating_triangle_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("s.map");
    // vertex 5 sits inside the triangle 0 1 2
    let text = "planarmap 6\n0: 3 2 5 1 4\n1: 0 5 2 4\n2: 1 5 0 3\n3: 2 0 4\n4: 3 0 1\n5: 2 1 0\nouter: 1 2 3 4\n";
    fs::write(&map, text).unwrap();
    let o = run(&["verify", p(&map)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("map\tFAIL\tSEPARATING_TRIANGLE"), "{}", stdout(&o));
    let o = run(&["draw", p(&map)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("SEPARATING_TRIANGLE"));
}

#[test]
fn counts_and_series() {
    assert_eq!(stdout(&run(&["count", "4", "--rooted"])), "22\n");
    assert_eq!(stdout(&run(&["count", "2", "--unrooted"])), "1\n");
    assert_eq!(stdout(&run(&["count", "7", "--4connected"])), "241\n");
    let a = stdout(&run(&["series", "--which", "A", "--order", "4"]));
    assert!(a.ends_with("1\t1\n2\t3\n3\t12\n4\t55\n"), "{a}");
    let fg = stdout(&run(&["series", "--which", "FG", "--order", "3"]));
    assert_eq!(fg.lines().count(), 5);
}

#[test]
fn stats_rows() {
    let o = run(&["stats", "--sizes", "20,40", "--samples", "4", "--seed", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 2);
    assert_eq!(text, stdout(&run(&["stats", "--sizes", "20,40", "--samples", "4", "--seed", "1"])));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["count", "3"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "-n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["series", "--which", "Q", "--order", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn missing_file_exits_1() {
    let o = run(&["open", "/nonexistent/file.map"]);
    assert_eq!(o.status.code(), Some(1));
}
