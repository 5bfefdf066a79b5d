use std::process::{Command, Output};

fn fsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsig")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_prints_exact_and_decimal() {
    for args in [
        ["eval", "--variety", "bl_p2", "--divisor", "2,-1"],
        ["eval", "--variety", "bl_p2", "--class", "2H-1E"],
        ["eval", "--variety", "bl_p2", "--divisor", "0,0,2,-1"],
    ] {
        let o = fsig(&args);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), "s = 5/12 ≈ 0.416666666667\nvol = 3\n");
    }
    let o = fsig(&["eval", "--variety", "p1xp1", "--class", "1,2"]);
    assert!(stdout(&o).starts_with("s = 1/4 ≈ 0.250000000000\n"));
}

#[test]
fn non_ample_eval_points_to_the_extension() {
    let o = fsig(&["eval", "--variety", "bl_p2", "--class", "1H-1E"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("boundary_limit"));
}

#[test]
fn input_errors_exit_with_two() {
    let cases: [&[&str]; 9] = [
        &["bogus"],
        &["eval", "--variety", "nowhere", "--class", "1"],
        &["eval", "--variety", "bl_p2"],
        &["eval", "--variety", "bl_p2", "--class", "2X"],
        &["eval", "--variety", "bl_p2", "--divisor", "1,2,3"],
        &["freerank", "--variety", "p1", "--class", "1/2", "--p", "2", "--e", "1"],
        &["freerank", "--variety", "p1", "--class", "1", "--p", "4", "--e", "1"],
        &["grid", "--variety", "bl_p2", "--range", "1-2", "--range", "0:1"],
        &["check", "--suite", "nonsense"],
    ];
    for args in cases {
        assert_eq!(fsig(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn freerank_table() {
    let o = fsig(&["freerank", "--variety", "p1", "--class", "2", "--p", "3", "--e", "2"]);
    assert_eq!(stdout(&o), "e,a_e,normalized,error\n1,5,5/9,1/18\n2,41,41/81,1/162\n");
    let o = fsig(&["freerank", "--variety", "p1", "--class", "1", "--p", "2", "--e", "3"]);
    let a: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().to_string()).collect();
    assert_eq!(a, ["4", "16", "64"]);
}

#[test]
fn budget_overrun_exits_with_one() {
    let o = fsig(&["freerank", "--variety", "p3", "--class", "1", "--p", "3", "--e", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget"));
}

#[test]
fn grid_is_stable_and_sorted() {
    let args = ["grid", "--variety", "bl_p2", "--range", "1:3", "--range", "0:1", "--step", "1/4"];
    let first = fsig(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, fsig(&args).stdout);
    let text = stdout(&first);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x1,x2,kind,norm,s,vol,bound,ratio"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9 * 5);
    // the b = 0 edge carries the extension 1/(2a)
    let edge: Vec<(&str, &str)> = rows.iter().filter(|r| r[1] == "0").map(|r| (r[0], r[4])).collect();
    assert_eq!(edge[0], ("1", "1/2"));
    assert_eq!(edge[4], ("2", "1/4"));
    assert_eq!(edge[8], ("3", "1/6"));
    assert!(rows.iter().any(|r| r[2] == "nef_not_big" && r[4] == "0"));
}

#[test]
fn product_grid_is_symmetric() {
    let o = fsig(&["grid", "--variety", "p1xp1", "--range", "1:3", "--range", "1:3", "--step", "1/2"]);
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    for r in &rows {
        let mirror = rows.iter().find(|m| m[0] == r[1] && m[1] == r[0]).unwrap();
        assert_eq!(r[4], mirror[4]);
    }
}

#[test]
fn empty_range_gives_header_only() {
    let o = fsig(&["grid", "--variety", "bl_p2", "--range", "3:1", "--range", "0:1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1,x2,kind,norm,s,vol,bound,ratio\n");
    let o = fsig(&["plotdata", "--variety", "bl_p2", "--range", "3:1", "--range", "0:1"]);
    assert_eq!(stdout(&o), "x1,x2,z,kind\n");
}

#[test]
fn grid_outside_the_nef_cone_fails() {
    let o = fsig(&["grid", "--variety", "bl_p2", "--range", "1:1", "--range", "2:2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_reports_are_versioned_json() {
    let o = fsig(&["check", "--suite", "degrees", "--p", "2", "--e", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["version"], 1);
    assert_eq!(json["pass"], true);
    assert_eq!(json["suites"][0]["suite"], "degrees");
    assert!(stderr(&o).contains("degrees: PASS"));
}

#[test]
fn printed_rationals_reparse() {
    let o = fsig(&["grid", "--variety", "p1xp1", "--range", "1/2:2", "--range", "1:2", "--step", "1/3"]);
    let text = stdout(&o);
    for line in text.lines().skip(1) {
        for (i, field) in line.split(',').enumerate() {
            if i != 2 && !field.is_empty() {
                fsig::geometry::parse_rational(field).unwrap();
            }
        }
    }
}

#[test]
fn variety_files_are_accepted() {
    let fan = fsig::toric::catalog::bl_p2();
    let path = std::env::temp_dir().join(format!("fsig-cli-{}.json", std::process::id()));
    std::fs::write(&path, fan.to_json()).unwrap();
    let o = fsig(&["eval", "--variety", path.to_str().unwrap(), "--divisor", "0,0,2,-1"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(stdout(&o), "s = 5/12 ≈ 0.416666666667\nvol = 3\n");
}

#[test]
fn thread_count_from_the_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_fsig"))
            .env("FSIG_THREADS", threads)
            .args(["grid", "--variety", "p1xp1", "--range", "1:2", "--range", "1:2", "--step", "1/2"])
            .output()
            .unwrap()
    };
    assert_eq!(run("1").stdout, run("3").stdout);
    assert_eq!(run("0").status.code(), Some(2));
}

#[test]
fn list_names_every_builtin() {
    let text = stdout(&fsig(&["list"]));
    for name in fsig::toric::catalog::BUILTIN_NAMES {
        assert!(text.lines().any(|l| l.starts_with(name)));
    }
}
