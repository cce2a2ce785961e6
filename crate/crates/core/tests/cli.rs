use std::process::Command;

use gridpal::cli::{run, Io};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gridpal(args: &[&str], stdin: &str) -> Output {
    gridpal_env(args, stdin, None)
}

fn gridpal_env(args: &[&str], stdin: &str, budget_env: Option<&str>) -> Output {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut io = Io {
        stdin: &mut input,
        stdout: &mut out,
        stderr: &mut err,
        budget_env: budget_env.map(str::to_string),
    };
    let code = run(
        std::iter::once("gridpal").chain(args.iter().copied()),
        &mut io,
    );
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

const EXAMPLE: &str = "abca\nbcca\naccb\nacba\n";

#[test]
fn analyze_golden() {
    let o = gridpal(&["analyze"], EXAMPLE);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(
        o.stdout,
        "shape: 4x4\n\
         alphabet: {a,b,c}\n\
         2D-palindrome: yes\n\
         HV-palindrome: no\n\
         borders: 3\n\
         center: row 2|3 col 2|3\n\
         factors: pal2d=12 hv=9 horizontal=4 vertical=4 trivial=3\n"
    );
}

#[test]
fn analyze_json() {
    let o = gridpal(&["analyze", "--format", "json", "-"], "ab\nba\n");
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["is_2d_palindrome"], true);
    assert_eq!(v["is_hv_palindrome"], false);
    assert_eq!(v["factor_counts"]["pal2d"], 3);
    assert_eq!(v["factor_counts"]["hv"], 2);
}

#[test]
fn enumerate_golden() {
    let o = gridpal(&["enumerate"], "ab\nba\n");
    assert_eq!(
        o.stdout,
        "size=1x1\na\n\nsize=1x1\nb\n\nsize=2x2\nab\nba\n\nkind=pal2d count=3\n"
    );
    let o = gridpal(&["enumerate", "--kind", "trivial"], EXAMPLE);
    assert!(o.stdout.ends_with("kind=trivial count=3\n"));
}

#[test]
fn pattern_golden() {
    let o = gridpal(&["pattern"], EXAMPLE);
    assert_eq!(
        o.stdout,
        "occurrence i1=1 i2=4 j1=2 j2=3 x=b y=c\nbc\ncc\ncc\ncb\n"
    );
    let o = gridpal(&["pattern"], "aab\nabb\n");
    assert_eq!(o.stdout, "none\n");
    let o = gridpal(&["pattern", "--format", "json"], "aba\n");
    assert_eq!(o.stdout.trim(), "null");
}

#[test]
fn decompose_golden() {
    let o = gridpal(&["decompose"], "aba\nbcb\naba\n");
    assert_eq!(
        o.stdout,
        "shape: 3x3\nparity: 1 1\nu:\na\np1:\nb\np2:\nb\nx: c\n"
    );
    let o = gridpal(&["decompose"], "abba\nabba\n");
    assert_eq!(
        o.stdout,
        "shape: 2x4\nparity: 0 0\nu:\nab\np1: absent\np2: absent\nx: absent\n"
    );
    let o = gridpal(&["decompose"], "ab\nba\n");
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("not an HV-palindrome"));
}

#[test]
fn conjugates_lists_witnesses() {
    let o = gridpal(&["conjugates"], "abc\ncbb\nbbc\ncba\n");
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("class size=12\n"));
    assert!(o.stdout.contains("palindromic size=2 bound=2\n"));
    assert!(o
        .stdout
        .contains("rotation cols=0 rows=2\nbbc\ncba\nabc\ncbb\n"));
    assert!(o.stdout.ends_with("hv-palindromic size=0\n"));
}

#[test]
fn construct_golden() {
    let o = gridpal(
        &["construct", "--family", "binary-min", "--periods", "1", "1"],
        "",
    );
    assert_eq!(o.stdout, "ababba\nbabbaa\nabbaab\nbbaaba\nbaabab\naababb\n");
    let o = gridpal(
        &[
            "construct",
            "--family",
            "q-min",
            "--q",
            "3",
            "--periods",
            "1",
            "1",
        ],
        "",
    );
    assert_eq!(o.stdout, "abc\nbca\ncab\n");
}

#[test]
fn bound_golden() {
    let cases: [(&[&str], &str); 4] = [
        (
            &["--family", "max-hv-in-word", "--m", "4", "--n", "4"],
            "family=max-hv-in-word m=4 n=4 value=20\n",
        ),
        (
            &["--family", "count-hv", "--q", "3", "--m", "3", "--n", "3"],
            "family=count-hv q=3 m=3 n=3 value=81\n",
        ),
        (
            &["--family", "min-hv-infinite", "--q", "2"],
            "family=min-hv-infinite q=2 value=14\n",
        ),
        (
            &["--family", "max-pal-in-2row", "--n", "4", "--palindromic"],
            "family=max-pal-in-2row n=4 palindromic value=8\n",
        ),
    ];
    for (args, want) in cases {
        let mut full = vec!["bound"];
        full.extend_from_slice(args);
        assert_eq!(gridpal(&full, "").stdout, want, "{args:?}");
    }
    let o = gridpal(&["bound", "--family", "max-hv-in-word", "--m", "4"], "");
    assert_eq!(o.code, 1);
}

#[test]
fn search_is_deterministic() {
    let args = [
        "search",
        "--q",
        "2",
        "--shape",
        "3",
        "3",
        "--kind",
        "hv",
        "--witnesses",
        "2",
    ];
    let a = gridpal(&args, "");
    assert_eq!(a.code, 0);
    assert_eq!(
        a.stdout,
        "q=2 shape=3x3 kind=hv objective=max optimum=10 words=512\n\naaa\nabb\naba\n\naaa\nbba\naba\n"
    );
    let mut threaded = args.to_vec();
    threaded.extend(["--threads", "3"]);
    assert_eq!(gridpal(&threaded, "").stdout, a.stdout);
    let json = gridpal(&["--format", "json", "search", "--shape", "2", "2"], "");
    assert_eq!(
        json.stdout,
        gridpal(&["--format", "json", "search", "--shape", "2", "2"], "").stdout
    );
}

#[test]
fn budget_flag_and_env() {
    let o = gridpal(&["search", "--shape", "4", "4", "--budget", "100"], "");
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("budget"), "{}", o.stderr);
    let o = gridpal_env(&["search", "--shape", "4", "4"], "", Some("100"));
    assert_eq!(o.code, 1);
    let o = gridpal_env(&["search", "--shape", "2", "2"], "", Some("100"));
    assert_eq!(o.code, 0);
    let o = gridpal_env(&["search", "--shape", "2", "2"], "", Some("lots"));
    assert_eq!(o.code, 2);
}

#[test]
fn verify_table1_passes() {
    let o = gridpal(&["verify-table1"], "");
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o
        .stdout
        .contains("4x4 achieved=19 expected=19 bound=20 gap=1 ok\n"));
    assert!(o.stdout.ends_with("table1: 8/8 rows match\n"));
}

#[test]
fn input_errors_exit_one() {
    let o = gridpal(&["analyze"], "ab\na\n");
    assert_eq!(o.code, 1);
    assert_eq!(
        o.stderr,
        "gridpal: <stdin>: line 2: row has 1 symbols, expected 2\n"
    );
    let o = gridpal(&["analyze", "/nonexistent/grid.txt"], "");
    assert_eq!(o.code, 1);
    assert!(o
        .stderr
        .starts_with("gridpal: cannot read /nonexistent/grid.txt"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["search", "--kind", "vertical", "--shape", "2", "2"],
        &["enumerate", "--kind", "diagonal"],
        &["construct"],
    ] {
        let o = gridpal(args, "");
        assert_eq!(o.code, 2, "{args:?}");
        assert_eq!(o.stderr.lines().count(), 1, "{}", o.stderr);
    }
}

#[test]
fn non_ascii_symbols_warn() {
    let o = gridpal(&["analyze"], "αβα\n");
    assert_eq!(o.code, 0);
    assert!(o.stderr.contains("non-ASCII"));
    assert!(o.stdout.contains("HV-palindrome: yes"));
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_gridpal");
    let dir = std::env::temp_dir().join(format!("gridpal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("example.grid");
    std::fs::write(&path, EXAMPLE).unwrap();

    let out = Command::new(exe)
        .arg("pattern")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("occurrence i1=1 i2=4 j1=2 j2=3"));

    let out = Command::new(exe).arg("--bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(exe)
        .args(["search", "--shape", "4", "4"])
        .env("GRIDPAL_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}
