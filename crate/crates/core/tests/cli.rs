use std::process::{Command, Output};

fn popwilf(args: &[&str], workers: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_popwilf"))
        .args(args)
        .env("POPWILF_WORKERS", workers)
        .output()
        .expect("binary runs")
}

#[test]
fn output_is_independent_of_worker_count() {
    let runs: [&[&str]; 3] = [
        &["classify", "--family", "t4-iii", "--format", "json"],
        &["enumerate", "--pop", "pop 5: c[5>3>1>2], i[4]", "--n", "8"],
        &["conjecture", "dimitrov", "--horizon", "7"],
    ];
    for args in runs {
        let one = popwilf(args, "1");
        assert_eq!(one.status.code(), Some(0), "{args:?}");
        for workers in ["2", "5"] {
            assert_eq!(popwilf(args, workers).stdout, one.stdout, "{args:?} with {workers} workers");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(popwilf(&["enumerate", "--pop", "pop 3: c[1>2>3]", "--n", "5"], "1").status.code(), Some(0));
    assert_eq!(popwilf(&["enumerate", "--pop", "pop 3: c[1>]", "--n", "5"], "1").status.code(), Some(2));
    assert_eq!(popwilf(&["classify", "--family", "t9"], "1").status.code(), Some(2));
    assert_eq!(popwilf(&["enumerate", "--pop", "pop 1: i[1]", "--n", "12"], "1").status.code(), Some(2));
}

#[test]
fn writes_to_output_file() {
    let path = std::env::temp_dir().join(format!("popwilf-cli-{}.csv", std::process::id()));
    let out = popwilf(&["enumerate", "--pop", "pop 3: c[1>3], i[2]", "--n", "6", "-o", path.to_str().unwrap()], "2");
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(text, "n,count\n1,1\n2,2\n3,3\n4,5\n5,8\n6,13\n");
}
