use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_layerconvex"))
}

#[test]
fn trial_budget_comes_from_environment() {
    let out = bin()
        .args([
            "estimate", "--d", "2", "--r", "0", "--n", "3", "--seed", "1",
        ])
        .env("LAYERCONVEX_TRIALS", "37")
        .output()
        .unwrap();
    assert!(out.status.success());
    let rec: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec["parameters"]["trials"], 37);

    let out = bin()
        .args([
            "estimate", "--d", "2", "--r", "0", "--n", "3", "--trials", "5",
        ])
        .env("LAYERCONVEX_TRIALS", "37")
        .output()
        .unwrap();
    let rec: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec["parameters"]["trials"], 5);
}

#[test]
fn process_exit_codes() {
    let code = |args: &[&str]| {
        bin()
            .args(args)
            .env_remove("LAYERCONVEX_TRIALS")
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(
        code(&["bounds", "--d", "4", "--r", "0.5", "--alpha", "0.1"]),
        Some(0)
    );
    assert_eq!(
        code(&["estimate", "--d", "0", "--r", "0", "--n", "3"]),
        Some(2)
    );
    assert_eq!(code(&["validate", "--level", "nope"]), Some(2));
    assert_eq!(
        code(&[
            "sweep",
            "--d-range",
            "3..4",
            "--r",
            "0.5",
            "--alpha",
            "0.1",
            "--out",
            "/nonexistent/dir/x.csv"
        ]),
        Some(3)
    );
}
