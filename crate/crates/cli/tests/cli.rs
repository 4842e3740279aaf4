use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_peritwist"));
    c.env_remove("TWIST_MAX_N");
    c
}

fn specs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn read(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

fn verify(spec: &Path, suite: &str, extra: &[&str], out: &Path) -> Output {
    let mut args = vec!["verify", "--spec", spec.to_str().unwrap(), "--suite", suite, "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn checks(doc: &Value) -> Vec<&Value> {
    doc["reports"].as_array().unwrap().iter().collect()
}

fn find<'a>(doc: &'a Value, prefix: &str) -> Vec<&'a Value> {
    checks(doc).into_iter().filter(|r| r["check"].as_str().unwrap().starts_with(prefix)).collect()
}

#[test]
fn algebra_dumps_basis() {
    let dir = tempfile::tempdir().unwrap();
    for (n, dim) in [("3", 8), ("7", 48)] {
        let out = dir.path().join(format!("sl{n}.json"));
        let o = run(&["algebra", "--n", n, "--json", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let v = read(&out);
        assert_eq!(v["basis"].as_array().unwrap().len(), dim);
        assert_eq!(v["schema"], "1");
    }
    let o = run(&["algebra", "--n", "3"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 8);
}

#[test]
fn algebra_rejects_bad_n() {
    assert_eq!(code(&run(&["algebra", "--n", "1"])), 2);
    assert_eq!(code(&run(&["algebra", "--n", "9"])), 2);
    assert_eq!(code(&run(&["algebra", "--n", "x"])), 2);
    let o = bin().args(["algebra", "--n", "9"]).env("TWIST_MAX_N", "9").output().unwrap();
    assert_eq!(code(&o), 0);
    let o = bin().args(["algebra", "--n", "3"]).env("TWIST_MAX_N", "lots").output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn sl4_enlarged_chain_passes_everything() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = verify(&specs().join("sl4_enlarged.json"), "all", &["--seed", "11"], &out);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = read(&out);
    assert_eq!(doc["pass"], true);
    assert!(doc["caveat"].as_str().unwrap().contains("necessary but not sufficient"));
    assert_eq!(find(&doc, "drinfeld/").len(), 3);
    assert_eq!(find(&doc, "carrier/")[0]["notes"]["carrier_dim"], "8");
    assert_eq!(find(&doc, "coproducts/table-enlarged")[0]["pass"], true);
}

#[test]
fn non_twist_fails_with_residual() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = verify(&specs().join("non_twist.json"), "drinfeld", &[], &out);
    assert_eq!(code(&o), 1);
    let doc = read(&out);
    assert_eq!(doc["pass"], false);
    let d = &find(&doc, "drinfeld/")[0];
    assert_eq!(d["pass"], false);
    assert!(d["residual_support"].as_u64().unwrap() > 0);
}

#[test]
fn input_errors_exit_2_and_still_write_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = verify(&dir.path().join("missing.json"), "all", &[], &out);
    assert_eq!(code(&o), 2);
    assert!(read(&out)["error"].as_str().unwrap().contains("missing.json"));

    let cases = [
        "{\"N\": 3,",
        "[]",
        "{\"N\": 3, \"links\": [{\"k\": 0, \"psi\": \"1/0\"}]}",
        "{\"N\": 3, \"links\": [{\"k\": 5, \"psi\": \"1\"}]}",
        "{\"N\": 3, \"bogus\": 1}",
        "{\"N\": 1}",
        "{\"N\": 12, \"links\": []}",
        "{\"N\": 3, \"raw_factors\": [{\"left\": \"H(1,2)\", \"right\": \"H(1,2)\", \"coeff\": \"1\"}]}",
        "{\"N\": 3, \"raw_factors\": [{\"left\": \"Q\", \"right\": \"E(1,2)\", \"coeff\": \"1\"}]}",
    ];
    for (i, text) in cases.iter().enumerate() {
        let spec = dir.path().join(format!("bad{i}.json"));
        fs::write(&spec, text).unwrap();
        let o = verify(&spec, "all", &[], &out);
        assert_eq!(code(&o), 2, "{text}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!String::from_utf8_lossy(&o.stderr).contains("panicked"), "{text}");
        assert_eq!(read(&out)["pass"], false);
    }
    let o = verify(&specs().join("sl4_enlarged.json"), "everything", &[], &out);
    assert_eq!(code(&o), 2);
    let o = verify(&specs().join("sl4_enlarged.json"), "qybe", &["--rep", "spin"], &out);
    assert_eq!(code(&o), 2);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for out in [&a, &b] {
        assert_eq!(code(&verify(&specs().join("sl7_nu_rho.json"), "all", &["--seed", "5"], out)), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn adjoint_representation_and_op_dump() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let ops = dir.path().join("ops.json");
    let spec = dir.path().join("sl3.json");
    fs::write(&spec, r#"{"schema":"1","N":3,"links":[{"k":0,"psi":"2/3"}],"enlargement":{"jordanian":{"zeta":["-3"]}}}"#)
        .unwrap();
    let o = verify(&spec, "qybe", &["--rep", "adjoint", "--dump-ops", ops.to_str().unwrap()], &out);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = read(&out);
    assert_eq!(find(&doc, "qybe/")[0]["rep"], "adjoint");
    let d = read(&ops);
    assert_eq!(d["F"]["leg_dim"], 8);
    assert!(!d["R"]["triplets"].as_array().unwrap().is_empty());
}

#[test]
fn worked_examples() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["sl3", "sl4", "sl7"] {
        let o = run(&["example", name, "--out", dir.path().to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{name}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let sl4 = read(&dir.path().join("sl4.json"));
    assert_eq!(find(&sl4, "coproducts/table-chain")[0]["pass"], true);
    assert!(find(&sl4, "carrier/").iter().all(|r| r["notes"]["carrier_dim"] == "8"));
    let sl7 = read(&dir.path().join("sl7.json"));
    let g = &find(&sl7, "g-decomposition/sl7")[0];
    assert_eq!(g["notes"]["ideal_dim"], "12");
    assert_eq!(g["notes"]["part_dims"], "6 6");
    let sl3 = read(&dir.path().join("sl3.json"));
    assert!(find(&sl3, "carrier-iso/sl3/F_JJ~F_JE_P").iter().all(|r| r["pass"] == true));
    assert_eq!(code(&run(&["example", "sl5", "--out", dir.path().to_str().unwrap()])), 2);
}
