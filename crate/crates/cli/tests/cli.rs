use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn qtc(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtc")).args(args).current_dir(dir).output().expect("qtc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qtc-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn unit_word(n: usize, pos: usize, value: u32) -> String {
    (0..n).map(|i| if i == pos { value.to_string() } else { "0".into() }).collect::<Vec<_>>().join(",")
}

#[test]
fn paper_example_reports_every_checkpoint() {
    let o = qtc(&["paper-example"], &scratch("example"));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("syndromes: a^66, a^50, a^34"), "{out}");
    assert!(out.contains("Lambda_1 = a^64"));
    assert!(out.contains("error locations: {8}"));
    assert!(out.contains("decoded: zero codeword; e_{8,1}=1"));
}

#[test]
fn workfactor_single_and_grid() {
    let dir = scratch("wf");
    let o = qtc(&["workfactor", "--m", "2", "--ell", "2", "--eps", "1"], &dir);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("W=16"));
    let o = qtc(&["workfactor", "--m", "2..3", "--ell", "2", "--eps", "1,2"], &dir);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 5, "{out}");
    assert!(out.lines().next().unwrap().starts_with("m,ell,eps,W"));
    let o = qtc(&["--json", "workfactor", "--m", "2", "--ell", "2", "--eps", "1"], &dir);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["w"]["value"], "16");
    assert_eq!(v[0]["w_min"]["value"], "32");
}

#[test]
fn usage_errors_exit_two() {
    let dir = scratch("usage");
    assert_eq!(qtc(&["--bogus"], &dir).status.code(), Some(2));
    assert_eq!(qtc(&["workfactor", "--m", "x", "--ell", "2", "--eps", "1"], &dir).status.code(), Some(2));
    assert_eq!(qtc(&["keygen", "--params", "3,5", "--seed", "1", "--out-pub", "a", "--out-priv", "b"], &dir).status.code(), Some(2));
    assert_eq!(qtc(&[], &dir).status.code(), Some(2));
}

#[test]
fn qfs_check_values() {
    let dir = scratch("qfs");
    let o = qtc(&["--json", "qfs-check", "--q", "3", "--m", "5", "--ell", "100"], &dir);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["satisfied"], true);
    let o = qtc(&["--json", "qfs-check", "--q", "3", "--m", "100", "--ell", "2"], &dir);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["satisfied"], false);
}

#[test]
fn decode_success_and_failure() {
    let dir = scratch("decode");
    assert_eq!(qtc(&["code", "example", "--out-code", "c.json", "--out-config", "cfg.json"], &dir).status.code(), Some(0));
    let o = qtc(&["decode", "--code", "c.json", "--config", "cfg.json", "--word", &unit_word(20, 17, 2)], &dir);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("codeword: 00000000000000000000"));
    let heavy = "1,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,1,0";
    let o = qtc(&["decode", "--code", "c.json", "--word", heavy], &dir);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("DECODING FAILURE"));
    let o = qtc(&["--json", "decode", "--code", "c.json", "--word", heavy], &dir);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "failure");
    let o = qtc(&["oracle", "distance", "--code", "c.json"], &dir);
    assert!(stdout(&o).contains("minimum distance: 4"));
    let o = qtc(&["bound", "--code", "c.json", "--a", "6", "--n1", "1", "--delta", "4"], &dir);
    assert!(stdout(&o).starts_with("d* = 4"));
}

#[test]
fn missing_input_is_a_domain_error() {
    let dir = scratch("missing");
    let o = qtc(&["--json", "code", "info", "--code", "absent.json"], &dir);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "io");
}

#[test]
fn key_round_trip_through_files() {
    let dir = scratch("keys");
    let o = qtc(&["keygen", "--params", "3,5,4,2", "--seed", "11", "--out-pub", "pub.json", "--out-priv", "priv.txt"], &dir);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let private = std::fs::read_to_string(dir.join("priv.txt")).unwrap();
    assert!(private.lines().next().unwrap().contains("NOT FOR PRODUCTION USE"));
    for pos in [0, 7, 19] {
        let msg = unit_word(20, pos, 2);
        let o = qtc(&["--json", "encrypt", "--pub", "pub.json", "--msg", &msg], &dir);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let ct: Vec<String> = v["ciphertext"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
        let o = qtc(&["--json", "decrypt", "--priv", "priv.txt", "--ct", &ct.join(",")], &dir);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let got: Vec<String> = v["message"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(got.join(","), msg);
    }
    let o = qtc(&["encrypt", "--pub", "pub.json", "--msg", &format!("1,{}", unit_word(19, 3, 1))], &dir);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn manifest_replay_is_byte_identical() {
    let dir = scratch("manifest");
    let o = qtc(
        &["--manifest", "m.json", "keygen", "--params", "3,7,3,2", "--seed", "5", "--out-pub", "p.json", "--out-priv", "k.txt"],
        &dir,
    );
    assert_eq!(o.status.code(), Some(0));
    let first_pub = std::fs::read(dir.join("p.json")).unwrap();
    let first_priv = std::fs::read(dir.join("k.txt")).unwrap();
    let manifest: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.join("m.json")).unwrap()).unwrap();
    assert_eq!(manifest["seed"], 5);
    assert_eq!(manifest["command"], "keygen");
    assert!(!manifest["fields"].as_array().unwrap().is_empty());
    let r = qtc(&["replay", "m.json"], &dir);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
    assert_eq!(r.stdout, o.stdout);
    assert_eq!(std::fs::read(dir.join("p.json")).unwrap(), first_pub);
    assert_eq!(std::fs::read(dir.join("k.txt")).unwrap(), first_priv);

    let o = qtc(&["--manifest", "w.json", "paper-example"], &dir);
    let r = qtc(&["replay", "w.json"], &dir);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(r.stdout, o.stdout);

    let mut tampered = manifest.clone();
    tampered["stdout_sha256"] = "00".into();
    std::fs::write(dir.join("bad.json"), tampered.to_string()).unwrap();
    let r = qtc(&["replay", "bad.json"], &dir);
    assert_eq!(r.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&r.stderr).contains("replay mismatch"));
}
