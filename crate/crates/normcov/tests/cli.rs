use std::path::Path;
use std::process::{Command, Output};

use normcov::dto::{CertificateDto, ReportDto, VerifyReportDto, WitnessDto};

fn normcov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normcov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write_cert(dir: &Path, name: &str, n: &str, method: &str) -> String {
    let path = dir.join(name);
    let o = normcov(&["cover", "--n", n, "--method", method, "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path.to_str().unwrap().to_string()
}

#[test]
fn bounds_examples() {
    let o = normcov(&["bounds", "--n", "30"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("gamma = kappa = 7 [exact:6p]"));

    let o = normcov(&["bounds", "--n", "105", "--json"]);
    assert_eq!(code(&o), 0);
    let r: ReportDto = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.interval, [27, 30]);
    assert_eq!(r.exact, None);

    let o = normcov(&["bounds", "--n", "1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("undefined"));
    assert_eq!(code(&normcov(&["bounds"])), 2);
    assert_eq!(code(&normcov(&["bounds", "--n", "x"])), 2);
    assert_eq!(code(&normcov(&["frobnicate"])), 2);
}

#[test]
fn cover_examples() {
    let o = normcov(&["cover", "--n", "12", "--method", "two-primes"]);
    assert_eq!(code(&o), 0);
    let c: CertificateDto = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(c.classes.len(), 4);
    assert_eq!(c.claimed_size, 4);

    let o = normcov(&["cover", "--n", "9", "--method", "single"]);
    let c: CertificateDto = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(c.classes.len(), 4);

    assert_eq!(code(&normcov(&["cover", "--n", "6", "--method", "D"])), 2);
    assert_eq!(code(&normcov(&["cover", "--n", "8", "--method", "two-primes"])), 2);
    assert_eq!(code(&normcov(&["cover", "--n", "9", "--method", "single", "--p", "2"])), 2);
    assert_eq!(code(&normcov(&["cover", "--n", "9", "--method", "bogus"])), 2);
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_cert(dir.path(), "c2.json", "4", "single");
    let o = normcov(&["verify", "--certificate", &path, "--q", "2", "--json", "--elements"]);
    assert_eq!(code(&o), 0);
    let r: VerifyReportDto = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.uncovered.is_empty());
    assert_eq!(r.covered, r.total_shapes);
    let e = r.elements.unwrap();
    assert_eq!((e.elements, e.uncovered_elements, e.agrees_with_shapes), (20160, 0, true));

    // drop efs(2)
    let mut dto: CertificateDto = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    dto.classes.remove(0);
    dto.claimed_size -= 1;
    dto.method = normcov::dto::MethodDto::Custom;
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, serde_json::to_string(&dto).unwrap()).unwrap();
    let o = normcov(&["verify", "--certificate", broken.to_str().unwrap(), "--q", "2", "--json"]);
    assert_eq!(code(&o), 1);
    let r: VerifyReportDto = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.uncovered, vec![vec![[2, 2]], vec![[4, 1]]]);
    let o = normcov(&["verify", "--certificate", broken.to_str().unwrap(), "--q", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("uncovered shape [[2, 2]]"));

    assert_eq!(code(&normcov(&["verify", "--certificate", &path, "--q", "6"])), 2);
    assert_eq!(code(&normcov(&["verify", "--certificate", &path, "--q", "7"])), 2);
    let o = normcov(&["verify", "--certificate", &path, "--q", "7", "--max-q", "7"]);
    assert_eq!(code(&o), 0);
    let missing = dir.path().join("none.json");
    assert_eq!(code(&normcov(&["verify", "--certificate", missing.to_str().unwrap(), "--q", "2"])), 2);
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, r#"{"n":4,"group":"GL","method":"C_p","classes":[],"claimed_size":0,"x":1}"#).unwrap();
    assert_eq!(code(&normcov(&["verify", "--certificate", junk.to_str().unwrap(), "--q", "2"])), 2);
}

#[test]
fn verify_probe_lists_each_class() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_cert(dir.path(), "c.json", "4", "single");
    let o = normcov(&["verify", "--certificate", &path, "--q", "2", "--json", "--probe-minimality"]);
    assert_eq!(code(&o), 0);
    let r: VerifyReportDto = serde_json::from_str(&stdout(&o)).unwrap();
    let probe = r.minimality.unwrap();
    assert_eq!(probe.len(), 2);
    assert_eq!(probe[1].class, "sss(1)");
    assert!(probe[1].witness.is_some());
    assert_eq!(probe[0].class, "efs(2)");
    assert_eq!(probe[0].witness, Some(vec![[2, 2]]));
}

// cover then verify, for every method and n <= 12, q in 2..=5
#[test]
fn round_trip_all_methods() {
    let dir = tempfile::tempdir().unwrap();
    for n in 2..=12u64 {
        for method in ["single", "two-primes", "D"] {
            let path = dir.path().join(format!("{n}-{method}.json"));
            let o = normcov(&["cover", "--n", &n.to_string(), "--method", method, "--out", path.to_str().unwrap()]);
            if code(&o) != 0 {
                assert_eq!(code(&o), 2);
                continue;
            }
            for q in 2..=5 {
                let o = normcov(&["verify", "--certificate", path.to_str().unwrap(), "--q", &q.to_string()]);
                assert_eq!(code(&o), 0, "n={n} {method} q={q}: {}", stdout(&o));
            }
        }
    }
}

#[test]
fn witness_examples() {
    let o = normcov(&["witness", "--n", "30", "--set", "phi"]);
    assert_eq!(code(&o), 0);
    let w: WitnessDto = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(w.members.len(), 7);
    assert!(w.structural_check.unwrap().passed);

    let o = normcov(&["witness", "--n", "105", "--set", "psi"]);
    assert_eq!(code(&o), 0);
    let w: WitnessDto = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(w.members.len(), 24);
    // T_16 and Sigma_33 share a 33-dimensional invariant subspace
    let check = w.structural_check.unwrap();
    assert!(!check.passed);
    assert!(check.offending.unwrap().reason.contains("33"));

    let o = normcov(&["witness", "--n", "30", "--set", "psi"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("6p or 10p"));
    assert_eq!(code(&normcov(&["witness", "--n", "9", "--set", "phi-plus"])), 2);
    assert_eq!(code(&normcov(&["witness", "--n", "9", "--set", "phi", "--emit-matrices"])), 2);
}

#[test]
fn witness_matrices() {
    let o = normcov(&["witness", "--n", "5", "--set", "phi", "--q", "3", "--emit-matrices", "--group", "SL"]);
    assert_eq!(code(&o), 0);
    let w: WitnessDto = serde_json::from_str(&stdout(&o)).unwrap();
    let mats = w.matrices.unwrap();
    assert_eq!(mats.len(), w.members.len());
    assert!(mats.iter().all(|m| m.q == 3 && m.rows.len() == 5 && m.rows.iter().all(|r| r.len() == 5)));
    let o = normcov(&["witness", "--n", "4", "--set", "omega", "--q", "5", "--group", "index:2"]);
    assert_eq!(code(&o), 0);
    let w: WitnessDto = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(serde_json::to_value(w.group).unwrap(), serde_json::json!({"intermediate_index": 2}));
    assert_eq!(code(&normcov(&["witness", "--n", "4", "--set", "omega", "--q", "5", "--group", "index:3"])), 2);
    assert_eq!(code(&normcov(&["witness", "--n", "4", "--set", "omega", "--q", "6"])), 2);
}

#[test]
fn partitions_and_table() {
    let o = normcov(&["partitions", "--n", "9"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("f = 7\n") && s.contains("g = 6\n"));
    assert_eq!(s.lines().filter(|l| l.starts_with('(')).count(), 6);

    let o = normcov(&["table", "--from", "3", "--to", "20"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("n,exact,lo,hi,provenance_lo,provenance_hi"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 18);
    for r in rows {
        let n: u64 = r[0].parse().unwrap();
        let (lo, hi): (u64, u64) = (r[2].parse().unwrap(), r[3].parse().unwrap());
        assert!(12 * lo > n && lo <= hi && 2 * hi <= n + 1, "{r:?}");
    }
    let o = normcov(&["table", "--from", "5", "--to", "6", "--format", "md"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert_eq!(code(&normcov(&["table", "--from", "5", "--to", "4"])), 2);
    assert_eq!(code(&normcov(&["table", "--from", "1", "--to", "4"])), 2);
}

#[test]
fn help_exits_zero() {
    let o = normcov(&["--help"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verify"));
}
