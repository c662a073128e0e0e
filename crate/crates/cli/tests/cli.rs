use std::process::Command;

use lozenge_cli::run;
use lozenge_count::mf_profile_dp;
use lozenge_formulas::flashlight_formula;
use lozenge_regions::flashlight;
use num_bigint::BigUint;
use serde_json::Value;

fn lozenge(args: &str) -> lozenge_cli::Outcome {
    run(std::iter::once("lozenge").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = lozenge(args);
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&str, i32)] = &[
        ("count --region flashlight --x 4 --z 3 --k 2 --p 1 --engine dp", 0),
        ("count --region hexagon --a 2 --b 2 --c 2 --engine oracle", 0),
        ("count --region hexagon --a 2 --b 2 --c 2 --symmetry h,v", 0),
        ("--format csv count --region trapezoid --a 3 --b 2 --engine enum", 0),
        ("formula --name corner --k 1 --p 0", 0),
        ("formula --name spp --params a=2,b=2", 0),
        ("formula --name bulk-asymptote --k 4 --digits 30", 0),
        ("verify condensation --identity four-odd --trials 20 --seed 3 --budget 16", 0),
        ("verify condensation --identity kuo --trials 10 --budget 14 --weights unit", 0),
        ("verify recurrence --x 2 --z 3 --k 1 --p 0", 0),
        ("correlate corner --k 1 --p 1 --grid 64,128,256,512", 0),
        ("correlate bulk --grid 8,16,32,64 --digits 50", 0),
        // a trend that cannot meet its tolerance fails the check
        ("correlate corner --k 2 --p 0 --grid 8,16 --tolerance 0.000001", 1),
        ("correlate bulk --grid 8,16 --tolerance 0.00000001", 1),
        // usage errors and violated preconditions
        ("frobnicate", 2),
        ("count --engine dp", 2),
        ("count --region flashlight --x 4 --z 3", 2),
        ("count --region flashlight --x 4 --z 3 --k 0 --p 0 --a 1", 2),
        ("count --region flashlight --x 0 --z 1 --k 1 --p 1", 2),
        ("count --region butterfly --x 3 --y 2 --k 1 --p 0", 2),
        ("count --region flashlight --x 2 --z 1 --k 0 --p 0 --symmetry q", 2),
        ("count --region trapezoid --a 2 --b 1 --symmetry v", 2),
        ("formula --name corner --k 1", 2),
        ("formula --name corner --k 1 --p 0 --x 3", 2),
        ("formula --name bulk-asymptote --k 0", 2),
        ("formula --name bulk-asymptote --k 3 --digits 10", 2),
        ("verify condensation --identity nine --trials 2", 2),
        ("verify condensation --identity eight --weights odd", 2),
        ("verify recurrence --x 2 --z 1 --k 0 --p 0", 2),
        ("correlate corner --k 3 --p 3 --grid 4,8", 2),
        ("correlate bulk --grid 16,8", 2),
        ("render --region hexagon --a 1 --b 1 --c 1 --scale 0", 2),
        ("render --region hexagon --a 1 --b 0 --c 0 --overlay", 0),
        ("render --region-file /nonexistent/region.txt", 2),
    ];
    for &(args, code) in cases {
        let out = lozenge(args);
        assert_eq!(out.code, code, "`{args}` exited {}: {}{}", out.code, out.stdout, out.stderr);
        if code == 2 {
            assert!(!out.stderr.is_empty(), "`{args}` gave no diagnostic");
        }
    }
}

#[test]
fn counts_round_trip_through_json() {
    for (x, z, k, p) in [(4, 3, 2, 1), (6, 4, 2, 2), (5, 2, 0, 1), (1, 3, 2, 2)] {
        let doc = json(&format!("count --region flashlight --x {x} --z {z} --k {k} --p {p} --engine dp"));
        let parsed: BigUint = doc["count"].as_str().unwrap().parse().unwrap();
        let direct = mf_profile_dp(&flashlight(x, z, k, p).unwrap()).to_biguint().unwrap();
        assert_eq!(parsed, direct);
        assert_eq!(parsed, flashlight_formula(x.into(), z.into(), k.into(), p.into()));
        assert_eq!(doc["engine"], "dp");
        assert_eq!(doc["region"]["kind"], "flashlight");
        let f = json(&format!("formula --name flashlight --x {x} --z {z} --k {k} --p {p}"));
        assert_eq!(f.as_str().unwrap().parse::<BigUint>().unwrap(), parsed);
    }
}

#[test]
fn documented_examples() {
    assert_eq!(lozenge("formula --name corner --k 1 --p 0").stdout.trim(), "\"3/8\"");
    assert_eq!(
        json("formula --name flashlight --x 4 --z 3 --k 2 --p 1"),
        json("count --region flashlight --x 4 --z 3 --k 2 --p 1 --engine dp")["count"]
    );
    let bulk = json("formula --name bulk --k 1");
    assert_eq!(bulk["mantissa"], "3/16");
    assert_eq!(bulk["pi_exp"], -2);
    let g = json("formula --name glaisher --digits 20");
    assert_eq!(g, "1.2824271291006226369");
    let out = lozenge("verify condensation --identity four-even --trials 200 --seed 7 --budget 20");
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("seed 7"));
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["seed"], "7");
    assert_eq!(doc["results"].as_array().unwrap().len(), 200);
    assert!(doc["results"].as_array().unwrap().iter().all(|r| r["residual"] == "0"));
}

#[test]
fn csv_reports_have_the_documented_columns() {
    let out = lozenge("--format csv correlate corner --k 1 --p 0 --grid 64,128");
    assert_eq!(out.code, 0);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("point,value,deviation,verdict"));
    assert_eq!(lines.count(), 2);
    let out = lozenge("--format csv count --region hexagon --a 1 --b 1 --c 1");
    assert_eq!(out.stdout, "region,engine,count\nhexagon a=1 b=1 c=1,dp,2\n");
}

#[test]
fn region_files_and_rendering() {
    let text = flashlight(3, 2, 1, 1).unwrap().to_text();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("region.txt");
    std::fs::write(&path, text).unwrap();
    let from_file = json(&format!("count --region-file {} --engine enum", path.display()));
    let from_flags = json("count --region flashlight --x 3 --z 2 --k 1 --p 1 --engine enum");
    assert_eq!(from_file["count"], from_flags["count"]);

    let a = lozenge(&format!("render --region-file {} --overlay", path.display()));
    let b = lozenge("render --region flashlight --x 3 --z 2 --k 1 --p 1 --overlay");
    assert_eq!(a.code, 0);
    // same picture, different title
    let strip = |s: &str| s.lines().filter(|l| !l.starts_with("<title>")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&a.stdout), strip(&b.stdout));

    let svg_path = dir.path().join("hex.svg");
    let out = lozenge(&format!("render --region hexagon --a 1 --b 1 --c 1 --overlay --output {}", svg_path.display()));
    assert_eq!(out.code, 0);
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("class=\"lozenge\"").count(), 3);
    let again = lozenge("render --region hexagon --a 1 --b 1 --c 1 --overlay");
    assert_eq!(again.stdout, svg);

    let big = lozenge("render --region butterfly --x 8 --y 10 --k 4 --p 1");
    assert_eq!(big.code, 0);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lozenge");
    let ok = Command::new(bin).args(["formula", "--name", "corner", "--k", "1", "--p", "0"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "\"3/8\"");
    let bad = Command::new(bin).args(["count", "--region", "hexagon"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let fail = Command::new(bin).args(["correlate", "bulk", "--grid", "8,16", "--tolerance", "1e-9"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let digits =
        Command::new(bin).args(["formula", "--name", "glaisher"]).env("LOZENGE_DIGITS", "12").output().unwrap();
    assert_eq!(String::from_utf8_lossy(&digits.stdout).trim(), "\"1.28242712910\"");
}
