use csfkit::cli::{run, Outcome};
use serde_json::Value;

fn csfkit(args: &str) -> Outcome {
    run(std::iter::once("csfkit").chain(args.split_whitespace()))
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

#[test]
fn csf_of_the_three_path() {
    let o = csfkit("csf --uio u:0,1/2,1 --basis e");
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = json(&o);
    let coeffs = v.get("coefficients").unwrap_or(&v);
    assert_eq!(coeffs["(2,1)"], "1");
    assert_eq!(coeffs["(3)"], "3");
}

#[test]
fn enumerate_three() {
    let o = csfkit("uio-enumerate --n 3 --format text");
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.stdout.lines().map(str::trim).filter(|l| l.starts_with("s:")).collect();
    assert_eq!(lines, ["s:4,4,4", "s:3,4,4", "s:2,4,4", "s:3,3,4", "s:2,3,4"]);
}

#[test]
fn exit_codes() {
    assert_eq!(csfkit("verify --theorem all --max-n 3").code, 0);
    assert_eq!(csfkit("verify-bijection --which l2 --l 2 --uio s:3,4,4 --reading printed").code, 1);
    assert_eq!(csfkit("verify-bijection --which l2 --l 2 --uio s:3,4,4 --reading repaired").code, 0);
    assert_eq!(csfkit("csf --uio s:9,9").code, 2);
    assert_eq!(csfkit("no-such-command").code, 2);
    assert_eq!(csfkit("csf --graph 3:1-4").code, 2);
}

#[test]
fn printed_reading_failure_carries_a_counterexample() {
    let o = csfkit("verify-bijection --which l2 --l 2 --max-n 3 --reading printed");
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("reproduce"), "{}", o.stdout);
}

#[test]
fn epositivity_scan() {
    let o = csfkit("epositivity --max-n 6");
    assert_eq!(o.code, 0);
    let s = o.stdout;
    assert!(s.contains("all e-positive"));
    let v: Value = serde_json::from_str(&s).unwrap();
    let counts: Vec<u64> = v["detail"]["per_n"]
        .as_array()
        .or_else(|| v["per_n"].as_array())
        .unwrap()
        .iter()
        .map(|r| r["uios"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, [1, 2, 5, 14, 42, 132]);
}

#[test]
fn claw_is_not_e_positive() {
    let o = csfkit("epositivity --graph 4:1-2,1-3,1-4");
    assert_eq!(o.code, 1);
    let v = json(&o);
    assert_eq!(v["e_positive"], false);
    assert_eq!(v["witness"], serde_json::json!([2, 2]));
}

#[test]
fn sinks_and_msets() {
    assert_eq!(csfkit("sinks --uio s:3,4,4").code, 0);
    let o = csfkit("msets --uio s:3,4,4 --which 2l1k --l 1 --k 1 --strict-last-index both");
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("match"));
}

#[test]
fn output_does_not_depend_on_thread_count() {
    for cmd in ["verify --theorem msets,bijections --max-n 4", "epositivity --max-n 5"] {
        let one = csfkit(&format!("{cmd} --jobs 1"));
        let four = csfkit(&format!("{cmd} --jobs 4"));
        assert_eq!(one, four, "{cmd}");
        assert_eq!(one, csfkit(cmd));
    }
}

#[test]
fn csv_and_text_render() {
    let o = csfkit("uio-enumerate --n 3 --format csv");
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "uios\n\"s:4,4,4\"\n\"s:3,4,4\"\n\"s:2,4,4\"\n\"s:3,3,4\"\n\"s:2,3,4\"\n");
    assert_eq!(csfkit("sinks --uio s:3,4,4 --format text").code, 0);
}
