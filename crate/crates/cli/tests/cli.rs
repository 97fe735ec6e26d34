use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn wittkit(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wittkit"))
        .args(args)
        .current_dir(data_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn wittkit");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(args: &[&str], stdin: &str) -> String {
    let r = wittkit(args, stdin);
    assert_eq!(r.code, 0, "{args:?} failed: {}", r.stderr);
    r.stdout
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn int_series(coeffs: &[i64]) -> String {
    let c: Vec<String> = coeffs.iter().map(|c| format!("\"{c}\"")).collect();
    format!(
        "{{\"ring\":{{\"kind\":\"int\"}},\"trunc\":{},\"coeffs\":[{}]}}\n",
        coeffs.len(),
        c.join(",")
    )
}

#[test]
fn witt_mul_of_linear_factors() {
    let input = format!("{}{}", int_series(&[-2, 0, 0, 0]), int_series(&[-3, 0, 0, 0]));
    for engine in ["orbit", "universal"] {
        let out = ok(&["witt", "mul", "--trunc", "4", "--engine", engine], &input);
        assert_eq!(out, int_series(&[-6, 0, 0, 0]));
    }
}

#[test]
fn ghost_of_zero_vector() {
    let out = ok(&["witt", "ghost", "--trunc", "3"], &int_series(&[0, 0, 0]));
    assert_eq!(out, "{\"ring\":{\"kind\":\"int\"},\"trunc\":3,\"ghost\":[\"0\",\"0\",\"0\"]}\n");
}

#[test]
fn ghost_round_trip_through_pipes() {
    for coeffs in [[3, -1, 4, 1, -5], [0, 0, 7, 0, 0], [-1, -1, -1, -1, -1]] {
        let input = int_series(&coeffs);
        let ghost = ok(&["witt", "ghost", "--trunc", "5"], &input);
        let back = ok(&["witt", "unghost", "--trunc", "5"], &ghost);
        assert_eq!(back, input);
        let orbit = ok(&["witt", "orbit", "--trunc", "5"], &input);
        assert_eq!(ok(&["witt", "unorbit", "--trunc", "5"], &orbit), input);
    }
}

#[test]
fn canonical_inputs_reserialise_identically() {
    let input = "{\"ring\":{\"kind\":\"mod\",\"modulus\":\"6\"},\"trunc\":3,\"coeffs\":[\"5\",\"0\",\"2\"]}\n";
    let zero = "{\"ring\":{\"kind\":\"mod\",\"modulus\":\"6\"},\"trunc\":3,\"coeffs\":[\"0\",\"0\",\"0\"]}\n";
    assert_eq!(ok(&["witt", "add", "--trunc", "3"], &format!("{input}{zero}")), input);
    let set = "{\"orbits\":{\"2\":1,\"3\":-1}}\n";
    let one = "{\"orbits\":{\"1\":1}}\n";
    assert_eq!(ok(&["burnside", "mul"], &format!("{set}{one}")), set);
}

#[test]
fn truncation_flag() {
    let long = int_series(&[1, 2, 3, 4]);
    assert_eq!(ok(&["witt", "neg", "--trunc", "2"], &long), ok(&["witt", "neg", "--trunc", "2"], &int_series(&[1, 2])));
    let r = wittkit(&["witt", "neg", "--trunc", "6"], &long);
    assert_eq!(r.code, 2);
    let r = wittkit(&["witt", "neg"], &long);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--trunc"));
    // Frobenius and exterior powers shrink the truncation.
    let f = ok(&["witt", "frob", "2", "--trunc", "4"], &int_series(&[-1, 0, 0, 0]));
    assert_eq!(f, int_series(&[-1, 0]));
    let l = ok(&["witt", "lambda", "2", "--trunc", "4"], &int_series(&[-5, 6, 0, 0]));
    // lambda^2 of (1 - 2t)(1 - 3t) is 1 - 6t.
    assert_eq!(l, int_series(&[-6, 0]));
    let v = ok(&["witt", "versch", "2", "--trunc", "4"], &int_series(&[-1, 0, 0, 0]));
    assert_eq!(v, int_series(&[0, -1, 0, 0]));
}

#[test]
fn exit_codes() {
    let bad_ghost = "{\"ring\":{\"kind\":\"int\"},\"trunc\":2,\"ghost\":[\"1\",\"0\"]}";
    assert_eq!(wittkit(&["witt", "unghost", "--trunc", "2"], bad_ghost).code, 3);
    assert_eq!(wittkit(&["witt", "neg", "--trunc", "2"], "{not json").code, 2);
    assert_eq!(wittkit(&["witt", "neg", "--trunc", "2", "--frobnicate"], "").code, 2);
    assert_eq!(wittkit(&["witt", "mul", "--trunc", "1"], &int_series(&[1])).code, 2);
    assert_eq!(wittkit(&["burnside", "invert"], bad_ghost).code, 3);
    assert_eq!(wittkit(&["crysto", "lattice", "5", "0", "5"], "").code, 2);
    assert_eq!(wittkit(&["crysto", "lattice", "6", "1", "1"], "").code, 2);
    assert_eq!(wittkit(&["crysto", "prime", "6", "10"], "").code, 3);
    assert_eq!(wittkit(&["crysto", "expansive", "pgg.json", "3"], "").code, 2);
    assert_eq!(wittkit(&["crysto", "expansive", "missing.json", "5"], "").code, 2);
    assert_eq!(wittkit(&["witt", "binom", "--trunc", "1"], &int_series(&[1]).replace("int", "mod\",\"modulus\":\"4")).code, 2);
}

#[test]
fn endo_commands() {
    let m = "{\"ring\":{\"kind\":\"int\"},\"dim\":2,\"rows\":[[\"1\",\"1\"],[\"1\",\"0\"]]}";
    assert_eq!(ok(&["endo", "charpoly"], m), int_series(&[-1, -1]));
    let traces = ok(&["endo", "traces", "5"], m);
    assert_eq!(
        traces,
        "{\"ring\":{\"kind\":\"int\"},\"trunc\":5,\"ghost\":[\"1\",\"3\",\"4\",\"7\",\"11\"]}\n"
    );
    // The trace sequence is the ghost vector of det(1 - tf).
    let cp = ok(&["endo", "charpoly", "--trunc", "5"], m);
    assert_eq!(ok(&["witt", "ghost", "--trunc", "5"], &cp), traces);
    let c = ok(&["endo", "companion"], &int_series(&[-1, -1]));
    assert_eq!(ok(&["endo", "charpoly"], &c), int_series(&[-1, -1]));
    let t = ok(&["endo", "tensor"], &format!("{m}{m}"));
    assert!(t.contains("\"dim\":4"));
    // det(1 - t f (x) g) is the Witt product of the two polynomials.
    let lhs = ok(&["endo", "charpoly"], &t);
    let rhs = ok(&["witt", "mul", "--trunc", "4"], &format!("{0}{0}", ok(&["endo", "charpoly", "--trunc", "4"], m)));
    assert_eq!(lhs, rhs);
}

#[test]
fn burnside_commands() {
    let x = "{\"orbits\":{\"2\":1,\"3\":-1}}";
    assert_eq!(
        ok(&["burnside", "ghost", "6"], x),
        "{\"ring\":{\"kind\":\"int\"},\"trunc\":6,\"ghost\":[\"0\",\"2\",\"-3\",\"2\",\"0\",\"-1\"]}\n"
    );
    let g = ok(&["burnside", "ghost", "6"], x);
    assert_eq!(ok(&["burnside", "invert"], &g), "{\"orbits\":{\"2\":1,\"3\":-1}}\n");
    assert_eq!(ok(&["burnside", "frob", "2"], "{\"orbits\":{\"6\":1}}"), "{\"orbits\":{\"3\":2}}\n");
    assert_eq!(ok(&["burnside", "versch", "2"], "{\"orbits\":{\"3\":1}}"), "{\"orbits\":{\"6\":1}}\n");
    let e = ok(&["burnside", "embed", "4"], "{\"orbits\":{\"1\":1}}");
    assert_eq!(e, int_series(&[-1, 0, 0, 0]));
}

#[test]
fn crysto_commands() {
    assert_eq!(ok(&["crysto", "lattice", "5", "0", "1"], ""), "{\"S\":1,\"T\":0}\n");
    assert_eq!(ok(&["crysto", "lattice", "13", "1", "5"], ""), "{\"S\":3,\"T\":2}\n");
    assert_eq!(ok(&["crysto", "lattice", "13", "-1", "-5"], ""), "{\"S\":3,\"T\":2}\n");
    assert_eq!(ok(&["crysto", "prime", "6", "100"], ""), "{\"prime\":11}\n");
    assert!(ok(&["crysto", "cohomology", "z2_trivial.json", "2"], "").contains("\"group\":\"Z/2\""));
    assert!(ok(&["crysto", "cohomology", "z2_trivial.json", "1"], "").contains("\"group\":\"0\""));
    assert_eq!(ok(&["crysto", "fixed", "swap.json"], ""), "{\"basis\":[[\"1\",\"1\"]]}\n");
    assert_eq!(ok(&["crysto", "fixed", "split_sign.json"], ""), "{\"basis\":[]}\n");
    let split = ok(&["crysto", "expansive", "split_sign.json", "3"], "");
    assert_eq!(
        split,
        "{\"b\":{\"0\":[\"0\",\"0\"],\"1\":[\"0\",\"0\"]},\"s\":\"3\",\"u\":[\"0\",\"0\"]}\n"
    );
    let pgg = ok(&["crysto", "expansive", "pgg.json", "5"], "");
    assert!(pgg.contains("\"s\":\"5\"") && pgg.contains("\"u\":"));
    let r = wittkit(&["crysto", "expansive", "bad_cocycle.json", "3"], "");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("cocycle"));
}

#[test]
fn help_documents_formats() {
    let out = ok(&["--help"], "");
    assert!(out.contains("\"coeffs\""));
    assert!(out.contains("Exit status"));
}
