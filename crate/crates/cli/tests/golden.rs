//! Golden output pins: the exact stdout of a few representative commands.
//! These catch accidental format drift; the determinism tests in cli.rs
//! only catch run-to-run variation.

use std::process::Command;

fn stdout_of(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_weyl"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{args:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classify_chain_text() {
    assert_eq!(
        stdout_of(&["classify", "C4", "0,0,1,0"]),
        "V([0,0,1,0]) over C4 is reducible in characteristic 3\n\
         \x20 1. restrict to the Levi on nodes [2, 3, 4] -> (C3, [0,1,0])\n\
         \x20 2. base case C3 omega_2 reducible at p = 3 [symplectic-omega2-divisibility]\n"
    );
}

#[test]
fn jantzen_text() {
    assert_eq!(
        stdout_of(&["jantzen", "B3", "1,0,1", "7"]),
        "Jantzen sum for V([1,0,1]) over B3 at p = 7:\n\
         \x20 sum = chi[0,0,1]\n\
         \x20 V(lambda) x F_p is reducible\n\
         \x20 two composition factors: dim L([1,0,1]) = 40, dim L([0,0,1]) = 8\n"
    );
}

#[test]
fn primes_text() {
    assert_eq!(
        stdout_of(&["primes", "B2", "1,1"]),
        "V([1,1]) over B2: reducible exactly at [5] (checked all p < 6)\n"
    );
}

#[test]
fn minuscule_json() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout_of(&["minuscule", "D4", "--json"])).unwrap();
    assert_eq!(
        v,
        serde_json::json!({
            "type": "D4",
            "count": 4,
            "minuscule_weights": [[0,0,0,0], [0,0,0,1], [0,0,1,0], [1,0,0,0]],
        })
    );
}

#[test]
fn killing_text() {
    assert_eq!(
        stdout_of(&["killing", "hspin", "12"]),
        "reduced Killing form for HSpin(12):\n\
         \x20 ambient type:      D6\n\
         \x20 e factor:          2\n\
         \x20 det (form):        1\n\
         \x20 det (scaled):      64\n\
         \x20 degenerate in characteristic [2]\n"
    );
}
