//! One test per acceptance criterion; each prints its PASS/FAIL line.

use pathpart::suite::{criterion, default_fixtures_dir, run_criterion};

fn run(id: usize) {
    let o = run_criterion(criterion(id), &default_fixtures_dir());
    println!("{o}");
    assert!(o.passed, "{o}");
}

#[test]
fn criterion_01_aut_k2_z2_z3() {
    run(1);
}

#[test]
fn criterion_02_path_aut_connected_graphs() {
    run(2);
}

#[test]
fn criterion_03_aut_oracle_random() {
    run(3);
}

#[test]
fn criterion_04_recover_random() {
    run(4);
}

#[test]
fn criterion_05_path_k2_subgroups() {
    run(5);
}

#[test]
fn criterion_06_d8_amalgam_subgroups() {
    run(6);
}

#[test]
fn criterion_07_axioms() {
    run(7);
}

#[test]
fn criterion_08_nerve_normalizer() {
    run(8);
}

#[test]
fn criterion_09_frucht_realize() {
    run(9);
}

#[test]
fn criterion_10_aut_p3_z3_section() {
    run(10);
}

#[test]
fn criterion_11_words_oracle() {
    run(11);
}
