use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use pathpart_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(pp_last_error()) }
        .to_string_lossy()
        .into_owned()
}

const K2: &str = r#"{"graph": {"vertices": ["a", "b"], "edges": [["a", "b"]]},
                     "decorations": {"a": "Z2", "b": "Z3"}}"#;

#[test]
fn decorated_graph_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(pp_decgraph_from_json(c(K2).as_ptr(), &mut g), PpStatus::Ok);
        let mut order = 0;
        assert_eq!(pp_decgraph_aut_order(g, &mut order), PpStatus::Ok);
        assert_eq!(order, 2);
        let mut found = false;
        assert_eq!(pp_decgraph_recover(g, 2, &mut found), PpStatus::Ok);
        assert!(found);

        let mut p = ptr::null_mut();
        assert_eq!(pp_partial_build(g, &mut p), PpStatus::Ok);
        pp_decgraph_free(g);

        let mut yes = false;
        assert_eq!(pp_partial_contains(p, c("b.2 a").as_ptr(), &mut yes), PpStatus::Ok);
        assert!(yes);
        assert_eq!(pp_partial_contains(p, c("a b a").as_ptr(), &mut yes), PpStatus::Ok);
        assert!(!yes);
        assert_eq!(pp_partial_contains(p, c("z").as_ptr(), &mut yes), PpStatus::Parse);

        assert_eq!(pp_partial_in_domain(p, c("a b | a b").as_ptr(), &mut yes), PpStatus::Ok);
        assert!(yes);
        let mut text = ptr::null_mut();
        assert_eq!(pp_partial_product(p, c("b | b").as_ptr(), &mut text), PpStatus::Ok);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), "b.2");
        pp_string_free(text);
        assert_eq!(
            pp_partial_product(p, c("a | b | a").as_ptr(), &mut text),
            PpStatus::NotInDomain
        );
        assert!(last_error().contains("not in the domain"));

        let mut n = 0;
        assert_eq!(pp_partial_element_count(p, 2, &mut n), PpStatus::Ok);
        assert_eq!(n, 1 + 3 + 4);
        let mut passed = false;
        assert_eq!(pp_partial_check_axioms(p, 3, 3, &mut passed), PpStatus::Ok);
        assert!(passed);
        pp_partial_free(p);
    }
}

#[test]
fn handle_specs_and_errors() {
    unsafe {
        let mut p = ptr::null_mut();
        let spec = c(r#"{"kind": "corrupted",
            "base": {"kind": "path", "graph": {"vertices": ["a", "b"], "edges": [["a", "b"]]}},
            "word": "a | b", "image": "b a"}"#);
        assert_eq!(pp_partial_from_json(spec.as_ptr(), &mut p), PpStatus::Ok);
        let mut passed = true;
        assert_eq!(pp_partial_check_axioms(p, 4, 3, &mut passed), PpStatus::Ok);
        assert!(!passed);
        pp_partial_free(p);

        let mut g = ptr::null_mut();
        assert_eq!(pp_decgraph_from_json(c("{").as_ptr(), &mut g), PpStatus::Parse);
        assert!(last_error().contains("line 1"));
        let trivial = c(r#"{"graph": {"vertices": ["a"]}, "decorations": {"a": "Z1"}}"#);
        assert_eq!(pp_decgraph_from_json(trivial.as_ptr(), &mut g), PpStatus::Invalid);
        assert_eq!(pp_decgraph_from_json(ptr::null(), &mut g), PpStatus::NullPointer);
        assert_eq!(pp_decgraph_from_json(c(K2).as_ptr(), ptr::null_mut()), PpStatus::NullPointer);
        let mut order = 0;
        assert_eq!(pp_decgraph_aut_order(ptr::null(), &mut order), PpStatus::NullPointer);
        pp_decgraph_free(ptr::null_mut());
        pp_partial_free(ptr::null_mut());
        pp_string_free(ptr::null_mut());
        let v = CStr::from_ptr(pp_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

/// Directory holding the built library: the parent of `deps/`.
fn lib_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_compiles_as_c() {
    if !have_cc() {
        eprintln!("no C compiler; skipped");
        return;
    }
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn c_program_links_and_runs() {
    let lib = lib_dir().join("libpathpart_ffi.a");
    if !have_cc() || !lib.is_file() {
        eprintln!("no C compiler or static library; skipped");
        return;
    }
    let dir = tempfile_dir();
    let exe = dir.join("smoke");
    let out = Command::new("cc")
        .args(["-std=c99", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}

fn tempfile_dir() -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("capi-smoke");
    std::fs::create_dir_all(&d).unwrap();
    d
}
