use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use twistkit_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { tk_string_free(s) };
    out
}

#[test]
fn homology_through_handles() {
    let name = CString::new("rp2_min").unwrap();
    let mut x = ptr::null_mut();
    assert_eq!(unsafe { tk_complex_load(name.as_ptr(), &mut x) }, TkStatus::Ok);
    assert_eq!(unsafe { tk_complex_dim(x) }, 2);
    assert_eq!(unsafe { tk_complex_count(x, 1) }, 3);
    let spec = CString::new("w1").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tk_system_new(x, spec.as_ptr(), &mut s) }, TkStatus::Ok);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { tk_homology(s, 2, 0, &mut json) }, TkStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(v["rank"], 1);
    unsafe {
        tk_system_free(s);
        tk_complex_free(x);
    }
}

#[test]
fn error_codes() {
    let name = CString::new("nowhere").unwrap();
    let mut x = ptr::null_mut();
    assert_eq!(unsafe { tk_complex_load(name.as_ptr(), &mut x) }, TkStatus::Validation);
    assert!(x.is_null());
    let msg = unsafe { CStr::from_ptr(tk_last_error()) }.to_str().unwrap();
    assert!(msg.contains("UnknownCorpusEntry"));
    assert_eq!(unsafe { tk_complex_load(ptr::null(), &mut x) }, TkStatus::NullPointer);

    let name = CString::new("circle3").unwrap();
    unsafe { tk_complex_load(name.as_ptr(), &mut x) };
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tk_system_from_signs(x, [1, -1].as_ptr(), 2, &mut s) }, TkStatus::Validation);
    assert_eq!(unsafe { tk_system_from_signs(x, [1, -1, 1].as_ptr(), 3, &mut s) }, TkStatus::Ok);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { tk_homology(s, 0, 0, &mut json) }, TkStatus::Ok);
    assert!(take(json).contains("\"torsion\":[2]"));
    assert_eq!(unsafe { tk_homology(ptr::null(), 0, 0, &mut json) }, TkStatus::NullPointer);
    unsafe {
        tk_system_free(s);
        tk_complex_free(x);
    }
}

#[test]
fn cli_passthrough() {
    let args = CString::new(r#"["degree", "--map", "antipodal"]"#).unwrap();
    let (mut out, mut err) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { tk_cli_run(args.as_ptr(), &mut out, &mut err) }, 0);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["degree"], -1);
    assert!(take(err).is_empty());
}

#[test]
fn twist_classes_json() {
    let name = CString::new("torus").unwrap();
    let mut x = ptr::null_mut();
    unsafe { tk_complex_load(name.as_ptr(), &mut x) };
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { tk_twist_classes(x, &mut json) }, TkStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    unsafe { tk_complex_free(x) };
}

/// Compiles a small C program against the generated header and the static
/// library. Skipped when no C compiler or static archive is around.
#[test]
fn c_program_links() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include");
    // test binaries sit next to the library artifacts in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let lib = exe.parent().unwrap().join("libtwistkit_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: {} or cc missing", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "twistkit.h"
int main(void) {
    TkComplex *x = NULL;
    if (tk_complex_load("klein", &x) != TK_STATUS_OK) return 1;
    TkSystem *s = NULL;
    if (tk_system_new(x, "w1", &s) != TK_STATUS_OK) return 2;
    char *json = NULL;
    if (tk_homology(s, 1, 0, &json) != TK_STATUS_OK) return 3;
    printf("%s\n", json);
    tk_string_free(json);
    tk_system_free(s);
    tk_complex_free(x);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("main");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&header)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success());
    let v: serde_json::Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(v["rank"], 1);
}
