use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use suris_ffi::*;

fn c(text: &str) -> CString {
    CString::new(text).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(suris_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn new_map(delta: &str, eps: &str) -> *mut SurisMap {
    let mut map = ptr::null_mut();
    let status = unsafe { suris_map_new(c(delta).as_ptr(), c(eps).as_ptr(), 40, &mut map) };
    assert_eq!(status, SurisStatus::Ok, "{}", last_error());
    assert!(!map.is_null());
    map
}

#[test]
fn version_and_status_names() {
    let version = unsafe { CStr::from_ptr(suris_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
    let name = unsafe { CStr::from_ptr(suris_status_name(SurisStatus::InadmissibleEpsilon)) };
    assert_eq!(name.to_str().unwrap(), "inadmissible_epsilon");
}

#[test]
fn map_construction_errors() {
    let mut map = ptr::null_mut();
    let status = unsafe { suris_map_new(c("1.5").as_ptr(), c("0").as_ptr(), 40, &mut map) };
    assert_eq!(status, SurisStatus::Domain);
    assert!(map.is_null());
    assert!(!last_error().is_empty());

    let status = unsafe { suris_map_new(c("0.5").as_ptr(), c("x").as_ptr(), 40, &mut map) };
    assert_eq!(status, SurisStatus::Parse);
    let status = unsafe { suris_map_new(c("0.5").as_ptr(), c("0").as_ptr(), 10, &mut map) };
    assert_eq!(status, SurisStatus::InvalidPrecision);
    let status = unsafe { suris_map_new(ptr::null(), c("0").as_ptr(), 40, &mut map) };
    assert_eq!(status, SurisStatus::NullPointer);
    let status = unsafe { suris_map_new(c("0.5").as_ptr(), c("0").as_ptr(), 40, ptr::null_mut()) };
    assert_eq!(status, SurisStatus::NullPointer);

    let bad = [0xffu8, 0];
    let status = unsafe { suris_map_new(bad.as_ptr().cast(), c("0").as_ptr(), 40, &mut map) };
    assert_eq!(status, SurisStatus::InvalidUtf8);
}

#[test]
fn map_steps_and_invariant() {
    let map = new_map("0.5", "0");
    let (mut theta, mut r) = (0.0, 0.0);
    let (theta0, r0) = (0.2, 0.3);
    unsafe {
        assert_eq!(
            suris_map_forward(map, theta0, r0, &mut theta, &mut r),
            SurisStatus::Ok
        );
        let (mut i0, mut i1) = (0.0, 0.0);
        suris_map_invariant(map, theta0, r0, &mut i0);
        suris_map_invariant(map, theta, r, &mut i1);
        assert!((i0 - i1).abs() < 1e-15);
        let (mut tb, mut rb) = (0.0, 0.0);
        assert_eq!(
            suris_map_inverse(map, theta, r, &mut tb, &mut rb),
            SurisStatus::Ok
        );
        assert!((tb - theta0).abs() < 1e-15 && (rb - r0).abs() < 1e-15);

        let mut v = 0.0;
        suris_map_potential(map, 0.5, &mut v);
        assert!((v + 0.1044271575).abs() < 1e-9);
        assert_eq!(
            suris_map_forward(map, f64::NAN, 0.0, &mut theta, &mut r),
            SurisStatus::Domain
        );
        assert_eq!(
            suris_map_forward(map, 0.0, 0.0, ptr::null_mut(), &mut r),
            SurisStatus::NullPointer
        );
        assert_eq!(suris_map_nu(ptr::null(), &mut v), SurisStatus::NullPointer);
        suris_map_free(map);
        suris_map_free(ptr::null_mut());
    }
}

#[test]
fn gamma_and_melnikov() {
    let map = new_map("0.5", "0");
    unsafe {
        let mut g = SurisGamma::default();
        assert_eq!(suris_map_gamma(map, &mut g), SurisStatus::Ok);
        assert!((g.series - 0.1881277523744862).abs() < 1e-15);
        assert!((g.elliptic - g.series).abs() < 1e-15);
        assert!(g.terms > 0);

        let mut gap = SurisMelnikovGap::default();
        assert_eq!(suris_map_melnikov_gap(map, &mut gap), SurisStatus::Ok);
        assert_eq!(gap.theta_q, 0.0);
        assert!((gap.theta_p - 0.25).abs() < 1e-15);
        assert!((gap.gap - g.series).abs() < 1e-15);

        let mut l = 0.0;
        assert_eq!(suris_map_melnikov_l(map, 0.0, &mut l), SurisStatus::Ok);
        assert!((l - 1.2293528877458877).abs() < 1e-14);
        assert_eq!(suris_map_melnikov_l(map, 0.5, &mut l), SurisStatus::Domain);

        let mut standalone = SurisGamma::default();
        assert_eq!(
            suris_gamma(c("0.1715728752538099").as_ptr(), 40, &mut standalone),
            SurisStatus::Ok
        );
        assert!((standalone.series - g.series).abs() < 1e-12);
        suris_map_free(map);
    }
}

#[test]
fn anti_integrable_value() {
    let map = new_map("0.5", "0.3");
    let mut a = 0.0;
    assert_eq!(
        unsafe { suris_map_anti_integrable(map, &mut a) },
        SurisStatus::Ok
    );
    assert!((a - (0.3 - 0.1455728)).abs() < 1e-6);
    unsafe { suris_map_free(map) };
}

fn decimal(lobe: *const SurisLobe, field: SurisLobeField) -> String {
    let mut needed = 0usize;
    let status = unsafe { suris_lobe_decimal(lobe, field, ptr::null_mut(), 0, &mut needed) };
    assert_eq!(status, SurisStatus::BufferTooSmall);
    let mut buf = vec![0 as c_char; needed];
    let status =
        unsafe { suris_lobe_decimal(lobe, field, buf.as_mut_ptr(), buf.len(), ptr::null_mut()) };
    assert_eq!(status, SurisStatus::Ok);
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn lobe_area_handle() {
    let map = new_map("0.5", "0.00001");
    let mut lobe = ptr::null_mut();
    unsafe {
        assert_eq!(
            suris_map_lobe_area(map, &mut lobe),
            SurisStatus::Ok,
            "{}",
            last_error()
        );
        let mut s = std::mem::zeroed::<SurisLobeSummary>();
        assert_eq!(suris_lobe_summary(lobe, &mut s), SurisStatus::Ok);
        assert!(s.rel_err <= 0.01);
        assert_eq!(s.orientation, SurisOrientation::Positive);
        assert_eq!(s.digits, 40);
        assert!((s.area_numeric / s.eps - 0.18813).abs() < 1e-3);

        let area = decimal(lobe, SurisLobeField::AreaNumeric);
        assert!(
            area.starts_with("1.8817") && area.ends_with("e-06"),
            "{area}"
        );
        assert_eq!(area.split('e').next().unwrap().len(), 41);
        assert_eq!(
            decimal(lobe, SurisLobeField::Eps),
            "1.000000000000000000000000000000000000000e-05"
        );
        suris_lobe_free(lobe);
        suris_map_free(map);
    }
}

#[test]
fn lobe_area_errors() {
    let map = new_map("0.5", "1");
    let mut lobe = ptr::null_mut();
    unsafe {
        assert_eq!(
            suris_map_lobe_area(map, &mut lobe),
            SurisStatus::InadmissibleEpsilon
        );
        assert!(lobe.is_null());
        assert!(last_error().contains("epsilon"));
        suris_map_free(map);
    }
    let map = new_map("0.5", "0");
    unsafe {
        assert_eq!(suris_map_lobe_area(map, &mut lobe), SurisStatus::Ok);
        let mut s = std::mem::zeroed::<SurisLobeSummary>();
        suris_lobe_summary(lobe, &mut s);
        assert!(s.rel_err.is_nan());
        assert!(s.area_numeric <= 1e-25);
        assert_eq!(decimal(lobe, SurisLobeField::RelErr), "");
        suris_lobe_free(lobe);
        suris_map_free(map);
    }
}

#[test]
fn error_message_is_cleared_by_success() {
    let mut map = ptr::null_mut();
    unsafe { suris_map_new(c("2").as_ptr(), c("0").as_ptr(), 40, &mut map) };
    assert!(!last_error().is_empty());
    let map = new_map("0.5", "0");
    assert!(last_error().is_empty());
    unsafe { suris_map_free(map) };
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("suris.h")
}

/// `target/<profile>`, two levels above the test executable in `deps/`.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

const C_PROGRAM: &str = r#"
#include <math.h>
#include <stdio.h>
#include <string.h>
#include "suris.h"

int main(void) {
    SurisMap *map = NULL;
    if (suris_map_new("0.5", "0", 40, &map) != SURIS_STATUS_OK) return 1;
    SurisGamma g;
    if (suris_map_gamma(map, &g) != SURIS_STATUS_OK) return 2;
    if (fabs(g.series - 0.18812775237448621) > 1e-15) return 3;
    double theta, r;
    if (suris_map_forward(map, 0.2, 0.3, &theta, &r) != SURIS_STATUS_OK) return 4;
    suris_map_free(map);

    SurisMap *bad = NULL;
    if (suris_map_new("1.5", "0", 40, &bad) != SURIS_STATUS_DOMAIN) return 5;
    if (bad != NULL || strlen(suris_last_error_message()) == 0) return 6;
    printf("%s %.15f\n", suris_version(), g.series);
    return 0;
}
"#;

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_compiles_as_c_and_cpp() {
    if !have_cc() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let source = dir.path().join("check.c");
    std::fs::write(&source, C_PROGRAM).unwrap();
    let include = header().parent().unwrap().to_path_buf();
    for (compiler, extra) in [("cc", vec!["-std=c99"]), ("c++", vec!["-x", "c++"])] {
        let out = Command::new(compiler)
            .args(&extra)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
            .arg(&include)
            .arg(&source)
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{compiler}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = profile_dir().join("libsuris_ffi.a");
    if !have_cc() || !lib.exists() {
        eprintln!("no C compiler or {} missing; skipping", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let source = dir.path().join("main.c");
    let binary = dir.path().join("main");
    std::fs::write(&source, C_PROGRAM).unwrap();
    let out = Command::new("cc")
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&source)
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&binary)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let run = Command::new(&binary).output().unwrap();
    assert_eq!(
        run.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert!(stdout.starts_with(env!("CARGO_PKG_VERSION")), "{stdout}");
}

#[test]
fn header_declares_every_entry_point() {
    let text = std::fs::read_to_string(header()).unwrap();
    let source =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs")).unwrap();
    let exported: Vec<&str> = source
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 18);
    for name in exported {
        assert!(
            text.contains(&format!("{name}(")),
            "{name} missing from suris.h"
        );
    }
}
