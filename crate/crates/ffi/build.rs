use std::env;
use std::fs;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    let config =
        cbindgen::Config::from_file(crate_dir.join("cbindgen.toml")).expect("read cbindgen.toml");
    let mut header = Vec::new();
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("generate C header")
        .write(&mut header);

    // Rewriting an unchanged header would retrigger dependent builds.
    let target = crate_dir.join("include").join("suris.h");
    if fs::read(&target).ok().as_deref() != Some(header.as_slice()) {
        fs::create_dir_all(target.parent().unwrap()).expect("create include/");
        fs::write(&target, header).expect("write include/suris.h");
    }
}
