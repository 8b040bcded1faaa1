fn main() {
    #[cfg(feature = "generate-header")]
    {
        let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();
        let out = std::path::Path::new(&crate_dir).join("include/secinv.h");
        cbindgen::Builder::new()
            .with_crate(&crate_dir)
            .with_config(
                cbindgen::Config::from_file(std::path::Path::new(&crate_dir).join("cbindgen.toml"))
                    .expect("cbindgen.toml"),
            )
            .generate()
            .expect("cbindgen generation")
            .write_to_file(out);
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
