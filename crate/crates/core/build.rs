fn main() {
    // Dense Hermitian eigensolves go through the system LAPACK (zheev).
    println!("cargo:rustc-link-lib=lapack");
    println!("cargo:rustc-link-lib=blas");
}
