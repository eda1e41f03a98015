//! Search for symmetry certificates of the Birkhoff formulation: for each
//! generator of S_n the backtracking search finds a variable permutation
//! and row permutations that map the constraint system onto itself, and
//! certificates compose along the group.
//!
//! Run with: `cargo run --release --example symmetry_certificates`

use permext::formulation::{
    build_birkhoff_extension, find_symmetry_certificate, verify_symmetry_certificate,
};
use permext::permgroup::Permutation;

fn main() {
    let n = 4;
    let formulation = build_birkhoff_extension(n).expect("n >= 1");
    let swap = Permutation::parse("(1 2)", n).unwrap();
    let cycle = Permutation::parse("(1 2 3 4)", n).unwrap();

    let mut certs = Vec::new();
    for pi in [&swap, &cycle] {
        let cert = find_symmetry_certificate(&formulation, pi)
            .expect("search within cap")
            .expect("the Birkhoff formulation is symmetric");
        assert!(verify_symmetry_certificate(&formulation, &cert));
        println!("pi = {pi}: kappa = {}", cert.kappa);
        certs.push(cert);
    }

    let composed = certs[0].compose(&certs[1]);
    assert!(verify_symmetry_certificate(&formulation, &composed));
    println!(
        "composition: pi = {} also verifies (kappa = {})",
        composed.pi, composed.kappa
    );

    // A system with distinct right-hand sides admits no nontrivial symmetry.
    use permext::exactnum::{RatMatrix, RatVector};
    let rigid = permext::formulation::Formulation::new(
        (RatMatrix::identity(3), RatVector::from_ints(&[1, 2, 3])),
        (RatMatrix::zero(0, 3), RatVector::zero(0)),
        RatMatrix::identity(3),
    )
    .unwrap();
    let none = find_symmetry_certificate(&rigid, &Permutation::parse("(1 2)", 3).unwrap())
        .expect("search within cap");
    println!("rigid toy system: certificate for (1 2) exists = {}", none.is_some());
    assert!(none.is_none());
}
