//! Build the Birkhoff extended formulation and certify, by exact LPs in
//! both directions, that it projects onto the permutahedron.
//!
//! Run with: `cargo run --release --example birkhoff_projection`

use permext::formulation::{build_birkhoff_extension, verify_projection};
use permext::polytope::permutahedron_facets;

fn main() {
    for n in 2..=4 {
        let formulation = build_birkhoff_extension(n).expect("n >= 1");
        println!(
            "n = {n}: d = {} variables, {} equalities, {} nonnegativity rows",
            formulation.dim(),
            formulation.equalities().0.nrows(),
            formulation.inequalities().0.nrows(),
        );
        let facets = permutahedron_facets(n).expect("n >= 2");
        let report = verify_projection(&formulation, &facets).expect("dimensions agree");
        print!("{report}");
        assert!(report.passed());
        println!();
    }
}
