//! The size bounds at a glance: facet count of the permutahedron, the
//! face-counting lower bound for arbitrary extensions, and the two
//! symmetry lower bounds.
//!
//! Run with: `cargo run --release --example bounds_table`

use permext::formulation::{
    combined_lower_bound, face_count_lower_bound, symmetric_variable_lower_bound,
};

fn main() {
    println!("{:>3} {:>8} {:>10} {:>10} {:>10}", "n", "facets", "any ext", "sym vars", "sym total");
    for n in 2..=10u32 {
        println!(
            "{:>3} {:>8} {:>10} {:>10} {:>10}",
            n,
            (1u64 << n) - 2,
            face_count_lower_bound(n as usize),
            symmetric_variable_lower_bound(n as usize).to_string(),
            combined_lower_bound(n as usize).to_string(),
        );
    }
    println!();
    println!("facets    : 2^n - 2, the minimal description in the original space");
    println!("any ext   : ceil(log2(n!)) facets in any extension, symmetric or not");
    println!("sym vars  : n(n-1)/2 variables in weakly symmetric subspace extensions (n >= 6)");
    println!("sym total : n(n-1)/4 variables plus constraints in symmetric formulations (n >= 6)");
}
