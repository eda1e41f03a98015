//! Rewrite a formulation with free variables and inequality rows as a
//! subspace extension (nonnegative variables, equations only), staying
//! within the `2d + f` dimension bound and preserving the projection.
//!
//! Run with: `cargo run --release --example subspace_transform`

use permext::formulation::{
    build_birkhoff_extension, to_subspace_extension, verify_projection, ColumnOrigin,
};
use permext::polytope::permutahedron_facets;

fn main() {
    let n = 3;
    let formulation = build_birkhoff_extension(n).expect("n >= 1");
    let d = formulation.dim();
    let f = formulation.inequalities().0.nrows();
    let transform = to_subspace_extension(&formulation).expect("well-formed input");

    let mut kept = 0;
    let mut split = 0;
    let mut slack = 0;
    for origin in &transform.columns {
        match origin {
            ColumnOrigin::Original(_) => kept += 1,
            ColumnOrigin::PositivePart(_) => split += 1,
            ColumnOrigin::NegativePart(_) => {}
            ColumnOrigin::Slack(_) => slack += 1,
        }
    }
    println!("input: d = {d} variables, f = {f} inequality rows");
    println!(
        "output: {} variables ({kept} kept sign-constrained, {split} split into pairs, \
         {slack} slacks); bound 2d + f = {}",
        transform.extension.dim(),
        2 * d + f
    );
    assert!(transform.extension.dim() <= 2 * d + f);

    let report = verify_projection(&transform.extension, &permutahedron_facets(n).unwrap())
        .expect("dimensions agree");
    print!("{report}");
    assert!(report.passed());
}
