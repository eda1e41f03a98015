//! Sections and their component functions: verify the canonical Birkhoff
//! section, derive its weak-symmetry witness, compute isotropy groups and
//! essential elements, and find subgroup witnesses by brute force.
//!
//! Run with: `cargo run --release --example section_isotropy`

use permext::formulation::birkhoff_z_extension;
use permext::permgroup::{factorial, rho_generators, symmetric_group};
use permext::section::{
    canonical_birkhoff_section, derive_weak_symmetry_witness, essential_element, isotropy_group,
    verify_section, yannakakis_witness, EssentialElement,
};

fn main() {
    let n = 5;
    let extension = birkhoff_z_extension(n).unwrap();
    let section = canonical_birkhoff_section(n).unwrap();
    println!(
        "canonical section of the z-only extension: n = {n}, d = {}, {} vertices",
        section.dim(),
        section.vertex_count()
    );
    assert_eq!(verify_section(&section, &extension), Ok(true));
    println!("section verifies: every value is feasible and projects to its vertex");

    let rhos = rho_generators(n).unwrap();
    let witness = derive_weak_symmetry_witness(&section, &rhos)
        .unwrap()
        .expect("the canonical section is weakly symmetric");
    for (pi, kappa) in witness.pairs() {
        println!("generator {pi}: kappa = {kappa}");
    }

    let g = symmetric_group(n).unwrap();
    println!("\nisotropy groups under S_{n} (|G| = {}):", g.len());
    for v in 0..n {
        let j = v; // component (i = 0, v)
        let iso = isotropy_group(&section, j, &g).unwrap();
        let essential = essential_element(&section, j).unwrap();
        println!(
            "component z_1_{}: |Iso| = {} (index {}), essential element = {:?}",
            v + 1,
            iso.len(),
            g.len() / iso.len(),
            match essential {
                EssentialElement::Element(e) => format!("{}", e + 1),
                other => format!("{other:?}"),
            }
        );
        assert_eq!(iso.len(), factorial(n - 1));
    }

    // The subgroup lemma witness: the stabilizer of one point needs W of
    // size one; the full group needs none.
    let stab = isotropy_group(&section, 0, &g).unwrap();
    let witness_set = yannakakis_witness(&stab, 1, n).unwrap();
    println!("\nsubgroup witness for Iso(z_1_1): W = {:?} (1-based)", {
        witness_set.map(|w| w.iter().map(|v| v + 1).collect::<Vec<_>>())
    });
    let full = yannakakis_witness(&g, 1, n).unwrap();
    println!("subgroup witness for S_{n} itself: W = {full:?}");
}
