//! Averaging a section over the prefix subgroup H*_w: the partition's
//! closed forms reproduce the definitional group average exactly, at every
//! vertex and every w.
//!
//! Run with: `cargo run --release --example subgroup_averaging`

use permext::audit::{
    average_section, brute_force_average, chain_partition, normalize_kappa_cycles,
    VerifiedPartition,
};
use permext::permgroup::{h_star_subgroup, rho_generators, Permutation};
use permext::section::{canonical_birkhoff_section, derive_weak_symmetry_witness};

fn main() {
    let n = 5;
    let section = canonical_birkhoff_section(n).unwrap();
    let rhos = rho_generators(n).unwrap();
    let witness = derive_weak_symmetry_witness(&section, &rhos).unwrap().unwrap();
    let kappas: Vec<Permutation> = rhos
        .iter()
        .map(|rho| normalize_kappa_cycles(witness.kappa_for(rho).unwrap(), rho, &section).unwrap())
        .collect();
    let partition = chain_partition(&kappas, &section).unwrap();
    let partition = VerifiedPartition::new(partition, &section).unwrap();
    println!(
        "partition: {} ordered sets of size {n}, {} singletons",
        partition.a_sets().len(),
        partition.b_singletons().len()
    );

    let id = Permutation::identity(n);
    for w in 1..n {
        let h = h_star_subgroup(w, n).unwrap();
        let closed = average_section(&section, &partition, &id, w).unwrap();
        let brute = brute_force_average(&section, &id, w).unwrap();
        assert_eq!(closed, brute);
        println!(
            "w = {w}: |H*_{w}| = {:3}, closed form == group average over all {} elements \
             (first block: {:?})",
            h.len(),
            h.len(),
            &closed.entries()[..n]
        );
    }

    // The identity holds at every vertex, not just Λ(id).
    let mut checked = 0;
    for zeta in Permutation::enumerate(n).unwrap() {
        for w in 1..n {
            assert_eq!(
                average_section(&section, &partition, &zeta, w).unwrap(),
                brute_force_average(&section, &zeta, w).unwrap()
            );
            checked += 1;
        }
    }
    println!("verified at all {checked} (vertex, w) pairs");
}
