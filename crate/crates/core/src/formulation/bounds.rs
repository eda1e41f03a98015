use num_bigint::BigUint;
use num_traits::One;

use crate::exactnum::Rational;

/// `ceil(log2(n!))`: every extension of `Π_n` has at least this many facets,
/// since each of the `n!` vertices is the projection of a face and a
/// polyhedron with `f` facets has at most `2^f` faces.
pub fn face_count_lower_bound(n: usize) -> usize {
    let mut factorial = BigUint::one();
    for k in 2..=n {
        factorial *= BigUint::from(k);
    }
    ceil_log2(&factorial)
}

fn ceil_log2(x: &BigUint) -> usize {
    let bits = x.bits() as usize;
    debug_assert!(bits > 0, "log2 needs a positive argument");
    let is_power_of_two = (x & (x - BigUint::one())) == BigUint::from(0u32);
    if is_power_of_two {
        bits - 1
    } else {
        bits
    }
}

/// `n(n-1)/4`: no symmetric extended formulation of `Π_n` (for `n >= 6`) has
/// fewer variables plus constraints than this.
pub fn combined_lower_bound(n: usize) -> Rational {
    Rational::new((n * n.saturating_sub(1)) as i64, 4).expect("denominator is 4")
}

/// `n(n-1)/2`: no weakly symmetric subspace extension of `Π_n` (for
/// `n >= 6`) has fewer variables than this.
pub fn symmetric_variable_lower_bound(n: usize) -> Rational {
    Rational::new((n * n.saturating_sub(1)) as i64, 2).expect("denominator is 2")
}
