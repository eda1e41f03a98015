//! The exact LP layer underneath all verification: two-phase simplex with
//! Bland's rule over arbitrary-precision rationals.
//!
//! Run with: `cargo run --release --example exact_lp`

use permext::exactnum::{solve_exact_lp, LpResult, LpSense, RatMatrix, RatVector, Rational};

fn main() {
    // Maximize x1 over Pi_2 = { x1 + x2 = 3, x1 >= 1, x2 >= 1 }.
    let objective = RatVector::from_ints(&[1, 0]);
    let eq = (
        RatMatrix::from_int_rows(&[&[1, 1]], 2),
        RatVector::from_ints(&[3]),
    );
    let ineq = (
        RatMatrix::from_int_rows(&[&[-1, 0], &[0, -1]], 2),
        RatVector::from_ints(&[-1, -1]),
    );
    let result = solve_exact_lp(&objective, (&eq.0, &eq.1), (&ineq.0, &ineq.1), &[false, false], LpSense::Maximize)
        .unwrap();
    match &result {
        LpResult::Optimal { value, point } => {
            println!("max x1 over Pi_2: value = {value} at {point:?}");
            assert_eq!(value, &Rational::from(2));
        }
        other => panic!("unexpected outcome {other:?}"),
    }

    // Fractional optimum, exactly represented.
    let objective = RatVector::from_ints(&[1, 1]);
    let empty = (RatMatrix::zero(0, 2), RatVector::zero(0));
    let ineq = (
        RatMatrix::from_int_rows(&[&[-1, -2], &[-3, -1]], 2),
        RatVector::from_ints(&[-4, -6]),
    );
    let result = solve_exact_lp(&objective, (&empty.0, &empty.1), (&ineq.0, &ineq.1), &[true, true], LpSense::Minimize)
        .unwrap();
    if let LpResult::Optimal { value, point } = &result {
        println!("min x1+x2 with x1+2x2>=4, 3x1+x2>=6, x>=0: value = {value} at {point:?}");
        assert_eq!(value, &Rational::new(14, 5).unwrap());
    }

    // Infeasibility and unboundedness are detected, not approximated.
    let clash = (
        RatMatrix::from_int_rows(&[&[-1], &[1]], 1),
        RatVector::from_ints(&[-1, 0]),
    );
    let one = RatVector::from_ints(&[1]);
    let empty1 = (RatMatrix::zero(0, 1), RatVector::zero(0));
    let infeasible =
        solve_exact_lp(&one, (&empty1.0, &empty1.1), (&clash.0, &clash.1), &[false], LpSense::Maximize).unwrap();
    println!("x >= 1 and x <= 0: {infeasible:?}");
    let unbounded =
        solve_exact_lp(&one, (&empty1.0, &empty1.1), (&empty1.0, &empty1.1), &[false], LpSense::Maximize).unwrap();
    println!("free maximization: {unbounded:?}");
}
