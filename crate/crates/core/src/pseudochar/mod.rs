//! Central functions, the multilinear forms `f^[n]`, and the determinant
//! and characteristic polynomial of a pseudocharacter.
//!
//! For a central `f: R -> A` the forms are defined by `f^[1] = f` and
//!
//! ```text
//! f^[n](x1..xn) = f(xn) f^[n-1](x1..x(n-1)) - sum_i f^[n-1](x1.., xi*xn, ..x(n-1))
//! ```
//!
//! A pseudocharacter of dimension `d` is a linear central `f` with
//! `f(1) = d`, `d!` invertible and `f^[d+1] = 0`. Its determinant is
//! `D_f(x) = f^[d](x, .., x) / d!`.

mod central;
mod checks;
mod det;
mod forms;
mod taylor;

pub use central::{Caps, CentralFunction};
pub use checks::{
    check_pseudocharacter, degree_d_product_check, multiplicativity_check, product_formula_check,
    trace_roundtrip_check, unit_arguments_check, AxiomCheck, AxiomReport, Comparison,
    RoundTripEntry,
};
pub use det::{
    char_poly, char_poly_by_interpolation, det_from_pseudocharacter, CharPoly, RPolynomial,
};
pub use forms::{f_hat, f_rec, f_rec_plain, f_rec_with, Recursion};
pub use taylor::taylor_oracle;
