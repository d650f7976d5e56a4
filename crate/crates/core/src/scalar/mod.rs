//! Exact scalars: rationals, rational functions in `s = q^(1/2)`, radicals.

mod poly;
mod radical;
mod rat;
mod ratfunc;

pub use poly::{q_power, Poly};
pub use radical::{rad_mul, split_sqrt, Rad, RadScalar, Surd};
pub use rat::{int_square_split, rat_sqrt, Rat};
pub use ratfunc::{qnum, qnum_half, render_ratio, z_factor, ScalarQ};
