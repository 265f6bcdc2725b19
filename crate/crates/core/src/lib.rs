//! Exact computation of genus-0 equivariant relative Gromov-Witten
//! invariants of the projective line whose relative condition is total
//! ramification over one point, together with the chamber structure of
//! their parameter space.
//!
//! For `m >= 2` nonnegative integers `x_1 >= ... >= x_m` and a degree
//! `y >= 1` with `1 + sum(x) >= y`, the invariant is an exact rational
//! `F(x_1,...,x_m,y)` (the full equivariant value carries an extra factor
//! `t^{1 + sum(x) - y}`). The crate evaluates `F` along three independent
//! routes and cross-checks them:
//!
//! - **series path** ([`invariants::f_value`]): coefficient extraction from
//!   generating functions built on the tree function `W(q)`;
//! - **polynomial path** ([`chambers::chamber_poly`]): closed-form chamber
//!   polynomials of degree at most `2m - 4`, assembled per chamber of the
//!   parameter space;
//! - **graph path** ([`invariants::f_graph_oracle`]): a direct sum over
//!   localization graphs with exact vertex, edge and rubber factors.
//!
//! The parameter space is cut into chambers by the resonance walls
//! `sum_{i in I} x_i = y` over subsets `|I| <= m - 2`; `F` is polynomial on
//! the closure of each chamber, differences across a wall are given by
//! [`chambers::wall_crossing_poly`], and on the totally negative chamber
//! `F` has the closed form [`chambers::totally_negative_poly`].
//!
//! All arithmetic is exact ([`arith::Rat`]); nothing is floating point.

pub mod arith;
pub mod chambers;
pub mod cli;
pub mod combinatorics;
mod error;
pub mod invariants;
pub mod series;
pub mod unipoly;

pub use arith::{Int, Rat};
pub use error::Error;
