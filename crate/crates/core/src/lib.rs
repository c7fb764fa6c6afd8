//! Exact computation of the SL2(C) character varieties of the two-bridge
//! knots J(2n,2n): the two components, their affine intersection points,
//! 2-adic integrality certificates for meridian and longitude traces, and the
//! boundary slope those points detect.

pub mod arith;
pub mod cheb;
pub mod error;
pub mod factor;
pub mod fixtures;
pub mod intersect;
pub mod knotgrp;
pub mod numeric;
pub mod numfield;
pub mod report;
pub mod trace;
pub mod variety;
pub mod verify;

pub use arith::{BiPoly, RatMatrix, UniPoly};
pub use error::{Error, Result};
