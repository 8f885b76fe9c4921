//! Exact-arithmetic verification of finite-dimensional Hopf algebra
//! structure, their comodule categories, crossed-product extensions and the
//! braidings those extensions admit.
//!
//! Everything runs over the rationals with exact equality; every verifier
//! returns a structured report whose failures can be reproduced by hand.

pub mod braiding;
pub mod comodule;
pub mod crossed;
pub mod hopf;
pub mod linalg;
pub mod morphisms;
pub mod polysolve;
pub mod report;
pub mod supergroup;
