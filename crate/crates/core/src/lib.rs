//! Exact computational algebra for icosahedral quartic double solids.

pub mod conicbundle;
pub mod grouprep;
pub mod hashimoto;
pub mod numfield;
pub mod polyalg;
pub mod u4w3;
pub mod verifier;
