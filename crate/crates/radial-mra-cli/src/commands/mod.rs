//! One module per command family.

pub mod cwt;
pub mod fwt;
pub mod plotdata;
pub mod scaling;
pub mod transform;
