pub mod combinat;
pub mod cones;
pub mod counting;
pub mod error;
pub mod integrality;
pub mod laurent;
pub mod numeric;
pub mod series;
pub mod spectral;
pub mod suites;
pub mod util;

pub use error::{Error, Result};
