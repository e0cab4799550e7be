//! Numeric building blocks: rigorous complex balls, rational univariate
//! polynomials and root isolation.

pub mod ball;
pub mod poly;
pub mod roots;
