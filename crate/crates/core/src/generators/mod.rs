pub mod fixtures;
pub mod line;
pub mod random;
pub mod ribbons;
pub mod thicken;
