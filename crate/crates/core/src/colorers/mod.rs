pub mod auto;
pub mod circular;
pub mod cover;
pub mod icosahedral;
pub mod line;
pub mod reductions;
pub mod three_cliqued;
pub mod two_join;
pub mod vizing;
