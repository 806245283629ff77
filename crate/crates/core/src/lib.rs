//! Cover-based direct manipulation for 2D screen objects.

pub mod constraints;
pub mod cover;
pub mod geometry;
pub mod groups;
pub mod engine;
pub mod object;
pub mod scene;
pub mod shapes;
