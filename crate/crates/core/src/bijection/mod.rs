//! The closure (trees to triangulations) and its inverse, the opening.

mod closure;
mod opening;

pub use closure::{
    closure, half_turn, quarter_turn, random_triangulation, BoundaryItem, Closure, HalfId, PartialFigure,
};
pub use opening::{canonical_root, four_orientation, open, opening, EdgeKind, FourOrientation, CIRCUIT_SEARCH_CAP};
