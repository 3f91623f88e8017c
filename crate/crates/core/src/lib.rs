//! Transversal structures on irreducible triangulations of the 4-gon.

pub mod bijection;
pub mod counting;
pub mod drawing;
pub mod error;
pub mod experiment;
pub mod io;
pub mod planar_map;
pub mod rng;
pub mod ternary_tree;
pub mod transversal;

pub use error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }
}

impl std::str::FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "red" | "r" | "R" => Ok(Color::Red),
            "blue" | "b" | "B" => Ok(Color::Blue),
            _ => Err(Error::InvalidStructure(format!("unknown color {s:?}"))),
        }
    }
}
