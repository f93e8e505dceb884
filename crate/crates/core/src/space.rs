use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::symmat::SymVarSpace;

/// Largest variable count accepted by [`Space::from_str`].
pub const MAX_VARIABLES: usize = 1024;

/// The variable space a polynomial is declared over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    /// `z_1, …, z_n`.
    Vector(usize),
    /// Entries `z_ij`, `i ≤ j`, of a symmetric matrix of the given order.
    Sym(SymVarSpace),
}

impl Space {
    pub fn sym(order: usize) -> Self {
        Space::Sym(SymVarSpace::new(order))
    }

    pub fn nvars(&self) -> usize {
        match self {
            Space::Vector(n) => *n,
            Space::Sym(s) => s.nvars(),
        }
    }

    pub fn as_sym(&self) -> Option<&SymVarSpace> {
        match self {
            Space::Sym(s) => Some(s),
            Space::Vector(_) => None,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Vector(n) => write!(f, "vector:{n}"),
            Space::Sym(s) => write!(f, "sym:{}", s.order()),
        }
    }
}

impl FromStr for Space {
    type Err = ParseError;

    /// `vector:N` or `sym:N` with `N ≥ 1`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| ParseError::new(0, "expected vector:N or sym:N"))?;
        let size: usize = n
            .trim()
            .parse()
            .map_err(|_| ParseError::new(kind.len() + 1, "expected a positive size"))?;
        if size == 0 {
            return Err(ParseError::new(kind.len() + 1, "size must be positive"));
        }
        let too_big = || ParseError::new(kind.len() + 1, format!("more than {MAX_VARIABLES} variables"));
        match kind.trim() {
            "vector" if size > MAX_VARIABLES => Err(too_big()),
            "vector" => Ok(Space::Vector(size)),
            "sym" if size > MAX_VARIABLES || size * (size + 1) / 2 > MAX_VARIABLES => Err(too_big()),
            "sym" => Ok(Space::sym(size)),
            _ => Err(ParseError::new(0, format!("unknown space kind '{kind}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("vector:3".parse::<Space>().unwrap(), Space::Vector(3));
        let s: Space = "sym:4".parse().unwrap();
        assert_eq!(s.nvars(), 10);
        assert_eq!(s.to_string(), "sym:4");
        assert!("sym:0".parse::<Space>().is_err());
        assert!("cube:2".parse::<Space>().is_err());
        assert!("vector:1024".parse::<Space>().is_ok());
        assert!("vector:1025".parse::<Space>().is_err());
        assert_eq!("sym:44".parse::<Space>().unwrap().nvars(), 990);
        assert!("sym:45".parse::<Space>().is_err());
        assert!("sym:18446744073709551615".parse::<Space>().is_err());
    }
}
