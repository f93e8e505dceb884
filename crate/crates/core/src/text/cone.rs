use super::values::parse_matrix;
use crate::error::ParseError;
use crate::space::Space;
use crate::stabcheck::ConeSpec;

/// Parses `orthant`, `psd` or `poly:[v1;v2;…]` for polynomials over `space`.
pub fn parse_cone(src: &str, space: &Space) -> Result<ConeSpec, ParseError> {
    let lead = src.len() - src.trim_start().len();
    let t = src.trim();
    match t {
        "orthant" => Ok(ConeSpec::Orthant(space.nvars())),
        "psd" => match space {
            Space::Sym(s) => Ok(ConeSpec::Psd(s.order())),
            Space::Vector(_) => Err(ParseError::new(lead, "the psd cone needs a symmetric space")),
        },
        _ => {
            let Some(body) = t.strip_prefix("poly:") else {
                return Err(ParseError::new(
                    lead,
                    format!("unknown cone '{t}', expected orthant, psd or poly:[...]"),
                ));
            };
            let at = lead + "poly:".len();
            let m = parse_matrix(body).map_err(|e| ParseError::new(at + e.position, e.message))?;
            if m.ncols() != space.nvars() {
                return Err(ParseError::new(
                    at,
                    format!(
                        "generators have length {}, space has {} variables",
                        m.ncols(),
                        space.nvars()
                    ),
                ));
            }
            let gens: Vec<Vec<f64>> = m.row_iter().map(|r| r.iter().copied().collect()).collect();
            let cone = ConeSpec::Polyhedral(gens);
            cone.validate().map_err(|e| ParseError::new(at, e.to_string()))?;
            Ok(cone)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cones() {
        assert_eq!(parse_cone("orthant", &Space::Vector(3)).unwrap(), ConeSpec::Orthant(3));
        assert_eq!(parse_cone(" psd ", &Space::sym(3)).unwrap(), ConeSpec::Psd(3));
        assert_eq!(parse_cone("orthant", &Space::sym(2)).unwrap(), ConeSpec::Orthant(3));
        assert_eq!(
            parse_cone("poly:[1,0;1,1]", &Space::Vector(2)).unwrap(),
            ConeSpec::Polyhedral(vec![vec![1.0, 0.0], vec![1.0, 1.0]])
        );
    }

    #[test]
    fn cone_errors() {
        assert!(parse_cone("psd", &Space::Vector(3)).is_err());
        assert!(parse_cone("poly:[1,0,0]", &Space::Vector(2)).is_err());
        assert!(parse_cone("poly:[0,0]", &Space::Vector(2)).is_err());
        assert_eq!(parse_cone("poly:[1,x]", &Space::Vector(2)).unwrap_err().position, 8);
        assert!(parse_cone("cube", &Space::Vector(2)).is_err());
    }
}
