use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Ratio;

use super::Cursor;
use crate::error::ParseError;
use crate::symmat::WeightMatrix;

/// A finite real number, optionally signed, optionally a fraction `p/q`.
pub fn parse_real(src: &str) -> Result<f64, ParseError> {
    let t: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(r) = parse_ratio(&t) {
        return Ok(*r.numer() as f64 / *r.denom() as f64);
    }
    match t.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(ParseError::new(0, format!("malformed number '{t}'"))),
    }
}

fn parse_ratio(t: &str) -> Option<Ratio<i64>> {
    let (n, d) = t.split_once('/').unwrap_or((t, "1"));
    let n: i64 = n.parse().ok()?;
    let d: i64 = d.parse().ok()?;
    (d != 0).then(|| Ratio::new(n, d))
}

/// Rows separated by `;`, entries by `,`, optionally wrapped in `[...]`.
fn grid(src: &str) -> Result<Vec<Vec<(usize, String)>>, ParseError> {
    let mut p = Cursor::new(src);
    let bracketed = p.peek() == Some('[');
    if bracketed {
        p.bump();
    }
    let mut rows = vec![Vec::new()];
    loop {
        let at = p.offset();
        let entry = p.take_until(&[',', ';', ']']);
        if entry.is_empty() {
            return Err(ParseError::new(at, "empty entry"));
        }
        rows.last_mut().expect("at least one row").push((at, entry));
        match p.peek() {
            Some(',') => p.bump(),
            Some(';') => {
                p.bump();
                rows.push(Vec::new());
            }
            Some(']') if bracketed => {
                p.bump();
                break;
            }
            None if !bracketed => break,
            None => return Err(p.error("missing ']'")),
            Some(c) => return Err(p.error(format!("unexpected '{c}'"))),
        }
    }
    if !p.at_end() {
        return Err(p.error("trailing input"));
    }
    Ok(rows)
}

fn reals(rows: Vec<Vec<(usize, String)>>) -> Result<Vec<Vec<f64>>, ParseError> {
    rows.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|(at, s)| {
                    parse_real(&s).map_err(|e| ParseError::new(at + e.position, e.message))
                })
                .collect()
        })
        .collect()
}

/// A real vector such as `[1,0,2]` or `1,0,2`.
pub fn parse_vector(src: &str) -> Result<Vec<f64>, ParseError> {
    let mut rows = reals(grid(src)?)?;
    if rows.len() != 1 {
        return Err(ParseError::new(0, "a vector has a single row"));
    }
    Ok(rows.remove(0))
}

/// A real matrix such as `[1,2;3,4]`.
pub fn parse_matrix(src: &str) -> Result<DMatrix<f64>, ParseError> {
    let rows = reals(grid(src)?)?;
    let ncols = rows[0].len();
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(ParseError::new(0, "rows have different lengths"));
    }
    Ok(DMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j]))
}

/// A square weight matrix, kept exact when every entry is an integer or `p/q`.
pub fn parse_weight_matrix(src: &str) -> Result<WeightMatrix, ParseError> {
    let cells = grid(src)?;
    let n = cells.len();
    if cells.iter().any(|r| r.len() != n) {
        return Err(ParseError::new(0, "weight matrix must be square"));
    }
    let exact: Option<Vec<Vec<Ratio<i64>>>> = cells
        .iter()
        .map(|row| row.iter().map(|(_, s)| parse_ratio(s)).collect())
        .collect();
    match exact {
        Some(rows) => Ok(WeightMatrix::Exact(rows)),
        None => {
            let rows = reals(cells)?;
            Ok(WeightMatrix::Float(DMatrix::from_fn(n, n, |i, j| rows[i][j])))
        }
    }
}

/// A list of 1-based indices such as `1,3` or `[1,3]`, returned 0-based. `[]` is empty.
pub fn parse_index_list(src: &str) -> Result<Vec<usize>, ParseError> {
    let t: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(&t);
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| match s.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(ParseError::new(0, format!("expected a positive index, found '{s}'"))),
        })
        .collect()
}

/// A determinantal term `e1,…,ek=c` with `k = blocks`.
pub fn parse_det_term(src: &str, blocks: usize) -> Result<(Vec<u32>, Complex64), ParseError> {
    let Some(eq) = src.find('=') else {
        return Err(ParseError::new(0, "expected exponents=coefficient"));
    };
    let mut exps = Vec::new();
    let mut offset = 0;
    for part in src[..eq].split(',') {
        match part.trim().parse::<u32>() {
            Ok(e) => exps.push(e),
            Err(_) => return Err(ParseError::new(offset, format!("expected an exponent, found '{}'", part.trim()))),
        }
        offset += part.len() + 1;
    }
    if exps.len() != blocks {
        return Err(ParseError::new(0, format!("expected {blocks} exponents, found {}", exps.len())));
    }
    let c = super::parse_complex(&src[eq + 1..]).map_err(|e| ParseError::new(eq + 1 + e.position, e.message))?;
    Ok((exps, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_terms() {
        assert_eq!(parse_det_term("1,0=2", 2).unwrap(), (vec![1, 0], Complex64::new(2.0, 0.0)));
        assert_eq!(parse_det_term(" 2 =(1-2i)", 1).unwrap(), (vec![2], Complex64::new(1.0, -2.0)));
        assert_eq!(parse_det_term("1,x=1", 2).unwrap_err().position, 2);
        assert!(parse_det_term("1,0", 2).is_err());
        assert!(parse_det_term("1=1", 2).is_err());
        assert!(parse_det_term("1,0=", 2).is_err());
    }

    #[test]
    fn matrices_and_vectors() {
        let m = parse_matrix("[1, 2; 3, 4.5]").unwrap();
        assert_eq!(m, DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 4.5]));
        assert_eq!(parse_vector("1,-2,1e-3").unwrap(), vec![1.0, -2.0, 1e-3]);
        assert!(parse_matrix("[1,2;3]").is_err());
        assert!(parse_matrix("[1,2").is_err());
        assert!(parse_vector("[1;2]").is_err());
    }

    #[test]
    fn weight_matrices_stay_exact() {
        match parse_weight_matrix("[4,4,6;4,4,6;6,6,0]").unwrap() {
            WeightMatrix::Exact(rows) => assert_eq!(rows[0][2], Ratio::from_integer(6)),
            WeightMatrix::Float(_) => panic!("integer weights should be exact"),
        }
        assert!(matches!(
            parse_weight_matrix("[1/2,0;0,0.25]").unwrap(),
            WeightMatrix::Float(_)
        ));
    }

    #[test]
    fn index_lists() {
        assert_eq!(parse_index_list("[1,3]").unwrap(), vec![0, 2]);
        assert_eq!(parse_index_list("[]").unwrap(), Vec::<usize>::new());
        assert!(parse_index_list("0").is_err());
    }
}
