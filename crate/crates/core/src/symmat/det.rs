use std::collections::HashMap;

use super::SymVarSpace;
use crate::error::SymError;
use crate::poly::{ExponentVector, Polynomial};

/// Largest order for which determinants and adjugates are expanded symbolically.
pub const DET_ORDER_CAP: usize = 6;

pub(crate) fn check_order(order: usize) -> Result<(), SymError> {
    if order > DET_ORDER_CAP {
        return Err(SymError::OrderTooLarge {
            order,
            cap: DET_ORDER_CAP,
        });
    }
    Ok(())
}

/// Determinant of a square matrix of polynomials by Laplace expansion over column subsets.
///
/// Row `k` is expanded against every `k+1`-subset of columns, so the cost is
/// `O(n 2^n)` polynomial products. The empty matrix has determinant 1.
pub fn poly_matrix_determinant(nvars: usize, m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    assert!(n < usize::BITS as usize);
    let mut minors: HashMap<usize, Polynomial> = HashMap::new();
    minors.insert(0, Polynomial::one(nvars));
    for (k, row) in m.iter().enumerate() {
        let mut next = HashMap::new();
        for mask in (0usize..1 << n).filter(|x| x.count_ones() as usize == k + 1) {
            let mut acc = Polynomial::zero(nvars);
            for (c, entry) in row.iter().enumerate() {
                if mask & (1 << c) == 0 || entry.is_zero() {
                    continue;
                }
                let rest = &minors[&(mask & !(1 << c))];
                if rest.is_zero() {
                    continue;
                }
                let above = (mask >> (c + 1)).count_ones();
                let term = entry * rest;
                acc = if above % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            next.insert(mask, acc);
        }
        minors = next;
    }
    minors
        .remove(&((1usize << n) - 1))
        .unwrap_or_else(|| Polynomial::one(nvars))
}

/// The matrix `Z` of symmetric variables, entry `(i, j)` being `z_ij`.
pub fn variable_matrix(space: &SymVarSpace) -> Vec<Vec<Polynomial>> {
    let n = space.order();
    (0..n)
        .map(|i| (0..n).map(|j| space.var(i, j)).collect())
        .collect()
}

/// `det Z` expanded in the flat variables.
pub fn symbolic_determinant(space: &SymVarSpace) -> Result<Polynomial, SymError> {
    check_order(space.order())?;
    Ok(poly_matrix_determinant(space.nvars(), &variable_matrix(space)))
}

/// Principal minor `det Z_J` in the variables of the ambient space; `det Z_∅ = 1`.
pub fn principal_minor(space: &SymVarSpace, subset: &[usize]) -> Result<Polynomial, SymError> {
    let n = space.order();
    let mut j = subset.to_vec();
    j.sort_unstable();
    j.dedup();
    if j.len() != subset.len() || j.iter().any(|&x| x >= n) {
        return Err(SymError::BadIndexSet { order: n });
    }
    check_order(j.len())?;
    let m: Vec<Vec<Polynomial>> = j
        .iter()
        .map(|&a| j.iter().map(|&b| space.var(a, b)).collect())
        .collect();
    Ok(poly_matrix_determinant(space.nvars(), &m))
}

/// `adj Z`, with `Z · adj Z = det Z · I`.
pub fn symbolic_adjugate(space: &SymVarSpace) -> Result<Vec<Vec<Polynomial>>, SymError> {
    let n = space.order();
    check_order(n)?;
    let z = variable_matrix(space);
    let minor = |skip_row: usize, skip_col: usize| -> Polynomial {
        let m: Vec<Vec<Polynomial>> = (0..n)
            .filter(|&r| r != skip_row)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != skip_col)
                    .map(|c| z[r][c].clone())
                    .collect()
            })
            .collect();
        poly_matrix_determinant(space.nvars(), &m)
    };
    let mut adj = vec![vec![Polynomial::zero(space.nvars()); n]; n];
    for i in 0..n {
        for j in i..n {
            // adj_ij is the (j, i) cofactor.
            let mut c = minor(j, i);
            if (i + j) % 2 == 1 {
                c = -&c;
            }
            adj[j][i] = c.clone();
            adj[i][j] = c;
        }
    }
    Ok(adj)
}

/// A partition of the indices into consecutive diagonal blocks, one of which is inverted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockInversion {
    pub sizes: Vec<usize>,
    /// 0-based index into `sizes`.
    pub target: usize,
}

impl BlockInversion {
    fn validate(&self, order: usize) -> Result<(), SymError> {
        let bad = || SymError::BadBlocks {
            sizes: self.sizes.clone(),
            order,
        };
        if self.sizes.iter().any(|&s| s == 0)
            || self.sizes.iter().sum::<usize>() != order
            || self.target >= self.sizes.len()
        {
            return Err(bad());
        }
        Ok(())
    }

    fn block_of(&self, i: usize) -> usize {
        let mut end = 0;
        for (b, s) in self.sizes.iter().enumerate() {
            end += s;
            if i < end {
                return b;
            }
        }
        unreachable!("index beyond the partition")
    }

    fn offset(&self) -> usize {
        self.sizes[..self.target].iter().sum()
    }
}

/// The image of `f` under `Z ↦ -Z⁻¹`, cleared of denominators.
///
/// With `D` the degree of `f` in the inverted variables, every monomial
/// `c z^e` of degree `d` in them maps to `c (-1)^d Π adj(Z)_ij^{e_ij} det(Z)^{D-d}`,
/// which is `det(Z)^D f(-Z⁻¹)`. With `blocks`, only the target diagonal block is
/// inverted and `f` must not contain variables that couple two blocks.
pub fn inversion_image(
    space: &SymVarSpace,
    f: &Polynomial,
    blocks: Option<&BlockInversion>,
) -> Result<Polynomial, SymError> {
    space.check(f)?;
    let n = space.order();
    let full = BlockInversion {
        sizes: vec![n],
        target: 0,
    };
    let blocks = blocks.unwrap_or(&full);
    blocks.validate(n)?;
    for (e, _) in f.terms() {
        for (k, &x) in e.iter().enumerate() {
            let (i, j) = space.pair(k);
            if x > 0 && blocks.block_of(i) != blocks.block_of(j) {
                return Err(SymError::CrossBlockVariable { row: i, col: j });
            }
        }
    }
    let size = blocks.sizes[blocks.target];
    let offset = blocks.offset();
    let sub = SymVarSpace::new(size);
    let embed = |p: &Polynomial| -> Result<Polynomial, SymError> {
        Ok(p.map_terms(space.nvars(), |e, c| {
            let mut out = vec![0; space.nvars()];
            for (k, &x) in e.iter().enumerate() {
                let (a, b) = sub.pair(k);
                out[space.index(offset + a, offset + b)] += x;
            }
            (ExponentVector::new(out), c)
        })?)
    };
    let det = embed(&symbolic_determinant(&sub)?)?;
    let adj = symbolic_adjugate(&sub)?;
    let inside = |k: usize| {
        let (i, _) = space.pair(k);
        blocks.block_of(i) == blocks.target
    };
    let block_degree = |e: &ExponentVector| -> u32 {
        e.iter()
            .enumerate()
            .filter(|&(k, _)| inside(k))
            .map(|(_, &x)| x)
            .sum()
    };
    let top = f.terms().map(|(e, _)| block_degree(e)).max().unwrap_or(0);

    let mut adj_powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
    let mut det_powers: HashMap<u32, Polynomial> = HashMap::new();
    let mut out = Polynomial::zero(space.nvars());
    for (e, &c) in f.terms() {
        let d = block_degree(e);
        let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
        let mut outside = vec![0; space.nvars()];
        let mut term = Polynomial::one(space.nvars());
        for (k, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            if inside(k) {
                let (i, j) = space.pair(k);
                let image = match adj_powers.get(&(k, x)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = embed(&adj[i - offset][j - offset])?.pow(x);
                        adj_powers.insert((k, x), p.clone());
                        p
                    }
                };
                term = &term * &image;
            } else {
                outside[k] = x;
            }
        }
        let dp = det_powers
            .entry(top - d)
            .or_insert_with(|| det.pow(top - d))
            .clone();
        term = &term * &dp;
        let mono = Polynomial::monomial(ExponentVector::new(outside), c * sign);
        out = &out + &(&term * &mono);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[Vec<Polynomial>], b: &[Vec<Polynomial>], nvars: usize) -> Vec<Vec<Polynomial>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(Polynomial::zero(nvars), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn determinants_of_small_orders() {
        let s1 = SymVarSpace::new(1);
        assert_eq!(symbolic_determinant(&s1).unwrap(), s1.var(0, 0));
        let s2 = SymVarSpace::new(2);
        let d2 = &(&s2.var(0, 0) * &s2.var(1, 1)) - &s2.var(0, 1).pow(2);
        assert_eq!(symbolic_determinant(&s2).unwrap(), d2);
        let s3 = SymVarSpace::new(3);
        let d3 = symbolic_determinant(&s3).unwrap();
        assert_eq!(d3.len(), 5);
        assert!(d3.is_homogeneous());
        assert_eq!(d3.total_degree(), 3);
        assert!(symbolic_determinant(&SymVarSpace::new(7)).is_err());
    }

    #[test]
    fn adjugate_identity() {
        for n in 1..=4 {
            let s = SymVarSpace::new(n);
            let z = variable_matrix(&s);
            let adj = symbolic_adjugate(&s).unwrap();
            let det = symbolic_determinant(&s).unwrap();
            let prod = matmul(&z, &adj, s.nvars());
            for (i, row) in prod.iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    let expect = if i == j { det.clone() } else { Polynomial::zero(s.nvars()) };
                    assert_eq!(*p, expect, "n={n} entry ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn principal_minors() {
        let s = SymVarSpace::new(3);
        assert_eq!(principal_minor(&s, &[]).unwrap(), Polynomial::one(6));
        assert_eq!(principal_minor(&s, &[1]).unwrap(), s.var(1, 1));
        assert_eq!(
            principal_minor(&s, &[0, 1, 2]).unwrap(),
            symbolic_determinant(&s).unwrap()
        );
    }

    #[test]
    fn inversion_of_trace_is_adjugate_trace() {
        let s = SymVarSpace::new(2);
        let tr = &s.var(0, 0) + &s.var(1, 1);
        let img = inversion_image(&s, &tr, None).unwrap();
        assert_eq!(img, -&tr);
        let det = symbolic_determinant(&s).unwrap();
        // det(-Z^{-1}) = 1/det Z, cleared by det(Z)^2 gives det Z.
        assert_eq!(inversion_image(&s, &det, None).unwrap(), det);
    }

    #[test]
    fn block_inversion_rejects_coupling() {
        let s = SymVarSpace::new(3);
        let f = &s.var(0, 0) + &s.var(0, 2);
        let blocks = BlockInversion {
            sizes: vec![2, 1],
            target: 0,
        };
        assert!(matches!(
            inversion_image(&s, &f, Some(&blocks)),
            Err(SymError::CrossBlockVariable { .. })
        ));
        let g = &(&s.var(0, 0) * &s.var(2, 2)) + &s.var(2, 2);
        // Degree in the first block is 1: z11 z33 ↦ -z22 z33, z33 ↦ z33 det.
        let img = inversion_image(&s, &g, Some(&blocks)).unwrap();
        let det2 = &(&s.var(0, 0) * &s.var(1, 1)) - &s.var(0, 1).pow(2);
        let expect = &(-&(&s.var(1, 1) * &s.var(2, 2))) + &(&s.var(2, 2) * &det2);
        assert_eq!(img, expect);
    }
}
