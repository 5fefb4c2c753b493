//! Weighted magic squares and the duality of weight systems they induce:
//! a non-negative integer matrix `Q` is magic for the pair `(W, W')` when
//! every column weighted by `W` sums to `N` and every row weighted by `W'`
//! sums to `N'`, and primitive when moreover `|det Q| = N = N'`. For each of
//! the 14 exceptional weight systems the primitive squares single out the
//! dual weight system uniquely. For complete intersections the search is
//! repeated with the sum of the two degrees and 3x4, 4x3 and 4x4 matrices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::weights::WeightSystem;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MagicError {
    #[error("matrix shape does not match the weight systems")]
    ShapeMismatch,
    #[error("unsupported convention: {0}")]
    UnsupportedConvention(String),
}

/// Matrix shape used in the generalized search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Convention {
    Square4x4,
    Rect3x4,
    Rect4x3,
}

impl Convention {
    pub fn shape(self) -> (usize, usize) {
        match self {
            Convention::Square4x4 => (4, 4),
            Convention::Rect3x4 => (3, 4),
            Convention::Rect4x3 => (4, 3),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, l) = self.shape();
        write!(f, "{k}x{l}")
    }
}

/// Total degree used in the magic conditions: `N` for a hypersurface weight
/// system and `N1 + N2` for a complete intersection one.
pub fn total_degree(ws: &WeightSystem) -> u64 {
    ws.degrees().iter().sum()
}

/// Necessary balance for a magic matrix to exist: summing all weighted
/// entries by columns and by rows gives `N * sum(W')` and `N' * sum(W)`.
/// Returns the two products when they differ.
pub fn counting_obstruction(left: &WeightSystem, right: &WeightSystem) -> Option<(u64, u64)> {
    let by_columns = total_degree(left) * right.weights().iter().sum::<u64>();
    let by_rows = total_degree(right) * left.weights().iter().sum::<u64>();
    (by_columns != by_rows).then_some((by_columns, by_rows))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MagicSquare {
    entries: Vec<Vec<u64>>,
    left: WeightSystem,
    right: WeightSystem,
}

impl MagicSquare {
    pub fn new(
        entries: Vec<Vec<u64>>,
        left: WeightSystem,
        right: WeightSystem,
    ) -> Result<Self, MagicError> {
        let k = left.weights().len();
        let l = right.weights().len();
        if entries.len() != k || entries.iter().any(|row| row.len() != l) {
            return Err(MagicError::ShapeMismatch);
        }
        Ok(MagicSquare {
            entries,
            left,
            right,
        })
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn left(&self) -> &WeightSystem {
        &self.left
    }

    pub fn right(&self) -> &WeightSystem {
        &self.right
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, |row| row.len())
    }

    pub fn is_magic(&self) -> bool {
        let w = self.left.weights();
        let wp = self.right.weights();
        let n = total_degree(&self.left);
        let np = total_degree(&self.right);
        let columns = (0..self.cols()).all(|j| {
            (0..self.rows())
                .map(|i| w[i] * self.entries[i][j])
                .sum::<u64>()
                == n
        });
        let rows = self
            .entries
            .iter()
            .all(|row| row.iter().zip(wp).map(|(&q, &v)| q * v).sum::<u64>() == np);
        columns && rows
    }

    /// Exact determinant, defined for square matrices only.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows() != self.cols() {
            return None;
        }
        let m: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&q| BigInt::from(q)).collect())
            .collect();
        Some(det_laplace(&m))
    }

    pub fn is_primitive(&self) -> bool {
        let n = total_degree(&self.left);
        if total_degree(&self.right) != n {
            return false;
        }
        match self.determinant() {
            Some(det) => det.abs() == BigInt::from(n),
            None => false,
        }
    }

    pub fn transpose(&self) -> MagicSquare {
        let (k, l) = (self.rows(), self.cols());
        let entries = (0..l)
            .map(|j| (0..k).map(|i| self.entries[i][j]).collect())
            .collect();
        MagicSquare {
            entries,
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

impl fmt::Display for MagicSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn det_laplace(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigInt::zero();
    for (i, row) in m.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = &row[0] * det_laplace(&minor);
        if i % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// All non-negative integer columns `q` with `sum w_i q_i = target`, in
/// lexicographic order.
fn column_solutions(weights: &[u64], target: u64) -> Vec<Vec<u64>> {
    fn recurse(weights: &[u64], target: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let Some((&w, rest)) = weights.split_first() else {
            if target == 0 {
                out.push(acc.clone());
            }
            return;
        };
        for q in 0..=target / w {
            acc.push(q);
            recurse(rest, target - q * w, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    recurse(weights, target, &mut Vec::new(), &mut out);
    out
}

fn search(
    left: &WeightSystem,
    right: &WeightSystem,
    require_primitive: bool,
    stop_after_first: bool,
) -> Vec<MagicSquare> {
    let k = left.weights().len();
    let l = right.weights().len();
    let n = total_degree(left);
    let np = total_degree(right);
    if require_primitive && (k != l || n != np) {
        return Vec::new();
    }
    let candidates = column_solutions(left.weights(), n);
    let wp = right.weights();
    let mut columns: Vec<&Vec<u64>> = Vec::new();
    let mut row_sums = vec![0u64; k];
    let mut out = Vec::new();
    assemble(
        &candidates,
        wp,
        np,
        l,
        &mut columns,
        &mut row_sums,
        &mut |columns| {
            let entries: Vec<Vec<u64>> = (0..k)
                .map(|i| columns.iter().map(|col| col[i]).collect())
                .collect();
            let square = MagicSquare {
                entries,
                left: left.clone(),
                right: right.clone(),
            };
            if !require_primitive || square.is_primitive() {
                out.push(square);
                stop_after_first
            } else {
                false
            }
        },
    );
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    out
}

fn assemble<'a>(
    candidates: &'a [Vec<u64>],
    wp: &[u64],
    np: u64,
    remaining: usize,
    columns: &mut Vec<&'a Vec<u64>>,
    row_sums: &mut Vec<u64>,
    emit: &mut impl FnMut(&[&'a Vec<u64>]) -> bool,
) -> bool {
    if remaining == 0 {
        if row_sums.iter().all(|&s| s == np) {
            return emit(columns);
        }
        return false;
    }
    let weight = wp[columns.len()];
    for col in candidates {
        if col
            .iter()
            .zip(row_sums.iter())
            .any(|(&q, &s)| s + q * weight > np)
        {
            continue;
        }
        for (s, &q) in row_sums.iter_mut().zip(col.iter()) {
            *s += q * weight;
        }
        columns.push(col);
        let stop = assemble(candidates, wp, np, remaining - 1, columns, row_sums, emit);
        columns.pop();
        for (s, &q) in row_sums.iter_mut().zip(col.iter()) {
            *s -= q * weight;
        }
        if stop {
            return true;
        }
    }
    false
}

/// Exhaustive list of magic matrices for `(left, right)`, in lexicographic
/// order of the flattened entries. With `require_primitive` only primitive
/// squares are kept.
pub fn find_magic_squares(
    left: &WeightSystem,
    right: &WeightSystem,
    require_primitive: bool,
) -> Vec<MagicSquare> {
    search(left, right, require_primitive, false)
}

fn has_primitive_square(left: &WeightSystem, right: &WeightSystem) -> bool {
    !search(left, right, true, true).is_empty()
}

/// All reduced three-weight systems `W'` with `w1' <= w2' <= w3'` and degree
/// `N` admitting a primitive weighted magic square with `W`. By the duality
/// theorem the result is a single weight system for each of the 14
/// exceptional ones.
pub fn enumerate_duals(ws: &WeightSystem) -> Vec<WeightSystem> {
    let n = total_degree(ws);
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            for c in b..=n {
                if gcd3(a, b, c) != 1 {
                    continue;
                }
                let Ok(candidate) = WeightSystem::hypersurface(a, b, c, n) else {
                    continue;
                };
                if has_primitive_square(ws, &candidate) {
                    out.push(candidate);
                }
            }
        }
    }
    out
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    use num_integer::Integer;
    a.gcd(&b).gcd(&c)
}

/// Generalized search for complete intersection pairs under a fixed matrix
/// convention, using the sum of the degrees on each side. Primitivity is
/// enforced for the square convention only; rectangular conventions report
/// every magic matrix.
pub fn find_generalized_squares(
    left: &WeightSystem,
    right: &WeightSystem,
    convention: Convention,
) -> Result<Vec<MagicSquare>, MagicError> {
    let (k, l) = convention.shape();
    if left.weights().len() != k || right.weights().len() != l {
        return Err(MagicError::UnsupportedConvention(format!(
            "{convention} does not fit weight counts {} and {}",
            left.weights().len(),
            right.weights().len()
        )));
    }
    let require_primitive = k == l;
    Ok(search(left, right, require_primitive, false))
}

/// Like [`find_generalized_squares`] but keeping every magic matrix, so the
/// square convention can be inspected for non-primitive solutions as well.
pub fn find_generalized_magic(
    left: &WeightSystem,
    right: &WeightSystem,
    convention: Convention,
) -> Result<Vec<MagicSquare>, MagicError> {
    let (k, l) = convention.shape();
    if left.weights().len() != k || right.weights().len() != l {
        return Err(MagicError::UnsupportedConvention(format!(
            "{convention} does not fit weight counts {} and {}",
            left.weights().len(),
            right.weights().len()
        )));
    }
    Ok(search(left, right, false, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(text: &str) -> WeightSystem {
        text.parse().unwrap()
    }

    #[test]
    fn magic_and_primitive_checks() {
        let e12 = ws("6,14,21;42");
        let diag = MagicSquare::new(
            vec![vec![7, 0, 0], vec![0, 3, 0], vec![0, 0, 2]],
            e12.clone(),
            e12.clone(),
        )
        .unwrap();
        assert!(diag.is_magic());
        assert!(diag.is_primitive());
        assert_eq!(diag.determinant(), Some(BigInt::from(42)));

        let zero = MagicSquare::new(
            vec![vec![0; 3], vec![0; 3], vec![0; 3]],
            e12.clone(),
            e12.clone(),
        )
        .unwrap();
        assert!(!zero.is_magic());

        let t = diag.transpose();
        assert!(t.is_magic() && t.is_primitive());

        assert_eq!(
            MagicSquare::new(vec![vec![1, 2]], e12.clone(), e12),
            Err(MagicError::ShapeMismatch)
        );
    }

    #[test]
    fn exceptional_searches() {
        let e12 = ws("6,14,21;42");
        let squares = find_magic_squares(&e12, &e12, true);
        assert!(!squares.is_empty());
        let diag = vec![vec![7, 0, 0], vec![0, 3, 0], vec![0, 0, 2]];
        assert!(squares.iter().any(|q| q.entries() == diag.as_slice()));
        for q in &squares {
            assert!(q.is_magic() && q.is_primitive());
        }
        let flat: Vec<&[Vec<u64>]> = squares.iter().map(|q| q.entries()).collect();
        let mut sorted = flat.clone();
        sorted.sort();
        assert_eq!(flat, sorted);

        let e13 = ws("4,10,15;30");
        let z11 = ws("6,8,15;30");
        assert!(!find_magic_squares(&e13, &z11, true).is_empty());

        let s12 = ws("3,4,5;13");
        assert!(find_magic_squares(&e12, &s12, true).is_empty());
    }

    #[test]
    fn dual_weight_enumeration() {
        let duals = |text: &str| {
            enumerate_duals(&ws(text))
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(duals("3,8,12;24"), ["6,8,9;24"]);
        assert_eq!(duals("6,14,21;42"), ["6,14,21;42"]);
        assert_eq!(duals("3,4,4;12"), ["3,4,4;12"]);
        assert_eq!(duals("4,5,6;16"), ["3,4,8;16"]);
    }

    #[test]
    fn counting_obstructions_for_rectangles() {
        let j10 = ws("4,6,7,8;12,14");
        let z10 = ws("2,4,7;14");
        assert_eq!(counting_obstruction(&j10, &z10), Some((338, 350)));
        let k11 = ws("3,4,5,5;8,10");
        let s10 = ws("2,3,4;10");
        assert_eq!(counting_obstruction(&k11, &s10), Some((162, 170)));
        let rect = find_generalized_magic(&j10, &z10, Convention::Rect4x3).unwrap();
        assert!(rect.is_empty());
    }

    #[test]
    fn generalized_square_searches() {
        let j20 = ws("2,4,5,6;8,10");
        let magic = find_generalized_magic(&j20, &j20, Convention::Square4x4).unwrap();
        assert_eq!(magic.len(), 5);
        let mut dets: Vec<i64> = magic
            .iter()
            .map(|q| {
                use num_traits::ToPrimitive;
                q.determinant().unwrap().abs().to_i64().unwrap()
            })
            .collect();
        dets.sort_unstable();
        assert_eq!(dets, [0, 0, 36, 54, 108]);
        assert!(find_generalized_squares(&j20, &j20, Convention::Square4x4)
            .unwrap()
            .is_empty());

        let m10 = ws("2,3,3,4;6,7");
        let primitive = find_generalized_squares(&m10, &m10, Convention::Square4x4).unwrap();
        let entries: Vec<&[Vec<u64>]> = primitive.iter().map(|q| q.entries()).collect();
        assert_eq!(
            entries,
            [
                &[
                    vec![1, 0, 1, 2],
                    vec![0, 2, 1, 1],
                    vec![1, 1, 0, 2],
                    vec![2, 1, 2, 0]
                ][..],
                &[
                    vec![1, 0, 1, 2],
                    vec![1, 1, 0, 2],
                    vec![0, 2, 1, 1],
                    vec![2, 1, 2, 0]
                ][..],
                &[
                    vec![1, 1, 0, 2],
                    vec![0, 1, 2, 1],
                    vec![1, 0, 1, 2],
                    vec![2, 2, 1, 0]
                ][..],
                &[
                    vec![1, 1, 0, 2],
                    vec![1, 0, 1, 2],
                    vec![0, 1, 2, 1],
                    vec![2, 2, 1, 0]
                ][..],
            ]
        );
        for q in &primitive {
            assert!(q.is_magic() && q.is_primitive());
        }

        let e12 = ws("6,14,21;42");
        assert!(matches!(
            find_generalized_squares(&e12, &j20, Convention::Square4x4),
            Err(MagicError::UnsupportedConvention(_))
        ));
    }
}
