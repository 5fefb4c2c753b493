//! Exact integer bilinear forms: star-tree graph lattices, the hyperbolic
//! plane U, the negative-definite E8 form, the K3 and rank-24 building blocks,
//! and exact determinants, Smith normal forms, signatures, and Coxeter
//! elements. No floating point anywhere.

use crate::frameshape::FrameShape;
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid Gram data: {0}")]
    InvalidGram(String),
    #[error("the form is degenerate (determinant 0)")]
    DegenerateForm,
    #[error("Coxeter elements require every diagonal entry to be -2")]
    DiagonalNotMinusTwo,
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(String),
}

/// A lattice presented by a symmetric integer Gram matrix with labeled basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: Vec<Vec<BigInt>>,
    labels: Vec<String>,
}

/// Exact data attached to a Coxeter element: its characteristic polynomial,
/// the Frame shape when the polynomial is a cyclotomic product, and the
/// multiplicative order when it is finite and at most 10⁴.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeAutomorphismReport {
    pub char_poly: IntPolynomial,
    pub frame: Option<FrameShape>,
    pub order: Option<u64>,
}

impl GramLattice {
    pub fn new(gram: Vec<Vec<BigInt>>, labels: Vec<String>) -> Result<Self, LatticeError> {
        let n = gram.len();
        if labels.len() != n {
            return Err(LatticeError::InvalidGram(format!(
                "{} labels for a rank-{n} matrix",
                labels.len()
            )));
        }
        for row in &gram {
            if row.len() != n {
                return Err(LatticeError::InvalidGram("matrix is not square".into()));
            }
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::InvalidGram(format!(
                        "asymmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(GramLattice { gram, labels })
    }

    /// Convenience constructor with generated labels `e1..en`.
    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        let gram = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let labels = (1..=rows.len()).map(|i| format!("e{i}")).collect();
        GramLattice::new(gram, labels)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// All-(−2) chain `v1 − v2 − … − vn` (the A_n diagram), edges +1.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        let mut gram = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = BigInt::from(-2);
        }
        for i in 0..n.saturating_sub(1) {
            gram[i][i + 1] = BigInt::one();
            gram[i + 1][i] = BigInt::one();
        }
        let labels = (1..=n).map(|i| format!("v{i}")).collect();
        GramLattice { gram, labels }
    }

    fn star(arms: &[u64]) -> Self {
        assert!(arms.iter().all(|&b| b >= 2), "arm lengths must be >= 2");
        let chain_lens: Vec<usize> = arms.iter().map(|&b| (b - 1) as usize).collect();
        let n = 1 + chain_lens.iter().sum::<usize>();
        let center = n - 1;
        let mut gram = vec![vec![BigInt::zero(); n]; n];
        let mut labels = vec![String::new(); n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = BigInt::from(-2);
        }
        labels[center] = "c".into();
        let mut idx = 0;
        for (arm, &len) in chain_lens.iter().enumerate() {
            let chain: Vec<usize> = (idx..idx + len).collect();
            idx += len;
            for (pos, &v) in chain.iter().enumerate() {
                labels[v] = format!("a{}.{}", arm + 1, pos + 1);
            }
            for w in chain.windows(2) {
                gram[w[0]][w[1]] = BigInt::one();
                gram[w[1]][w[0]] = BigInt::one();
            }
            if let Some(&last) = chain.last() {
                gram[last][center] = BigInt::one();
                gram[center][last] = BigInt::one();
            }
        }
        GramLattice { gram, labels }
    }

    /// Star tree with three chains of lengths `b_i − 1` joined at a central
    /// vertex (ordered last), every diagonal −2, every tree edge +1.
    pub fn star3(b1: u64, b2: u64, b3: u64) -> Self {
        GramLattice::star(&[b1, b2, b3])
    }

    /// Star tree with four chains, same conventions as [`star3`](Self::star3).
    pub fn star4(b1: u64, b2: u64, b3: u64, b4: u64) -> Self {
        GramLattice::star(&[b1, b2, b3, b4])
    }

    /// The unimodular hyperbolic plane `U = [[0,1],[1,0]]`.
    pub fn hyperbolic_u() -> Self {
        let gram = vec![
            vec![BigInt::zero(), BigInt::one()],
            vec![BigInt::one(), BigInt::zero()],
        ];
        GramLattice {
            gram,
            labels: vec!["u1".into(), "u2".into()],
        }
    }

    /// The negative-definite E8 form, realized by the star tree of the E8
    /// diagram (determinant 1, signature (0,8,0)).
    pub fn minus_e8() -> Self {
        GramLattice::star3(2, 3, 5)
    }

    /// The full K3 homology lattice `(−E8)² ⊕ U³`, rank 22.
    pub fn k3_lattice() -> Self {
        let e8 = GramLattice::minus_e8();
        let u = GramLattice::hyperbolic_u();
        [&e8, &u, &u, &u]
            .into_iter()
            .fold(e8.clone(), |acc, b| acc.direct_sum(b))
    }

    /// `(−E8)² ⊕ U⁴`, rank 24, signature (4,20).
    pub fn k24() -> Self {
        GramLattice::k3_lattice().direct_sum(&GramLattice::hyperbolic_u())
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &GramLattice) -> Self {
        let n = self.rank();
        let m = other.rank();
        let mut gram = vec![vec![BigInt::zero(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = self.gram[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                gram[n + i][n + j] = other.gram[i][j].clone();
            }
        }
        let labels = self
            .labels
            .iter()
            .chain(&other.labels)
            .cloned()
            .collect();
        GramLattice { gram, labels }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. The empty
    /// lattice has determinant 1.
    pub fn determinant(&self) -> BigInt {
        let n = self.rank();
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.gram.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = t;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = std::mem::take(&mut m[n - 1][n - 1]);
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Invariant factors `d₁ | d₂ | …` of the Gram matrix over ℤ, including
    /// the unit factors, with `∏ dᵢ = |det|`. Integer Smith normal form with
    /// full pivoting on the entry of smallest absolute value.
    pub fn smith_invariants(&self) -> Result<Vec<BigInt>, LatticeError> {
        if self.determinant().is_zero() {
            return Err(LatticeError::DegenerateForm);
        }
        let n = self.rank();
        let mut m = self.gram.clone();
        let mut out = Vec::with_capacity(n);
        for t in 0..n {
            loop {
                let mut best: Option<(usize, usize)> = None;
                for i in t..n {
                    for j in t..n {
                        if m[i][j].is_zero() {
                            continue;
                        }
                        if best
                            .map_or(true, |(bi, bj)| m[i][j].magnitude() < m[bi][bj].magnitude())
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let (bi, bj) = best.expect("nondegenerate form has full rank");
                m.swap(t, bi);
                for row in m.iter_mut() {
                    row.swap(t, bj);
                }
                let mut clean = true;
                for i in t + 1..n {
                    if m[i][t].is_zero() {
                        continue;
                    }
                    let q = &m[i][t] / &m[t][t];
                    if !q.is_zero() {
                        for j in t..n {
                            let s = &m[i][j] - &q * &m[t][j];
                            m[i][j] = s;
                        }
                    }
                    if !m[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..n {
                    if m[t][j].is_zero() {
                        continue;
                    }
                    let q = &m[t][j] / &m[t][t];
                    if !q.is_zero() {
                        for i in t..n {
                            let s = &m[i][j] - &q * &m[i][t];
                            m[i][j] = s;
                        }
                    }
                    if !m[t][j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                let mut divides_all = true;
                'scan: for i in t + 1..n {
                    for j in t + 1..n {
                        if !(&m[i][j] % &m[t][t]).is_zero() {
                            for jj in t..n {
                                let s = &m[t][jj] + &m[i][jj];
                                m[t][jj] = s;
                            }
                            divides_all = false;
                            break 'scan;
                        }
                    }
                }
                if divides_all {
                    break;
                }
            }
            out.push(m[t][t].abs());
        }
        Ok(out)
    }

    /// Sylvester inertia `(positive, negative, zero)` by exact rational
    /// symmetric elimination (congruence transformations only).
    pub fn signature(&self) -> (usize, usize, usize) {
        let n = self.rank();
        let mut m: Vec<Vec<BigRational>> = self
            .gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        let swap_basis = |m: &mut Vec<Vec<BigRational>>, a: usize, b: usize| {
            m.swap(a, b);
            for row in m.iter_mut() {
                row.swap(a, b);
            }
        };
        let add_basis = |m: &mut Vec<Vec<BigRational>>, dst: usize, src: usize| {
            for j in 0..m.len() {
                let s = &m[dst][j] + &m[src][j];
                m[dst][j] = s;
            }
            for row in m.iter_mut() {
                let s = &row[dst] + &row[src];
                row[dst] = s;
            }
        };
        let (mut pos, mut neg, mut zero) = (0, 0, 0);
        for k in 0..n {
            if m[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                    swap_basis(&mut m, k, j);
                } else {
                    let mut found = None;
                    'search: for i in k..n {
                        for j in i + 1..n {
                            if !m[i][j].is_zero() {
                                found = Some((i, j));
                                break 'search;
                            }
                        }
                    }
                    match found {
                        Some((i, j)) => {
                            // All remaining diagonal entries vanish, so adding
                            // basis vector j to i makes the (i,i) entry 2·m[i][j].
                            add_basis(&mut m, i, j);
                            if i != k {
                                swap_basis(&mut m, k, i);
                            }
                        }
                        None => {
                            zero += n - k;
                            return (pos, neg, zero);
                        }
                    }
                }
            }
            let pivot = m[k][k].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let f = &m[i][k] / &pivot;
                for j in k..n {
                    let s = &m[i][j] - &f * &m[k][j];
                    m[i][j] = s;
                }
                for row in m.iter_mut().skip(k) {
                    let s = &row[i] - &f * &row[k];
                    row[i] = s;
                }
            }
        }
        (pos, neg, zero)
    }

    /// The Coxeter element `C = −V⁻¹Vᵗ` of a basis of (−2)-vectors, where `V`
    /// is upper triangular with diagonal −1 and the above-diagonal entries of
    /// the Gram matrix. Reports the exact characteristic polynomial, the Frame
    /// shape when the polynomial is a product of cyclotomic factors, and the
    /// multiplicative order when finite and at most 10⁴.
    ///
    /// A finite-order integer matrix has a cyclotomic-product characteristic
    /// polynomial, so the order search only ever tests the one candidate
    /// `h = ord(frame)` and its divisors; without a frame the order is
    /// reported absent immediately.
    pub fn coxeter_element(&self) -> Result<LatticeAutomorphismReport, LatticeError> {
        let n = self.rank();
        let minus_two = BigInt::from(-2);
        if self.gram.iter().enumerate().any(|(i, r)| r[i] != minus_two) {
            return Err(LatticeError::DiagonalNotMinusTwo);
        }
        // V[i][j] = gram[i][j] for i<j, diagonal -1; C solves V·C = −Vᵗ by
        // back substitution, which is integral since det V = ±1.
        let mut v = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            v[i][i] = BigInt::from(-1);
            for j in i + 1..n {
                v[i][j] = self.gram[i][j].clone();
            }
        }
        let mut c = vec![vec![BigInt::zero(); n]; n];
        for col in 0..n {
            for i in (0..n).rev() {
                // rhs of row i for this column: −Vᵗ[i][col] = −V[col][i]
                let mut acc = -v[col][i].clone();
                for j in i + 1..n {
                    acc -= &v[i][j] * &c[j][col];
                }
                // divide by V[i][i] = −1
                c[i][col] = -acc;
            }
        }
        let char_poly = char_poly(&c);
        let frame = FrameShape::from_char_poly_auto(&char_poly).ok();
        let order = frame.as_ref().and_then(|f| {
            let h = f.order();
            if h > 10_000 || !is_identity(&mat_pow(&c, h)) {
                return None;
            }
            crate::frameshape::divisors(h)
                .into_iter()
                .find(|&k| is_identity(&mat_pow(&c, k)))
        });
        Ok(LatticeAutomorphismReport {
            char_poly,
            frame,
            order,
        })
    }
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let t = &a[i][k] * &b[k][j];
                out[i][j] += t;
            }
        }
    }
    out
}

fn mat_identity(n: usize) -> Vec<Vec<BigInt>> {
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    out
}

fn mat_pow(a: &[Vec<BigInt>], mut e: u64) -> Vec<Vec<BigInt>> {
    let mut base = a.to_vec();
    let mut acc = mat_identity(a.len());
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    acc
}

fn is_identity(a: &[Vec<BigInt>]) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}

/// Characteristic polynomial `det(λI − C)` by the Faddeev–LeVerrier
/// recurrence. The recurrence stays integral for an integer matrix: each
/// division `tr(C·Mₖ)/k` is exact.
fn char_poly(c: &[Vec<BigInt>]) -> IntPolynomial {
    let n = c.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = mat_identity(n);
    for k in 1..=n {
        let am = mat_mul(c, &m);
        let mut tr = BigInt::zero();
        for (i, row) in am.iter().enumerate() {
            tr += &row[i];
        }
        let k_big = BigInt::from(k as u64);
        debug_assert!((&tr % &k_big).is_zero());
        let ck = -tr / k_big;
        coeffs[n - k] = ck.clone();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &ck;
        }
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Concatenated Coxeter Frame shape of a direct sum of ADE root systems,
/// written e.g. `"A11+D7+E6"` or `"E6^4"` (`^k` repeats a component).
pub fn coxeter_frame_of_root_system(symbols: &str) -> Result<FrameShape, LatticeError> {
    let mut total = FrameShape::empty();
    for part in symbols.split('+') {
        let part = part.trim();
        let (sym, count) = match part.split_once('^') {
            Some((s, c)) => {
                let count: u32 = c
                    .trim()
                    .parse()
                    .map_err(|_| LatticeError::UnknownSymbol(part.into()))?;
                (s.trim(), count)
            }
            None => (part, 1),
        };
        if count == 0 {
            return Err(LatticeError::UnknownSymbol(part.into()));
        }
        let frame = ade_coxeter_frame(sym)?;
        for _ in 0..count {
            total = total.concatenate(&frame);
        }
    }
    if total.is_empty() {
        return Err(LatticeError::UnknownSymbol(symbols.into()));
    }
    Ok(total)
}

fn ade_coxeter_frame(sym: &str) -> Result<FrameShape, LatticeError> {
    let err = || LatticeError::UnknownSymbol(sym.into());
    let mut chars = sym.chars();
    let letter = chars.next().ok_or_else(err)?;
    let rank: u64 = chars.as_str().parse().map_err(|_| err())?;
    if rank > 64 {
        return Err(err());
    }
    let lattice = match (letter, rank) {
        ('A', n) if n >= 1 => GramLattice::path(n as usize),
        ('D', n) if n >= 4 => GramLattice::star3(2, 2, n - 2),
        ('E', 6) => GramLattice::star3(2, 3, 3),
        ('E', 7) => GramLattice::star3(2, 3, 4),
        ('E', 8) => GramLattice::star3(2, 3, 5),
        _ => return Err(err()),
    };
    let report = lattice.coxeter_element().expect("all diagonals are -2");
    report.frame.ok_or_else(err)
}

/// Parses lattice expressions used by the command line: atoms `star:2,3,7`
/// (three or four arms), `U`, `-E8`, `K3`, `K24`, combined with `+` into
/// direct sums.
pub fn parse_graph(expr: &str) -> Result<GramLattice, LatticeError> {
    let mut acc: Option<GramLattice> = None;
    for part in expr.split('+') {
        let part = part.trim();
        let atom = match part {
            "U" => GramLattice::hyperbolic_u(),
            "-E8" => GramLattice::minus_e8(),
            "K3" => GramLattice::k3_lattice(),
            "K24" => GramLattice::k24(),
            _ => match part.strip_prefix("star:") {
                Some(arms) => {
                    let arms: Result<Vec<u64>, _> =
                        arms.split(',').map(|a| a.trim().parse::<u64>()).collect();
                    let arms = arms.map_err(|_| LatticeError::UnknownSymbol(part.into()))?;
                    if arms.iter().any(|&b| b < 2) {
                        return Err(LatticeError::UnknownSymbol(part.into()));
                    }
                    match arms.len() {
                        3 => GramLattice::star3(arms[0], arms[1], arms[2]),
                        4 => GramLattice::star4(arms[0], arms[1], arms[2], arms[3]),
                        _ => return Err(LatticeError::UnknownSymbol(part.into())),
                    }
                }
                None => return Err(LatticeError::UnknownSymbol(part.into())),
            },
        };
        acc = Some(match acc {
            Some(prev) => prev.direct_sum(&atom),
            None => atom,
        });
    }
    acc.ok_or_else(|| LatticeError::UnknownSymbol(expr.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn det_i64(l: &GramLattice) -> i64 {
        l.determinant().to_i64().unwrap()
    }

    #[test]
    fn star_determinants() {
        let threes = [
            ((2, 3, 7), -1),
            ((2, 4, 5), 2),
            ((2, 3, 10), 4),
            ((3, 3, 6), -9),
            ((2, 3, 5), 1),
            ((4, 4, 4), -16),
            ((3, 4, 4), 8),
        ];
        for ((a, b, c), d) in threes {
            let l = GramLattice::star3(a, b, c);
            assert_eq!(l.rank() as u64, a + b + c - 2);
            assert_eq!(det_i64(&l), d, "star3({a},{b},{c})");
        }
        let fours = [
            ((2, 2, 2, 3), -4),
            ((2, 2, 2, 4), 8),
            ((2, 2, 2, 5), -12),
            ((2, 2, 3, 3), 12),
            ((2, 2, 3, 4), -20),
            ((2, 3, 3, 3), -27),
            ((2, 2, 2, 6), 16),
            ((2, 2, 3, 5), 28),
            ((2, 2, 4, 4), 32),
            ((2, 3, 3, 4), 42),
            ((3, 3, 3, 3), 54),
        ];
        for ((a, b, c, d), det) in fours {
            let l = GramLattice::star4(a, b, c, d);
            assert_eq!(l.rank() as u64, a + b + c + d - 3);
            assert_eq!(det_i64(&l), det, "star4({a},{b},{c},{d})");
        }
    }

    #[test]
    fn standard_blocks() {
        let u = GramLattice::hyperbolic_u();
        assert_eq!(det_i64(&u), -1);
        assert_eq!(u.signature(), (1, 1, 0));

        let e8 = GramLattice::minus_e8();
        assert_eq!(det_i64(&e8), 1);
        assert_eq!(e8.signature(), (0, 8, 0));

        let k3 = GramLattice::k3_lattice();
        assert_eq!(k3.rank(), 22);
        assert_eq!(det_i64(&k3), -1);
        assert_eq!(k3.signature(), (3, 19, 0));

        let k24 = GramLattice::k24();
        assert_eq!(k24.rank(), 24);
        assert_eq!(det_i64(&k24), 1);
        assert_eq!(k24.signature(), (4, 20, 0));
    }

    #[test]
    fn determinants_with_hyperbolic_summand() {
        let u = GramLattice::hyperbolic_u();
        assert_eq!(det_i64(&GramLattice::star3(2, 3, 7).direct_sum(&u)), 1);
        assert_eq!(det_i64(&GramLattice::star3(3, 4, 4).direct_sum(&u)), -8);
        let empty = GramLattice::new(vec![], vec![]).unwrap();
        assert_eq!(det_i64(&empty), 1);
    }

    #[test]
    fn determinant_and_signature_respect_sums() {
        let a = GramLattice::star3(2, 3, 10);
        let b = GramLattice::star4(2, 2, 3, 3);
        let sum = a.direct_sum(&b);
        assert_eq!(sum.determinant(), a.determinant() * b.determinant());
        let (p1, n1, z1) = a.signature();
        let (p2, n2, z2) = b.signature();
        assert_eq!(sum.signature(), (p1 + p2, n1 + n2, z1 + z2));
    }

    #[test]
    fn smith_normal_forms() {
        let snf = |l: &GramLattice| -> Vec<i64> {
            l.smith_invariants()
                .unwrap()
                .iter()
                .map(|d| d.to_i64().unwrap())
                .collect()
        };
        let mut expected = vec![1; 12];
        expected.push(4);
        assert_eq!(snf(&GramLattice::star3(2, 3, 10)), expected);
        assert_eq!(
            snf(&GramLattice::star3(3, 3, 6)),
            vec![1, 1, 1, 1, 1, 1, 1, 1, 3, 3]
        );
        assert_eq!(snf(&GramLattice::star4(2, 2, 2, 3)), vec![1, 1, 1, 1, 2, 2]);
        assert_eq!(
            snf(&GramLattice::star4(3, 3, 3, 3)),
            vec![1, 1, 1, 1, 1, 1, 3, 3, 6]
        );
        assert_eq!(snf(&GramLattice::hyperbolic_u()), vec![1, 1]);
        assert_eq!(snf(&GramLattice::star3(2, 3, 7)), vec![1; 10]);

        for l in [GramLattice::star3(2, 3, 10), GramLattice::star4(3, 3, 3, 3)] {
            let product: BigInt = l.smith_invariants().unwrap().into_iter().product();
            assert_eq!(product, l.determinant().abs());
        }

        let degenerate = GramLattice::from_i64(&[vec![0, 0], vec![0, -2]]).unwrap();
        assert_eq!(
            degenerate.smith_invariants(),
            Err(LatticeError::DegenerateForm)
        );
    }

    #[test]
    fn signatures_of_triangle_lattices() {
        assert_eq!(GramLattice::star3(2, 3, 7).signature(), (1, 9, 0));
        assert_eq!(GramLattice::star3(2, 3, 5).signature(), (0, 8, 0));
        let degenerate = GramLattice::from_i64(&[vec![0, 0], vec![0, -2]]).unwrap();
        assert_eq!(degenerate.signature(), (0, 1, 1));
    }

    #[test]
    fn coxeter_element_of_small_diagrams() {
        let a2 = GramLattice::path(2).coxeter_element().unwrap();
        assert_eq!(a2.char_poly, IntPolynomial::from_i64_coeffs(&[1, 1, 1]));
        assert_eq!(a2.frame, Some(FrameShape::parse("3/1").unwrap()));
        assert_eq!(a2.order, Some(3));

        for n in [1usize, 3, 5, 12] {
            let report = GramLattice::path(n).coxeter_element().unwrap();
            let expected = FrameShape::parse(&format!("{}/1", n + 1)).unwrap();
            assert_eq!(report.frame, Some(expected), "A{n}");
            assert_eq!(report.order, Some(n as u64 + 1), "A{n}");
        }

        let e8 = GramLattice::minus_e8().coxeter_element().unwrap();
        assert_eq!(
            e8.frame,
            Some(FrameShape::parse("2*3*5*30/1*6*10*15").unwrap())
        );
        assert_eq!(e8.order, Some(30));

        let d8 = GramLattice::star3(2, 2, 6).coxeter_element().unwrap();
        assert_eq!(d8.frame, Some(FrameShape::parse("2*14/1*7").unwrap()));
        assert_eq!(d8.order, Some(14));

        let e6 = GramLattice::star3(2, 3, 3).coxeter_element().unwrap();
        assert_eq!(e6.frame, Some(FrameShape::parse("2*3*12/1*4*6").unwrap()));
        let e7 = GramLattice::star3(2, 3, 4).coxeter_element().unwrap();
        assert_eq!(e7.frame, Some(FrameShape::parse("2*3*18/1*6*9").unwrap()));

        assert_eq!(
            GramLattice::hyperbolic_u().coxeter_element(),
            Err(LatticeError::DiagonalNotMinusTwo)
        );
    }

    #[test]
    fn hyperbolic_triangle_has_infinite_order() {
        let report = GramLattice::star3(2, 3, 7).coxeter_element().unwrap();
        assert_eq!(
            report.char_poly,
            IntPolynomial::from_i64_coeffs(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
        );
        assert_eq!(report.frame, None);
        assert_eq!(report.order, None);
    }

    #[test]
    fn root_system_frames() {
        let cases = [
            ("A12+A12", "13^2/1^2"),
            ("A12^2", "13^2/1^2"),
            ("D16+E8", "2^2*3*5*30^2/1^2*6*10*15^2"),
            ("A11+D7+E6", "2^2*3*12^3/1^3*4*6^2"),
            ("E6^4", "2^4*3^4*12^4/1^4*4^4*6^4"),
            ("D10+E7^2", "2^3*3^2*18^3/1^3*6^2*9^3"),
        ];
        for (symbols, frame) in cases {
            assert_eq!(
                coxeter_frame_of_root_system(symbols).unwrap(),
                FrameShape::parse(frame).unwrap(),
                "{symbols}"
            );
        }
        assert!(matches!(
            coxeter_frame_of_root_system("B3"),
            Err(LatticeError::UnknownSymbol(_))
        ));
        assert!(matches!(
            coxeter_frame_of_root_system("D3"),
            Err(LatticeError::UnknownSymbol(_))
        ));
    }

    #[test]
    fn graph_expression_parser() {
        let l = parse_graph("star:2,3,7+U").unwrap();
        assert_eq!(l.rank(), 12);
        assert_eq!(det_i64(&l), 1);
        assert_eq!(parse_graph("K24").unwrap().rank(), 24);
        assert_eq!(parse_graph("U + U").unwrap().rank(), 4);
        assert_eq!(parse_graph("star:2,2,2,3").unwrap().rank(), 6);
        assert!(parse_graph("star:2").is_err());
        assert!(parse_graph("E8").is_err());
        assert!(parse_graph("star:1,2,3").is_err());
    }
}
