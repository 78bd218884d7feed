//! Exact rational linear algebra: dense matrices over arbitrary-precision
//! rationals, reduced row echelon form, rank, kernels, span dimension, and
//! the small combinatorial helpers (permutation signs, increasing tuples,
//! binomial coefficients) shared by every other module.
//!
//! Everything here is exact: no tolerances, no floating point. Values are
//! immutable after construction; all functions are pure.

use crate::{Error, Rational, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics on zero denominator
/// (use [`parse_rational`] for untrusted input).
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational from `p` or `p/q` (optionally signed, arbitrary
/// precision). Returns `None` for malformed tokens or a zero denominator.
pub fn parse_rational(tok: &str) -> Option<Rational> {
    match tok.split_once('/') {
        None => tok.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n = n.parse::<BigInt>().ok()?;
            let d = d.parse::<BigInt>().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    num_integer::binomial(n as u128, k as u128)
}

/// Sort indices in place, counting transpositions. Returns the sign of the
/// sorting permutation (+1/−1), or `None` if any index repeats (in which
/// case an alternating expression vanishes).
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    // Insertion sort: counts exactly the number of adjacent transpositions.
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in idx.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some(sign)
}

/// All strictly increasing `len`-tuples with entries in `0..universe`, in
/// lexicographic order. `len == 0` yields exactly one empty tuple;
/// `len > universe` yields none.
pub fn increasing_tuples(universe: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len > universe {
        return out;
    }
    let mut cur: Vec<usize> = (0..len).collect();
    loop {
        out.push(cur.clone());
        // Advance to the next combination in lex order.
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 <= universe - (len - i) {
                cur[i] += 1;
                for j in i + 1..len {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Dense matrix over the rationals, row-major. Unset entries are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Build from explicit rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has length {} but row 0 has length {ncols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: nrows, cols: ncols, data })
    }

    /// Build from columns (each of the same length).
    pub fn from_columns(cols: &[Vec<Rational>]) -> Result<Matrix> {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, |c| c.len());
        for (i, c) in cols.iter().enumerate() {
            if c.len() != nrows {
                return Err(Error::ShapeMismatch(format!(
                    "column {i} has length {} but column 0 has length {nrows}",
                    c.len()
                )));
            }
        }
        let mut m = Matrix::zeros(nrows, ncols);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry accessor; panics if out of range.
    pub fn get(&self, r: usize, c: usize) -> &Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to_entry(&mut self, r: usize, c: usize, v: &Rational) {
        if !v.is_zero() {
            let e = &mut self.data[r * self.cols + c];
            *e += v;
        }
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn trace(&self) -> Rational {
        let n = self.rows.min(self.cols);
        let mut t = Rational::zero();
        for i in 0..n {
            t += self.get(i, i);
        }
        t
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.get(r, c).is_zero() {
                    m.set(c, r, self.get(r, c).clone());
                }
            }
        }
        m
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
        Ok(out)
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, other: &Matrix, coeff: &Rational) -> Result<()> {
        self.check_same_shape(other)?;
        if coeff.is_zero() {
            return Ok(());
        }
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            if !b.is_zero() {
                *a += b * coeff;
            }
        }
        Ok(())
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            if !a.is_zero() {
                *a = -a.clone();
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            if !a.is_zero() {
                *a *= c;
            }
        }
        out
    }

    /// Matrix product. Skips zero entries of the left factor, which makes
    /// products of the sparse action matrices used throughout this crate
    /// (at most a couple of nonzeros per row/column) essentially linear in
    /// the number of nonzeros.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let e = &mut out.data[i * out.cols + j];
                    *e += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if self.cols != v.len() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() || v[k].is_zero() {
                    continue;
                }
                out[i] += a * &v[k];
            }
        }
        Ok(out)
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Reduced row echelon form together with the pivot column positions.
    /// Each pivot is normalized to 1 and fully eliminated above and below;
    /// rationals stay in lowest terms by construction.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // Deterministic pivot choice: first nonzero entry at or below `row`.
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(row * m.cols + c, p * m.cols + c);
                }
            }
            let inv = {
                let piv = m.get(row, col).clone();
                Rational::one() / piv
            };
            for c in col..m.cols {
                if !m.get(row, c).is_zero() {
                    let v = m.get(row, c) * &inv;
                    m.set(row, c, v);
                }
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    if m.get(row, c).is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - m.get(row, c) * &factor;
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Rank over the rationals, computed exactly.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : self·v = 0}`. The basis is
    /// deterministic: one vector per free column, in ascending column order,
    /// with a 1 in the free position.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                let coeff = r.get(row, free);
                if !coeff.is_zero() {
                    v[p] = -coeff.clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Dimension of the span of a family of vectors (rank of the matrix with
/// those vectors as rows). Errors on mixed lengths.
pub fn span_dimension(vs: &[Vec<Rational>]) -> Result<usize> {
    if vs.is_empty() {
        return Ok(0);
    }
    Ok(Matrix::from_rows(vs.to_vec())?.rank())
}

/// Basis of the intersection of the kernels of several same-width matrices
/// (stack them vertically, take the kernel).
pub fn kernel_intersection(mats: &[&Matrix]) -> Result<Vec<Vec<Rational>>> {
    let Some(first) = mats.first() else {
        return Err(Error::ShapeMismatch("no matrices given".into()));
    };
    let cols = first.cols();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for m in mats {
        if m.cols() != cols {
            return Err(Error::ShapeMismatch(format!(
                "kernel intersection over widths {} and {}",
                cols,
                m.cols()
            )));
        }
        for r in 0..m.rows() {
            rows.push((0..cols).map(|c| m.get(r, c).clone()).collect());
        }
    }
    if rows.is_empty() {
        // All matrices have zero rows: the kernel is everything.
        return Ok((0..cols)
            .map(|i| {
                let mut v = vec![Rational::zero(); cols];
                v[i] = Rational::one();
                v
            })
            .collect());
    }
    Ok(Matrix::from_rows(rows)?.kernel_basis())
}

/// Solve `B·X = T` where `B` has `basis` as columns and `T` has `targets`
/// as columns. Errors if any target is outside the span of the basis.
pub fn express_in_span(basis: &[Vec<Rational>], targets: &[Vec<Rational>]) -> Result<Matrix> {
    let k = basis.len();
    let t = targets.len();
    let b = Matrix::from_columns(basis)?;
    let tm = Matrix::from_columns(targets)?;
    if b.rows() != tm.rows() && t > 0 && k > 0 {
        return Err(Error::ShapeMismatch(format!(
            "basis vectors of length {} vs targets of length {}",
            b.rows(),
            tm.rows()
        )));
    }
    // Augment [B | T] and reduce; a pivot in the T-block means some target
    // escapes the span.
    let mut aug = Matrix::zeros(b.rows(), k + t);
    for r in 0..b.rows() {
        for c in 0..k {
            aug.set(r, c, b.get(r, c).clone());
        }
        for c in 0..t {
            aug.set(r, k + c, tm.get(r, c).clone());
        }
    }
    let (red, pivots) = aug.rref();
    if pivots.iter().any(|&p| p >= k) {
        return Err(Error::Inconsistent(
            "vector outside the spanned subspace (subspace is not invariant)".into(),
        ));
    }
    let mut x = Matrix::zeros(k, t);
    for (row, &p) in pivots.iter().enumerate() {
        for c in 0..t {
            let v = red.get(row, k + c);
            if !v.is_zero() {
                x.set(p, c, v.clone());
            }
        }
    }
    Ok(x)
}

/// Restrict an operator to a subspace: given `m` and independent columns
/// `basis` spanning an `m`-invariant subspace, return the matrix of `m` in
/// that basis. Errors if the subspace is not invariant.
pub fn restrict_operator(m: &Matrix, basis: &[Vec<Rational>]) -> Result<Matrix> {
    let images: Vec<Vec<Rational>> =
        basis.iter().map(|v| m.mul_vec(v)).collect::<Result<_>>()?;
    express_in_span(basis, &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(2, 2).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(4).kernel_basis().is_empty());
        let k = m(&[&[1, -1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // Proportional to (1,1).
        assert_eq!(k[0][0], k[0][1]);
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn kernel_vectors_are_exact_solutions() {
        let a = m(&[&[2, 3, 5, 7], &[1, 0, -1, 2], &[3, 3, 4, 9]]);
        for v in a.kernel_basis() {
            let image = a.mul_vec(&v).unwrap();
            assert!(image.iter().all(|x| x.is_zero()));
        }
        assert_eq!(a.rank() + a.kernel_basis().len(), a.cols());
    }

    #[test]
    fn zero_row_matrix_kernel_is_everything() {
        let a = Matrix::zeros(0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel_basis().len(), 3);
    }

    #[test]
    fn span_dimension_examples() {
        let span = |vs: &[Vec<Rational>]| span_dimension(vs).unwrap();
        assert_eq!(span(&[vec![rat(1), rat(0)], vec![rat(0), rat(1)]]), 2);
        assert_eq!(span(&[vec![rat(1), rat(1)], vec![rat(2), rat(2)]]), 1);
        assert!(span_dimension(&[vec![rat(1)], vec![rat(1), rat(2)]]).is_err());
        assert_eq!(span(&[]), 0);
    }

    #[test]
    fn mul_and_commutator() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        let h = a.commutator(&b).unwrap();
        assert_eq!(h, m(&[&[1, 0], &[0, -1]]));
        assert!(a.mul(&Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn restrict_operator_roundtrip() {
        // Operator with invariant plane spanned by e1, e2.
        let op = m(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 5]]);
        let basis = vec![vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]];
        let r = restrict_operator(&op, &basis).unwrap();
        assert_eq!(r, m(&[&[1, 2], &[3, 4]]));
        // Non-invariant subspace errors.
        let bad = vec![vec![rat(1), rat(0), rat(1)]];
        assert!(restrict_operator(&op, &bad).is_err());
    }

    #[test]
    fn sort_with_sign_examples() {
        let mut a = vec![2, 1, 0];
        assert_eq!(sort_with_sign(&mut a), Some(-1));
        assert_eq!(a, vec![0, 1, 2]);
        let mut b = vec![1, 0, 2];
        assert_eq!(sort_with_sign(&mut b), Some(-1));
        let mut c = vec![1, 1];
        assert_eq!(sort_with_sign(&mut c), None);
        let mut d: Vec<usize> = vec![];
        assert_eq!(sort_with_sign(&mut d), Some(1));
    }

    #[test]
    fn increasing_tuples_counts_and_order() {
        let t = increasing_tuples(4, 2);
        assert_eq!(t.len(), 6);
        assert_eq!(t[0], vec![0, 1]);
        assert_eq!(t[5], vec![2, 3]);
        assert!(t.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(increasing_tuples(6, 4).len(), binomial(6, 4) as usize);
        assert_eq!(increasing_tuples(3, 0), vec![Vec::<usize>::new()]);
        assert!(increasing_tuples(2, 3).is_empty());
    }

    #[test]
    fn parse_rational_handles_edge_cases() {
        assert_eq!(parse_rational("3/4"), Some(ratio(3, 4)));
        assert_eq!(parse_rational("-6/8"), Some(ratio(-3, 4)));
        assert_eq!(parse_rational("5"), Some(rat(5)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("1/2/3"), None);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rank_plus_nullity_is_cols(rows in 1usize..5, cols in 1usize..5,
                                     entries in proptest::collection::vec(-4i64..5, 25)) {
            let a = Matrix::from_rows(
                (0..rows).map(|r| (0..cols).map(|c| rat(entries[r * cols + c])).collect()).collect()
            ).unwrap();
            prop_assert_eq!(a.rank() + a.kernel_basis().len(), cols);
            for v in a.kernel_basis() {
                prop_assert!(a.mul_vec(&v).unwrap().iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn rank_invariant_under_row_ops(cols in 1usize..4,
                                        entries in proptest::collection::vec(-3i64..4, 12),
                                        scale_num in 1i64..5) {
            let rows = 3usize;
            let base: Vec<Vec<Rational>> =
                (0..rows).map(|r| (0..cols).map(|c| rat(entries[r * cols + c])).collect()).collect();
            let a = Matrix::from_rows(base.clone()).unwrap();
            // Swap two rows.
            let mut swapped = base.clone();
            swapped.swap(0, 2);
            let b = Matrix::from_rows(swapped).unwrap();
            prop_assert_eq!(a.rank(), b.rank());
            // Scale a row by a nonzero rational.
            let mut scaled = base;
            for v in scaled[1].iter_mut() {
                *v *= ratio(scale_num, 3);
            }
            let c = Matrix::from_rows(scaled).unwrap();
            prop_assert_eq!(a.rank(), c.rank());
        }

        #[test]
        fn transpose_involution(rows in 1usize..5, cols in 1usize..5,
                                entries in proptest::collection::vec(-4i64..5, 25)) {
            let a = Matrix::from_rows(
                (0..rows).map(|r| (0..cols).map(|c| rat(entries[r * cols + c])).collect()).collect()
            ).unwrap();
            prop_assert_eq!(a.transpose().transpose(), a);
        }
    }
}
