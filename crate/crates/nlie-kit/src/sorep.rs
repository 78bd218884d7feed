//! Orthogonal Lie algebras over the rationals and a toolbox of their exact
//! matrix representations: polynomial and harmonic-polynomial actions,
//! weighted modules of the 4-dimensional orthogonal algebra built from
//! tensor products and a quaternion model, Casimir operators, wedge squares,
//! and a JSON interchange format for representations.

use crate::basiclie::LieAlgebra;
use crate::exact::{
    kernel_intersection, parse_rational, rat, ratio, restrict_operator, Matrix,
};
use crate::{Error, Rational, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Basis pairs `(i, j)` with `1 <= i < j <= m` in lexicographic order.
pub fn so_pairs(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(m * (m - 1) / 2);
    for i in 1..=m {
        for j in (i + 1)..=m {
            out.push((i, j));
        }
    }
    out
}

/// Position of the pair `(i, j)` in [`so_pairs`]`(m)`.
pub fn pair_index(i: usize, j: usize, m: usize) -> Result<usize> {
    if i < 1 || j <= i || j > m {
        return Err(Error::IndexOutOfRange(format!(
            "pair ({i},{j}) is not a valid basis pair for m={m}"
        )));
    }
    // Pairs starting with 1..i−1 come first: (m−1) + (m−2) + … + (m−i+1).
    let before: usize = (1..i).map(|a| m - a).sum();
    Ok(before + (j - i - 1))
}

/// Label of the basis element `e_{i j}`.
pub fn so_label(i: usize, j: usize) -> String {
    format!("e_{i}_{j}")
}

/// The orthogonal Lie algebra of size `m >= 3` on the basis `e_{i j}`,
/// `i < j`, with
/// `[e_ab, e_cd] = δ_bc e_ad − δ_bd e_ac − δ_ac e_bd + δ_ad e_bc`
/// where `e_xy = −e_yx` and `e_xx = 0`.
pub fn so_algebra(m: usize) -> Result<LieAlgebra> {
    if m < 3 {
        return Err(Error::InvalidSoSize(m));
    }
    let pairs = so_pairs(m);
    let dim = pairs.len();
    let labels: Vec<String> = pairs.iter().map(|&(i, j)| so_label(i, j)).collect();
    let mut lie = LieAlgebra::new(labels);
    let add_e = |value: &mut Vec<Rational>, x: usize, y: usize, sgn: i64| -> Result<()> {
        if x == y {
            return Ok(());
        }
        let (p, coeff) = if x < y {
            (pair_index(x, y, m)?, rat(sgn))
        } else {
            (pair_index(y, x, m)?, rat(-sgn))
        };
        value[p] += coeff;
        Ok(())
    };
    for (p1, &(a, b)) in pairs.iter().enumerate() {
        for (p2, &(c, d)) in pairs.iter().enumerate().skip(p1 + 1) {
            let mut value = vec![Rational::zero(); dim];
            if b == c {
                add_e(&mut value, a, d, 1)?;
            }
            if b == d {
                add_e(&mut value, a, c, -1)?;
            }
            if a == c {
                add_e(&mut value, b, d, -1)?;
            }
            if a == d {
                add_e(&mut value, b, c, 1)?;
            }
            lie.set_bracket(p1, p2, value)?;
        }
    }
    Ok(lie)
}

/// A representation of a Lie algebra by exact rational matrices, one per
/// basis element. Construction verifies the homomorphism property
/// `ρ([e_i, e_j]) = ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i)` on every basis pair, so a
/// value of this type is always a genuine representation.
#[derive(Clone)]
pub struct LieRep {
    algebra: LieAlgebra,
    matrices: Vec<Matrix>,
    labels: Vec<String>,
}

impl std::fmt::Debug for LieRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieRep(algebra dim={}, module dim={})", self.algebra.dim(), self.dim())
    }
}

impl LieRep {
    /// Build and verify a representation with default basis labels.
    pub fn new(algebra: LieAlgebra, matrices: Vec<Matrix>) -> Result<Self> {
        let d = matrices.first().map(|m| m.rows()).unwrap_or(0);
        let labels = (1..=d).map(|i| format!("m{i}")).collect();
        Self::with_labels(algebra, matrices, labels)
    }

    /// Build and verify a representation with the given module basis labels.
    pub fn with_labels(
        algebra: LieAlgebra,
        matrices: Vec<Matrix>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} matrices for a Lie algebra of dimension {}",
                matrices.len(),
                algebra.dim()
            )));
        }
        let d = if matrices.is_empty() { labels.len() } else { matrices[0].rows() };
        for m in &matrices {
            if m.rows() != d || m.cols() != d {
                return Err(Error::ShapeMismatch(format!(
                    "representation matrices must all be {d}x{d}"
                )));
            }
        }
        if labels.len() != d {
            return Err(Error::ShapeMismatch(format!(
                "{} basis labels for a module of dimension {d}",
                labels.len()
            )));
        }
        let rep = LieRep { algebra, matrices, labels };
        rep.verify()?;
        Ok(rep)
    }

    fn verify(&self) -> Result<()> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let comm = self.matrices[i].commutator(&self.matrices[j])?;
                let expected = self.apply(&self.algebra.bracket_basis(i, j))?;
                if comm != expected {
                    return Err(Error::Inconsistent(format!(
                        "matrices fail the bracket of basis elements {} and {}",
                        self.algebra.label(i),
                        self.algebra.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Dimension of the module the matrices act on.
    pub fn dim(&self) -> usize {
        self.matrices.first().map(|m| m.rows()).unwrap_or(self.labels.len())
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Matrix of a general algebra element given by coefficients.
    pub fn apply(&self, coeffs: &[Rational]) -> Result<Matrix> {
        if coeffs.len() != self.algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for a Lie algebra of dimension {}",
                coeffs.len(),
                self.algebra.dim()
            )));
        }
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for (c, m) in coeffs.iter().zip(self.matrices.iter()) {
            if !c.is_zero() {
                out.add_scaled(m, c)?;
            }
        }
        Ok(out)
    }

    /// Block-diagonal sum with another representation of the same algebra.
    pub fn direct_sum(&self, other: &LieRep) -> Result<LieRep> {
        if !self.algebra.same_structure(&other.algebra) {
            return Err(Error::AlgebraMismatch(
                "direct sum requires representations of the same Lie algebra".into(),
            ));
        }
        let (d1, d2) = (self.dim(), other.dim());
        let mats = self
            .matrices
            .iter()
            .zip(other.matrices.iter())
            .map(|(a, b)| {
                let mut m = Matrix::zeros(d1 + d2, d1 + d2);
                for r in 0..d1 {
                    for c in 0..d1 {
                        let v = a.get(r, c);
                        if !v.is_zero() {
                            m.set(r, c, v.clone());
                        }
                    }
                }
                for r in 0..d2 {
                    for c in 0..d2 {
                        let v = b.get(r, c);
                        if !v.is_zero() {
                            m.set(d1 + r, d1 + c, v.clone());
                        }
                    }
                }
                m
            })
            .collect();
        let labels = self
            .labels
            .iter()
            .cloned()
            .chain(other.labels.iter().cloned())
            .collect();
        LieRep::with_labels(self.algebra.clone(), mats, labels)
    }

    /// Tensor product with another representation of the same algebra:
    /// `x` acts as `ρ(x) ⊗ 1 + 1 ⊗ σ(x)`.
    pub fn tensor(&self, other: &LieRep) -> Result<LieRep> {
        if !self.algebra.same_structure(&other.algebra) {
            return Err(Error::AlgebraMismatch(
                "tensor product requires representations of the same Lie algebra".into(),
            ));
        }
        let (id1, id2) = (Matrix::identity(self.dim()), Matrix::identity(other.dim()));
        let mats: Vec<Matrix> = self
            .matrices
            .iter()
            .zip(other.matrices.iter())
            .map(|(a, b)| {
                let mut m = kron(a, &id2);
                m.add_scaled(&kron(&id1, b), &rat(1)).expect("same shape");
                m
            })
            .collect();
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for la in &self.labels {
            for lb in &other.labels {
                labels.push(format!("{la}*{lb}"));
            }
        }
        LieRep::with_labels(self.algebra.clone(), mats, labels)
    }

    /// Restriction to an invariant subspace spanned by the given vectors.
    /// Fails if the subspace is not invariant under every matrix.
    pub fn restrict(&self, basis: &[Vec<Rational>]) -> Result<LieRep> {
        let mats: Vec<Matrix> = self
            .matrices
            .iter()
            .map(|m| restrict_operator(m, basis))
            .collect::<Result<_>>()?;
        LieRep::new(self.algebra.clone(), mats)
    }
}

/// Kronecker product `a ⊗ b`.
fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = Matrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    let w = b.get(k, l);
                    if !w.is_zero() {
                        out.set(i * br + k, j * bc + l, v * w);
                    }
                }
            }
        }
    }
    out
}

/// Degree-`t` monomials in `m` variables as exponent vectors, ordered like
/// sorted variable-index tuples: `x1^t` first, `x_m^t` last.
pub fn monomials(m: usize, t: usize) -> Vec<Vec<u32>> {
    fn rec(m: usize, left: usize, start: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for v in start..m {
            current[v] += 1;
            rec(m, left - 1, v, current, out);
            current[v] -= 1;
        }
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; m];
    rec(m, t, 0, &mut current, &mut out);
    out
}

/// Human-readable monomial label: `x1^2*x3`, or `1` for the constant.
pub fn monomial_label(exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (v, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", v + 1)),
            _ => parts.push(format!("x{}^{}", v + 1, e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The action of the orthogonal algebra on degree-`t` polynomials in `m`
/// variables, with `e_{i j}` acting as `x_i ∂_j − x_j ∂_i`.
pub fn polynomial_module(m: usize, t: usize) -> Result<LieRep> {
    let algebra = so_algebra(m)?;
    let mons = monomials(m, t);
    let index: BTreeMap<&Vec<u32>, usize> = mons.iter().zip(0..).collect();
    let labels: Vec<String> = mons.iter().map(|e| monomial_label(e)).collect();
    let d = mons.len();
    let mut mats = Vec::with_capacity(algebra.dim());
    for &(i, j) in &so_pairs(m) {
        let mut mat = Matrix::zeros(d, d);
        for (col, exps) in mons.iter().enumerate() {
            // x_i ∂_j
            if exps[j - 1] > 0 {
                let mut target = exps.clone();
                target[j - 1] -= 1;
                target[i - 1] += 1;
                mat.add_to_entry(index[&target], col, &rat(exps[j - 1] as i64));
            }
            // − x_j ∂_i
            if exps[i - 1] > 0 {
                let mut target = exps.clone();
                target[i - 1] -= 1;
                target[j - 1] += 1;
                mat.add_to_entry(index[&target], col, &rat(-(exps[i - 1] as i64)));
            }
        }
        mats.push(mat);
    }
    LieRep::with_labels(algebra, mats, labels)
}

/// Matrix of the Laplacian `Σ_v ∂_v²` from degree-`t` to degree-`t−2`
/// polynomials in `m` variables (a `0 × dim` matrix when `t < 2`).
pub fn laplacian(m: usize, t: usize) -> Matrix {
    let mons = monomials(m, t);
    if t < 2 {
        return Matrix::zeros(0, mons.len());
    }
    let lower = monomials(m, t - 2);
    let index: BTreeMap<&Vec<u32>, usize> = lower.iter().zip(0..).collect();
    let mut mat = Matrix::zeros(lower.len(), mons.len());
    for (col, exps) in mons.iter().enumerate() {
        for v in 0..m {
            if exps[v] >= 2 {
                let mut target = exps.clone();
                target[v] -= 2;
                let coeff = rat((exps[v] * (exps[v] - 1)) as i64);
                mat.add_to_entry(index[&target], col, &coeff);
            }
        }
    }
    mat
}

/// Dimension of the space of degree-`t` harmonic polynomials in `m`
/// variables (the kernel of the Laplacian on degree `t`).
pub fn laplacian_kernel_dim(m: usize, t: usize) -> usize {
    let lap = laplacian(m, t);
    lap.cols() - lap.rank()
}

/// The orthogonal algebra acting on degree-`t` harmonic polynomials: the
/// polynomial action restricted to the kernel of the Laplacian.
pub fn harmonic_module(m: usize, t: usize) -> Result<LieRep> {
    let poly = polynomial_module(m, t)?;
    let kernel = laplacian(m, t).kernel_basis();
    let mats: Vec<Matrix> = poly
        .matrices()
        .iter()
        .map(|mat| restrict_operator(mat, &kernel))
        .collect::<Result<_>>()?;
    let labels = (1..=kernel.len()).map(|i| format!("h{i}")).collect();
    LieRep::with_labels(poly.algebra().clone(), mats, labels)
}

/// The irreducible module of the 3-dimensional orthogonal algebra with
/// highest weight `t` (dimension `t+1`), realized on harmonic polynomials
/// of degree `t/2`. Odd `t` is rejected: those modules have no realization
/// by rational matrices (their endomorphism algebra is quaternionic), so
/// requesting one is an impossible construction rather than a failure.
pub fn sl2_module(t: u64) -> Result<LieRep> {
    if t % 2 == 1 {
        return Err(Error::NotRealizable(format!(
            "the weight-{t} module of the 3-dimensional orthogonal algebra \
             (dimension {}) admits no rational matrix realization",
            t + 1
        )));
    }
    let h = harmonic_module(3, (t / 2) as usize)?;
    // Relabel the basis through the automorphism e_12 ↦ e_23, e_13 ↦ −e_13,
    // e_23 ↦ e_12 (conjugation by the coordinate swap x1 ↔ x3); the result
    // is an equivalent representation with the weight operator attached to
    // the first basis element.
    let mats = vec![h.matrix(2).clone(), h.matrix(1).neg(), h.matrix(0).clone()];
    LieRep::with_labels(h.algebra().clone(), mats, h.labels().to_vec())
}

/// Position of the six f-basis elements inside a representation of the
/// 4-dimensional orthogonal algebra:
/// `f1 = (e12+e34)/2, f2 = (e13−e24)/2, f3 = (e14+e23)/2`
/// `f4 = (−e12+e34)/2, f5 = (e13+e24)/2, f6 = (−e14+e23)/2`.
/// The first triple brackets anti-cyclically (`[f1,f2] = −f3`), the second
/// cyclically (`[f4,f5] = +f6`), and the triples commute; together they
/// split the algebra into two commuting 3-dimensional pieces.
pub fn f_basis_matrices(rep: &LieRep) -> Result<[Matrix; 6]> {
    let so4 = so_algebra(4)?;
    if !rep.algebra().same_structure(&so4) {
        return Err(Error::AlgebraMismatch(
            "the f-basis only exists for the 4-dimensional orthogonal algebra".into(),
        ));
    }
    let half = ratio(1, 2);
    let m = |p: usize| rep.matrix(p); // pair order: e12 e13 e14 e23 e24 e34
    let comb = |a: &Matrix, b: &Matrix, s: i64| -> Matrix {
        let mut out = a.scale(&if s < 0 { -half.clone() } else { half.clone() });
        out.add_scaled(b, &half).expect("same shape");
        out
    };
    Ok([
        comb(m(0), m(5), 1),  // f1
        comb(m(4), m(1), -1), // f2 = (e13 − e24)/2
        comb(m(2), m(3), 1),  // f3
        comb(m(0), m(5), -1), // f4
        comb(m(1), m(4), 1),  // f5
        comb(m(2), m(3), -1), // f6 = (−e14 + e23)/2
    ])
}

/// The two Casimir operators of a representation of the 4-dimensional
/// orthogonal algebra: `C1 = f1²+f2²+f3²`, `C2 = f4²+f5²+f6²`.
pub fn casimir_matrices(rep: &LieRep) -> Result<(Matrix, Matrix)> {
    let f = f_basis_matrices(rep)?;
    let square_sum = |mats: &[Matrix]| -> Matrix {
        let d = mats[0].rows();
        let mut out = Matrix::zeros(d, d);
        for m in mats {
            out.add_scaled(&m.mul(m).expect("square"), &rat(1)).expect("same shape");
        }
        out
    };
    Ok((square_sum(&f[0..3]), square_sum(&f[3..6])))
}

/// Scalar values of the two Casimir operators. Errors when either operator
/// is not a scalar multiple of the identity (the module then mixes several
/// weights and has no single pair of Casimir values).
pub fn casimir_values(rep: &LieRep) -> Result<(Rational, Rational)> {
    let (c1, c2) = casimir_matrices(rep)?;
    let scalar = |c: &Matrix, which: &str| -> Result<Rational> {
        let v = c.get(0, 0).clone();
        if *c == Matrix::identity(c.rows()).scale(&v) {
            Ok(v)
        } else {
            Err(Error::Inconsistent(format!(
                "Casimir operator {which} is not scalar: the module is not weight-homogeneous"
            )))
        }
    };
    Ok((scalar(&c1, "C1")?, scalar(&c2, "C2")?))
}

/// The Casimir scalar `−t(t+2)/4` attached to weight `t`.
pub fn casimir_value_for_weight(t: u64) -> Rational {
    ratio(-((t * (t + 2)) as i64), 4)
}

/// The quaternion model of the weight-(1,1) module of the 4-dimensional
/// orthogonal algebra: on the 4-dimensional space with basis `(1, i, j, k)`,
/// the first f-triple acts by right multiplications `R_i/2, R_j/2, R_k/2`
/// and the second by left multiplications `L_i/2, L_j/2, L_k/2` (right
/// multiplication reverses products, which is exactly the anti-cyclic
/// bracket of the first triple).
pub fn quaternion_module() -> Result<LieRep> {
    let entries_r_i: [(usize, usize, i64); 4] = [(1, 0, 1), (0, 1, -1), (3, 2, -1), (2, 3, 1)];
    let entries_r_j: [(usize, usize, i64); 4] = [(2, 0, 1), (3, 1, 1), (0, 2, -1), (1, 3, -1)];
    let entries_r_k: [(usize, usize, i64); 4] = [(3, 0, 1), (2, 1, -1), (1, 2, 1), (0, 3, -1)];
    let entries_l_i: [(usize, usize, i64); 4] = [(1, 0, 1), (0, 1, -1), (3, 2, 1), (2, 3, -1)];
    let entries_l_j: [(usize, usize, i64); 4] = [(2, 0, 1), (3, 1, -1), (0, 2, -1), (1, 3, 1)];
    let entries_l_k: [(usize, usize, i64); 4] = [(3, 0, 1), (2, 1, 1), (1, 2, -1), (0, 3, -1)];
    let half = ratio(1, 2);
    let build = |entries: &[(usize, usize, i64)]| -> Matrix {
        let mut m = Matrix::zeros(4, 4);
        for &(r, c, v) in entries {
            m.set(r, c, rat(v) * &half);
        }
        m
    };
    let f = [
        build(&entries_r_i),
        build(&entries_r_j),
        build(&entries_r_k),
        build(&entries_l_i),
        build(&entries_l_j),
        build(&entries_l_k),
    ];
    let labels = vec!["1".into(), "i".into(), "j".into(), "k".into()];
    from_f_matrices(f, labels)
}

/// Assemble a representation of the 4-dimensional orthogonal algebra from
/// matrices for the six f-basis elements, through the dictionary
/// `e12 = f1−f4, e13 = f2+f5, e14 = f3−f6, e23 = f3+f6, e24 = −f2+f5,
/// e34 = f1+f4`.
fn from_f_matrices(f: [Matrix; 6], labels: Vec<String>) -> Result<LieRep> {
    let comb = |a: &Matrix, sa: i64, b: &Matrix, sb: i64| -> Matrix {
        let mut out = a.scale(&rat(sa));
        out.add_scaled(b, &rat(sb)).expect("same shape");
        out
    };
    let mats = vec![
        comb(&f[0], 1, &f[3], -1), // e12
        comb(&f[1], 1, &f[4], 1),  // e13
        comb(&f[2], 1, &f[5], -1), // e14
        comb(&f[2], 1, &f[5], 1),  // e23
        comb(&f[1], -1, &f[4], 1), // e24
        comb(&f[0], 1, &f[3], 1),  // e34
    ];
    LieRep::with_labels(so_algebra(4)?, mats, labels)
}

/// The irreducible module of the 4-dimensional orthogonal algebra with
/// Casimir weights `(t, r)` and dimension `(t+1)(r+1)`.
///
/// Realizable by rational matrices exactly when `t ≡ r (mod 2)`:
/// even-even modules come from tensoring two odd-dimensional 3-dimensional
/// orthogonal modules, odd-odd modules from tensoring the quaternion model
/// with an even-even module and cutting the joint Casimir eigenspace.
/// Mixed parity is rejected as [`Error::NotRealizable`]: such a module has
/// quaternionic endomorphisms, so no rational (or even real) matrix model
/// exists.
pub fn so4_tensor_module(t: u64, r: u64) -> Result<LieRep> {
    match (t % 2, r % 2) {
        (0, 0) => {
            let a = sl2_module(t)?;
            let b = sl2_module(r)?;
            let (ida, idb) = (Matrix::identity(a.dim()), Matrix::identity(b.dim()));
            let f = [
                kron(a.matrix(0), &idb),
                kron(a.matrix(1), &idb),
                kron(a.matrix(2), &idb),
                kron(&ida, b.matrix(0)).neg(),
                kron(&ida, b.matrix(1)).neg(),
                kron(&ida, b.matrix(2)).neg(),
            ];
            let mut labels = Vec::with_capacity(a.dim() * b.dim());
            for la in a.labels() {
                for lb in b.labels() {
                    labels.push(format!("{la}*{lb}"));
                }
            }
            from_f_matrices(f, labels)
        }
        (1, 1) => {
            if t == 1 && r == 1 {
                return quaternion_module();
            }
            let q = quaternion_module()?;
            let e = so4_tensor_module(t - 1, r - 1)?;
            let product = q.tensor(&e)?;
            let (c1, c2) = casimir_matrices(&product)?;
            let dim = product.dim();
            let mut shift1 = c1;
            shift1
                .add_scaled(&Matrix::identity(dim), &-casimir_value_for_weight(t))
                .expect("same shape");
            let mut shift2 = c2;
            shift2
                .add_scaled(&Matrix::identity(dim), &-casimir_value_for_weight(r))
                .expect("same shape");
            let eigenspace = kernel_intersection(&[&shift1, &shift2])?;
            let expected = ((t + 1) * (r + 1)) as usize;
            if eigenspace.len() != expected {
                return Err(Error::Inconsistent(format!(
                    "joint Casimir eigenspace for weights ({t},{r}) has dimension {}, expected {expected}",
                    eigenspace.len()
                )));
            }
            product.restrict(&eigenspace)
        }
        _ => Err(Error::NotRealizable(format!(
            "the weight-({t},{r}) module mixes parities: it admits no rational matrix realization"
        ))),
    }
}

/// The wedge square of the defining representation of the orthogonal
/// algebra: `e_{i j}` acts on `e_a ∧ e_b` by the Leibniz rule through the
/// defining action `e_{i j}·e_k = δ_{j k} e_i − δ_{i k} e_j` (1-based).
pub fn wedge_square_module(m: usize) -> Result<LieRep> {
    let algebra = so_algebra(m)?;
    let pairs = so_pairs(m); // doubles as the wedge basis: (a, b), a < b
    let d = pairs.len();
    let labels: Vec<String> = pairs.iter().map(|&(a, b)| format!("w({a},{b})")).collect();
    let mut mats = Vec::with_capacity(algebra.dim());
    for &(i, j) in &pairs {
        let mut mat = Matrix::zeros(d, d);
        for (col, &(a, b)) in pairs.iter().enumerate() {
            // Image of e_a ∧ e_b under the given basis element, as a list
            // of (first, second, coefficient) wedge terms.
            let mut add_term = |x: usize, y: usize, coeff: i64| {
                if x == y {
                    return;
                }
                let (p, q, sgn) = if x < y { (x, y, 1) } else { (y, x, -1) };
                let row = pair_index(p, q, m).expect("valid pair");
                mat.add_to_entry(row, col, &rat(coeff * sgn));
            };
            // (action on e_a) ∧ e_b
            if a == j {
                add_term(i, b, 1);
            }
            if a == i {
                add_term(j, b, -1);
            }
            // e_a ∧ (action on e_b)
            if b == j {
                add_term(a, i, 1);
            }
            if b == i {
                add_term(a, j, -1);
            }
        }
        mats.push(mat);
    }
    LieRep::with_labels(algebra, mats, labels)
}

/// The 1-dimensional trivial module: every basis element acts by zero.
pub fn zero_module(algebra: &LieAlgebra) -> Result<LieRep> {
    let mats = vec![Matrix::zeros(1, 1); algebra.dim()];
    LieRep::with_labels(algebra.clone(), mats, vec!["z".into()])
}

/// The adjoint module: the algebra acting on itself by `ad`.
pub fn adjoint_module(algebra: &LieAlgebra) -> Result<LieRep> {
    let mats: Vec<Matrix> = (0..algebra.dim()).map(|i| algebra.ad_matrix(i)).collect();
    LieRep::with_labels(algebra.clone(), mats, algebra.labels().to_vec())
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RepJson {
    algebra: String,
    m: usize,
    basis: Vec<String>,
    matrices: BTreeMap<String, Vec<Vec<String>>>,
}

/// Recognize an orthogonal algebra: returns `m` when the structure
/// constants are exactly those of [`so_algebra`]`(m)`.
pub fn expect_so(algebra: &LieAlgebra) -> Result<usize> {
    let dim = algebra.dim();
    let m = (3..).find(|&m| m * (m - 1) / 2 >= dim).expect("monotone");
    if m * (m - 1) / 2 == dim && algebra.same_structure(&so_algebra(m)?) {
        Ok(m)
    } else {
        Err(Error::AlgebraMismatch(
            "the algebra is not an orthogonal algebra in its standard basis".into(),
        ))
    }
}

/// Serialize a representation of an orthogonal algebra to JSON:
/// `{"algebra": "so", "m": 4, "basis": [...], "matrices": {"e_1_2": [["0", "1/2", …], …], …}}`.
/// Matrix entries are exact `p/q` strings; reading the output back yields
/// the same representation bit for bit.
pub fn rep_to_json(rep: &LieRep) -> Result<String> {
    let m = expect_so(rep.algebra())?;
    let mut matrices = BTreeMap::new();
    for (p, &(i, j)) in so_pairs(m).iter().enumerate() {
        let mat = rep.matrix(p);
        let rows: Vec<Vec<String>> = (0..mat.rows())
            .map(|r| (0..mat.cols()).map(|c| mat.get(r, c).to_string()).collect())
            .collect();
        matrices.insert(so_label(i, j), rows);
    }
    let doc = RepJson {
        algebra: "so".into(),
        m,
        basis: rep.labels().to_vec(),
        matrices,
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Inconsistent(e.to_string()))
}

/// Parse a representation from the JSON produced by [`rep_to_json`].
/// The matrices are re-verified against the orthogonal algebra's brackets,
/// so a tampered file cannot produce a non-representation.
pub fn rep_from_json(input: &str) -> Result<LieRep> {
    let doc: RepJson = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    let fail = |msg: String| Error::Parse { line: 1, col: 1, msg };
    if doc.algebra != "so" {
        return Err(fail(format!("unsupported algebra kind `{}`", doc.algebra)));
    }
    let algebra = so_algebra(doc.m)?;
    let d = doc.basis.len();
    let mut mats = Vec::with_capacity(algebra.dim());
    for &(i, j) in &so_pairs(doc.m) {
        let label = so_label(i, j);
        let rows = doc
            .matrices
            .get(&label)
            .ok_or_else(|| fail(format!("missing matrix for `{label}`")))?;
        if rows.len() != d || rows.iter().any(|r| r.len() != d) {
            return Err(fail(format!(
                "matrix for `{label}` must be {d}x{d} to match the basis"
            )));
        }
        let mut mat = Matrix::zeros(d, d);
        for (r, row) in rows.iter().enumerate() {
            for (c, tok) in row.iter().enumerate() {
                let v = parse_rational(tok)
                    .ok_or_else(|| fail(format!("invalid rational `{tok}` in matrix `{label}`")))?;
                if !v.is_zero() {
                    mat.set(r, c, v);
                }
            }
        }
        mats.push(mat);
    }
    LieRep::with_labels(algebra, mats, doc.basis)
}
