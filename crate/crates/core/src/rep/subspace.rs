use crate::error::{Error, Result};
use crate::linalg::{independent_subset, Matrix, Vector};
use crate::scalar::Scalar;

/// A nonzero subspace on which every generator acts by a fixed sign.
/// Every line inside it is stable; when `basis` has one vector it is the
/// unique such line with this sign character.
#[derive(Clone, Debug, PartialEq)]
pub struct StableSpace<T: Scalar> {
    pub basis: Vec<Vector<T>>,
    pub signs: Vec<i8>,
}

impl<T: Scalar> StableSpace<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Scale so the first nonzero coordinate is 1.
pub fn normalize<T: Scalar>(v: &[T]) -> Vector<T> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let lead = lead.clone();
            v.iter().map(|x| x.clone() / lead.clone()).collect()
        }
        None => v.to_vec(),
    }
}

/// Canonical basis of a span: nonzero rows of the reduced row echelon form.
fn canonical_basis<T: Scalar>(vectors: &[Vector<T>]) -> Vec<Vector<T>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Intersection of `span(basis)` with `ker(m − λ)`.
fn intersect_eigenspace<T: Scalar>(m: &Matrix<T>, lambda: &T, basis: &[Vector<T>]) -> Vec<Vector<T>> {
    let n = m.rows();
    let shifted = m.sub(&Matrix::identity(n).scaled(lambda));
    let b = Matrix::from_columns(n, basis);
    shifted
        .matmul(&b)
        .kernel()
        .into_iter()
        .map(|c| b.mul_vec(&c))
        .collect()
}

/// Common eigenspaces of all generators with eigenvalues `±1`, one per sign
/// character that occurs.
pub fn stable_lines<T: Scalar>(generators: &[Matrix<T>]) -> Vec<StableSpace<T>> {
    let Some(first) = generators.first() else {
        return Vec::new();
    };
    let n = first.rows();
    let whole: Vec<Vector<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    let mut out = Vec::new();
    search(generators, 0, whole, &mut Vec::new(), &mut out);
    out
}

fn search<T: Scalar>(
    generators: &[Matrix<T>],
    k: usize,
    basis: Vec<Vector<T>>,
    signs: &mut Vec<i8>,
    out: &mut Vec<StableSpace<T>>,
) {
    if basis.is_empty() {
        return;
    }
    if k == generators.len() {
        let mut b = canonical_basis(&basis);
        if b.len() == 1 {
            b[0] = normalize(&b[0]);
        }
        out.push(StableSpace {
            basis: b,
            signs: signs.clone(),
        });
        return;
    }
    for sign in [1i8, -1] {
        let lambda = T::from_i64(sign as i64);
        let next = intersect_eigenspace(&generators[k], &lambda, &basis);
        signs.push(sign);
        search(generators, k + 1, next, signs, out);
        signs.pop();
    }
}

/// Matrices of the generators on an invariant subspace, in the given basis.
pub fn restrict<T: Scalar>(generators: &[Matrix<T>], basis: &[Vector<T>]) -> Result<Vec<Matrix<T>>> {
    let n = generators.first().map_or(0, |m| m.rows());
    check_independent(n, basis)?;
    let b = Matrix::from_columns(n, basis);
    generators
        .iter()
        .enumerate()
        .map(|(g, m)| {
            let cols = basis
                .iter()
                .map(|v| b.solve(&m.mul_vec(v)).ok_or(Error::SubspaceNotInvariant(g)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(basis.len(), &cols))
        })
        .collect()
}

/// Induced action on `(span(complement) ⊕ span(subspace)) / span(subspace)`
/// in the basis of images of `complement`. Both `span(subspace)` and the
/// combined span must be invariant.
pub fn quotient_rep<T: Scalar>(
    generators: &[Matrix<T>],
    subspace: &[Vector<T>],
    complement: &[Vector<T>],
) -> Result<Vec<Matrix<T>>> {
    let n = generators.first().map_or(0, |m| m.rows());
    if !subspace.is_empty() {
        restrict(generators, subspace)?;
    }
    let mut combined = complement.to_vec();
    combined.extend(subspace.iter().cloned());
    check_independent(n, &combined)?;
    let full = restrict(generators, &combined)?;
    let k = complement.len();
    Ok(full
        .into_iter()
        .map(|m| {
            let rows: Vec<Vec<T>> = (0..k).map(|i| (0..k).map(|j| m[(i, j)].clone()).collect()).collect();
            Matrix::from_rows(rows)
        })
        .collect())
}

fn check_independent<T: Scalar>(n: usize, vectors: &[Vector<T>]) -> Result<()> {
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::Dimension(format!("vectors must have length {n}")));
    }
    if independent_subset(n, vectors).len() != vectors.len() {
        return Err(Error::Dimension("basis vectors are linearly dependent".into()));
    }
    Ok(())
}

/// Every generator is a signed permutation matrix.
pub fn signed_permutation_check<T: Scalar>(generators: &[Matrix<T>]) -> bool {
    generators.iter().all(Matrix::is_signed_permutation)
}
