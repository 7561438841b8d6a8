use crate::cactus::CactusSystem;
use crate::coxeter::CoxeterSystem;
use crate::linalg::Matrix;
use crate::racg::{BigEntry, RacgContext};
use crate::scalar::{rational_string, CycloReal, Rational, Scalar};

/// A symmetric bilinear form with unit diagonal on a labelled basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<T: Scalar> {
    pub labels: Vec<String>,
    pub gram: Matrix<T>,
    pub t: Rational,
}

impl<T: Scalar> BilinearForm<T> {
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn value(&self, x: &[T], y: &[T]) -> T {
        self.gram.bilinear(x, y)
    }

    /// `σ_x(y) = y − 2B(y, ε_x) ε_x`.
    pub fn reflection(&self, x: usize) -> Matrix<T> {
        let n = self.dim();
        let mut m: Matrix<T> = Matrix::identity(n);
        let two = T::from_i64(2);
        for y in 0..n {
            m[(x, y)] = m[(x, y)].clone() - two.clone() * self.gram[(x, y)].clone();
        }
        m
    }

    pub fn determinant(&self) -> T {
        self.gram.determinant()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// Gram matrix as CSV with a header row of basis labels.
    pub fn to_csv(&self) -> String {
        let quote = |s: &str| {
            if s.contains([',', '"']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::from("label");
        for l in &self.labels {
            out.push(',');
            out.push_str(&quote(l));
        }
        out.push('\n');
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&quote(l));
            for j in 0..self.dim() {
                out.push(',');
                out.push_str(&quote(&self.gram[(i, j)].to_string()));
            }
            out.push('\n');
        }
        out
    }
}

/// The form on `E = span{ε_I : I in the generator family}`: `1` on the
/// diagonal, `0` for nested or commuting pairs, `−t` otherwise.
pub fn form_on_fset(cactus: &CactusSystem, t: &Rational) -> BilinearForm<Rational> {
    let sys = cactus.system();
    let fam = cactus.family();
    let n = fam.len();
    let mut gram = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i == j || cactus.relation_kind(i, j).is_some() || cactus.relation_kind(j, i).is_some() {
                continue;
            }
            gram[(i, j)] = -t.clone();
        }
    }
    BilinearForm {
        labels: fam.iter().map(|&s| sys.format_subset(s)).collect(),
        gram,
        t: t.clone(),
    }
}

/// The form on `𝔼 = span{ε_{W'} : W' ∈ 𝕊}` read off `𝕄`.
pub fn form_on_big(racg: &RacgContext, t: &Rational) -> BilinearForm<Rational> {
    let n = racg.size();
    let mut gram = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if racg.entry(i, j) == BigEntry::Free {
                gram[(i, j)] = -t.clone();
            }
        }
    }
    BilinearForm {
        labels: (0..n).map(|x| racg.subgroup_label(x)).collect(),
        gram,
        t: t.clone(),
    }
}

/// The form `B_t` on `ℝ^S`: `−cos(π/m)` for finite `m`, `−t` for ∞.
pub fn form_on_simple(sys: &CoxeterSystem, t: &Rational) -> BilinearForm<CycloReal> {
    BilinearForm {
        labels: sys.labels().to_vec(),
        gram: sys.gram(t),
        t: t.clone(),
    }
}

pub fn t_string(t: &Rational) -> String {
    rational_string(t)
}
