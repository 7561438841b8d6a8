use num_traits::{One, Zero};

use super::form::{form_on_fset, t_string, BilinearForm};
use crate::cactus::{CactusSystem, CactusWord};
use crate::error::{Error, Result};
use crate::linalg::{independent_subset, Matrix, Vector};
use crate::scalar::Rational;

/// `E = ℝε_I ⊕ E_I ⊕ F_I` for one generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    /// Basis of `E_I`, chosen from the spanning vectors `ε_J − ε_{w_I(J)}`.
    pub e_part: Vec<Vector<Rational>>,
    /// Basis of `F_I`, the orthogonal complement of `ℝε_I ⊕ E_I`.
    pub f_part: Vec<Vector<Rational>>,
}

/// The representation `γ_I ↦ ρ_I = −id on ℝε_I ⊕ E_I, +id on F_I`.
#[derive(Clone, Debug)]
pub struct RhoRep {
    cactus: CactusSystem,
    form: BilinearForm<Rational>,
    decompositions: Vec<Decomposition>,
    generators: Vec<Matrix<Rational>>,
}

fn unit(n: usize, i: usize) -> Vector<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

impl RhoRep {
    /// Fails with a degenerate-form error when `B_t` is degenerate on `E` or
    /// on some `ℝε_I ⊕ E_I`.
    pub fn new(cactus: &CactusSystem, t: &Rational) -> Result<Self> {
        let form = form_on_fset(cactus, t);
        let sys = cactus.system();
        if !form.is_nondegenerate() {
            return Err(Error::DegenerateForm {
                t: t_string(t),
                subspace: "E".into(),
            });
        }
        let n = form.dim();
        let mut decompositions = Vec::with_capacity(n);
        let mut generators = Vec::with_capacity(n);
        for i in 0..n {
            let big = cactus.subset(i);
            let spanning: Vec<Vector<Rational>> = (0..n)
                .filter(|&j| cactus.subset(j).is_proper_subset_of(big))
                .filter_map(|j| {
                    let k = cactus.conjugate_letter(i, j).expect("nested pair");
                    (k != j).then(|| {
                        let mut v = unit(n, j);
                        v[k] = -Rational::one();
                        v
                    })
                })
                .collect();
            let e_part = independent_subset(n, &spanning);
            let mut negative = vec![unit(n, i)];
            negative.extend(e_part.iter().cloned());

            let name = format!("ℝε_{0} ⊕ E_{0}", sys.format_subset(big));
            let v = Matrix::from_columns(n, &negative);
            let restricted = v.transpose().matmul(&form.gram).matmul(&v);
            if restricted.determinant().is_zero() {
                return Err(Error::DegenerateForm {
                    t: t_string(t),
                    subspace: name,
                });
            }
            let f_part = v.transpose().matmul(&form.gram).kernel();

            let mut columns = negative.clone();
            columns.extend(f_part.iter().cloned());
            let p = Matrix::from_columns(n, &columns);
            let p_inv = p.inverse().ok_or_else(|| Error::DegenerateForm {
                t: t_string(t),
                subspace: name.clone(),
            })?;
            let mut d = Matrix::identity(n);
            for k in 0..negative.len() {
                d[(k, k)] = -Rational::one();
            }
            generators.push(p.matmul(&d).matmul(&p_inv));
            decompositions.push(Decomposition { e_part, f_part });
        }
        Ok(Self {
            cactus: cactus.clone(),
            form,
            decompositions,
            generators,
        })
    }

    pub fn form(&self) -> &BilinearForm<Rational> {
        &self.form
    }

    pub fn cactus(&self) -> &CactusSystem {
        &self.cactus
    }

    pub fn generators(&self) -> &[Matrix<Rational>] {
        &self.generators
    }

    pub fn generator(&self, letter: usize) -> &Matrix<Rational> {
        &self.generators[letter]
    }

    pub fn decomposition(&self, letter: usize) -> &Decomposition {
        &self.decompositions[letter]
    }

    pub fn of_word(&self, word: &CactusWord) -> Matrix<Rational> {
        word.letters()
            .iter()
            .fold(Matrix::identity(self.form.dim()), |acc, &l| acc.matmul(&self.generators[l]))
    }
}
