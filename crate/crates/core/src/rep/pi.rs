use super::form::{form_on_big, form_on_simple, t_string, BilinearForm};
use crate::cactus::CactusWord;
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::racg::{RacgContext, SemidirectElement};
use crate::scalar::{CycloReal, Rational, Scalar};

/// `π′(g)(ε_x) = ε_{g(x)}`.
pub fn pi_prime<T: Scalar>(perm: &[usize]) -> Matrix<T> {
    Matrix::permutation(perm)
}

/// `Π(τ g) = π(τ) π′(g)` on `𝔼`, restricted along the embedding to the
/// cactus group.
#[derive(Clone, Debug)]
pub struct PiRep<'a> {
    racg: &'a RacgContext,
    form: BilinearForm<Rational>,
    reflections: Vec<Matrix<Rational>>,
    generators: Vec<Matrix<Rational>>,
}

impl<'a> PiRep<'a> {
    pub fn new(racg: &'a RacgContext, t: &Rational) -> Self {
        let form = form_on_big(racg, t);
        let reflections: Vec<Matrix<Rational>> = (0..racg.size()).map(|x| form.reflection(x)).collect();
        let generators = (0..racg.cactus().generator_count())
            .map(|l| {
                reflections[racg.generator_subgroup(l)].matmul(&pi_prime(racg.generator_automorphism(l)))
            })
            .collect();
        Self {
            racg,
            form,
            reflections,
            generators,
        }
    }

    /// Like `new`, but fails when the form on `𝔼` is degenerate.
    pub fn checked(racg: &'a RacgContext, t: &Rational) -> Result<Self> {
        let rep = Self::new(racg, t);
        if !rep.form.is_nondegenerate() {
            return Err(Error::DegenerateForm {
                t: t_string(t),
                subspace: "𝔼".into(),
            });
        }
        Ok(rep)
    }

    pub fn form(&self) -> &BilinearForm<Rational> {
        &self.form
    }

    /// `π(τ_x)`.
    pub fn reflection(&self, x: usize) -> &Matrix<Rational> {
        &self.reflections[x]
    }

    /// `Π(γ_I)` for every cactus generator, in family order.
    pub fn generators(&self) -> &[Matrix<Rational>] {
        &self.generators
    }

    pub fn of_element(&self, x: &SemidirectElement) -> Matrix<Rational> {
        let n = self.racg.size();
        x.racg_part
            .iter()
            .fold(Matrix::identity(n), |acc, &y| acc.matmul(&self.reflections[y]))
            .matmul(&pi_prime(&x.aut_part))
    }

    /// Product of the generator matrices along the word.
    pub fn of_word(&self, word: &CactusWord) -> Matrix<Rational> {
        word.letters()
            .iter()
            .fold(Matrix::identity(self.racg.size()), |acc, &l| acc.matmul(&self.generators[l]))
    }
}

/// `Π(w g) = π(w) π′(g)` on `ℝ^S` for `W ⋊ Aut(W, S)`.
#[derive(Clone, Debug)]
pub struct PiOnSimple {
    form: BilinearForm<CycloReal>,
    reflections: Vec<Matrix<CycloReal>>,
}

impl PiOnSimple {
    pub fn new(sys: &CoxeterSystem, t: &Rational) -> Self {
        let form = form_on_simple(sys, t);
        let reflections = (0..sys.rank()).map(|s| form.reflection(s)).collect();
        Self { form, reflections }
    }

    pub fn form(&self) -> &BilinearForm<CycloReal> {
        &self.form
    }

    /// `σ_s`.
    pub fn generator(&self, s: usize) -> &Matrix<CycloReal> {
        &self.reflections[s]
    }

    pub fn generators(&self) -> &[Matrix<CycloReal>] {
        &self.reflections
    }

    /// `π(s_1 ⋯ s_k) π′(g)`.
    pub fn of(&self, word: &[usize], perm: &[usize]) -> Matrix<CycloReal> {
        let n = self.form.dim();
        word.iter()
            .fold(Matrix::identity(n), |acc, &s| acc.matmul(&self.reflections[s]))
            .matmul(&pi_prime(perm))
    }
}
