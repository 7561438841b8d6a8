//! A finite Coxeter group enumerated once, with elements addressed by index.
//!
//! Elements are listed in shortlex order of their canonical (lexicographically
//! least reduced) words; index 0 is the identity. Products are computed from
//! the generator multiplication tables, never from matrices, once the
//! enumeration is done.

use std::collections::HashMap;

use super::element::GroupElement;
use super::subset::Subset;
use super::system::CoxeterSystem;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{CycloReal, Rational};

type MatrixKey = Vec<Vec<Rational>>;

#[derive(Debug, Clone)]
pub struct FiniteCoxeterGroup {
    system: CoxeterSystem,
    words: Vec<Vec<usize>>,
    matrices: Vec<Matrix<CycloReal>>,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    lookup: HashMap<MatrixKey, usize>,
}

fn key(m: &Matrix<CycloReal>, conductor: u32) -> MatrixKey {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .map(|(i, j)| m[(i, j)].coefficients_in(conductor))
        .collect()
}

impl FiniteCoxeterGroup {
    /// Breadth-first enumeration by length. Left descents are read off the
    /// search itself: `s` is a left descent of `y` exactly when `y = s·x`
    /// was reached from some `x` one level down.
    pub fn new(system: &CoxeterSystem) -> Result<Self> {
        if !system.is_finite() {
            return Err(Error::InfiniteGroup(format!("{:?}", system.labels())));
        }
        let n = system.rank();
        let conductor = system.conductor();

        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut matrices = vec![Matrix::identity(n)];
        let mut lookup: HashMap<MatrixKey, usize> = HashMap::new();
        lookup.insert(key(&matrices[0], conductor), 0);
        // down[s][y] = s·y when s is a left descent of y.
        let mut down: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        let mut up: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];

        let mut level: Vec<usize> = vec![0];
        while !level.is_empty() {
            // Candidates keyed by matrix, with every (s, x) that reaches them.
            let mut found: Vec<(Matrix<CycloReal>, Vec<(usize, usize)>)> = Vec::new();
            let mut found_at: HashMap<MatrixKey, usize> = HashMap::new();
            for &x in &level {
                for s in 0..n {
                    if down[s].contains_key(&x) {
                        continue;
                    }
                    let m = system.reflection(s).matmul(&matrices[x]);
                    let k = key(&m, conductor);
                    match found_at.get(&k) {
                        Some(&slot) => found[slot].1.push((s, x)),
                        None => {
                            found_at.insert(k, found.len());
                            found.push((m, vec![(s, x)]));
                        }
                    }
                }
            }
            // Canonical word: smallest left descent, then the word below it.
            let mut next: Vec<(Vec<usize>, Matrix<CycloReal>, Vec<(usize, usize)>)> = found
                .into_iter()
                .map(|(m, preds)| {
                    let &(s0, x0) = preds.iter().min_by_key(|(s, _)| *s).expect("nonempty");
                    let mut w = vec![s0];
                    w.extend_from_slice(&words[x0]);
                    (w, m, preds)
                })
                .collect();
            next.sort_by(|a, b| a.0.cmp(&b.0));
            level = Vec::with_capacity(next.len());
            for (w, m, preds) in next {
                let y = words.len();
                lookup.insert(key(&m, conductor), y);
                words.push(w);
                matrices.push(m);
                for (s, x) in preds {
                    down[s].insert(y, x);
                    up[s].insert(x, y);
                }
                level.push(y);
            }
        }

        let order = words.len();
        let left: Vec<Vec<usize>> = (0..n)
            .map(|s| {
                (0..order)
                    .map(|x| down[s].get(&x).or_else(|| up[s].get(&x)).copied().expect("table complete"))
                    .collect()
            })
            .collect();
        let inverse: Vec<usize> = words
            .iter()
            .map(|w| w.iter().fold(0, |acc, &s| left[s][acc]))
            .collect();
        let right: Vec<Vec<usize>> = (0..n)
            .map(|s| (0..order).map(|x| inverse[left[s][inverse[x]]]).collect())
            .collect();

        Ok(Self {
            system: system.clone(),
            words,
            matrices,
            left,
            right,
            inverse,
            lookup,
        })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn word(&self, x: usize) -> &[usize] {
        &self.words[x]
    }

    pub fn length(&self, x: usize) -> usize {
        self.words[x].len()
    }

    pub fn matrix(&self, x: usize) -> &Matrix<CycloReal> {
        &self.matrices[x]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generator(&self, s: usize) -> usize {
        self.left[s][0]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn left_mul(&self, s: usize, x: usize) -> usize {
        self.left[s][x]
    }

    pub fn right_mul(&self, x: usize, s: usize) -> usize {
        self.right[s][x]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.words[x].iter().rev().fold(y, |acc, &s| self.left[s][acc])
    }

    /// `w x w⁻¹`.
    pub fn conjugate(&self, w: usize, x: usize) -> usize {
        let xw = self.words[w].iter().rev().fold(x, |acc, &s| self.right[s][acc]);
        self.words[w].iter().rev().fold(xw, |acc, &s| self.left[s][acc])
    }

    pub fn element(&self, x: usize) -> GroupElement {
        self.system.element(&self.words[x])
    }

    pub fn index_of_word(&self, word: &[usize]) -> usize {
        word.iter().rev().fold(0, |acc, &s| self.left[s][acc])
    }

    pub fn index_of(&self, g: &GroupElement) -> usize {
        self.lookup[&key(g.matrix(), self.system.conductor())]
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|x| self.element(x)).collect()
    }

    /// Elements of `W_I`, sorted by index.
    pub fn parabolic(&self, subset: Subset) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for s in subset.indices() {
                let y = self.left[s][x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    /// Index of the longest element of a finite `W_I`.
    pub fn longest(&self, subset: Subset) -> usize {
        self.parabolic(subset)
            .into_iter()
            .max_by_key(|&x| self.length(x))
            .expect("parabolic subgroup contains the identity")
    }
}

impl CoxeterSystem {
    /// All elements of a finite `W`, in shortlex order.
    pub fn enumerate_group(&self) -> Result<Vec<GroupElement>> {
        Ok(FiniteCoxeterGroup::new(self)?.elements())
    }
}
