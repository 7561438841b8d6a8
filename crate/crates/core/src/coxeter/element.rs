use std::hash::{Hash, Hasher};

use super::subset::Subset;
use super::system::CoxeterSystem;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use num_traits::Zero;

use crate::scalar::{CycloReal, Sign};

/// An element of `W`: its lexicographically least reduced word together with
/// its matrix in the geometric representation at `t = 1` (and the inverse
/// matrix, kept for descent tests).
///
/// Equality compares matrices. Since the stored word is canonical, hashing
/// the word is consistent with that.
#[derive(Clone, Debug)]
pub struct GroupElement {
    word: Vec<usize>,
    matrix: Matrix<CycloReal>,
    inverse: Matrix<CycloReal>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl GroupElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &Matrix<CycloReal> {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix<CycloReal> {
        &self.inverse
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

/// Sign of a root given by its coordinates: roots are either nonnegative or
/// nonpositive, so the first nonzero coordinate decides.
pub(crate) fn root_sign(col: impl IntoIterator<Item = CycloReal>) -> Sign {
    col.into_iter()
        .find(|x| !x.is_zero())
        .map_or(Sign::Zero, |x| x.sign())
}

fn column_sign(m: &Matrix<CycloReal>, j: usize) -> Sign {
    root_sign((0..m.rows()).map(|i| m[(i, j)].clone()))
}

impl CoxeterSystem {
    pub fn identity(&self) -> GroupElement {
        let n = self.rank();
        GroupElement {
            word: Vec::new(),
            matrix: Matrix::identity(n),
            inverse: Matrix::identity(n),
        }
    }

    pub fn simple(&self, s: usize) -> GroupElement {
        self.element(&[s])
    }

    /// Element represented by an arbitrary (not necessarily reduced) word.
    pub fn element(&self, word: &[usize]) -> GroupElement {
        let n = self.rank();
        let mut matrix = Matrix::identity(n);
        let mut inverse = Matrix::identity(n);
        for &s in word {
            matrix = matrix.matmul(self.reflection(s));
            inverse = self.reflection(s).matmul(&inverse);
        }
        self.from_matrices(matrix, inverse)
    }

    /// `s` is a left descent of `w` iff `w⁻¹(α_s) < 0`.
    pub fn is_left_descent(&self, w: &GroupElement, s: usize) -> bool {
        column_sign(&w.inverse, s) == Sign::Negative
    }

    /// `s` is a right descent of `w` iff `w(α_s) < 0`.
    pub fn is_right_descent(&self, w: &GroupElement, s: usize) -> bool {
        column_sign(&w.matrix, s) == Sign::Negative
    }

    /// Recover the lexicographically least reduced word by peeling off the
    /// smallest left descent until none remains.
    fn from_matrices(&self, matrix: Matrix<CycloReal>, inverse: Matrix<CycloReal>) -> GroupElement {
        let mut word = Vec::new();
        let mut m = matrix.clone();
        let mut inv = inverse.clone();
        while let Some(s) = (0..self.rank()).find(|&s| column_sign(&inv, s) == Sign::Negative) {
            word.push(s);
            m = self.reflection(s).matmul(&m);
            inv = inv.matmul(self.reflection(s));
        }
        debug_assert!(m.is_identity());
        GroupElement { word, matrix, inverse }
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.from_matrices(a.matrix.matmul(&b.matrix), b.inverse.matmul(&a.inverse))
    }

    pub fn invert(&self, a: &GroupElement) -> GroupElement {
        self.from_matrices(a.inverse.clone(), a.matrix.clone())
    }

    pub fn length(&self, a: &GroupElement) -> usize {
        a.length()
    }

    /// Positive roots sent negative, counted directly from the action on
    /// all positive roots of a finite `W` (independent of the word).
    pub fn inversion_count(&self, a: &GroupElement, positive_roots: &[Vec<CycloReal>]) -> usize {
        positive_roots
            .iter()
            .filter(|r| root_sign(a.matrix.mul_vec(r)) == Sign::Negative)
            .count()
    }

    /// Longest element of a finite `W_I` by greedy ascent.
    pub fn longest_element(&self, subset: Subset) -> Result<GroupElement> {
        if !self.is_finite_parabolic(subset) {
            return Err(Error::InfiniteParabolic(self.format_subset(subset)));
        }
        let mut m = Matrix::identity(self.rank());
        let mut inv = Matrix::identity(self.rank());
        while let Some(s) = subset.indices().find(|&s| column_sign(&m, s) == Sign::Positive) {
            m = m.matmul(self.reflection(s));
            inv = self.reflection(s).matmul(&inv);
        }
        Ok(self.from_matrices(m, inv))
    }

    /// `w_J(I) = {w_J s w_J : s ∈ I}` as a subset of `J`.
    pub fn conjugate_subset(&self, j: Subset, i: Subset) -> Result<Subset> {
        let w = self.longest_element(j)?;
        self.conjugate_subset_by(&w, j, i)
    }

    pub(crate) fn conjugate_subset_by(&self, w: &GroupElement, j: Subset, i: Subset) -> Result<Subset> {
        let mut out = Vec::new();
        for s in i.indices() {
            let c = w.matrix.matmul(self.reflection(s)).matmul(&w.inverse);
            let t = j
                .indices()
                .find(|&t| self.reflection(t) == &c)
                .ok_or_else(|| Error::NotSimpleReflection(self.label(s).to_string()))?;
            out.push(t);
        }
        Ok(Subset::from_indices(out))
    }

    /// Positive roots of a finite `W`, as `w(α_s)` over all elements and
    /// generators, kept when positive and deduplicated.
    pub fn positive_roots(&self, elements: &[GroupElement]) -> Vec<Vec<CycloReal>> {
        let mut roots: Vec<Vec<CycloReal>> = Vec::new();
        for w in elements {
            for s in 0..self.rank() {
                let r = w.matrix.column(s);
                if root_sign(r.clone()) == Sign::Positive && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        roots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(name: &str) -> CoxeterSystem {
        CoxeterSystem::named(name).unwrap()
    }

    #[test]
    fn braid_relation_and_length() {
        let a2 = sys("A2");
        let x = a2.element(&[0, 1, 0]);
        let y = a2.element(&[1, 0, 1]);
        assert_eq!(x, y);
        assert_eq!(x.length(), 3);
        assert_eq!(x.word(), y.word());
        assert_eq!(x.word(), &[0, 1, 0]);
        let a = a2.element(&[0, 1]);
        assert!(a2.multiply(&a, &a2.invert(&a)).is_identity());
        assert_eq!(a2.identity().length(), 0);
        assert_eq!(a2.simple(1).length(), 1);
    }

    #[test]
    fn non_reduced_words_reduce() {
        let b3 = sys("B3");
        assert!(b3.element(&[1, 2, 1, 2, 1, 2, 1, 2]).is_identity());
        assert_eq!(b3.element(&[0, 0, 1]).word(), &[1]);
        assert_eq!(b3.element(&[0, 2]).word(), b3.element(&[2, 0]).word());
    }

    #[test]
    fn longest_elements() {
        let a2 = sys("A2");
        let w0 = a2.longest_element(a2.full_set()).unwrap();
        assert_eq!(w0.word(), &[0, 1, 0]);
        assert_eq!(a2.longest_element(Subset::singleton(1)).unwrap().word(), &[1]);

        // I2(5): b(ab)^2 has length 5.
        let i5 = sys("I2(5)");
        let w = i5.longest_element(i5.full_set()).unwrap();
        assert_eq!(w.length(), 5);
        assert_eq!(w, i5.element(&[1, 0, 1, 0, 1]));

        // I2(4): (ab)^2.
        let i4 = sys("I2(4)");
        let w = i4.longest_element(i4.full_set()).unwrap();
        assert_eq!(w, i4.element(&[0, 1, 0, 1]));

        let inf = sys("I2(inf)");
        assert!(matches!(inf.longest_element(inf.full_set()), Err(Error::InfiniteParabolic(_))));
    }

    #[test]
    fn longest_element_lengths_match_root_counts() {
        for (name, n_pos) in [("A3", 6), ("B3", 9), ("H3", 15), ("A1*A1", 2), ("I2(7)", 7)] {
            let s = sys(name);
            let w0 = s.longest_element(s.full_set()).unwrap();
            assert_eq!(w0.length(), n_pos, "{name}");
            assert!(s.multiply(&w0, &w0).is_identity());
        }
    }

    #[test]
    fn conjugate_subsets() {
        let a2 = sys("A2");
        let j = a2.full_set();
        assert_eq!(a2.conjugate_subset(j, Subset::singleton(0)).unwrap(), Subset::singleton(1));
        assert_eq!(a2.conjugate_subset(j, j).unwrap(), j);
        let i4 = sys("I2(4)");
        assert_eq!(
            i4.conjugate_subset(i4.full_set(), Subset::singleton(0)).unwrap(),
            Subset::singleton(0)
        );
        let a3 = sys("A3");
        assert_eq!(
            a3.conjugate_subset(a3.full_set(), Subset::from_indices([0, 1])).unwrap(),
            Subset::from_indices([1, 2])
        );
    }

    #[test]
    fn order_of_products() {
        for name in ["A2", "B2", "H3", "I2(7)", "F4"] {
            let s = sys(name);
            for a in 0..s.rank() {
                for b in 0..s.rank() {
                    if a == b {
                        continue;
                    }
                    let m = s.order(a, b).unwrap();
                    let p = s.reflection(a).matmul(s.reflection(b));
                    for k in 1..m {
                        assert!(!p.pow(k).is_identity());
                    }
                    assert!(p.pow(m).is_identity());
                }
            }
        }
        let inf = sys("I2(inf)");
        let p = inf.reflection(0).matmul(inf.reflection(1));
        for k in 1..=20 {
            assert!(!p.pow(k).is_identity());
        }
    }

    #[test]
    fn reflections_preserve_form() {
        for name in ["A3", "B3", "H3", "I2(inf)", "I2(5)*A1"] {
            let s = sys(name);
            let g = s.gram(&crate::scalar::rat(1, 1));
            for r in 0..s.rank() {
                assert!(s.reflection(r).preserves_form(&g));
                assert!(s.reflection(r).pow(2).is_identity());
            }
        }
    }
}
