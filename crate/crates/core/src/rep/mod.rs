//! Exact linear representations of the cactus group: `Π` through the
//! embedding into `𝕎 ⋊ Aut(𝕎, 𝕊)`, and `ρ` on the span of the generator
//! family, plus tools for invariant lines and quotients.
//!
//! Matrices act on column vectors: column `j` is the image of basis vector
//! `j`.

mod form;
mod pi;
mod relations;
mod rho;
mod subspace;

pub use form::{form_on_big, form_on_fset, form_on_simple, BilinearForm};
pub use pi::{pi_prime, PiOnSimple, PiRep};
pub use relations::{check_relations, RelationReport, Violation};
pub use rho::{Decomposition, RhoRep};
pub use subspace::{normalize, quotient_rep, restrict, signed_permutation_check, stable_lines, StableSpace};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cactus::{CactusSystem, CactusWord};
    use crate::coxeter::{CoxeterSystem, FiniteCoxeterGroup};
    use crate::linalg::Matrix;
    use crate::racg::RacgContext;
    use crate::scalar::{rat, CycloReal, Rational};
    use std::collections::HashSet;

    fn cactus(name: &str) -> CactusSystem {
        CactusSystem::new(&CoxeterSystem::named(name).unwrap()).unwrap()
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn a2_form_on_fset() {
        let c = cactus("A2");
        let t = rat(3, 2);
        let f = form_on_fset(&c, &t);
        assert_eq!(f.labels, vec!["{s1}", "{s2}", "{s1,s2}"]);
        let mt = -t.clone();
        let expected = Matrix::from_rows(vec![
            vec![rat(1, 1), mt.clone(), rat(0, 1)],
            vec![mt, rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(1, 1)],
        ]);
        assert_eq!(f.gram, expected);
        assert_eq!(f.determinant(), rat(1, 1) - t.clone() * t);
        assert!(form_on_fset(&c, &rat(0, 1)).gram.is_identity());
        assert!(!form_on_fset(&c, &rat(1, 1)).is_nondegenerate());
        assert_eq!(f.to_csv().lines().next().unwrap(), "label,{s1},{s2},\"{s1,s2}\"");
    }

    #[test]
    fn a2_rho_matrices() {
        let c = cactus("A2");
        let rho = RhoRep::new(&c, &rat(2, 1)).unwrap();
        assert_eq!(rho.generator(1), &m(&[&[1, 0, 0], &[4, -1, 0], &[0, 0, 1]]));
        assert_eq!(rho.generator(2), &m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]));
        assert!(matches!(
            RhoRep::new(&c, &rat(1, 1)),
            Err(crate::Error::DegenerateForm { .. })
        ));
        let a1 = RhoRep::new(&cactus("A1"), &rat(2, 1)).unwrap();
        assert_eq!(a1.generator(0), &m(&[&[-1]]));
    }

    #[test]
    fn rho_generators_are_form_preserving_involutions() {
        for name in ["A3", "B3", "H3", "A4", "I2(7)", "A2*A1"] {
            let c = cactus(name);
            let rho = RhoRep::new(&c, &rat(2, 1)).unwrap();
            for g in rho.generators() {
                assert!(g.matmul(g).is_identity(), "{name}");
                assert!(g.preserves_form(&rho.form().gram), "{name}");
            }
            assert!(check_relations(&c, rho.generators()).passed(), "{name}");
        }
    }

    #[test]
    fn rho_lemma_five() {
        for name in ["A3", "B3", "A4", "A2*A1"] {
            let c = cactus(name);
            let rho = RhoRep::new(&c, &rat(2, 1)).unwrap();
            let n = c.generator_count();
            let unit = |i: usize| -> Vec<Rational> {
                (0..n).map(|k| if k == i { rat(1, 1) } else { rat(0, 1) }).collect()
            };
            for (i, j) in c.product_pairs() {
                for (a, b) in [(i, j), (j, i)] {
                    let r = rho.generator(a);
                    assert_eq!(r.mul_vec(&unit(b)), unit(b));
                    for v in &rho.decomposition(b).e_part {
                        assert_eq!(&r.mul_vec(v), v);
                    }
                }
            }
            for (j, i) in c.nested_pairs() {
                let jp = c.conjugate_letter(i, j).unwrap();
                let r = rho.generator(i);
                assert_eq!(r.mul_vec(&unit(j)), unit(jp));
                let target = &rho.decomposition(jp).e_part;
                for v in &rho.decomposition(j).e_part {
                    assert!(crate::linalg::in_span(target, &r.mul_vec(v)));
                }
            }
        }
    }

    #[test]
    fn corrupted_matrix_is_reported() {
        let c = cactus("A2");
        let rho = RhoRep::new(&c, &rat(2, 1)).unwrap();
        let mut gens = rho.generators().to_vec();
        gens[0][(2, 2)] = rat(3, 1);
        let report = check_relations(&c, &gens);
        assert!(!report.passed());
        assert!(report.violations.contains(&Violation::Involution { generator: 0 }));
        assert!(report.describe(&c)[0].starts_with("(a) {s1}"));
    }

    #[test]
    fn a2_pi_matrices() {
        let c = cactus("A2");
        let racg = RacgContext::new(&c).unwrap();
        let t = rat(2, 1);
        let pi = PiRep::new(&racg, &t);
        // Our order is W{s1}, W{s2}, W{w0}, W; the paper's is W{s1}, W{w0}, W{s2}, W.
        let p: Matrix<Rational> = Matrix::permutation(&[0, 2, 1, 3]);
        let to_paper = |x: &Matrix<Rational>| p.transpose().matmul(x).matmul(&p);
        let b = to_paper(&pi.generators()[1]);
        let cc = to_paper(&pi.generators()[2]);
        assert_eq!(b, m(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[4, 4, -1, 0], &[0, 0, 0, 1]]));
        assert_eq!(cc, m(&[&[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1]]));
        assert!(pi.of_word(&CactusWord::identity()).is_identity());
        for g in pi.generators() {
            assert!(g.preserves_form(&pi.form().gram));
        }
        let w = c.parse_word("g{s2} g{s1,s2} g{s1}").unwrap();
        assert_eq!(pi.of_word(&w), pi.of_element(&racg.embed(&w)));
    }

    #[test]
    fn pi_relations_and_intertwining() {
        for name in ["A2", "B2", "A3", "I2(5)"] {
            let c = cactus(name);
            let racg = RacgContext::new(&c).unwrap();
            for t in [rat(1, 1), rat(2, 1)] {
                let pi = PiRep::new(&racg, &t);
                assert!(check_relations(&c, pi.generators()).passed(), "{name}");
                let g = racg.group();
                for w in 0..g.order() {
                    let perm = racg.induced_aut_index(w);
                    let pp: Matrix<Rational> = pi_prime(&perm);
                    for v in 0..racg.size() {
                        assert_eq!(pp.matmul(pi.reflection(v)), pi.reflection(perm[v]).matmul(&pp));
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_representation_orders() {
        for name in ["A3", "B3", "H3", "I2(7)", "F4"] {
            let sys = CoxeterSystem::named(name).unwrap();
            let pi = PiOnSimple::new(&sys, &rat(1, 1));
            for s in 0..sys.rank() {
                assert!(pi.generator(s).preserves_form(&pi.form().gram));
                for v in 0..sys.rank() {
                    if s == v {
                        continue;
                    }
                    let k = sys.order(s, v).unwrap();
                    let p = pi.generator(s).matmul(pi.generator(v));
                    assert!((1..k).all(|j| !p.pow(j).is_identity()));
                    assert!(p.pow(k).is_identity());
                }
            }
        }
        let inf = CoxeterSystem::named("I2(inf)").unwrap();
        for t in [rat(1, 1), rat(3, 2)] {
            let pi = PiOnSimple::new(&inf, &t);
            let p = pi.generator(0).matmul(pi.generator(1));
            assert!((1..=20).all(|j| !p.pow(j).is_identity()));
        }
    }

    #[test]
    fn semidirect_with_diagram_automorphisms_is_faithful() {
        for name in ["A2", "B2", "A3", "D4"] {
            let sys = CoxeterSystem::named(name).unwrap();
            let g = FiniteCoxeterGroup::new(&sys).unwrap();
            let pi = PiOnSimple::new(&sys, &rat(1, 1));
            let autos = sys.diagram_automorphisms();
            let conductor = sys.conductor();
            let mut seen = HashSet::new();
            for w in 0..g.order() {
                for a in &autos {
                    let mat = pi.of(g.word(w), a);
                    let key: Vec<Vec<Rational>> = mat
                        .to_rows()
                        .into_iter()
                        .flatten()
                        .map(|x: CycloReal| x.coefficients_in(conductor))
                        .collect();
                    assert!(seen.insert(key), "{name}");
                }
            }
            assert_eq!(seen.len(), g.order() * autos.len());
        }
    }

    #[test]
    fn stable_lines_and_quotient_a2() {
        let c = cactus("A2");
        let racg = RacgContext::new(&c).unwrap();
        let t = rat(2, 1);
        let pi = PiRep::new(&racg, &t);
        let p: Matrix<Rational> = Matrix::permutation(&[0, 2, 1, 3]);
        let gens: Vec<Matrix<Rational>> =
            [1, 2].iter().map(|&l| p.transpose().matmul(&pi.generators()[l]).matmul(&p)).collect();
        let e = |i: usize| -> Vec<Rational> { (0..4).map(|k| rat((k == i) as i64, 1)).collect() };
        let u1 = vec![e(0), e(1), e(2)];
        let on_u1 = restrict(&gens, &u1).unwrap();
        let lines = stable_lines(&on_u1);
        let v0 = vec![rat(1, 1), rat(-1, 1), rat(1, 1)];
        assert!(lines.iter().any(|l| l.dim() == 1 && l.basis[0] == v0 && l.signs == vec![-1, 1]));

        let v0_full = vec![rat(1, 1), rat(-1, 1), rat(1, 1), rat(0, 1)];
        let q = quotient_rep(&gens, &[v0_full], &[e(0), e(2)]).unwrap();
        assert_eq!(q[0], m(&[&[1, 0], &[5, -1]]));
        assert_eq!(q[1], m(&[&[0, 1], &[1, 0]]));
        assert!(matches!(
            quotient_rep(&gens, &[e(0)], &[e(1)]),
            Err(crate::Error::SubspaceNotInvariant(_))
        ));
        let same = quotient_rep(&gens, &[], &[e(0), e(1), e(2), e(3)]).unwrap();
        assert_eq!(same, gens);
    }

    #[test]
    fn signed_permutations_at_zero() {
        for name in ["A2", "A3", "B3", "I2(5)", "H3"] {
            let c = cactus(name);
            assert!(signed_permutation_check(RhoRep::new(&c, &rat(0, 1)).unwrap().generators()));
        }
        let c = cactus("A2");
        assert!(!signed_permutation_check(RhoRep::new(&c, &rat(2, 1)).unwrap().generators()));
    }
}
