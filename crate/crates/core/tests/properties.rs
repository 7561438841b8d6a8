use cactus_core::cactus::{CactusSystem, CactusWord};
use cactus_core::racg::RacgContext;
use cactus_core::rep::{check_relations, PiRep, RhoRep};
use cactus_core::scalar::rat;
use cactus_core::{CoxeterSystem, CycloReal, Matrix, Rational, Sign};
use num_traits::{One, Zero};
use proptest::prelude::*;
use std::sync::OnceLock;

fn a3() -> &'static RacgContext {
    static CTX: OnceLock<RacgContext> = OnceLock::new();
    CTX.get_or_init(|| {
        let c = CactusSystem::new(&CoxeterSystem::named("A3").unwrap()).unwrap();
        RacgContext::new(&c).unwrap()
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn cactus_word(k: usize, max: usize) -> impl Strategy<Value = CactusWord> {
    prop::collection::vec(0..k, 0..=max).prop_map(CactusWord)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_sign_matches_floating_point(a in small_rational(), b in small_rational(), m in 3u32..=12) {
        let x = CycloReal::from_rational(a) + CycloReal::from_rational(b) * CycloReal::cos_pi_over(m);
        let f = x.to_f64();
        prop_assume!(f.abs() > 1e-9);
        let expected = if f > 0.0 { Sign::Positive } else { Sign::Negative };
        prop_assert_eq!(x.sign(), expected);
    }

    #[test]
    fn cyclotomic_inverse(a in small_rational(), b in small_rational(), m in 3u32..=10) {
        let x = CycloReal::from_rational(a) + CycloReal::from_rational(b) * CycloReal::cos_pi_over(m);
        prop_assume!(!x.is_zero());
        let y = x.inv().unwrap();
        prop_assert!((x * y).is_one());
    }

    #[test]
    fn rational_inverse_and_determinant(entries in prop::collection::vec(small_rational(), 9)) {
        let rows: Vec<Vec<Rational>> = entries.chunks(3).map(<[Rational]>::to_vec).collect();
        let m = Matrix::from_rows(rows);
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.matmul(&inv).is_identity());
                prop_assert_eq!(m.determinant() * inv.determinant(), rat(1, 1));
            }
            None => prop_assert!(m.determinant().is_zero()),
        }
    }

    #[test]
    fn embedding_is_a_homomorphism(u in cactus_word(6, 6), v in cactus_word(6, 6)) {
        let racg = a3();
        let lhs = racg.embed(&u.concat(&v));
        let rhs = racg.semidirect_mul(&racg.embed(&u), &racg.embed(&v));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(racg.cactus_equal(&u.concat(&u.inverse()), &CactusWord::identity()));
    }

    #[test]
    fn normal_form_ignores_inserted_squares(word in prop::collection::vec(0usize..11, 0..10), x in 0usize..11, at in 0usize..10) {
        let racg = a3();
        let mut longer = word.clone();
        let at = at.min(longer.len());
        longer.splice(at..at, [x, x]);
        prop_assert_eq!(racg.normal_form(&word), racg.normal_form(&longer));
    }

    #[test]
    fn rho_relations_for_generic_parameters(t in small_rational()) {
        let c = CactusSystem::new(&CoxeterSystem::named("B3").unwrap()).unwrap();
        if let Ok(rho) = RhoRep::new(&c, &t) {
            prop_assert!(check_relations(&c, rho.generators()).passed());
        }
        let racg = RacgContext::new(&CactusSystem::new(&CoxeterSystem::named("A2").unwrap()).unwrap()).unwrap();
        prop_assert!(check_relations(racg.cactus(), PiRep::new(&racg, &t).generators()).passed());
    }
}

#[test]
fn pi_of_words_matches_embedding() {
    let racg = a3();
    let pi = PiRep::new(racg, &rat(3, 2));
    for w in racg.cactus().words_up_to(3) {
        assert_eq!(pi.of_word(&w), pi.of_element(&racg.embed(&w)));
    }
}
