use serde::Serialize;

use crate::cactus::CactusSystem;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum Violation {
    /// `M_I² ≠ 1`.
    Involution { generator: usize },
    /// `M_I M_J ≠ M_J M_I` for a commuting pair.
    Product { left: usize, right: usize },
    /// `M_I M_J ≠ M_J M_{w_J(I)}` for `I ⊊ J`.
    Nested { inner: usize, outer: usize, conjugate: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, cactus: &CactusSystem) -> Vec<String> {
        let name = |l: usize| cactus.system().format_subset(cactus.subset(l));
        self.violations
            .iter()
            .map(|v| match *v {
                Violation::Involution { generator } => format!("(a) {} is not an involution", name(generator)),
                Violation::Product { left, right } => {
                    format!("(b) {} and {} do not commute", name(left), name(right))
                }
                Violation::Nested { inner, outer, conjugate } => format!(
                    "(c) {0}·{1} ≠ {1}·{2}",
                    name(inner),
                    name(outer),
                    name(conjugate)
                ),
            })
            .collect()
    }
}

/// Check the defining relations of the cactus group on generator matrices
/// indexed like the generator family.
pub fn check_relations<T: Scalar>(cactus: &CactusSystem, generators: &[Matrix<T>]) -> RelationReport {
    let mut report = RelationReport::default();
    for (i, m) in generators.iter().enumerate() {
        report.checked += 1;
        if !m.matmul(m).is_identity() {
            report.violations.push(Violation::Involution { generator: i });
        }
    }
    for (i, j) in cactus.product_pairs() {
        report.checked += 1;
        if generators[i].matmul(&generators[j]) != generators[j].matmul(&generators[i]) {
            report.violations.push(Violation::Product { left: i, right: j });
        }
    }
    for (i, j) in cactus.nested_pairs() {
        report.checked += 1;
        let k = cactus.conjugate_letter(j, i).expect("nested pair");
        if generators[i].matmul(&generators[j]) != generators[j].matmul(&generators[k]) {
            report.violations.push(Violation::Nested {
                inner: i,
                outer: j,
                conjugate: k,
            });
        }
    }
    report
}
