//! Cactus words over the generators `γ_I`, the defining relations, the
//! evaluation map to `W`, and the dictionary with the classical cactus group
//! `J_n` in type A.

use std::collections::HashMap;
use std::fmt;

use crate::coxeter::{CoxeterSystem, GroupElement, Subset};
use crate::error::{Error, Result};

/// A word in the generators of `C_W`; letters are indices into the
/// generator family of a [`CactusSystem`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CactusWord(pub Vec<usize>);

impl CactusWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &CactusWord) -> CactusWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        CactusWord(v)
    }

    pub fn inverse(&self) -> CactusWord {
        CactusWord(self.0.iter().rev().copied().collect())
    }

    pub fn power(&self, k: usize) -> CactusWord {
        CactusWord(self.0.iter().copied().cycle().take(self.0.len() * k).collect())
    }
}

/// Which defining relation applies to an adjacent pair `(γ_I, γ_J)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    /// `I ⊆ J`: `γ_I γ_J = γ_J γ_{w_J(I)}`.
    Nested,
    /// `I ∩ J = ∅` and every `m_{s,t} = 2` across: `γ_I γ_J = γ_J γ_I`.
    Product,
}

/// A Coxeter system together with the generating family of its cactus group,
/// the longest elements `w_I`, and the conjugation table `w_J(I)`.
#[derive(Clone, Debug)]
pub struct CactusSystem {
    system: CoxeterSystem,
    family: Vec<Subset>,
    longest: Vec<GroupElement>,
    index: HashMap<Subset, usize>,
    // conj[i][j] = index of w_J(I) when I ⊆ J.
    conj: Vec<Vec<Option<usize>>>,
}

impl CactusSystem {
    /// Generators indexed by the connected subsets.
    pub fn new(system: &CoxeterSystem) -> Result<Self> {
        Self::with_family(system, system.connected_subsets())
    }

    /// Generators indexed by an explicit family of subsets. Every member must
    /// generate a finite parabolic subgroup, and the family must be closed
    /// under `I ↦ w_J(I)` for nested members `I ⊆ J`.
    pub fn with_family(system: &CoxeterSystem, mut family: Vec<Subset>) -> Result<Self> {
        family.sort();
        family.dedup();
        if family.iter().any(|s| s.is_empty() || s.indices().any(|i| i >= system.rank())) {
            return Err(Error::InvalidFamily("members must be nonempty subsets of S".into()));
        }
        let longest = family
            .iter()
            .map(|&s| system.longest_element(s))
            .collect::<Result<Vec<_>>>()?;
        let index: HashMap<Subset, usize> = family.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut conj = vec![vec![None; family.len()]; family.len()];
        for (j, &big) in family.iter().enumerate() {
            for (i, &small) in family.iter().enumerate() {
                if !small.is_subset_of(big) {
                    continue;
                }
                let image = system.conjugate_subset_by(&longest[j], big, small)?;
                let k = *index.get(&image).ok_or_else(|| {
                    Error::InvalidFamily(format!(
                        "w_{}({}) = {} is not in the family",
                        system.format_subset(big),
                        system.format_subset(small),
                        system.format_subset(image)
                    ))
                })?;
                conj[i][j] = Some(k);
            }
        }
        Ok(Self {
            system: system.clone(),
            family,
            longest,
            index,
            conj,
        })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn family(&self) -> &[Subset] {
        &self.family
    }

    pub fn generator_count(&self) -> usize {
        self.family.len()
    }

    pub fn subset(&self, letter: usize) -> Subset {
        self.family[letter]
    }

    pub fn letter(&self, subset: Subset) -> Result<usize> {
        self.index
            .get(&subset)
            .copied()
            .ok_or_else(|| Error::NotAGenerator(self.system.format_subset(subset)))
    }

    /// Letter of a generator written as `{s1,s2}` (braces optional).
    pub fn letter_by_name(&self, text: &str) -> Result<usize> {
        self.letter(self.system.parse_subset(text)?)
    }

    pub fn longest(&self, letter: usize) -> &GroupElement {
        &self.longest[letter]
    }

    /// `w_J(I)` for `I ⊆ J`, as a letter.
    pub fn conjugate_letter(&self, j: usize, i: usize) -> Option<usize> {
        self.conj[i][j]
    }

    pub fn relation_kind(&self, i: usize, j: usize) -> Option<RelationKind> {
        let (a, b) = (self.family[i], self.family[j]);
        if a.is_subset_of(b) {
            Some(RelationKind::Nested)
        } else if a.is_disjoint(b) && self.system.commute_elementwise(a, b) {
            Some(RelationKind::Product)
        } else {
            None
        }
    }

    /// Pairs `(I, J)` with `I ⊊ J`.
    pub fn nested_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs(|a, b| a.is_proper_subset_of(b))
    }

    /// Unordered pairs `I < J` with `W_{I∪J} = W_I × W_J`.
    pub fn product_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs(|a, b| a < b && a.is_disjoint(b) && self.system.commute_elementwise(a, b))
    }

    fn pairs(&self, keep: impl Fn(Subset, Subset) -> bool) -> Vec<(usize, usize)> {
        let n = self.family.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| keep(self.family[i], self.family[j]))
            .collect()
    }

    pub fn parse_word(&self, text: &str) -> Result<CactusWord> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(CactusWord::identity());
        }
        let mut letters = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('g')
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix('{'))
                .ok_or_else(|| Error::WordSyntax(format!("expected g{{...}} at {rest:?}")))?;
            let close = body
                .find('}')
                .ok_or_else(|| Error::WordSyntax(format!("unclosed brace in {text:?}")))?;
            let subset = self
                .system
                .parse_subset(&body[..close])
                .map_err(|e| Error::WordSyntax(e.to_string()))?;
            letters.push(self.letter(subset)?);
            rest = body[close + 1..].trim_start();
        }
        Ok(CactusWord(letters))
    }

    pub fn format_word(&self, word: &CactusWord) -> String {
        if word.is_empty() {
            return "e".into();
        }
        word.0
            .iter()
            .map(|&l| format!("g{}", self.system.format_subset(self.family[l])))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn display<'a>(&'a self, word: &'a CactusWord) -> impl fmt::Display + 'a {
        struct D<'a>(&'a CactusSystem, &'a CactusWord);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format_word(self.1))
            }
        }
        D(self, word)
    }

    /// Cancel adjacent equal letters until none remain.
    pub fn free_reduce(&self, word: &CactusWord) -> CactusWord {
        let mut out: Vec<usize> = Vec::with_capacity(word.len());
        for &l in &word.0 {
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        CactusWord(out)
    }

    /// Rewrite the pair at `position, position + 1` by the defining relation
    /// read left to right.
    pub fn apply_relation(&self, word: &CactusWord, position: usize) -> Result<CactusWord> {
        let (Some(&i), Some(&j)) = (word.0.get(position), word.0.get(position + 1)) else {
            return Err(Error::RelationNotApplicable {
                position,
                reason: format!("word has length {}", word.len()),
            });
        };
        let replacement = match self.relation_kind(i, j) {
            Some(RelationKind::Nested) => [j, self.conj[i][j].expect("nested pair has a conjugate")],
            Some(RelationKind::Product) => [j, i],
            None => {
                return Err(Error::RelationNotApplicable {
                    position,
                    reason: format!(
                        "{} is not contained in {} and they do not commute",
                        self.system.format_subset(self.family[i]),
                        self.system.format_subset(self.family[j])
                    ),
                })
            }
        };
        let mut out = word.0.clone();
        out[position] = replacement[0];
        out[position + 1] = replacement[1];
        Ok(CactusWord(out))
    }

    /// Image under `γ_I ↦ w_I`.
    pub fn evaluate(&self, word: &CactusWord) -> GroupElement {
        word.0.iter().fold(self.system.identity(), |acc, &l| {
            self.system.multiply(&acc, &self.longest[l])
        })
    }

    pub fn is_pure(&self, word: &CactusWord) -> bool {
        self.evaluate(word).is_identity()
    }

    /// The defining relations as pairs of equal words: `γ_I² = e`, and
    /// `γ_I γ_J = γ_J γ_{w_J(I)}` for every applicable ordered pair.
    pub fn defining_relations(&self) -> Vec<(CactusWord, CactusWord)> {
        let n = self.family.len();
        let mut out: Vec<(CactusWord, CactusWord)> =
            (0..n).map(|i| (CactusWord(vec![i, i]), CactusWord::identity())).collect();
        for i in 0..n {
            for j in 0..n {
                if i == j || self.relation_kind(i, j).is_none() {
                    continue;
                }
                let lhs = CactusWord(vec![i, j]);
                let rhs = self.apply_relation(&lhs, 0).expect("relation applies");
                out.push((lhs, rhs));
            }
        }
        out
    }

    /// All words of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<CactusWord> {
        words_over(&(0..self.family.len()).collect::<Vec<_>>(), max_len)
    }
}

/// All words over `alphabet` of length at most `max_len`, shortest first and
/// lexicographic within a length.
pub fn words_over(alphabet: &[usize], max_len: usize) -> Vec<CactusWord> {
    let mut out = vec![CactusWord::identity()];
    let mut layer = vec![Vec::<usize>::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &a in alphabet {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(CactusWord));
        layer = next;
    }
    out
}

/// A classical cactus generator `s_{p,q}`, `1 ≤ p < q ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalGenerator {
    pub p: usize,
    pub q: usize,
}

impl fmt::Display for ClassicalGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s_{{{},{}}}", self.p, self.q)
    }
}

impl std::str::FromStr for ClassicalGenerator {
    type Err = Error;

    /// Accepts `s_{p,q}`, `s{p,q}`, `s_p,q` or `p,q`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::WordSyntax(format!("expected s_{{p,q}}, got {text:?}"));
        let t = text.trim();
        let t = t.strip_prefix('s').unwrap_or(t);
        let t = t.strip_prefix('_').unwrap_or(t);
        let t = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t);
        let (p, q) = t.split_once(',').ok_or_else(bad)?;
        Ok(Self {
            p: p.trim().parse().map_err(|_| bad())?,
            q: q.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// The isomorphism `J_n ≅ C_W` for `W` of type `A_{n-1}` with generators in
/// path order: `s_{p,q} ↦ γ_{{s_p, …, s_{q-1}}}`.
#[derive(Clone, Debug)]
pub struct TypeADictionary<'a> {
    cactus: &'a CactusSystem,
    n: usize,
}

impl<'a> TypeADictionary<'a> {
    pub fn new(cactus: &'a CactusSystem) -> Result<Self> {
        let sys = cactus.system();
        let r = sys.rank();
        for i in 0..r {
            for j in 0..r {
                let want = match i.abs_diff(j) {
                    0 => 1,
                    1 => 3,
                    _ => 2,
                };
                if sys.entry(i, j) != want {
                    return Err(Error::NotTypeA(format!(
                        "m({},{}) = {}",
                        sys.label(i),
                        sys.label(j),
                        sys.entry(i, j)
                    )));
                }
            }
        }
        Ok(Self { cactus, n: r + 1 })
    }

    /// `n` with `W = S_n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_cactus(&self, g: ClassicalGenerator) -> Result<usize> {
        if !(1 <= g.p && g.p < g.q && g.q <= self.n) {
            return Err(Error::OutOfRange(format!("{g} with n = {}", self.n)));
        }
        self.cactus.letter(Subset::from_indices(g.p - 1..g.q - 1))
    }

    pub fn from_cactus(&self, letter: usize) -> Result<ClassicalGenerator> {
        let subset = self.cactus.subset(letter);
        let idx: Vec<usize> = subset.indices().collect();
        let (first, last) = (idx[0], idx[idx.len() - 1]);
        if last - first + 1 != idx.len() {
            return Err(Error::OutOfRange(format!(
                "{} is not an interval",
                self.cactus.system().format_subset(subset)
            )));
        }
        Ok(ClassicalGenerator { p: first + 1, q: last + 2 })
    }

    pub fn translate(&self, word: &[ClassicalGenerator]) -> Result<CactusWord> {
        word.iter().map(|&g| self.to_cactus(g)).collect::<Result<Vec<_>>>().map(CactusWord)
    }

    pub fn generators(&self) -> Vec<ClassicalGenerator> {
        classical_generators(self.n)
    }
}

pub fn classical_generators(n: usize) -> Vec<ClassicalGenerator> {
    (1..=n)
        .flat_map(|p| (p + 1..=n).map(move |q| ClassicalGenerator { p, q }))
        .collect()
}

/// Defining relations of `J_n` as pairs of equal words:
/// `s_{p,q}² = 1`; `s_{p,q} s_{m,r} = s_{m,r} s_{p,q}` for disjoint
/// intervals; `s_{p,q} s_{m,r} = s_{p+q-r, p+q-m} s_{p,q}` for
/// `[m,r] ⊆ [p,q]`.
pub fn classical_relations(n: usize) -> Vec<(Vec<ClassicalGenerator>, Vec<ClassicalGenerator>)> {
    let gens = classical_generators(n);
    let mut out = Vec::new();
    for &a in &gens {
        out.push((vec![a, a], vec![]));
    }
    for &a in &gens {
        for &b in &gens {
            if a == b {
                continue;
            }
            if a.q < b.p || b.q < a.p {
                out.push((vec![a, b], vec![b, a]));
            } else if a.p <= b.p && b.q <= a.q {
                let c = ClassicalGenerator {
                    p: a.p + a.q - b.q,
                    q: a.p + a.q - b.p,
                };
                out.push((vec![a, b], vec![c, a]));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cactus(name: &str) -> CactusSystem {
        CactusSystem::new(&CoxeterSystem::named(name).unwrap()).unwrap()
    }

    #[test]
    fn parse_and_format() {
        let c = cactus("A2");
        let w = c.parse_word("g{s1,s2} g{s2}").unwrap();
        assert_eq!(w.letters(), &[2, 1]);
        assert_eq!(c.format_word(&w), "g{s1,s2} g{s2}");
        assert_eq!(c.parse_word("").unwrap(), CactusWord::identity());
        assert_eq!(c.parse_word("e").unwrap(), CactusWord::identity());
        assert_eq!(c.parse_word("g{s2,s1}").unwrap().letters(), &[2]);
        assert!(matches!(c.parse_word("g{s1"), Err(Error::WordSyntax(_))));
        assert!(matches!(c.parse_word("h{s1}"), Err(Error::WordSyntax(_))));
        let a3 = cactus("A3");
        assert!(matches!(a3.parse_word("g{s1,s3}"), Err(Error::NotAGenerator(_))));
    }

    #[test]
    fn free_reduction() {
        let c = cactus("A2");
        assert!(c.free_reduce(&CactusWord(vec![0, 0])).is_empty());
        assert!(c.free_reduce(&CactusWord(vec![0, 1, 1, 0])).is_empty());
        assert_eq!(c.free_reduce(&CactusWord(vec![0, 1])).letters(), &[0, 1]);
        let w = CactusWord(vec![2, 0, 1, 1, 0, 1]);
        let r = c.free_reduce(&w);
        assert_eq!(c.free_reduce(&r), r);
        assert_eq!(r.letters(), &[2, 1]);
    }

    #[test]
    fn relations() {
        let c = cactus("A2");
        let w = c.parse_word("g{s1} g{s1,s2}").unwrap();
        assert_eq!(c.format_word(&c.apply_relation(&w, 0).unwrap()), "g{s1,s2} g{s2}");
        let w = c.parse_word("g{s1} g{s2}").unwrap();
        assert!(matches!(c.apply_relation(&w, 0), Err(Error::RelationNotApplicable { .. })));
        assert!(c.apply_relation(&w, 1).is_err());
        let same = c.parse_word("g{s1,s2} g{s1,s2}").unwrap();
        assert_eq!(c.apply_relation(&same, 0).unwrap(), same);

        let p = cactus("A1*A1");
        let w = p.parse_word("g{a} g{b}").unwrap();
        assert_eq!(p.format_word(&p.apply_relation(&w, 0).unwrap()), "g{b} g{a}");
    }

    #[test]
    fn evaluation_and_purity() {
        let c = cactus("A2");
        let sys = c.system().clone();
        assert!(c.evaluate(&CactusWord::identity()).is_identity());
        assert_eq!(c.evaluate(&c.parse_word("g{s1,s2}").unwrap()).word(), &[0, 1, 0]);
        assert!(c.is_pure(&c.parse_word("g{s1} g{s1}").unwrap()));
        assert!(!c.is_pure(&c.parse_word("g{s2}").unwrap()));
        let bc = c.parse_word("g{s2} g{s1,s2}").unwrap();
        assert!(c.is_pure(&bc.power(3)));
        assert!(!c.is_pure(&bc));
        assert_eq!(c.evaluate(&bc), sys.element(&[1, 0, 1, 0]));
    }

    #[test]
    fn evaluation_respects_relations() {
        for name in ["A3", "B3", "H3", "I2(6)", "A2*A1", "D4"] {
            let c = cactus(name);
            for (lhs, rhs) in c.defining_relations() {
                assert_eq!(c.evaluate(&lhs), c.evaluate(&rhs), "{name}");
            }
            for (i, j) in c.nested_pairs() {
                let sys = c.system();
                let wj = c.longest(j);
                let conj = sys.multiply(&sys.multiply(wj, c.longest(i)), wj);
                assert_eq!(&conj, c.longest(c.conjugate_letter(j, i).unwrap()));
            }
            for (i, j) in c.product_pairs() {
                let sys = c.system();
                assert_eq!(
                    sys.multiply(c.longest(i), c.longest(j)),
                    sys.multiply(c.longest(j), c.longest(i))
                );
            }
        }
    }

    #[test]
    fn explicit_family() {
        let sys = CoxeterSystem::named("I2(2)").unwrap();
        assert_eq!(CactusSystem::new(&sys).unwrap().generator_count(), 2);
        let fam = vec![Subset::singleton(0), Subset::singleton(1), sys.full_set()];
        let c = CactusSystem::with_family(&sys, fam).unwrap();
        assert_eq!(c.generator_count(), 3);
        assert_eq!(c.relation_kind(0, 2), Some(RelationKind::Nested));

        // {s1} ⊂ {s1,s2} in A2 needs {s2} as well.
        let a2 = CoxeterSystem::named("A2").unwrap();
        let bad = vec![Subset::singleton(0), a2.full_set()];
        assert!(matches!(CactusSystem::with_family(&a2, bad), Err(Error::InvalidFamily(_))));
        let inf = CoxeterSystem::named("I2(inf)").unwrap();
        assert!(CactusSystem::with_family(&inf, vec![inf.full_set()]).is_err());
    }

    #[test]
    fn type_a_dictionary() {
        let c = cactus("A2");
        let d = TypeADictionary::new(&c).unwrap();
        assert_eq!(d.n(), 3);
        let s13: ClassicalGenerator = "s_{1,3}".parse().unwrap();
        assert_eq!(c.subset(d.to_cactus(s13).unwrap()), Subset::from_indices([0, 1]));
        let s23: ClassicalGenerator = "s{2,3}".parse().unwrap();
        assert_eq!(c.subset(d.to_cactus(s23).unwrap()), Subset::singleton(1));
        let s12: ClassicalGenerator = "1,2".parse().unwrap();
        assert_eq!(d.from_cactus(d.to_cactus(s12).unwrap()).unwrap(), s12);
        for g in d.generators() {
            assert_eq!(d.from_cactus(d.to_cactus(g).unwrap()).unwrap(), g);
        }
        assert!(matches!(
            d.to_cactus(ClassicalGenerator { p: 2, q: 4 }),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            TypeADictionary::new(&cactus("B3")),
            Err(Error::NotTypeA(_))
        ));
        assert!("s_{1}".parse::<ClassicalGenerator>().is_err());
    }

    #[test]
    fn classical_relation_count() {
        // n = 3: three squares, and s_{1,3} conjugating each of s_{1,2}, s_{2,3}.
        let rels = classical_relations(3);
        assert_eq!(rels.len(), 5);
        let s = |p, q| ClassicalGenerator { p, q };
        assert!(rels.contains(&(vec![s(1, 3), s(1, 2)], vec![s(2, 3), s(1, 3)])));
        let rels4 = classical_relations(4);
        assert!(rels4.contains(&(vec![s(1, 2), s(3, 4)], vec![s(3, 4), s(1, 2)])));
    }

    #[test]
    fn classical_relations_hold_in_w() {
        for n in 3..=5 {
            let c = cactus(&format!("A{}", n - 1));
            let d = TypeADictionary::new(&c).unwrap();
            for (lhs, rhs) in classical_relations(n) {
                let l = d.translate(&lhs).unwrap();
                let r = d.translate(&rhs).unwrap();
                assert_eq!(c.evaluate(&l), c.evaluate(&r));
            }
        }
    }
}
