//! The right-angled Coxeter system `(𝕎, 𝕊)` on conjugates of the parabolic
//! subgroups `W_I`, its word problem, the `W`-action on it, and the embedding
//! of the cactus group into `𝕎 ⋊ Aut(𝕎, 𝕊)`.
//!
//! `W` must be finite.

use std::collections::HashMap;

use serde::Serialize;

use crate::cactus::{CactusSystem, CactusWord};
use crate::coxeter::{FiniteCoxeterGroup, GroupElement};
use crate::error::Result;

/// Entry of the right-angled matrix `𝕄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BigEntry {
    Equal,
    Commute,
    Free,
}

impl BigEntry {
    /// `1`, `2`, or `0` for ∞.
    pub fn code(self) -> u32 {
        match self {
            BigEntry::Equal => 1,
            BigEntry::Commute => 2,
            BigEntry::Free => 0,
        }
    }
}

/// A permutation of `𝕊`, with `perm[x]` the image of `x`.
pub type Permutation = Vec<usize>;

/// `(f ∘ g)[x] = f[g[x]]`.
pub fn compose(f: &[usize], g: &[usize]) -> Permutation {
    g.iter().map(|&x| f[x]).collect()
}

pub fn is_identity_permutation(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// An element `(τ, g)` of `𝕎 ⋊ Aut(𝕎, 𝕊)`, with `τ` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SemidirectElement {
    #[serde(rename = "word")]
    pub racg_part: Vec<usize>,
    #[serde(rename = "permutation")]
    pub aut_part: Permutation,
}

impl SemidirectElement {
    pub fn identity(n: usize) -> Self {
        Self {
            racg_part: Vec::new(),
            aut_part: (0..n).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.racg_part.is_empty() && is_identity_permutation(&self.aut_part)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ParabolicConjugateJson {
    pub index: usize,
    pub order: usize,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RacgJson {
    pub generators: Vec<ParabolicConjugateJson>,
    pub matrix: Vec<Vec<u32>>,
}

/// `𝕊`, `𝕄` and the `W`-action, built once per system.
///
/// `𝕊` is ordered by subgroup order, then by the sorted list of element
/// indices, where elements of `W` are indexed in shortlex order of their
/// lexicographically least reduced words.
#[derive(Clone, Debug)]
pub struct RacgContext {
    cactus: CactusSystem,
    group: FiniteCoxeterGroup,
    subgroups: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
    matrix: Vec<Vec<BigEntry>>,
    // conjugation by each simple reflection, as a permutation of 𝕊
    simple_perms: Vec<Permutation>,
    // per cactus generator: index of W_I in 𝕊 and g_{w_I}
    generator_index: Vec<usize>,
    generator_perm: Vec<Permutation>,
}

impl RacgContext {
    pub fn new(cactus: &CactusSystem) -> Result<Self> {
        let group = FiniteCoxeterGroup::new(cactus.system())?;
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        for &subset in cactus.family() {
            let base = group.parabolic(subset);
            for w in 0..group.order() {
                let mut conj: Vec<usize> = base.iter().map(|&x| group.conjugate(w, x)).collect();
                conj.sort_unstable();
                if seen.insert(conj.clone(), ()).is_none() {
                    found.push(conj);
                }
            }
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let lookup: HashMap<Vec<usize>, usize> =
            found.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();

        let n = found.len();
        let mut matrix = vec![vec![BigEntry::Equal; n]; n];
        for a in 0..n {
            for b in a + 1..n {
                let e = big_entry(&group, &found[a], &found[b]);
                matrix[a][b] = e;
                matrix[b][a] = e;
            }
        }

        let conj_perm = |w: usize| -> Permutation {
            found
                .iter()
                .map(|sub| {
                    let mut c: Vec<usize> = sub.iter().map(|&x| group.conjugate(w, x)).collect();
                    c.sort_unstable();
                    lookup[&c]
                })
                .collect()
        };
        let simple_perms: Vec<Permutation> =
            (0..cactus.system().rank()).map(|s| conj_perm(group.generator(s))).collect();

        let mut ctx = Self {
            cactus: cactus.clone(),
            group,
            subgroups: found,
            lookup,
            matrix,
            simple_perms,
            generator_index: Vec::new(),
            generator_perm: Vec::new(),
        };
        for l in 0..cactus.generator_count() {
            let base = ctx.group.parabolic(cactus.subset(l));
            ctx.generator_index.push(ctx.lookup[&base]);
            let wi = ctx.group.index_of(cactus.longest(l));
            let perm = ctx.induced_aut_index(wi);
            ctx.generator_perm.push(perm);
        }
        Ok(ctx)
    }

    pub fn cactus(&self) -> &CactusSystem {
        &self.cactus
    }

    pub fn group(&self) -> &FiniteCoxeterGroup {
        &self.group
    }

    /// `|𝕊|`.
    pub fn size(&self) -> usize {
        self.subgroups.len()
    }

    /// Elements of the `x`-th member of `𝕊`, as sorted indices into `W`.
    pub fn subgroup(&self, x: usize) -> &[usize] {
        &self.subgroups[x]
    }

    pub fn index_of_subgroup(&self, elements: &[usize]) -> Option<usize> {
        let mut v = elements.to_vec();
        v.sort_unstable();
        self.lookup.get(&v).copied()
    }

    pub fn entry(&self, x: usize, y: usize) -> BigEntry {
        self.matrix[x][y]
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.matrix[x][y] == BigEntry::Commute
    }

    pub fn matrix_codes(&self) -> Vec<Vec<u32>> {
        self.matrix.iter().map(|r| r.iter().map(|e| e.code()).collect()).collect()
    }

    /// Index in `𝕊` of `W_I` for a cactus generator.
    pub fn generator_subgroup(&self, letter: usize) -> usize {
        self.generator_index[letter]
    }

    /// `g_{w_I}` for a cactus generator.
    pub fn generator_automorphism(&self, letter: usize) -> &Permutation {
        &self.generator_perm[letter]
    }

    /// Short human-readable name for a member of `𝕊`: `W_{...}` for a
    /// standard parabolic, otherwise `w·W_{...}` with a conjugating element.
    pub fn subgroup_label(&self, x: usize) -> String {
        let sys = self.cactus.system();
        for (l, &idx) in self.generator_index.iter().enumerate() {
            if idx == x {
                return format!("W{}", sys.format_subset(self.cactus.subset(l)));
            }
        }
        for w in 0..self.group.order() {
            let p = self.induced_aut_index(w);
            for (l, &idx) in self.generator_index.iter().enumerate() {
                if p[idx] == x {
                    let word: Vec<&str> = self.group.word(w).iter().map(|&s| sys.label(s)).collect();
                    return format!("{}·W{}", word.join(""), sys.format_subset(self.cactus.subset(l)));
                }
            }
        }
        unreachable!("every member of 𝕊 is a conjugate of some W_I")
    }

    /// Canonical form of a word over `𝕊`: cancel letters that meet an equal
    /// letter across commuting letters, then take the lexicographically least
    /// word obtainable by commuting adjacent letters.
    pub fn normal_form(&self, word: &[usize]) -> Vec<usize> {
        let mut reduced: Vec<usize> = Vec::with_capacity(word.len());
        for &x in word {
            let mut cancel = None;
            for (pos, &y) in reduced.iter().enumerate().rev() {
                if y == x {
                    cancel = Some(pos);
                    break;
                }
                if !self.commutes(x, y) {
                    break;
                }
            }
            match cancel {
                Some(pos) => {
                    reduced.remove(pos);
                }
                None => reduced.push(x),
            }
        }
        self.lex_least_shuffle(&reduced)
    }

    fn lex_least_shuffle(&self, word: &[usize]) -> Vec<usize> {
        let mut used = vec![false; word.len()];
        let mut out = Vec::with_capacity(word.len());
        for _ in 0..word.len() {
            let mut best: Option<usize> = None;
            for i in 0..word.len() {
                if used[i] {
                    continue;
                }
                let available = (0..i).all(|k| used[k] || self.commutes(word[k], word[i]));
                if available && best.is_none_or(|b| word[i] < word[b]) {
                    best = Some(i);
                }
            }
            let b = best.expect("some unused letter is always available");
            used[b] = true;
            out.push(word[b]);
        }
        out
    }

    /// `g_w` for the element of `W` with the given index.
    pub fn induced_aut_index(&self, w: usize) -> Permutation {
        self.group
            .word(w)
            .iter()
            .fold((0..self.size()).collect(), |acc: Permutation, &s| compose(&acc, &self.simple_perms[s]))
    }

    pub fn induced_aut(&self, w: &GroupElement) -> Permutation {
        self.induced_aut_index(self.group.index_of(w))
    }

    pub fn apply(&self, perm: &[usize], word: &[usize]) -> Vec<usize> {
        word.iter().map(|&x| perm[x]).collect()
    }

    pub fn identity_element(&self) -> SemidirectElement {
        SemidirectElement::identity(self.size())
    }

    /// `(τ, g)(τ', g') = (τ·g(τ'), g∘g')`.
    pub fn semidirect_mul(&self, a: &SemidirectElement, b: &SemidirectElement) -> SemidirectElement {
        let mut word = a.racg_part.clone();
        word.extend(b.racg_part.iter().map(|&x| a.aut_part[x]));
        SemidirectElement {
            racg_part: self.normal_form(&word),
            aut_part: compose(&a.aut_part, &b.aut_part),
        }
    }

    pub fn semidirect_inverse(&self, a: &SemidirectElement) -> SemidirectElement {
        let mut inv = vec![0; a.aut_part.len()];
        for (i, &x) in a.aut_part.iter().enumerate() {
            inv[x] = i;
        }
        let word: Vec<usize> = a.racg_part.iter().rev().map(|&x| inv[x]).collect();
        SemidirectElement {
            racg_part: self.normal_form(&word),
            aut_part: inv,
        }
    }

    /// `(τ_{W_I}, g_{w_I})`.
    pub fn generator_image(&self, letter: usize) -> SemidirectElement {
        SemidirectElement {
            racg_part: vec![self.generator_index[letter]],
            aut_part: self.generator_perm[letter].clone(),
        }
    }

    /// Image of a cactus word under `γ_I ↦ τ_{W_I} g_{w_I}`.
    pub fn embed(&self, word: &CactusWord) -> SemidirectElement {
        let mut raw = Vec::with_capacity(word.len());
        let mut perm: Permutation = (0..self.size()).collect();
        for &l in word.letters() {
            raw.push(perm[self.generator_index[l]]);
            perm = compose(&perm, &self.generator_perm[l]);
        }
        SemidirectElement {
            racg_part: self.normal_form(&raw),
            aut_part: perm,
        }
    }

    pub fn cactus_equal(&self, u: &CactusWord, v: &CactusWord) -> bool {
        self.embed(u) == self.embed(v)
    }

    /// Whether `w ↦ g_w` is injective. It fails exactly when some `w ≠ e`
    /// normalizes every member of `𝕊`, e.g. a central longest element.
    pub fn action_is_faithful(&self) -> bool {
        (1..self.group.order()).all(|w| !is_identity_permutation(&self.induced_aut_index(w)))
    }

    /// Elements `w ≠ e` with `g_w = id`.
    pub fn action_kernel(&self) -> Vec<usize> {
        (1..self.group.order())
            .filter(|&w| is_identity_permutation(&self.induced_aut_index(w)))
            .collect()
    }

    /// Whether the automorphism part is trivial exactly when the word is pure.
    /// Pure words always have trivial automorphism part; the converse holds
    /// when [`Self::action_is_faithful`].
    pub fn purity_consistency(&self, word: &CactusWord) -> bool {
        is_identity_permutation(&self.embed(word).aut_part) == self.cactus.is_pure(word)
    }

    /// Whether a permutation of `𝕊` preserves `𝕄`.
    pub fn preserves_matrix(&self, perm: &[usize]) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.matrix[perm[a]][perm[b]] == self.matrix[a][b]))
    }

    pub fn to_json(&self) -> RacgJson {
        let sys = self.cactus.system();
        RacgJson {
            generators: self
                .subgroups
                .iter()
                .enumerate()
                .map(|(i, s)| ParabolicConjugateJson {
                    index: i,
                    order: s.len(),
                    elements: s.iter().map(|&x| sys.format_word(self.group.word(x))).collect(),
                })
                .collect(),
            matrix: self.matrix_codes(),
        }
    }
}

fn big_entry(group: &FiniteCoxeterGroup, a: &[usize], b: &[usize]) -> BigEntry {
    let contains = |big: &[usize], small: &[usize]| small.iter().all(|x| big.binary_search(x).is_ok());
    if contains(a, b) || contains(b, a) {
        return BigEntry::Commute;
    }
    let trivial_meet = a.iter().filter(|x| b.binary_search(x).is_ok()).count() == 1;
    let commute = trivial_meet && a.iter().all(|&x| b.iter().all(|&y| group.mul(x, y) == group.mul(y, x)));
    if commute {
        BigEntry::Commute
    } else {
        BigEntry::Free
    }
}
