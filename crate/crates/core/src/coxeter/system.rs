use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::subset::{Subset, MAX_RANK};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{CycloReal, Rational};

/// Off-diagonal entry `0` encodes `m = ∞`.
pub const INFINITY: u32 = 0;

/// JSON form: `{"labels": ["s1","s2"], "matrix": [[1,3],[3,1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterJson {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<u32>>,
}

/// A Coxeter system given by generator labels and a Coxeter matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct CoxeterSystem {
    labels: Vec<String>,
    matrix: Vec<Vec<u32>>,
    reflections: Vec<Matrix<CycloReal>>,
}

impl CoxeterSystem {
    pub fn new(labels: Vec<String>, matrix: Vec<Vec<u32>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty generator set".into()));
        }
        if n > MAX_RANK {
            return Err(Error::InvalidMatrix(format!("rank {n} exceeds {MAX_RANK}")));
        }
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!("expected a {n}x{n} matrix")));
        }
        for i in 0..n {
            if matrix[i][i] != 1 {
                return Err(Error::InvalidMatrix(format!("diagonal entry {i} is not 1")));
            }
            for j in 0..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::InvalidMatrix(format!("not symmetric at ({i},{j})")));
                }
                if i != j && matrix[i][j] == 1 {
                    return Err(Error::InvalidMatrix(format!("off-diagonal entry ({i},{j}) is 1")));
                }
            }
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains(|c: char| c.is_whitespace() || "{},".contains(c)) {
                return Err(Error::InvalidMatrix(format!("bad label {l:?}")));
            }
            if labels[..i].contains(l) {
                return Err(Error::InvalidMatrix(format!("duplicate label {l:?}")));
            }
        }
        let mut sys = Self {
            labels,
            matrix,
            reflections: Vec::new(),
        };
        sys.reflections = (0..n).map(|s| sys.reflection_matrix(s, &Rational::from_integer(1.into()))).collect();
        Ok(sys)
    }

    pub fn from_json(json: &CoxeterJson) -> Result<Self> {
        Self::new(json.labels.clone(), json.matrix.clone())
    }

    pub fn to_json(&self) -> CoxeterJson {
        CoxeterJson {
            labels: self.labels.clone(),
            matrix: self.matrix.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, s: usize) -> &str {
        &self.labels[s]
    }

    pub fn generator(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Raw matrix entry, `0` for ∞.
    pub fn entry(&self, s: usize, t: usize) -> u32 {
        self.matrix[s][t]
    }

    /// `m_{s,t}`, or `None` for ∞.
    pub fn order(&self, s: usize, t: usize) -> Option<u32> {
        match self.matrix[s][t] {
            INFINITY => None,
            m => Some(m),
        }
    }

    pub fn full_set(&self) -> Subset {
        Subset::from_indices(0..self.rank())
    }

    /// Diagram edge: `m_{s,t} >= 3` or ∞.
    pub fn is_edge(&self, s: usize, t: usize) -> bool {
        s != t && self.order(s, t).is_none_or(|m| m >= 3)
    }

    /// No diagram edge joins the two sets.
    pub fn commute_elementwise(&self, a: Subset, b: Subset) -> bool {
        a.indices().all(|s| b.indices().all(|t| s == t || self.order(s, t) == Some(2)))
    }

    /// Conductor large enough to hold every `cos(π/m_{s,t})`; 1 when all of
    /// them are rational.
    pub fn conductor(&self) -> u32 {
        let mut n = 1u32;
        for row in &self.matrix {
            for &m in row {
                if m >= 4 {
                    n = n.lcm(&(2 * m));
                }
            }
        }
        n
    }

    /// Gram matrix of `B_t` on `ℝ^S`: `−cos(π/m)` for finite `m`, `−t` for ∞.
    pub fn gram(&self, t: &Rational) -> Matrix<CycloReal> {
        let n = self.rank();
        let mut g = Matrix::zeros(n, n);
        for s in 0..n {
            for v in 0..n {
                g[(s, v)] = match self.order(s, v) {
                    Some(m) => -CycloReal::cos_pi_over(m),
                    None => CycloReal::from_rational(-t.clone()),
                };
            }
        }
        g
    }

    /// Matrix of `σ_s(x) = x − 2B_t(x, ε_s)ε_s` in the basis `{ε_v}`.
    pub fn reflection_matrix(&self, s: usize, t: &Rational) -> Matrix<CycloReal> {
        let g = self.gram(t);
        let n = self.rank();
        let mut m = Matrix::identity(n);
        let two = CycloReal::from_integer(2);
        for v in 0..n {
            let delta = if v == s { CycloReal::from_integer(1) } else { CycloReal::from_integer(0) };
            m[(s, v)] = delta - two.clone() * g[(s, v)].clone();
        }
        m
    }

    /// Reflection matrix at `t = 1`, precomputed.
    pub fn reflection(&self, s: usize) -> &Matrix<CycloReal> {
        &self.reflections[s]
    }

    /// `W_I` is finite iff `B_1` restricted to `I` is positive definite.
    pub fn is_finite_parabolic(&self, subset: Subset) -> bool {
        let idx: Vec<usize> = subset.indices().collect();
        if idx.iter().any(|&s| idx.iter().any(|&t| self.order(s, t).is_none())) {
            return false;
        }
        let mut g = Matrix::zeros(idx.len(), idx.len());
        for (a, &s) in idx.iter().enumerate() {
            for (b, &t) in idx.iter().enumerate() {
                g[(a, b)] = -CycloReal::cos_pi_over(self.order(s, t).expect("finite"));
            }
        }
        g.is_positive_definite()
    }

    pub fn is_finite(&self) -> bool {
        self.is_finite_parabolic(self.full_set())
    }

    /// Coxeter diagram restricted to `subset` is connected.
    pub fn is_diagram_connected(&self, subset: Subset) -> bool {
        let Some(start) = subset.indices().next() else {
            return false;
        };
        let mut seen = Subset::singleton(start);
        let mut stack = vec![start];
        while let Some(s) = stack.pop() {
            for t in subset.indices() {
                if !seen.contains(t) && self.is_edge(s, t) {
                    seen = seen.union(Subset::singleton(t));
                    stack.push(t);
                }
            }
        }
        seen == subset
    }

    /// All nonempty `I ⊆ S` with `W_I` finite and connected diagram, in
    /// canonical order.
    pub fn connected_subsets(&self) -> Vec<Subset> {
        let n = self.rank();
        assert!(n < 32, "connected subset enumeration limited to rank < 32");
        let mut out: Vec<Subset> = (1u64..(1u64 << n))
            .map(Subset::from_bits)
            .filter(|&s| self.is_diagram_connected(s) && self.is_finite_parabolic(s))
            .collect();
        out.sort();
        out
    }

    /// Permutations of `S` preserving the Coxeter matrix, identity first.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend_automorphisms(&mut perm, &mut used, &mut out);
        out
    }

    fn extend_automorphisms(&self, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let k = perm.len();
        if k == self.rank() {
            out.push(perm.clone());
            return;
        }
        for cand in 0..self.rank() {
            if used[cand] {
                continue;
            }
            if (0..k).all(|j| self.matrix[k][j] == self.matrix[cand][perm[j]]) {
                used[cand] = true;
                perm.push(cand);
                self.extend_automorphisms(perm, used, out);
                perm.pop();
                used[cand] = false;
            }
        }
    }

    pub fn format_subset(&self, subset: Subset) -> String {
        let names: Vec<&str> = subset.indices().map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Parse `{s1,s2}` (braces optional) into a subset.
    pub fn parse_subset(&self, text: &str) -> Result<Subset> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(inner);
        let mut idx = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            idx.push(self.generator(part)?);
        }
        Ok(Subset::from_indices(idx))
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|&s| self.label(s)).collect::<Vec<_>>().join(" ")
    }

    /// Named type (`A3`, `B4`, `D5`, `E6`, `F4`, `G2`, `H3`, `I2(5)`,
    /// `I2(inf)`) or a `*`-joined product of them.
    pub fn named(name: &str) -> Result<Self> {
        let factors: Vec<&str> = name.split('*').map(str::trim).collect();
        let mats = factors.iter().map(|f| named_matrix(f)).collect::<Result<Vec<_>>>()?;
        let n: usize = mats.iter().map(Vec::len).sum();
        let mut matrix = vec![vec![2u32; n]; n];
        let mut off = 0;
        for m in &mats {
            for (i, row) in m.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    matrix[off + i][off + j] = x;
                }
            }
            off += m.len();
        }
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        let labels: Vec<String> = if factors.len() == 1 && factors[0].starts_with("I2") {
            vec!["a".into(), "b".into()]
        } else if factors.len() > 1 && n <= 26 {
            (0..n).map(|i| char::from(b'a' + i as u8).to_string()).collect()
        } else {
            (1..=n).map(|i| format!("s{i}")).collect()
        };
        Self::new(labels, matrix)
    }

    /// Named type or a path to a JSON file.
    pub fn load(spec: &str) -> Result<Self> {
        match Self::named(spec) {
            Ok(sys) => Ok(sys),
            Err(named_err) => {
                let Ok(text) = std::fs::read_to_string(spec) else {
                    return Err(named_err);
                };
                let json: CoxeterJson =
                    serde_json::from_str(&text).map_err(|e| Error::InvalidMatrix(format!("{spec}: {e}")))?;
                Self::from_json(&json)
            }
        }
    }
}

fn chain(n: usize, edges: &[(usize, usize, u32)]) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &(a, b, w) in edges {
        m[a][b] = w;
        m[b][a] = w;
    }
    m
}

fn path_edges(n: usize) -> Vec<(usize, usize, u32)> {
    (1..n).map(|i| (i - 1, i, 3)).collect()
}

/// Bourbaki numbering throughout.
fn named_matrix(name: &str) -> Result<Vec<Vec<u32>>> {
    let unknown = || Error::UnknownType(name.to_string());
    if let Some(rest) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        let m = match rest.trim() {
            "inf" | "∞" | "0" => INFINITY,
            r => r.parse::<u32>().map_err(|_| unknown())?,
        };
        if m == 1 {
            return Err(unknown());
        }
        return Ok(chain(2, &[(0, 1, m)]));
    }
    let (kind, rank) = name.split_at(1.min(name.len()));
    let n: usize = rank.parse().map_err(|_| unknown())?;
    if n == 0 {
        return Err(unknown());
    }
    let m = match kind {
        "A" => chain(n, &path_edges(n)),
        "B" | "C" if n >= 2 => {
            let mut e = path_edges(n);
            e[n - 2].2 = 4;
            chain(n, &e)
        }
        "D" if n >= 4 => {
            let mut e = path_edges(n - 1);
            e.push((n - 3, n - 1, 3));
            chain(n, &e)
        }
        "E" if (6..=8).contains(&n) => {
            let mut e = vec![(0, 2, 3), (1, 3, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1, 3)));
            chain(n, &e)
        }
        "F" if n == 4 => chain(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
        "G" if n == 2 => chain(2, &[(0, 1, 6)]),
        "H" if n == 3 || n == 4 => {
            let mut e = path_edges(n);
            e[0].2 = 5;
            chain(n, &e)
        }
        _ => return Err(unknown()),
    };
    Ok(m)
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("labels", &self.labels)
            .field("matrix", &self.matrix)
            .finish()
    }
}
