//! Starlike trees and their characteristic polynomials.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `S(n₁, …, n_k)`: `k ≥ 3` paths of `nᵢ ≥ 1` vertices hanging off a center.
///
/// Branch lengths are kept sorted descending, so two values are equal exactly
/// when the trees are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StarlikeTree {
    branches: Vec<u32>,
}

impl StarlikeTree {
    pub fn new(lengths: &[u32]) -> Result<Self> {
        if let Some(bad) = lengths.iter().find(|&&n| n < 1) {
            return Err(Error::NotStarlike(format!("branch length {bad} is not positive")));
        }
        if lengths.len() < 3 {
            return Err(Error::NotStarlike(format!(
                "{} branches; the center needs degree at least 3",
                lengths.len()
            )));
        }
        let mut branches = lengths.to_vec();
        branches.sort_unstable_by(|a, b| b.cmp(a));
        Ok(StarlikeTree { branches })
    }

    /// `S(n, k·1)`: one arm of length `n` and `k` pendant vertices.
    pub fn long_arm(n: u32, k: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain(format!("n = {n}; the long arm needs n ≥ 1")));
        }
        if k < 3 {
            return Err(Error::Domain(format!("k = {k}; S(n, k·1) needs k ≥ 3")));
        }
        let mut lengths = vec![1; k as usize];
        lengths.push(n);
        Self::new(&lengths)
    }

    /// `S(k·m)`: `k` branches of equal length `m`.
    pub fn uniform(k: u32, m: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::Domain(format!("k = {k}; S(k·m) needs k ≥ 3")));
        }
        if m < 1 {
            return Err(Error::Domain(format!("m = {m}; branches need m ≥ 1")));
        }
        Self::new(&vec![m; k as usize])
    }

    pub fn branches(&self) -> &[u32] {
        &self.branches
    }

    /// Number of branches, the degree of the center.
    pub fn k(&self) -> usize {
        self.branches.len()
    }

    pub fn order(&self) -> usize {
        1 + self.branches.iter().map(|&n| n as usize).sum::<usize>()
    }

    /// `(n, k)` when the tree is `S(n, k·1)` with `k ≥ 3`.
    ///
    /// A star with `k + 1` leaves is read as `S(1, k·1)`.
    pub fn as_long_arm(&self) -> Option<(u32, u32)> {
        let (&n, rest) = self.branches.split_first()?;
        if rest.len() >= 3 && rest.iter().all(|&b| b == 1) {
            Some((n, rest.len() as u32))
        } else {
            None
        }
    }

    /// Every starlike tree of order at most `max_order`, in canonical order.
    pub fn enumerate(max_order: usize) -> Vec<StarlikeTree> {
        fn partitions(rest: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rest == 0 {
                out.push(current.clone());
                return;
            }
            for part in (1..=max_part.min(rest)).rev() {
                current.push(part);
                partitions(rest - part, part, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        for order in 4..=max_order {
            let total = (order - 1) as u32;
            let mut parts = Vec::new();
            partitions(total, total, &mut Vec::new(), &mut parts);
            out.extend(
                parts
                    .into_iter()
                    .filter(|p| p.len() >= 3)
                    .map(|branches| StarlikeTree { branches }),
            );
        }
        out
    }
}

impl fmt::Display for StarlikeTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.branches.iter().map(u32::to_string).collect();
        write!(f, "S({})", parts.join(","))
    }
}

impl TryFrom<Vec<u32>> for StarlikeTree {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(&v)
    }
}

impl From<StarlikeTree> for Vec<u32> {
    fn from(t: StarlikeTree) -> Self {
        t.branches
    }
}

/// Tree literals: `3,1,1,1`, or `n=3,k=4` for `S(n, k·1)`, or `k=4,m=3` for `S(k·m)`.
impl FromStr for StarlikeTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split(',').map(str::trim).collect();
        if tokens.iter().any(|t| t.contains('=')) {
            let mut n = None;
            let mut k = None;
            let mut m = None;
            for tok in &tokens {
                let bad = || Error::Parse {
                    what: "tree literal",
                    token: tok.to_string(),
                };
                let (key, value) = tok.split_once('=').ok_or_else(bad)?;
                let value: u32 = value.trim().parse().map_err(|_| bad())?;
                let slot = match key.trim() {
                    "n" => &mut n,
                    "k" => &mut k,
                    "m" => &mut m,
                    _ => return Err(bad()),
                };
                if slot.replace(value).is_some() {
                    return Err(bad());
                }
            }
            return match (n, k, m) {
                (Some(n), Some(k), None) => Self::long_arm(n, k),
                (None, Some(k), Some(m)) => Self::uniform(k, m),
                _ => Err(Error::Parse {
                    what: "tree literal (expected n=,k= or k=,m=)",
                    token: s.to_string(),
                }),
            };
        }
        let lengths = tokens
            .iter()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| Error::Parse {
                    what: "branch length",
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&lengths)
    }
}

/// `φ(P_n)` from `φ(P_n) = λ·φ(P_{n−1}) − φ(P_{n−2})`, `φ(P₀) = 1`, `φ(P₋₁) = 0`.
pub fn path_charpoly(n: usize) -> IntPolynomial {
    path_charpolys(n).pop().expect("table has n + 1 entries")
}

/// `[φ(P₀), …, φ(P_max)]`
pub fn path_charpolys(max: usize) -> Vec<IntPolynomial> {
    let lambda = IntPolynomial::x();
    let mut table = Vec::with_capacity(max + 1);
    let mut prev = IntPolynomial::zero();
    let mut cur = IntPolynomial::one();
    table.push(cur.clone());
    for _ in 0..max {
        let next = &(&lambda * &cur) - &prev;
        prev = cur;
        cur = next;
        table.push(cur.clone());
    }
    table
}

/// Characteristic polynomial by deleting the center:
/// `φ(S) = λ·Π φ(P_{nᵢ}) − Σᵢ φ(P_{nᵢ−1})·Π_{j≠i} φ(P_{nⱼ})`.
pub fn starlike_charpoly(tree: &StarlikeTree) -> IntPolynomial {
    let table = path_charpolys(tree.branches[0] as usize);
    let arms: Vec<&IntPolynomial> = tree.branches.iter().map(|&n| &table[n as usize]).collect();
    let shortened: Vec<&IntPolynomial> = tree.branches.iter().map(|&n| &table[n as usize - 1]).collect();

    let k = arms.len();
    // prefix[i] = Π_{j<i} arms[j], suffix[i] = Π_{j≥i} arms[j]
    let mut prefix = vec![IntPolynomial::one()];
    for a in &arms {
        let next = prefix.last().unwrap() * *a;
        prefix.push(next);
    }
    let mut suffix = vec![IntPolynomial::one(); k + 1];
    for i in (0..k).rev() {
        suffix[i] = &suffix[i + 1] * arms[i];
    }

    let mut result = &IntPolynomial::x() * &prefix[k];
    for i in 0..k {
        let others = &prefix[i] * &suffix[i + 1];
        result = &result - &(shortened[i] * &others);
    }
    result
}

/// `λ²φ(P_n) − kφ(P_n) − λφ(P_{n−1})`, the cofactor of `λ^{k−1}` in `φ(S(n, k·1))`.
pub fn reduced_longarm_charpoly(n: u32, k: u32) -> Result<IntPolynomial> {
    if n < 1 || k < 3 {
        return Err(Error::Domain(format!("reduced polynomial needs n ≥ 1 and k ≥ 3, got n = {n}, k = {k}")));
    }
    let table = path_charpolys(n as usize);
    let pn = &table[n as usize];
    let pn1 = &table[n as usize - 1];
    let lambda = IntPolynomial::x();
    let lambda_sq = IntPolynomial::monomial(1.into(), 2);
    let k_poly = IntPolynomial::constant(k.into());
    Ok(&(&(&lambda_sq - &k_poly) * pn) - &(&lambda * pn1))
}

/// Adjacency matrix with the center at index 0 and each branch laid out
/// consecutively, starting from the vertex adjacent to the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledAdjacency {
    order: usize,
    entries: Vec<bool>,
}

impl LabeledAdjacency {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.order + j]
    }

    fn set_edge(&mut self, i: usize, j: usize) {
        self.entries[i * self.order + j] = true;
        self.entries[j * self.order + i] = true;
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().filter(|&&e| e).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|i| self.degree(i)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e).count() / 2
    }

    pub fn trace(&self) -> usize {
        (0..self.order).filter(|&i| self.get(i, i)).count()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

pub fn adjacency(tree: &StarlikeTree) -> LabeledAdjacency {
    let order = tree.order();
    let mut adj = LabeledAdjacency {
        order,
        entries: vec![false; order * order],
    };
    let mut next = 1;
    for &len in tree.branches() {
        adj.set_edge(0, next);
        for v in next..next + len as usize - 1 {
            adj.set_edge(v, v + 1);
        }
        next += len as usize;
    }
    adj
}
