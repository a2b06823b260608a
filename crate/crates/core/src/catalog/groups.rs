//! Finite groups as explicit Cayley tables.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite group on `0..order`; `cayley[a][b]` is the index of `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    labels: Vec<String>,
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(name: impl Into<String>, labels: Vec<String>, cayley: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = cayley.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidGroup(format!("{} labels for order {n}", labels.len())));
        }
        for (a, row) in cayley.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {a} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("entry {bad} in row {a} out of range")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| cayley[e][a] == a && cayley[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| cayley[a][b] == identity && cayley[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        Ok(GroupTable { name: name.into(), labels, cayley, identity, inverse })
    }

    /// `Z_n` with `g^i g^j = g^{i+j mod n}`.
    pub fn cyclic(n: usize) -> Result<GroupTable> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let cayley = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        GroupTable::new(format!("Z{n}"), labels, cayley)
    }

    /// `S_3` as permutations of `{0,1,2}` in lexicographic one-line order,
    /// with `(στ)(x) = σ(τ(x))`. Index 0 is the identity; `A_3 = {0, 3, 4}`.
    pub fn symmetric3() -> GroupTable {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("S3 is closed");
        let cayley = perms
            .iter()
            .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        let labels = perms.iter().map(|p| format!("s{}{}{}", p[0], p[1], p[2])).collect();
        GroupTable::new("S3", labels, cayley).expect("S3 table is a group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        s.contains(&self.identity)
            && s.iter().all(|&a| a < self.order())
            && s.iter().all(|&a| s.iter().all(|&b| s.contains(&self.mul(a, self.inverse(b)))))
    }

    pub fn is_normal(&self, n: &[usize]) -> bool {
        self.is_subgroup(n)
            && (0..self.order()).all(|g| n.iter().all(|&x| n.contains(&self.mul(self.mul(g, x), self.inverse(g)))))
    }

    /// Right cosets `Ng`, each sorted, listed by smallest representative.
    pub fn cosets(&self, n: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = n.iter().map(|&x| self.mul(x, g)).collect();
            coset.sort_unstable();
            coset.dedup();
            for &c in &coset {
                seen[c] = true;
            }
            out.push(coset);
        }
        out
    }

    /// Parses a subset given as comma-separated indices, or the alias `A3` in `S3`.
    pub fn parse_subset(&self, text: &str) -> Result<Vec<usize>> {
        if text == "A3" && self.name == "S3" {
            return Ok(vec![0, 3, 4]);
        }
        let mut out = Vec::new();
        for part in text.split(',').filter(|p| !p.is_empty()) {
            let i: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad group element index {part:?}")))?;
            if i >= self.order() {
                return Err(Error::Parse(format!("element {i} outside group of order {}", self.order())));
            }
            if !out.contains(&i) {
                out.push(i);
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FromStr for GroupTable {
    type Err = Error;

    /// `Z<n>` or `S3`.
    fn from_str(s: &str) -> Result<GroupTable> {
        if s == "S3" {
            return Ok(GroupTable::symmetric3());
        }
        if let Some(n) = s.strip_prefix('Z') {
            let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad group id {s:?}")))?;
            return GroupTable::cyclic(n);
        }
        Err(Error::Parse(format!("unknown group {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_with_normal_a3() {
        let g = GroupTable::symmetric3();
        assert_eq!(g.identity(), 0);
        assert!((0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a))));
        let a3 = g.parse_subset("A3").unwrap();
        assert!(g.is_normal(&a3));
        assert!(!g.is_normal(&[0, 1]));
        assert_eq!(g.cosets(&a3).len(), 2);
    }

    #[test]
    fn rejects_non_groups() {
        let bad = GroupTable::new("bad", vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 1]]);
        assert!(matches!(bad, Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn cyclic_inverses() {
        let z4: GroupTable = "Z4".parse().unwrap();
        assert_eq!(z4.inverse(1), 3);
        assert!(z4.is_subgroup(&[0, 2]));
        assert!(!z4.is_subgroup(&[0, 1]));
    }
}
