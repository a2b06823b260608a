//! Sparse bilinear maps given by structure constants, and subspace closure
//! under such a map.

use super::scalar::Scalar;
use super::subspace::Subspace;
use super::vector::{self, Vector};
use crate::error::{check_len, Error, Result};

/// A bilinear map `F^left × F^right → F^out`: `entry(i, j)` lists the nonzero
/// coordinates of the product of the `i`-th and `j`-th basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    left: usize,
    right: usize,
    out: usize,
    entries: Vec<Vec<(usize, Scalar)>>,
}

impl StructureTensor {
    pub fn new(left: usize, right: usize, out: usize) -> StructureTensor {
        StructureTensor { left, right, out, entries: vec![Vec::new(); left * right] }
    }

    /// Builds the tensor from a dense product of basis vectors.
    pub fn from_fn(left: usize, right: usize, out: usize, mut f: impl FnMut(usize, usize) -> Vector) -> StructureTensor {
        let mut t = StructureTensor::new(left, right, out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), out, "structure constant vector has wrong length");
                t.set_dense(i, j, &v);
            }
        }
        t
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn entry(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.entries[i * self.right + j]
    }

    /// Dense coordinates of the product of basis vectors `i` and `j`.
    pub fn dense(&self, i: usize, j: usize) -> Vector {
        let mut v = vector::zeros(self.out);
        for (k, c) in self.entry(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn set_dense(&mut self, i: usize, j: usize, v: &[Scalar]) {
        self.entries[i * self.right + j] = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
    }

    /// Adds `c` to coordinate `k` of the product of basis vectors `i` and `j`.
    pub fn add_coefficient(&mut self, i: usize, j: usize, k: usize, c: &Scalar) -> Result<()> {
        if i >= self.left || j >= self.right || k >= self.out {
            return Err(Error::Shape(format!(
                "index ({i}, {j}, {k}) outside {}x{}x{}",
                self.left, self.right, self.out
            )));
        }
        let slot = &mut self.entries[i * self.right + j];
        match slot.iter_mut().find(|(idx, _)| *idx == k) {
            Some((_, existing)) => *existing += c,
            None => slot.push((k, c.clone())),
        }
        slot.retain(|(_, x)| !x.is_zero());
        slot.sort_by_key(|(idx, _)| *idx);
        Ok(())
    }

    /// Evaluates the bilinear map on arbitrary coordinate vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.left, "left operand length mismatch");
        assert_eq!(y.len(), self.right, "right operand length mismatch");
        let mut out = vector::zeros(self.out);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.entry(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Nonzero `(i, j, k, c)` quadruples in index order.
    pub fn quadruples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.left {
            for j in 0..self.right {
                for (k, c) in self.entry(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }
}

/// Smallest subspace containing `seed` (and `unit`, if given) that is closed
/// under `product`.
///
/// Each round multiplies every ordered pair of current basis vectors (row
/// index order) and re-spans; iteration stops once the dimension is stable,
/// which takes at most `ambient` rounds.
pub fn closure_bilinear(seed: &[Vector], product: &StructureTensor, unit: Option<&[Scalar]>) -> Result<Subspace> {
    let n = product.out_dim();
    check_len(n, product.left_dim())?;
    check_len(n, product.right_dim())?;
    let mut generators: Vec<Vector> = seed.to_vec();
    if let Some(u) = unit {
        generators.push(u.to_vec());
    }
    let mut current = Subspace::span(&generators, n)?;
    loop {
        let basis = current.basis().to_vec();
        let mut next = basis.clone();
        for a in &basis {
            for b in &basis {
                next.push(product.apply(a, b));
            }
        }
        let grown = Subspace::span(&next, n)?;
        if grown.dim() == current.dim() {
            return Ok(current);
        }
        current = grown;
    }
}

/// True when every product of basis vectors of `s` lies in `s`.
pub fn is_closed(s: &Subspace, product: &StructureTensor) -> bool {
    s.basis().iter().all(|a| {
        s.basis()
            .iter()
            .all(|b| s.contains(&product.apply(a, b)).unwrap_or(false))
    })
}
