//! Label vectors, diagonal blocks and the formulas that generate them.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelVector(pub Vec<u64>);

impl LabelVector {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `c·e + v` elementwise.
    fn shifted(c: i64, v: &[i64]) -> Self {
        LabelVector(v.iter().map(|x| (c + x) as u64).collect())
    }

    /// `c·e − v` elementwise.
    fn reflected(c: i64, v: &[i64]) -> Self {
        LabelVector(v.iter().map(|x| (c - x) as u64).collect())
    }
}

/// Square block with labels on the diagonal only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagBlock {
    pub diagonal: Vec<u64>,
}

impl DiagBlock {
    pub fn dimension(&self) -> usize {
        self.diagonal.len()
    }

    pub fn reversed(&self) -> Self {
        DiagBlock { diagonal: self.diagonal.iter().rev().copied().collect() }
    }
}

impl From<LabelVector> for DiagBlock {
    fn from(v: LabelVector) -> Self {
        DiagBlock { diagonal: v.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorTriple {
    pub head: u64,
    pub mid: LabelVector,
    pub tail: LabelVector,
}

impl VectorTriple {
    pub fn concat(&self) -> LabelVector {
        let mut v = vec![self.head];
        v.extend_from_slice(&self.mid.0);
        v.extend_from_slice(&self.tail.0);
        LabelVector(v)
    }
}

pub fn reverse(v: &LabelVector) -> LabelVector {
    LabelVector(v.0.iter().rev().copied().collect())
}

/// Head, the next `k1` entries, and the last `k2`.
pub fn split3(v: &LabelVector, k1: usize, k2: usize) -> Result<VectorTriple> {
    if k1 == 0 || k2 == 0 {
        return Err(invalid("split3 needs k1, k2 >= 1"));
    }
    if v.len() != 1 + k1 + k2 {
        return Err(Error::LengthMismatch { expected: 1 + k1 + k2, got: v.len() });
    }
    Ok(VectorTriple {
        head: v.0[0],
        mid: LabelVector(v.0[1..=k1].to_vec()),
        tail: LabelVector(v.0[1 + k1..].to_vec()),
    })
}

fn base(k: usize) -> Vec<i64> {
    (1..=k as i64).collect()
}

/// `a_0 = (1, …, k)`.
pub fn a0(k: usize) -> LabelVector {
    LabelVector::shifted(0, &base(k))
}

/// `(a_j, A_j)` for `S_k ◇ K̄_r`.
pub fn star_empty_vectors(k: usize, r: usize, j: usize) -> Result<(LabelVector, DiagBlock)> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    if j == 0 || j > r {
        return Err(Error::IndexOutOfRange { index: j, max: r });
    }
    let (k, j, w) = (k as i64, j as i64, base(k));
    Ok(if j % 2 == 1 {
        (LabelVector::shifted(2 * j * k - k, &w), LabelVector::reflected(2 * j * k + k + 1, &w).into())
    } else {
        (LabelVector::reflected(2 * j * k + 1, &w), LabelVector::shifted(2 * j * k, &w).into())
    })
}

/// The vector family for `S_k ◇ rK_2`. Index 0 of `a`, `big_a`, `b` holds the
/// base vector; `big_b` runs over `1..=2r` with index 0 holding `Ω_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sk2Vectors {
    pub k: usize,
    pub r: usize,
    pub a: Vec<LabelVector>,
    pub big_a: Vec<DiagBlock>,
    pub b: Vec<LabelVector>,
    pub big_b: Vec<DiagBlock>,
}

pub fn sk2_vectors(k: usize, r: usize) -> Result<Sk2Vectors> {
    if k == 0 || r == 0 {
        return Err(invalid("k and r must be positive"));
    }
    let w = base(k);
    let (ki, ri) = (k as i64, r as i64);
    // A_0 = diag(2k−1, 2k−3, …, 1), and b_0 is its diagonal.
    let odd: Vec<i64> = w.iter().map(|x| 2 * ki + 1 - 2 * x).collect();
    let mut a = vec![a0(k)];
    let mut big_a = vec![DiagBlock::from(LabelVector::shifted(0, &odd))];
    let mut b = vec![LabelVector::shifted(0, &odd)];
    let mut big_b = vec![DiagBlock::from(a0(k))];
    for j in 1..=ri {
        if j % 2 == 1 {
            a.push(LabelVector::shifted(j * ki, &w));
            big_a.push(LabelVector::shifted((ri + 2 * j - 1) * ki, &odd).into());
            b.push(LabelVector::shifted(ri * ki + 2 * j * ki - ki + 1, &odd));
            big_b.push(LabelVector::shifted(3 * ri * ki + j * ki, &w).into());
        } else {
            a.push(LabelVector::reflected(j * ki + ki + 1, &w));
            big_a.push(LabelVector::reflected((ri + 2 * j + 1) * ki, &odd).into());
            b.push(LabelVector::reflected(ri * ki + 2 * j * ki + ki + 1, &odd));
            big_b.push(LabelVector::reflected(3 * ri * ki + j * ki + ki + 1, &w).into());
        }
    }
    for j in 1..=r {
        let shifted = big_b[j].diagonal.iter().map(|x| x + (r * k) as u64).collect();
        big_b.push(DiagBlock { diagonal: shifted });
    }
    Ok(Sk2Vectors { k, r, a, big_a, b, big_b })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_empty_examples() {
        let (a1, _) = star_empty_vectors(3, 6, 1).unwrap();
        assert_eq!(a1.0, vec![4, 5, 6]);
        let (a2, _) = star_empty_vectors(3, 6, 2).unwrap();
        assert_eq!(a2.0, vec![12, 11, 10]);
        assert!(star_empty_vectors(3, 6, 0).is_err());
        assert!(star_empty_vectors(3, 6, 7).is_err());
    }

    #[test]
    fn sk2_examples() {
        let v = sk2_vectors(7, 5).unwrap();
        assert_eq!(v.big_a[5].diagonal, vec![111, 109, 107, 105, 103, 101, 99]);
        assert_eq!(v.big_b[6].diagonal, (148..=154).collect::<Vec<_>>());
        assert_eq!(v.a[5].0, (36..=42).collect::<Vec<_>>());
        let one = sk2_vectors(1, 1).unwrap();
        assert!(one.a.iter().all(|x| x.len() == 1));
    }

    #[test]
    fn split_examples() {
        let t = split3(&LabelVector((1..=10).collect()), 4, 5).unwrap();
        assert_eq!(t.head, 1);
        assert_eq!(t.mid.0, vec![2, 3, 4, 5]);
        assert_eq!(t.tail.0, vec![6, 7, 8, 9, 10]);
        assert!(split3(&LabelVector(vec![1, 2]), 0, 1).is_err());
        assert!(split3(&LabelVector(vec![1, 2]), 1, 1).is_err());
    }
}
