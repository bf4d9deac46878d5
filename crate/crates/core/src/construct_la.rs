//! Local antimagic edge labelings of firecrackers with `nk − n + 1` colors.

use serde::{Deserialize, Serialize};

use crate::errata::{Fix, Fixes, Trace};
use crate::error::{invalid, Error, Result};
use crate::graphs::{make_firecracker, VertexRef};
use crate::labeling::{half, Builder, EdgeLabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    SpecialSmall(u32),
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaCase {
    pub k_odd: bool,
    pub n_odd: bool,
    pub regime: Regime,
}

pub fn case_of(n: u32, k: u32) -> Result<LaCase> {
    if n < 2 || k < 2 {
        return Err(invalid(format!("firecracker labeling needs n, k >= 2, got ({n},{k})")));
    }
    let k_odd = k % 2 == 1;
    let n_odd = n % 2 == 1;
    let special = match (k_odd, n_odd) {
        (true, true) => n == 3,
        (true, false) => n == 2,
        (false, true) => n == 3,
        (false, false) => n == 2 || n == 4,
    };
    let regime = if special { Regime::SpecialSmall(n) } else { Regime::General };
    Ok(LaCase { k_odd, n_odd, regime })
}

pub fn claimed_color_count_la(n: u32, k: u32) -> Result<u64> {
    case_of(n, k)?;
    Ok(n as u64 * k as u64 - n as u64 + 1)
}

/// Cited values for the degenerate firecrackers: `F_{1,k}` is a star and
/// `F_{n,1}` is a corona of a path. No construction is provided for them.
pub fn cited_chi_la(n: u32, k: u32) -> Option<u64> {
    match (n, k) {
        (1, k) if k >= 1 => Some(k as u64 + 1),
        (n, 1) if n >= 2 => Some(n as u64 + 2),
        _ => None,
    }
}

/// The certified labeling of `F_{n,k}` with exactly `nk − n + 1` colors.
pub fn label_firecracker(n: u32, k: u32) -> Result<EdgeLabeling> {
    if (n == 1 || k == 1) && cited_chi_la(n, k).is_some() {
        return Err(Error::CitedOnly(format!("chi_la(F_{{{n},{k}}})")));
    }
    let (l, _) = label_firecracker_traced(n, k, Fixes::all())?;
    let report = l.check();
    let want = claimed_color_count_la(n, k)? as usize;
    if !report.certified() || report.color_count != want {
        return Err(Error::VerificationFailure(format!(
            "F_{{{n},{k}}}: {} (want {want} colors)",
            report.summary(&l.graph)
        )));
    }
    Ok(l)
}

/// Unverified labeling together with the corrections it relied on.
pub fn label_firecracker_traced(n: u32, k: u32, fixes: Fixes) -> Result<(EdgeLabeling, Vec<Fix>)> {
    let case = case_of(n, k)?;
    let mut t = Trace::new(fixes);
    let mut b = Builder::new(make_firecracker(n, k)?);
    let mut f = Fire { b: &mut b };
    let (n, k) = (n as i64, k as i64);
    match (case.k_odd, case.n_odd) {
        (true, true) if n == 3 => odd_k_n3(&mut f, k),
        (true, true) => odd_k_odd_n(&mut f, n, k, &mut t),
        (true, false) if n == 2 => odd_k_n2(&mut f, k, &mut t),
        (true, false) => odd_k_even_n(&mut f, n, k),
        (false, true) if n == 3 && k == 2 => even_k_f32(&mut f),
        (false, true) if n == 3 => even_k_n3(&mut f, k, &mut t),
        (false, true) => even_k_odd_n(&mut f, n, k),
        (false, false) if n == 2 => even_k_n2(&mut f, k, &mut t),
        (false, false) if n == 4 => even_k_n4(&mut f, k),
        (false, false) => even_k_even_n(&mut f, n, k, &mut t),
    }
    Ok((b.edge_labeling(), t.finish()))
}

struct Fire<'a> {
    b: &'a mut Builder,
}

impl Fire<'_> {
    /// `f(u_i v_{i,j})`
    fn uv(&mut self, i: i64, j: i64, label: i64) {
        self.b.set_edge(VertexRef::SpineCenter(i as u32), VertexRef::Leaf(i as u32, j as u32), label);
    }

    /// `f(v_{i,1} v_{i+1,1})`
    fn sp(&mut self, i: i64, label: i64) {
        self.b.set_edge(VertexRef::Leaf(i as u32, 1), VertexRef::Leaf(i as u32 + 1, 1), label);
    }

    fn table(&mut self, rows: &[[i64; 3]], spine: &[i64], cols: i64) {
        for (i, row) in rows.iter().enumerate() {
            for j in 0..cols as usize {
                self.uv(i as i64 + 1, j as i64 + 1, row[j]);
            }
        }
        for (i, &s) in spine.iter().enumerate() {
            self.sp(i as i64 + 1, s);
        }
    }

    /// `jn − 1 + i` (j even) / `jn + n − i` (j odd), for `j` from `from` to `k`.
    fn tail_odd_k(&mut self, n: i64, k: i64, from: i64) {
        for i in 1..=n {
            for j in from..=k {
                let l = if j % 2 == 0 { j * n - 1 + i } else { j * n + n - i };
                self.uv(i, j, l);
            }
        }
    }
}

fn odd_k_n3(f: &mut Fire, k: i64) {
    f.table(&[[3, 7, 11], [6, 5, 10], [4, 8, 9]], &[2, 1], 3);
    for i in 1..=3 {
        for j in 4..=k {
            f.uv(i, j, if j % 2 == 0 { 3 * j - 1 + i } else { 3 * j + 3 - i });
        }
    }
}

fn odd_k_odd_n(f: &mut Fire, n: i64, k: i64, t: &mut Trace) {
    for i in 1..n {
        f.sp(i, if i % 2 == 1 { half(n - i) } else { n - i / 2 });
    }
    let keyed = t.fix(Fix::LaTab1Keyed);
    for i in 1..=n {
        let first = if i == 1 {
            2 * n - 1
        } else if i % 2 == 0 {
            n - 1 + i
        } else {
            n - 3 + i
        };
        f.uv(i, 1, first);
        // Column of the j = 2, 3 table: the position of the j = 1 label in
        // n, n+1, ..., 2n-1. Read as a vertex index the table breaks.
        let p = if keyed { first - n + 1 } else { i };
        let (second, third) = if p <= (n - 1) / 2 {
            (3 * n - 2 * p, half(7 * n - 1) + p)
        } else {
            (4 * n - 2 * p, half(5 * n - 1) + p)
        };
        f.uv(i, 2, second);
        f.uv(i, 3, third);
    }
    f.tail_odd_k(n, k, 4);
}

fn odd_k_n2(f: &mut Fire, k: i64, t: &mut Trace) {
    f.uv(1, 1, 1);
    f.uv(2, 1, 4);
    f.uv(1, 2, 5);
    f.uv(2, 2, 3);
    f.uv(1, 3, 7);
    // The listing gives f(u_2v_{2,1}) twice; the second value belongs to v_{2,3}.
    if t.fix(Fix::LaN2DuplicateKey) {
        f.uv(2, 3, 6);
    } else {
        f.uv(2, 1, 6);
    }
    f.sp(1, 2);
    f.tail_odd_k(2, k, 4);
}

fn odd_k_even_n(f: &mut Fire, n: i64, k: i64) {
    for i in 1..n {
        let s = if i == 1 {
            half(3 * n - 2)
        } else if i % 2 == 0 {
            half(2 * n - 2 - i)
        } else {
            half(n - i + 1)
        };
        f.sp(i, s);
    }
    let h = n / 2;
    for i in 1..=n {
        let (a, b, c) = if i < h {
            (half(3 * n - 4 - 2 * i), 2 * n + 1 + 2 * i, 4 * n - 1 - i)
        } else if i == h {
            (half(3 * n - 4), 2 * n + 1, 4 * n - 1)
        } else if i < n {
            (half(5 * n - 2 - 2 * i), n + 2 * i, 4 * n - 1 - i)
        } else {
            (2 * n - 1, 2 * n, half(7 * n - 2))
        };
        f.uv(i, 1, a);
        f.uv(i, 2, b);
        f.uv(i, 3, c);
    }
    f.tail_odd_k(n, k, 4);
}

fn even_k_f32(f: &mut Fire) {
    f.table(&[[4, 8, 0], [1, 6, 0], [5, 7, 0]], &[3, 2], 2);
}

fn even_k_n3(f: &mut Fire, k: i64, t: &mut Trace) {
    f.table(&[[3, 6, 11], [4, 7, 10], [8, 5, 9]], &[2, 1], 3);
    f.uv(1, 4, 14);
    f.uv(2, 4, 13);
    // Printed as a second f(u_3v_{3,2}); the F_{3,4} block needs v_{3,4}.
    if t.fix(Fix::LaN3K4DuplicateKey) {
        f.uv(3, 4, 12);
    } else {
        f.uv(3, 2, 12);
    }
    for i in 1..=3 {
        for j in 5..=k {
            f.uv(i, j, if j % 2 == 1 { 3 * j - 2 + 2 * i } else { 3 * j + 4 - 2 * i });
        }
    }
}

/// Shared by both `n` parities when `k` is even and `n >= 5`.
fn even_k_first_two(f: &mut Fire, n: i64, first_pair: (i64, i64)) {
    for i in 1..=n {
        let (a, b) = if i == 1 {
            first_pair
        } else if i % 2 == 1 {
            (n - 3 + i, 3 * n + 2 - i)
        } else {
            (n - 1 + i, 3 * n - i)
        };
        f.uv(i, 1, a);
        f.uv(i, 2, b);
    }
}

fn even_k_odd_n(f: &mut Fire, n: i64, k: i64) {
    for i in 1..n {
        f.sp(i, if i % 2 == 1 { half(n - i) } else { n - i / 2 });
    }
    even_k_first_two(f, n, (2 * n - 1, 2 * n));
    for i in 1..=n {
        for j in 3..=k {
            f.uv(i, j, if j % 2 == 1 { j * n - 2 + 2 * i } else { (j + 1) * n + 1 - 2 * i });
        }
    }
}

/// No formulas are printed for `F_{2,k}` with `k` even. `F_{2,2} = P_6`
/// takes the smallest 3-color witness; for `k >= 4` the odd-`k` pattern is
/// reused with the parities of `j` exchanged.
fn even_k_n2(f: &mut Fire, k: i64, t: &mut Trace) {
    if !t.fix(Fix::LaN2EvenK) {
        return;
    }
    if k == 2 {
        f.table(&[[2, 3, 0], [4, 5, 0]], &[1], 2);
        return;
    }
    f.table(&[[1, 4, 0], [2, 3, 0]], &[5], 2);
    for i in 1..=2 {
        for j in 3..=k {
            f.uv(i, j, if j % 2 == 1 { 2 * j - 1 + i } else { 2 * j + 2 - i });
        }
    }
}

fn even_k_n4(f: &mut Fire, k: i64) {
    f.table(&[[7, 8, 0], [6, 9, 0], [4, 11, 0], [10, 5, 0]], &[2, 3, 1], 2);
    for i in 1..=4 {
        for j in 3..=k {
            f.uv(i, j, if j % 2 == 1 { 4 * j - 2 + 2 * i } else { 4 * j + 5 - 2 * i });
        }
    }
}

fn even_k_even_n(f: &mut Fire, n: i64, k: i64, t: &mut Trace) {
    for i in 1..n {
        f.sp(i, if i % 2 == 1 { n / 2 - (i - 1) / 2 } else { n - i / 2 });
    }
    even_k_first_two(f, n, (2 * n - 2, 2 * n + 1));
    let two_i = k >= 4 && t.fix(Fix::LaEvenNTwoI);
    for i in 1..=n {
        for j in 3..=k {
            let l = if j % 2 == 1 {
                j * n - 2 + 2 * i
            } else if two_i {
                j * n + n + 1 - 2 * i
            } else {
                j * n + n + 1 - i
            };
            f.uv(i, j, l);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch_examples() {
        let c = case_of(3, 5).unwrap();
        assert!(c.k_odd && c.n_odd && c.regime == Regime::SpecialSmall(3));
        let c = case_of(4, 7).unwrap();
        assert!(c.k_odd && !c.n_odd && c.regime == Regime::General);
        let c = case_of(6, 4).unwrap();
        assert!(!c.k_odd && !c.n_odd && c.regime == Regime::General);
        assert!(case_of(1, 3).is_err());
    }

    #[test]
    fn cited_cases_refuse() {
        assert!(matches!(label_firecracker(1, 4), Err(Error::CitedOnly(_))));
        assert_eq!(cited_chi_la(1, 4), Some(5));
        assert_eq!(cited_chi_la(5, 1), Some(7));
    }
}
