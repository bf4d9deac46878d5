//! Local antimagic total labelings of firecrackers, and the transfer of a
//! total labeling of `G` to an edge labeling of `G ∨ K_1`.

use crate::errata::{Fix, Fixes, Trace};
use crate::error::{invalid, Error, Result};
use crate::graphs::{join_with_single_vertex, make_firecracker, VertexRef};
use crate::labeling::{half, Builder, EdgeLabeling, TotalLabeling};

/// Total labeling of `F_{n,1}` with the two classes `{5n − 1, 5n}`.
pub fn total_label_fn1(n: u32) -> Result<TotalLabeling> {
    let (t, _) = total_label_fn1_traced(n, Fixes::all())?;
    certify(t, &format!("F_{{{n},1}}"), |c| c == 2)
}

/// Total labeling of `F_{2,k}` with three classes.
pub fn total_label_f2k(k: u32) -> Result<TotalLabeling> {
    if k < 3 {
        return Err(invalid(format!("F_{{2,k}} construction needs k >= 3, got {k}")));
    }
    let mut b = Builder::new(make_firecracker(2, k)?);
    let mut f = Total { b: &mut b };
    let k = k as i64;
    f.sp(1, 1);
    for i in 1..=2 {
        f.uv(i, 1, 2 * k - 1 + i);
        for j in 2..=k {
            if j % 2 == 0 {
                f.uv(i, j, 2 * j - 3 + i);
                f.v(i, j, 4 * k + 8 - 2 * j - i);
            } else {
                f.uv(i, j, 2 * j - i);
                f.v(i, j, 4 * k + 5 - 2 * j + i);
            }
        }
        if k % 2 == 1 {
            f.u(i, 2 * k + 4 - i);
            f.v(i, 1, 2 * k + 3 + i);
        } else {
            f.u(i, 2 * k + 7 - 2 * i);
            f.v(i, 1, 2 * k + 6 - 2 * i);
        }
    }
    certify(b.total_labeling(), &format!("F_{{2,{k}}}"), |c| c == 3)
}

/// Total labeling of `F_{n,k}` (`n >= 3`, `k >= 2`) with at most three classes.
pub fn total_label_firecracker(n: u32, k: u32) -> Result<TotalLabeling> {
    let (t, _) = total_label_firecracker_traced(n, k, Fixes::all())?;
    certify(t, &format!("F_{{{n},{k}}}"), |c| c <= 3)
}

/// The labelings printed for `F_{3,1}` and `F_{4,1}`. They use two colors,
/// but with classes `{12, 16}` and `{18, 20}`.
pub fn printed_fn1(n: u32) -> Result<TotalLabeling> {
    let mut b = Builder::new(make_firecracker(n, 1)?);
    let mut f = Total { b: &mut b };
    match n {
        3 => {
            f.rows(&[4, 6, 5], &[1, 2], &[8, 10, 7], &[11, 3, 9]);
        }
        4 => {
            f.rows(&[4, 8, 5, 9], &[1, 3, 2], &[14, 12, 13, 11], &[15, 6, 10, 7]);
        }
        _ => return Err(invalid(format!("no printed F_{{n,1}} table for n = {n}"))),
    }
    Ok(b.total_labeling())
}

/// Edge labeling of `G ∨ K_1`: old edges keep their labels, the edge from the
/// apex to `x` takes the vertex label of `x`.
pub fn join_transfer(t: &TotalLabeling) -> EdgeLabeling {
    let graph = join_with_single_vertex(&t.graph);
    let mut labels = t.edge_labels.clone();
    labels.extend_from_slice(&t.vertex_labels);
    EdgeLabeling { graph, labels }
}

fn certify(t: TotalLabeling, name: &str, ok: impl Fn(usize) -> bool) -> Result<TotalLabeling> {
    let r = t.check();
    if r.certified() && ok(r.color_count) {
        Ok(t)
    } else {
        Err(Error::VerificationFailure(format!("{name}: {}", r.summary(&t.graph))))
    }
}

struct Total<'a> {
    b: &'a mut Builder,
}

impl Total<'_> {
    fn uv(&mut self, i: i64, j: i64, l: i64) {
        self.b.set_edge(VertexRef::SpineCenter(i as u32), VertexRef::Leaf(i as u32, j as u32), l);
    }

    fn sp(&mut self, i: i64, l: i64) {
        self.b.set_edge(VertexRef::Leaf(i as u32, 1), VertexRef::Leaf(i as u32 + 1, 1), l);
    }

    fn u(&mut self, i: i64, l: i64) {
        self.b.set_vertex(VertexRef::SpineCenter(i as u32), l);
    }

    fn v(&mut self, i: i64, j: i64, l: i64) {
        self.b.set_vertex(VertexRef::Leaf(i as u32, j as u32), l);
    }

    /// `F_{n,1}` from per-index rows: edges `u_iv_{i,1}`, spine, `u_i`, `v_{i,1}`.
    fn rows(&mut self, edge: &[i64], spine: &[i64], u: &[i64], v: &[i64]) {
        for i in 0..edge.len() {
            let idx = i as i64 + 1;
            self.uv(idx, 1, edge[i]);
            self.u(idx, u[i]);
            self.v(idx, 1, v[i]);
        }
        for (i, &s) in spine.iter().enumerate() {
            self.sp(i as i64 + 1, s);
        }
    }
}

pub fn total_label_fn1_traced(n: u32, fixes: Fixes) -> Result<(TotalLabeling, Vec<Fix>)> {
    if n < 3 {
        return Err(invalid(format!("F_{{n,1}} construction needs n >= 3, got {n}")));
    }
    let mut t = Trace::new(fixes);
    let labeling = match n {
        3 | 4 if t.fix(Fix::LatFn1Uniform) => fn1_targeted(n),
        3 | 4 => printed_fn1(n)?,
        6 if t.fix(Fix::LatFn1N6Search) => fn1_targeted(n),
        _ => {
            let mut b = Builder::new(make_firecracker(n, 1)?);
            let mut f = Total { b: &mut b };
            if n % 2 == 1 {
                fn1_odd(&mut f, n as i64, &mut t);
            } else {
                fn1_even(&mut f, n as i64, &mut t);
            }
            b.total_labeling()
        }
    };
    Ok((labeling, t.finish()))
}

fn fn1_odd(f: &mut Total, n: i64, t: &mut Trace) {
    for i in 1..n {
        let s = if i == n - 1 {
            half(3 * n + 1)
        } else if i % 2 == 1 {
            half(n + i)
        } else if t.fix(Fix::LatFn1OddSpine) {
            i / 2
        } else {
            half(i + 1)
        };
        f.sp(i, s);
    }
    let header = t.fix(Fix::LatFn1SecondHeader);
    for i in 1..=n {
        let (e, v, u) = if i == 1 {
            let u = if t.fix(Fix::LatFn1OddU1) { 4 * n - 2 } else { n + 1 };
            (n + 1, half(7 * n - 3), u)
        } else if i == n {
            (n, half(6 * n - 1 - i), 4 * n - 1)
        } else if i % 2 == 1 {
            (half(3 * n + 2 - i), half(6 * n - 1 - i), half(7 * n - 4 + i))
        } else if i <= n - 5 {
            (half(4 * n - i), half(5 * n - 1 - i), half(6 * n + i))
        } else {
            let e = if t.fix(Fix::LatFn1OddTail) { half(5 * n - 1 - i) } else { half(5 * n - 2 - i) };
            let v = if i == n - 3 { half(3 * n + 3) } else { half(n - 1) };
            (e, v, half(5 * n + 1 + i))
        };
        second_block(f, i, n, e, header);
        f.v(i, 1, v);
        f.u(i, u);
    }
}

/// The second edge block is headed like the spine block; it labels `u_iv_{i,1}`.
fn second_block(f: &mut Total, i: i64, n: i64, e: i64, header: bool) {
    if header {
        f.uv(i, 1, e);
    } else if i < n {
        f.sp(i, e);
    }
}

fn fn1_even(f: &mut Total, n: i64, t: &mut Trace) {
    for i in 1..n {
        let s = if i == n - 1 {
            half(3 * n)
        } else if i % 2 == 1 {
            half(i + 1)
        } else {
            half(n + i)
        };
        f.sp(i, s);
    }
    let header = t.fix(Fix::LatFn1SecondHeader);
    let ranges = t.fix(Fix::LatFn1EvenRanges);
    for i in 1..=n {
        let special = i == n - 5;
        let e = if i == 2 {
            n
        } else if special {
            2 * n + 2
        } else if i == n - 1 {
            2 * n
        } else if i % 2 == 1 && (i < n - 3 || (ranges && i == n - 3)) {
            half(4 * n - 1 - i)
        } else if i % 2 == 0 && i > 2 && (i < n || (ranges && i == n)) {
            half(3 * n + 2 - i)
        } else {
            0
        };
        let v = if special {
            half(3 * n + 4)
        } else if i == 1 {
            3 * n - 1
        } else if i == 2 {
            half(7 * n - 4)
        } else if i == n - 1 {
            n / 2
        } else if i % 2 == 1 {
            half(5 * n - 1 - i)
        } else {
            half(6 * n - 2 - i)
        };
        let u = if i == 2 {
            4 * n - 1
        } else if special {
            3 * n - 2
        } else if i == n - 1 {
            3 * n
        } else if i % 2 == 1 && (i > 1 || t.fix(Fix::LatFn1EvenU1)) {
            half(6 * n + 1 + i)
        } else if i % 2 == 0 {
            half(7 * n - 4 + i)
        } else {
            0
        };
        second_block(f, i, n, e, header);
        f.v(i, 1, v);
        f.u(i, u);
    }
}

/// First witness of a weight-targeted search for `F_{n,1}` with classes
/// `{5n − 1, 5n}`. With the class of every vertex fixed by the bipartition,
/// choosing `g(u_iv_{i,1})` and the spine label forces `g(u_i)` and `g(v_{i,1})`.
/// Both orientations of the classes are tried, the one used by the general
/// formulas for this parity first.
fn fn1_targeted(n: u32) -> TotalLabeling {
    let g = make_firecracker(n, 1).expect("n >= 3");
    let n = n as i64;
    let first = if n % 2 == 0 { 5 * n } else { 5 * n - 1 };
    for u_odd in [first, 10 * n - 1 - first] {
        let mut s = Search { n, top: 4 * n - 1, u_odd, used: vec![false; 4 * n as usize], rows: Vec::new() };
        if s.go(1, 0) {
            let mut b = Builder::new(g);
            let mut f = Total { b: &mut b };
            for (i, &(e, u, v, sp)) in s.rows.iter().enumerate() {
                let i = i as i64 + 1;
                f.uv(i, 1, e);
                f.u(i, u);
                f.v(i, 1, v);
                if i < n {
                    f.sp(i, sp);
                }
            }
            return b.total_labeling();
        }
    }
    unreachable!("weight-targeted search exhausted for F_{{{n},1}}")
}

struct Search {
    n: i64,
    top: i64,
    u_odd: i64,
    used: Vec<bool>,
    rows: Vec<(i64, i64, i64, i64)>,
}

impl Search {
    fn target_u(&self, i: i64) -> i64 {
        if i % 2 == 1 {
            self.u_odd
        } else {
            10 * self.n - 1 - self.u_odd
        }
    }

    fn free(&self, x: i64) -> bool {
        (1..=self.top).contains(&x) && !self.used[x as usize]
    }

    fn go(&mut self, i: i64, prev_spine: i64) -> bool {
        if i > self.n {
            return true;
        }
        let tu = self.target_u(i);
        let tv = 10 * self.n - 1 - tu;
        for e in 1..=self.top {
            if !self.free(e) {
                continue;
            }
            let u = tu - e;
            if u == e || !self.free(u) {
                continue;
            }
            self.used[e as usize] = true;
            self.used[u as usize] = true;
            let spines: Vec<i64> = if i == self.n { vec![0] } else { (1..=self.top).collect() };
            for s in spines {
                if s != 0 && !self.free(s) {
                    continue;
                }
                let v = tv - e - prev_spine - s;
                if v == s || !self.free(v) {
                    continue;
                }
                self.used[v as usize] = true;
                if s != 0 {
                    self.used[s as usize] = true;
                }
                self.rows.push((e, u, v, s));
                if self.go(i + 1, s) {
                    return true;
                }
                self.rows.pop();
                self.used[v as usize] = false;
                if s != 0 {
                    self.used[s as usize] = false;
                }
            }
            self.used[e as usize] = false;
            self.used[u as usize] = false;
        }
        false
    }
}

pub fn total_label_firecracker_traced(n: u32, k: u32, fixes: Fixes) -> Result<(TotalLabeling, Vec<Fix>)> {
    if n < 3 || k < 2 {
        return Err(invalid(format!("F_{{n,k}} total construction needs n >= 3, k >= 2, got ({n},{k})")));
    }
    let mut t = Trace::new(fixes);
    let mut b = Builder::new(make_firecracker(n, k)?);
    let mut f = Total { b: &mut b };
    let (n, k) = (n as i64, k as i64);
    let nk = n * k;
    // Reservoir labels for the leaves beyond the F_{n,2} (k even) or F_{n,1} (k odd) core.
    let from = if k % 2 == 0 { 3 } else { 2 };
    for i in 1..=n {
        for j in from..=k {
            let low = (j % 2 == 1) == (k % 2 == 0);
            if low {
                f.uv(i, j, n * j - n - 1 + i);
                f.v(i, j, 2 * nk + 4 * n - n * j - i);
            } else {
                f.uv(i, j, n * j - i);
                f.v(i, j, 2 * nk + 3 * n - 1 - n * j + i);
            }
        }
    }
    match (k % 2 == 0, n % 2 == 1) {
        (true, true) if n == 3 => fnk_even_k_n3(&mut f, k, &mut t),
        (true, true) => fnk_even_k_odd_n(&mut f, n, nk),
        (true, false) => fnk_even_k_even_n(&mut f, n, nk, &mut t),
        (false, true) if n == 3 => {
            f.sp(1, 1);
            f.sp(2, 2);
            for (i, (e, v, u)) in [(3 * k + 7, 3 * k, 3 * k + 4), (3 * k + 8, 3 * k + 2, 3 * k + 3), (3 * k + 5, 3 * k + 1, 3 * k + 6)]
                .into_iter()
                .enumerate()
            {
                let i = i as i64 + 1;
                f.uv(i, 1, e);
                f.v(i, 1, v);
                f.u(i, u);
            }
        }
        (false, n_odd) => fnk_odd_k(&mut f, n, nk, n_odd),
    }
    Ok((b.total_labeling(), t.finish()))
}

fn fnk_even_k_n3(f: &mut Total, k: i64, t: &mut Trace) {
    f.sp(1, 1);
    f.sp(2, 2);
    for (i, (e1, e2, u, v1, v2)) in [
        (3 * k + 5, 3, 3 * k + 7, 3 * k + 2, 6 * k + 5),
        (3 * k + 3, 4, 3 * k + 8, 3 * k + 1, 6 * k + 4),
        (3 * k + 6, 5, 3 * k + 4, 3 * k, 6 * k + 3),
    ]
    .into_iter()
    .enumerate()
    {
        let i = i as i64 + 1;
        f.uv(i, 1, e1);
        f.uv(i, 2, e2);
        f.u(i, u);
        // The vertex rows for i = 3 repeat the edge keys u_3v_{3,1}, u_3v_{3,2}.
        if i == 3 && !t.fix(Fix::LatFnkN3Keys) {
            f.uv(3, 1, v1);
            f.uv(3, 2, v2);
        } else {
            f.v(i, 1, v1);
            f.v(i, 2, v2);
        }
    }
}

fn fnk_even_k_odd_n(f: &mut Total, n: i64, nk: i64) {
    for i in 1..n {
        f.sp(i, if i % 2 == 1 { i } else { n + 1 - i });
    }
    for i in 1..=n {
        let (e1, e2, u, v1, v2) = if i == 1 {
            (nk + 2 * n - 1, n, half(2 * nk + 5 * n - 1), nk + n - 1, 2 * nk + 2 * n - 1)
        } else if i == n {
            (half(2 * nk + 5 * n - 3), n + 2, nk + 2 * n - 2, half(2 * nk - 3 + i), 2 * nk + 2 * n - 3)
        } else if i % 2 == 1 {
            (
                half(2 * nk + 4 * n - 3 - i),
                n + 1 + i,
                half(2 * nk + 5 * n - 2 - i),
                half(2 * nk - 3 + i),
                2 * nk + 2 * n - 2 - i,
            )
        } else {
            (
                half(2 * nk + 3 * n - 1 - i),
                n - 1 + i,
                half(2 * nk + 6 * n - i),
                half(2 * nk + n - 3 + i),
                2 * nk + 2 * n - i,
            )
        };
        f.uv(i, 1, e1);
        f.uv(i, 2, e2);
        f.u(i, u);
        f.v(i, 1, v1);
        f.v(i, 2, v2);
    }
}

fn fnk_even_k_even_n(f: &mut Total, n: i64, nk: i64, t: &mut Trace) {
    for i in 1..n {
        f.sp(i, if i % 2 == 1 { half(i + 1) } else { half(n + i) });
    }
    for i in 1..=n {
        let (e1, e2, u, v2) = if i <= n - 2 && i % 2 == 1 {
            (nk + n - half(i + 1), half(3 * n - 3 - i), nk + 2 * n + 1 + i, 2 * nk + half(3 * n + 1 + i))
        } else if i <= n - 2 {
            (nk - 1 + half(n - i), half(4 * n - 2 - i), nk + 2 * n + 1 + i, 2 * nk + n + i / 2)
        } else if i == n - 1 {
            (nk + n, half(3 * n - 2), nk + n + 1 + i, 2 * nk + half(3 * n))
        } else {
            (nk - 1 + n / 2, 2 * n - 1, nk + n + 1 + i, 2 * nk + n)
        };
        let v1 = if i == 1 {
            nk + 2 * n - 1
        } else if i == n - 1 {
            nk + n / 2
        } else if i == n {
            nk + 2 * n - 2
        } else if i % 2 == 1 {
            let top = if t.fix(Fix::LatFnkEvenV1) { 3 * n + 1 - i } else { 3 * n - i };
            nk - 1 + half(top)
        } else {
            nk + 2 * n - 2 - i / 2
        };
        f.uv(i, 1, e1);
        f.uv(i, 2, e2);
        f.u(i, u);
        f.v(i, 1, v1);
        f.v(i, 2, v2);
    }
}

fn fnk_odd_k(f: &mut Total, n: i64, nk: i64, n_odd: bool) {
    for i in 1..n {
        f.sp(i, if i % 2 == 1 { half(2 * n - 1 - i) } else { i / 2 });
    }
    for i in 1..=n {
        let (e, v1, u) = if n_odd {
            if i == n {
                (half(2 * nk + 5 * n - 1), nk, half(2 * nk + 3 * n - 1))
            } else if i % 2 == 1 {
                (half(2 * nk + 4 * n - 1 - i), half(2 * nk + 1 + i), half(2 * nk + 4 * n - 1 + i))
            } else {
                (half(2 * nk + 6 * n - i), half(2 * nk + n - 1 + i), half(2 * nk + 2 * n - 2 + i))
            }
        } else {
            let e = if i % 2 == 1 { half(2 * nk + 3 * n - 1 - i) } else { half(2 * nk + 4 * n - i) };
            let u = if i % 2 == 1 { half(2 * nk + 5 * n - 1 + i) } else { half(2 * nk + 4 * n - 2 + i) };
            let v1 = if i == n {
                nk + n - 1
            } else if i % 2 == 1 {
                half(2 * nk + n - 3 + i)
            } else {
                half(2 * nk - 2 + i)
            };
            (e, v1, u)
        };
        f.uv(i, 1, e);
        f.v(i, 1, v1);
        f.u(i, u);
    }
}
