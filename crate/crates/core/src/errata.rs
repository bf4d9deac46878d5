//! Corrections applied on top of the printed constructions.
//!
//! Each construction consults a [`Trace`] before using a corrected formula.
//! Switching one [`Fix`] off reproduces the printed reading, which is how the
//! ledger witnesses are produced.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fix {
    /// Odd-k, odd-n edge table: columns keyed by `p = f(u_iv_{i,1}) − n + 1`.
    LaTab1Keyed,
    /// `F_{2,k}`, odd k: a repeated edge key in the small table.
    LaN2DuplicateKey,
    /// `F_{3,4}`: a repeated edge key in the small table.
    LaN3K4DuplicateKey,
    /// Even k, even n: `jn + n + 1 − i` should be `jn + n + 1 − 2i`.
    LaEvenNTwoI,
    /// Even k, n = 2: no construction is given; a derived one is used.
    LaN2EvenK,
    /// `F_{n,1}` total: the second edge block labels `u_iv_{i,1}`, not the spine.
    LatFn1SecondHeader,
    /// `F_{n,1}` total, odd n: even spine edges take `i/2`.
    LatFn1OddSpine,
    /// `F_{n,1}` total, odd n: the last two even pendant edges take `(5n − 1 − i)/2`.
    LatFn1OddTail,
    /// `F_{n,1}` total, odd n: `g(u_1) = 4n − 2`.
    LatFn1OddU1,
    /// `F_{n,1}` total, even n: closed index ranges for the pendant edges.
    LatFn1EvenRanges,
    /// `F_{n,1}` total, even n: the odd-i vertex formula covers `i = 1`.
    LatFn1EvenU1,
    /// `F_{6,1}` total: the even-n formulas collide at `i = 1 = n − 5`.
    LatFn1N6Search,
    /// `F_{3,1}`, `F_{4,1}` total: classes `{5n − 1, 5n}` as for larger n.
    LatFn1Uniform,
    /// `F_{3,k}` total, even k: vertex rows keyed by vertices, not edges.
    LatFnkN3Keys,
    /// `F_{n,k}` total, even k and n: `g(v_{i,1})` for odd i uses `3n + 1 − i`.
    LatFnkEvenV1,
    /// Double star matrices: choose which star columns become `c1`-leaves.
    MatDstarColumns,
    /// `S_1 ◇ K̄_2`: the general pattern collides; exhaustive search instead.
    MatSkEmptySmall,
    /// `S_k ◇ rK_2`, even r: reversal pattern read off the worked example.
    MatSk2EvenPriming,
}

impl Fix {
    pub const ALL: [Fix; 18] = [
        Fix::LaTab1Keyed,
        Fix::LaN2DuplicateKey,
        Fix::LaN3K4DuplicateKey,
        Fix::LaEvenNTwoI,
        Fix::LaN2EvenK,
        Fix::LatFn1SecondHeader,
        Fix::LatFn1OddSpine,
        Fix::LatFn1OddTail,
        Fix::LatFn1OddU1,
        Fix::LatFn1EvenRanges,
        Fix::LatFn1EvenU1,
        Fix::LatFn1N6Search,
        Fix::LatFn1Uniform,
        Fix::LatFnkN3Keys,
        Fix::LatFnkEvenV1,
        Fix::MatDstarColumns,
        Fix::MatSkEmptySmall,
        Fix::MatSk2EvenPriming,
    ];
}

/// Which corrections are active. Either all, or all but one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Fixes {
    off: Option<Fix>,
}

impl Fixes {
    pub fn all() -> Self {
        Fixes { off: None }
    }

    pub fn without(fix: Fix) -> Self {
        Fixes { off: Some(fix) }
    }

    pub fn on(&self, fix: Fix) -> bool {
        self.off != Some(fix)
    }
}

/// Records which active corrections a construction actually used.
#[derive(Debug, Clone)]
pub struct Trace {
    fixes: Fixes,
    used: Vec<Fix>,
}

impl Trace {
    pub fn new(fixes: Fixes) -> Self {
        Trace { fixes, used: Vec::new() }
    }

    /// Whether to apply `fix` here; usage is recorded when it is on.
    pub fn fix(&mut self, fix: Fix) -> bool {
        let on = self.fixes.on(fix);
        if on && !self.used.contains(&fix) {
            self.used.push(fix);
        }
        on
    }

    pub fn finish(mut self) -> Vec<Fix> {
        self.used.sort();
        self.used
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_records_only_active_fixes() {
        let mut t = Trace::new(Fixes::without(Fix::LaTab1Keyed));
        assert!(!t.fix(Fix::LaTab1Keyed));
        assert!(t.fix(Fix::LaEvenNTwoI));
        assert!(t.fix(Fix::LaEvenNTwoI));
        assert_eq!(t.finish(), vec![Fix::LaEvenNTwoI]);
    }
}
