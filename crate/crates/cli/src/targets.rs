//! The shipped constructions behind one interface, with their color claims.

use anyhow::{bail, Result};
use antimagic::construct_la::{cited_chi_la, claimed_color_count_la, label_firecracker_traced};
use antimagic::construct_lat::{
    join_transfer, total_label_f2k, total_label_firecracker_traced, total_label_fn1_traced,
};
use antimagic::errata::{Fix, Fixes};
use antimagic::matrixlab::Corona;
use antimagic::{AnyLabeling, Error};

/// How the achieved color count must relate to the claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Exactly(usize),
    AtMost(usize),
}

impl Claim {
    pub fn colors(self) -> usize {
        match self {
            Claim::Exactly(c) | Claim::AtMost(c) => c,
        }
    }

    pub fn met_by(self, achieved: usize) -> bool {
        match self {
            Claim::Exactly(c) => achieved == c,
            Claim::AtMost(c) => achieved <= c,
        }
    }
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Claim::Exactly(c) => write!(f, "exactly {c}"),
            Claim::AtMost(c) => write!(f, "at most {c}"),
        }
    }
}

/// Kebab-case name of a correction, as used in errata.json and `--without`.
pub fn fix_name(f: &Fix) -> String {
    serde_json::to_value(f).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

pub struct Built {
    pub name: String,
    pub labeling: AnyLabeling,
    pub claim: Claim,
    pub fixes: Vec<Fix>,
}

/// Edge labeling of `F_{n,k}` with `nk − n + 1` colors.
pub fn la(n: u32, k: u32, fixes: Fixes) -> Result<Built> {
    if (n == 1 || k == 1) && cited_chi_la(n, k).is_some() {
        return Err(Error::CitedOnly(format!("chi_la(F_{{{n},{k}}}) = {}", cited_chi_la(n, k).unwrap_or(0))).into());
    }
    let (l, used) = label_firecracker_traced(n, k, fixes)?;
    Ok(Built {
        name: format!("F_{{{n},{k}}}"),
        labeling: AnyLabeling::Edge(l),
        claim: Claim::Exactly(claimed_color_count_la(n, k)? as usize),
        fixes: used,
    })
}

/// Total labeling of `F_{n,k}`: two colors for `k = 1`, three for `n = 2`,
/// at most three otherwise.
pub fn lat(n: u32, k: u32, fixes: Fixes) -> Result<Built> {
    let name = format!("F_{{{n},{k}}}");
    let (t, used, claim) = match (n, k) {
        (_, 0) | (0, _) => bail!("{name}: n and k must be positive"),
        (_, 1) => {
            let (t, used) = total_label_fn1_traced(n, fixes)?;
            (t, used, Claim::Exactly(2))
        }
        (2, _) => (total_label_f2k(k)?, Vec::new(), Claim::Exactly(3)),
        (1, _) => bail!("{name} is a star; no total construction is provided"),
        _ => {
            let (t, used) = total_label_firecracker_traced(n, k, fixes)?;
            (t, used, Claim::AtMost(3))
        }
    };
    Ok(Built { name, labeling: AnyLabeling::Total(t), claim, fixes: used })
}

/// Edge labeling of `F_{n,1} ∨ K_1` obtained from the total labeling.
pub fn join(n: u32, fixes: Fixes) -> Result<Built> {
    let (t, used) = total_label_fn1_traced(n, fixes)?;
    Ok(Built {
        name: format!("F_{{{n},1}} v K_1"),
        labeling: AnyLabeling::Edge(join_transfer(&t)),
        claim: Claim::Exactly(3),
        fixes: used,
    })
}

pub fn matrix(c: Corona, fixes: Fixes) -> Result<Built> {
    let (l, used) = c.traced(fixes)?;
    Ok(Built {
        name: c.to_string(),
        labeling: AnyLabeling::Edge(l),
        claim: Claim::Exactly(c.claimed_colors()),
        fixes: used,
    })
}
