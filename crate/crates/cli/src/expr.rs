//! Short textual forms: family expressions and inclusive integer ranges.

use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use antimagic::Family;
use serde::{Deserialize, Serialize};

/// Parses `star:3`, `double-star:3,4`, `firecracker:5,4`, `path:6`, `empty:6`,
/// `k2`, `copies-k2:5`, `join:<expr>` and `corona:<expr>;<expr>`.
pub fn parse_family(s: &str) -> Result<Family> {
    let (name, args) = s.split_once(':').unwrap_or((s, ""));
    match name {
        "join" => return Ok(Family::Join { g: Box::new(parse_family(args)?) }),
        "corona" | "edge-corona" => {
            let (g, h) = args.split_once(';').ok_or_else(|| anyhow!("corona needs `g;h` in {s:?}"))?;
            return Ok(Family::EdgeCorona { g: Box::new(parse_family(g)?), h: Box::new(parse_family(h)?) });
        }
        _ => {}
    }
    let nums: Vec<u32> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',')
            .map(|t| t.trim().parse::<u32>().with_context(|| format!("bad number {t:?} in {s:?}")))
            .collect::<Result<_>>()?
    };
    let want = |n: usize| -> Result<()> {
        if nums.len() == n {
            Ok(())
        } else {
            bail!("{name} takes {n} parameter(s), got {} in {s:?}", nums.len())
        }
    };
    Ok(match name {
        "star" => {
            want(1)?;
            Family::Star { k: nums[0] }
        }
        "double-star" => {
            want(2)?;
            Family::DoubleStar { k1: nums[0], k2: nums[1] }
        }
        "firecracker" => {
            want(2)?;
            Family::Firecracker { n: nums[0], k: nums[1] }
        }
        "path" => {
            want(1)?;
            Family::Path { n: nums[0] }
        }
        "empty" => {
            want(1)?;
            Family::Empty { r: nums[0] }
        }
        "k2" => {
            want(0)?;
            Family::CompleteTwo
        }
        "copies-k2" => {
            want(1)?;
            Family::CopiesK2 { r: nums[0] }
        }
        _ => bail!("unknown family {name:?}"),
    })
}

/// File-name friendly form of a display name: `F_{5,4}` → `F_5_4`.
pub fn slug(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c);
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

/// Inclusive range `a..b` (also `a..=b`, or a single value). Empty when `a > b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub lo: u32,
    pub hi: u32,
}

impl Span {
    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| t.trim().parse::<u32>().with_context(|| format!("bad range {s:?}"));
        match s.split_once("..") {
            Some((a, b)) => Ok(Span { lo: num(a)?, hi: num(b.trim_start_matches('='))? }),
            None => {
                let v = num(s)?;
                Ok(Span { lo: v, hi: v })
            }
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_family("star:3").unwrap(), Family::Star { k: 3 });
        assert_eq!(
            parse_family("corona:double-star:3,4;copies-k2:6").unwrap().to_string(),
            "S_{3,4} <> 6K_2"
        );
        assert_eq!(parse_family("join:firecracker:3,1").unwrap().to_string(), "F_{3,1} v K_1");
        assert!(parse_family("star").is_err());
        assert!(parse_family("wheel:5").is_err());
    }

    #[test]
    fn spans() {
        assert_eq!("2..10".parse::<Span>().unwrap().iter().count(), 9);
        assert_eq!("2..=3".parse::<Span>().unwrap(), Span { lo: 2, hi: 3 });
        assert_eq!("5..4".parse::<Span>().unwrap().iter().count(), 0);
        assert_eq!("7".parse::<Span>().unwrap().iter().collect::<Vec<_>>(), vec![7]);
    }

    #[test]
    fn slugs() {
        assert_eq!(slug("F_{5,4}"), "F_5_4");
        assert_eq!(slug("S_{3,4} <> 6K_2"), "S_3_4_6K_2");
    }
}
