//! The three worked labeling matrices, transcribed block by block.
//!
//! Double-star blocks are written as head, mid (`c_1`-side) and tail
//! (`c_2`-side) concatenated, i.e. in star-column form.

use serde::{Deserialize, Serialize};

use super::assemble::{plan_to_labeling, BlockPlan, CopyBlocks, Layout};
use super::vectors::{DiagBlock, LabelVector};
use super::{Corona, LabelingMatrix};
use crate::graphs::{double_star_corona_empty, double_star_corona_k2, star_corona_k2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Appendix {
    /// `S_{4,5} ◇ K̄_4`.
    A,
    /// `S_7 ◇ 5K_2`.
    B,
    /// `S_{3,4} ◇ 6K_2`.
    C,
}

impl Appendix {
    pub const ALL: [Appendix; 3] = [Appendix::A, Appendix::B, Appendix::C];

    pub fn corona(&self) -> Corona {
        match self {
            Appendix::A => Corona::DstarEmpty { k1: 4, k2: 5, r: 4 },
            Appendix::B => Corona::SkK2 { k: 7, r: 5 },
            Appendix::C => Corona::DstarK2 { k1: 3, k2: 4, r: 6 },
        }
    }

    /// Row sums printed with the example: centers, `v_i`, then the copy classes.
    pub fn printed_row_sums(&self) -> &'static [u64] {
        match self {
            Appendix::A => &[890, 1172, 232, 101],
            Appendix::B => &[3633, 1039, 267, 373],
            Appendix::C => &[3316, 5088, 1676, 345, 506],
        }
    }
}

/// Inclusive run from `a` to `b` with step `s` (sign taken from the direction).
fn run(a: u64, b: u64, s: u64) -> Vec<u64> {
    if a <= b {
        (a..=b).step_by(s as usize).collect()
    } else {
        (b..=a).rev().step_by(s as usize).collect()
    }
}

fn cat(parts: &[&[u64]]) -> Vec<u64> {
    parts.concat()
}

fn blocks(center: Vec<Vec<u64>>, leaves: Vec<Vec<u64>>) -> Vec<CopyBlocks> {
    center
        .into_iter()
        .zip(leaves)
        .map(|(c, d)| CopyBlocks { center: LabelVector(c), leaves: DiagBlock { diagonal: d } })
        .collect()
}

pub fn appendix_plan(id: Appendix) -> BlockPlan {
    match id {
        Appendix::A => BlockPlan {
            t: 10,
            r: 4,
            a0: LabelVector(run(1, 10, 1)),
            first: blocks(
                vec![run(20, 11, 1), run(31, 40, 1), cat(&[&[42], &run(44, 60, 2)]), run(80, 71, 1)],
                vec![run(81, 90, 1), run(70, 61, 1), cat(&[&[59], &run(57, 41, 2)]), run(21, 30, 1)],
            ),
            second: Vec::new(),
            inner: Vec::new(),
        },
        Appendix::B => BlockPlan {
            t: 7,
            r: 5,
            a0: LabelVector(run(1, 7, 1)),
            first: blocks(
                vec![run(8, 14, 1), run(21, 15, 1), run(22, 28, 1), run(35, 29, 1), run(36, 42, 1)],
                vec![run(111, 99, 2), run(85, 97, 2), run(83, 71, 2), run(57, 69, 2), run(55, 43, 2)],
            ),
            second: blocks(
                vec![run(112, 100, 2), run(86, 98, 2), run(84, 72, 2), run(58, 70, 2), run(56, 44, 2)],
                vec![run(113, 119, 1), run(126, 120, 1), run(127, 133, 1), run(140, 134, 1), run(141, 147, 1)],
            ),
            inner: [run(148, 154, 1), run(161, 155, 1), run(162, 168, 1), run(175, 169, 1), run(176, 182, 1)]
                .into_iter()
                .map(|d| DiagBlock { diagonal: d })
                .collect(),
        },
        Appendix::C => BlockPlan {
            t: 8,
            r: 6,
            a0: LabelVector(run(1, 8, 1)),
            first: blocks(
                vec![
                    run(16, 9, 1),
                    run(24, 17, 1),
                    run(25, 32, 1),
                    run(40, 33, 1),
                    run(41, 48, 1),
                    cat(&[&[57], &run(59, 71, 2)]),
                ],
                vec![
                    run(121, 135, 2),
                    run(137, 151, 2),
                    run(119, 105, 2),
                    run(89, 103, 2),
                    run(87, 73, 2),
                    run(56, 49, 1),
                ],
            ),
            second: blocks(
                vec![
                    run(138, 152, 2),
                    run(122, 136, 2),
                    run(120, 106, 2),
                    run(90, 104, 2),
                    run(88, 74, 2),
                    run(58, 72, 2),
                ],
                vec![
                    run(160, 153, 1),
                    run(168, 161, 1),
                    run(169, 176, 1),
                    run(184, 177, 1),
                    run(185, 192, 1),
                    run(200, 193, 1),
                ],
            ),
            inner: [
                run(208, 201, 1),
                run(216, 209, 1),
                run(217, 224, 1),
                run(232, 225, 1),
                run(233, 240, 1),
                run(248, 241, 1),
            ]
            .into_iter()
            .map(|d| DiagBlock { diagonal: d })
            .collect(),
        },
    }
}

/// The printed matrix, laid out in the canonical vertex order.
pub fn appendix_fixture(id: Appendix) -> LabelingMatrix {
    let plan = appendix_plan(id);
    let labeling = match id {
        Appendix::A => plan_to_labeling(
            &plan,
            &Layout::default_double_star(4, 5),
            double_star_corona_empty(4, 5, 4).expect("valid parameters"),
        ),
        Appendix::B => plan_to_labeling(&plan, &Layout::Star, star_corona_k2(7, 5).expect("valid parameters")),
        Appendix::C => plan_to_labeling(
            &plan,
            &Layout::default_double_star(3, 4),
            double_star_corona_k2(3, 4, 6).expect("valid parameters"),
        ),
    };
    LabelingMatrix::from_labeling(&labeling)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs() {
        assert_eq!(run(111, 99, 2), vec![111, 109, 107, 105, 103, 101, 99]);
        assert_eq!(run(1, 3, 1), vec![1, 2, 3]);
    }

    #[test]
    fn fixture_shapes() {
        assert_eq!(appendix_fixture(Appendix::A).dimension(), 51);
        assert_eq!(appendix_plan(Appendix::B).a0.0, (1..=7).collect::<Vec<_>>());
        let c = appendix_plan(Appendix::C);
        let t = super::super::split3(&c.a0, 3, 4).unwrap();
        assert_eq!((t.head, t.mid.0.clone()), (1, vec![2, 3, 4]));
        for id in Appendix::ALL {
            assert!(appendix_fixture(id).is_permutation());
        }
    }
}
