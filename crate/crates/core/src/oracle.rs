//! Exhaustive reference enumeration of invariant Cartesian decompositions for tiny degrees,
//! independent of the subgroup machinery.

use serde::Serialize;

use crate::cartesian::{
    enumerate_cartesian_decompositions, is_invariant, validate_decomposition,
    CartesianDecomposition, EnumerateOptions,
};
use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::partition::Partition;
use crate::perm::Permutation;

/// Largest degree accepted by [`brute_force_decompositions`].
pub const MAX_ORACLE_DEGREE: usize = 9;

/// Every partition of `0..n` into blocks of size `size`.
pub fn uniform_partitions(n: usize, size: usize) -> Vec<Partition> {
    fn go(
        free: &mut Vec<usize>,
        size: usize,
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Partition>,
    ) {
        let Some(&first) = free.first() else {
            out.push(Partition::new(current.clone()).expect("partition"));
            return;
        };
        let rest: Vec<usize> = free[1..].to_vec();
        let mut pick = Vec::new();
        choose(&rest, size - 1, 0, &mut pick, &mut |chosen| {
            let mut block = vec![first];
            block.extend_from_slice(chosen);
            let remaining: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|x| !chosen.contains(x))
                .collect();
            let saved = std::mem::replace(free, remaining);
            current.push(block);
            go(free, size, current, out);
            current.pop();
            *free = saved;
        });
    }
    fn choose(
        from: &[usize],
        k: usize,
        start: usize,
        pick: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if pick.len() == k {
            f(pick);
            return;
        }
        for i in start..from.len() {
            pick.push(from[i]);
            choose(from, k, i + 1, pick, f);
            pick.pop();
        }
    }
    if size == 0 || !n.is_multiple_of(size) {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), size, &mut Vec::new(), &mut out);
    out
}

/// All `G`-invariant decompositions of index 2 or 3 into nontrivial partitions, found by
/// checking every pair and triple of uniform partitions against the definition.
pub fn brute_force_decompositions(g: &PermGroup) -> Result<Vec<CartesianDecomposition>> {
    let n = g.degree();
    if n > MAX_ORACLE_DEGREE {
        return Err(Error::BudgetExceeded(format!(
            "brute-force enumeration is limited to degree {MAX_ORACLE_DEGREE}"
        )));
    }
    let limits = Limits::default();
    let parts: Vec<Partition> = (2..n)
        .filter(|d| n.is_multiple_of(*d))
        .flat_map(|d| uniform_partitions(n, d))
        .collect();
    let counts: Vec<usize> = parts.iter().map(Partition::num_blocks).collect();
    let mut out = Vec::new();
    // a tuple meeting in single points has exactly ∏|Γᵢ| points, so other tuples are skipped
    let mut consider = |chosen: &[usize]| -> Result<()> {
        if chosen.iter().map(|&i| counts[i]).product::<usize>() != n {
            return Ok(());
        }
        let e = CartesianDecomposition::new(chosen.iter().map(|&i| parts[i].clone()).collect())?;
        if validate_decomposition(&e, &limits)?.valid && is_invariant(g, &e)?.invariant {
            out.push(e);
        }
        Ok(())
    };
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            consider(&[i, j])?;
            if counts[i] * counts[j] < n {
                for k in j + 1..parts.len() {
                    consider(&[i, j, k])?;
                }
            }
        }
    }
    out.sort_by(|a, b| (a.index(), a).cmp(&(b.index(), b)));
    Ok(out)
}

/// A small transitive group with, where it is not innately transitive, a regular normal
/// subgroup to search with.
#[derive(Clone, Debug)]
pub struct CorpusGroup {
    pub name: &'static str,
    pub group: PermGroup,
    pub plinth: Option<PermGroup>,
}

fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).expect("valid cycles")
}

fn group(n: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(n, gens).expect("same degree")
}

/// The small groups checked against [`brute_force_decompositions`].
pub fn oracle_corpus() -> Vec<CorpusGroup> {
    let klein = group(
        4,
        vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])],
    );
    let c6 = group(6, vec![perm(6, &[&[0, 1, 2, 3, 4, 5]])]);
    // 2³ acting regularly on itself, points written in binary
    let translation = |bit: usize| {
        Permutation::new((0..8).map(|x| x ^ (1 << bit)).collect()).expect("involution")
    };
    let e8 = group(8, (0..3).map(translation).collect());
    // x ↦ ax + b over GF(8) with a a root of x³ + x + 1
    let times_x = Permutation::new(
        (0..8)
            .map(|v: usize| {
                let w = v << 1;
                if w & 8 != 0 {
                    (w ^ 0b1011) & 7
                } else {
                    w
                }
            })
            .collect(),
    )
    .expect("field multiplication");
    let agl18 = group(8, vec![translation(0), times_x]);
    // S2 wr S3 permuting the three binary digits
    let digit_swap = Permutation::new(
        (0..8usize)
            .map(|x| (x & 0b100) | ((x & 1) << 1) | ((x >> 1) & 1))
            .collect(),
    )
    .expect("digit swap");
    let digit_cycle =
        Permutation::new((0..8usize).map(|x| ((x << 1) & 0b110) | (x >> 2)).collect())
            .expect("digit cycle");
    let wr = group(8, vec![translation(0), digit_swap, digit_cycle]);
    // the 3x3 grid, point 3r + c
    let c3 = group(
        9,
        vec![
            perm(9, &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8]]),
            perm(9, &[&[0, 3, 6], &[1, 4, 7], &[2, 5, 8]]),
        ],
    );
    let s3s3 = group(
        9,
        vec![
            perm(9, &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8]]),
            perm(9, &[&[0, 1], &[3, 4], &[6, 7]]),
            perm(9, &[&[0, 3, 6], &[1, 4, 7], &[2, 5, 8]]),
            perm(9, &[&[0, 3], &[1, 4], &[2, 5]]),
        ],
    );
    let s3wrs2 = s3s3
        .extended(&[perm(9, &[&[1, 3], &[2, 6], &[5, 7]])])
        .expect("same degree");
    vec![
        CorpusGroup {
            name: "V4 regular",
            group: klein.clone(),
            plinth: Some(klein.clone()),
        },
        CorpusGroup {
            name: "D8 on 4 points",
            group: group(4, vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[1, 3]])]),
            plinth: Some(group(
                4,
                vec![perm(4, &[&[0, 2], &[1, 3]]), perm(4, &[&[0, 1], &[2, 3]])],
            )),
        },
        CorpusGroup {
            name: "S4",
            group: PermGroup::symmetric(4),
            plinth: None,
        },
        CorpusGroup {
            name: "A4",
            group: PermGroup::alternating(4),
            plinth: None,
        },
        CorpusGroup {
            name: "C6 regular",
            group: c6.clone(),
            plinth: Some(c6),
        },
        CorpusGroup {
            name: "S6",
            group: PermGroup::symmetric(6),
            plinth: None,
        },
        CorpusGroup {
            name: "2^3 regular",
            group: e8.clone(),
            plinth: Some(e8.clone()),
        },
        CorpusGroup {
            name: "AGL(1,8)",
            group: agl18,
            plinth: None,
        },
        CorpusGroup {
            name: "S2 wr S3 on 8 points",
            group: wr,
            plinth: Some(e8),
        },
        CorpusGroup {
            name: "S3 x S3 on 9 points",
            group: s3s3,
            plinth: Some(c3.clone()),
        },
        CorpusGroup {
            name: "S3 wr S2 on 9 points",
            group: s3wrs2,
            plinth: None,
        },
    ]
}

/// Enumeration compared with the brute-force answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub name: String,
    pub degree: usize,
    pub enumerated: usize,
    pub brute_force: usize,
    pub matches: bool,
}

pub fn oracle_check(case: &CorpusGroup, limits: &Limits) -> Result<OracleReport> {
    let options = EnumerateOptions {
        plinth: case.plinth.clone(),
        limits: limits.clone(),
    };
    let fast = enumerate_cartesian_decompositions(&case.group, 0, &options)?;
    let slow = brute_force_decompositions(&case.group)?;
    Ok(OracleReport {
        name: case.name.to_owned(),
        degree: case.group.degree(),
        enumerated: fast.len(),
        brute_force: slow.len(),
        matches: fast == slow,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(uniform_partitions(4, 2).len(), 3);
        assert_eq!(uniform_partitions(6, 2).len(), 15);
        assert_eq!(uniform_partitions(6, 3).len(), 10);
        assert_eq!(uniform_partitions(8, 2).len(), 105);
        assert_eq!(uniform_partitions(8, 4).len(), 35);
        assert_eq!(uniform_partitions(9, 3).len(), 280);
    }

    #[test]
    fn corpus_matches_brute_force() {
        for case in oracle_corpus() {
            assert!(case.group.is_transitive(), "{}", case.name);
            let r = oracle_check(&case, &Limits::default()).unwrap();
            assert!(r.matches, "{r:?}");
        }
    }

    #[test]
    fn trivial_group_sees_every_grid() {
        // 3 partitions into pairs, each pair of them is a grid
        let all = brute_force_decompositions(&PermGroup::trivial(4)).unwrap();
        assert_eq!(all.len(), 3);
    }
}
