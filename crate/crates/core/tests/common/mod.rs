#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use cartesian_decomp::{PermGroup, Permutation};

pub fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

pub fn group(n: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(n, gens).unwrap()
}

pub fn klein() -> PermGroup {
    group(
        4,
        vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])],
    )
}

/// Every element of the group generated by `gens`, by breadth-first closure.
pub fn closure(n: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    out
}

/// All `n!` permutations of `0..n`.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(Permutation::new(prefix.clone()).unwrap());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All set partitions of `0..n`, as label vectors.
pub fn all_set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(labels: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if labels.len() == n {
            out.push(labels.clone());
            return;
        }
        for l in 0..=max {
            labels.push(l);
            go(labels, max.max(l + 1), n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

pub fn image_of_set(x: &Permutation, set: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().map(|&a| x.apply(a)).collect();
    v.sort_unstable();
    v
}
