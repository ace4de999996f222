//! Slow reference computations that share no code with the main engine;
//! they work on raw permutations instead of multiplication tables.

use std::collections::HashSet;

type Perm = Vec<usize>;

fn compose(p: &[usize], q: &[usize]) -> Perm {
    p.iter().map(|&i| q[i]).collect()
}

/// All elements generated by `gens` on `degree` points.
pub fn permutation_closure(degree: usize, gens: &[Perm]) -> HashSet<Perm> {
    let identity: Perm = (0..degree).collect();
    let mut seen = HashSet::from([identity.clone()]);
    let mut stack = vec![identity];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = compose(&x, g);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                stack.push(y);
            }
        }
    }
    seen
}

fn combinations(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if acc.len() == k {
            return f(acc);
        }
        for i in start..n {
            acc.push(i);
            if rec(i + 1, n, k, acc, f) {
                return true;
            }
            acc.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}

/// Smallest `k` such that some `k` elements generate the group, by trying
/// every `k`-subset of non-identity elements in turn.
pub fn naive_min_generators(degree: usize, gens: &[Perm]) -> usize {
    let all = permutation_closure(degree, gens);
    let identity: Perm = (0..degree).collect();
    let mut elements: Vec<Perm> = all.iter().filter(|p| **p != identity).cloned().collect();
    elements.sort();
    let order = all.len();
    if order == 1 {
        return 0;
    }
    for k in 1..=elements.len() {
        let found = combinations(elements.len(), k, &mut |idx| {
            let chosen: Vec<Perm> = idx.iter().map(|&i| elements[i].clone()).collect();
            permutation_closure(degree, &chosen).len() == order
        });
        if found {
            return k;
        }
    }
    unreachable!("the non-identity elements generate the group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(naive_min_generators(1, &[vec![0]]), 0);
        assert_eq!(naive_min_generators(3, &[vec![1, 2, 0]]), 1);
        assert_eq!(naive_min_generators(3, &[vec![1, 0, 2], vec![0, 2, 1]]), 2);
        // V4 ⊂ S4
        assert_eq!(naive_min_generators(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]), 2);
        // C2^3 on 6 points
        let gens = vec![vec![1, 0, 2, 3, 4, 5], vec![0, 1, 3, 2, 4, 5], vec![0, 1, 2, 3, 5, 4]];
        assert_eq!(naive_min_generators(6, &gens), 3);
    }
}
