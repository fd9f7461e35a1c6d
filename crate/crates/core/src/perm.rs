//! Permutations of `0..n` with their signs.

/// A permutation in one-line notation together with its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    pub image: Vec<usize>,
    pub sign: i8,
}

/// All `n!` permutations in lexicographic order; the identity comes first.
pub fn permutations(n: usize) -> Vec<SignedPerm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(SignedPerm {
            sign: sign_of(&cur),
            image: cur.clone(),
        });
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// Sign by counting inversions.
pub fn sign_of(p: &[usize]) -> i8 {
    let mut inv = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Advances to the next permutation in lexicographic order. Handles
/// repeated elements, so it also enumerates distinct rearrangements of a
/// sorted multiset.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct rearrangements of a multiset.
pub fn distinct_rearrangements<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut cur = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_signs() {
        let ps = permutations(4);
        assert_eq!(ps.len(), 24);
        assert_eq!(ps[0].image, vec![0, 1, 2, 3]);
        assert_eq!(ps[0].sign, 1);
        assert_eq!(ps.iter().filter(|p| p.sign == 1).count(), 12);
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(sign_of(&[1, 0, 2]), -1);
    }

    #[test]
    fn multiset_rearrangements() {
        assert_eq!(distinct_rearrangements(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_rearrangements(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_rearrangements::<u8>(&[]).len(), 1);
    }
}
