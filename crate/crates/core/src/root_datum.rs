//! Root-system data for types A and C and the lattice-point counts that
//! define the affine-descent measures.
//!
//! Conventions, fixed once and validated against the descent statistics in
//! [`crate::weyl`]:
//!
//! - Type A on `n` letters: ambient space `Z^n`, simple roots
//!   `e_i - e_{i+1}`, highest root `e_1 - e_n`, coroot lattice = zero-sum
//!   integer vectors.
//! - Type C of rank `n`: ambient `Z^n`, simple roots `e_i - e_{i+1}` and
//!   `2 e_n`, highest root `2 e_1`, coroot lattice = all of `Z^n`.
//!
//! The affine node is index 0. For descent classification the affine root
//! is the negative of the highest root; the lattice-point condition at the
//! affine wall pairs against the highest root itself (so that the wall
//! `<theta, t> = k` bounds the dilated alcove from above).

use std::fmt;

use crate::weyl::{GroupType, WeylElement};
use crate::{Error, Result};

/// Subset of the extended simple roots as a bitmask: bit 0 is the affine
/// node, bit `i >= 1` the i-th simple root.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSubset(pub u32);

impl RootSubset {
    pub fn empty() -> Self {
        RootSubset(0)
    }

    /// All of the extended simple roots for a rank-`r` system.
    pub fn full(rank: usize) -> Self {
        RootSubset((1u32 << (rank + 1)) - 1)
    }

    /// The non-affine simple roots only.
    pub fn simple_only(rank: usize) -> Self {
        RootSubset(Self::full(rank).0 & !1)
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn with(&self, index: usize) -> Self {
        RootSubset(self.0 | 1 << index)
    }

    pub fn without(&self, index: usize) -> Self {
        RootSubset(self.0 & !(1 << index))
    }

    pub fn is_disjoint_from(&self, other: RootSubset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = (0..32)
            .filter(|&i| self.contains(i))
            .map(|i| format!("a{i}"))
            .collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

/// Whether a root is positive or negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSign {
    Positive,
    Negative,
}

/// Root datum for one of the two supported families on `n` letters.
#[derive(Clone, Debug)]
pub struct RootDatum {
    kind: GroupType,
    n: usize,
}

impl RootDatum {
    pub fn new(kind: GroupType, n: usize) -> Self {
        assert!(n >= 1);
        RootDatum { kind, n }
    }

    pub fn kind(&self) -> GroupType {
        self.kind
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        match self.kind {
            GroupType::A => self.n - 1,
            GroupType::C => self.n,
        }
    }

    /// Simple root `alpha_i`, `1 <= i <= rank`.
    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        assert!(i >= 1 && i <= self.rank());
        let mut v = vec![0; self.n];
        match self.kind {
            GroupType::A => {
                v[i - 1] = 1;
                v[i] = -1;
            }
            GroupType::C => {
                if i < self.n {
                    v[i - 1] = 1;
                    v[i] = -1;
                } else {
                    v[self.n - 1] = 2;
                }
            }
        }
        v
    }

    /// The unique highest root.
    pub fn highest_root(&self) -> Vec<i64> {
        let mut v = vec![0; self.n];
        match self.kind {
            GroupType::A => {
                v[0] = 1;
                v[self.n - 1] = -1;
            }
            GroupType::C => v[0] = 2,
        }
        v
    }

    /// Extended simple root by index: 0 is the affine node (negative of the
    /// highest root), `i >= 1` the i-th simple root.
    pub fn extended_root(&self, index: usize) -> Result<Vec<i64>> {
        if index == 0 {
            Ok(self.highest_root().iter().map(|x| -x).collect())
        } else if index <= self.rank() {
            Ok(self.simple_root(index))
        } else {
            Err(Error::NotASimpleRoot)
        }
    }

    fn pairing(a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    /// Is `v` a root of this system?
    pub fn is_root(&self, v: &[i64]) -> bool {
        let nonzero: Vec<(usize, i64)> =
            v.iter().copied().enumerate().filter(|&(_, x)| x != 0).collect();
        match self.kind {
            GroupType::A => {
                nonzero.len() == 2 && nonzero[0].1 + nonzero[1].1 == 0 && nonzero[0].1.abs() == 1
            }
            GroupType::C => match nonzero.len() {
                1 => nonzero[0].1.abs() == 2,
                2 => nonzero[0].1.abs() == 1 && nonzero[1].1.abs() == 1,
                _ => false,
            },
        }
    }

    /// Sign of a root: positive exactly when its first nonzero coordinate
    /// is positive (true for both families in these coordinates).
    pub fn root_sign(&self, v: &[i64]) -> RootSign {
        debug_assert!(self.is_root(v));
        match v.iter().find(|&&x| x != 0) {
            Some(&x) if x > 0 => RootSign::Positive,
            _ => RootSign::Negative,
        }
    }

    /// Image of the extended simple root `index` under `w`, with its sign
    /// classification. This is the oracle the descent statistics are
    /// validated against.
    pub fn root_image<E: WeylElement>(&self, w: &E, index: usize) -> Result<(Vec<i64>, RootSign)> {
        let root = self.extended_root(index)?;
        let image = w.act(&root);
        debug_assert!(self.is_root(&image), "Weyl action must permute roots");
        let sign = self.root_sign(&image);
        Ok((image, sign))
    }

    /// Cyclic descent mask recomputed from root images; used in tests as an
    /// independent check of the combinatorial descent rules.
    pub fn descent_mask_from_root_images<E: WeylElement>(&self, w: &E) -> Result<u32> {
        let mut mask = 0u32;
        for index in 0..=self.rank() {
            if let (_, RootSign::Negative) = self.root_image(w, index)? {
                mask |= 1 << index;
            }
        }
        Ok(mask)
    }

    /// Integer points of the closed `k`-dilated fundamental alcove
    /// intersected with the coroot lattice. The scan runs over the integer
    /// bounding box of the dilated alcove expanded by one, pruned by the
    /// chamber inequalities.
    pub fn alcove_lattice_points(&self, k: u64) -> Vec<Vec<i64>> {
        assert!(k >= 1);
        let k = k as i64;
        let n = self.n;
        let mut out = Vec::new();
        let mut point = vec![0i64; n];
        match self.kind {
            GroupType::A => {
                // lattice: zero-sum; chamber: weakly decreasing with spread <= k
                fn rec(
                    idx: usize,
                    n: usize,
                    k: i64,
                    prev: i64,
                    sum: i64,
                    point: &mut Vec<i64>,
                    out: &mut Vec<Vec<i64>>,
                ) {
                    if idx == n {
                        if sum == 0 && point[0] - point[n - 1] <= k {
                            out.push(point.clone());
                        }
                        return;
                    }
                    let hi = prev.min(k + 1);
                    for val in -(k + 1)..=hi {
                        point[idx] = val;
                        rec(idx + 1, n, k, val, sum + val, point, out);
                    }
                }
                rec(0, n, k, k + 1, 0, &mut point, &mut out);
            }
            GroupType::C => {
                // lattice: all of Z^n; chamber: k/2 >= t_1 >= .. >= t_n >= 0
                fn rec(
                    idx: usize,
                    n: usize,
                    prev: i64,
                    point: &mut Vec<i64>,
                    out: &mut Vec<Vec<i64>>,
                ) {
                    if idx == n {
                        out.push(point.clone());
                        return;
                    }
                    for val in 0..=prev {
                        point[idx] = val;
                        rec(idx + 1, n, val, point, out);
                    }
                }
                rec(0, n, k / 2, &mut point, &mut out);
            }
        }
        out
    }

    /// All lattice-point counts `a_{k, I}` at once, indexed by subset mask.
    ///
    /// Each lattice point of the closed dilated alcove is counted by exactly
    /// one subset: the simple walls it lies on, together with the affine
    /// node when it lies on the wall `<theta, t> = k`.
    pub fn a_k_counts(&self, k: u64) -> Vec<u64> {
        let rank = self.rank();
        let simple: Vec<Vec<i64>> = (1..=rank).map(|i| self.simple_root(i)).collect();
        let theta = self.highest_root();
        let mut counts = vec![0u64; 1 << (rank + 1)];
        for t in self.alcove_lattice_points(k) {
            let mut mask = 0u32;
            for (i, alpha) in simple.iter().enumerate() {
                let v = Self::pairing(alpha, &t);
                debug_assert!(v >= 0);
                if v == 0 {
                    mask |= 1 << (i + 1);
                }
            }
            let wall = Self::pairing(&theta, &t);
            debug_assert!(wall <= k as i64);
            if wall == k as i64 {
                mask |= 1;
            }
            counts[mask as usize] += 1;
        }
        counts
    }

    /// The single count `a_{k, I}`: lattice points pairing to zero exactly
    /// on the simple roots of `I`, strictly positively on the remaining
    /// simple roots, and meeting the affine wall with equality exactly when
    /// the affine node is in `I` (strict inequality `< k` otherwise).
    pub fn a_k_i(&self, k: u64, subset: RootSubset) -> u64 {
        self.a_k_counts(k)[subset.0 as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{PermA, PermC};

    #[test]
    fn root_images_match_descent_rules() {
        for n in 1..=4 {
            let datum = RootDatum::new(GroupType::A, n);
            for w in PermA::enumerate(n).unwrap() {
                if n == 1 {
                    continue; // A_0 has no roots
                }
                assert_eq!(
                    datum.descent_mask_from_root_images(&w).unwrap(),
                    w.cyclic_descent_mask(),
                    "{w:?}"
                );
            }
        }
        for n in 1..=4 {
            let datum = RootDatum::new(GroupType::C, n);
            for w in PermC::enumerate(n).unwrap() {
                assert_eq!(
                    datum.descent_mask_from_root_images(&w).unwrap(),
                    w.cyclic_descent_mask(),
                    "{w:?}"
                );
            }
        }
    }

    #[test]
    fn root_image_examples() {
        let a2 = RootDatum::new(GroupType::A, 3);
        let id = PermA::identity(3);
        let (image, sign) = a2.root_image(&id, 0).unwrap();
        assert_eq!(image, vec![-1, 0, 1]);
        assert_eq!(sign, RootSign::Negative);

        let w = PermA::new(vec![2, 3, 1]).unwrap();
        let (image, sign) = a2.root_image(&w, 0).unwrap();
        assert_eq!(image, vec![1, -1, 0]);
        assert_eq!(sign, RootSign::Positive);

        let c1 = RootDatum::new(GroupType::C, 1);
        let w = PermC::new(vec![-1]).unwrap();
        let (image, sign) = c1.root_image(&w, 1).unwrap();
        assert_eq!(image, vec![-2]);
        assert_eq!(sign, RootSign::Negative);

        assert!(a2.root_image(&id, 5).is_err());
    }

    #[test]
    fn a_k_i_examples() {
        let a2 = RootDatum::new(GroupType::A, 3);
        let pi = RootSubset::simple_only(2);
        assert_eq!(a2.a_k_i(2, pi), 1);

        // k = 1 forces the point mass: only I = Pi survives
        let counts = a2.a_k_counts(1);
        for (mask, &count) in counts.iter().enumerate() {
            let expected = if mask as u32 == pi.0 { 1 } else { 0 };
            assert_eq!(count, expected, "mask {mask:b}");
        }

        // six letters, k = 2, I dropping the first and fifth simple roots
        let a5 = RootDatum::new(GroupType::A, 6);
        let subset = RootSubset::full(5).without(1).without(5);
        assert_eq!(a5.a_k_i(2, subset), 1);
    }

    #[test]
    fn riffle_wall_table_for_two_piles() {
        // In type A on 2n letters with k = 2 the nonzero counts are exactly
        // the n + 1 subsets dropping the affine node, a matched pair of
        // simple roots, or the middle root; each contributes one point.
        for n in 1..=3usize {
            let letters = 2 * n;
            let rank = letters - 1;
            let datum = RootDatum::new(GroupType::A, letters);
            let counts = datum.a_k_counts(2);
            let mut expected = vec![RootSubset::full(rank).without(0)];
            for j in 1..n {
                expected.push(RootSubset::full(rank).without(j).without(letters - j));
            }
            expected.push(RootSubset::full(rank).without(n));
            for (mask, &count) in counts.iter().enumerate() {
                let is_expected = expected.iter().any(|s| s.0 == mask as u32);
                assert_eq!(count, u64::from(is_expected), "n={n} mask={mask:b}");
            }
        }
    }

    #[test]
    fn wall_counts_weighted_by_avoiding_elements_fill_the_cube() {
        // sum over subsets I of a_{k,I} |U_I| = k^rank, with U_I the
        // elements whose cyclic descent set avoids I
        fn check<E: WeylElement>(n: usize, k: u64) {
            let datum = RootDatum::new(E::GROUP, n);
            let rank = datum.rank();
            let counts = datum.a_k_counts(k);
            let masks: Vec<u32> =
                E::enumerate(n).unwrap().iter().map(|w| w.cyclic_descent_mask()).collect();
            let mut total = 0u64;
            for (subset, &count) in counts.iter().enumerate() {
                if count == 0 {
                    continue;
                }
                let avoiding =
                    masks.iter().filter(|&&m| m & subset as u32 == 0).count() as u64;
                total += count * avoiding;
            }
            assert_eq!(total, (k as u64).pow(rank as u32), "type {:?} n={n} k={k}", E::GROUP);
        }
        for n in 2..=5 {
            for k in 1..=4 {
                check::<PermA>(n, k);
            }
        }
        for n in 1..=3 {
            for k in 1..=4 {
                check::<PermC>(n, k);
            }
        }
    }

    #[test]
    fn infeasible_subsets_count_zero() {
        // if I contains all simple roots and excludes the affine node, only
        // the origin survives; adding the affine node forces the wall and
        // the count drops to zero for k >= 1 in type A (origin misses it)
        let a3 = RootDatum::new(GroupType::A, 4);
        let all_simple_and_affine = RootSubset::full(3);
        assert_eq!(a3.a_k_i(3, all_simple_and_affine), 0);
        assert_eq!(a3.a_k_i(3, RootSubset::simple_only(3)), 1);
    }
}
