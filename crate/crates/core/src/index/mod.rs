//! Index categories: graded sets of indices with a partial associative
//! composition and neutral elements.
//!
//! Composition is partial by design; an undefined composite is returned as
//! `None` and the series product treats it as an algebraic zero. The grade
//! (`ord`) is additive wherever composition is defined, and every neutral
//! element has grade 0.

mod nat;
mod word;

pub use nat::NatCat;
pub use word::{Word, WordCat};

use std::fmt::Debug;

use crate::error::Result;

/// A graded small category of indices. Implementations must keep `Index`'s
/// `Ord` stable: it is the tie-break of the canonical `(ord, index)` term
/// order used everywhere for deterministic iteration and serialization.
pub trait IndexCategory: Clone + PartialEq + Debug {
    type Index: Clone + Ord + Debug + Send + Sync;

    /// The grade of an index.
    fn ord(&self, i: &Self::Index) -> usize;

    /// All neutral elements. Each has grade 0, and `e * e = e`.
    fn neutrals(&self) -> Vec<Self::Index>;

    fn is_neutral(&self, i: &Self::Index) -> bool {
        self.neutrals().iter().any(|e| e == i)
    }

    /// The partial composition; `None` encodes "undefined", which the
    /// series product reads as zero.
    fn compose(&self, i: &Self::Index, j: &Self::Index) -> Option<Self::Index>;

    /// Every index of grade at most `max_ord`, in canonical order.
    /// Errors when the enumeration cannot be certified finite.
    fn elements_up_to(&self, max_ord: usize) -> Result<Vec<Self::Index>>;

    /// Complete, duplicate-free list of ordered factorizations `k = i * j`,
    /// sorted by `(ord(i), i)`. Requires `ord(k) <= max_ord`.
    fn decompositions(
        &self,
        k: &Self::Index,
        max_ord: usize,
    ) -> Result<Vec<(Self::Index, Self::Index)>>;
}

/// Exhaustive factorization scan over all element pairs of bounded order.
/// Quadratic; the per-category `decompositions` implementations are checked
/// against this in tests.
pub fn brute_force_decompositions<C: IndexCategory>(
    cat: &C,
    k: &C::Index,
    max_ord: usize,
) -> Result<Vec<(C::Index, C::Index)>> {
    let elements = cat.elements_up_to(max_ord)?;
    let mut out = Vec::new();
    for i in &elements {
        for j in &elements {
            if cat.compose(i, j).as_ref() == Some(k) {
                out.push((i.clone(), j.clone()));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| (cat.ord(a), a).cmp(&(cat.ord(b), b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    /// Two disjoint copies of the free monoid on one letter, glued only
    /// through their own neutrals. Exercises the multi-neutral corner of
    /// the contract: composition across components is undefined.
    #[derive(Debug, Clone, PartialEq)]
    struct TwoComponents;

    impl IndexCategory for TwoComponents {
        // (component, power); neutral of component c is (c, 0).
        type Index = (u8, usize);

        fn ord(&self, i: &(u8, usize)) -> usize {
            i.1
        }

        fn neutrals(&self) -> Vec<(u8, usize)> {
            vec![(0, 0), (1, 0)]
        }

        fn compose(&self, i: &(u8, usize), j: &(u8, usize)) -> Option<(u8, usize)> {
            (i.0 == j.0).then_some((i.0, i.1 + j.1))
        }

        fn elements_up_to(&self, max_ord: usize) -> Result<Vec<(u8, usize)>> {
            let mut v: Vec<_> = (0..=max_ord).flat_map(|p| [(0u8, p), (1u8, p)]).collect();
            v.sort();
            Ok(v)
        }

        fn decompositions(&self, k: &(u8, usize), max_ord: usize) -> Result<Vec<((u8, usize), (u8, usize))>> {
            brute_force_decompositions(self, k, max_ord)
        }
    }

    #[test]
    fn neutrals_are_per_component() {
        let cat = TwoComponents;
        assert_eq!(cat.compose(&(0, 0), &(0, 3)), Some((0, 3)));
        assert_eq!(cat.compose(&(0, 0), &(1, 3)), None);
        for e in cat.neutrals() {
            assert_eq!(cat.ord(&e), 0);
            assert_eq!(cat.compose(&e, &e), Some(e));
        }
    }

    #[test]
    fn cross_component_factorizations_are_absent() {
        let cat = TwoComponents;
        let decs = cat.decompositions(&(1, 2), 4).unwrap();
        assert_eq!(decs, vec![((1, 0), (1, 2)), ((1, 1), (1, 1)), ((1, 2), (1, 0))]);
    }

    #[test]
    fn brute_force_respects_max_ord_budget() {
        // A category that cannot enumerate reports the failure rather
        // than silently truncating.
        #[derive(Debug, Clone, PartialEq)]
        struct Opaque;
        impl IndexCategory for Opaque {
            type Index = usize;
            fn ord(&self, i: &usize) -> usize {
                *i
            }
            fn neutrals(&self) -> Vec<usize> {
                vec![0]
            }
            fn compose(&self, i: &usize, j: &usize) -> Option<usize> {
                Some(i + j)
            }
            fn elements_up_to(&self, _max_ord: usize) -> Result<Vec<usize>> {
                Err(Error::InfiniteDecomposition("no enumeration available".into()))
            }
            fn decompositions(&self, k: &usize, max_ord: usize) -> Result<Vec<(usize, usize)>> {
                brute_force_decompositions(self, k, max_ord)
            }
        }
        assert!(matches!(
            Opaque.decompositions(&2, 4),
            Err(Error::InfiniteDecomposition(_))
        ));
    }
}
