//! The natural numbers under addition: the index category of one-variable
//! formal series (powers of the deformation parameter h).

use crate::error::Result;

use super::IndexCategory;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NatCat;

impl IndexCategory for NatCat {
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

    fn elements_up_to(&self, max_ord: usize) -> Result<Vec<usize>> {
        Ok((0..=max_ord).collect())
    }

    fn decompositions(&self, k: &usize, max_ord: usize) -> Result<Vec<(usize, usize)>> {
        debug_assert!(*k <= max_ord);
        Ok((0..=*k).map(|i| (i, k - i)).collect())
    }
}
