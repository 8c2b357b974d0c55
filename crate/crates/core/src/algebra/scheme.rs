//! Difference schemes `D_t(r, c, d)`, accepted only when their expansion
//! `D + (d)` passes the strength oracle at `t`.

use serde::Serialize;

use super::field::{prime_power, FiniteField};
use super::group::AbelianGroup;
use super::kron;
use crate::array::format::{ArrayKind, MoaDocument};
use crate::array::strength::{verify_strength, StrengthWitness};
use crate::array::MixedArray;
use crate::error::{param, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceScheme {
    array: MixedArray,
    group: AbelianGroup,
    strength: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeCheck {
    pub holds: bool,
    pub witness: Option<StrengthWitness>,
}

/// Accepts `candidate` iff its expansion over `group` has strength `t`.
pub fn is_difference_scheme(candidate: &MixedArray, group: AbelianGroup, t: usize) -> Result<SchemeCheck> {
    let d = group.order();
    if let Some(&l) = candidate.levels().iter().find(|&&l| l != d) {
        return param(format!("column level {l} differs from group order {d}"));
    }
    let report = verify_strength(&kron::expand(candidate, group)?, t)?;
    Ok(SchemeCheck { holds: report.holds, witness: report.witness })
}

impl DifferenceScheme {
    /// Verifies and wraps a candidate scheme.
    pub fn new(array: MixedArray, group: AbelianGroup, strength: usize) -> Result<Self> {
        if strength < 1 {
            return param("a difference scheme needs strength at least 1");
        }
        let check = is_difference_scheme(&array, group, strength)?;
        if !check.holds {
            return Err(Error::Verification(format!(
                "{}x{} matrix is not a difference scheme of strength {strength} over a group of order {}; witness {:?}",
                array.runs(),
                array.cols(),
                group.order(),
                check.witness
            )));
        }
        Ok(Self { array, group, strength })
    }

    pub fn rows(&self) -> usize {
        self.array.runs()
    }

    pub fn cols(&self) -> usize {
        self.array.cols()
    }

    pub fn order(&self) -> u32 {
        self.group.order()
    }

    pub fn strength(&self) -> usize {
        self.strength
    }

    pub fn group(&self) -> AbelianGroup {
        self.group
    }

    pub fn array(&self) -> &MixedArray {
        &self.array
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// The orthogonal array `D + (d)`.
    pub fn expand(&self) -> MixedArray {
        kron::expand(&self.array, self.group).expect("levels match the group")
    }

    /// Sub-scheme on the given columns.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Self> {
        Self::new(self.array.select_columns(cols)?, self.group, self.strength.min(cols.len()))
    }

    /// Kronecker sum with another scheme over the same group.
    pub fn kronecker_sum(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return param("schemes are over different groups");
        }
        let array = kron::kronecker_sum(&self.array, &other.array, self.group)?;
        Self::new(array, self.group, self.strength.min(other.strength))
    }

    pub fn to_document(&self) -> MoaDocument {
        MoaDocument {
            array: self.array.clone(),
            kind: Some(ArrayKind::DifferenceScheme { d: self.order(), t: self.strength }),
            strength: None,
        }
    }
}

fn check_prime_power(d: u32) -> Result<FiniteField> {
    if prime_power(d as u64).is_none() {
        return param(format!("{d} is not a prime power"));
    }
    FiniteField::new(d)
}

/// `D(d^n, d^n, d)` with entry `sum x_i y_i` for `x, y` in `GF(d)^n`.
pub fn ds_linear(d: u32, n: u32) -> Result<DifferenceScheme> {
    let f = check_prime_power(d)?;
    if n == 0 {
        return param("the extension count must be at least 1");
    }
    let size = (d as usize).checked_pow(n).filter(|&s| s <= 4096).map_or_else(
        || param(format!("{d}^{n} rows is too large")),
        Ok,
    )?;
    let coords = |mut v: usize| {
        (0..n)
            .map(|_| {
                let c = (v % d as usize) as u32;
                v /= d as usize;
                c
            })
            .collect::<Vec<u32>>()
    };
    let array = MixedArray::from_fn(size, vec![d; size], |i, j| {
        let (x, y) = (coords(i), coords(j));
        x.iter().zip(&y).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))) as u16
    })?;
    DifferenceScheme::new(array, AbelianGroup::for_order(d)?, 2)
}

/// `D_3(d^2, d, d)` with entry `a c + b c^2` for row `(a, b)` and column `c`.
pub fn ds_poly3(d: u32) -> Result<DifferenceScheme> {
    if d % 2 == 0 {
        return param(format!("ds_poly3 needs an odd prime power, got {d}"));
    }
    let f = check_prime_power(d)?;
    let dd = d as usize;
    let array = MixedArray::from_fn(dd * dd, vec![d; dd], |i, c| {
        let (a, b, c) = ((i / dd) as u32, (i % dd) as u32, c as u32);
        f.add(f.mul(a, c), f.mul(b, f.mul(c, c))) as u16
    })?;
    DifferenceScheme::new(array, AbelianGroup::for_order(d)?, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::distance::distance_spectrum;

    #[test]
    fn constant_columns_are_rejected() {
        let z = MixedArray::zeros(4, vec![2, 2]).unwrap();
        assert!(!is_difference_scheme(&z, AbelianGroup::Cyclic(2), 2).unwrap().holds);
        assert!(DifferenceScheme::new(z, AbelianGroup::Cyclic(2), 2).is_err());
    }

    #[test]
    fn linear_schemes() {
        for (d, n) in [(2, 1), (2, 2), (3, 1), (4, 1), (5, 1), (3, 2), (8, 1)] {
            let s = ds_linear(d, n).unwrap();
            assert_eq!(s.rows(), (d as usize).pow(n));
            let md = distance_spectrum(&s.expand()).min_distance;
            assert_eq!(md, s.rows() - s.rows() / d as usize);
        }
        assert!(ds_linear(6, 1).is_err());
    }

    #[test]
    fn poly3_schemes() {
        for d in [3, 5, 7, 9] {
            let s = ds_poly3(d).unwrap();
            assert_eq!((s.rows(), s.cols(), s.strength()), ((d * d) as usize, d as usize, 3));
        }
        assert!(ds_poly3(4).is_err());
    }
}
