//! Normalized Hadamard matrices in 0/1 form.
//!
//! A `+1` entry becomes 0 and `-1` becomes 1, so any two distinct rows are at
//! Hamming distance `n/2` and the Kronecker product is entrywise XOR.

use std::fmt;

use super::field::{prime_power, FiniteField};
use super::group::AbelianGroup;
use super::scheme::DifferenceScheme;
use crate::array::MixedArray;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HadamardMethod {
    Sylvester,
    /// Order `q + 1` for a prime power `q = 3 (mod 4)`.
    Paley1,
    /// Order `2(q + 1)` for a prime power `q = 1 (mod 4)`.
    Paley2,
    /// Kronecker product of the listed orders, each generated automatically.
    Kronecker(Vec<usize>),
}

impl fmt::Display for HadamardMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sylvester => f.write_str("sylvester"),
            Self::Paley1 => f.write_str("paley1"),
            Self::Paley2 => f.write_str("paley2"),
            Self::Kronecker(parts) => {
                let s: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "kronecker({})", s.join("x"))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hadamard01 {
    matrix: MixedArray,
}

impl Hadamard01 {
    pub fn order(&self) -> usize {
        self.matrix.runs()
    }

    pub fn matrix(&self) -> &MixedArray {
        &self.matrix
    }

    /// The matrix read as a difference scheme over `Z_2` at strength `t`.
    pub fn scheme(&self, t: usize) -> Result<DifferenceScheme> {
        DifferenceScheme::new(self.matrix.clone(), AbelianGroup::Cyclic(2), t)
    }

    /// Entrywise XOR Kronecker product.
    pub fn kronecker(&self, other: &Self) -> Self {
        let (n1, n2) = (self.order(), other.order());
        let n = n1 * n2;
        let matrix = MixedArray::from_fn(n, vec![2; n], |i, j| {
            self.matrix.cell(i / n2, j / n2) ^ other.matrix.cell(i % n2, j % n2)
        })
        .expect("binary cells");
        Self { matrix }
    }

    /// Normalized and every pair of rows at distance `n/2`.
    pub fn is_valid(&self) -> bool {
        let n = self.order();
        let m = &self.matrix;
        if (0..n).any(|i| m.cell(0, i) != 0 || m.cell(i, 0) != 0) {
            return false;
        }
        (0..n).all(|i| {
            (i + 1..n).all(|j| crate::array::distance::hamming(m.row(i), m.row(j)) * 2 == n)
        })
    }

    fn from_signs(signs: Vec<Vec<i8>>) -> Self {
        let n = signs.len();
        let matrix = MixedArray::from_fn(n, vec![2; n], |i, j| {
            let v = signs[i][j] * signs[0][j] * signs[i][0] * signs[0][0];
            u16::from(v < 0)
        })
        .expect("binary cells");
        Self { matrix }
    }
}

fn sylvester(n: usize) -> Option<Hadamard01> {
    if !n.is_power_of_two() {
        return None;
    }
    let matrix = MixedArray::from_fn(n, vec![2; n], |i, j| ((i & j).count_ones() % 2) as u16).ok()?;
    Some(Hadamard01 { matrix })
}

fn jacobsthal(f: &FiniteField) -> Vec<Vec<i8>> {
    let q = f.order();
    (0..q)
        .map(|a| (0..q).map(|b| f.chi(f.sub(a, b))).collect())
        .collect()
}

fn paley_q(n: usize, method: &HadamardMethod) -> Option<u32> {
    let q = match method {
        HadamardMethod::Paley1 => n.checked_sub(1)?,
        HadamardMethod::Paley2 if n % 2 == 0 => (n / 2).checked_sub(1)?,
        _ => return None,
    };
    let want = if *method == HadamardMethod::Paley1 { 3 } else { 1 };
    (q <= 1 << 16 && prime_power(q as u64).is_some() && q % 4 == want).then_some(q as u32)
}

fn paley1(n: usize) -> Option<Hadamard01> {
    let q = paley_q(n, &HadamardMethod::Paley1)?;
    let f = FiniteField::new(q).ok()?;
    let jac = jacobsthal(&f);
    let size = q as usize + 1;
    let mut s = vec![vec![0i8; size]; size];
    for i in 1..size {
        s[0][i] = 1;
        s[i][0] = -1;
        for j in 1..size {
            s[i][j] = jac[i - 1][j - 1];
        }
    }
    for (i, row) in s.iter_mut().enumerate() {
        row[i] += 1;
    }
    Some(Hadamard01::from_signs(s))
}

fn paley2(n: usize) -> Option<Hadamard01> {
    let q = paley_q(n, &HadamardMethod::Paley2)?;
    let f = FiniteField::new(q).ok()?;
    let jac = jacobsthal(&f);
    let size = q as usize + 1;
    let mut c = vec![vec![0i8; size]; size];
    for i in 1..size {
        c[0][i] = 1;
        c[i][0] = 1;
        for j in 1..size {
            c[i][j] = jac[i - 1][j - 1];
        }
    }
    let zero_block = [[1i8, -1], [-1, -1]];
    let unit_block = [[1i8, 1], [1, -1]];
    let mut h = vec![vec![0i8; 2 * size]; 2 * size];
    for i in 0..size {
        for j in 0..size {
            for a in 0..2 {
                for b in 0..2 {
                    h[2 * i + a][2 * j + b] = match c[i][j] {
                        0 => zero_block[a][b],
                        s => s * unit_block[a][b],
                    };
                }
            }
        }
    }
    Some(Hadamard01::from_signs(h))
}

/// Methods that can build an order-`n` matrix without splitting it.
pub fn direct_methods(n: usize) -> Vec<HadamardMethod> {
    let mut out = Vec::new();
    if n.is_power_of_two() {
        out.push(HadamardMethod::Sylvester);
    }
    if paley_q(n, &HadamardMethod::Paley1).is_some() {
        out.push(HadamardMethod::Paley1);
    }
    if paley_q(n, &HadamardMethod::Paley2).is_some() {
        out.push(HadamardMethod::Paley2);
    }
    out
}

/// A Kronecker factorization of `n` into directly generatable orders, if any.
fn kronecker_split(n: usize) -> Option<Vec<usize>> {
    if !direct_methods(n).is_empty() {
        return Some(vec![n]);
    }
    // Largest proper factor first keeps the split short and deterministic.
    (2..n)
        .rev()
        .filter(|&a| n % a == 0 && (a == 2 || a % 4 == 0))
        .find_map(|a| {
            let b = n / a;
            if b < 2 || direct_methods(a).is_empty() {
                return None;
            }
            let mut rest = kronecker_split(b)?;
            rest.insert(0, a);
            Some(rest)
        })
}

/// All methods that can produce order `n`.
pub fn applicable_methods(n: usize) -> Vec<HadamardMethod> {
    let mut out = direct_methods(n);
    if let Some(parts) = kronecker_split(n).filter(|p| p.len() > 1) {
        out.push(HadamardMethod::Kronecker(parts));
    }
    out
}

fn no_generator(n: usize, method: &HadamardMethod) -> Error {
    let listed: Vec<String> = applicable_methods(n).iter().map(ToString::to_string).collect();
    let detail = if listed.is_empty() {
        format!("{method} does not apply and no method covers this order")
    } else {
        format!("{method} does not apply; applicable methods: {}", listed.join(", "))
    };
    Error::NoGenerator { order: n, detail }
}

pub fn hadamard01(n: usize, method: HadamardMethod) -> Result<Hadamard01> {
    let built = match &method {
        HadamardMethod::Sylvester => sylvester(n),
        HadamardMethod::Paley1 => paley1(n),
        HadamardMethod::Paley2 => paley2(n),
        HadamardMethod::Kronecker(parts) => {
            if parts.is_empty() || parts.iter().product::<usize>() != n {
                None
            } else {
                let mut acc: Option<Hadamard01> = None;
                for &p in parts {
                    let h = hadamard01_auto(p)?;
                    acc = Some(match acc {
                        None => h,
                        Some(a) => a.kronecker(&h),
                    });
                }
                acc
            }
        }
    };
    let h = built.ok_or_else(|| no_generator(n, &method))?;
    debug_assert!(h.is_valid());
    Ok(h)
}

/// Picks Sylvester, then Paley I, then Paley II, then a Kronecker split.
pub fn hadamard01_auto(n: usize) -> Result<Hadamard01> {
    match applicable_methods(n).into_iter().next() {
        Some(m) => hadamard01(n, m),
        None => Err(Error::NoGenerator {
            order: n,
            detail: "no sylvester, paley or kronecker route covers this order".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two() {
        let h = hadamard01(2, HadamardMethod::Sylvester).unwrap();
        assert_eq!(h.matrix().cells(), &[0, 0, 0, 1]);
    }

    #[test]
    fn generated_orders_are_valid() {
        for n in [1, 2, 4, 8, 12, 16, 20, 24, 28, 36, 44, 72, 100] {
            let h = hadamard01_auto(n).unwrap();
            assert_eq!(h.order(), n);
            assert!(h.is_valid(), "order {n}");
        }
    }

    #[test]
    fn explicit_methods() {
        assert!(hadamard01(12, HadamardMethod::Paley1).unwrap().is_valid());
        assert!(hadamard01(36, HadamardMethod::Paley2).unwrap().is_valid());
        assert!(hadamard01(24, HadamardMethod::Kronecker(vec![12, 2])).unwrap().is_valid());
    }

    #[test]
    fn missing_generator_lists_alternatives() {
        let err = hadamard01(12, HadamardMethod::Sylvester).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("paley1"), "{msg}");
        assert!(matches!(hadamard01_auto(6), Err(Error::NoGenerator { .. })));
    }
}
