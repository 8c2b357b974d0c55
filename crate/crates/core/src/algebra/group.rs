//! Finite abelian groups used as symbol alphabets for difference schemes.

use super::field::prime_power;
use crate::error::{param, Result};

/// `Cyclic(d)` is `Z_d`; `Elementary { p, m }` is the additive group of
/// GF(p^m), i.e. `(Z_p)^m` with base-`p` digitwise addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AbelianGroup {
    Cyclic(u32),
    Elementary { p: u32, m: u32 },
}

impl AbelianGroup {
    pub fn cyclic(d: u32) -> Result<Self> {
        if d < 2 {
            return param(format!("group order {d} is below 2"));
        }
        Ok(Self::Cyclic(d))
    }

    /// The group a scheme of order `d` is built over: the field's additive
    /// group for prime powers, `Z_d` otherwise.
    pub fn for_order(d: u32) -> Result<Self> {
        match prime_power(d as u64) {
            Some((p, m)) if m > 1 => Ok(Self::Elementary { p, m }),
            _ => Self::cyclic(d),
        }
    }

    pub fn order(&self) -> u32 {
        match *self {
            Self::Cyclic(d) => d,
            Self::Elementary { p, m } => p.pow(m),
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match *self {
            Self::Cyclic(d) => (a + b) % d,
            Self::Elementary { p, .. } => {
                let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
                while a > 0 || b > 0 {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                out
            }
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        match *self {
            Self::Cyclic(d) => (d - a % d) % d,
            Self::Elementary { p, .. } => {
                let (mut a, mut out, mut place) = (a, 0, 1);
                while a > 0 {
                    out += ((p - a % p) % p) * place;
                    a /= p;
                    place *= p;
                }
                out
            }
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_axioms_small_orders() {
        for d in 2..=64u32 {
            let g = AbelianGroup::for_order(d).unwrap();
            assert_eq!(g.order(), d);
            for a in 0..d {
                assert_eq!(g.add(a, 0), a);
                assert_eq!(g.add(a, g.neg(a)), 0);
                for b in (0..d).step_by(3) {
                    assert_eq!(g.add(a, b), g.add(b, a));
                    for c in (0..d).step_by(5) {
                        assert_eq!(g.add(g.add(a, b), c), g.add(a, g.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_for_composite_prime_powers() {
        assert_eq!(AbelianGroup::for_order(4).unwrap(), AbelianGroup::Elementary { p: 2, m: 2 });
        assert_eq!(AbelianGroup::for_order(7).unwrap(), AbelianGroup::Cyclic(7));
        assert_eq!(AbelianGroup::for_order(6).unwrap(), AbelianGroup::Cyclic(6));
        assert!(AbelianGroup::cyclic(1).is_err());
    }
}
