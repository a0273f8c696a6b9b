//! Laurent polynomials in `v` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// `Σ c_k v^k`, finitely many nonzero `c_k ∈ Z`. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::term(c, 0)
    }

    /// `v^k`
    pub fn monomial(k: i32) -> Self {
        LaurentPoly::term(1, k)
    }

    /// `c v^k`
    pub fn term(c: impl Into<BigInt>, k: i32) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(k, c.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `v ↦ v^{-1}`
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&d, c)| (d + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(&k, x)| (k, x * c)))
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether every exponent is positive, i.e. the polynomial lies in `vZ[v]`.
    pub fn in_v_z_v(&self) -> bool {
        self.min_degree().is_none_or(|d| d > 0)
    }

    /// `Σ c_k q^k` evaluated at `q = v^{-2}`.
    pub fn from_q_poly_at_v_minus_2(coeffs: &[BigInt]) -> Self {
        LaurentPoly::from_terms(coeffs.iter().enumerate().map(|(k, c)| (-2 * k as i32, c.clone())))
    }

    /// `[n] = v^{n-1} + v^{n-3} + ... + v^{1-n}`
    pub fn quantum_int(n: u32) -> Self {
        LaurentPoly::from_terms((0..n).map(|t| (n as i32 - 1 - 2 * t as i32, BigInt::one())))
    }

    /// `[n]! = [1][2]⋯[n]`
    pub fn quantum_factorial(n: u32) -> Self {
        (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &LaurentPoly::quantum_int(k))
    }

    /// Exact division; `None` if `d` does not divide `self` in `Z[v, v^{-1}]`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let dlo = d.min_degree()?;
        let dhi = d.max_degree().unwrap();
        let lead = d.coeff(dhi);
        let mut rem = self.clone();
        let mut q = LaurentPoly::zero();
        while let Some(hi) = rem.max_degree() {
            let lo = rem.min_degree().unwrap();
            if hi - lo < dhi - dlo {
                return None;
            }
            let c = rem.coeff(hi);
            let (qc, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPoly::term(qc, hi - dhi);
            rem = &rem - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Coefficients as machine integers, for JSON output.
    pub fn to_i64_map(&self) -> Option<BTreeMap<i32, i64>> {
        self.terms.iter().map(|(&k, c)| c.to_i64().map(|c| (k, c))).collect()
    }

    pub fn from_i64_map(m: &BTreeMap<i32, i64>) -> Self {
        LaurentPoly::from_terms(m.iter().map(|(&k, &c)| (k, BigInt::from(c))))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &o.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &o.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending powers: `v^2 + 2v - 1 + v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in self.terms.iter().rev() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "v".into(),
                k => format!("v^{k}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.to_i64_map()
            .ok_or_else(|| serde::ser::Error::custom("coefficient does not fit in 64 bits"))?
            .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let m = BTreeMap::<i32, i64>::deserialize(de)?;
        Ok(LaurentPoly::from_i64_map(&m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    #[test]
    fn arithmetic() {
        let a = lp(&[(-1, 1), (1, 1)]);
        assert_eq!(&a * &a, lp(&[(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(a.bar(), a);
        assert!(!lp(&[(1, 1)]).is_bar_invariant());
        assert_eq!(lp(&[(2, 3), (-1, 1)]).at_one(), BigInt::from(4));
    }

    #[test]
    fn quantum_numbers() {
        assert_eq!(LaurentPoly::quantum_int(1), LaurentPoly::one());
        assert_eq!(LaurentPoly::quantum_int(2), lp(&[(-1, 1), (1, 1)]));
        assert_eq!(LaurentPoly::quantum_int(3), lp(&[(-2, 1), (0, 1), (2, 1)]));
        assert_eq!(LaurentPoly::quantum_factorial(3).at_one(), BigInt::from(6));
    }

    #[test]
    fn exact_division() {
        let f = LaurentPoly::quantum_factorial(3);
        let g = lp(&[(5, 2), (-3, -1)]);
        assert_eq!((&f * &g).div_exact(&f), Some(g));
        assert_eq!(lp(&[(0, 1)]).div_exact(&LaurentPoly::quantum_int(2)), None);
        assert_eq!(lp(&[(0, 3)]).div_exact(&LaurentPoly::constant(2)), None);
    }

    #[test]
    fn q_substitution() {
        // 1 + q at q = v^-2
        let p = LaurentPoly::from_q_poly_at_v_minus_2(&[BigInt::from(1), BigInt::from(1)]);
        assert_eq!(p, lp(&[(0, 1), (-2, 1)]));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(lp(&[(2, 1), (1, 2), (0, -1), (-1, 1)]).to_string(), "v^2 + 2v - 1 + v^-1");
        assert_eq!(lp(&[(1, -1)]).to_string(), "-v");
        let p = lp(&[(-1, 1), (1, 2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"-1":1,"1":2}"#);
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }
}
