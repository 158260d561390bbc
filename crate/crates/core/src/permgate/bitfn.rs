//! Truth tables over F₂ⁿ and their algebraic normal forms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::MAX_QUBITS;

/// `LANE_MASKS[s]` selects the bit positions within a word whose index has
/// bit `s` set.
pub(crate) const LANE_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Möbius transform of a 64-entry table packed in one word. It is its own
/// inverse, so it maps truth tables to ANF coefficients and back.
#[inline]
pub fn mobius_word(mut w: u64) -> u64 {
    for (s, mask) in LANE_MASKS.iter().enumerate() {
        w ^= (w << (1 << s)) & mask;
    }
    w
}

/// Positions `m < 64` with `popcount(m) ≤ d`, for `d = 0..=6`.
pub(crate) const fn low_degree_mask(d: u32) -> u64 {
    let mut mask = 0u64;
    let mut m = 0;
    while m < 64 {
        if (m as u64).count_ones() <= d {
            mask |= 1 << m;
        }
        m += 1;
    }
    mask
}

/// A function F₂ⁿ → F₂ stored as a packed table of its 2ⁿ values, indexed by
/// basis-state number (qubit 1 most significant).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitTable {
    n: usize,
    words: Vec<u64>,
}

impl BitTable {
    pub fn zeros(n: usize) -> Self {
        assert!(n <= MAX_QUBITS, "table arity {n} exceeds {MAX_QUBITS}");
        let words = if n >= 6 { 1 << (n - 6) } else { 1 };
        Self {
            n,
            words: vec![0; words],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut t = Self::zeros(n);
        for x in 0..t.len() {
            if f(x) {
                t.set(x, true);
            }
        }
        t
    }

    /// Builds a table from a slice of 2ⁿ values. Panics if the length is not
    /// a power of two.
    pub fn from_bools(values: &[bool]) -> Self {
        assert!(values.len().is_power_of_two(), "table length must be 2^n");
        let n = values.len().trailing_zeros() as usize;
        Self::from_fn(n, |x| values[x])
    }

    /// The coordinate function `a_q` of a 1-based qubit.
    pub fn variable(n: usize, qubit: usize) -> Self {
        assert!((1..=n).contains(&qubit));
        let shift = n - qubit;
        Self::from_fn(n, |x| x >> shift & 1 == 1)
    }

    pub fn constant(n: usize, value: bool) -> Self {
        Self::from_fn(n, |_| value)
    }

    fn word_mask(n: usize) -> u64 {
        if n >= 6 {
            u64::MAX
        } else {
            (1u64 << (1 << n)) - 1
        }
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: usize) -> bool {
        debug_assert!(x < self.len());
        self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, x: usize, value: bool) {
        debug_assert!(x < self.len());
        let bit = 1u64 << (x & 63);
        if value {
            self.words[x >> 6] |= bit;
        } else {
            self.words[x >> 6] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, x: usize) {
        self.words[x >> 6] ^= 1u64 << (x & 63);
    }

    pub fn xor_assign(&mut self, other: &BitTable) {
        assert_eq!(self.n, other.n, "arity mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    /// In-place Möbius transform over all n variables.
    fn mobius(&mut self) {
        for w in &mut self.words {
            *w = mobius_word(*w) & Self::word_mask(self.n);
        }
        for s in 6..self.n {
            let stride = 1 << (s - 6);
            for j in 0..self.words.len() {
                if j & stride != 0 {
                    self.words[j] ^= self.words[j ^ stride];
                }
            }
        }
    }
}

impl fmt::Debug for BitTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitTable(n={}, ", self.n)?;
        for x in 0..self.len().min(256) {
            f.write_str(if self.get(x) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

/// A multilinear polynomial over F₂ in variables `a₁, …, aₙ`. Coefficient
/// `m` belongs to the monomial whose variables are the set bits of `m`, with
/// `a₁` as the most significant bit (the same layout as basis indices).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnfPolynomial {
    coeffs: BitTable,
}

/// Algebraic normal form of a truth table.
pub fn anf_of(table: &BitTable) -> AnfPolynomial {
    let mut coeffs = table.clone();
    coeffs.mobius();
    AnfPolynomial { coeffs }
}

impl AnfPolynomial {
    pub fn from_coefficients(coeffs: BitTable) -> Self {
        Self { coeffs }
    }

    /// The polynomial with exactly the given monomials, each a list of
    /// 1-based variable indices. Repeated monomials cancel.
    pub fn from_monomials(n: usize, monomials: &[&[usize]]) -> Self {
        let mut coeffs = BitTable::zeros(n);
        for m in monomials {
            let mask = m.iter().fold(0usize, |acc, &v| acc | 1 << (n - v));
            coeffs.flip(mask);
        }
        Self { coeffs }
    }

    pub fn arity(&self) -> usize {
        self.coeffs.arity()
    }

    pub fn coefficients(&self) -> &BitTable {
        &self.coeffs
    }

    pub fn coefficient(&self, mask: usize) -> bool {
        self.coeffs.get(mask)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Largest monomial degree; 0 for constants including the zero
    /// polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs
            .ones()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Monomial masks, ascending.
    pub fn monomials(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.ones()
    }

    /// 1-based variables of a monomial mask, ascending.
    pub fn variables_of(&self, mask: usize) -> Vec<usize> {
        let n = self.arity();
        (1..=n).filter(|&v| mask >> (n - v) & 1 == 1).collect()
    }

    pub fn evaluate(&self) -> BitTable {
        let mut t = self.coeffs.clone();
        t.mobius();
        t
    }
}

impl fmt::Display for AnfPolynomial {
    /// Renders monomials by ascending degree, then lexicographically by
    /// variable index, e.g. `a7+a1a6+a2a5+a3a4+a1a2a3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut monos: Vec<Vec<usize>> = self.monomials().map(|m| self.variables_of(m)).collect();
        if monos.is_empty() {
            return f.write_str("0");
        }
        monos.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for (i, m) in monos.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if m.is_empty() {
                f.write_str("1")?;
            }
            for v in m {
                write!(f, "a{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AnfPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn and_table() {
        let and = BitTable::from_bools(&[false, false, false, true]);
        let p = anf_of(&and);
        assert_eq!(p.to_string(), "a1a2");
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn constant_one() {
        let p = anf_of(&BitTable::constant(3, true));
        assert_eq!(p.to_string(), "1");
        assert_eq!(p.degree(), 0);
        assert_eq!(anf_of(&BitTable::zeros(3)).to_string(), "0");
    }

    #[test]
    fn variable_has_degree_one() {
        let p = anf_of(&BitTable::variable(4, 2));
        assert_eq!(p.to_string(), "a2");
    }

    #[test]
    fn wide_tables_round_trip() {
        // Exercise the cross-word passes.
        let n = 9;
        let t = BitTable::from_fn(n, |x| (x * 2654435761usize) >> 7 & 1 == 1);
        assert_eq!(anf_of(&t).evaluate(), t);
        let a1a9 = BitTable::from_fn(n, |x| x >> 8 & 1 == 1 && x & 1 == 1);
        assert_eq!(anf_of(&a1a9).to_string(), "a1a9");
    }

    #[test]
    fn low_degree_masks() {
        assert_eq!(low_degree_mask(0), 1);
        assert_eq!(
            low_degree_mask(1),
            1 | 1 << 1 | 1 << 2 | 1 << 4 | 1 << 8 | 1 << 16 | 1 << 32
        );
        assert_eq!(low_degree_mask(6), u64::MAX);
    }

    #[test]
    fn from_monomials_matches_rendering() {
        let p = AnfPolynomial::from_monomials(3, &[&[3], &[1, 2]]);
        assert_eq!(p.to_string(), "a3+a1a2");
    }
}
