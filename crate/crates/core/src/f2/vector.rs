use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::MAX_QUBITS;

/// A vector over F₂ of length at most [`MAX_QUBITS`].
///
/// Component `i` (0-based, i.e. coordinate `i + 1` in 1-based notation) lives
/// at bit `len - 1 - i` of the packed word, so the packed word of a vector is
/// exactly the index of the computational basis state `|v₁…vₙ⟩` with qubit 1
/// as the most significant bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct F2Vector {
    len: u8,
    bits: u32,
}

impl F2Vector {
    pub fn zero(len: usize) -> Self {
        assert!(
            len <= MAX_QUBITS,
            "F2Vector length {len} exceeds {MAX_QUBITS}"
        );
        Self {
            len: len as u8,
            bits: 0,
        }
    }

    /// Builds a vector from its packed word (basis-state index).
    pub fn from_bits(len: usize, bits: u32) -> Self {
        assert!(
            len <= MAX_QUBITS,
            "F2Vector length {len} exceeds {MAX_QUBITS}"
        );
        assert!(
            (bits as u64) < (1u64 << len),
            "bits {bits:#x} do not fit in length {len}"
        );
        Self {
            len: len as u8,
            bits,
        }
    }

    /// The standard basis vector eᵢ₊₁ (0-based `i`).
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.set(i, true);
        v
    }

    pub fn from_components(components: &[bool]) -> Self {
        let mut v = Self::zero(components.len());
        for (i, &c) in components.iter().enumerate() {
            v.set(i, c);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    fn mask(&self, i: usize) -> u32 {
        assert!(
            i < self.len(),
            "component {i} out of range for length {}",
            self.len
        );
        1 << (self.len() - 1 - i)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits & self.mask(i) != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        let m = self.mask(i);
        if value {
            self.bits |= m;
        } else {
            self.bits &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.bits ^= self.mask(i);
    }

    #[inline]
    pub fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Index of the first nonzero component, 1-based; `len + 1` stands in
    /// for ∞ when the vector is zero, so it orders after every real index.
    pub fn alpha(&self) -> usize {
        if self.bits == 0 {
            self.len() + 1
        } else {
            // Highest set bit is the lowest-numbered coordinate.
            let top = 31 - self.bits.leading_zeros() as usize;
            self.len() - top
        }
    }

    /// 0-based positions of the nonzero components, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.get(i))
    }
}

impl Add for F2Vector {
    type Output = F2Vector;

    #[inline]
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.len, rhs.len);
        Self {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl AddAssign for F2Vector {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        debug_assert_eq!(self.len, rhs.len);
        self.bits ^= rhs.bits;
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_of_zero_is_sentinel() {
        assert_eq!(F2Vector::zero(4).alpha(), 5);
        assert_eq!(F2Vector::zero(0).alpha(), 1);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(F2Vector::unit(5, 2).alpha(), 3);
        assert_eq!(F2Vector::from_components(&[false, true, true]).alpha(), 2);
        assert_eq!(F2Vector::unit(16, 15).alpha(), 16);
    }

    #[test]
    fn packing_matches_basis_index() {
        // |110⟩ on three qubits is index 6.
        let v = F2Vector::from_components(&[true, true, false]);
        assert_eq!(v.bits(), 6);
        assert_eq!(v.to_string(), "110");
    }

    #[test]
    #[should_panic]
    fn rejects_oversized() {
        let _ = F2Vector::zero(17);
    }
}
