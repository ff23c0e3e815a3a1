//! GF(4) arithmetic and vectors, stored through the GF(2)^2 image.
//!
//! GF(4) = {0, 1, ω, ω²} with ω² = ω + 1. Conjugation is x̄ = x², the trace
//! map is Tr(x) = x + x̄. The bijection φ(x) = (Tr(xω²), Tr(x)) identifies
//! GF(4) with pairs of bits: 0 ↦ (0,0), 1 ↦ (1,0), ω ↦ (0,1), ω² ↦ (1,1),
//! and its inverse is φ⁻¹(a, b) = a + ωb. Vectors keep the two bit halves
//! packed in machine words, so addition is XOR and weights are popcounts.

use crate::error::{Error, Result};
use crate::MAX_N;
use std::fmt;

/// An element of GF(4), encoded as the bit pair (a, b) with x = a + ωb.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0b00);
    pub const ONE: Gf4 = Gf4(0b01);
    pub const OMEGA: Gf4 = Gf4(0b10);
    pub const OMEGA2: Gf4 = Gf4(0b11);

    /// All four elements, in the order 0, 1, ω, ω².
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    #[inline]
    pub const fn from_bits(a: bool, b: bool) -> Gf4 {
        Gf4((a as u8) | ((b as u8) << 1))
    }

    /// The a-bit of φ(x).
    #[inline]
    pub const fn a(self) -> bool {
        self.0 & 1 != 0
    }

    /// The b-bit of φ(x); equals Tr(x).
    #[inline]
    pub const fn b(self) -> bool {
        self.0 & 2 != 0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Field addition (characteristic 2).
    #[inline]
    pub const fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }

    /// Field multiplication with ω² = ω + 1.
    #[inline]
    pub const fn mul(self, rhs: Gf4) -> Gf4 {
        // Index by (a + 2b); table rows follow Gf4::ALL order.
        const TABLE: [[u8; 4]; 4] = [
            [0b00, 0b00, 0b00, 0b00],
            [0b00, 0b01, 0b10, 0b11],
            [0b00, 0b10, 0b11, 0b01], // ω·ω = ω², ω·ω² = 1
            [0b00, 0b11, 0b01, 0b10], // ω²·ω² = ω
        ];
        Gf4(TABLE[self.0 as usize][rhs.0 as usize])
    }

    /// Conjugation x̄ = x²; swaps ω and ω².
    #[inline]
    pub const fn conj(self) -> Gf4 {
        // (a, b) ↦ (a + b, b)
        Gf4(self.0 ^ ((self.0 >> 1) & 1))
    }

    /// Tr(x) = x + x̄ as a bit; 1 exactly for ω and ω².
    #[inline]
    pub const fn trace(self) -> u8 {
        self.0 >> 1
    }

    /// The symbol used in generator-matrix text: `0 1 w W`.
    pub fn symbol(self) -> char {
        match self.0 {
            0b00 => '0',
            0b01 => '1',
            0b10 => 'w',
            _ => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Result<Gf4> {
        match c {
            '0' => Ok(Gf4::ZERO),
            '1' => Ok(Gf4::ONE),
            'w' => Ok(Gf4::OMEGA),
            'W' => Ok(Gf4::OMEGA2),
            other => Err(Error::MatrixParse(format!("illegal symbol {other:?}"))),
        }
    }
}

impl std::ops::Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4::add(self, rhs)
    }
}

impl std::ops::Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4::mul(self, rhs)
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.0 {
            0b00 => "0",
            0b01 => "1",
            0b10 => "w",
            _ => "w2",
        };
        write!(f, "{name}")
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A length-n vector over GF(4), stored as the bit pair (a|b) = φ(v).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf4Vec {
    n: u8,
    a: u32,
    b: u32,
}

impl Gf4Vec {
    pub fn zero(n: usize) -> Result<Gf4Vec> {
        if n == 0 || n > MAX_N {
            return Err(Error::LengthOutOfRange(n));
        }
        Ok(Gf4Vec { n: n as u8, a: 0, b: 0 })
    }

    pub fn from_elems(elems: &[Gf4]) -> Result<Gf4Vec> {
        let mut v = Gf4Vec::zero(elems.len())?;
        for (i, &x) in elems.iter().enumerate() {
            v.set(i, x);
        }
        Ok(v)
    }

    /// Builds a vector from the two bit halves of its φ image.
    pub fn from_halves(n: usize, a: u32, b: u32) -> Result<Gf4Vec> {
        let v = Gf4Vec::zero(n)?;
        let mask = v.mask();
        Ok(Gf4Vec { n: v.n, a: a & mask, b: b & mask })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    #[inline]
    fn mask(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    #[inline]
    pub fn get(&self, i: usize) -> Gf4 {
        debug_assert!(i < self.len());
        Gf4::from_bits((self.a >> i) & 1 != 0, (self.b >> i) & 1 != 0)
    }

    pub fn set(&mut self, i: usize, x: Gf4) {
        debug_assert!(i < self.len());
        let bit = 1u32 << i;
        self.a = (self.a & !bit) | if x.a() { bit } else { 0 };
        self.b = (self.b & !bit) | if x.b() { bit } else { 0 };
    }

    /// Hamming weight: number of nonzero coordinates.
    #[inline]
    pub fn wt(&self) -> u32 {
        (self.a | self.b).count_ones()
    }

    /// Componentwise sum (the additive group operation).
    #[inline]
    pub fn add(&self, rhs: &Gf4Vec) -> Result<Gf4Vec> {
        if self.n != rhs.n {
            return Err(Error::LengthMismatch(self.len(), rhs.len()));
        }
        Ok(Gf4Vec { n: self.n, a: self.a ^ rhs.a, b: self.b ^ rhs.b })
    }

    /// φ(v) = (a|b) packed into a single word, a-bits low, b-bits high.
    #[inline]
    pub fn phi(&self) -> u64 {
        self.a as u64 | ((self.b as u64) << self.n)
    }

    /// Inverse of [`Gf4Vec::phi`]: φ⁻¹(a|b) = a + ωb.
    pub fn phi_inv(n: usize, packed: u64) -> Result<Gf4Vec> {
        let v = Gf4Vec::zero(n)?;
        let mask = v.mask() as u64;
        if packed >> (2 * n) != 0 {
            return Err(Error::LengthMismatch(n, 64 - packed.leading_zeros() as usize));
        }
        Ok(Gf4Vec {
            n: v.n,
            a: (packed & mask) as u32,
            b: ((packed >> n) & mask) as u32,
        })
    }

    /// Hermitian trace inner product u ∗ v = Tr(u · v̄) = Σ Tr(uᵢ v̄ᵢ).
    ///
    /// Computed coordinate by coordinate through field arithmetic; the
    /// bit-level shortcut lives in [`symplectic`] and the equality of the two
    /// is a tested theorem, not an implementation detail.
    pub fn htip(&self, rhs: &Gf4Vec) -> Result<u8> {
        if self.n != rhs.n {
            return Err(Error::LengthMismatch(self.len(), rhs.len()));
        }
        let mut acc = 0u8;
        for i in 0..self.len() {
            acc ^= self.get(i).mul(rhs.get(i).conj()).trace();
        }
        Ok(acc)
    }
}

impl fmt::Debug for Gf4Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{:?}", self.get(i))?;
        }
        write!(f, ")")
    }
}

/// Symplectic inner product ⟨(a|b), (a′|b′)⟩ = a·b′ + b·a′ on GF(2)^{2n}.
///
/// `len` is the total number of bits (2n); it must be even.
pub fn symplectic(p: u64, q: u64, len: usize) -> Result<u8> {
    if len % 2 != 0 {
        return Err(Error::OddSymplecticLength(len));
    }
    let n = len / 2;
    let mask = (1u64 << n) - 1;
    let (pa, pb) = (p & mask, p >> n);
    let (qa, qb) = (q & mask, q >> n);
    Ok((((pa & qb).count_ones() + (pb & qa).count_ones()) & 1) as u8)
}
