//! Self-dual additive codes over GF(4) as canonical GF(2) row spaces.
//!
//! A code of length n is stored as the reduced row echelon form (fixed
//! column order a₁…aₙ b₁…bₙ) of the 2n-bit φ-images of its generators, so
//! two values are equal exactly when the codes are equal as sets. All
//! enumerative operations walk the 2^n codewords with a Gray code, one row
//! XOR per codeword.

use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vec};
use crate::graph::Graph;
use crate::MAX_N;
use std::fmt;

/// Type I / Type II split: Type II codes have even-weight codewords only.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CodeType {
    I,
    II,
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeType::I => write!(f, "I"),
            CodeType::II => write!(f, "II"),
        }
    }
}

impl std::str::FromStr for CodeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<CodeType> {
        match s {
            "I" => Ok(CodeType::I),
            "II" => Ok(CodeType::II),
            other => Err(Error::Invalid(format!("unknown code type {other:?}"))),
        }
    }
}

/// The weight distribution (A₀, …, Aₙ) of a length-n code.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightEnumerator(Vec<u64>);

impl WeightEnumerator {
    pub fn from_coeffs(coeffs: Vec<u64>) -> WeightEnumerator {
        WeightEnumerator(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    /// Length of the underlying code.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_type2(&self) -> bool {
        self.0.iter().skip(1).step_by(2).all(|&c| c == 0)
    }

    /// Coefficientwise polynomial product; the enumerator of a direct sum.
    pub fn product(&self, rhs: &WeightEnumerator) -> WeightEnumerator {
        let mut out = vec![0u64; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        WeightEnumerator(out)
    }

    /// Comma-separated coefficients, the catalog `wd=` field.
    pub fn to_coeff_string(&self) -> String {
        self.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn parse_coeff_string(s: &str) -> Result<WeightEnumerator> {
        let coeffs: std::result::Result<Vec<u64>, _> = s.split(',').map(|t| t.parse()).collect();
        coeffs
            .map(WeightEnumerator)
            .map_err(|_| Error::Invalid(format!("bad weight distribution {s:?}")))
    }

    /// Renders `x^6 + 45x^2y^4 + 18y^6` style polynomials.
    pub fn to_polynomial_string(&self) -> String {
        let n = self.n();
        let mut terms = Vec::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut t = String::new();
            if c != 1 || i == n && n == 0 {
                t.push_str(&c.to_string());
            }
            let xp = n - i;
            if xp > 0 {
                t.push('x');
                if xp > 1 {
                    t.push_str(&format!("^{xp}"));
                }
            }
            if i > 0 {
                t.push('y');
                if i > 1 {
                    t.push_str(&format!("^{i}"));
                }
            }
            if t.is_empty() {
                t.push('1');
            }
            terms.push(t);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// A self-dual (n, 2^n) additive code over GF(4), held as the canonical
/// reduced echelon basis of its binary (A|B) image.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdditiveCode {
    n: u8,
    rows: Vec<u64>,
}

/// Reduced row echelon form over GF(2), columns scanned low bit first.
/// Returns the rank; `rows` is left holding the nonzero rows sorted by pivot.
pub(crate) fn rref(rows: &mut Vec<u64>, ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let bit = 1u64 << col;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r] & bit != 0 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rank
}

/// Rank of a GF(2) matrix without keeping the reduced rows.
pub(crate) fn rank(mut rows: Vec<u64>, ncols: usize) -> usize {
    rref(&mut rows, ncols)
}

/// The rows of Γ + ωI as packed (a|b) words: row i has a-half `adj[i]` and
/// b-half `e_i`.
pub(crate) fn graph_code_rows(g: &Graph) -> Vec<u64> {
    let n = g.n();
    (0..n).map(|i| g.neighbors(i) as u64 | (1u64 << (n + i))).collect()
}

#[inline]
pub(crate) fn packed_weight(packed: u64, n: usize) -> u32 {
    let mask = (1u64 << n) - 1;
    ((packed | (packed >> n)) & mask).count_ones()
}

impl AdditiveCode {
    /// Canonicalizes the GF(2) span of the given generators and validates
    /// self-duality: rank must be n and all pairs must be orthogonal under
    /// the Hermitian trace inner product.
    pub fn from_generators(gens: &[Gf4Vec]) -> Result<AdditiveCode> {
        let Some(first) = gens.first() else {
            return Err(Error::Invalid("empty generator list".into()));
        };
        let n = first.len();
        for g in gens {
            if g.len() != n {
                return Err(Error::LengthMismatch(n, g.len()));
            }
        }
        for i in 0..gens.len() {
            for j in i..gens.len() {
                if gens[i].htip(&gens[j])? != 0 {
                    return Err(Error::NotSelfOrthogonal { i, j });
                }
            }
        }
        let mut rows: Vec<u64> = gens.iter().map(|g| g.phi()).collect();
        let found = rref(&mut rows, 2 * n);
        if found != n {
            return Err(Error::RankDeficient { expected: n, found });
        }
        Ok(AdditiveCode { n: n as u8, rows })
    }

    /// Canonicalizes packed (a|b) rows that are already known to span a
    /// self-dual code (used on the standardization fast paths, where
    /// self-duality is a theorem). Checked in debug builds regardless.
    pub(crate) fn from_packed_rows_unchecked(n: usize, mut rows: Vec<u64>) -> AdditiveCode {
        let r = rref(&mut rows, 2 * n);
        debug_assert_eq!(r, n);
        debug_assert!({
            let ok = rows.iter().all(|&p| {
                rows.iter()
                    .all(|&q| crate::gf4::symplectic(p, q, 2 * n).unwrap() == 0)
            });
            ok
        });
        AdditiveCode { n: n as u8, rows }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The canonical basis as packed (a|b) words, sorted by pivot column.
    pub fn rows_packed(&self) -> &[u64] {
        &self.rows
    }

    pub fn basis(&self) -> Vec<Gf4Vec> {
        self.rows
            .iter()
            .map(|&r| Gf4Vec::phi_inv(self.n(), r).unwrap())
            .collect()
    }

    /// Membership test by reduction against the canonical basis.
    pub fn contains(&self, v: &Gf4Vec) -> bool {
        if v.len() != self.n() {
            return false;
        }
        let mut w = v.phi();
        for &row in &self.rows {
            let pivot = row.trailing_zeros();
            if w & (1 << pivot) != 0 {
                w ^= row;
            }
        }
        w == 0
    }

    /// Calls `f` with every codeword (packed) and its weight; the zero word
    /// comes first.
    pub fn for_each_codeword<F: FnMut(u64, u32)>(&self, mut f: F) {
        let n = self.n();
        f(0, 0);
        let mut cw = 0u64;
        for idx in 1u64..(1u64 << n) {
            cw ^= self.rows[idx.trailing_zeros() as usize];
            f(cw, packed_weight(cw, n));
        }
    }

    /// All codewords as vectors. Exponential; for tests and tiny n.
    pub fn codewords(&self) -> Vec<Gf4Vec> {
        let mut out = Vec::with_capacity(1 << self.n());
        self.for_each_codeword(|cw, _| out.push(Gf4Vec::phi_inv(self.n(), cw).unwrap()));
        out
    }

    /// Full weight distribution and minimum distance in one exhaustive pass.
    pub fn weight_profile(&self) -> (WeightEnumerator, u32) {
        let n = self.n();
        let mut counts = vec![0u64; n + 1];
        let mut min = u32::MAX;
        self.for_each_codeword(|_, w| {
            counts[w as usize] += 1;
        });
        for w in 1..=n {
            if counts[w] > 0 {
                min = w as u32;
                break;
            }
        }
        (WeightEnumerator(counts), min)
    }

    pub fn weight_enumerator(&self) -> WeightEnumerator {
        self.weight_profile().0
    }

    /// Smallest nonzero codeword weight.
    pub fn min_distance(&self) -> u32 {
        self.weight_profile().1
    }

    pub fn code_type(&self) -> CodeType {
        if self.weight_enumerator().is_type2() {
            CodeType::II
        } else {
            CodeType::I
        }
    }

    /// Concatenation construction: an (n + n′, 2^{n+n′}, min{d, d′}) code.
    pub fn direct_sum(&self, rhs: &AdditiveCode) -> Result<AdditiveCode> {
        let (n1, n2) = (self.n(), rhs.n());
        let n = n1 + n2;
        if n > MAX_N {
            return Err(Error::LengthOutOfRange(n));
        }
        let mask1 = (1u64 << n1) - 1;
        let mask2 = (1u64 << n2) - 1;
        let mut rows = Vec::with_capacity(n);
        for &r in &self.rows {
            let (a, b) = (r & mask1, r >> n1);
            rows.push(a | (b << n));
        }
        for &r in &rhs.rows {
            let (a, b) = (r & mask2, r >> n2);
            rows.push((a << n1) | (b << (n + n1)));
        }
        Ok(AdditiveCode::from_packed_rows_unchecked(n, rows))
    }

    /// Applies a coordinate permutation: coordinate i moves to `perm[i]`.
    pub fn permuted(&self, perm: &[u8]) -> AdditiveCode {
        let n = self.n();
        debug_assert_eq!(perm.len(), n);
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut out = 0u64;
                for i in 0..n {
                    let p = perm[i] as usize;
                    out |= ((r >> i) & 1) << p;
                    out |= ((r >> (n + i)) & 1) << (n + p);
                }
                out
            })
            .collect();
        AdditiveCode::from_packed_rows_unchecked(n, rows)
    }

    /// Scales coordinate i by ω: (a, b) ↦ (b, a + b).
    pub fn scaled_omega(&self, i: usize) -> AdditiveCode {
        let n = self.n();
        let rows = self.rows.iter().map(|&r| scale_omega_packed(r, i, n)).collect();
        AdditiveCode::from_packed_rows_unchecked(n, rows)
    }

    /// Conjugates coordinate i: (a, b) ↦ (a + b, b).
    pub fn conjugated(&self, i: usize) -> AdditiveCode {
        let n = self.n();
        let rows = self.rows.iter().map(|&r| conj_packed(r, i, n)).collect();
        AdditiveCode::from_packed_rows_unchecked(n, rows)
    }
}

#[inline]
pub(crate) fn scale_omega_packed(r: u64, i: usize, n: usize) -> u64 {
    let a = (r >> i) & 1;
    let b = (r >> (n + i)) & 1;
    let (na, nb) = (b, a ^ b);
    r ^ ((a ^ na) << i) ^ ((b ^ nb) << (n + i))
}

#[inline]
pub(crate) fn conj_packed(r: u64, i: usize, n: usize) -> u64 {
    let b = (r >> (n + i)) & 1;
    r ^ (b << i)
}

impl fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdditiveCode(n={}; ", self.n())?;
        for (k, v) in self.basis().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            for i in 0..v.len() {
                write!(f, "{}", v.get(i).symbol())?;
            }
        }
        write!(f, ")")
    }
}

/// The prefix (A₀, …, A_j) of the weight distribution of the graph code of
/// `g`, found by combining at most `j` rows of Γ + ωI: a sum of i rows has
/// weight at least i, so short combinations see every light codeword.
pub fn partial_weight_distribution(g: &Graph, j: usize) -> Vec<u64> {
    let n = g.n();
    let j = j.min(n);
    let rows = graph_code_rows(g);
    let mut counts = vec![0u64; j + 1];
    counts[0] = 1;
    // DFS over row subsets of size <= j with an XOR accumulator.
    fn rec(rows: &[u64], n: usize, j: usize, start: usize, depth: usize, acc: u64, counts: &mut [u64]) {
        for i in start..rows.len() {
            let cw = acc ^ rows[i];
            let w = packed_weight(cw, n) as usize;
            if w <= j {
                counts[w] += 1;
            }
            if depth + 1 < j {
                rec(rows, n, j, i + 1, depth + 1, cw, counts);
            }
        }
    }
    if j > 0 {
        rec(&rows, n, j, 0, 0, 0, &mut counts);
    }
    counts
}

/// Upper bound on the minimum distance of a self-dual code of the given
/// length and type (Rains–Sloane).
pub fn distance_bound(n: usize, ty: CodeType) -> Result<u32> {
    if n == 0 {
        return Err(Error::LengthOutOfRange(0));
    }
    let base = 2 * (n as u32 / 6);
    match ty {
        CodeType::I => Ok(match n % 6 {
            0 => base + 1,
            5 => base + 3,
            _ => base + 2,
        }),
        CodeType::II => {
            if n % 2 != 0 {
                Err(Error::TypeIiOddLength(n))
            } else {
                Ok(base + 2)
            }
        }
    }
}

/// A code is extremal when its minimum distance meets the bound for its type.
pub fn is_extremal(code: &AdditiveCode) -> bool {
    let (we, d) = code.weight_profile();
    let ty = if we.is_type2() { CodeType::II } else { CodeType::I };
    distance_bound(code.n(), ty).map(|b| b == d).unwrap_or(false)
}

/// Parses the generator-matrix text format: one row per line, symbols
/// `0 1 w W` separated by single spaces.
pub fn parse_gf4_matrix(text: &str) -> Result<Vec<Gf4Vec>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut elems = Vec::new();
        for tok in line.split(' ') {
            let mut chars = tok.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(Error::MatrixParse(format!("line {}: bad token {tok:?}", lineno + 1)));
            };
            elems.push(Gf4::from_symbol(c)?);
        }
        let v = Gf4Vec::from_elems(&elems)
            .map_err(|e| Error::MatrixParse(format!("line {}: {e}", lineno + 1)))?;
        if let Some(prev) = rows.last() {
            let prev: &Gf4Vec = prev;
            if prev.len() != v.len() {
                return Err(Error::MatrixParse(format!(
                    "line {}: row length {} differs from {}",
                    lineno + 1,
                    v.len(),
                    prev.len()
                )));
            }
        }
        rows.push(v);
    }
    if rows.is_empty() {
        return Err(Error::MatrixParse("empty matrix".into()));
    }
    Ok(rows)
}

pub fn format_gf4_matrix(rows: &[Gf4Vec]) -> String {
    let mut out = String::new();
    for v in rows {
        for i in 0..v.len() {
            if i > 0 {
                out.push(' ');
            }
            out.push(v.get(i).symbol());
        }
        out.push('\n');
    }
    out
}
