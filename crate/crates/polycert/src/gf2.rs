//! Dense bit-packed vectors and matrices over the two-element field.
//!
//! Rows are packed into `u64` words, least significant bit first. Addition
//! is XOR, so every element is its own negative and all arithmetic is
//! exact. Equality and ordering are defined on the logical bits only; the
//! invariant that padding bits stay zero makes the derived impls correct.
//!
//! Besides the generic operations this module builds the specific matrices
//! the rest of the crate is founded on: the shift-with-ones-row circulant,
//! the pair of involutory reflections whose product is that circulant, and
//! the partial-sum basis matrix.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A column vector over the two-element field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    dim: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    /// The zero vector of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "vector dimension must be positive");
        Gf2Vector {
            dim,
            words: vec![0; words_for(dim)],
        }
    }

    /// The standard basis vector with a single one at `index`.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Gf2Vector::zeros(dim);
        v.set(index, true);
        v
    }

    /// Builds a vector from a slice of 0/1 entries.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Gf2Vector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b != 0);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.dim);
        self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.dim);
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Sum (XOR) of the two vectors.
    pub fn xor(&self, other: &Gf2Vector) -> Gf2Vector {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        Gf2Vector {
            dim: self.dim,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn xor_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({self})")
    }
}

/// A matrix over the two-element field, row-major with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    words: Vec<u64>,
}

/// Outcome of Gaussian elimination on a square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    /// Determinant over the field: true means 1.
    pub det: bool,
    pub rank: usize,
    /// Present exactly when the determinant is 1.
    pub inverse: Option<Gf2Matrix>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        let wpr = words_for(cols);
        Gf2Matrix {
            rows,
            cols,
            wpr,
            words: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries. Rows must all have the
    /// same nonzero length.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        let mut m = Gf2Matrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &b) in row.iter().enumerate() {
                m.set(r, c, b != 0);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols);
        self.words[row * self.wpr + col / WORD_BITS] >> (col % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols);
        let mask = 1u64 << (col % WORD_BITS);
        let w = &mut self.words[row * self.wpr + col / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Gf2Matrix::identity(self.rows)
    }

    pub fn row_vec(&self, row: usize) -> Gf2Vector {
        assert!(row < self.rows);
        Gf2Vector {
            dim: self.cols,
            words: self.words[row * self.wpr..(row + 1) * self.wpr].to_vec(),
        }
    }

    pub fn col_vec(&self, col: usize) -> Gf2Vector {
        let mut v = Gf2Vector::zeros(self.rows);
        for r in 0..self.rows {
            v.set(r, self.get(r, col));
        }
        v
    }

    pub fn set_col(&mut self, col: usize, v: &Gf2Vector) {
        assert_eq!(v.dim, self.rows, "column length mismatch");
        for r in 0..self.rows {
            self.set(r, col, v.get(r));
        }
    }

    /// Entrywise sum (XOR) of two matrices of equal shape.
    pub fn add(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "matrix shape mismatch in add"
        );
        Gf2Matrix {
            rows: self.rows,
            cols: self.cols,
            wpr: self.wpr,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    /// Matrix product. Inner dimensions must agree.
    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch in mul");
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let dst = r * out.wpr;
            for w in 0..self.wpr {
                let mut bits = self.words[r * self.wpr + w];
                while bits != 0 {
                    let k = w * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let src = k * other.wpr;
                    for j in 0..other.wpr {
                        out.words[dst + j] ^= other.words[src + j];
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &Gf2Vector) -> Gf2Vector {
        assert_eq!(self.cols, v.dim, "matrix/vector shape mismatch");
        let mut out = Gf2Vector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for w in 0..self.wpr {
                acc ^= self.words[r * self.wpr + w] & v.words[w];
            }
            out.set(r, acc.count_ones() % 2 == 1);
        }
        out
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for w in 0..self.wpr {
                let mut bits = self.words[r * self.wpr + w];
                while bits != 0 {
                    let c = w * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// `self` raised to the `k`-th power by repeated squaring; the zeroth
    /// power is the identity. Only defined for square matrices.
    pub fn pow(&self, k: u64) -> Result<Gf2Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = Gf2Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// Rank by Gaussian elimination; any shape.
    pub fn rank(&self) -> usize {
        let mut work = self.words.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, mask) = (col / WORD_BITS, 1u64 << (col % WORD_BITS));
            let Some(pivot) = (rank..self.rows).find(|&r| work[r * self.wpr + w] & mask != 0)
            else {
                continue;
            };
            for j in 0..self.wpr {
                work.swap(rank * self.wpr + j, pivot * self.wpr + j);
            }
            for r in 0..self.rows {
                if r != rank && work[r * self.wpr + w] & mask != 0 {
                    for j in 0..self.wpr {
                        work[r * self.wpr + j] ^= work[rank * self.wpr + j];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Full Gauss-Jordan elimination on a square matrix, producing the
    /// determinant, the rank, and the inverse when the determinant is 1.
    /// Pivoting picks the first row with a nonzero bit in the pivot
    /// column; the arithmetic is exact, so no tolerances are involved.
    pub fn det_rank_inverse(&self) -> Result<Elimination> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut work = self.words.clone();
        let mut aug = Gf2Matrix::identity(n);
        let mut rank = 0;
        for col in 0..n {
            let (w, mask) = (col / WORD_BITS, 1u64 << (col % WORD_BITS));
            let Some(pivot) = (rank..n).find(|&r| work[r * self.wpr + w] & mask != 0) else {
                continue;
            };
            for j in 0..self.wpr {
                work.swap(rank * self.wpr + j, pivot * self.wpr + j);
                aug.words.swap(rank * aug.wpr + j, pivot * aug.wpr + j);
            }
            for r in 0..n {
                if r != rank && work[r * self.wpr + w] & mask != 0 {
                    for j in 0..self.wpr {
                        work[r * self.wpr + j] ^= work[rank * self.wpr + j];
                        aug.words[r * aug.wpr + j] ^= aug.words[rank * aug.wpr + j];
                    }
                }
            }
            rank += 1;
        }
        let det = rank == n;
        Ok(Elimination {
            det,
            rank,
            inverse: det.then_some(aug),
        })
    }

    pub fn det(&self) -> Result<bool> {
        Ok(self.det_rank_inverse()?.det)
    }

    pub fn inverse(&self) -> Result<Option<Gf2Matrix>> {
        Ok(self.det_rank_inverse()?.inverse)
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", self.get(r, c) as u8)?;
            }
            if r + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}:", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

fn check_n(n: usize) -> Result<usize> {
    if n < 3 {
        Err(Error::ParameterTooSmall(n))
    } else {
        Ok(n - 1)
    }
}

/// The (n-1)x(n-1) circulant with ones on the superdiagonal and an
/// all-ones last row, zeros elsewhere.
pub fn circulant(n: usize) -> Result<Gf2Matrix> {
    let m = check_n(n)?;
    let mut a = Gf2Matrix::zeros(m, m);
    for i in 0..m - 1 {
        a.set(i, i + 1, true);
    }
    for c in 0..m {
        a.set(m - 1, c, true);
    }
    Ok(a)
}

/// The two involutory reflection matrices whose product is `circulant(n)`.
///
/// The first has the reversed identity in its leading rows (final column
/// zero there) and an all-ones last row; the second is the anti-diagonal
/// identity. Together they generate a dihedral group of order 2n inside
/// the general linear group of the (n-1)-dimensional space.
pub fn reflection_pair(n: usize) -> Result<(Gf2Matrix, Gf2Matrix)> {
    let m = check_n(n)?;
    let mut u = Gf2Matrix::zeros(m, m);
    for i in 0..m - 1 {
        u.set(i, m - 2 - i, true);
    }
    for c in 0..m {
        u.set(m - 1, c, true);
    }
    let mut v = Gf2Matrix::zeros(m, m);
    for i in 0..m {
        v.set(i, m - 1 - i, true);
    }
    Ok((u, v))
}

/// The (n-1)x(n-1) matrix whose k-th column is the sum of the first k
/// powers of the circulant applied to the first unit vector. Its columns
/// form a basis of the space; it is column-equivalent to the Krylov
/// matrix of the circulant at that vector.
pub fn partial_sum_matrix(n: usize) -> Result<Gf2Matrix> {
    let m = check_n(n)?;
    let a = circulant(n)?;
    let mut b = Gf2Matrix::zeros(m, m);
    let mut power = Gf2Vector::unit(m, 0);
    let mut sum = Gf2Vector::zeros(m);
    for k in 0..m {
        sum.xor_assign(&power);
        b.set_col(k, &sum);
        power = a.mul_vec(&power);
    }
    Ok(b)
}

/// True exactly when the sum of the first n powers (exponents 0 through
/// n-1) of `circulant(n)` is the zero matrix.
pub fn annihilator_check(n: usize) -> Result<bool> {
    let m = check_n(n)?;
    let a = circulant(n)?;
    let mut sum = Gf2Matrix::zeros(m, m);
    let mut power = Gf2Matrix::identity(m);
    for _ in 0..n {
        sum = sum.add(&power);
        power = power.mul(&a);
    }
    Ok(sum.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Multiplication the slow way, bit by bit. Oracle for `mul`.
    fn naive_mul(a: &Gf2Matrix, b: &Gf2Matrix) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(a.rows(), b.cols());
        for r in 0..a.rows() {
            for c in 0..b.cols() {
                let mut bit = false;
                for k in 0..a.cols() {
                    bit ^= a.get(r, k) && b.get(k, c);
                }
                out.set(r, c, bit);
            }
        }
        out
    }

    /// Power by naive iterated multiplication. Oracle for `pow`.
    fn naive_pow(m: &Gf2Matrix, k: u64) -> Gf2Matrix {
        let mut out = Gf2Matrix::identity(m.rows());
        for _ in 0..k {
            out = naive_mul(&out, m);
        }
        out
    }

    /// Rank via the size of the column span, enumerated exhaustively.
    /// Independent of the elimination code path.
    fn span_rank(m: &Gf2Matrix) -> usize {
        let cols: Vec<Gf2Vector> = (0..m.cols()).map(|c| m.col_vec(c)).collect();
        let mut span = std::collections::HashSet::new();
        for mask in 0u32..1 << cols.len() {
            let mut acc = Gf2Vector::zeros(m.rows());
            for (i, col) in cols.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.xor_assign(col);
                }
            }
            span.insert(acc);
        }
        span.len().trailing_zeros() as usize
    }

    #[test]
    fn circulant_small_cases() {
        assert_eq!(
            circulant(3).unwrap(),
            Gf2Matrix::from_rows(&[&[0, 1], &[1, 1]])
        );
        assert_eq!(
            circulant(4).unwrap(),
            Gf2Matrix::from_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
        );
    }

    #[test]
    fn circulant_rejects_small_n() {
        assert!(matches!(circulant(2), Err(Error::ParameterTooSmall(2))));
        assert!(matches!(circulant(0), Err(Error::ParameterTooSmall(0))));
    }

    #[test]
    fn circulant_maps_first_unit_to_last() {
        let a = circulant(3).unwrap();
        let v = Gf2Vector::unit(2, 0);
        assert_eq!(a.mul_vec(&v), Gf2Vector::from_bits(&[0, 1]));
    }

    #[test]
    fn pow_zero_is_identity() {
        let a = circulant(7).unwrap();
        assert!(a.pow(0).unwrap().is_identity());
    }

    #[test]
    fn pow_rejects_non_square() {
        let m = Gf2Matrix::zeros(2, 3);
        assert!(matches!(m.pow(2), Err(Error::NotSquare { rows: 2, cols: 3 })));
    }

    #[test]
    fn circulant_square_matches_hand_value() {
        let a = circulant(4).unwrap();
        let expected = Gf2Matrix::from_rows(&[&[0, 0, 1], &[1, 1, 1], &[1, 0, 0]]);
        assert_eq!(a.pow(2).unwrap(), expected);
        assert_eq!(naive_pow(&a, 2), expected);
    }

    /// The k-th power of the circulant has a block shape: a zero block
    /// next to a shifted identity on top, a row of ones, then a small
    /// identity next to a zero block. Assembled independently here.
    fn circulant_power_blocks(n: usize, k: usize) -> Gf2Matrix {
        let m = n - 1;
        let mut out = Gf2Matrix::zeros(m, m);
        for i in 0..m - k {
            out.set(i, k + i, true);
        }
        for c in 0..m {
            out.set(m - k, c, true);
        }
        for i in 0..k - 1 {
            out.set(m - k + 1 + i, i, true);
        }
        out
    }

    #[test]
    fn circulant_powers_match_block_formula() {
        for n in 3..=16 {
            let a = circulant(n).unwrap();
            for k in 1..=n - 1 {
                let fast = a.pow(k as u64).unwrap();
                assert_eq!(fast, circulant_power_blocks(n, k), "n={n} k={k}");
                assert_eq!(fast, naive_pow(&a, k as u64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn circulant_power_n_minus_one_block_form() {
        // Ones row on top, identity shifted below, zero last column.
        let a = circulant(5).unwrap();
        let p = a.pow(4).unwrap();
        let expected = Gf2Matrix::from_rows(&[
            &[1, 1, 1, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn reflections_small_case() {
        let (u, v) = reflection_pair(3).unwrap();
        assert_eq!(u, Gf2Matrix::from_rows(&[&[1, 0], &[1, 1]]));
        assert_eq!(v, Gf2Matrix::from_rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(u.mul(&v), circulant(3).unwrap());
    }

    #[test]
    fn reflections_generate_dihedral_relations() {
        for n in 3..=16 {
            let (u, v) = reflection_pair(n).unwrap();
            assert!(u.mul(&u).is_identity(), "n={n}");
            assert!(v.mul(&v).is_identity(), "n={n}");
            let a = u.mul(&v);
            assert_eq!(a, circulant(n).unwrap(), "n={n}");
            assert!(a.pow(n as u64).unwrap().is_identity(), "n={n}");
            for k in 1..n {
                assert!(!a.pow(k as u64).unwrap().is_identity(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn partial_sum_small_case() {
        let b = partial_sum_matrix(3).unwrap();
        assert_eq!(b.col_vec(0), Gf2Vector::from_bits(&[1, 0]));
        assert_eq!(b.col_vec(1), Gf2Vector::from_bits(&[1, 1]));
        assert!(b.det().unwrap());
    }

    #[test]
    fn partial_sum_rank_matches_span_oracle() {
        for n in 3..=8 {
            let b = partial_sum_matrix(n).unwrap();
            assert_eq!(b.rank(), n - 1, "n={n}");
            assert_eq!(span_rank(&b), n - 1, "n={n}");
        }
    }

    #[test]
    fn partial_sum_invertible_through_16() {
        for n in 3..=16 {
            let e = partial_sum_matrix(n).unwrap().det_rank_inverse().unwrap();
            assert!(e.det, "n={n}");
            let b = partial_sum_matrix(n).unwrap();
            assert!(b.mul(&e.inverse.unwrap()).is_identity(), "n={n}");
        }
    }

    #[test]
    fn elimination_on_identity_and_zero() {
        let e = Gf2Matrix::identity(5).det_rank_inverse().unwrap();
        assert!(e.det);
        assert_eq!(e.rank, 5);
        assert_eq!(e.inverse.unwrap(), Gf2Matrix::identity(5));

        let z = Gf2Matrix::zeros(3, 3).det_rank_inverse().unwrap();
        assert!(!z.det);
        assert_eq!(z.rank, 0);
        assert!(z.inverse.is_none());
    }

    #[test]
    fn annihilator_holds_and_partial_sums_do_not() {
        for n in [3, 5, 8, 12, 16] {
            assert!(annihilator_check(n).unwrap(), "n={n}");
        }
        // Summing one power short leaves a nonzero matrix.
        let n = 5;
        let a = circulant(n).unwrap();
        let mut sum = Gf2Matrix::zeros(n - 1, n - 1);
        let mut power = Gf2Matrix::identity(n - 1);
        for _ in 0..n - 1 {
            sum = sum.add(&power);
            power = power.mul(&a);
        }
        assert!(!sum.is_zero());
    }

    #[test]
    fn vector_addition_is_self_inverse() {
        let v = Gf2Vector::from_bits(&[1, 0, 1, 1, 0, 1, 0]);
        assert!(v.xor(&v).is_zero());
    }

    #[test]
    fn display_renders_bits() {
        let a = circulant(3).unwrap();
        assert_eq!(a.to_string(), "01\n11");
        assert_eq!(Gf2Vector::from_bits(&[0, 1]).to_string(), "01");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_square(max_dim: usize) -> impl Strategy<Value = Gf2Matrix> {
            (1..=max_dim).prop_flat_map(|n| {
                proptest::collection::vec(proptest::bool::ANY, n * n).prop_map(move |bits| {
                    let mut m = Gf2Matrix::zeros(n, n);
                    for r in 0..n {
                        for c in 0..n {
                            m.set(r, c, bits[r * n + c]);
                        }
                    }
                    m
                })
            })
        }

        proptest! {
            #[test]
            fn pow_matches_naive(m in arb_square(8), k in 0u64..=32) {
                prop_assert_eq!(m.pow(k).unwrap(), naive_pow(&m, k));
            }

            #[test]
            fn inverse_roundtrip(m in arb_square(9)) {
                let e = m.det_rank_inverse().unwrap();
                if let Some(inv) = e.inverse {
                    prop_assert!(m.mul(&inv).is_identity());
                    prop_assert!(inv.mul(&m).is_identity());
                } else {
                    prop_assert!(e.rank < m.rows());
                }
            }

            #[test]
            fn rank_matches_span_oracle(m in arb_square(6)) {
                prop_assert_eq!(m.rank(), span_rank(&m));
            }
        }
    }
}
