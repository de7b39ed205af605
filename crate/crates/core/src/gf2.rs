//! Dense bit-matrix arithmetic over GF(2).
//!
//! Rows are packed into 64-bit words; rank is computed by row reduction with
//! column pivoting. Matrices here are small (faces of induced subcomplexes),
//! so no blocking or transposition tricks are needed.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        Gf2Matrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.rows && c < self.cols);
        self.bits[r * self.words_per_row + c / 64] |= 1u64 << (c % 64);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.bits[r * self.words_per_row + c / 64] >> (c % 64)) & 1 == 1
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = (src * self.words_per_row, dst * self.words_per_row);
        for w in 0..self.words_per_row {
            let v = self.bits[a + w];
            self.bits[b + w] ^= v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Rank by Gaussian elimination on a working copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let word = col / 64;
            let bit = 1u64 << (col % 64);
            let Some(found) = (pivot_row..m.rows)
                .find(|&r| m.bits[r * m.words_per_row + word] & bit != 0)
            else {
                continue;
            };
            if found != pivot_row {
                for w in 0..m.words_per_row {
                    m.bits.swap(
                        found * m.words_per_row + w,
                        pivot_row * m.words_per_row + w,
                    );
                }
            }
            for r in 0..m.rows {
                if r != pivot_row && m.bits[r * m.words_per_row + word] & bit != 0 {
                    m.xor_row_into(pivot_row, r);
                }
            }
            pivot_row += 1;
            rank += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        rank
    }

    /// Matrix product over GF(2); `self.cols` must equal `other.rows`.
    pub fn multiply(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let row = self.row(r);
            for k in 0..self.cols {
                if (row[k / 64] >> (k % 64)) & 1 == 1 {
                    let (a, b) = (k * other.words_per_row, r * out.words_per_row);
                    for w in 0..other.words_per_row {
                        out.bits[b + w] ^= other.bits[a + w];
                    }
                }
            }
        }
        out
    }
}
