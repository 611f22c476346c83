//! Dense GF(2) matrices with rows packed 64 columns to a word.

const WORD: usize = 64;

fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut out = Self::zeros(size, size);
        for i in 0..size {
            out.set(i, i, true);
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.row(i)[j / WORD] >> (j % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let word = &mut self.row_mut(i)[j / WORD];
        let bit = 1u64 << (j % WORD);
        if value {
            *word |= bit;
        } else {
            *word &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.row_mut(i)[j / WORD] ^= 1u64 << (j % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Row `i` of the product is the XOR of the rows of `rhs` selected by
    /// the set bits of row `i` of `self`.
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let stride = out.stride;
            let dst = &mut out.data[i * stride..(i + 1) * stride];
            for_each_set_bit(self.row(i), |k| xor_into(dst, rhs.row(k)));
        }
        out
    }

    pub fn kronecker(&self, rhs: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for_each_set_bit(self.row(i), |j| {
                for r in 0..rhs.rows {
                    let row = i * rhs.rows + r;
                    for_each_set_bit(rhs.row(r), |c| out.set(row, j * rhs.cols + c, true));
                }
            });
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut basis = BitEchelon::new(self.cols);
        let mut scratch = vec![0u64; self.stride];
        for i in 0..self.rows {
            scratch.copy_from_slice(self.row(i));
            basis.insert(&mut scratch);
        }
        basis.len()
    }

    /// Column indices of the nonzero entries, row by row.
    pub fn sparse_rows(&self) -> Vec<Vec<usize>> {
        (0..self.rows)
            .map(|i| {
                let mut cols = Vec::new();
                for_each_set_bit(self.row(i), |j| cols.push(j));
                cols
            })
            .collect()
    }

    /// `rank(N^j)` for `j = 1, 2, ...`, stopping at the first zero or as soon
    /// as the rank stops dropping (then `N` is not nilpotent).
    ///
    /// The row space of `N^(j+1)` is the row space of `N^j` multiplied by
    /// `N`, so only a reduced basis of it is carried from one power to the
    /// next.
    pub fn power_ranks(&self) -> Vec<usize> {
        assert_eq!(self.rows, self.cols);
        let sparse = self.sparse_rows();
        let mut basis = BitEchelon::new(self.cols);
        let mut scratch = vec![0u64; self.stride];
        for i in 0..self.rows {
            scratch.copy_from_slice(self.row(i));
            basis.insert(&mut scratch);
        }
        let mut ranks = vec![basis.len()];
        while !basis.is_empty() {
            let mut next = BitEchelon::new(self.cols);
            for v in basis.vectors() {
                scratch.fill(0);
                for_each_set_bit(v, |k| {
                    for &c in &sparse[k] {
                        scratch[c / WORD] ^= 1u64 << (c % WORD);
                    }
                });
                next.insert(&mut scratch);
            }
            let stalled = next.len() == basis.len();
            ranks.push(next.len());
            basis = next;
            if stalled {
                break;
            }
        }
        ranks
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as u32).collect())
            .collect()
    }
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn for_each_set_bit(words: &[u64], mut f: impl FnMut(usize)) {
    for (w, &word) in words.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            f(w * WORD + bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
    }
}

/// Row-echelon basis over GF(2), keyed by the lowest set column of each row.
#[derive(Debug, Clone)]
pub struct BitEchelon {
    stride: usize,
    rows: Vec<u64>,
    pivot_row: Vec<u32>,
}

const NO_PIVOT: u32 = u32::MAX;

impl BitEchelon {
    pub fn new(cols: usize) -> Self {
        BitEchelon {
            stride: words_for(cols),
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; cols],
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len() / self.stride.max(1)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[u64]> {
        self.rows.chunks_exact(self.stride.max(1))
    }

    /// Reduces `v` in place and keeps it if it is independent.
    pub fn insert(&mut self, v: &mut [u64]) -> bool {
        let stride = self.stride;
        let mut w = 0;
        while w < stride {
            let word = v[w];
            if word == 0 {
                w += 1;
                continue;
            }
            let col = w * WORD + word.trailing_zeros() as usize;
            let r = self.pivot_row[col];
            if r == NO_PIVOT {
                self.pivot_row[col] = self.len() as u32;
                self.rows.extend_from_slice(v);
                return true;
            }
            let start = r as usize * stride;
            // the pivot row is zero below word w
            xor_into(&mut v[w..], &self.rows[start + w..start + stride]);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_rank_small() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::zeros(4, 5).rank(), 0);
        let mut m = BitMatrix::zeros(2, 2);
        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            m.set(i, j, true);
        }
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut m = BitMatrix::zeros(3, 130);
        m.set(0, 129, true);
        m.set(1, 64, true);
        m.set(1, 129, true);
        m.set(2, 64, true);
        assert_eq!(m.rank(), 2);
        assert!(m.get(0, 129));
        m.flip(0, 129);
        assert!(!m.get(0, 129));
    }

    #[test]
    fn shift_power_ranks() {
        let mut shift = BitMatrix::zeros(3, 3);
        shift.set(0, 1, true);
        shift.set(1, 2, true);
        assert_eq!(shift.power_ranks(), vec![2, 1, 0]);
        assert_eq!(BitMatrix::identity(2).power_ranks(), vec![2, 2]);
    }
}
