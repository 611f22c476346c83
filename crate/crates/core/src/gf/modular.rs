//! Dense GF(p) matrices, one residue per entry.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u32>,
}

pub(crate) fn mul_mod(x: u32, y: u32, p: u32) -> u32 {
    ((x as u64 * y as u64) % p as u64) as u32
}

pub(crate) fn inv_mod(x: u32, p: u32) -> u32 {
    debug_assert!(!x.is_multiple_of(p));
    // Fermat: x^(p-2)
    let mut base = x % p;
    let mut exp = p - 2;
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// `dst += factor * src (mod p)`
fn axpy(dst: &mut [u32], factor: u32, src: &[u32], p: u32) {
    let p64 = p as u64;
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = ((*d as u64 + factor as u64 * s as u64) % p64) as u32;
    }
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        ModMatrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(size: usize, p: u32) -> Self {
        let mut out = Self::zeros(size, size, p);
        for i in 0..size {
            out.set(i, i, 1);
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.data[i * self.cols + j] = value % self.p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, rhs: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, rhs.rows);
        assert_eq!(self.p, rhs.p);
        let mut out = ModMatrix::zeros(self.rows, rhs.cols, self.p);
        for i in 0..self.rows {
            let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, &x) in self.row(i).iter().enumerate() {
                if x != 0 {
                    axpy(dst, x, rhs.row(k), self.p);
                }
            }
        }
        out
    }

    pub fn kronecker(&self, rhs: &ModMatrix) -> ModMatrix {
        assert_eq!(self.p, rhs.p);
        let mut out = ModMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if x == 0 {
                    continue;
                }
                for r in 0..rhs.rows {
                    for c in 0..rhs.cols {
                        let v = mul_mod(x, rhs.get(r, c), self.p);
                        out.set(i * rhs.rows + r, j * rhs.cols + c, v);
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut basis = ModEchelon::new(self.cols, self.p);
        let mut scratch = vec![0u32; self.cols];
        for i in 0..self.rows {
            scratch.copy_from_slice(self.row(i));
            basis.insert(&mut scratch);
        }
        basis.len()
    }

    /// `(column, value)` pairs of the nonzero entries, row by row.
    pub fn sparse_rows(&self) -> Vec<Vec<(usize, u32)>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| (j, x))
                    .collect()
            })
            .collect()
    }

    /// Same contract as the GF(2) version: `rank(N^j)` for `j >= 1` until
    /// zero, or until the rank stalls.
    pub fn power_ranks(&self) -> Vec<usize> {
        assert_eq!(self.rows, self.cols);
        let p = self.p;
        let sparse = self.sparse_rows();
        let mut basis = ModEchelon::new(self.cols, p);
        let mut scratch = vec![0u32; self.cols];
        for i in 0..self.rows {
            scratch.copy_from_slice(self.row(i));
            basis.insert(&mut scratch);
        }
        let mut ranks = vec![basis.len()];
        while !basis.is_empty() {
            let mut next = ModEchelon::new(self.cols, p);
            for v in basis.vectors() {
                scratch.fill(0);
                for (k, &x) in v.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for &(c, y) in &sparse[k] {
                        scratch[c] = (scratch[c] + mul_mod(x, y, p)) % p;
                    }
                }
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
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Row-echelon basis over GF(p) with monic pivots at the lowest nonzero column.
#[derive(Debug, Clone)]
pub struct ModEchelon {
    cols: usize,
    p: u32,
    rows: Vec<u32>,
    pivot_row: Vec<Option<usize>>,
}

impl ModEchelon {
    pub fn new(cols: usize, p: u32) -> Self {
        ModEchelon {
            cols,
            p,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len().checked_div(self.cols).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[u32]> {
        self.rows.chunks_exact(self.cols.max(1))
    }

    pub fn insert(&mut self, v: &mut [u32]) -> bool {
        let p = self.p;
        for col in 0..self.cols {
            let x = v[col];
            if x == 0 {
                continue;
            }
            match self.pivot_row[col] {
                Some(r) => {
                    let start = r * self.cols;
                    // subtract x times the monic pivot row
                    axpy(
                        &mut v[col..],
                        p - x,
                        &self.rows[start + col..start + self.cols],
                        p,
                    );
                }
                None => {
                    let scale = inv_mod(x, p);
                    for y in v[col..].iter_mut() {
                        *y = mul_mod(*y, scale, p);
                    }
                    self.pivot_row[col] = Some(self.len());
                    self.rows.extend_from_slice(v);
                    return true;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 97] {
            for x in 1..p {
                assert_eq!(mul_mod(x, inv_mod(x, p), p), 1);
            }
        }
    }

    #[test]
    fn rank_mod_three() {
        let mut m = ModMatrix::zeros(2, 2, 3);
        // [[1, 2], [2, 1]] has determinant -3 = 0 mod 3
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 0, 2);
        m.set(1, 1, 1);
        assert_eq!(m.rank(), 1);
        let mut m5 = ModMatrix::zeros(2, 2, 5);
        for (i, j, v) in [(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 1)] {
            m5.set(i, j, v);
        }
        assert_eq!(m5.rank(), 2);
    }
}
