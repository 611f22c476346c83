//! Dense matrices over GF(p).
//!
//! Characteristic 2 is stored bit-packed ([`BitMatrix`]); every other prime
//! uses one `u32` residue per entry ([`ModMatrix`]). [`GfMatrix`] picks the
//! backend from the characteristic.

mod binary;
mod modular;

pub use binary::{BitEchelon, BitMatrix};
pub use modular::{ModEchelon, ModMatrix};

use crate::error::OracleError;
use crate::jordan::Prime;

/// Largest characteristic the residue backend accepts; keeps products in `u64`.
pub const MAX_CHARACTERISTIC: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfMatrix {
    Packed(BitMatrix),
    Residues(ModMatrix),
}

fn check_prime(p: Prime<u32>) -> Result<u32, OracleError> {
    let p = p.get();
    if p > MAX_CHARACTERISTIC {
        return Err(OracleError::UnsupportedCharacteristic(p.to_string()));
    }
    Ok(p)
}

impl GfMatrix {
    pub fn zeros(rows: usize, cols: usize, p: Prime<u32>) -> Result<Self, OracleError> {
        Ok(match check_prime(p)? {
            2 => GfMatrix::Packed(BitMatrix::zeros(rows, cols)),
            p => GfMatrix::Residues(ModMatrix::zeros(rows, cols, p)),
        })
    }

    pub fn identity(size: usize, p: Prime<u32>) -> Result<Self, OracleError> {
        Ok(match check_prime(p)? {
            2 => GfMatrix::Packed(BitMatrix::identity(size)),
            p => GfMatrix::Residues(ModMatrix::identity(size, p)),
        })
    }

    /// Entries are reduced mod `p`. Rows must all have the same length.
    pub fn from_rows(rows: &[Vec<u32>], p: Prime<u32>) -> Result<Self, OracleError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(OracleError::Shape("ragged rows".into()));
        }
        let mut out = Self::zeros(rows.len(), cols, p)?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                out.set(i, j, x);
            }
        }
        Ok(out)
    }

    /// Same matrix in the generic residue representation, whatever `p` is.
    pub fn to_residues(&self) -> ModMatrix {
        match self {
            GfMatrix::Residues(m) => m.clone(),
            GfMatrix::Packed(m) => {
                let mut out = ModMatrix::zeros(m.rows(), m.cols(), 2);
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        if m.get(i, j) {
                            out.set(i, j, 1);
                        }
                    }
                }
                out
            }
        }
    }

    pub fn is_packed(&self) -> bool {
        matches!(self, GfMatrix::Packed(_))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            GfMatrix::Packed(_) => 2,
            GfMatrix::Residues(m) => m.characteristic(),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            GfMatrix::Packed(m) => m.rows(),
            GfMatrix::Residues(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            GfMatrix::Packed(m) => m.cols(),
            GfMatrix::Residues(m) => m.cols(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        match self {
            GfMatrix::Packed(m) => m.get(i, j) as u32,
            GfMatrix::Residues(m) => m.get(i, j),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        match self {
            GfMatrix::Packed(m) => m.set(i, j, value % 2 == 1),
            GfMatrix::Residues(m) => m.set(i, j, value),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GfMatrix::Packed(m) => m.is_zero(),
            GfMatrix::Residues(m) => m.is_zero(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        match self {
            GfMatrix::Packed(m) => m.to_rows(),
            GfMatrix::Residues(m) => m.to_rows(),
        }
    }

    pub fn mul(&self, rhs: &GfMatrix) -> Result<GfMatrix, OracleError> {
        if self.cols() != rhs.rows() {
            return Err(OracleError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows(),
                self.cols(),
                rhs.rows(),
                rhs.cols()
            )));
        }
        match (self, rhs) {
            (GfMatrix::Packed(a), GfMatrix::Packed(b)) => Ok(GfMatrix::Packed(a.mul(b))),
            (GfMatrix::Residues(a), GfMatrix::Residues(b))
                if a.characteristic() == b.characteristic() =>
            {
                Ok(GfMatrix::Residues(a.mul(b)))
            }
            _ => Err(OracleError::Shape("characteristics differ".into())),
        }
    }

    /// `self - I`.
    pub fn sub_identity(&self) -> Result<GfMatrix, OracleError> {
        if self.rows() != self.cols() {
            return Err(OracleError::Shape("not square".into()));
        }
        let p = self.characteristic();
        let mut out = self.clone();
        for i in 0..self.rows() {
            let x = out.get(i, i);
            out.set(i, i, (x + p - 1) % p);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        match self {
            GfMatrix::Packed(m) => m.rank(),
            GfMatrix::Residues(m) => m.rank(),
        }
    }

    /// `rank(N^j)` for `j >= 1`; see [`BitMatrix::power_ranks`].
    pub fn power_ranks(&self) -> Result<Vec<usize>, OracleError> {
        if self.rows() != self.cols() {
            return Err(OracleError::Shape("not square".into()));
        }
        Ok(match self {
            GfMatrix::Packed(m) => m.power_ranks(),
            GfMatrix::Residues(m) => m.power_ranks(),
        })
    }
}

/// `J_size(1)`: ones on the diagonal and the superdiagonal.
pub fn unipotent_jordan_block(size: usize, p: Prime<u32>) -> Result<GfMatrix, OracleError> {
    let mut out = GfMatrix::identity(size, p)?;
    for i in 1..size {
        out.set(i - 1, i, 1);
    }
    Ok(out)
}

/// `A ⊗ B`: block `(i, j)` is `A[i, j] * B`. Refuses results with more
/// than `max_dim` rows or columns.
pub fn kronecker(a: &GfMatrix, b: &GfMatrix, max_dim: usize) -> Result<GfMatrix, OracleError> {
    for dim in [
        a.rows().checked_mul(b.rows()),
        a.cols().checked_mul(b.cols()),
    ] {
        match dim {
            Some(d) if d <= max_dim => {}
            Some(d) => {
                return Err(OracleError::SizeBound {
                    dim: d,
                    bound: max_dim,
                })
            }
            None => {
                return Err(OracleError::SizeBound {
                    dim: usize::MAX,
                    bound: max_dim,
                })
            }
        }
    }
    match (a, b) {
        (GfMatrix::Packed(a), GfMatrix::Packed(b)) => Ok(GfMatrix::Packed(a.kronecker(b))),
        (GfMatrix::Residues(a), GfMatrix::Residues(b))
            if a.characteristic() == b.characteristic() =>
        {
            Ok(GfMatrix::Residues(a.kronecker(b)))
        }
        _ => Err(OracleError::Shape("characteristics differ".into())),
    }
}

/// Rank over GF(p). The input is left untouched.
pub fn rank_gfp(a: &GfMatrix) -> usize {
    a.rank()
}
