//! Brute-force Jordan type of `J_m(1) ⊗ J_n(1)` over GF(p).
//!
//! The tensor product is built explicitly, the identity subtracted, and the
//! block sizes of the nilpotent remainder are read off the ranks of its
//! powers: the number of blocks of size at least `j` is
//! `rank(N^(j-1)) - rank(N^j)`.

use crate::error::{JordanError, OracleError};
use crate::gf::{self, GfMatrix};
use crate::int::BlockInt;
use crate::jordan::{BlockPair, JordanDecomposition, Prime};

/// Default bound on the tensor dimension `m * n`.
pub const DEFAULT_MAX_DIMENSION: usize = 10_000;

/// `rank(N^0), rank(N^1), ...` ending at the first zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSequence(Vec<usize>);

impl RankSequence {
    pub fn new(ranks: Vec<usize>) -> Result<Self, OracleError> {
        let bad = |why| Err(OracleError::InvalidRanks(ranks.clone(), why));
        if ranks.last() != Some(&0) {
            return bad("does not end at zero");
        }
        if ranks.windows(2).any(|w| w[0] <= w[1]) {
            return bad("not strictly decreasing");
        }
        let drops: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        if drops.windows(2).any(|w| w[0] < w[1]) {
            return bad("first differences increase");
        }
        Ok(RankSequence(ranks))
    }

    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0[0]
    }

    /// Nilpotency index: the first `j` with `rank(N^j) = 0`.
    pub fn index(&self) -> usize {
        self.0.len() - 1
    }
}

/// Block sizes in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Build the nilpotent part `N = T - I`'s rank sequence.
pub fn rank_sequence_of_nilpotent(nilpotent: &GfMatrix) -> Result<RankSequence, OracleError> {
    let mut ranks = vec![nilpotent.rows()];
    ranks.extend(nilpotent.power_ranks()?);
    if ranks.last() != Some(&0) || ranks.len() > nilpotent.rows() + 1 {
        return Err(OracleError::NotNilpotent(ranks));
    }
    RankSequence::new(ranks)
}

/// Conjugate of the rank drops: exactly `r_(j-1) - r_j` parts are `>= j`.
pub fn partition_from_ranks(rs: &RankSequence) -> Partition {
    let r = rs.ranks();
    let at_least: Vec<usize> = r.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::with_capacity(at_least.first().copied().unwrap_or(0));
    for size in (1..=at_least.len()).rev() {
        let longer = at_least.get(size).copied().unwrap_or(0);
        let exactly = at_least[size - 1] - longer;
        parts.extend(std::iter::repeat_n(size, exactly));
    }
    Partition(parts)
}

/// Everything an oracle run produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRun<T> {
    pub ranks: RankSequence,
    pub partition: Partition,
    pub decomposition: JordanDecomposition<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest accepted `m * n`.
    pub max_dimension: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_dimension: DEFAULT_MAX_DIMENSION,
        }
    }
}

fn to_usize<T: BlockInt>(x: T) -> Result<usize, OracleError> {
    x.to_usize().ok_or(OracleError::SizeBound {
        dim: usize::MAX,
        bound: usize::MAX,
    })
}

/// Runs the brute-force computation and keeps the intermediate ranks.
pub fn oracle_run<T: BlockInt>(
    pair: BlockPair<T>,
    p: Prime<T>,
    limits: OracleLimits,
) -> Result<OracleRun<T>, OracleError> {
    let (m, n) = (to_usize(pair.m())?, to_usize(pair.n())?);
    let dim = m.saturating_mul(n);
    if dim > limits.max_dimension {
        return Err(OracleError::SizeBound {
            dim,
            bound: limits.max_dimension,
        });
    }
    let p32 = p
        .get()
        .to_u32()
        .ok_or_else(|| OracleError::UnsupportedCharacteristic(p.to_string()))?;
    let p32 = Prime::new(p32)?;

    let jm = gf::unipotent_jordan_block(m, p32)?;
    let jn = gf::unipotent_jordan_block(n, p32)?;
    let tensor = gf::kronecker(&jm, &jn, limits.max_dimension)?;
    let nilpotent = tensor.sub_identity()?;
    let ranks = rank_sequence_of_nilpotent(&nilpotent)?;
    let partition = partition_from_ranks(&ranks);

    let parts: Vec<T> = partition
        .parts()
        .iter()
        .map(|&x| T::from(x).ok_or(JordanError::Overflow("block size")))
        .collect::<Result<_, _>>()?;
    let decomposition = JordanDecomposition::from_partition(pair.n(), &parts)?;
    Ok(OracleRun {
        ranks,
        partition,
        decomposition,
    })
}

/// `lambda(m, n, p)` by explicit linear algebra.
pub fn oracle_jordan_partition<T: BlockInt>(
    pair: BlockPair<T>,
    p: Prime<T>,
    limits: OracleLimits,
) -> Result<JordanDecomposition<T>, OracleError> {
    oracle_run(pair, p, limits).map(|run| run.decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u32) -> Prime<u32> {
        Prime::new(p).unwrap()
    }

    fn run(m: u64, n: u64, p: u64) -> OracleRun<u64> {
        oracle_run(
            BlockPair::new(m, n).unwrap(),
            Prime::new(p).unwrap(),
            OracleLimits::default(),
        )
        .unwrap()
    }

    #[test]
    fn two_by_two_in_characteristic_two() {
        let j2 = gf::unipotent_jordan_block(2, prime(2)).unwrap();
        let n = gf::kronecker(&j2, &j2, 16).unwrap().sub_identity().unwrap();
        assert_eq!(
            n.to_rows(),
            vec![
                vec![0, 1, 1, 1],
                vec![0, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![0, 0, 0, 0]
            ]
        );
        let rs = rank_sequence_of_nilpotent(&n).unwrap();
        assert_eq!(rs.ranks(), &[4, 2, 0]);
        assert_eq!(partition_from_ranks(&rs).parts(), &[2, 2]);
    }

    #[test]
    fn rank_sequence_examples() {
        let zero = GfMatrix::zeros(5, 5, prime(3)).unwrap();
        assert_eq!(rank_sequence_of_nilpotent(&zero).unwrap().ranks(), &[5, 0]);
        let shift = gf::unipotent_jordan_block(3, prime(5))
            .unwrap()
            .sub_identity()
            .unwrap();
        assert_eq!(
            rank_sequence_of_nilpotent(&shift).unwrap().ranks(),
            &[3, 2, 1, 0]
        );
        let id = GfMatrix::identity(3, prime(2)).unwrap();
        assert!(matches!(
            rank_sequence_of_nilpotent(&id),
            Err(OracleError::NotNilpotent(_))
        ));
    }

    #[test]
    fn partitions_from_ranks() {
        let p = |r: Vec<usize>| partition_from_ranks(&RankSequence::new(r).unwrap()).0;
        assert_eq!(p(vec![4, 2, 0]), vec![2, 2]);
        assert_eq!(p(vec![1, 0]), vec![1]);
        assert_eq!(p(vec![6, 3, 1, 0]), vec![3, 2, 1]);
        assert!(RankSequence::new(vec![6, 5, 3, 0]).is_err());
        assert!(RankSequence::new(vec![3, 3, 0]).is_err());
        assert!(RankSequence::new(vec![3, 1]).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(run(2, 2, 2).decomposition.pairs(), &[(2, 2)]);
        assert_eq!(run(2, 2, 3).partition.parts(), &[3, 1]);
        assert_eq!(run(1, 7, 5).decomposition.pairs(), &[(1, 7)]);
        assert_eq!(
            run(3, 6, 2).decomposition.pairs(),
            &[(1, 8), (1, 6), (1, 4)]
        );
        assert_eq!(run(1, 1, 2).ranks.ranks(), &[1, 0]);
    }

    #[test]
    fn size_bound() {
        let limits = OracleLimits { max_dimension: 20 };
        let err = oracle_run(
            BlockPair::new(3u64, 7).unwrap(),
            Prime::new(2).unwrap(),
            limits,
        );
        assert!(matches!(
            err,
            Err(OracleError::SizeBound { dim: 21, bound: 20 })
        ));
    }
}
