use std::fmt;

use crate::error::JordanError;
use crate::int::BlockInt;

/// A prime characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime<T>(T);

impl<T: BlockInt> Prime<T> {
    /// Validates `value` by trial division.
    pub fn new(value: T) -> Result<Self, JordanError> {
        if is_prime(value) {
            Ok(Prime(value))
        } else {
            Err(JordanError::NotPrime(value.to_string()))
        }
    }

    pub fn get(self) -> T {
        self.0
    }
}

impl<T: fmt::Display> fmt::Display for Prime<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime<T: BlockInt>(value: T) -> bool {
    let two = T::one() + T::one();
    if value < two {
        return false;
    }
    let mut d = two;
    loop {
        match d.checked_mul(&d) {
            Some(sq) if sq <= value => {}
            _ => return true,
        }
        if value % d == T::zero() {
            return false;
        }
        d = d + T::one();
    }
}

/// An ordered pair of block sizes `1 <= m <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockPair<T> {
    m: T,
    n: T,
}

impl<T: BlockInt> BlockPair<T> {
    pub fn new(m: T, n: T) -> Result<Self, JordanError> {
        if m.is_zero() || n.is_zero() {
            return Err(JordanError::ZeroBlock {
                m: m.to_string(),
                n: n.to_string(),
            });
        }
        if m > n {
            return Err(JordanError::Unordered {
                m: m.to_string(),
                n: n.to_string(),
            });
        }
        Ok(BlockPair { m, n })
    }

    /// Accepts the two sizes in either order.
    pub fn unordered(x: T, y: T) -> Result<Self, JordanError> {
        if x <= y {
            Self::new(x, y)
        } else {
            Self::new(y, x)
        }
    }

    pub fn m(self) -> T {
        self.m
    }

    pub fn n(self) -> T {
        self.n
    }
}

/// Base-`p^k` digits of a block pair: `p^k <= n < p^(k+1)`, `n = b p^k + d`
/// and `m = a p^k + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RadixParams<T> {
    pub k: u32,
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    /// `p^k`
    pub low_power: T,
    /// `p^(k+1)`
    pub high_power: T,
}

/// The six mutually exclusive branches of the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    /// `m + n > p^(k+1)`
    Case1,
    /// `m + n <= p^(k+1)` and `c + d > p^k`
    Case2,
    /// `1 <= c + d <= p^k` and `a > 0`
    Case3,
    /// `1 <= c + d <= p^k`, `a = 0` and `d > 0`
    Case4,
    /// `a = 0`, `d = 0`
    Case5,
    /// `c = d = 0`
    Case6,
}

impl CaseId {
    pub const ALL: [CaseId; 6] = [
        CaseId::Case1,
        CaseId::Case2,
        CaseId::Case3,
        CaseId::Case4,
        CaseId::Case5,
        CaseId::Case6,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.number())
    }
}

/// An ordered sequence of positive multiplicities.
///
/// The empty composition stands for `m = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition<T>(Vec<T>);

impl<T: BlockInt> Composition<T> {
    pub fn new(parts: Vec<T>) -> Result<Self, JordanError> {
        if parts.iter().any(|x| x.is_zero()) {
            return Err(JordanError::ZeroPart);
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn single(part: T) -> Self {
        debug_assert!(!part.is_zero());
        Composition(vec![part])
    }

    /// `(1, 1, ..., 1)` with `m` ones.
    pub fn ones(m: usize) -> Self {
        Composition(vec![T::one(); m])
    }

    pub fn parts(&self) -> &[T] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<T> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts, i.e. the `m` this composition belongs to.
    pub fn total(&self) -> Result<T, JordanError> {
        self.0.iter().try_fold(T::zero(), |acc, &x| {
            acc.checked_add(&x)
                .ok_or(JordanError::Overflow("composition total"))
        })
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Concatenation; zero parts are dropped.
    pub fn push(&mut self, part: T) {
        if !part.is_zero() {
            self.0.push(part);
        }
    }

    pub fn extend_from(&mut self, other: &Composition<T>) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|x| x.is_one())
    }
}

impl<T: fmt::Display> fmt::Display for Composition<T> {
    /// Renders as `1+1+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A Jordan partition in multiplicity form `(m_1 . l_1, ..., m_r . l_r)`
/// with `l_1 > ... > l_r > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JordanDecomposition<T> {
    pairs: Vec<(T, T)>,
    n: T,
}

impl<T: BlockInt> JordanDecomposition<T> {
    /// Builds from `(multiplicity, part)` pairs, checking every invariant
    /// against the larger block size `n`.
    pub fn from_pairs(n: T, pairs: Vec<(T, T)>) -> Result<Self, JordanError> {
        let dec = JordanDecomposition { pairs, n };
        dec.validate()?;
        Ok(dec)
    }

    /// Groups a weakly decreasing list of block sizes.
    pub fn from_partition(n: T, parts: &[T]) -> Result<Self, JordanError> {
        let mut pairs: Vec<(T, T)> = Vec::new();
        for &part in parts {
            match pairs.last_mut() {
                Some((mult, last)) if *last == part => *mult = *mult + T::one(),
                _ => pairs.push((T::one(), part)),
            }
        }
        Self::from_pairs(n, pairs)
    }

    pub fn validate(&self) -> Result<(), JordanError> {
        let bad = |msg: String| Err(JordanError::InvalidDecomposition(msg));
        if self.pairs.is_empty() {
            return bad("no blocks".into());
        }
        let mut m = T::zero();
        let mut mass = T::zero();
        let overflow = JordanError::Overflow("decomposition mass");
        for (i, &(mult, part)) in self.pairs.iter().enumerate() {
            if mult.is_zero() || part.is_zero() {
                return bad(format!("zero entry at position {}", i + 1));
            }
            if i > 0 && self.pairs[i - 1].1 <= part {
                return bad(format!(
                    "parts not strictly decreasing at position {}",
                    i + 1
                ));
            }
            m = m.checked_add(&mult).ok_or(overflow.clone())?;
            let term = mult.checked_mul(&part).ok_or(overflow.clone())?;
            mass = mass.checked_add(&term).ok_or(overflow.clone())?;
        }
        if m > self.n {
            return bad(format!("{m} blocks exceed n = {}", self.n));
        }
        if Some(mass) != m.checked_mul(&self.n) {
            return bad(format!("sizes sum to {mass}, expected {m} * {}", self.n));
        }
        let largest = self.pairs[0].1;
        if largest < self.n || largest > m + self.n - T::one() {
            return bad(format!("largest block {largest} outside [n, m + n - 1]"));
        }
        Ok(())
    }

    /// `(multiplicity, part)` pairs, parts strictly decreasing.
    pub fn pairs(&self) -> &[(T, T)] {
        &self.pairs
    }

    pub fn n(&self) -> T {
        self.n
    }

    /// Number of blocks, equal to the smaller block size.
    pub fn m(&self) -> T {
        self.pairs
            .iter()
            .fold(T::zero(), |acc, &(mult, _)| acc + mult)
    }

    pub fn composition(&self) -> Composition<T> {
        Composition(self.pairs.iter().map(|&(mult, _)| mult).collect())
    }

    /// Distinct block sizes, largest first.
    pub fn distinct_parts(&self) -> Vec<T> {
        self.pairs.iter().map(|&(_, part)| part).collect()
    }

    /// Every block size listed once per occurrence, largest first.
    pub fn expanded(&self) -> Vec<T> {
        let mut out = Vec::new();
        for &(mult, part) in &self.pairs {
            let count = mult.to_usize().unwrap_or(0);
            out.extend(std::iter::repeat_n(part, count));
        }
        out
    }
}

impl<T: fmt::Display> fmt::Display for JordanDecomposition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (mult, part)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{mult}*{part}")?;
        }
        Ok(())
    }
}
