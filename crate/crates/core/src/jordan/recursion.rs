//! The six-case recursion for the composition `c(m, n, p)` and the closed
//! formula that turns a composition back into block sizes.

use std::collections::HashMap;
use std::sync::RwLock;

use super::types::{BlockPair, CaseId, Composition, JordanDecomposition, Prime, RadixParams};
use crate::error::JordanError;
use crate::int::BlockInt;

/// Default upper bound on block sizes accepted by the recursion.
pub const DEFAULT_MAX_BLOCK: u64 = 1 << 20;

type Result<T> = std::result::Result<T, JordanError>;

fn overflow(what: &'static str) -> JordanError {
    JordanError::Overflow(what)
}

fn add<T: BlockInt>(x: T, y: T, what: &'static str) -> Result<T> {
    x.checked_add(&y).ok_or(overflow(what))
}

fn mul<T: BlockInt>(x: T, y: T, what: &'static str) -> Result<T> {
    x.checked_mul(&y).ok_or(overflow(what))
}

fn sub<T: BlockInt>(x: T, y: T, what: &'static str) -> Result<T> {
    x.checked_sub(&y)
        .ok_or_else(|| JordanError::Internal(format!("negative {what}: {x} - {y}")))
}

fn digits<T: BlockInt>(m: T, n: T, p: Prime<T>) -> Result<RadixParams<T>> {
    debug_assert!(!n.is_zero() && m <= n);
    let p = p.get();
    let mut k = 0u32;
    let mut low = T::one();
    // largest power of p not exceeding n
    while let Some(next) = low.checked_mul(&p) {
        if next > n {
            break;
        }
        low = next;
        k += 1;
    }
    let high = mul(low, p, "p^(k+1)")?;
    Ok(RadixParams {
        k,
        a: m / low,
        b: n / low,
        c: m % low,
        d: n % low,
        low_power: low,
        high_power: high,
    })
}

fn case_of<T: BlockInt>(m: T, n: T, r: &RadixParams<T>) -> Result<CaseId> {
    let total = add(m, n, "m + n")?;
    let cd = add(r.c, r.d, "c + d")?;
    let fits = total <= r.high_power;
    let low_band = !cd.is_zero() && cd <= r.low_power;
    let zero = T::zero();
    let case = if total > r.high_power {
        CaseId::Case1
    } else if fits && cd > r.low_power {
        CaseId::Case2
    } else if fits && low_band && r.a > zero {
        CaseId::Case3
    } else if fits && low_band && r.a == zero && r.d > zero {
        CaseId::Case4
    } else if fits && low_band && r.a == zero && r.d == zero {
        CaseId::Case5
    } else if fits && r.c == zero && r.d == zero {
        CaseId::Case6
    } else {
        return Err(JordanError::Internal(format!(
            "no case applies to (m, n) = ({m}, {n}) with {r:?}"
        )));
    };
    Ok(case)
}

/// The radix digits `(k, a, b, c, d)` of `pair` in base `p`.
pub fn radix_params<T: BlockInt>(pair: BlockPair<T>, p: Prime<T>) -> Result<RadixParams<T>> {
    digits(pair.m(), pair.n(), p)
}

/// Which of the six recursion branches handles `pair`.
pub fn classify_case<T: BlockInt>(pair: BlockPair<T>, p: Prime<T>) -> Result<CaseId> {
    let r = digits(pair.m(), pair.n(), p)?;
    case_of(pair.m(), pair.n(), &r)
}

/// `r(s)`: the composition read backwards.
pub fn reverse<T: BlockInt>(comp: &Composition<T>) -> Composition<T> {
    comp.reversed()
}

/// One call of the recursion, recorded in preorder by [`JordanSolver::trace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep<T> {
    pub m: T,
    pub n: T,
    pub depth: usize,
    /// `None` for the empty base case.
    pub case: Option<CaseId>,
}

/// Memoizing evaluator for `c(m, n, p)`.
///
/// The cache is shared behind a lock, so one solver can serve a parallel
/// sweep. Every writer stores the same value for a key.
#[derive(Debug)]
pub struct JordanSolver<T> {
    max_block: T,
    memo: RwLock<HashMap<(T, T, T), Composition<T>>>,
}

impl<T: BlockInt> Default for JordanSolver<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: BlockInt> JordanSolver<T> {
    /// Solver bounded by [`DEFAULT_MAX_BLOCK`], or by `T::MAX` for narrower types.
    pub fn new() -> Self {
        let bound = T::from(DEFAULT_MAX_BLOCK).unwrap_or_else(T::max_value);
        Self::with_max_block(bound)
    }

    pub fn with_max_block(max_block: T) -> Self {
        JordanSolver {
            max_block,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn max_block(&self) -> T {
        self.max_block
    }

    pub fn cached(&self) -> usize {
        self.memo.read().map(|m| m.len()).unwrap_or(0)
    }

    pub fn clear(&self) {
        if let Ok(mut memo) = self.memo.write() {
            memo.clear();
        }
    }

    fn check_bound(&self, x: T) -> Result<()> {
        if x > self.max_block {
            return Err(JordanError::BoundExceeded {
                what: "block size",
                value: x.to_string(),
                bound: self.max_block.to_string(),
            });
        }
        Ok(())
    }

    /// `c(m, n, p)`. The sizes may be given in either order; a zero size
    /// yields the empty composition.
    pub fn composition(&self, m: T, n: T, p: Prime<T>) -> Result<Composition<T>> {
        let (m, n) = if m <= n { (m, n) } else { (n, m) };
        self.check_bound(n)?;
        self.compose(m, n, p, 0, &mut None)
    }

    /// Evaluates `c(m, n, p)` without the cache, recording every call.
    pub fn trace(&self, m: T, n: T, p: Prime<T>) -> Result<(Composition<T>, Vec<TraceStep<T>>)> {
        let (m, n) = if m <= n { (m, n) } else { (n, m) };
        self.check_bound(n)?;
        let mut steps = Some(Vec::new());
        let comp = self.compose(m, n, p, 0, &mut steps)?;
        Ok((comp, steps.unwrap_or_default()))
    }

    /// `lambda(m, n, p)` in multiplicity form.
    pub fn jordan_partition(
        &self,
        pair: BlockPair<T>,
        p: Prime<T>,
    ) -> Result<JordanDecomposition<T>> {
        let comp = self.composition(pair.m(), pair.n(), p)?;
        lambda_from_composition(pair.n(), &comp)
    }

    fn compose(
        &self,
        m: T,
        n: T,
        p: Prime<T>,
        depth: usize,
        trace: &mut Option<Vec<TraceStep<T>>>,
    ) -> Result<Composition<T>> {
        debug_assert!(m <= n);
        if m.is_zero() {
            if let Some(steps) = trace.as_mut() {
                steps.push(TraceStep {
                    m,
                    n,
                    depth,
                    case: None,
                });
            }
            return Ok(Composition::empty());
        }
        let key = (m, n, p.get());
        if trace.is_none() {
            if let Some(hit) = self
                .memo
                .read()
                .ok()
                .and_then(|memo| memo.get(&key).cloned())
            {
                return Ok(hit);
            }
        }

        let r = digits(m, n, p)?;
        let case = case_of(m, n, &r)?;
        if let Some(steps) = trace.as_mut() {
            steps.push(TraceStep {
                m,
                n,
                depth,
                case: Some(case),
            });
        }
        let q = r.low_power;
        let mut out = Composition::empty();
        match case {
            CaseId::Case1 => {
                let high = r.high_power;
                out.push(sub(add(m, n, "m + n")?, high, "case 1 head")?);
                let tail = self.compose(high - n, high - m, p, depth + 1, trace)?;
                out.extend_from(&tail);
            }
            CaseId::Case2 => {
                let top = mul(r.a + r.b + T::one(), q, "(a + b + 1) p^k")?;
                out.push(sub(r.c + r.d, q, "case 2 head")?);
                let lo = sub(top, n, "case 2 tail")?;
                let hi = sub(top, m, "case 2 tail")?;
                out.extend_from(&self.compose(lo, hi, p, depth + 1, trace)?);
            }
            CaseId::Case3 => {
                let (lo, hi) = if r.c <= r.d { (r.c, r.d) } else { (r.d, r.c) };
                let inner = self.compose(lo, hi, p, depth + 1, trace)?;
                out.extend_from(&inner);
                out.push(hi - lo);
                out.extend_from(&inner.reversed());
                let top = mul(r.a + r.b, q, "(a + b) p^k")?;
                let lo = sub(top, n, "case 3 tail")?;
                let hi = sub(top, m, "case 3 tail")?;
                out.extend_from(&self.compose(lo, hi, p, depth + 1, trace)?);
            }
            CaseId::Case4 => {
                let mirror = sub(r.b * q, r.d, "b p^k - d")?;
                if m > mirror {
                    return Err(JordanError::Internal(format!(
                        "case 4 reflection ({m}, {mirror}) is out of order"
                    )));
                }
                out = self.compose(m, mirror, p, depth + 1, trace)?.reversed();
            }
            CaseId::Case5 => out.push(m),
            CaseId::Case6 => {
                out.push(q);
                let rest = self.compose(
                    (r.a - T::one()) * q,
                    (r.b - T::one()) * q,
                    p,
                    depth + 1,
                    trace,
                )?;
                out.extend_from(&rest);
            }
        }
        debug_assert_eq!(out.total().ok(), Some(m), "c({m}, {n}, {p:?}) = {out:?}");

        if trace.is_none() {
            if let Ok(mut memo) = self.memo.write() {
                memo.insert(key, out.clone());
            }
        }
        Ok(out)
    }
}

/// `c(m, n, p)` with a fresh cache. Sizes may be given in either order.
pub fn composition<T: BlockInt>(m: T, n: T, p: Prime<T>) -> Result<Composition<T>> {
    JordanSolver::new().composition(m, n, p)
}

/// Block sizes from a composition:
/// `l_i = n + (m_{i+1} + ... + m_r) - (m_1 + ... + m_{i-1})`.
///
/// The equivalent form `m + n - 2 (m_1 + ... + m_{i-1}) - m_i` is evaluated
/// alongside and must agree.
pub fn lambda_from_composition<T: BlockInt>(
    n: T,
    comp: &Composition<T>,
) -> Result<JordanDecomposition<T>> {
    if comp.is_empty() {
        return Err(JordanError::EmptyComposition);
    }
    let m = comp.total()?;
    if m > n {
        return Err(JordanError::CompositionTooLarge {
            sum: m.to_string(),
            n: n.to_string(),
        });
    }
    let mut before = T::zero();
    let mut pairs = Vec::with_capacity(comp.len());
    for &mult in comp.parts() {
        let after = m - before - mult;
        let part = add(n, after, "block size")? - before;
        let doubled = add(before, before, "block size")?;
        let alt = add(m, n, "m + n")? - doubled - mult;
        if part != alt {
            return Err(JordanError::Internal(format!(
                "block size forms disagree: {part} vs {alt}"
            )));
        }
        pairs.push((mult, part));
        before = before + mult;
    }
    JordanDecomposition::from_pairs(n, pairs)
}

/// `lambda(m, n, p)`: composition first, then block sizes.
pub fn jordan_partition<T: BlockInt>(
    pair: BlockPair<T>,
    p: Prime<T>,
) -> Result<JordanDecomposition<T>> {
    JordanSolver::new().jordan_partition(pair, p)
}

/// Whether `dec` is `(m + n - 1, m + n - 3, ..., n - m + 1)`.
pub fn is_standard<T: BlockInt>(dec: &JordanDecomposition<T>, m: T, n: T) -> bool {
    let Some(count) = m.to_usize() else {
        return false;
    };
    let expanded = dec.expanded();
    let by_parts = expanded.len() == count
        && m <= n
        && expanded.iter().enumerate().all(|(i, &part)| {
            // m + n - 2i - 1 for zero-based i
            T::from(2 * i + 1).is_some_and(|off| m + n >= off && part == m + n - off)
        });
    debug_assert!(
        dec.m() != m || by_parts == dec.composition().is_all_ones(),
        "standardness tests disagree for {dec:?}"
    );
    by_parts
}

/// Closed-form standardness test for `p = 2`: `m = 1`, or `m = 2` with `n`
/// odd, or `m = 3` with `n = 6 + 4k`.
pub fn standard_predicate_p2<T: BlockInt>(pair: BlockPair<T>) -> bool {
    let (m, n) = (pair.m(), pair.n());
    let Some(m) = m.to_u64() else {
        return false;
    };
    let two = T::one() + T::one();
    let four = two + two;
    let six = four + two;
    match m {
        1 => true,
        2 => n % two == T::one(),
        3 => n >= six && (n - six) % four == T::zero(),
        _ => false,
    }
}
