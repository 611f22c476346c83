//! Integer types usable as block sizes and characteristics.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// Unsigned primitive integers the recursion can run over.
///
/// All arithmetic on block sizes goes through checked operations, so a
/// narrow type reports overflow instead of wrapping.
pub trait BlockInt:
    PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> BlockInt for T where
    T: PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static
{
}
