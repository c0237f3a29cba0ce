use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer scalar for the lattice routines.
///
/// Everything in [`crate::intlat`] and the coset maximizer is written against
/// this trait, so the same code runs over [`num_bigint::BigInt`] (the default,
/// see [`crate::Int`]) or a machine integer when a caller can bound the entries.
/// Machine integers overflow loudly in debug builds and are only used in tests.
pub trait ExactInt:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("integer scalar must represent every i64")
    }
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}
