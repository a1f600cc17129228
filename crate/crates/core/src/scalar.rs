use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed};

/// Exact ordered field used for weight values and linear feasibility.
///
/// Any `num_rational::Ratio` over a signed integer qualifies. Floating point
/// types are excluded on purpose through the `Ord` bound: every decision made
/// with these values is a sign test at zero.
pub trait Scalar:
    Clone + Ord + Debug + Display + FromStr + Signed + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + Ord + Debug + Display + FromStr + Signed + FromPrimitive + Send + Sync + 'static
{
}
