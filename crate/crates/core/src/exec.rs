//! Execution strategy for the data-parallel kernels.
//!
//! With the `parallel` feature (on by default) the kernels fan out over rayon;
//! the sequential path is always compiled so the two can be compared. Every
//! reduction is an integer sum or an index-ordered collect, so results do not
//! depend on the strategy or the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

#[allow(clippy::derivable_impls)] // the default depends on the feature set
impl Default for Exec {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Exec::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Sum of `f(i)` for `i` in `0..n`.
    pub fn sum<F>(self, n: usize, f: F) -> u128
    where
        F: Fn(usize) -> u128 + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).map(f).sum(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).sum(),
        }
    }

    /// `f(i)` for `i` in `0..n`, in index order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let f = |i: usize| (i * i) as u128;
        let seq = Exec::Sequential.sum(1000, f);
        assert_eq!(seq, Exec::default().sum(1000, f));
        assert_eq!(Exec::Sequential.map(10, |i| i + 1), Exec::default().map(10, |i| i + 1));
    }
}
