//! Thin switch between rayon and sequential execution.
//!
//! With the `parallel` feature (default) the parallel entry points fan out
//! over rayon's current thread pool; without it they degrade to plain loops.
//! Callers can also force sequential execution at runtime, which the bench
//! suite uses to compare the two paths.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when both the feature and the runtime
/// switch allow it. Output order matches input order either way.
pub(crate) fn map_vec<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return items.par_iter().map(&f).collect();
        }
    }
    let _ = parallel;
    items.iter().map(f).collect()
}
