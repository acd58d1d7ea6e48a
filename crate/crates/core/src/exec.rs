//! Execution helpers: data-parallel loops with a sequential fallback.
//!
//! With the `parallel` feature (the default) these dispatch to rayon;
//! without it they run plain loops. Parallelism is only ever applied across
//! independent output elements — never across the terms of a floating-point
//! reduction — so results are bit-identical for any thread count and for the
//! sequential build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..len`, collecting results in index order.
pub(crate) fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}

/// Always-sequential counterpart of [`map_indexed`]; reference path for the
/// benchmark suite.
pub(crate) fn map_indexed_seq<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}

/// Applies `f` to each contiguous `row_len` chunk of `data` with its row index.
pub(crate) fn for_each_row<T, F>(data: &mut [T], row_len: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    debug_assert_eq!(data.len() % row_len.max(1), 0);
    #[cfg(feature = "parallel")]
    {
        data.par_chunks_mut(row_len)
            .enumerate()
            .for_each(|(i, row)| f(i, row));
    }
    #[cfg(not(feature = "parallel"))]
    {
        data.chunks_mut(row_len).enumerate().for_each(|(i, row)| f(i, row));
    }
}

/// Sequential counterpart of [`for_each_row`].
pub(crate) fn for_each_row_seq<T, F>(data: &mut [T], row_len: usize, mut f: F)
where
    F: FnMut(usize, &mut [T]),
{
    data.chunks_mut(row_len).enumerate().for_each(|(i, row)| f(i, row));
}
