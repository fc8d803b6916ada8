//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) these run on the current rayon
//! pool; without it they are plain iterator loops. Every helper preserves input
//! order in its result, so callers see identical output either way.

/// Whether the crate was built with rayon support.
#[cfg(feature = "parallel")]
pub fn is_parallel() -> bool {
    true
}

/// Whether the crate was built with rayon support.
#[cfg(not(feature = "parallel"))]
pub fn is_parallel() -> bool {
    false
}

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(data: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    data.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(data: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    data.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_range<U, F>(count: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F>(count: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..count).map(f).collect()
}

/// First (lowest index) `Some` produced by `f`.
#[cfg(feature = "parallel")]
pub fn find_map_first<T, U, F>(data: &[T], f: F) -> Option<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    use rayon::prelude::*;
    data.par_iter().find_map_first(f)
}

/// First (lowest index) `Some` produced by `f`.
#[cfg(not(feature = "parallel"))]
pub fn find_map_first<T, U, F>(data: &[T], f: F) -> Option<U>
where
    F: Fn(&T) -> Option<U>,
{
    data.iter().find_map(f)
}

/// Runs `f` over `data` in order-preserving chunks, stopping after the first
/// chunk that produces a hit. Returns the lowest-index hit together with the
/// summed cost of every item up to and including it (all items on a miss), so
/// the result does not depend on the pool size.
pub fn first_hit_with_cost<T, U, F>(data: &[T], f: F) -> (Option<U>, u64)
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> (Option<U>, u64) + Sync + Send,
{
    let mut total = 0u64;
    for chunk in data.chunks(chunk_len()) {
        for (hit, cost) in map(chunk, &f) {
            total += cost;
            if hit.is_some() {
                return (hit, total);
            }
        }
    }
    (None, total)
}

#[cfg(feature = "parallel")]
fn chunk_len() -> usize {
    rayon::current_num_threads().max(1) * 4
}

#[cfg(not(feature = "parallel"))]
fn chunk_len() -> usize {
    1
}
