//! Dimension counts behind the generic existence bounds.
//!
//! A jet condition can be avoided by a generic perturbation when the bad set
//! `Sigma` in the 1-jet space has codimension strictly larger than `dim M`.
//! The minimal and maximal targets are found by scanning that inequality, not
//! by evaluating the closed forms, so the closed forms can be checked against
//! them.

/// Codimension of the set of 1-jets `M^n -> R^{2N}` that fail to be totally
/// real: `2N - 2(n - 1)`.
///
/// Panics unless `1 <= n <= target`.
pub fn codim_sigma_tri(n: u32, target: u32) -> u64 {
    assert!(n >= 1 && target >= n, "need 1 <= n <= N, got n = {n}, N = {target}");
    2 * u64::from(target) - 2 * (u64::from(n) - 1)
}

/// Smallest `N` for which totally real immersions `M^n -> C^N` are generic.
/// Equals `floor(3n / 2)`.
pub fn min_target_tri(n: u32) -> u32 {
    assert!(n >= 1, "dimension must be positive");
    (n..)
        .find(|&target| codim_sigma_tri(n, target) > u64::from(n))
        .expect("codimension grows without bound")
}

/// Codimension of the set of 1-jets `M^n -> C^r` whose differential has rank
/// below `r`: `2(n - r + 1)`.
///
/// Panics unless `1 <= r <= n`.
pub fn codim_sigma_indep(n: u32, r: u32) -> u64 {
    assert!(r >= 1 && r <= n, "need 1 <= r <= n, got n = {n}, r = {r}");
    2 * (u64::from(n) - u64::from(r) + 1)
}

/// Largest number of independent complex functions on `M^n` obtainable
/// generically. Equals `floor((n + 1) / 2)`.
pub fn max_independent_count(n: u32) -> u32 {
    assert!(n >= 1, "dimension must be positive");
    (1..=n)
        .take_while(|&r| codim_sigma_indep(n, r) > u64::from(n))
        .last()
        .expect("r = 1 always satisfies the codimension bound")
}

/// Number of global sections that generically span a complex rank-`r` bundle
/// over an `n`-manifold: `floor(n / 2) + r`. The kernel of the resulting
/// surjection from the trivial bundle has rank `floor(n / 2)`.
pub fn spanning_sections_bound(n: u32, r: u32) -> u32 {
    assert!(r >= 1, "bundle rank must be positive");
    n / 2 + r
}
