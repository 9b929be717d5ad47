//! Edge-counting feasibility for decomposing `K_p^(m)` into `k` copies of
//! the whole tree family of order `p`.
//!
//! `k` copies of the family contain `k·τ(p)·(p-1)` edges while `K_p^(m)` has
//! `m·p(p-1)/2`, so equality forces `m = 2kτ/p`. For odd `p` the smallest
//! admissible copy count is `k = p / gcd(p, τ)`, giving the minimal
//! multiplicity `m = 2τ / gcd(p, τ)`. This is a necessary condition only;
//! nothing here claims the minimum is achievable.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FeasibilityError {
    #[error("family feasibility is defined for odd orders >= 3, got {0}")]
    BadOrder(u64),
    #[error("tau must be positive")]
    ZeroTau,
}

/// The minimal-copy-count arithmetic for one order, with both sides of the
/// edge balance it rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub order: u64,
    pub tau: u64,
    pub gcd_value: u64,
    /// Minimal copy count `p / gcd(p, τ)`.
    pub k_min: u64,
    /// Minimal edge multiplicity `2·k_min·τ / p`.
    pub m_min: u64,
    /// `m_min · p(p-1)/2`
    pub multigraph_edges: u128,
    /// `k_min · τ · (p-1)`
    pub family_edges: u128,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Computes the minimal copy count and edge multiplicity admitting a
/// decomposition of `K_p^(m)` into copies of the order-`p` family, as far as
/// edge counting goes. `tau` is passed in so fixture values work for orders
/// beyond enumeration.
pub fn minimal_family_multiplicity(
    p: u64,
    tau: u64,
) -> Result<FeasibilityReport, FeasibilityError> {
    if p < 3 || p % 2 == 0 {
        return Err(FeasibilityError::BadOrder(p));
    }
    if tau == 0 {
        return Err(FeasibilityError::ZeroTau);
    }
    let gcd_value = gcd(p, tau);
    let k_min = p / gcd_value;
    let m_min = 2 * (tau / gcd_value);
    let multigraph_edges = m_min as u128 * p as u128 * (p - 1) as u128 / 2;
    let family_edges = k_min as u128 * tau as u128 * (p - 1) as u128;
    debug_assert_eq!(multigraph_edges, family_edges);
    Ok(FeasibilityReport {
        order: p,
        tau,
        gcd_value,
        k_min,
        m_min,
        multigraph_edges,
        family_edges,
    })
}

/// The counting identity itself: true iff `m·p(p-1)/2 = k·τ·(p-1)`.
/// All arguments are expected positive.
pub fn edge_count_check(p: u64, m: u64, k: u64, tau: u64) -> bool {
    let p = p as u128;
    m as u128 * p * (p - 1) / 2 == k as u128 * tau as u128 * (p - 1)
}
