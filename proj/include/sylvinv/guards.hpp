#ifndef SYLVINV_GUARDS_HPP
#define SYLVINV_GUARDS_HPP

namespace sylvinv {

/// Thresholds that turn near-singular configurations into errors instead of
/// huge or meaningless coefficients.
struct Guards {
    /// SingularSylvester when min |b(alpha_i)|, |a(beta_j)| < singular_tol * (1 + scale),
    /// scale being the largest coefficient magnitude of a and b.
    double singular_tol = 1e-10;
    /// Interpolation nodes closer than separation_tol * max(1, max |node|) are rejected.
    double separation_tol = 1e-8;
};

}  // namespace sylvinv

#endif
