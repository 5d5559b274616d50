#pragma once

namespace pslp {

// Smoothing pair (theta, Theta): theta is a compactly supported C^k bump,
// identically 1 on [-(a-delta), a-delta] and 0 outside (-(a+delta), a+delta),
// built as the indicator of [-a, a] convolved k times with the normalized
// indicator of [-delta/k, delta/k].  Its Fourier transform
//     Theta(x) = integral theta(y) e(-xy) dy
// is then the sinc product
//     Theta(x) = (sin(2 pi a x) / (pi x)) * prod_{j=1}^{k} sinc(2 pi r x),
// r = delta/k, which obeys
//     |Theta(x)| <= min(2a, 1/(pi|x|), (1/(pi|x|)) (k/(2 pi |x| delta))^k).
//
// Immutable value object; evaluations are pure and thread-safe.
struct SmoothingKernel {
    double a = 0;
    double delta = 0;
    int k = 0;

    double plateau_edge() const { return a - delta; }  // theta == 1 inside
    double support_edge() const { return a + delta; }  // theta == 0 outside

    /// theta(y).  Exact piecewise-polynomial evaluation for k <= 25,
    /// truncated inverse-Fourier quadrature beyond that.
    double theta(double y) const;

    /// Theta(x), real and even; Theta(0) = 2a.
    double theta_hat(double x) const;

    /// The three-piece decay bound on |Theta|.
    double fourier_bound(double x) const;
};

/// Build a kernel; requires 0 < delta < a/4 and k >= 1.
SmoothingKernel make_kernel(double a, double delta, int k);

/// Default instantiation for a window of half-width eps at scale X:
/// a = 9 eps / 10, delta = eps / 10, k = floor(log X) (at least 1).
SmoothingKernel kernel_for_epsilon(double eps, double X);

/// Variant used for the binary counting argument: a = 5 eps / 4,
/// delta = eps / 4, k = floor(log X0); plateau exactly [-eps, eps],
/// support |y| < 3 eps / 2.
SmoothingKernel kernel_binary_variant(double eps, double X0);

} // namespace pslp
