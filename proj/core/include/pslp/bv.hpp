#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pslp/arith.hpp"

namespace pslp {

// Configuration of one averaged-error run: for each modulus d up to
// sqrt(X)/(log X)^{A+5}, take the worst reduced residue a and the worst
// sampled y <= X of |E(y, t, d, a)|, and sum over d.
//
// A is a free parameter here.  With the literal cutoff formula the modulus
// range is empty for every A > 0 at sieve-friendly X, so empirical runs use
// small (typically negative) A to get a non-trivial range; the theorem's
// regime is recovered only asymptotically.
struct BvConfig {
    double X = 0;
    double c = 1.05;
    double t = 0;
    double A = 1;
    double mu = 0.5;
    std::vector<double> y_grid;       // sample points for the inner max
    bool exact_breakpoints = false;   // sweep every jump of the Lambda-sum instead

    double cutoff() const;            // sqrt(X) / (log X)^{A+5}
    void validate() const;

    /// Dyadic-plus-endpoint grid {X, X/2^{1/4}, X/2^{2/4}, ...} down to ~sqrt(X).
    static std::vector<double> default_y_grid(double X, int points_per_octave = 4);
};

struct BvResult {
    double sigma;       // sum over d of the sampled max of |E|
    double comparison;  // X / (log X)^A
    bool empty_range;   // cutoff < 1, nothing to sum
    std::uint64_t d_max;
};

/// Progress callbacks may fire concurrently from worker threads.
using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// The averaged error.  The sampled inner max is a lower bound for the true
/// max over y <= X unless exact_breakpoints is set (X <= 1e4 only).
BvResult bv_average(const ArithmeticTables& tables, const BvConfig& cfg,
                    unsigned threads = 1, const ProgressFn& progress = {});

struct BvRow {
    double X, sigma, comparison, ratio;
    bool empty_range;
    std::uint64_t d_max;
};

struct BvReport {
    std::vector<BvRow> rows;
    bool trend_ok;  // ratio never grows by more than 50% between consecutive X
};

/// Scaling study across ascending X values (the config's X is replaced row
/// by row; its y_grid is rescaled proportionally if non-default).
BvReport bv_table(const ArithmeticTables& tables, std::span<const double> Xs,
                  const BvConfig& templ, unsigned threads = 1);

} // namespace pslp
