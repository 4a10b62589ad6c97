#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "annot/error.hpp"

namespace annot {

/// Constants of the Robertson tf formulation. The defaults are the values
/// the weighting scheme is normally run with here (k1 = k2 = 1, b = 0.5).
struct WeightingParams {
    double k1 = 1.0;
    double k2 = 1.0;
    double b = 0.5;

    void validate() const {
        if (!(k1 > 0.0)) throw DomainError("weighting: k1 must be > 0");
        if (!(k2 > 0.0)) throw DomainError("weighting: k2 must be > 0");
        if (!(b >= 0.0 && b <= 1.0)) throw DomainError("weighting: b must be in [0, 1]");
    }
};

/// Saturating term frequency with document-length normalization:
///   k1 * n / (n + k2 * (1 - b + b * doc_len / avg_len))
/// Zero when the term does not occur. Bounded above by k1, strictly
/// increasing in n, strictly decreasing in doc_len.
inline double robertson_tf(std::size_t n, std::size_t doc_len, double avg_len,
                           const WeightingParams& p = {}) {
    if (!(avg_len > 0.0)) throw DomainError("robertson_tf: avg_len must be > 0");
    if (n == 0) return 0.0;
    const double nn = static_cast<double>(n);
    const double len_norm = 1.0 - p.b + p.b * static_cast<double>(doc_len) / avg_len;
    return p.k1 * nn / (nn + p.k2 * len_norm);
}

/// Inverse document frequency, natural log, clamped at zero so that weights
/// stay non-negative when a term occurs in more than half the corpus:
///   max(0, ln((D - df + 0.5) / (df + 0.5)))
inline double robertson_idf(std::size_t doc_count, std::size_t df) {
    if (df < 1 || df > doc_count)
        throw DomainError("robertson_idf: df " + std::to_string(df) + " outside [1, " +
                          std::to_string(doc_count) + "]");
    const double d = static_cast<double>(doc_count);
    const double f = static_cast<double>(df);
    return std::max(0.0, std::log((d - f + 0.5) / (f + 0.5)));
}

} // namespace annot
