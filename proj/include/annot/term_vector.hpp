#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "annot/error.hpp"

namespace annot {

/// Sparse weight vector over the fused vocabulary. Positions below `boundary`
/// are textual stems, positions at or above it are visual words. Entries are
/// kept sorted by position; weights are finite and non-negative.
class TermVector {
public:
    TermVector() = default;
    TermVector(std::size_t dim, std::size_t boundary) : dim_(dim), boundary_(boundary) {}

    std::size_t dim() const { return dim_; }
    std::size_t boundary() const { return boundary_; }
    const std::vector<std::pair<std::size_t, double>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Positions must be added in strictly increasing order.
    void push(std::size_t position, double weight) {
        if (position >= dim_) throw DomainError("term vector: position past vocabulary size");
        if (!entries_.empty() && entries_.back().first >= position)
            throw DomainError("term vector: positions must increase");
        if (!(weight >= 0.0) || !std::isfinite(weight))
            throw DomainError("term vector: weight must be finite and >= 0");
        if (weight != 0.0) entries_.emplace_back(position, weight);
    }

    double l2_norm_block(bool visual) const {
        double s = 0.0;
        for (const auto& [pos, w] : entries_)
            if ((pos >= boundary_) == visual) s += w * w;
        return std::sqrt(s);
    }

    /// Scales each block to unit L2 norm; all-zero blocks stay zero. This is
    /// the normalization every column of the term-document matrix carries.
    void normalize_blocks() {
        const double tn = l2_norm_block(false);
        const double vn = l2_norm_block(true);
        for (auto& [pos, w] : entries_) {
            const double n = pos >= boundary_ ? vn : tn;
            if (n > 0.0) w /= n;
        }
    }

    std::vector<double> to_dense() const {
        std::vector<double> dense(dim_, 0.0);
        for (const auto& [pos, w] : entries_) dense[pos] = w;
        return dense;
    }

private:
    std::size_t dim_ = 0;
    std::size_t boundary_ = 0;
    std::vector<std::pair<std::size_t, double>> entries_;
};

} // namespace annot
