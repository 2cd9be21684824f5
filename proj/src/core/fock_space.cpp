#include "fock_space.hpp"

#include <algorithm>
#include <cmath>

namespace fockproj {

namespace {

void check_ceiling(Index dim, Index ceiling) {
    require(dim <= ceiling, errc::dimension_ceiling,
            "basis dimension " + std::to_string(dim) + " exceeds ceiling " +
                std::to_string(ceiling));
}

// All occupation vectors with sum == total over `modes` modes, lexicographic.
void enumerate_fixed_sum(int modes, int total, std::vector<int>& occ,
                         std::vector<std::vector<int>>& out, int mode = 0) {
    if (mode == modes - 1) {
        occ[mode] = total;
        out.push_back(occ);
        return;
    }
    for (int n = 0; n <= total; ++n) {
        occ[mode] = n;
        enumerate_fixed_sum(modes, total - n, occ, out, mode + 1);
    }
}

}  // namespace

std::shared_ptr<const FockSpace> FockSpace::per_mode(std::vector<int> n_max, Index ceiling) {
    require(!n_max.empty(), errc::invalid_argument, "mode count must be at least 1");
    for (int m : n_max)
        require(m >= 0, errc::invalid_argument, "per-mode cutoff must be nonnegative");

    auto sp = std::shared_ptr<FockSpace>(new FockSpace());
    sp->scheme_ = Truncation::per_mode;
    sp->modes_ = static_cast<int>(n_max.size());
    sp->cutoffs_ = n_max;

    Index dim = 1;
    for (int m : n_max) {
        dim *= static_cast<Index>(m) + 1;
        check_ceiling(dim, ceiling);
    }

    // mixed radix, mode 0 slowest
    sp->strides_.assign(n_max.size(), 1);
    for (int j = sp->modes_ - 2; j >= 0; --j)
        sp->strides_[j] = sp->strides_[j + 1] * static_cast<std::uint64_t>(n_max[j + 1] + 1);

    sp->states_.reserve(static_cast<std::size_t>(dim));
    std::vector<int> occ(n_max.size(), 0);
    for (Index i = 0; i < dim; ++i) {
        sp->states_.push_back(occ);
        for (int j = sp->modes_ - 1; j >= 0; --j) {
            if (++occ[j] <= n_max[j]) break;
            occ[j] = 0;
        }
    }
    return sp;
}

std::shared_ptr<const FockSpace> FockSpace::total_quanta(int modes, int n_max, Index ceiling) {
    require(modes >= 1, errc::invalid_argument, "mode count must be at least 1");
    require(n_max >= 0, errc::invalid_argument, "total-quanta cutoff must be nonnegative");

    auto sp = std::shared_ptr<FockSpace>(new FockSpace());
    sp->scheme_ = Truncation::total_quanta;
    sp->modes_ = modes;
    sp->total_max_ = n_max;
    sp->cutoffs_.assign(modes, n_max);

    const std::uint64_t radix = static_cast<std::uint64_t>(n_max) + 1;
    require(static_cast<double>(modes) * std::log2(static_cast<double>(radix)) < 63.0,
            errc::invalid_argument, "occupation key does not fit 64 bits");
    sp->strides_.assign(modes, 1);
    for (int j = modes - 2; j >= 0; --j) sp->strides_[j] = sp->strides_[j + 1] * radix;

    std::vector<int> occ(modes, 0);
    for (int total = 0; total <= n_max; ++total) {
        enumerate_fixed_sum(modes, total, occ, sp->states_);
        check_ceiling(static_cast<Index>(sp->states_.size()), ceiling);
    }

    sp->lookup_.reserve(sp->states_.size());
    for (Index i = 0; i < sp->dimension(); ++i)
        sp->lookup_.emplace(sp->pack(sp->states_[static_cast<std::size_t>(i)]), i);
    return sp;
}

std::uint64_t FockSpace::pack(std::span<const int> occ) const {
    std::uint64_t key = 0;
    for (int j = 0; j < modes_; ++j)
        key += strides_[static_cast<std::size_t>(j)] * static_cast<std::uint64_t>(occ[j]);
    return key;
}

const std::vector<int>& FockSpace::occupations(Index flat) const {
    require(flat >= 0 && flat < dimension(), errc::invalid_argument, "flat index out of range");
    return states_[static_cast<std::size_t>(flat)];
}

bool FockSpace::contains(std::span<const int> occ) const {
    if (static_cast<int>(occ.size()) != modes_) return false;
    int total = 0;
    for (int j = 0; j < modes_; ++j) {
        if (occ[j] < 0 || occ[j] > cutoffs_[static_cast<std::size_t>(j)]) return false;
        total += occ[j];
    }
    if (scheme_ == Truncation::total_quanta && total > total_max_) return false;
    return true;
}

Index FockSpace::flat_index(std::span<const int> occ) const {
    require(contains(occ), errc::invalid_argument, "occupation vector outside the truncated basis");
    if (scheme_ == Truncation::per_mode) return static_cast<Index>(pack(occ));
    return lookup_.at(pack(occ));
}

bool FockSpace::interior(Index flat) const {
    const auto& occ = occupations(flat);
    if (scheme_ == Truncation::per_mode) {
        for (int j = 0; j < modes_; ++j)
            if (occ[static_cast<std::size_t>(j)] >= cutoffs_[static_cast<std::size_t>(j)])
                return false;
        return true;
    }
    int total = 0;
    for (int n : occ) total += n;
    return total < total_max_;
}

std::vector<Index> FockSpace::interior_states() const {
    std::vector<Index> out;
    for (Index i = 0; i < dimension(); ++i)
        if (interior(i)) out.push_back(i);
    return out;
}

}  // namespace fockproj
