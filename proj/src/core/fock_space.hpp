#ifndef FOCKPROJ_CORE_FOCK_SPACE_HPP
#define FOCKPROJ_CORE_FOCK_SPACE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace fockproj {

using Index = std::int64_t;

enum class Truncation { per_mode, total_quanta };

/*
 * Truncated multimode bosonic occupation basis with a bijective map between
 * multi-indices (n_1,...,n_J) and flat indices 0..D-1.
 *
 * per_mode:      n_j <= n_max_j for each mode; flat index is the mixed-radix
 *                number with mode 0 as the slowest digit, so two-mode spaces
 *                are ordered like a Kronecker product.
 * total_quanta:  sum_j n_j <= N_max; states ordered by total quanta, then
 *                lexicographically, so quanta-preserving operators are
 *                block-contiguous.
 */
class FockSpace {
public:
    static constexpr Index default_dimension_ceiling = 100000;

    static std::shared_ptr<const FockSpace> per_mode(std::vector<int> n_max,
                                                     Index ceiling = default_dimension_ceiling);
    static std::shared_ptr<const FockSpace> total_quanta(int modes, int n_max,
                                                         Index ceiling = default_dimension_ceiling);

    Truncation scheme() const { return scheme_; }
    int modes() const { return modes_; }
    Index dimension() const { return static_cast<Index>(states_.size()); }

    // per_mode cutoffs (per mode), or N_max replicated for total_quanta.
    const std::vector<int>& mode_cutoffs() const { return cutoffs_; }
    int total_cutoff() const { return total_max_; }

    const std::vector<int>& occupations(Index flat) const;
    Index flat_index(std::span<const int> occ) const;
    bool contains(std::span<const int> occ) const;

    // States whose occupation can be raised by one quantum in every mode
    // without leaving the truncation. Truncation-boundary artifacts live in
    // the complement.
    bool interior(Index flat) const;
    std::vector<Index> interior_states() const;

    bool same(const FockSpace& other) const { return this == &other; }

private:
    FockSpace() = default;

    std::uint64_t pack(std::span<const int> occ) const;

    Truncation scheme_ = Truncation::per_mode;
    int modes_ = 0;
    int total_max_ = 0;          // total_quanta only
    std::vector<int> cutoffs_;   // per-mode occupation bound
    std::vector<std::uint64_t> strides_;
    std::vector<std::vector<int>> states_;
    std::unordered_map<std::uint64_t, Index> lookup_;
};

using SpacePtr = std::shared_ptr<const FockSpace>;

}  // namespace fockproj

#endif
