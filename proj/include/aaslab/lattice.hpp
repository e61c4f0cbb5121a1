#pragma once

#include "aaslab/group.hpp"

#include <cstdint>
#include <vector>

namespace aaslab {

inline constexpr std::size_t kDefaultLatticeCap = 500;

/// All subgroups of a group with the Moebius function to the top.
struct SubgroupLattice {
    /// Sorted by size, then by element list. subgroups.front() is trivial
    /// and subgroups.back() is the whole group.
    std::vector<Subgroup> subgroups;
    /// supergroups[i] lists the indices of proper supergroups of subgroups[i].
    std::vector<std::vector<std::size_t>> supergroups;
    /// mu(H, G) per subgroup.
    std::vector<std::int64_t> moebius;

    std::size_t size() const noexcept { return subgroups.size(); }
    /// Index of the subgroup with this membership, or size() if absent.
    std::size_t find(const ElementSet& membership) const;
    bool leq(std::size_t h, std::size_t k) const;
};

/// Enumerates every subgroup by cyclic extension: start from the cyclic
/// subgroups and close under H -> <H, x>. Throws LatticeCapExceeded when
/// |G| > cap.
SubgroupLattice subgroup_lattice(const Group& g, std::size_t cap = kDefaultLatticeCap);

/// Rebuilds containment and Moebius values from a subgroup list (for
/// example one loaded from a cache). The list must be complete.
SubgroupLattice lattice_from_subgroups(const Group& g, std::vector<Subgroup> subgroups);

} // namespace aaslab
