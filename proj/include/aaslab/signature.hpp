#pragma once

#include "aaslab/group.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace aaslab {

using Rational = boost::multiprecision::cpp_rational;

/// (h; m_1, ..., m_s) with the tail kept sorted ascending.
struct Signature {
    unsigned h = 0;
    std::vector<unsigned> tail;

    Signature() = default;
    Signature(unsigned orbit_genus, std::vector<unsigned> branch_orders);

    std::size_t s() const noexcept { return tail.size(); }
    /// "0;2,3,7" or "2;-"
    std::string to_string() const;

    auto operator<=>(const Signature&) const = default;
};

/// Tail multiplicities [n_i, t_i] aligned with a group's order set.
struct AbbreviatedSignature {
    unsigned h = 0;
    std::vector<std::pair<unsigned, unsigned>> pairs;

    Signature expand() const;
    /// "(0; [2,2],[3,0],[5,1])"
    std::string to_string() const;

    bool operator==(const AbbreviatedSignature&) const = default;
};

/// Which entry of the classical list of excluded tuples a tuple matches.
struct ExclusionReason {
    int item = 0;
    /// Orders instantiating the pattern (for item 14: the orders divisible
    /// by the two-part of |G|).
    std::vector<unsigned> orders;
    std::string description;
};

/// g = 1 + |G|(h-1) + |G|/2 * sum(1 - 1/m_j), exactly.
Rational rh_genus(std::uint64_t group_order, const Signature& sig);

/// Tail entries drawn from the order set, integral genus, genus >= 2.
bool is_potential(const Group& g, const Signature& sig);

/// Matches the tuple against the fourteen excluded patterns in list order
/// and returns the first hit; nullopt means the tuple is not excluded.
/// Throws OrderNotInGroup when a tail entry is not an element order.
std::optional<ExclusionReason> exclusion_reason(const Group& g, const Signature& sig);

/// Variant on a bare order set and group order; used by the equivalence
/// tests over synthetic order sets.
std::optional<ExclusionReason> exclusion_reason(const std::vector<unsigned>& order_set, std::uint64_t group_order,
                                                const Signature& sig);

AbbreviatedSignature abbreviate(const Group& g, const Signature& sig);

/// Every potential signature of the given genus, sorted by (h, tail).
std::vector<Signature> enumerate_potential_by_genus(const Group& g, std::uint64_t genus);

/// Twice (genus - 1) as an exact integer; assumes every m_j divides |G|.
std::int64_t twice_genus_minus_one(std::uint64_t group_order, const Signature& sig);

} // namespace aaslab
