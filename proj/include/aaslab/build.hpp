#pragma once

#include "aaslab/group.hpp"

#include <string>
#include <vector>

namespace aaslab {

/// Parsed description of a group. Construct with the factory helpers or
/// cli::parse_group_spec.
struct GroupSpec {
    enum class Family {
        Alternating,       // A<n>
        Symmetric,         // S<n>
        Cyclic,            // C<n>
        ElementaryAbelian, // EA(p,k)
        Dihedral,          // D<n>, order 2n
        Quaternion,        // Q<2^k>, generalized quaternion of that order
        SpecialLinear,     // SL(2,q)
        ProjectiveSpecialLinear, // PSL(2,q)
        Heisenberg,        // Heis(p)
        Metacyclic,        // MC(p,a,b,t) = C_{p^a} x| C_{p^b}
        Permutation,       // Perm[...]
        Product,           // left-associative direct product of factors
    };

    /// One permutation generator as a list of cycles over points 1..n.
    using Cycles = std::vector<std::vector<unsigned>>;

    Family family = Family::Cyclic;
    std::vector<std::uint64_t> params;
    std::vector<Cycles> permutation_generators;
    std::vector<GroupSpec> factors;

    static GroupSpec alternating(unsigned n) { return {Family::Alternating, {n}, {}, {}}; }
    static GroupSpec symmetric(unsigned n) { return {Family::Symmetric, {n}, {}, {}}; }
    static GroupSpec cyclic(unsigned n) { return {Family::Cyclic, {n}, {}, {}}; }
    static GroupSpec elementary_abelian(unsigned p, unsigned k) { return {Family::ElementaryAbelian, {p, k}, {}, {}}; }
    static GroupSpec dihedral(unsigned n) { return {Family::Dihedral, {n}, {}, {}}; }
    static GroupSpec quaternion(unsigned order) { return {Family::Quaternion, {order}, {}, {}}; }
    static GroupSpec sl2(unsigned q) { return {Family::SpecialLinear, {q}, {}, {}}; }
    static GroupSpec psl2(unsigned q) { return {Family::ProjectiveSpecialLinear, {q}, {}, {}}; }
    static GroupSpec heisenberg(unsigned p) { return {Family::Heisenberg, {p}, {}, {}}; }
    static GroupSpec metacyclic(unsigned p, unsigned a, unsigned b, unsigned t) { return {Family::Metacyclic, {p, a, b, t}, {}, {}}; }
    static GroupSpec permutations(std::vector<Cycles> gens) { return {Family::Permutation, {}, std::move(gens), {}}; }
    static GroupSpec product(std::vector<GroupSpec> fs) { return {Family::Product, {}, {}, std::move(fs)}; }

    /// Canonical text in the spec grammar, e.g. "Heis(3)xC3".
    std::string canonical() const;
    /// Throws InvalidSpec when parameters are out of range.
    void validate() const;
    /// Order of the denoted group computed from the parameters, saturating
    /// at UINT64_MAX. Returns 0 for permutation specs (unknown up front).
    std::uint64_t predicted_order() const;

    bool operator==(const GroupSpec&) const = default;
};

/// Materializes a spec. Elements are indexed by breadth-first closure from
/// the generators in spec order, so the result is deterministic.
Group build_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

/// G x H with index i_G * |H| + i_H.
Group direct_product(const Group& g, const Group& h, std::size_t order_cap = kDefaultOrderCap);

} // namespace aaslab
