#pragma once

#include "aaslab/group.hpp"
#include "aaslab/structure.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace aaslab {

enum class Classification { Abelian, NonAbelianPGroup, Perfect, Other };

std::string to_string(Classification c);

struct ConditionFailure {
    /// 1: no element of this order in [G,G]; 2: elements of this order
    /// generate a proper subgroup.
    int condition = 0;
    unsigned order = 0;
    std::string note;
};

/// Outcome of the two-condition AAS test with witnesses per order.
struct AasReport {
    bool verdict = false;
    std::map<unsigned, std::optional<Element>> condition1;
    std::map<unsigned, std::optional<std::vector<Element>>> condition2;
    Classification classification = Classification::Other;
    std::vector<ConditionFailure> failures;
};

/// For each n in the order set, an element of order n inside [G,G].
std::map<unsigned, std::optional<Element>> orders_in_derived(const Group& g);
std::map<unsigned, std::optional<Element>> orders_in_derived(const Group& g, const Subgroup& derived);

/// A small generating set made of elements of order n, chosen greedily,
/// or nullopt when the order-n elements generate a proper subgroup.
/// Throws OrderNotInGroup.
std::optional<std::vector<Element>> generated_by_order(const Group& g, unsigned n);

AasReport is_aas(const Group& g);

Classification classify(const Group& g);
Classification classify(const Group& g, const Subgroup& derived);

/// Shortest odd-length sequence of order-n elements with product e, found
/// by breadth-first search over (element, parity). Lengths above 9 are not
/// searched. Throws PreconditionNotMet when either AAS condition fails at n
/// and NoOddProduct when the search comes up empty.
std::vector<Element> odd_identity_product(const Group& g, unsigned n);

/// Effective constants for one order n.
struct OrderBounds {
    unsigned order = 0;
    /// Generating set of order-n elements used for the even vector.
    std::vector<Element> generators;
    std::vector<Element> odd_product;   // length L, product e
    std::vector<Element> even_vector;   // (0; [n, M]) generating vector
    std::vector<Element> odd_vector;    // (0; [n, N]) = even_vector ++ odd_product
    unsigned alpha_even = 0;            // covering radius over even_vector entries and inverses
    unsigned alpha_odd = 0;             // same for odd_vector

    unsigned L() const { return unsigned(odd_product.size()); }
    unsigned M() const { return unsigned(even_vector.size()); }
    unsigned N() const { return unsigned(odd_vector.size()); }
    /// Tail multiplicity above which the long-tail construction applies.
    unsigned tail_limit() const { return std::max(N() + alpha_odd, M() + alpha_even); }
};

struct AasBounds {
    std::vector<Element> generating_set;
    unsigned width = 0;
    std::vector<OrderBounds> per_order;
    /// For every order, an element of that order in [G,G].
    std::map<unsigned, Element> derived_witness;
    unsigned N = 0;
    unsigned alpha = 0;
    std::shared_ptr<const CommutatorWidth> commutators;

    unsigned gen_count() const { return unsigned(generating_set.size()); }
    unsigned genus_threshold() const { return gen_count() + width; }
    /// r (N + alpha)
    std::uint64_t tail_threshold() const { return std::uint64_t(per_order.size()) * (N + alpha); }
    const OrderBounds& for_order(unsigned n) const;
};

/// Throws NotAas unless the group is AAS.
AasBounds compute_bounds(const Group& g);

/// Checks every AasBounds invariant; throws std::logic_error on failure.
void check_bounds(const Group& g, const AasBounds& bounds);

/// Largest distance from e in the Cayley graph over the letters and their
/// inverses; the letters must generate G.
unsigned covering_radius(const Group& g, const std::vector<Element>& letters);

/// Shortest word over letters and their inverses evaluating to target.
std::vector<Element> shortest_word(const Group& g, const std::vector<Element>& letters, Element target);

} // namespace aaslab
