#pragma once

#include "aaslab/group.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace aaslab {

/// Orders of the non-identity elements, ascending.
std::vector<unsigned> order_set(const Group& g);

/// Elements of the given order, ascending by index.
std::vector<Element> elements_of_order(const Group& g, unsigned n);

/// Smallest subgroup containing the seeds. The generators field echoes the seeds.
Subgroup generated_subgroup(const Group& g, std::span<const Element> seeds);

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

/// <H, x>. Starts from the already closed set H, so the cost is
/// proportional to the size of the result.
Subgroup extend_subgroup(const Group& g, const Subgroup& h, Element x);

/// Closure of a set, adding elements one at a time so the generator list
/// stays short (only elements that enlarge the closure are kept).
Subgroup closure_of(const Group& g, std::span<const Element> elements);

Subgroup derived_subgroup(const Group& g);
bool is_perfect(const Group& g);
bool is_normal(const Group& g, const Subgroup& h);

struct ConjugacyData {
    std::vector<std::size_t> class_of;
    std::vector<std::vector<Element>> classes;
    std::vector<Element> representatives;
};

/// Orbits under conjugation. Classes are numbered by ascending minimal
/// element, which is also the representative.
ConjugacyData conjugacy_classes(const Group& g);

/// Minimal commutator counts over [G,G] with witness factorizations.
struct CommutatorWidth {
    unsigned width = 0;
    /// Minimal number of commutators, or -1 outside [G,G].
    std::vector<int> layer_of;
    /// x = layer_prev[x] * [pair_of(layer_step[x])] along a minimal chain.
    std::vector<Element> layer_prev;
    std::vector<Element> layer_step;
    /// For every commutator value c, one pair (a, b) with [a, b] = c.
    std::vector<std::optional<std::pair<Element, Element>>> commutator_pair;

    /// Pairs (c_i, d_i) with x = [c_1,d_1]...[c_w,d_w] and w = layer_of[x].
    std::vector<std::pair<Element, Element>> factorization(Element x) const;
};

CommutatorWidth commutator_width(const Group& g);

} // namespace aaslab
