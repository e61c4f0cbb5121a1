#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace aaslab {

/// Index of an element inside its owning Group. Index 0 is the identity.
using Element = std::uint16_t;
inline constexpr Element kIdentity = 0;

inline constexpr std::size_t kDefaultOrderCap = 10000;
inline constexpr std::size_t kMaxOrderCap = 65535;
/// Groups up to this order keep the full multiplication table in memory.
/// Larger groups compute rows on demand and memoize them.
inline constexpr std::size_t kDenseTableLimit = 3000;

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// A finite group realized as an indexed element set with a complete
/// multiplication structure. Immutable and cheap to copy; copies share
/// storage. Concurrent calls to row() are safe.
class Group {
public:
    /// Fills out[y] = x * y for every y.
    using RowSource = std::function<void(Element x, std::span<Element> out)>;

    struct Parts {
        std::string label;
        std::vector<std::string> names;
        std::vector<Element> generators;
        std::vector<Element> inverse;
        std::vector<unsigned> element_order;
        RowSource rows;
    };

    explicit Group(Parts parts);

    std::size_t order() const noexcept;
    const std::string& label() const noexcept;
    const std::string& name(Element x) const;
    const std::vector<Element>& generators() const noexcept;

    std::span<const Element> row(Element x) const;
    Element mul(Element x, Element y) const { return row(x)[y]; }
    Element inv(Element x) const { return inverse()[x]; }
    const std::vector<Element>& inverse() const noexcept;
    unsigned element_order(Element x) const { return element_orders()[x]; }
    const std::vector<unsigned>& element_orders() const noexcept;

    /// g^-1 x g
    Element conjugate(Element x, Element g) const { return mul(mul(inv(g), x), g); }
    /// [a,b] = a^-1 b^-1 a b
    Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    Element power(Element x, std::uint64_t k) const;

    unsigned exponent() const noexcept;
    /// Largest power of 2 dividing the order.
    std::uint64_t two_part() const noexcept;
    bool is_abelian() const;
    bool is_dense() const noexcept;

    /// Renders a list of elements by name.
    std::vector<std::string> names_of(std::span<const Element> xs) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// A subgroup of some Group, stored as a membership bitset and a sorted
/// element list.
struct Subgroup {
    ElementSet membership;
    std::vector<Element> elements;
    std::vector<Element> generators;

    std::size_t size() const noexcept { return elements.size(); }
    bool contains(Element x) const { return membership.test(x); }
    bool is_whole(const Group& g) const { return elements.size() == g.order(); }
};

} // namespace aaslab
