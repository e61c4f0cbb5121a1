#include "aaslab/genvec.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/structure.hpp"

#include <algorithm>

namespace aaslab {

bool high_genus_applies(const Signature& sig, const AasBounds& bounds)
{
    if (sig.h < bounds.genus_threshold())
        return false;
    return std::all_of(sig.tail.begin(), sig.tail.end(),
                       [&](unsigned m) { return bounds.derived_witness.count(m) != 0; });
}

namespace {

    // Index of the first order whose multiplicity exceeds its tail limit.
    std::optional<std::size_t> long_order(const Signature& sig, const AasBounds& bounds)
    {
        for (std::size_t i = 0; i < bounds.per_order.size(); ++i) {
            const auto& ob = bounds.per_order[i];
            const auto t = std::size_t(std::count(sig.tail.begin(), sig.tail.end(), ob.order));
            if (t > ob.tail_limit())
                return i;
        }
        return std::nullopt;
    }

    void check_orders(const Signature& sig, const AasBounds& bounds)
    {
        for (unsigned m : sig.tail)
            if (!bounds.derived_witness.count(m))
                throw OrderNotInGroup(m);
    }

} // namespace

bool long_tail_applies(const Signature& sig, const AasBounds& bounds)
{
    for (unsigned m : sig.tail)
        if (!bounds.derived_witness.count(m))
            return false;
    return long_order(sig, bounds).has_value();
}

GeneratingVector construct_high_genus(const Group& g, const Signature& sig, const AasBounds& bounds)
{
    check_orders(sig, bounds);
    if (sig.h < bounds.genus_threshold())
        throw PreconditionNotMet("orbit genus " + std::to_string(sig.h) + " is below the threshold "
                                 + std::to_string(bounds.genus_threshold()));

    GeneratingVector v;
    // (g_i, e) pairs carry generation and contribute trivial commutators
    for (Element x : bounds.generating_set) {
        v.a.push_back(x);
        v.b.push_back(kIdentity);
    }
    Element x = kIdentity;
    for (unsigned m : sig.tail) {
        const Element xj = bounds.derived_witness.at(m);
        v.c.push_back(xj);
        x = g.mul(x, xj);
    }
    for (auto [c, d] : bounds.commutators->factorization(g.inv(x))) {
        v.a.push_back(c);
        v.b.push_back(d);
    }
    while (v.a.size() < sig.h) {
        v.a.push_back(kIdentity);
        v.b.push_back(kIdentity);
    }
    return v;
}

GeneratingVector construct_long_tail(const Group& g, const Signature& sig, const AasBounds& bounds)
{
    check_orders(sig, bounds);
    const auto which = long_order(sig, bounds);
    if (!which)
        throw PreconditionNotMet("no multiplicity of " + sig.to_string() + " exceeds its tail limit");
    const OrderBounds& ob = bounds.per_order[*which];
    const unsigned n = ob.order;

    GeneratingVector v;
    v.a.assign(sig.h, kIdentity);
    v.b.assign(sig.h, kIdentity);

    // the other tail orders, x = x_1 ... x_l
    Element x = kIdentity;
    std::size_t t = 0;
    for (unsigned m : sig.tail) {
        if (m == n) {
            ++t;
            continue;
        }
        const Element xj = bounds.derived_witness.at(m);
        v.c.push_back(xj);
        x = g.mul(x, xj);
    }
    // x^-1 as a word in order-n letters
    const auto word = shortest_word(g, ob.odd_vector, g.inv(x));
    v.c.insert(v.c.end(), word.begin(), word.end());

    const std::size_t rest = t - word.size();
    const auto& closing = (rest - ob.M()) % 2 == 0 ? ob.even_vector : ob.odd_vector;
    const Element y = ob.even_vector.front();
    for (std::size_t i = 0; i < (rest - closing.size()) / 2; ++i) {
        v.c.push_back(y);
        v.c.push_back(g.inv(y));
    }
    v.c.insert(v.c.end(), closing.begin(), closing.end());
    return sort_tail(g, std::move(v));
}

} // namespace aaslab
