#include "aaslab/signature.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/structure.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace aaslab {

Signature::Signature(unsigned orbit_genus, std::vector<unsigned> branch_orders)
    : h(orbit_genus), tail(std::move(branch_orders))
{
    std::sort(tail.begin(), tail.end());
}

std::string Signature::to_string() const
{
    std::ostringstream os;
    os << h << ';';
    if (tail.empty())
        os << '-';
    for (std::size_t i = 0; i < tail.size(); ++i)
        os << (i ? "," : "") << tail[i];
    return os.str();
}

Signature AbbreviatedSignature::expand() const
{
    std::vector<unsigned> tail;
    for (auto [n, t] : pairs)
        tail.insert(tail.end(), t, n);
    return {h, std::move(tail)};
}

std::string AbbreviatedSignature::to_string() const
{
    std::ostringstream os;
    os << '(' << h << ';';
    if (pairs.empty())
        os << " -";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        os << (i ? "," : " ") << '[' << pairs[i].first << ',' << pairs[i].second << ']';
    os << ')';
    return os.str();
}

Rational rh_genus(std::uint64_t group_order, const Signature& sig)
{
    const Rational n(group_order);
    Rational sum(0);
    for (unsigned m : sig.tail)
        sum += Rational(1) - Rational(1, m);
    return Rational(1) + n * (Rational(sig.h) - 1) + n / 2 * sum;
}

std::int64_t twice_genus_minus_one(std::uint64_t group_order, const Signature& sig)
{
    const auto n = std::int64_t(group_order);
    std::int64_t acc = 2 * n * (std::int64_t(sig.h) - 1);
    for (unsigned m : sig.tail)
        acc += n - n / std::int64_t(m);
    return acc;
}

namespace {

    bool in_order_set(const std::vector<unsigned>& orders, unsigned m)
    {
        return std::binary_search(orders.begin(), orders.end(), m);
    }

    using Tail = std::vector<unsigned>;

    struct FixedPattern {
        int item;
        unsigned h;
        Tail tail;
    };

    const std::vector<FixedPattern>& fixed_patterns()
    {
        static const std::vector<FixedPattern> patterns{
            {6, 0, {2, 3, 3}},  {7, 0, {2, 3, 4}},  {8, 0, {2, 3, 5}},    {9, 0, {2, 4, 4}},
            {10, 0, {3, 3, 3}}, {11, 0, {2, 3, 6}}, {12, 0, {2, 2, 2, 2}}, {13, 1, {}},
        };
        return patterns;
    }

    std::string describe(int item, const Tail& orders)
    {
        std::ostringstream os;
        os << "item " << item << ":";
        for (unsigned o : orders)
            os << ' ' << o;
        return os.str();
    }

} // namespace

std::optional<ExclusionReason> exclusion_reason(const std::vector<unsigned>& orders, std::uint64_t group_order,
                                                const Signature& sig)
{
    for (unsigned m : sig.tail)
        if (!in_order_set(orders, m))
            throw OrderNotInGroup(m);

    auto hit = [](int item, Tail os) {
        ExclusionReason r{item, std::move(os), {}};
        r.description = describe(r.item, r.orders);
        return std::optional<ExclusionReason>(std::move(r));
    };

    const auto& t = sig.tail;
    if (sig.h == 0) {
        if (t.empty())
            return hit(1, {});
        if (t.size() == 1)
            return hit(2, {t[0]});
        if (t.size() == 2 && t[0] == t[1])
            return hit(3, {t[0]});
        if (t.size() == 2)
            return hit(4, {t[0], t[1]});
        // (0; [2,2], [m,1]) for any m in the order set
        if (t.size() == 3 && t[0] == 2 && t[1] == 2)
            return hit(5, {2, t[2]});
    }
    for (const auto& p : fixed_patterns()) {
        if (sig.h == p.h && t == p.tail)
            return hit(p.item, p.tail);
    }

    if (group_order % 2 == 0) {
        std::uint64_t two_part = 1;
        for (std::uint64_t n = group_order; n % 2 == 0; n /= 2)
            two_part *= 2;
        unsigned odd_count = 0;
        Tail divisible;
        for (unsigned m : t) {
            if (m % two_part == 0) {
                ++odd_count;
                if (std::find(divisible.begin(), divisible.end(), m) == divisible.end())
                    divisible.push_back(m);
            }
        }
        if (odd_count % 2 == 1)
            return hit(14, divisible);
    }
    return std::nullopt;
}

std::optional<ExclusionReason> exclusion_reason(const Group& g, const Signature& sig)
{
    return exclusion_reason(order_set(g), g.order(), sig);
}

bool is_potential(const Group& g, const Signature& sig)
{
    const auto orders = order_set(g);
    for (unsigned m : sig.tail)
        if (!in_order_set(orders, m))
            return false;
    const Rational genus = rh_genus(g.order(), sig);
    return denominator(genus) == 1 && genus >= 2;
}

AbbreviatedSignature abbreviate(const Group& g, const Signature& sig)
{
    const auto orders = order_set(g);
    AbbreviatedSignature out{sig.h, {}};
    for (unsigned n : orders)
        out.pairs.emplace_back(n, 0u);
    for (unsigned m : sig.tail) {
        const auto it = std::lower_bound(orders.begin(), orders.end(), m);
        if (it == orders.end() || *it != m)
            throw OrderNotInGroup(m);
        ++out.pairs[std::size_t(it - orders.begin())].second;
    }
    return out;
}

std::vector<Signature> enumerate_potential_by_genus(const Group& g, std::uint64_t genus)
{
    std::vector<Signature> out;
    if (genus < 2)
        return out;
    const auto orders = order_set(g);
    const auto n = std::int64_t(g.order());
    const std::int64_t target = 2 * (std::int64_t(genus) - 1);
    const std::int64_t max_h = (std::int64_t(genus) - 1) / n + 1;

    Tail tail;
    std::function<void(std::int64_t, std::size_t, unsigned)> extend = [&](std::int64_t remaining, std::size_t from,
                                                                          unsigned h) {
        if (remaining == 0) {
            Signature sig{h, tail};
            if (is_potential(g, sig))
                out.push_back(std::move(sig));
            return;
        }
        for (std::size_t i = from; i < orders.size(); ++i) {
            const std::int64_t term = n - n / std::int64_t(orders[i]);
            if (term > remaining)
                break;
            tail.push_back(orders[i]);
            extend(remaining - term, i, h);
            tail.pop_back();
        }
    };
    for (std::int64_t h = 0; h <= max_h; ++h) {
        const std::int64_t remaining = target - 2 * n * (h - 1);
        if (remaining >= 0)
            extend(remaining, 0, unsigned(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace aaslab
