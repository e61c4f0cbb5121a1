#include "aaslab/structure.hpp"

#include "aaslab/kernels.hpp"

#include <algorithm>
#include <deque>

namespace aaslab {

std::vector<unsigned> order_set(const Group& g)
{
    std::vector<unsigned> out;
    for (std::size_t x = 1; x < g.order(); ++x)
        out.push_back(g.element_order(Element(x)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Element> elements_of_order(const Group& g, unsigned n)
{
    std::vector<Element> out;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (g.element_order(Element(x)) == n)
            out.push_back(Element(x));
    return out;
}

namespace {

    // Closes `members` (listed in `elements`) under right multiplication.
    // Elements from index `fresh_from` on get every generator applied; the
    // older ones, already closed under all but `extra`, only get `extra`.
    void close_under(const Group& g, ElementSet& members, std::vector<Element>& elements,
                     std::span<const Element> gens, std::size_t fresh_from, std::optional<Element> extra)
    {
        if (extra) {
            const std::size_t old_count = fresh_from;
            for (std::size_t i = 0; i < old_count; ++i) {
                const Element y = g.mul(elements[i], *extra);
                if (!members.test(y)) {
                    members.set(y);
                    elements.push_back(y);
                }
            }
        }
        for (std::size_t i = fresh_from; i < elements.size(); ++i) {
            const auto row = g.row(elements[i]);
            for (Element s : gens) {
                const Element y = row[s];
                if (!members.test(y)) {
                    members.set(y);
                    elements.push_back(y);
                }
            }
        }
    }

    Subgroup finish(std::vector<Element> elements, ElementSet members, std::vector<Element> gens)
    {
        std::sort(elements.begin(), elements.end());
        return {std::move(members), std::move(elements), std::move(gens)};
    }

} // namespace

Subgroup generated_subgroup(const Group& g, std::span<const Element> seeds)
{
    ElementSet members(g.order());
    members.set(kIdentity);
    std::vector<Element> elements{kIdentity};
    close_under(g, members, elements, seeds, 0, std::nullopt);
    return finish(std::move(elements), std::move(members), {seeds.begin(), seeds.end()});
}

Subgroup trivial_subgroup(const Group& g)
{
    return generated_subgroup(g, {});
}

Subgroup whole_group(const Group& g)
{
    ElementSet members(g.order());
    members.set();
    std::vector<Element> elements(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
        elements[x] = Element(x);
    return {std::move(members), std::move(elements), g.generators()};
}

Subgroup extend_subgroup(const Group& g, const Subgroup& h, Element x)
{
    if (h.contains(x))
        return h;
    ElementSet members = h.membership;
    std::vector<Element> elements = h.elements;
    std::vector<Element> gens = h.generators;
    gens.push_back(x);
    close_under(g, members, elements, gens, elements.size(), x);
    return finish(std::move(elements), std::move(members), std::move(gens));
}

Subgroup closure_of(const Group& g, std::span<const Element> elements)
{
    Subgroup h = trivial_subgroup(g);
    for (Element x : elements) {
        if (h.is_whole(g))
            break;
        h = extend_subgroup(g, h, x);
    }
    return h;
}

Subgroup derived_subgroup(const Group& g)
{
    const auto k = kernels::commutator_counts(g);
    std::vector<Element> commutators;
    for (std::size_t x = 1; x < g.order(); ++x)
        if (k[x] != 0)
            commutators.push_back(Element(x));
    return closure_of(g, commutators);
}

bool is_perfect(const Group& g)
{
    return derived_subgroup(g).size() == g.order();
}

bool is_normal(const Group& g, const Subgroup& h)
{
    for (Element x : h.elements)
        for (Element s : g.generators())
            if (!h.contains(g.conjugate(x, s)))
                return false;
    return true;
}

ConjugacyData conjugacy_classes(const Group& g)
{
    const std::size_t n = g.order();
    constexpr std::size_t unassigned = std::size_t(-1);
    ConjugacyData data;
    data.class_of.assign(n, unassigned);
    for (std::size_t start = 0; start < n; ++start) {
        if (data.class_of[start] != unassigned)
            continue;
        const std::size_t id = data.classes.size();
        std::vector<Element> members{Element(start)};
        data.class_of[start] = id;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (Element s : g.generators()) {
                const Element y = g.conjugate(members[i], s);
                if (data.class_of[y] == unassigned) {
                    data.class_of[y] = id;
                    members.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        data.representatives.push_back(Element(start));
        data.classes.push_back(std::move(members));
    }
    return data;
}

std::vector<std::pair<Element, Element>> CommutatorWidth::factorization(Element x) const
{
    std::vector<std::pair<Element, Element>> out;
    if (layer_of.at(x) < 0)
        return out;
    while (layer_of[x] > 0) {
        out.push_back(*commutator_pair[layer_step[x]]);
        x = layer_prev[x];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

CommutatorWidth commutator_width(const Group& g)
{
    const std::size_t n = g.order();
    CommutatorWidth cw;
    cw.layer_of.assign(n, -1);
    cw.layer_prev.assign(n, kIdentity);
    cw.layer_step.assign(n, kIdentity);
    cw.commutator_pair.assign(n, std::nullopt);

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Element c = g.commutator(Element(a), Element(b));
            if (!cw.commutator_pair[c])
                cw.commutator_pair[c] = std::pair{Element(a), Element(b)};
        }
    std::vector<Element> commutators;
    for (std::size_t c = 1; c < n; ++c)
        if (cw.commutator_pair[c])
            commutators.push_back(Element(c));

    cw.layer_of[kIdentity] = 0;
    std::vector<Element> frontier{kIdentity};
    int layer = 0;
    while (!frontier.empty()) {
        ++layer;
        std::vector<Element> next;
        for (Element y : frontier) {
            const auto row = g.row(y);
            for (Element c : commutators) {
                const Element x = row[c];
                if (cw.layer_of[x] < 0) {
                    cw.layer_of[x] = layer;
                    cw.layer_prev[x] = y;
                    cw.layer_step[x] = c;
                    next.push_back(x);
                }
            }
        }
        if (!next.empty())
            cw.width = unsigned(layer);
        frontier = std::move(next);
    }
    return cw;
}

} // namespace aaslab
