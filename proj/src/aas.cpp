#include "aaslab/aas.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/finite_field.hpp"
#include "aaslab/genvec.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace aaslab {

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::Abelian: return "abelian";
    case Classification::NonAbelianPGroup: return "non-abelian p-group";
    case Classification::Perfect: return "perfect";
    case Classification::Other: return "other";
    }
    return "other";
}

std::map<unsigned, std::optional<Element>> orders_in_derived(const Group& g, const Subgroup& derived)
{
    std::map<unsigned, std::optional<Element>> out;
    for (unsigned n : order_set(g))
        out[n] = std::nullopt;
    for (Element x : derived.elements) {
        if (x == kIdentity)
            continue;
        auto& slot = out[g.element_order(x)];
        if (!slot)
            slot = x;
    }
    return out;
}

std::map<unsigned, std::optional<Element>> orders_in_derived(const Group& g)
{
    return orders_in_derived(g, derived_subgroup(g));
}

std::optional<std::vector<Element>> generated_by_order(const Group& g, unsigned n)
{
    const auto candidates = elements_of_order(g, n);
    if (n < 2 || candidates.empty())
        throw OrderNotInGroup(n);
    if (!closure_of(g, candidates).is_whole(g))
        return std::nullopt;

    std::vector<Element> chosen;
    Subgroup current = trivial_subgroup(g);
    while (!current.is_whole(g)) {
        std::optional<Subgroup> best;
        Element best_x = kIdentity;
        for (Element x : candidates) {
            if (current.contains(x))
                continue;
            Subgroup grown = extend_subgroup(g, current, x);
            if (!best || grown.size() > best->size()) {
                best_x = x;
                best = std::move(grown);
                if (best->is_whole(g))
                    break;
            }
        }
        chosen.push_back(best_x);
        current = std::move(*best);
    }
    return chosen;
}

Classification classify(const Group& g, const Subgroup& derived)
{
    if (derived.size() == 1)
        return Classification::Abelian;
    if (prime_divisors(g.order()).size() == 1)
        return Classification::NonAbelianPGroup;
    if (derived.size() == g.order())
        return Classification::Perfect;
    return Classification::Other;
}

Classification classify(const Group& g)
{
    return classify(g, derived_subgroup(g));
}

AasReport is_aas(const Group& g)
{
    AasReport report;
    const Subgroup derived = derived_subgroup(g);
    report.classification = classify(g, derived);
    report.condition1 = orders_in_derived(g, derived);
    for (const auto& [n, witness] : report.condition1) {
        if (!witness)
            report.failures.push_back({1, n, "[G,G] has no element of order " + std::to_string(n)});
        auto gens = generated_by_order(g, n);
        if (!gens)
            report.failures.push_back({2, n, "elements of order " + std::to_string(n) + " generate a proper subgroup"});
        report.condition2[n] = std::move(gens);
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const ConditionFailure& a, const ConditionFailure& b) { return std::pair(a.condition, a.order) < std::pair(b.condition, b.order); });
    report.verdict = report.failures.empty() && !report.condition1.empty();
    return report;
}

std::vector<Element> odd_identity_product(const Group& g, unsigned n)
{
    constexpr unsigned max_length = 9;
    const auto letters = elements_of_order(g, n);
    if (n < 2 || letters.empty())
        throw OrderNotInGroup(n);
    const auto derived = orders_in_derived(g);
    if (!derived.at(n))
        throw PreconditionNotMet("[G,G] has no element of order " + std::to_string(n));
    if (!closure_of(g, letters).is_whole(g))
        throw PreconditionNotMet("elements of order " + std::to_string(n) + " do not generate the group");

    // state = 2 * element + parity of the word length
    const std::size_t states = 2 * g.order();
    constexpr std::size_t unseen = std::size_t(-1);
    std::vector<std::size_t> parent(states, unseen);
    std::vector<Element> via(states, kIdentity);
    std::vector<unsigned> depth(states, 0);
    const std::size_t start = 0, target = 1;
    parent[start] = start;
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && parent[target] == unseen) {
        const std::size_t s = queue.front();
        queue.pop_front();
        if (depth[s] == max_length)
            continue;
        const auto row = g.row(Element(s / 2));
        for (Element y : letters) {
            const std::size_t t = 2 * std::size_t(row[y]) + (1 - s % 2);
            if (parent[t] == unseen) {
                parent[t] = s;
                via[t] = y;
                depth[t] = depth[s] + 1;
                queue.push_back(t);
            }
        }
    }
    if (parent[target] == unseen)
        throw NoOddProduct("no odd product of order-" + std::to_string(n) + " elements of length <= 9 equals e");
    std::vector<Element> word;
    for (std::size_t s = target; s != start; s = parent[s])
        word.push_back(via[s]);
    std::reverse(word.begin(), word.end());
    return word;
}

namespace {

    std::vector<Element> alphabet_with_inverses(const Group& g, const std::vector<Element>& letters)
    {
        std::vector<Element> out;
        for (Element x : letters) {
            out.push_back(x);
            out.push_back(g.inv(x));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    struct Ball {
        std::vector<int> distance;
        std::vector<Element> parent;
        std::vector<Element> via;
    };

    Ball grow_ball(const Group& g, const std::vector<Element>& letters)
    {
        const auto alphabet = alphabet_with_inverses(g, letters);
        Ball ball{std::vector<int>(g.order(), -1), std::vector<Element>(g.order(), kIdentity),
                  std::vector<Element>(g.order(), kIdentity)};
        ball.distance[kIdentity] = 0;
        std::vector<Element> frontier{kIdentity};
        while (!frontier.empty()) {
            std::vector<Element> next;
            for (Element x : frontier) {
                const auto row = g.row(x);
                for (Element a : alphabet) {
                    const Element y = row[a];
                    if (ball.distance[y] < 0) {
                        ball.distance[y] = ball.distance[x] + 1;
                        ball.parent[y] = x;
                        ball.via[y] = a;
                        next.push_back(y);
                    }
                }
            }
            frontier = std::move(next);
        }
        return ball;
    }

} // namespace

unsigned covering_radius(const Group& g, const std::vector<Element>& letters)
{
    const Ball ball = grow_ball(g, letters);
    int radius = 0;
    for (int d : ball.distance) {
        if (d < 0)
            throw std::logic_error("letters do not generate the group");
        radius = std::max(radius, d);
    }
    return unsigned(radius);
}

std::vector<Element> shortest_word(const Group& g, const std::vector<Element>& letters, Element target)
{
    const Ball ball = grow_ball(g, letters);
    if (ball.distance[target] < 0)
        throw std::logic_error("target not reachable from the letters");
    std::vector<Element> word;
    for (Element x = target; x != kIdentity; x = ball.parent[x])
        word.push_back(ball.via[x]);
    std::reverse(word.begin(), word.end());
    return word;
}

const OrderBounds& AasBounds::for_order(unsigned n) const
{
    for (const auto& ob : per_order)
        if (ob.order == n)
            return ob;
    throw OrderNotInGroup(n);
}

namespace {

    constexpr std::uint64_t kShorteningBudget = 200'000;

    OrderBounds bounds_for_order(const Group& g, const ConjugacyData& classes, unsigned n,
                                 const std::vector<Element>& generators)
    {
        OrderBounds ob;
        ob.order = n;
        ob.generators = generators;
        ob.even_vector = generators;
        for (auto it = generators.rbegin(); it != generators.rend(); ++it)
            ob.even_vector.push_back(g.inv(*it));
        // try shorter even tails; keep the first one found
        for (unsigned m = 2; m < ob.even_vector.size(); m += 2) {
            const Signature sig{0, std::vector<unsigned>(m, n)};
            const auto found = search(g, classes, sig, kShorteningBudget);
            if (found.vector) {
                ob.even_vector = found.vector->c;
                break;
            }
        }
        ob.odd_product = odd_identity_product(g, n);
        ob.odd_vector = ob.even_vector;
        ob.odd_vector.insert(ob.odd_vector.end(), ob.odd_product.begin(), ob.odd_product.end());
        ob.alpha_even = covering_radius(g, ob.even_vector);
        ob.alpha_odd = covering_radius(g, ob.odd_vector);
        return ob;
    }

} // namespace

AasBounds compute_bounds(const Group& g)
{
    const AasReport report = is_aas(g);
    if (!report.verdict) {
        const auto& f = report.failures.front();
        if (f.condition == 1)
            throw NotAas(g.label() + " is not AAS: (h; " + std::to_string(f.order) + ") is a non-signature for every h >= 1");
        throw NotAas(g.label() + " is not AAS: (0; [" + std::to_string(f.order) + ",t]) is a non-signature for every t >= 4");
    }

    AasBounds bounds;
    const unsigned first_order = report.condition2.begin()->first;
    bounds.generating_set = *report.condition2.at(first_order);
    if (g.generators().size() < bounds.generating_set.size())
        bounds.generating_set = g.generators();
    bounds.commutators = std::make_shared<const CommutatorWidth>(commutator_width(g));
    bounds.width = bounds.commutators->width;
    for (const auto& [n, w] : report.condition1)
        bounds.derived_witness[n] = *w;

    const ConjugacyData classes = conjugacy_classes(g);
    std::vector<unsigned> orders;
    for (const auto& [n, gens] : report.condition2)
        orders.push_back(n);
    bounds.per_order.resize(orders.size());
    #pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < orders.size(); ++i)
        bounds.per_order[i] = bounds_for_order(g, classes, orders[i], *report.condition2.at(orders[i]));

    for (const auto& ob : bounds.per_order) {
        bounds.N = std::max({bounds.N, ob.N(), ob.M()});
        bounds.alpha = std::max({bounds.alpha, ob.alpha_odd, ob.alpha_even});
    }
    check_bounds(g, bounds);
    return bounds;
}

void check_bounds(const Group& g, const AasBounds& bounds)
{
    auto require = [](bool ok, const std::string& what) {
        if (!ok)
            throw std::logic_error("AasBounds invariant violated: " + what);
    };
    require(closure_of(g, bounds.generating_set).is_whole(g), "generating set");
    require(bounds.commutators != nullptr, "commutator data");
    for (const auto& ob : bounds.per_order) {
        const std::string at = " at order " + std::to_string(ob.order);
        require(ob.L() % 2 == 1, "L odd" + at);
        require(ob.M() % 2 == 0, "M even" + at);
        require(ob.N() == ob.M() + ob.L(), "N = M + L" + at);
        for (const auto* vec : {&ob.even_vector, &ob.odd_vector}) {
            const Signature sig{0, std::vector<unsigned>(vec->size(), ob.order)};
            require(verify(g, sig, GeneratingVector{{}, {}, *vec}).valid(), "stored vector verifies" + at);
        }
        require(covering_radius(g, ob.even_vector) == ob.alpha_even, "alpha_M" + at);
        require(covering_radius(g, ob.odd_vector) == ob.alpha_odd, "alpha_N" + at);
        require(ob.M() <= bounds.N && ob.N() <= bounds.N, "N bound" + at);
        require(ob.alpha_even <= bounds.alpha && ob.alpha_odd <= bounds.alpha, "alpha bound" + at);
        const auto w = bounds.derived_witness.find(ob.order);
        require(w != bounds.derived_witness.end() && g.element_order(w->second) == ob.order
                    && bounds.commutators->layer_of[w->second] >= 0,
                "derived witness" + at);
    }
}

} // namespace aaslab
