#include "aaslab/lattice.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/structure.hpp"

#include <algorithm>
#include <unordered_map>

namespace aaslab {

std::size_t SubgroupLattice::find(const ElementSet& membership) const
{
    for (std::size_t i = 0; i < subgroups.size(); ++i)
        if (subgroups[i].membership == membership)
            return i;
    return subgroups.size();
}

bool SubgroupLattice::leq(std::size_t h, std::size_t k) const
{
    return h == k || std::binary_search(supergroups[h].begin(), supergroups[h].end(), k);
}

SubgroupLattice lattice_from_subgroups(const Group& g, std::vector<Subgroup> subgroups)
{
    (void)g;
    std::sort(subgroups.begin(), subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.elements < b.elements;
    });
    SubgroupLattice lat;
    const std::size_t count = subgroups.size();
    lat.supergroups.resize(count);
    lat.moebius.assign(count, 0);
    #pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (subgroups[j].size() > subgroups[i].size() && subgroups[j].size() % subgroups[i].size() == 0
                && subgroups[i].membership.is_subset_of(subgroups[j].membership))
                lat.supergroups[i].push_back(j);
    // mu(G, G) = 1, mu(H, G) = -sum of mu(K, G) over H < K <= G
    for (std::size_t i = count; i-- > 0;) {
        if (i + 1 == count) {
            lat.moebius[i] = 1;
            continue;
        }
        std::int64_t sum = 0;
        for (std::size_t j : lat.supergroups[i])
            sum += lat.moebius[j];
        lat.moebius[i] = -sum;
    }
    lat.subgroups = std::move(subgroups);
    return lat;
}

SubgroupLattice subgroup_lattice(const Group& g, std::size_t cap)
{
    if (g.order() > cap)
        throw LatticeCapExceeded(g.label() + ": order " + std::to_string(g.order()) + " exceeds lattice cap " + std::to_string(cap));

    std::vector<Subgroup> found;
    std::unordered_map<ElementSet, std::size_t> index;
    std::vector<Element> cyclic_generators;

    for (std::size_t x = 0; x < g.order(); ++x) {
        const Element e = Element(x);
        Subgroup c = generated_subgroup(g, std::span<const Element>(&e, 1));
        if (index.emplace(c.membership, found.size()).second) {
            found.push_back(std::move(c));
            cyclic_generators.push_back(e);
        }
    }

    // Breadth-first over generations; candidates of one generation are
    // computed in parallel and merged in a fixed order.
    std::size_t begin = 0;
    while (begin < found.size()) {
        const std::size_t end = found.size();
        std::vector<std::pair<std::size_t, Element>> jobs;
        for (std::size_t i = begin; i < end; ++i) {
            if (found[i].is_whole(g))
                continue;
            for (Element x : cyclic_generators)
                if (!found[i].contains(x))
                    jobs.emplace_back(i, x);
        }
        constexpr std::size_t chunk = 2048;
        for (std::size_t lo = 0; lo < jobs.size(); lo += chunk) {
            const std::size_t hi = std::min(jobs.size(), lo + chunk);
            std::vector<Subgroup> results(hi - lo);
            #pragma omp parallel for schedule(dynamic, 8)
            for (std::size_t j = lo; j < hi; ++j)
                results[j - lo] = extend_subgroup(g, found[jobs[j].first], jobs[j].second);
            for (auto& r : results)
                if (index.emplace(r.membership, found.size()).second)
                    found.push_back(std::move(r));
        }
        begin = end;
    }
    return lattice_from_subgroups(g, std::move(found));
}

} // namespace aaslab
