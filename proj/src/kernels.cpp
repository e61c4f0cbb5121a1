#include "aaslab/kernels.hpp"

#include <numeric>

namespace aaslab::kernels {

namespace {

    std::vector<Element> full_support(const Group& g, std::span<const Element> support)
    {
        if (!support.empty())
            return {support.begin(), support.end()};
        std::vector<Element> all(g.order());
        std::iota(all.begin(), all.end(), Element(0));
        return all;
    }

} // namespace

std::vector<std::uint64_t> commutator_counts_serial(const Group& g, std::span<const Element> support)
{
    const auto s = full_support(g, support);
    std::vector<std::uint64_t> k(g.order(), 0);
    for (Element a : s)
        for (Element b : s)
            ++k[g.commutator(a, b)];
    return k;
}

std::vector<std::uint64_t> commutator_counts(const Group& g, std::span<const Element> support)
{
    const auto s = full_support(g, support);
    const std::size_t n = g.order();
    std::vector<std::uint64_t> k(n, 0);
    #pragma omp parallel
    {
        std::vector<std::uint64_t> local(n, 0);
        #pragma omp for schedule(static)
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Element a = s[i];
            const auto row_ainv = g.row(g.inv(a));
            for (Element b : s) {
                const auto row_binv = g.row(g.inv(b));
                ++local[row_ainv[g.row(row_binv[a])[b]]];
            }
        }
        #pragma omp critical
        for (std::size_t x = 0; x < n; ++x)
            k[x] += local[x];
    }
    return k;
}

void convolve_serial(const Group& g, std::span<const Element> support, const std::vector<BigInt>& f,
                     const std::vector<std::uint64_t>& w, std::vector<BigInt>& out)
{
    for (Element z : support)
        out[z] = 0;
    for (Element x : support) {
        if (f[x].is_zero())
            continue;
        const auto row_x = g.row(x);
        for (Element y : support)
            if (w[y] != 0)
                out[row_x[y]] += f[x] * w[y];
    }
}

void convolve(const Group& g, std::span<const Element> support, const std::vector<BigInt>& f,
              const std::vector<std::uint64_t>& w, std::vector<BigInt>& out)
{
    std::vector<Element> weighted;
    for (Element y : support)
        if (w[y] != 0)
            weighted.push_back(y);
    const auto& inv = g.inverse();
    #pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < support.size(); ++i) {
        const Element z = support[i];
        const auto row_z = g.row(z);
        BigInt acc = 0;
        for (Element y : weighted) {
            const auto& fx = f[row_z[inv[y]]];
            if (!fx.is_zero())
                acc += fx * w[y];
        }
        out[z] = std::move(acc);
    }
}

std::vector<std::uint64_t> order_histogram(const Group& g)
{
    std::vector<std::uint64_t> h(g.exponent() + 1, 0);
    for (unsigned o : g.element_orders())
        ++h[o];
    return h;
}

} // namespace aaslab::kernels
