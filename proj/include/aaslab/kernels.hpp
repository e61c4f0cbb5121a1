#pragma once

// Data-parallel inner loops. Every OpenMP kernel has a serial twin that is
// kept as the reference implementation for tests and benchmarks.

#include "aaslab/group.hpp"

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace aaslab {

using BigInt = boost::multiprecision::cpp_int;

namespace kernels {

    /// K[x] = #{(a, b) in S x S : [a, b] = x}, indexed by global element.
    /// S is the whole group when `support` is empty.
    std::vector<std::uint64_t> commutator_counts(const Group& g, std::span<const Element> support = {});
    std::vector<std::uint64_t> commutator_counts_serial(const Group& g, std::span<const Element> support = {});

    /// out[z] = sum over y in support of f[z y^-1] * w[y], for z in support.
    /// f, w, out are indexed by global element; entries outside the support
    /// are ignored (f, w) or left untouched (out). The support must be a
    /// subgroup.
    void convolve(const Group& g, std::span<const Element> support, const std::vector<BigInt>& f,
                  const std::vector<std::uint64_t>& w, std::vector<BigInt>& out);
    void convolve_serial(const Group& g, std::span<const Element> support, const std::vector<BigInt>& f,
                         const std::vector<std::uint64_t>& w, std::vector<BigInt>& out);

    /// Number of elements x with element_order(x) == n, per n; index is n.
    std::vector<std::uint64_t> order_histogram(const Group& g);

} // namespace kernels
} // namespace aaslab
