#pragma once

#include "aaslab/aas.hpp"
#include "aaslab/build.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aaslab {

struct FamilyScanRow {
    GroupSpec spec;
    std::uint64_t order = 0;
    /// Absent when the group could not be built (see error).
    std::optional<bool> verdict;
    std::optional<bool> expected;
    /// Which known result the expectation comes from, e.g. "metacyclic p-group".
    std::string basis;
    bool agrees = true;
    Classification classification = Classification::Other;
    std::vector<ConditionFailure> failures;
    std::string error;
};

/// Families understood by scan_family and the meaning of their parameters.
///   metacyclic    primes p; every MC(p,a,b,t) with p^(a+b) <= max_order
///   semidihedral  exponents a; MC(2,a,1,2^(a-1)-1)
///   modular       exponents a; MC(2,a,1,2^(a-1)+1)
///   heisenberg    primes p
///   sl2, psl2     field orders q
///   alternating   degrees n
///   dihedral      n (order 2n)
///   quaternion    orders 2^k
///   cyclic        orders n
///   ea            primes p; every EA(p,k) with p^k <= max_order
struct ScanRange {
    std::vector<unsigned> params;
    std::uint64_t max_order = 128;
};

std::vector<std::string> scan_families();

/// The specs a scan visits, in scan order. Throws InvalidSpec for an
/// unknown family.
std::vector<GroupSpec> scan_specs(const std::string& family, const ScanRange& range);

/// Builds every group of the range and runs the AAS test. Build failures are
/// recorded on their row; rows come back in scan order.
std::vector<FamilyScanRow> scan_family(const std::string& family, const ScanRange& range,
                                       std::size_t order_cap = kDefaultOrderCap);

/// The expectation a known result attaches to a spec, with its basis.
std::optional<std::pair<bool, std::string>> expected_verdict(const GroupSpec& spec);

struct ProductHypothesis {
    /// pgroup_extension, aas_pgroups or same_prime_support
    std::string name;
    bool holds = false;
    std::string detail;
};

struct ProductCheck {
    GroupSpec left;
    GroupSpec right;
    std::uint64_t order = 0;
    bool left_aas = false;
    bool right_aas = false;
    std::vector<ProductHypothesis> hypotheses;
    bool verdict = false;
    AasReport report;

    bool any_hypothesis() const;
    /// False only when some hypothesis set holds and the product is not AAS.
    bool consistent() const { return !any_hypothesis() || verdict; }
};

/// Evaluates the direct-product closure statements for G x H and tests the
/// product directly. Throws OrderCapExceeded.
ProductCheck check_product_theorems(const GroupSpec& g, const GroupSpec& h, std::size_t order_cap = kDefaultOrderCap);

} // namespace aaslab
