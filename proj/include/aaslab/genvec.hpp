#pragma once

#include "aaslab/aas.hpp"
#include "aaslab/group.hpp"
#include "aaslab/kernels.hpp"
#include "aaslab/lattice.hpp"
#include "aaslab/signature.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace aaslab {

/// (a_1, b_1, ..., a_h, b_h, c_1, ..., c_s)
struct GeneratingVector {
    std::vector<Element> a;
    std::vector<Element> b;
    std::vector<Element> c;

    std::vector<Element> entries() const;
    bool operator==(const GeneratingVector&) const = default;
};

struct VerifyResult {
    bool generates = false;
    bool orders_match = false;
    bool relation_holds = false;

    bool valid() const { return generates && orders_match && relation_holds; }
    /// Names the first failing condition, or "" when valid.
    std::string failure() const;
};

/// Throws ShapeMismatch when the vector's lengths do not fit the signature.
VerifyResult verify(const Group& g, const Signature& sig, const GeneratingVector& v);

/// Reorders the tail into ascending element order using braid moves
/// (c_i, c_i+1) -> (c_i+1, c_i+1^-1 c_i c_i+1), which keep the product,
/// the generated subgroup and the multiset of orders.
GeneratingVector sort_tail(const Group& g, GeneratingVector v);

struct Budget {
    std::uint64_t nodes = 10'000'000;
    double seconds = 300.0;
};

enum class SearchStatus { Found, Exhausted, BudgetExhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::BudgetExhausted;
    std::optional<GeneratingVector> vector;
    std::uint64_t nodes = 0;
};

/// Depth-first search for an (h; m_1..m_s)-generating vector. c_1 ranges
/// over class representatives, the last tail entry is forced by the
/// relation. Deterministic. Throws OrderNotInGroup.
SearchResult search(const Group& g, const Signature& sig, std::uint64_t node_budget);
SearchResult search(const Group& g, const ConjugacyData& classes, const Signature& sig, std::uint64_t node_budget);

/// Per-subgroup class algebra used by the counting decider: the H-classes,
/// and for the commutator step and every element order the matrices
/// T[c][c'] = sum of weight(y) over y in H with z_c y^-1 in class c'.
struct LocalAlgebra {
    std::vector<Element> elements;
    std::vector<std::size_t> class_of;      // indexed by global element; only H entries meaningful
    std::vector<Element> representatives;
    std::size_t identity_class = 0;
    std::vector<std::uint64_t> commutator_matrix;            // row-major classes x classes
    std::map<unsigned, std::vector<std::uint64_t>> order_matrix;

    std::size_t class_count() const { return representatives.size(); }
};

/// Immutable counting context. Subgroup-local algebras are built lazily and
/// memoized; concurrent use is safe.
class HomCountContext {
public:
    HomCountContext(Group g, std::optional<SubgroupLattice> lattice);

    const Group& group() const noexcept { return group_; }
    /// K[x] = #{(a, b) in G^2 : [a, b] = x}
    const std::vector<std::uint64_t>& commutator_count() const noexcept { return commutator_count_; }
    const ElementSet& order_indicator(unsigned n) const;
    bool has_lattice() const noexcept { return lattice_.has_value(); }
    const SubgroupLattice& lattice() const;

    /// Local algebra of lattice subgroup i.
    const LocalAlgebra& local(std::size_t i) const;

private:
    Group group_;
    std::vector<std::uint64_t> commutator_count_;
    std::map<unsigned, ElementSet> order_indicator_;
    std::optional<SubgroupLattice> lattice_;
    mutable std::vector<std::unique_ptr<LocalAlgebra>> locals_;
    mutable std::unique_ptr<std::once_flag[]> local_flags_;
};

/// Builds the context; the lattice is included when |G| <= lattice_cap.
HomCountContext build_context(const Group& g, std::size_t lattice_cap = kDefaultLatticeCap);

LocalAlgebra build_local_algebra(const Group& g, const Subgroup& h);

/// Number of tuples with entries in H, |c_j| = m_j and the long relation,
/// generation not required.
BigInt count_tuples(const HomCountContext& ctx, const Subgroup& h, const Signature& sig);
/// Same count through element-indexed convolution; the reference path.
BigInt count_tuples_elementwise(const HomCountContext& ctx, const Subgroup& h, const Signature& sig);

/// Number of generating vectors, by Moebius inversion over the lattice.
/// Throws LatticeUnavailable.
BigInt count_generating_tuples(const HomCountContext& ctx, const Signature& sig);

/// Explicit vector for h >= genus threshold. Throws PreconditionNotMet.
GeneratingVector construct_high_genus(const Group& g, const Signature& sig, const AasBounds& bounds);
/// Explicit vector when some multiplicity t_i exceeds its tail limit.
/// Throws PreconditionNotMet.
GeneratingVector construct_long_tail(const Group& g, const Signature& sig, const AasBounds& bounds);

bool high_genus_applies(const Signature& sig, const AasBounds& bounds);
bool long_tail_applies(const Signature& sig, const AasBounds& bounds);

enum class Method {
    ConstructedHighGenus,
    ConstructedLongTail,
    Search,
    Counting,
    ExhaustedSearch,
    CountingZero,
    None,
};

std::string to_string(Method m);

struct DecisionOutcome {
    enum class Kind { Actual, NonSignature, NotPotential, Unknown };

    Kind kind = Kind::Unknown;
    Method method = Method::None;
    std::optional<GeneratingVector> vector;
    /// Generating-vector count when the counting decider ran.
    std::optional<BigInt> count;
    std::optional<ExclusionReason> reason;
    std::uint64_t nodes_spent = 0;
};

std::string to_string(DecisionOutcome::Kind k);

struct DecideOptions {
    Budget budget;
    const AasBounds* bounds = nullptr;
    const HomCountContext* context = nullptr;
    const ConjugacyData* classes = nullptr;
    /// When counting proves existence, also run the search for a witness.
    bool extract_witness = true;
};

/// Potentiality, then constructive certificates, then counting, then
/// bounded search.
DecisionOutcome decide(const Group& g, const Signature& sig, const DecideOptions& options = {});

struct NonSignatureSet {
    struct Entry {
        Signature signature;
        Method method = Method::None;
        std::int64_t genus = 0;
    };

    std::vector<Entry> non_signatures;
    /// False when some box signature stayed undecided.
    bool authoritative = true;
    std::vector<Signature> undecided;
    std::size_t box_size = 0;
    std::size_t potential_in_box = 0;
    std::size_t actual_in_box = 0;
    /// Per order: the largest multiplicity the residual box contains.
    std::vector<std::pair<unsigned, unsigned>> tail_limits;
    unsigned genus_threshold = 0;
};

/// The complete list of non-signatures of an AAS group. Throws NotAas,
/// naming an infinite family of non-signatures.
NonSignatureSet non_signature_set(const Group& g, const Budget& budget, const AasBounds* bounds = nullptr,
                                  const HomCountContext* context = nullptr);

} // namespace aaslab
