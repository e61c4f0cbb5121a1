#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "sweeps.hpp"

#include "aaslab/build.hpp"
#include "aaslab/errors.hpp"
#include "aaslab/genvec.hpp"
#include "aaslab/structure.hpp"

#include <random>

using namespace aaslab;

TEST_SUITE("genvec") {

TEST_CASE("verify")
{
    const Group a5 = build_group(GroupSpec::alternating(5));
    const Signature sig(0, {2, 5, 5});
    const auto found = search(a5, sig, 1'000'000);
    REQUIRE(found.status == SearchStatus::Found);
    const auto v = *found.vector;
    CHECK(verify(a5, sig, v).valid());
    CHECK(verify(a5, sig, v).failure().empty());
    CHECK(oracle::valid_vector(a5, sig, v));

    auto bad = v;
    bad.c = {kIdentity, kIdentity, kIdentity};
    CHECK(verify(a5, sig, bad).failure() == "generation");

    GeneratingVector short_tail{{}, {}, {v.c[0], v.c[1]}};
    CHECK_THROWS_AS(verify(a5, sig, short_tail), ShapeMismatch);
}

TEST_CASE("sort_tail keeps product, generation and orders")
{
    const Group a5 = build_group(GroupSpec::alternating(5));
    const Signature sig(0, {2, 3, 5, 5});
    const auto found = search(a5, sig, 1'000'000);
    REQUIRE(found.vector);
    auto v = *found.vector;
    // a rotation is conjugate to the original product, so still a vector
    std::rotate(v.c.begin(), v.c.begin() + 1, v.c.end());
    REQUIRE(a5.mul(a5.mul(v.c[0], v.c[1]), a5.mul(v.c[2], v.c[3])) == kIdentity);
    REQUIRE(a5.element_order(v.c[3]) == 2);
    const auto sorted = sort_tail(a5, v);
    for (std::size_t j = 0; j < sig.s(); ++j)
        CHECK(a5.element_order(sorted.c[j]) == sig.tail[j]);
    CHECK(oracle::valid_vector(a5, sig, sorted));
}

TEST_CASE("tuple counts match full enumeration")
{
    for (const auto& spec : corpus::small_groups()) {
        const Group g = build_group(spec);
        if (g.order() > 12)
            continue;
        CAPTURE(spec.canonical());
        const auto ctx = build_context(g);
        const auto& lat = ctx.lattice();
        const auto pool = oracle::all_elements(g);
        for (const auto& sig : sweeps::by_weight(g, 3)) {
            CAPTURE(sig.to_string());
            const auto brute = oracle::enumerate(g, pool, sig);
            CHECK(count_tuples(ctx, lat.subgroups.back(), sig) == brute.solutions);
            CHECK(count_generating_tuples(ctx, sig) == brute.generating);
            // proper subgroups through both paths
            for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
                const auto& h = lat.subgroups[i];
                const auto sub = oracle::enumerate(g, h.elements, sig);
                CHECK(count_tuples(ctx, h, sig) == sub.solutions);
                CHECK(count_tuples_elementwise(ctx, h, sig) == sub.solutions);
            }
        }
    }
}

TEST_CASE("A5 triple counts match a direct loop")
{
    const Group a5 = build_group(GroupSpec::alternating(5));
    const auto ctx = build_context(a5);
    const auto whole = whole_group(a5);
    for (const auto& t : std::vector<std::vector<unsigned>>{{2, 2, 2}, {2, 3, 5}, {2, 5, 5}, {3, 3, 5}, {5, 5, 5}}) {
        const Signature sig(0, t);
        BigInt brute = 0;
        for (Element x = 0; x < 60; ++x)
            for (Element y = 0; y < 60; ++y)
                for (Element z = 0; z < 60; ++z)
                    if (a5.element_order(x) == t[0] && a5.element_order(y) == t[1] && a5.element_order(z) == t[2]
                        && a5.mul(a5.mul(x, y), z) == kIdentity)
                        ++brute;
        CAPTURE(sig.to_string());
        CHECK(count_tuples(ctx, whole, sig) == brute);
    }
}

TEST_CASE("cyclic groups of prime order")
{
    // tuples of non-identity residues mod p summing to 0:
    // ((p-1)^j + (p-1)(-1)^j) / p, all generating
    for (unsigned p : {5u, 7u}) {
        const Group g = build_group(GroupSpec::cyclic(p));
        const auto ctx = build_context(g);
        for (unsigned j = 1; j <= 4; ++j) {
            const BigInt pm = p - 1;
            BigInt expected = boost::multiprecision::pow(pm, j) + (j % 2 ? -pm : pm);
            expected /= p;
            CHECK(count_generating_tuples(ctx, Signature(0, std::vector<unsigned>(j, p))) == expected);
        }
    }
}

TEST_CASE("search outcomes")
{
    const Group d4 = build_group(GroupSpec::dihedral(4));
    CHECK(search(d4, Signature(1, {4}), 1'000'000).status == SearchStatus::Exhausted);
    const Group a5 = build_group(GroupSpec::alternating(5));
    const auto r = search(a5, Signature(0, {2, 5, 5}), 1'000'000);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(oracle::valid_vector(a5, Signature(0, {2, 5, 5}), *r.vector));
    // the genus-0 triangle group (2,3,5) maps onto A5; (2,2,2) only reaches a dihedral group
    CHECK(search(a5, Signature(0, {2, 3, 5}), 1'000'000).status == SearchStatus::Found);
    CHECK(search(a5, Signature(0, {2, 2, 2}), 1'000'000).status == SearchStatus::Exhausted);
    CHECK(search(a5, Signature(2, {5, 5}), 1).status == SearchStatus::BudgetExhausted);
    CHECK_THROWS_AS(search(a5, Signature(0, {4, 4}), 100), OrderNotInGroup);
}

TEST_CASE("search agrees with enumeration")
{
    for (const auto& spec : corpus::small_groups()) {
        const Group g = build_group(spec);
        if (g.order() > 12)
            continue;
        CAPTURE(spec.canonical());
        const auto pool = oracle::all_elements(g);
        for (const auto& sig : sweeps::by_weight(g, 3)) {
            CAPTURE(sig.to_string());
            const auto r = search(g, sig, 10'000'000);
            REQUIRE(r.status != SearchStatus::BudgetExhausted);
            CHECK((r.status == SearchStatus::Found) == (oracle::enumerate(g, pool, sig).generating > 0));
            if (r.vector)
                CHECK(oracle::valid_vector(g, sig, *r.vector));
        }
    }
}

TEST_CASE("constructors on random admissible signatures")
{
    std::mt19937 rng(20240611);
    for (const auto& spec : {GroupSpec::alternating(5), GroupSpec::heisenberg(3), GroupSpec::psl2(7)}) {
        const Group g = build_group(spec);
        const auto b = compute_bounds(g);
        CAPTURE(spec.canonical());
        for (int i = 0; i < 100; ++i) {
            const bool high = i % 2 == 0;
            const auto sig = sweeps::random_admissible(g, b, rng, high);
            CAPTURE(sig.to_string());
            const auto v = high ? construct_high_genus(g, sig, b) : construct_long_tail(g, sig, b);
            CHECK(verify(g, sig, v).valid());
            CHECK(oracle::valid_vector(g, sig, v));
        }
        CHECK_THROWS_AS(construct_high_genus(g, Signature(0, {order_set(g).back()}), b), PreconditionNotMet);
        CHECK_THROWS_AS(construct_long_tail(g, Signature(2, {}), b), PreconditionNotMet);
    }
}

TEST_CASE("concrete decisions")
{
    const Group d4 = build_group(GroupSpec::dihedral(4));
    const auto a = decide(d4, Signature(1, {4}));
    CHECK(a.kind == DecisionOutcome::Kind::NonSignature);

    const Group a5 = build_group(GroupSpec::alternating(5));
    const auto b = decide(a5, Signature(0, {2, 5, 5}));
    CHECK(b.kind == DecisionOutcome::Kind::Actual);
    REQUIRE(b.vector);
    CHECK(verify(a5, Signature(0, {2, 5, 5}), *b.vector).valid());

    const auto c = decide(a5, Signature(0, {2, 3, 5}));
    CHECK(c.kind == DecisionOutcome::Kind::NotPotential);
    REQUIRE(c.reason);
    CHECK(c.reason->item == 8);

    // (1; 2) on A5: no generating vector at all
    const auto d = decide(a5, Signature(1, {2}));
    CHECK(d.kind == DecisionOutcome::Kind::NonSignature);
    CHECK(d.method == Method::CountingZero);
    CHECK(oracle::enumerate(a5, oracle::all_elements(a5), Signature(1, {2})).generating == 0);

    // without a lattice the search decides
    DecideOptions no_lattice;
    const auto e = decide(build_group(GroupSpec::psl2(7)), Signature(0, {2, 3, 7}), no_lattice);
    CHECK(e.kind == DecisionOutcome::Kind::Actual);

    const auto f = decide(a5, Signature(0, {4}));
    CHECK(f.kind == DecisionOutcome::Kind::NotPotential);
    CHECK(f.reason->item == 0);
}

TEST_CASE("decisions are sound against enumeration")
{
    for (const auto& spec : corpus::small_groups()) {
        const Group g = build_group(spec);
        if (g.order() > 24)
            continue;
        CAPTURE(spec.canonical());
        const auto ctx = build_context(g);
        DecideOptions opts;
        opts.context = &ctx;
        const auto pool = oracle::all_elements(g);
        for (const auto& sig : sweeps::by_weight(g, 3)) {
            if (!is_potential(g, sig))
                continue;
            CAPTURE(sig.to_string());
            const auto d = decide(g, sig, opts);
            const bool exists = oracle::enumerate(g, pool, sig).generating > 0;
            CHECK(d.kind == (exists ? DecisionOutcome::Kind::Actual : DecisionOutcome::Kind::NonSignature));
            if (d.vector)
                CHECK(oracle::valid_vector(g, sig, *d.vector));
        }
    }
}

TEST_CASE("non-signature sets")
{
    const Group a5 = build_group(GroupSpec::alternating(5));
    const auto s = non_signature_set(a5, Budget{});
    CHECK(s.authoritative);
    REQUIRE(s.non_signatures.size() == 1);
    CHECK(s.non_signatures[0].signature == Signature(1, {2}));
    CHECK(s.non_signatures[0].genus == 16);

    const auto heis = non_signature_set(build_group(GroupSpec::heisenberg(3)), Budget{});
    CHECK(heis.authoritative);
    CHECK(heis.non_signatures.empty());

    CHECK_THROWS_AS(non_signature_set(build_group(GroupSpec::sl2(3)), Budget{}), NotAas);
}

} // TEST_SUITE
