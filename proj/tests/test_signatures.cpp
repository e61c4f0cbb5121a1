#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "sweeps.hpp"

#include "aaslab/build.hpp"
#include "aaslab/errors.hpp"
#include "aaslab/signature.hpp"
#include "aaslab/structure.hpp"

using namespace aaslab;

TEST_SUITE("signatures") {

TEST_CASE("signature text and ordering")
{
    const Signature s(1, {6, 2, 3});
    CHECK(s.tail == std::vector<unsigned>{2, 3, 6});
    CHECK(s.to_string() == "1;2,3,6");
    CHECK(Signature(2, {}).to_string() == "2;-");
    CHECK(Signature(0, {5}) < Signature(1, {}));
}

TEST_CASE("Riemann-Hurwitz genus")
{
    CHECK(rh_genus(60, Signature(0, {5, 5, 5})) == 13);
    CHECK(rh_genus(168, Signature(0, {2, 3, 7})) == 3);
    CHECK(rh_genus(60, Signature(0, {2, 3, 5})) == 0);
    CHECK(rh_genus(60, Signature(1, {})) == 1);
    CHECK(rh_genus(60, Signature(2, {})) == 61);
    CHECK(rh_genus(8, Signature(0, {4})) == Rational(-4));
    CHECK(rh_genus(12, Signature(1, {4})) == Rational(11, 2));
    CHECK(twice_genus_minus_one(60, Signature(0, {5, 5, 5})) == 24);
}

TEST_CASE("named exclusions")
{
    const Group a5 = build_group(GroupSpec::alternating(5));
    auto item = [&](const Signature& s) {
        const auto r = exclusion_reason(a5, s);
        return r ? r->item : -1;
    };
    CHECK(item(Signature(0, {})) == 1);
    CHECK(item(Signature(0, {5})) == 2);
    CHECK(item(Signature(0, {3, 3})) == 3);
    CHECK(item(Signature(0, {2, 5})) == 4);
    CHECK(item(Signature(0, {2, 2, 5})) == 5);
    CHECK(item(Signature(0, {2, 2, 2})) == 5);
    CHECK(item(Signature(0, {2, 3, 3})) == 6);
    CHECK(item(Signature(0, {2, 3, 5})) == 8);
    CHECK(item(Signature(0, {3, 3, 3})) == 10);
    CHECK(item(Signature(0, {2, 2, 2, 2})) == 12);
    CHECK(item(Signature(1, {})) == 13);
    CHECK(item(Signature(0, {2, 5, 5})) == -1);
    CHECK(item(Signature(1, {2})) == -1);
    CHECK_THROWS_AS(exclusion_reason(a5, Signature(0, {7, 7, 7})), OrderNotInGroup);

    // cyclic Sylow 2-subgroup: an odd number of entries divisible by the 2-part
    const Group c6 = build_group(GroupSpec::cyclic(6));
    const auto r = exclusion_reason(c6, Signature(1, {2, 3}));
    REQUIRE(r);
    CHECK(r->item == 14);
    CHECK(r->orders == std::vector<unsigned>{2});
    CHECK_FALSE(exclusion_reason(c6, Signature(1, {2, 2})));
}

TEST_CASE("exclusion list and arithmetic agree on small corpus groups")
{
    for (const auto& spec : corpus::small_groups()) {
        const Group g = build_group(spec);
        if (g.order() > 32 || g.order() < 2)
            continue;
        CAPTURE(spec.canonical());
        const auto orders = order_set(g);
        for (unsigned h = 0; h <= 3; ++h)
            for (const auto& t : sweeps::tails(orders, 5)) {
                const Signature sig(h, t);
                const Rational genus = oracle::genus(g.order(), sig);
                const bool arithmetic_ok = denominator(genus) == 1 && genus >= 2;
                REQUIRE(exclusion_reason(g, sig).has_value() == !arithmetic_ok);
                REQUIRE(is_potential(g, sig) == arithmetic_ok);
            }
    }
}

TEST_CASE("abbreviated form")
{
    const Group a5 = build_group(GroupSpec::alternating(5));
    const auto ab = abbreviate(a5, Signature(0, {2, 5, 5}));
    CHECK(ab.to_string() == "(0; [2,1],[3,0],[5,2])");
    CHECK(ab.expand() == Signature(0, {2, 5, 5}));
    CHECK_THROWS_AS(abbreviate(a5, Signature(0, {4})), OrderNotInGroup);
}

TEST_CASE("enumeration by genus matches a filtered sweep")
{
    for (const auto& spec : {GroupSpec::alternating(5), GroupSpec::heisenberg(3), GroupSpec::dihedral(4),
                             GroupSpec::cyclic(6)}) {
        const Group g = build_group(spec);
        CAPTURE(spec.canonical());
        const auto orders = order_set(g);
        for (std::uint64_t genus = 2; genus <= 14; ++genus) {
            std::vector<Signature> expected;
            for (unsigned h = 0; h <= 3; ++h)
                for (const auto& t : sweeps::tails(orders, 14)) {
                    const Signature sig(h, t);
                    if (is_potential(g, sig) && rh_genus(g.order(), sig) == genus)
                        expected.push_back(sig);
                }
            std::sort(expected.begin(), expected.end());
            const auto got = enumerate_potential_by_genus(g, genus);
            // with |G| >= 6 each entry adds at least 3/2 to the genus, so
            // h <= 3 and 14 entries cover genus 14
            CHECK(got == expected);
        }
    }
}

} // TEST_SUITE
