#include "doctest.h"

#include "hl7/errors.hpp"
#include "hl7/nullflavor.hpp"

#include <set>
#include <vector>

using namespace hl7;

namespace {

// Independent oracle: intersect the two reflexive ancestor chains and pick
// the deepest shared node.
NullFlavor lca_oracle(NullFlavor a, NullFlavor b) {
    std::vector<NullFlavor> chain_a;
    for (NullFlavor cur = a;; cur = nf_parent(cur)) {
        chain_a.push_back(cur);
        if (cur == NullFlavor::NI) break;
    }
    std::set<NullFlavor> ancestors_a(chain_a.begin(), chain_a.end());
    NullFlavor best = NullFlavor::NI;
    for (NullFlavor cur = b;; cur = nf_parent(cur)) {
        if (ancestors_a.count(cur) && nf_depth(cur) > nf_depth(best)) {
            best = cur;
        }
        if (cur == NullFlavor::NI) break;
    }
    return best;
}

} // namespace

TEST_CASE("nullflavor tokens parse case-insensitively") {
    CHECK(parse_nullflavor("ni") == NullFlavor::NI);
    CHECK(parse_nullflavor("NAV") == NullFlavor::NAV);
    CHECK(parse_nullflavor("Trc") == NullFlavor::TRC);
    CHECK_THROWS_AS(parse_nullflavor("bogus"), UnknownNullFlavor);
    CHECK_THROWS_AS(parse_nullflavor(""), UnknownNullFlavor);
}

TEST_CASE("token round-trip over all 15 members") {
    for (NullFlavor nf : all_nullflavors) {
        CHECK(parse_nullflavor(nf_token(nf)) == nf);
    }
}

TEST_CASE("tree shape matches the level codes") {
    CHECK(nf_parent(NullFlavor::NAV) == NullFlavor::ASKU);
    CHECK(nf_parent(NullFlavor::TRC) == NullFlavor::UNK);
    CHECK(nf_parent(NullFlavor::OTH) == NullFlavor::INV);
    CHECK(nf_parent(NullFlavor::NINF) == NullFlavor::OTH);
    CHECK(nf_parent(NullFlavor::PINF) == NullFlavor::OTH);
    CHECK(nf_parent(NullFlavor::NI) == NullFlavor::NI);
    CHECK(nf_depth(NullFlavor::NI) == 1);
    CHECK(nf_depth(NullFlavor::NA) == 2);
    CHECK(nf_depth(NullFlavor::NAV) == 4);
}

TEST_CASE("lca examples") {
    CHECK(nf_lca(NullFlavor::ASKU, NullFlavor::NASK) == NullFlavor::UNK);
    CHECK(nf_lca(NullFlavor::NAV, NullFlavor::ASKU) == NullFlavor::ASKU);
    // Frozen from the ancestor-set oracle: trc sits under unk, msk under ni.
    CHECK(nf_lca(NullFlavor::TRC, NullFlavor::MSK) == NullFlavor::NI);
}

TEST_CASE("lca agrees with the brute-force oracle on all 225 pairs") {
    for (NullFlavor a : all_nullflavors) {
        for (NullFlavor b : all_nullflavors) {
            CHECK(nf_lca(a, b) == lca_oracle(a, b));
        }
    }
}

TEST_CASE("lca algebra") {
    for (NullFlavor a : all_nullflavors) {
        CHECK(nf_lca(a, a) == a);
        CHECK(nf_lca(a, NullFlavor::NI) == NullFlavor::NI);
        for (NullFlavor b : all_nullflavors) {
            CHECK(nf_lca(a, b) == nf_lca(b, a));
            for (NullFlavor c : all_nullflavors) {
                CHECK(nf_lca(a, nf_lca(b, c)) == nf_lca(nf_lca(a, b), c));
            }
        }
    }
}

TEST_CASE("allowed flavors per type") {
    CHECK_FALSE(nf_allowed_on(NullFlavor::TRC, TypeTag::Bl));
    CHECK_FALSE(nf_allowed_on(NullFlavor::NINF, TypeTag::Bl));
    CHECK_FALSE(nf_allowed_on(NullFlavor::PINF, TypeTag::Bl));
    CHECK_FALSE(nf_allowed_on(NullFlavor::UNC, TypeTag::Bl));
    CHECK_FALSE(nf_allowed_on(NullFlavor::DER, TypeTag::Bl));
    CHECK_FALSE(nf_allowed_on(NullFlavor::QS, TypeTag::Bl));
    int allowed_on_bl = 0;
    for (NullFlavor nf : all_nullflavors) {
        if (nf_allowed_on(nf, TypeTag::Bl)) ++allowed_on_bl;
        CHECK(nf_allowed_on(nf, TypeTag::Pq));
        CHECK(nf_allowed_on(nf, TypeTag::Ts));
        CHECK(nf_allowed_on(nf, TypeTag::Cv));
        CHECK_FALSE(nf_allowed_on(nf, TypeTag::Bn));
        CHECK_FALSE(nf_allowed_on(nf, TypeTag::In));
    }
    CHECK(allowed_on_bl == 9);
    CHECK(nf_allowed_on(NullFlavor::TRC, TypeTag::Pq));
    CHECK_FALSE(nf_allowed_on(NullFlavor::UNK, TypeTag::Bn));
}
