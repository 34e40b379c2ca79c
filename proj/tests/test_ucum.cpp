#include "doctest.h"

#include "hl7/errors.hpp"
#include "hl7/ucum.hpp"

#include <random>
#include <vector>

using namespace hl7;

namespace {

const UnitRegistry& reg() {
    static const UnitRegistry r = UnitRegistry::load_file(default_registry_path());
    return r;
}

UnitTerm term(const char* atom, const char* prefix, int exp) {
    return UnitTerm{atom, prefix, exp};
}

} // namespace

TEST_CASE("registry file loads") {
    CHECK(reg().has_atom("m"));
    CHECK(reg().has_atom("m[Hg]"));
    CHECK(reg().atom_symbols().size() >= 37); // 7 base + >=30 derived
    CHECK(reg().prefix_factor("k") != nullptr);
    CHECK(*reg().prefix_factor("k") == Rational(1000));
    CHECK(reg().prefix_factor("w") == nullptr);
}

TEST_CASE("parse examples") {
    const UnitExpr kg_m2 = unit_parse("kg/m2", reg());
    REQUIRE(kg_m2.terms.size() == 2);
    CHECK(kg_m2.terms[0] == term("g", "k", 1));
    CHECK(kg_m2.terms[1] == term("m", "", -2));

    const UnitExpr mmhg = unit_parse("mm[Hg]", reg());
    REQUIRE(mmhg.terms.size() == 1);
    CHECK(mmhg.terms[0] == term("m[Hg]", "m", 1));

    const UnitExpr m3 = unit_parse("m3", reg());
    REQUIRE(m3.terms.size() == 1);
    CHECK(m3.terms[0] == term("m", "", 3));

    CHECK(unit_parse("/s", reg()).terms[0] == term("s", "", -1));
    CHECK(unit_parse("m.s-2", reg()).terms[1] == term("s", "", -2));
    CHECK(unit_parse("dam", reg()).terms[0] == term("m", "da", 1));
    CHECK(unit_parse("(m/s)/s", reg()).terms ==
          std::vector<UnitTerm>{term("m", "", 1), term("s", "", -1), term("s", "", -1)});
    CHECK(unit_parse("1", reg()).terms[0].atom == "1");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(unit_parse("xyzzy", reg()), UnknownAtom);
    CHECK_THROWS_AS(unit_parse("kmin", reg()), UnknownAtom); // min is non-metric
    CHECK_THROWS_AS(unit_parse("", reg()), UnitSyntaxError);
    CHECK_THROWS_AS(unit_parse("m//s", reg()), UnitSyntaxError);
    CHECK_THROWS_AS(unit_parse("(m.s", reg()), UnitSyntaxError);
    CHECK_THROWS_AS(unit_parse("m s", reg()), UnitSyntaxError);
    CHECK_THROWS_AS(unit_parse("m[Hg", reg()), UnitSyntaxError);
    CHECK_THROWS_AS(unit_parse("Cel", reg()), UnsupportedUnit);
    CHECK_THROWS_AS(unit_parse("ml{total}", reg()), UnsupportedUnit);
}

TEST_CASE("canonical forms") {
    // m[Hg] is 133.3220 kPa; in base units the millimeter column is
    // 133322 g.m-1.s-2 exactly.
    const Canonical mmhg = canonicalize("mm[Hg]", reg());
    CHECK(mmhg.factor == Rational(133322));
    CHECK(mmhg.dims == DimVector{-1, 1, -2, 0, 0, 0, 0});
    CHECK(dims_to_string(mmhg.dims) == "m-1.g.s-2");

    const Canonical meter = canonicalize("m", reg());
    CHECK(meter.factor == Rational(1));
    CHECK(meter.dims == DimVector{1, 0, 0, 0, 0, 0, 0});

    CHECK(canonicalize("l", reg()) == canonicalize("dm3", reg()));
    CHECK(canonicalize("l", reg()).factor == Rational(BigInt(1), BigInt(1000)));
    CHECK(canonicalize("h", reg()).factor == Rational(3600));
    CHECK(canonicalize("[mi_i]", reg()).factor ==
          Rational(BigInt(1609344), BigInt(1000)));
    CHECK(canonicalize("kg.m/s2", reg()) == canonicalize("N", reg()));
    CHECK(dims_to_string(canonicalize("1", reg()).dims) == "1");
}

TEST_CASE("compares") {
    CHECK(compares_units("ml", "dm3", reg()));
    CHECK_FALSE(compares_units("mm", "m3", reg()));
    CHECK(compares_units("s", "s", reg()));
    CHECK(compares_units("min", "wk", reg()));
    CHECK(compares_units("J", "erg", reg()));
    CHECK_FALSE(compares_units("J", "W", reg()));
}

TEST_CASE("canonicalize is multiplicative over '.' and powers") {
    const std::vector<std::string> corpus = {
        "m",  "kg", "s",  "ml",     "mm[Hg]", "J",    "W",  "cm2",
        "Hz", "l",  "cd", "[in_i]", "N",      "kPa",  "eV", "bar",
        "h",  "a_j", "g%", "u",     "dyn",    "[gr]", "sr", "lx",
    };
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const std::string& a = corpus[pick(rng)];
        const std::string& b = corpus[pick(rng)];
        const Canonical ca = canonicalize(a, reg());
        const Canonical cb = canonicalize(b, reg());
        const Canonical cab = canonicalize(a + "." + b, reg());
        CHECK(cab.factor == ca.factor * cb.factor);
        for (std::size_t k = 0; k < 7; ++k) {
            CHECK(cab.dims[k] == ca.dims[k] + cb.dims[k]);
        }
        const Canonical cdiv = canonicalize(a + "/" + b, reg());
        CHECK(cdiv.factor == ca.factor / cb.factor);
    }
    // u^n via the exponent syntax on prefixed atoms.
    for (int n = 2; n <= 4; ++n) {
        const Canonical base = canonicalize("cm", reg());
        const Canonical powed = canonicalize("cm" + std::to_string(n), reg());
        CHECK(powed.factor == base.factor.pow_int(n));
        CHECK(powed.dims[0] == n);
    }
}

TEST_CASE("parse/print round-trip over a unit corpus") {
    const std::vector<std::string> corpus = {
        "m", "g", "s", "rad", "K", "C", "cd", "kg", "mg", "ug", "ml", "dl",
        "l", "L", "cm", "mm", "km", "m2", "m3", "cm2", "dm3", "kg/m2",
        "mm[Hg]", "cm[H2O]", "J", "kJ", "N", "Pa", "kPa", "W", "mW", "Hz",
        "eV", "MeV", "bar", "mbar", "atm", "min", "h", "d", "wk", "a_j",
        "mo", "%", "g%", "[in_i]", "[ft_i]", "[lb_av]", "[gr]", "u",
        "m/s", "m/s2", "kg.m/s2", "J/K", "W/m2", "cd.sr", "1", "/min",
        "mg/dl",
    };
    CHECK(corpus.size() >= 50);
    for (const std::string& s : corpus) {
        const UnitExpr parsed = unit_parse(s, reg());
        const UnitExpr again = unit_parse(unit_print(parsed), reg());
        CHECK(again == parsed);
    }
}

TEST_CASE("registry validation") {
    const char* cyclic =
        "m\ty\t=base:m\n"
        "foo\ty\t1\tbar\n"
        "bar\ty\t1\tfoo\n";
    CHECK_THROWS_AS(UnitRegistry::load_string(cyclic), CycleError);

    const char* dangling =
        "m\ty\t=base:m\n"
        "foo\ty\t2\tnope\n";
    CHECK_THROWS_AS(UnitRegistry::load_string(dangling), UnknownAtom);

    const char* malformed = "m\tq\t=base:m\n";
    CHECK_THROWS_AS(UnitRegistry::load_string(malformed), FormatError);

    const char* self_cycle =
        "m\ty\t=base:m\n"
        "foo\ty\t1\tfoo\n";
    CHECK_THROWS_AS(UnitRegistry::load_string(self_cycle), CycleError);
}

TEST_CASE("every shipped atom expands to base units") {
    for (const std::string& atom : reg().atom_symbols()) {
        const Canonical c = reg().atom_canonical(atom);
        CHECK(c.factor.sign() > 0);
    }
}
