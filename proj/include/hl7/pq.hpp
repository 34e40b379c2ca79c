#pragma once

#include "hl7/logic.hpp"
#include "hl7/real.hpp"
#include "hl7/ucum.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hl7 {

// Physical quantity. Non-null values carry a value and a unit; flavored
// values may still carry a unit (e.g. "trc ml"), and oth may shadow the
// out-of-domain value it stands for.
struct PQ {
    std::optional<NullFlavor> flavor;
    std::optional<Real> value;
    std::optional<UnitExpr> unit;

    bool is_null() const { return flavor.has_value(); }

    static PQ of(Real v, UnitExpr u) {
        return PQ{std::nullopt, std::move(v), std::move(u)};
    }
    static PQ flavored(NullFlavor nf) { return PQ{nf, std::nullopt, std::nullopt}; }
    static PQ flavored_with_unit(NullFlavor nf, UnitExpr u) {
        return PQ{nf, std::nullopt, std::move(u)};
    }
    static PQ oth_with_shadow(Real v, UnitExpr u) {
        return PQ{NullFlavor::OTH, std::move(v), std::move(u)};
    }
};

// `<real-literal> [ws] <unit>`, a bare nullflavor token, a flavored quantity
// like "trc ml", or the "<value> <unit> NullFlavor.OTH" shadow form.
PQ pq_parse(std::string_view literal, const UnitRegistry& reg);
std::string pq_print(const PQ& p);

// value times the canonical factor of the unit; pre: non-null.
Rational pq_canonical_magnitude(const PQ& p, const UnitRegistry& reg);

// Same canonical value (equivalence on the value space) vs componentwise
// sameness. Flavored operands propagate their lca; oth is never equal to
// anything, itself included.
BL pq_equal(const PQ& a, const PQ& b, const UnitRegistry& reg);
BL pq_identical(const PQ& a, const PQ& b, const UnitRegistry& reg);

PQ pq_convert(const PQ& p, const UnitExpr& target, const UnitRegistry& reg);
PQ pq_convert(const PQ& p, std::string_view target, const UnitRegistry& reg);

PQ pq_plus(const PQ& a, const PQ& b, const UnitRegistry& reg);
PQ pq_minus(const PQ& a, const PQ& b, const UnitRegistry& reg);
PQ pq_scale(const PQ& a, const Rational& k);
PQ pq_negate(const PQ& a);

PQ pq_sum(std::span<const PQ> values, const UnitRegistry& reg);
PQ pq_avg(std::span<const PQ> values, const UnitRegistry& reg);

// Total orders backing the two index disciplines. equal_ops sorts by
// (dims, canonical magnitude, flavor rank) and treats canonically-equal
// values as ties; identical_ops refines those ties by unit string, then
// value literal. Flavor placement within one dimension bucket:
//   ninf < negatives < 0 < trc < positives < pinf < other flavors < oth.
enum class OrderDiscipline : uint8_t { EqualOps, IdenticalOps };

std::strong_ordering pq_order(const PQ& a, const PQ& b, OrderDiscipline discipline,
                              const UnitRegistry& reg);

// A flavor constrains the unit to compare with a predicate unit, e.g.
// pq_time requires units comparable to "s".
struct PQFlavor {
    std::string name;
    std::string predicate_unit;
};

bool flavor_check(const PQ& p, const PQFlavor& f, const UnitRegistry& reg);

} // namespace hl7
