#include "hl7/logic.hpp"

#include "hl7/errors.hpp"

namespace hl7 {

namespace {

NullFlavor coerce_to_bl(NullFlavor nf) {
    while (!nf_allowed_on(nf, TypeTag::Bl)) {
        nf = nf_parent(nf);
    }
    return nf;
}

bool is_na(const BL& x) {
    return x.is_null() && x.flavor() == NullFlavor::NA;
}

BL and_hl7(const BL& x, const BL& y) {
    if ((!x.is_null() && !x.value()) || (!y.is_null() && !y.value())) {
        return BL(false);
    }
    if (!x.is_null() && !y.is_null()) {
        return BL(x.value() && y.value());
    }
    if (!x.is_null()) { // x is true
        return y;
    }
    if (!y.is_null()) { // y is true
        return x;
    }
    return BL::flavored(nf_lca(x.flavor(), y.flavor()));
}

BL or_hl7(const BL& x, const BL& y) {
    if ((!x.is_null() && x.value()) || (!y.is_null() && y.value())) {
        return BL(true);
    }
    if (!x.is_null() && !y.is_null()) {
        return BL(x.value() || y.value());
    }
    if (!x.is_null()) { // x is false
        return y;
    }
    if (!y.is_null()) { // y is false
        return x;
    }
    return BL::flavored(nf_lca(x.flavor(), y.flavor()));
}

// Altered mode only redefines cells where na appears; x.and(na) is always
// false, x.or(na) keeps whatever x alone contributes.
BL and_altered(const BL& x, const BL& y) {
    if (is_na(x) || is_na(y)) {
        return BL(false);
    }
    return and_hl7(x, y);
}

BL or_altered(const BL& x, const BL& y) {
    if (!is_na(x) && !is_na(y)) {
        return or_hl7(x, y);
    }
    const BL& other = is_na(x) ? y : x;
    if (is_na(other)) { // na.or(na)
        return BL(false);
    }
    if (!other.is_null()) {
        return other;
    }
    return other; // flavored disjunct propagates its own flavor
}

} // namespace

BL BL::flavored(NullFlavor nf) {
    return BL(true, false, coerce_to_bl(nf));
}

BL parse_bl(std::string_view literal) {
    if (literal == "true") return BL(true);
    if (literal == "false") return BL(false);
    NullFlavor nf = parse_nullflavor(literal);
    if (!nf_allowed_on(nf, TypeTag::Bl)) {
        throw FlavorNotAllowed("nullflavor '" + std::string(nf_token(nf)) +
                               "' is not allowed on bl");
    }
    return BL::flavored(nf);
}

std::string bl_print(const BL& x) {
    if (x.is_null()) {
        return std::string(nf_token(x.flavor()));
    }
    return x.value() ? "true" : "false";
}

BL bl_not(const BL& x) {
    if (x.is_null()) {
        return x;
    }
    return BL(!x.value());
}

BL bl_binary(BoolOp op, const BL& x, const BL& y, LogicMode mode) {
    switch (op) {
    case BoolOp::And:
        return mode == LogicMode::Hl7 ? and_hl7(x, y) : and_altered(x, y);
    case BoolOp::Or:
        return mode == LogicMode::Hl7 ? or_hl7(x, y) : or_altered(x, y);
    case BoolOp::Xor: {
        const BL either = bl_binary(BoolOp::Or, x, y, mode);
        const BL both = bl_binary(BoolOp::And, x, y, mode);
        return bl_binary(BoolOp::And, either, bl_not(both), mode);
    }
    case BoolOp::Implies:
        return bl_binary(BoolOp::Or, bl_not(x), y, mode);
    }
    throw Error("unreachable bool op");
}

BL bl_equal(const BL& x, const BL& y) {
    if (!x.is_null() && !y.is_null()) {
        return BL(x.value() == y.value());
    }
    if (x.is_null() && y.is_null()) {
        return BL::flavored(nf_lca(x.flavor(), y.flavor()));
    }
    return BL::flavored(x.is_null() ? x.flavor() : y.flavor());
}

BN bn_from_bl(const BL& x) {
    if (x.is_null()) {
        throw CastError("cannot narrow a flavored bl to bn");
    }
    return BN{x.value()};
}

const std::array<std::string_view, kTruthTableSize>& bl_table_labels() {
    static const std::array<std::string_view, kTruthTableSize> labels = {
        "asku", "false", "inv", "msk", "na", "nask",
        "nav",  "ni",    "oth", "true", "unk",
    };
    return labels;
}

const std::array<BL, kTruthTableSize>& bl_table_values() {
    static const std::array<BL, kTruthTableSize> values = {
        BL::flavored(NullFlavor::ASKU), BL(false),
        BL::flavored(NullFlavor::INV),  BL::flavored(NullFlavor::MSK),
        BL::flavored(NullFlavor::NA),   BL::flavored(NullFlavor::NASK),
        BL::flavored(NullFlavor::NAV),  BL::flavored(NullFlavor::NI),
        BL::flavored(NullFlavor::OTH),  BL(true),
        BL::flavored(NullFlavor::UNK),
    };
    return values;
}

TruthTable truth_table(BoolOp op, LogicMode mode) {
    TruthTable table{bl_table_labels(), {}};
    const auto& values = bl_table_values();
    for (std::size_t i = 0; i < kTruthTableSize; ++i) {
        for (std::size_t j = 0; j < kTruthTableSize; ++j) {
            table.cells[i][j] = bl_binary(op, values[i], values[j], mode);
        }
    }
    return table;
}

} // namespace hl7
