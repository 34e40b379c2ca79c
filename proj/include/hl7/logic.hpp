#pragma once

#include "hl7/nullflavor.hpp"

#include <array>
#include <string>
#include <string_view>

namespace hl7 {

enum class LogicMode : uint8_t { Hl7, Altered };

enum class BoolOp : uint8_t { And, Or, Xor, Implies };

// Boolean with the 9 BL-legal exceptional values folded in.
class BL {
public:
    // Defaults to the most general flavor, ni.
    BL() : null_(true), value_(false), flavor_(NullFlavor::NI) {}

    explicit BL(bool v) : null_(false), value_(v), flavor_(NullFlavor::NI) {}

    // Carrier for a flavored boolean. Flavors that are not allowed on BL
    // (ninf, pinf, unc, der, qs, trc) are promoted to their nearest allowed
    // ancestor (oth, oth, inv, inv, unk, unk) so that comparison results on
    // wider types always land in the BL domain.
    static BL flavored(NullFlavor nf);

    bool is_null() const { return null_; }
    bool value() const { return value_; }
    NullFlavor flavor() const { return flavor_; }

    // Structural identity (same truth value or same flavor); this is the
    // test/table notion of sameness, not the HL7 `equal` property.
    friend bool operator==(const BL& a, const BL& b) {
        if (a.null_ != b.null_) return false;
        return a.null_ ? a.flavor_ == b.flavor_ : a.value_ == b.value_;
    }

private:
    BL(bool null, bool value, NullFlavor flavor)
        : null_(null), value_(value), flavor_(flavor) {}

    bool null_;
    bool value_;
    NullFlavor flavor_;
};

// Nonnull boolean; never carries a flavor.
struct BN {
    bool value = false;

    friend bool operator==(const BN&, const BN&) = default;
};

// Strict literal parse: "true", "false", or a BL-allowed flavor token.
BL parse_bl(std::string_view literal);
std::string bl_print(const BL& x);

BL bl_not(const BL& x);
BL bl_binary(BoolOp op, const BL& x, const BL& y, LogicMode mode = LogicMode::Hl7);

inline BL bl_and(const BL& x, const BL& y, LogicMode m = LogicMode::Hl7) {
    return bl_binary(BoolOp::And, x, y, m);
}
inline BL bl_or(const BL& x, const BL& y, LogicMode m = LogicMode::Hl7) {
    return bl_binary(BoolOp::Or, x, y, m);
}

// HL7 `equal` on BL: true iff both operands are truth values and the same;
// flavored operands propagate their lca.
BL bl_equal(const BL& x, const BL& y);

// Narrowing conversion; throws CastError when x is null.
BN bn_from_bl(const BL& x);
inline BL bl_from_bn(const BN& x) { return BL(x.value); }

inline constexpr std::size_t kTruthTableSize = 11;

struct TruthTable {
    std::array<std::string_view, kTruthTableSize> labels;
    std::array<std::array<BL, kTruthTableSize>, kTruthTableSize> cells;
};

// The 11 BL values in fixed label order
// {asku,false,inv,msk,na,nask,nav,ni,oth,true,unk}.
const std::array<BL, kTruthTableSize>& bl_table_values();
const std::array<std::string_view, kTruthTableSize>& bl_table_labels();

TruthTable truth_table(BoolOp op, LogicMode mode);

} // namespace hl7
