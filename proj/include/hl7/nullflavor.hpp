#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace hl7 {

// The 15 HL7 exceptional-value symbols. Order is fixed; enum values index
// into the static hierarchy tables.
enum class NullFlavor : uint8_t {
    NI,   // no information (root)
    INV,  // invalid
    OTH,  // other
    NINF, // negative infinity
    PINF, // positive infinity
    UNC,  // unencoded
    DER,  // derived
    UNK,  // unknown
    ASKU, // asked but unknown
    NAV,  // temporarily unavailable
    QS,   // sufficient quantity
    NASK, // not asked
    TRC,  // trace
    MSK,  // masked
    NA,   // not applicable
};

inline constexpr std::size_t kNullFlavorCount = 15;

inline constexpr std::array<NullFlavor, kNullFlavorCount> all_nullflavors = {
    NullFlavor::NI,   NullFlavor::INV, NullFlavor::OTH,  NullFlavor::NINF,
    NullFlavor::PINF, NullFlavor::UNC, NullFlavor::DER,  NullFlavor::UNK,
    NullFlavor::ASKU, NullFlavor::NAV, NullFlavor::QS,   NullFlavor::NASK,
    NullFlavor::TRC,  NullFlavor::MSK, NullFlavor::NA,
};

// Type tags shared by the per-type allowed-flavor sets and the dynamic ANY
// container.
enum class TypeTag : uint8_t {
    Any,
    Bl,
    Bn,
    Real,
    Pq,
    Ts,
    IvlTs,
    IvlPq,
    Cv,
    Ii,
    In,
};

std::string_view type_tag_name(TypeTag tag);

// Lowercase literal token, identical to the symbol name.
std::string_view nf_token(NullFlavor nf);

// Case-insensitive token lookup; throws UnknownNullFlavor.
NullFlavor parse_nullflavor(std::string_view token);

// Parent in the specialization tree; the root ni is its own parent.
NullFlavor nf_parent(NullFlavor nf);

// Depth of the node; ni has depth 1.
int nf_depth(NullFlavor nf);

// Reflexive ancestor test: is `ancestor` on the parent chain of `nf`?
bool nf_is_ancestor(NullFlavor ancestor, NullFlavor nf);

// Deepest common reflexive ancestor of a and b.
NullFlavor nf_lca(NullFlavor a, NullFlavor b);

// May a value of the given type carry this flavor?
bool nf_allowed_on(NullFlavor nf, TypeTag type);

} // namespace hl7
