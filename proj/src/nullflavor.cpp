#include "hl7/nullflavor.hpp"

#include "hl7/errors.hpp"

#include <algorithm>
#include <cctype>

namespace hl7 {

namespace {

constexpr std::array<std::string_view, kNullFlavorCount> kTokens = {
    "ni", "inv", "oth", "ninf", "pinf", "unc", "der", "unk",
    "asku", "nav", "qs", "nask", "trc", "msk", "na",
};

// Parent table encoding the Table-1 level codes. ni is its own parent.
constexpr std::array<NullFlavor, kNullFlavorCount> kParent = {
    /* ni   */ NullFlavor::NI,
    /* inv  */ NullFlavor::NI,
    /* oth  */ NullFlavor::INV,
    /* ninf */ NullFlavor::OTH,
    /* pinf */ NullFlavor::OTH,
    /* unc  */ NullFlavor::INV,
    /* der  */ NullFlavor::INV,
    /* unk  */ NullFlavor::NI,
    /* asku */ NullFlavor::UNK,
    /* nav  */ NullFlavor::ASKU,
    /* qs   */ NullFlavor::UNK,
    /* nask */ NullFlavor::UNK,
    /* trc  */ NullFlavor::UNK,
    /* msk  */ NullFlavor::NI,
    /* na   */ NullFlavor::NI,
};

constexpr std::array<int, kNullFlavorCount> kDepth = {
    1, 2, 3, 4, 4, 3, 3, 2, 3, 4, 3, 3, 3, 2, 2,
};

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

std::string_view type_tag_name(TypeTag tag) {
    switch (tag) {
    case TypeTag::Any: return "any";
    case TypeTag::Bl: return "bl";
    case TypeTag::Bn: return "bn";
    case TypeTag::Real: return "real";
    case TypeTag::Pq: return "pq";
    case TypeTag::Ts: return "ts";
    case TypeTag::IvlTs: return "ivl_ts";
    case TypeTag::IvlPq: return "ivl_pq";
    case TypeTag::Cv: return "cv";
    case TypeTag::Ii: return "ii";
    case TypeTag::In: return "in";
    }
    return "?";
}

std::string_view nf_token(NullFlavor nf) {
    return kTokens[static_cast<std::size_t>(nf)];
}

NullFlavor parse_nullflavor(std::string_view token) {
    const std::string lowered = to_lower(token);
    for (std::size_t i = 0; i < kNullFlavorCount; ++i) {
        if (kTokens[i] == lowered) {
            return static_cast<NullFlavor>(i);
        }
    }
    throw UnknownNullFlavor("unknown nullflavor '" + std::string(token) + "'");
}

NullFlavor nf_parent(NullFlavor nf) {
    return kParent[static_cast<std::size_t>(nf)];
}

int nf_depth(NullFlavor nf) {
    return kDepth[static_cast<std::size_t>(nf)];
}

bool nf_is_ancestor(NullFlavor ancestor, NullFlavor nf) {
    NullFlavor cur = nf;
    while (true) {
        if (cur == ancestor) {
            return true;
        }
        if (cur == NullFlavor::NI) {
            return false;
        }
        cur = nf_parent(cur);
    }
}

NullFlavor nf_lca(NullFlavor a, NullFlavor b) {
    while (nf_depth(a) > nf_depth(b)) {
        a = nf_parent(a);
    }
    while (nf_depth(b) > nf_depth(a)) {
        b = nf_parent(b);
    }
    while (a != b) {
        a = nf_parent(a);
        b = nf_parent(b);
    }
    return a;
}

bool nf_allowed_on(NullFlavor nf, TypeTag type) {
    switch (type) {
    case TypeTag::Bn:
    case TypeTag::In:
        // Nonnull flavors reject every exceptional value.
        return false;
    case TypeTag::Bl:
        switch (nf) {
        case NullFlavor::NINF:
        case NullFlavor::PINF:
        case NullFlavor::UNC:
        case NullFlavor::DER:
        case NullFlavor::QS:
        case NullFlavor::TRC:
            return false;
        default:
            return true;
        }
    default:
        return true;
    }
}

} // namespace hl7
