#include "hl7/ucum.hpp"

#include "hl7/errors.hpp"
#include "hl7/real.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace hl7 {

namespace {

// Non-ratio units; their conversions are not a factor times base dimensions.
const std::set<std::string, std::less<>> kNonRatioAtoms = {
    "Cel", "[degF]", "[pH]", "Np", "B",
};

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt digits_to_bigint(std::string_view digits) {
    const std::size_t nz = digits.find_first_not_of('0');
    if (nz == std::string_view::npos) {
        return BigInt(0);
    }
    return BigInt(std::string(digits.substr(nz)));
}

class UnitParser {
public:
    UnitParser(std::string_view s, const UnitRegistry& reg) : s_(s), reg_(reg) {}

    std::vector<UnitTerm> parse() {
        if (s_.empty()) {
            throw UnitSyntaxError("empty unit expression");
        }
        for (char c : s_) {
            if (c == '{' || c == '}') {
                throw UnsupportedUnit("annotations are not supported: '" +
                                      std::string(s_) + "'");
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                throw UnitSyntaxError("whitespace inside unit expression '" +
                                      std::string(s_) + "'");
            }
        }
        std::vector<UnitTerm> terms;
        parse_term(terms, +1);
        if (pos_ != s_.size()) {
            throw UnitSyntaxError("trailing characters in unit expression '" +
                                  std::string(s_) + "'");
        }
        return terms;
    }

private:
    void parse_term(std::vector<UnitTerm>& terms, int sign) {
        int mult = sign;
        if (peek() == '/') { // leading slash negates the first component
            ++pos_;
            mult = -sign;
        }
        while (true) {
            parse_component(terms, mult);
            const char c = peek();
            if (c == '.' || c == '/') {
                ++pos_;
                mult = c == '/' ? -sign : sign;
                continue;
            }
            return;
        }
    }

    void parse_component(std::vector<UnitTerm>& terms, int mult) {
        if (peek() == '(') {
            ++pos_;
            parse_term(terms, mult);
            if (peek() != ')') {
                throw UnitSyntaxError("unbalanced parenthesis in '" + std::string(s_) + "'");
            }
            ++pos_;
            return;
        }
        const std::size_t start = pos_;
        bool in_brackets = false;
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '[') in_brackets = true;
            else if (c == ']') in_brackets = false;
            else if (!in_brackets && (c == '.' || c == '/' || c == ')')) break;
            ++pos_;
        }
        if (in_brackets) {
            throw UnitSyntaxError("unterminated bracket in '" + std::string(s_) + "'");
        }
        const std::string_view token = s_.substr(start, pos_ - start);
        if (token.empty()) {
            throw UnitSyntaxError("empty component in unit expression '" +
                                  std::string(s_) + "'");
        }
        if (is_digits(token)) { // numeric factor
            terms.push_back(UnitTerm{std::string(token), "", mult});
            return;
        }
        // Split a trailing signed integer exponent; bracket atoms end in ']'
        // so their inner digits are never touched.
        int exponent = 1;
        std::size_t end = token.size();
        while (end > 0 && std::isdigit(static_cast<unsigned char>(token[end - 1]))) {
            --end;
        }
        if (end < token.size()) {
            std::size_t digits_at = end;
            if (end > 0 && (token[end - 1] == '+' || token[end - 1] == '-')) {
                --end;
            }
            if (token.size() - digits_at > 4) {
                throw UnitSyntaxError("exponent out of range in '" + std::string(s_) + "'");
            }
            exponent = std::atoi(std::string(token.substr(end)).c_str());
        }
        const std::string_view symbol = token.substr(0, end);
        if (symbol.empty()) {
            throw UnitSyntaxError("component without unit atom in '" +
                                  std::string(s_) + "'");
        }
        auto [prefix, atom] = resolve_symbol(symbol);
        terms.push_back(UnitTerm{std::move(atom), std::move(prefix), exponent * mult});
    }

    std::pair<std::string, std::string> resolve_symbol(std::string_view symbol) const {
        if (reg_.has_atom(symbol)) {
            return {"", std::string(symbol)};
        }
        if (kNonRatioAtoms.count(std::string(symbol))) {
            throw UnsupportedUnit("unit '" + std::string(symbol) +
                                  "' has no ratio-scale conversion");
        }
        // Longest prefix first so "dam" resolves as deka-m, not deci-"am".
        for (std::size_t len : {std::size_t{2}, std::size_t{1}}) {
            if (symbol.size() <= len) continue;
            const std::string_view p = symbol.substr(0, len);
            const std::string_view rest = symbol.substr(len);
            if (reg_.prefix_factor(p) != nullptr && reg_.has_atom(rest)) {
                if (!reg_.atom_is_metric(rest)) {
                    throw UnknownAtom("atom '" + std::string(rest) +
                                      "' does not admit prefix '" + std::string(p) + "'");
                }
                return {std::string(p), std::string(rest)};
            }
        }
        throw UnknownAtom("unknown unit atom '" + std::string(symbol) + "'");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    std::string_view s_;
    std::size_t pos_ = 0;
    const UnitRegistry& reg_;
};

} // namespace

std::string dims_to_string(const DimVector& dims) {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] == 0) continue;
        if (!out.empty()) out.push_back('.');
        out += kBaseUnitNames[i];
        if (dims[i] != 1) out += std::to_string(dims[i]);
    }
    return out.empty() ? "1" : out;
}

UnitExpr unit_parse(std::string_view s, const UnitRegistry& reg) {
    UnitParser parser(s, reg);
    return UnitExpr{std::string(s), parser.parse()};
}

Canonical canonicalize(const UnitExpr& u, const UnitRegistry& reg) {
    Canonical out;
    for (const UnitTerm& term : u.terms) {
        if (is_digits(term.atom)) {
            BigInt factor = digits_to_bigint(term.atom);
            if (factor == 0) {
                throw UnitSyntaxError("zero factor in unit expression");
            }
            out.factor *= Rational(std::move(factor), 1).pow_int(term.exponent);
            continue;
        }
        const Canonical& atom = reg.atom_canonical(term.atom);
        Rational base = atom.factor;
        if (!term.prefix.empty()) {
            const Rational* pf = reg.prefix_factor(term.prefix);
            if (pf == nullptr) {
                throw UnknownPrefix("unknown prefix '" + term.prefix + "'");
            }
            base *= *pf;
        }
        out.factor *= base.pow_int(term.exponent);
        for (std::size_t i = 0; i < out.dims.size(); ++i) {
            out.dims[i] += atom.dims[i] * term.exponent;
        }
    }
    return out;
}

Canonical canonicalize(std::string_view s, const UnitRegistry& reg) {
    return canonicalize(unit_parse(s, reg), reg);
}

bool compares_units(const UnitExpr& a, const UnitExpr& b, const UnitRegistry& reg) {
    return canonicalize(a, reg).dims == canonicalize(b, reg).dims;
}

bool compares_units(std::string_view a, std::string_view b, const UnitRegistry& reg) {
    return canonicalize(a, reg).dims == canonicalize(b, reg).dims;
}

bool UnitRegistry::has_atom(std::string_view symbol) const {
    return atoms_.find(std::string(symbol)) != atoms_.end();
}

bool UnitRegistry::atom_is_metric(std::string_view symbol) const {
    auto it = atoms_.find(std::string(symbol));
    return it != atoms_.end() && it->second.metric;
}

const Canonical& UnitRegistry::atom_canonical(std::string_view symbol) const {
    auto it = atoms_.find(std::string(symbol));
    if (it == atoms_.end()) {
        throw UnknownAtom("unknown unit atom '" + std::string(symbol) + "'");
    }
    return it->second.canonical;
}

const Rational* UnitRegistry::prefix_factor(std::string_view symbol) const {
    auto it = prefixes_.find(std::string(symbol));
    return it == prefixes_.end() ? nullptr : &it->second;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    while (!fields.empty() && fields.back().empty()) {
        fields.pop_back();
    }
    return fields;
}

int base_dim_index(std::string_view name) {
    for (std::size_t i = 0; i < kBaseUnitNames.size(); ++i) {
        if (kBaseUnitNames[i] == name) return static_cast<int>(i);
    }
    return -1;
}

} // namespace

UnitRegistry UnitRegistry::load_string(std::string_view text) {
    UnitRegistry reg;

    struct RawDef {
        std::string value;
        std::string unit;
    };
    std::unordered_map<std::string, RawDef> raw;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::vector<std::string> f = split_tabs(line);
        const std::string where = " (registry line " + std::to_string(lineno) + ")";
        if (f.size() < 3) {
            throw FormatError("malformed registry row" + where);
        }
        const std::string& symbol = f[0];
        const std::string& kind = f[1];
        if (kind == "p") {
            reg.prefixes_.emplace(symbol, parse_decimal(f[2]).first);
            continue;
        }
        if (kind != "y" && kind != "n") {
            throw FormatError("metric flag must be y, n or p" + where);
        }
        if (reg.atoms_.count(symbol) || raw.count(symbol)) {
            throw FormatError("duplicate atom '" + symbol + "'" + where);
        }
        if (f[2].rfind("=base:", 0) == 0) {
            const int dim = base_dim_index(f[2].substr(6));
            if (dim < 0) {
                throw FormatError("unknown base dimension" + where);
            }
            AtomInfo info;
            info.metric = kind == "y";
            info.canonical.dims[static_cast<std::size_t>(dim)] = 1;
            reg.atoms_.emplace(symbol, std::move(info));
            reg.atom_order_.push_back(symbol);
            continue;
        }
        if (f.size() < 4) {
            throw FormatError("derived atom row needs value and unit" + where);
        }
        // Placeholder entry so prefix/atom resolution sees every symbol while
        // definitions are still being expanded.
        AtomInfo info;
        info.metric = kind == "y";
        reg.atoms_.emplace(symbol, std::move(info));
        reg.atom_order_.push_back(symbol);
        raw.emplace(symbol, RawDef{f[2], f[3]});
    }

    std::set<std::string> resolved;
    for (const auto& [symbol, info] : reg.atoms_) {
        if (!raw.count(symbol)) {
            resolved.insert(symbol); // base units
        }
    }

    std::set<std::string> visiting;
    auto ensure = [&](auto&& self, const std::string& symbol) -> void {
        if (resolved.count(symbol)) {
            return;
        }
        auto def = raw.find(symbol);
        if (def == raw.end()) {
            throw DanglingReference("definition references unknown atom '" + symbol + "'");
        }
        if (!visiting.insert(symbol).second) {
            throw CycleError("cycle in unit definitions involving '" + symbol + "'");
        }
        const UnitExpr expr = unit_parse(def->second.unit, reg);
        for (const UnitTerm& term : expr.terms) {
            if (!is_digits(term.atom)) {
                self(self, term.atom);
            }
        }
        Canonical canonical = canonicalize(expr, reg);
        canonical.factor *= parse_decimal(def->second.value).first;
        if (canonical.factor.sign() <= 0) {
            throw FormatError("atom '" + symbol + "' has a non-positive factor");
        }
        reg.atoms_[symbol].canonical = std::move(canonical);
        visiting.erase(symbol);
        resolved.insert(symbol);
    };
    for (const auto& [symbol, def] : raw) {
        ensure(ensure, symbol);
    }
    return reg;
}

UnitRegistry UnitRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open unit registry '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_string(buf.str());
}

std::string default_registry_path() {
    if (const char* env = std::getenv("HL7_REGISTRY")) {
        return env;
    }
    return std::string(HL7_DATA_DIR) + "/ucum.tsv";
}

} // namespace hl7
