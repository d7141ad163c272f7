#include "synth/spec.hpp"

#include <algorithm>

namespace synth {

std::string Atom::to_string() const {
    switch (kind) {
        case Kind::ParamRef: return text;
        case Kind::TypeLit: return type.to_string();
        case Kind::StringLit: return "\"" + text + "\"";
        case Kind::NumLit: return text;
    }
    return "?";
}

int compare(const Atom& a, const Atom& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    if (a.kind == Atom::Kind::TypeLit) return compare(a.type, b.type);
    if (a.text != b.text) return a.text < b.text ? -1 : 1;
    return 0;
}

std::optional<std::string> canonical_decimal(const std::string& text) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::string intpart, fracpart;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) intpart += text[i++];
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) fracpart += text[i++];
    }
    if (i != text.size() || (intpart.empty() && fracpart.empty())) return std::nullopt;
    size_t nz = intpart.find_first_not_of('0');
    intpart = nz == std::string::npos ? "" : intpart.substr(nz);
    size_t last = fracpart.find_last_not_of('0');
    fracpart = last == std::string::npos ? "" : fracpart.substr(0, last + 1);
    if (intpart.empty()) intpart = "0";
    std::string out = intpart;
    if (!fracpart.empty()) out += "." + fracpart;
    if (neg && out != "0") out = "-" + out;
    return out;
}

const Param* Signature::find_param(const std::string& pname) const {
    for (const auto& p : params)
        if (p.name == pname) return &p;
    return nullptr;
}

std::vector<Atom> FunctionSpec::universe() const {
    std::vector<Atom> out;
    auto add = [&out](const Atom& a) {
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    };
    for (const auto& p : signature.params) add(Atom::param(p.name));
    for (const auto& p : signature.params) add(Atom::type_lit(p.ctype));
    for (const auto& [name, rel] : relations)
        for (const auto& tuple : rel.tuples)
            for (const auto& a : tuple) add(a);
    return out;
}

std::optional<std::string> FunctionSpec::synthesis_ineligibility() const {
    for (const auto& p : signature.params) {
        const CType& t = p.ctype;
        if (t.is_scalar()) continue;
        if (t.is_pointer() && t.pointee().is_scalar()) continue;
        if (t.pointer_depth() > 1)
            return "parameter '" + p.name + "' has pointer depth > 1 (" + t.to_string() + ")";
        return "parameter '" + p.name + "' has unsupported type " + t.to_string();
    }
    const CType& r = signature.return_type;
    if (r.kind != CType::Kind::Void && r.kind != CType::Kind::Float && r.kind != CType::Kind::Int)
        return "unsupported return type " + r.to_string();
    if (r.kind == CType::Kind::Int)
        return "int return values cannot be produced by the float instruction set";
    return std::nullopt;
}

std::optional<CType> type_of(const FunctionSpec& spec, const Atom& a) {
    switch (a.kind) {
        case Atom::Kind::ParamRef: {
            const Param* p = spec.signature.find_param(a.text);
            if (!p) return std::nullopt;
            return p->ctype;
        }
        case Atom::Kind::TypeLit:
            return a.type;
        default:
            return std::nullopt;  // untyped atom
    }
}

bool is_pointer(const CType& t) { return t.is_pointer(); }

std::string print_spec(const FunctionSpec& spec) {
    std::string out = "function " + spec.signature.name + "(";
    for (size_t i = 0; i < spec.signature.params.size(); ++i) {
        if (i) out += ", ";
        out += spec.signature.params[i].name + ": " + spec.signature.params[i].ctype.to_string();
    }
    out += ") -> " + spec.signature.return_type.to_string() + "\n";
    if (spec.relations.empty()) return out;
    out += "relations:\n";
    for (const auto& [name, rel] : spec.relations) {  // std::map: sorted names
        for (const auto& tuple : rel.tuples) {
            out += "    " + name + "(";
            for (size_t i = 0; i < tuple.size(); ++i) {
                if (i) out += ", ";
                out += tuple[i].to_string();
            }
            out += ")\n";
        }
    }
    return out;
}

}  // namespace synth
