#include "synth/ctype.hpp"

namespace synth {

CType CType::pointer_to(CType elem) {
    CType t;
    t.kind = Kind::Pointer;
    t.elems.push_back(std::move(elem));
    return t;
}

CType CType::array_of(CType elem, long long len) {
    CType t;
    t.kind = Kind::Array;
    t.elems.push_back(std::move(elem));
    t.array_len = len;
    return t;
}

int CType::pointer_depth() const {
    int d = 0;
    const CType* t = this;
    while (t->kind == Kind::Pointer) {
        ++d;
        t = &t->elems.front();
    }
    return d;
}

std::string CType::to_string() const {
    switch (kind) {
        case Kind::Int: return "int";
        case Kind::Float: return "float";
        case Kind::Void: return "void";
        case Kind::Pointer: return elems.front().to_string() + "*";
        case Kind::Array:
            return elems.front().to_string() + "[" + std::to_string(array_len) + "]";
        case Kind::Aggregate: {
            std::string out = "struct{";
            for (size_t i = 0; i < elems.size(); ++i) {
                if (i) out += ",";
                out += field_names[i] + ":" + elems[i].to_string();
            }
            out += "}";
            return out;
        }
    }
    return "?";
}

bool operator==(const CType& a, const CType& b) { return compare(a, b) == 0; }

int compare(const CType& a, const CType& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    switch (a.kind) {
        case CType::Kind::Int:
        case CType::Kind::Float:
        case CType::Kind::Void:
            return 0;
        case CType::Kind::Pointer:
            return compare(a.elems.front(), b.elems.front());
        case CType::Kind::Array: {
            if (a.array_len != b.array_len) return a.array_len < b.array_len ? -1 : 1;
            return compare(a.elems.front(), b.elems.front());
        }
        case CType::Kind::Aggregate: {
            if (a.elems.size() != b.elems.size())
                return a.elems.size() < b.elems.size() ? -1 : 1;
            for (size_t i = 0; i < a.elems.size(); ++i) {
                if (a.field_names[i] != b.field_names[i])
                    return a.field_names[i] < b.field_names[i] ? -1 : 1;
                if (int c = compare(a.elems[i], b.elems[i])) return c;
            }
            return 0;
        }
    }
    return 0;
}

}  // namespace synth
