#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "synth/ctype.hpp"

namespace synth {

// An atom is the kind of value relations range over: a function parameter,
// a C type, a string literal, or an exact decimal literal.
struct Atom {
    enum class Kind { ParamRef, TypeLit, StringLit, NumLit };

    Kind kind = Kind::ParamRef;
    std::string text;  // ParamRef: parameter name; StringLit: contents; NumLit: canonical decimal
    CType type;        // TypeLit only

    static Atom param(std::string name) { return Atom{Kind::ParamRef, std::move(name), {}}; }
    static Atom type_lit(CType t) { return Atom{Kind::TypeLit, {}, std::move(t)}; }
    static Atom string_lit(std::string s) { return Atom{Kind::StringLit, std::move(s), {}}; }
    static Atom num_lit(std::string canonical) { return Atom{Kind::NumLit, std::move(canonical), {}}; }

    std::string to_string() const;
};

int compare(const Atom& a, const Atom& b);
inline bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
inline bool operator!=(const Atom& a, const Atom& b) { return compare(a, b) != 0; }
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

// Normalizes a decimal literal ("007.2500" -> "7.25", "-0" -> "0").
// Returns nullopt if the text is not a plain decimal.
std::optional<std::string> canonical_decimal(const std::string& text);

struct Param {
    std::string name;
    CType ctype;
    int position = 0;
};

struct Signature {
    std::string name;
    std::vector<Param> params;
    CType return_type = CType::make_void();

    const Param* find_param(const std::string& name) const;
};

// A named relation: a set of equal-arity atom tuples.
struct Relation {
    std::string name;
    std::vector<std::vector<Atom>> tuples;  // deduplicated, canonical order
    size_t arity() const { return tuples.empty() ? 0 : tuples.front().size(); }
};

struct FunctionSpec {
    Signature signature;
    std::map<std::string, Relation> relations;

    const Relation* find_relation(const std::string& name) const {
        auto it = relations.find(name);
        return it == relations.end() ? nullptr : &it->second;
    }

    // All atoms a query variable may range over: parameters, their types,
    // and every atom appearing in a relation tuple. Ordered, deduplicated.
    std::vector<Atom> universe() const;

    // Nonempty diagnostic when the spec cannot be a synthesis target
    // (params beyond scalar / pointer-to-scalar, or unsupported return).
    std::optional<std::string> synthesis_ineligibility() const;
};

// Declared type of an atom: a parameter's type, or a type literal itself.
// String and numeric literals have no type.
std::optional<CType> type_of(const FunctionSpec& spec, const Atom& a);

bool is_pointer(const CType& t);

// Canonical text form; parse(print(s)) == s and print is idempotent.
std::string print_spec(const FunctionSpec& spec);

}  // namespace synth
