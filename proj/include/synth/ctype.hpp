#pragma once

#include <string>
#include <vector>

namespace synth {

// The C type subset: scalars, pointers, fixed arrays, aggregates, and void
// (return position only). Arrays and aggregates parse and print but are not
// synthesis targets.
struct CType {
    enum class Kind { Int, Float, Pointer, Array, Aggregate, Void };

    Kind kind = Kind::Int;
    std::vector<CType> elems;               // Pointer/Array: [0] = element type; Aggregate: field types
    std::vector<std::string> field_names;   // Aggregate only, unique
    long long array_len = 0;                // Array only, > 0

    static CType make_int() { return CType{Kind::Int, {}, {}, 0}; }
    static CType make_float() { return CType{Kind::Float, {}, {}, 0}; }
    static CType make_void() { return CType{Kind::Void, {}, {}, 0}; }
    static CType pointer_to(CType elem);
    static CType array_of(CType elem, long long len);

    bool is_pointer() const { return kind == Kind::Pointer; }
    bool is_scalar() const { return kind == Kind::Int || kind == Kind::Float; }
    const CType& pointee() const { return elems.front(); }

    // Levels of pointer nesting at the top of the type (int** -> 2).
    int pointer_depth() const;

    std::string to_string() const;
};

bool operator==(const CType& a, const CType& b);
inline bool operator!=(const CType& a, const CType& b) { return !(a == b); }

// Total order used for canonical printing and binding order.
int compare(const CType& a, const CType& b);
inline bool operator<(const CType& a, const CType& b) { return compare(a, b) < 0; }

}  // namespace synth
