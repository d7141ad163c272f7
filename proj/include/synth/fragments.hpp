#pragma once

#include <string>
#include <vector>

#include "synth/query.hpp"

namespace synth {

// An instantiated fragment template. Args follow the head kind's shape:
//   loop(N, T, X)            bound, element type, array
//   zip_loop(N, T, X, S, Y)  bound, two typed arrays sharing the bound
//   store(X, T)              output array and its type
//   affine_access(X, T)      unsized array and its type
struct FragmentInstance {
    FragmentKind kind = FragmentKind::Loop;
    std::vector<Atom> args;
    int id = -1;

    bool is_loop_like() const {
        return kind == FragmentKind::Loop || kind == FragmentKind::ZipLoop;
    }
    const Atom& bound() const { return args[0]; }          // loop kinds
    const Atom& array() const {                            // primary array
        return is_loop_like() ? args[2] : args[0];
    }
    const Atom& zip_second_array() const { return args[4]; }

    std::string to_string() const;
};

bool operator==(const FragmentInstance& a, const FragmentInstance& b);

// Every head instance from every rule, type-checked (bounds are int
// parameters, arrays are pointer parameters), deduplicated, ids in
// canonical order: rule order, then canonical binding order.
std::vector<FragmentInstance> instantiate_fragments(const RuleLibrary& lib,
                                                    const FunctionSpec& spec);

// An ordered tree of fragment instances. Loop kinds are internal nodes;
// store/affine_access are leaves.
struct CompNode {
    int frag_id = -1;
    std::vector<CompNode> children;
};

struct Composition {
    std::vector<CompNode> roots;

    int instance_count() const;
    // Preorder (frag_id, child_count) sequence; the canonical sort key.
    std::vector<int> canonical_key() const;
    std::string to_string(const std::vector<FragmentInstance>& frags) const;
};

// Composition validity:
//   - each instance appears at most once,
//   - roots and loop parents hold loop kinds only,
//   - store(X,_) sits directly under a loop whose bound B has size(X, B),
//   - affine_access has 1 or 2 loop ancestors (deeper nests are not
//     lowerable: the affine index candidates cover at most two loops).
bool composition_valid(const Composition& comp, const std::vector<FragmentInstance>& frags,
                       const FunctionSpec& spec);

// Every valid composition using 1..max_fragments distinct instances, in
// nondecreasing instance count; canonical order within a count; no
// duplicates.
std::vector<Composition> enumerate_compositions(const std::vector<FragmentInstance>& frags,
                                                const FunctionSpec& spec, int max_fragments);

}  // namespace synth
