#include "synth/fragments.hpp"

#include <algorithm>
#include <cassert>

namespace synth {

std::string FragmentInstance::to_string() const {
    std::string out = fragment_kind_name(kind);
    out += "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        out += args[i].to_string();
    }
    out += ")";
    return out;
}

bool operator==(const FragmentInstance& a, const FragmentInstance& b) {
    return a.kind == b.kind && a.args == b.args;
}

namespace {

bool is_int_param(const FunctionSpec& spec, const Atom& a) {
    if (a.kind != Atom::Kind::ParamRef) return false;
    const Param* p = spec.signature.find_param(a.text);
    return p && p->ctype.kind == CType::Kind::Int;
}

bool is_pointer_param(const FunctionSpec& spec, const Atom& a) {
    if (a.kind != Atom::Kind::ParamRef) return false;
    const Param* p = spec.signature.find_param(a.text);
    return p && p->ctype.is_pointer();
}

bool is_type_lit(const Atom& a) { return a.kind == Atom::Kind::TypeLit; }

bool fragment_typechecks(const FunctionSpec& spec, FragmentKind kind,
                         const std::vector<Atom>& args) {
    if (static_cast<int>(args.size()) != fragment_kind_arity(kind)) return false;
    switch (kind) {
        case FragmentKind::Loop:
            return is_int_param(spec, args[0]) && is_type_lit(args[1]) &&
                   is_pointer_param(spec, args[2]);
        case FragmentKind::ZipLoop:
            return is_int_param(spec, args[0]) && is_type_lit(args[1]) &&
                   is_pointer_param(spec, args[2]) && is_type_lit(args[3]) &&
                   is_pointer_param(spec, args[4]);
        case FragmentKind::Store:
        case FragmentKind::AffineAccess:
            return is_pointer_param(spec, args[0]) && is_type_lit(args[1]);
    }
    return false;
}

}  // namespace

std::vector<FragmentInstance> instantiate_fragments(const RuleLibrary& lib,
                                                    const FunctionSpec& spec) {
    std::vector<FragmentInstance> out;
    for (const Rule& rule : lib.rules) {
        for (auto& args : match_rule(rule, spec)) {
            if (!fragment_typechecks(spec, rule.head.kind, args)) continue;
            FragmentInstance inst{rule.head.kind, std::move(args), -1};
            if (std::find(out.begin(), out.end(), inst) == out.end())
                out.push_back(std::move(inst));
        }
    }
    for (size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
    return out;
}

int Composition::instance_count() const {
    int n = 0;
    auto walk = [&n](const CompNode& node, auto&& self) -> void {
        ++n;
        for (const auto& c : node.children) self(c, self);
    };
    for (const auto& r : roots) walk(r, walk);
    return n;
}

std::vector<int> Composition::canonical_key() const {
    std::vector<int> key;
    auto walk = [&key](const CompNode& node, auto&& self) -> void {
        key.push_back(node.frag_id);
        key.push_back(static_cast<int>(node.children.size()));
        for (const auto& c : node.children) self(c, self);
    };
    for (const auto& r : roots) walk(r, walk);
    return key;
}

std::string Composition::to_string(const std::vector<FragmentInstance>& frags) const {
    std::string out;
    auto walk = [&](const CompNode& node, auto&& self) -> void {
        out += frags[node.frag_id].to_string();
        if (!node.children.empty()) {
            out += " > [";
            for (size_t i = 0; i < node.children.size(); ++i) {
                if (i) out += "; ";
                self(node.children[i], self);
            }
            out += "]";
        }
    };
    for (size_t i = 0; i < roots.size(); ++i) {
        if (i) out += "; ";
        walk(roots[i], walk);
    }
    return out;
}

namespace {

// size(X, B) present in the spec?
bool size_relates(const FunctionSpec& spec, const Atom& array, const Atom& bound) {
    const Relation* rel = spec.find_relation("size");
    if (!rel || rel->arity() != 2) return false;
    for (const auto& t : rel->tuples)
        if (t[0] == array && t[1] == bound) return true;
    return false;
}

// `ancestors` counts the node's loop ancestors (only loops have children,
// so every ancestor is loop-like).
bool node_valid(const CompNode& node, const std::vector<FragmentInstance>& frags,
                const FunctionSpec& spec, int ancestors, const FragmentInstance* parent,
                std::vector<bool>& seen) {
    if (node.frag_id < 0 || node.frag_id >= static_cast<int>(frags.size())) return false;
    if (seen[node.frag_id]) return false;
    seen[node.frag_id] = true;
    const FragmentInstance& frag = frags[node.frag_id];
    switch (frag.kind) {
        case FragmentKind::Loop:
        case FragmentKind::ZipLoop:
            break;  // any position under a loop or at root
        case FragmentKind::Store:
            if (!node.children.empty()) return false;
            if (!parent || !parent->is_loop_like()) return false;
            if (!size_relates(spec, frag.array(), parent->bound())) return false;
            break;
        case FragmentKind::AffineAccess:
            if (!node.children.empty()) return false;
            if (ancestors < 1 || ancestors > 2) return false;
            break;
    }
    if (frag.is_loop_like()) {
        for (const auto& child : node.children)
            if (!node_valid(child, frags, spec, ancestors + 1, &frag, seen)) return false;
    }
    return true;
}

}  // namespace

bool composition_valid(const Composition& comp, const std::vector<FragmentInstance>& frags,
                       const FunctionSpec& spec) {
    std::vector<bool> seen(frags.size(), false);
    for (const auto& root : comp.roots) {
        if (root.frag_id < 0 || root.frag_id >= static_cast<int>(frags.size())) return false;
        if (!frags[root.frag_id].is_loop_like()) return false;
        if (!node_valid(root, frags, spec, 0, nullptr, seen)) return false;
    }
    return true;
}

namespace {

// Enumerates ordered forests over exactly the instances in `mask`,
// pruning invalid placements as the tree is built.
struct ForestGen {
    const std::vector<FragmentInstance>& frags;
    const FunctionSpec& spec;
    std::vector<Composition>* out;

    // All valid ordered forests over `mask` in the context (parent, depth).
    // Appends to `results`.
    std::vector<std::vector<CompNode>> forests(unsigned mask, const FragmentInstance* parent,
                                               int depth) {
        std::vector<std::vector<CompNode>> results;
        if (mask == 0) {
            results.push_back({});
            return results;
        }
        for (int id = 0; id < static_cast<int>(frags.size()); ++id) {
            if (!(mask & (1u << id))) continue;
            const FragmentInstance& frag = frags[id];
            if (!placement_ok(frag, parent, depth)) continue;
            unsigned rest = mask & ~(1u << id);
            if (frag.is_loop_like()) {
                // Split `rest` into descendants of this node and later siblings.
                for (unsigned desc = rest;; desc = (desc - 1) & rest) {
                    for (auto& subtree : forests(desc, &frag, depth + 1)) {
                        for (auto& siblings : forests(rest & ~desc, parent, depth)) {
                            CompNode node{id, subtree};
                            std::vector<CompNode> forest;
                            forest.push_back(std::move(node));
                            for (auto& s : siblings) forest.push_back(s);
                            results.push_back(std::move(forest));
                        }
                    }
                    if (desc == 0) break;
                }
            } else {
                for (auto& siblings : forests(rest, parent, depth)) {
                    std::vector<CompNode> forest;
                    forest.push_back(CompNode{id, {}});
                    for (auto& s : siblings) forest.push_back(s);
                    results.push_back(std::move(forest));
                }
            }
        }
        return results;
    }

    bool placement_ok(const FragmentInstance& frag, const FragmentInstance* parent,
                      int depth) const {
        switch (frag.kind) {
            case FragmentKind::Loop:
            case FragmentKind::ZipLoop:
                return parent == nullptr || parent->is_loop_like();
            case FragmentKind::Store:
                return parent && parent->is_loop_like() &&
                       size_relates(spec, frag.array(), parent->bound());
            case FragmentKind::AffineAccess:
                return depth >= 1 && depth <= 2 && parent && parent->is_loop_like();
        }
        return false;
    }
};

}  // namespace

std::vector<Composition> enumerate_compositions(const std::vector<FragmentInstance>& frags,
                                                const FunctionSpec& spec, int max_fragments) {
    assert(max_fragments >= 1);
    assert(frags.size() <= 31);
    std::vector<Composition> out;
    ForestGen gen{frags, spec, &out};
    int n = static_cast<int>(frags.size());
    int limit = std::min(max_fragments, n);
    for (int count = 1; count <= limit; ++count) {
        std::vector<Composition> level;
        // Subsets of exactly `count` instances.
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != count) continue;
            for (auto& forest : gen.forests(mask, nullptr, 0)) {
                Composition comp{std::move(forest)};
                assert(composition_valid(comp, frags, spec));
                level.push_back(std::move(comp));
            }
        }
        std::sort(level.begin(), level.end(), [](const Composition& a, const Composition& b) {
            return a.canonical_key() < b.canonical_key();
        });
        level.erase(std::unique(level.begin(), level.end(),
                                [](const Composition& a, const Composition& b) {
                                    return a.canonical_key() == b.canonical_key();
                                }),
                    level.end());
        for (auto& c : level) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace synth
