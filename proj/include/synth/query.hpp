#pragma once

#include <map>
#include <string>
#include <vector>

#include "synth/spec.hpp"

namespace synth {

// A term in a query literal: an uppercase-initial variable, a wildcard
// (negative literals only), or a constant atom.
struct Term {
    enum class Kind { Var, Wildcard, Const };

    Kind kind = Kind::Wildcard;
    std::string var;  // Var only
    Atom atom;        // Const only

    static Term make_var(std::string name) { return Term{Kind::Var, std::move(name), {}}; }
    static Term wildcard() { return Term{Kind::Wildcard, {}, {}}; }
    static Term constant(Atom a) { return Term{Kind::Const, {}, std::move(a)}; }
};

struct Literal {
    bool negative = false;
    std::string pred;  // "type" and "pointer" are builtins; anything else matches a relation
    std::vector<Term> args;

    bool is_builtin() const { return pred == "type" || pred == "pointer"; }
};

using Conjunction = std::vector<Literal>;

enum class FragmentKind { Loop, ZipLoop, Store, AffineAccess };

const char* fragment_kind_name(FragmentKind k);
int fragment_kind_arity(FragmentKind k);

// A rule head template: fragment kind plus the head variable list.
struct FragmentHead {
    FragmentKind kind = FragmentKind::Loop;
    std::vector<std::string> vars;
};

struct Rule {
    std::string name;  // spelled as the head kind in the rules file
    FragmentHead head;
    Conjunction body;
};

struct RuleLibrary {
    std::vector<Rule> rules;
};

// A solution: total map from the conjunction's variables to atoms.
// Distinct variables never bind the same parameter (they may bind equal
// type/string/numeric literals).
using Binding = std::map<std::string, Atom>;

// Validates a conjunction independent of any rule head:
//   - wildcards only in negative literals,
//   - builtin arity (type/2, pointer/1),
//   - a body with a negative literal needs a positive one, and every
//     variable of a negative literal must occur in some positive literal.
// Throws ParseError (line/col 0 when not from a file).
void validate_conjunction(const Conjunction& body);

// All bindings satisfying the conjunction against the spec, in canonical
// order (lexicographic by variable name, then atom). Positive relation
// literals match tuples of the named relation; `type(p, T)` holds when p is
// a parameter of declared type T; `pointer(T)` holds for pointer type
// literals. Negative literals use negation as failure after all positives
// are solved. Unknown relation names fail positive literals and satisfy
// negative ones.
std::vector<Binding> solve(const Conjunction& body, const FunctionSpec& spec);

// Head instances produced by a rule: the head with each solution's atoms
// substituted in, deduplicated, canonical order.
std::vector<std::vector<Atom>> match_rule(const Rule& rule, const FunctionSpec& spec);

}  // namespace synth
