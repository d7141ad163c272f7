#include "synth/query.hpp"

#include <algorithm>

#include "synth/spec_parser.hpp"

namespace synth {

const char* fragment_kind_name(FragmentKind k) {
    switch (k) {
        case FragmentKind::Loop: return "loop";
        case FragmentKind::ZipLoop: return "zip_loop";
        case FragmentKind::Store: return "store";
        case FragmentKind::AffineAccess: return "affine_access";
    }
    return "?";
}

int fragment_kind_arity(FragmentKind k) {
    switch (k) {
        case FragmentKind::Loop: return 3;      // loop(N, T, X)
        case FragmentKind::ZipLoop: return 5;   // zip_loop(N, T, X, S, Y)
        case FragmentKind::Store: return 2;     // store(X, T)
        case FragmentKind::AffineAccess: return 2;  // affine_access(X, T)
    }
    return 0;
}

void validate_conjunction(const Conjunction& body) {
    bool has_positive = false;
    bool has_negative = false;
    for (const auto& lit : body) {
        if (lit.negative)
            has_negative = true;
        else
            has_positive = true;
        if (lit.pred == "type" && lit.args.size() != 2)
            throw ParseError(0, 0, "builtin type/2 used with arity " +
                                       std::to_string(lit.args.size()));
        if (lit.pred == "pointer" && lit.args.size() != 1)
            throw ParseError(0, 0, "builtin pointer/1 used with arity " +
                                       std::to_string(lit.args.size()));
        for (const auto& t : lit.args)
            if (t.kind == Term::Kind::Wildcard && !lit.negative)
                throw ParseError(0, 0, "wildcard in positive literal " + lit.pred);
    }
    if (has_negative && !has_positive)
        throw ParseError(0, 0, "negative match requires positive conjunct");
    for (const auto& lit : body) {
        if (!lit.negative) continue;
        for (const auto& t : lit.args) {
            if (t.kind != Term::Kind::Var) continue;
            bool bound = false;
            for (const auto& pos : body) {
                if (pos.negative) continue;
                for (const auto& pt : pos.args)
                    if (pt.kind == Term::Kind::Var && pt.var == t.var) bound = true;
            }
            if (!bound)
                throw ParseError(0, 0, "negative match requires positive conjunct binding " +
                                           t.var);
        }
    }
}

namespace {

// Can `var` be bound to `atom` given the partial binding? Enforces
// parameter injectivity: two variables never name the same parameter.
bool can_bind(const Binding& b, const std::string& var, const Atom& atom) {
    auto it = b.find(var);
    if (it != b.end()) return it->second == atom;
    if (atom.kind == Atom::Kind::ParamRef)
        for (const auto& [v, a] : b)
            if (a == atom) return false;
    return true;
}

bool unify_tuple(const std::vector<Term>& args, const std::vector<Atom>& tuple, Binding& b) {
    Binding saved = b;
    for (size_t i = 0; i < args.size(); ++i) {
        const Term& t = args[i];
        switch (t.kind) {
            case Term::Kind::Wildcard:
                break;
            case Term::Kind::Const:
                if (!(t.atom == tuple[i])) {
                    b = saved;
                    return false;
                }
                break;
            case Term::Kind::Var:
                if (!can_bind(b, t.var, tuple[i])) {
                    b = saved;
                    return false;
                }
                b[t.var] = tuple[i];
                break;
        }
    }
    return true;
}

// Resolves a term under a binding; nullopt when it is an unbound variable
// or a wildcard.
std::optional<Atom> resolve(const Term& t, const Binding& b) {
    if (t.kind == Term::Kind::Const) return t.atom;
    if (t.kind == Term::Kind::Var) {
        auto it = b.find(t.var);
        if (it != b.end()) return it->second;
    }
    return std::nullopt;
}

// The builtin `type` is a signature query: it relates a parameter to its
// declared type. Type literals do not self-type here (type_of the operation
// does map a TypeLit to itself, but the query surface asks about the
// signature only; otherwise `not size(X,_), type(X,T)` would match type
// atoms as well as parameters, contradicting the single affine_access
// instantiation on gemv).
bool type_query_holds(const FunctionSpec& spec, const Atom& subject, const Atom& ty) {
    if (subject.kind != Atom::Kind::ParamRef) return false;
    if (ty.kind != Atom::Kind::TypeLit) return false;
    const Param* p = spec.signature.find_param(subject.text);
    return p && p->ctype == ty.type;
}

bool pointer_query_holds(const Atom& a) {
    return a.kind == Atom::Kind::TypeLit && a.type.is_pointer();
}

// Solves one positive builtin literal against a partial binding, appending
// every extension to `out`.
void solve_builtin(const FunctionSpec& spec, const std::vector<Atom>& universe,
                   const Literal& lit, const Binding& b, std::vector<Binding>& out) {
    if (lit.pred == "pointer") {
        const Term& t = lit.args[0];
        if (auto a = resolve(t, b)) {
            if (pointer_query_holds(*a)) out.push_back(b);
            return;
        }
        for (const auto& cand : universe) {
            if (!pointer_query_holds(cand)) continue;
            if (!can_bind(b, t.var, cand)) continue;
            Binding nb = b;
            nb[t.var] = cand;
            out.push_back(std::move(nb));
        }
        return;
    }
    // type(subject, ty)
    const Term& subject = lit.args[0];
    const Term& ty = lit.args[1];
    auto try_subject = [&](const Atom& sa, const Binding& base) {
        const Param* p =
            sa.kind == Atom::Kind::ParamRef ? spec.signature.find_param(sa.text) : nullptr;
        if (!p) return;
        Atom want = Atom::type_lit(p->ctype);
        if (auto ta = resolve(ty, base)) {
            if (*ta == want) out.push_back(base);
            return;
        }
        if (!can_bind(base, ty.var, want)) return;
        Binding nb = base;
        nb[ty.var] = want;
        out.push_back(std::move(nb));
    };
    if (auto sa = resolve(subject, b)) {
        try_subject(*sa, b);
        return;
    }
    for (const auto& cand : universe) {
        if (cand.kind != Atom::Kind::ParamRef) continue;
        if (!can_bind(b, subject.var, cand)) continue;
        Binding nb = b;
        nb[subject.var] = cand;
        try_subject(cand, nb);
    }
}

// A negative literal fails the binding iff some consistent fact exists.
// All its variables are bound by now (validation guarantees it); wildcards
// match anything.
bool negative_violated(const FunctionSpec& spec, const Literal& lit, const Binding& b) {
    if (lit.pred == "pointer") {
        auto a = resolve(lit.args[0], b);
        if (!a) {  // wildcard: any pointer type literal in the spec would do
            for (const auto& cand : spec.universe())
                if (pointer_query_holds(cand)) return true;
            return false;
        }
        return pointer_query_holds(*a);
    }
    if (lit.pred == "type") {
        auto subject = resolve(lit.args[0], b);
        auto ty = resolve(lit.args[1], b);
        if (subject) {
            if (subject->kind != Atom::Kind::ParamRef) return false;
            const Param* p = spec.signature.find_param(subject->text);
            if (!p) return false;
            return !ty || type_query_holds(spec, *subject, *ty);
        }
        // Wildcard subject: does any parameter have this type (or any type)?
        for (const auto& p : spec.signature.params)
            if (!ty || (ty->kind == Atom::Kind::TypeLit && p.ctype == ty->type)) return true;
        return false;
    }
    const Relation* rel = spec.find_relation(lit.pred);
    if (!rel) return false;  // missing relation satisfies the negative literal
    if (rel->arity() != lit.args.size()) return false;
    for (const auto& tuple : rel->tuples) {
        bool matches = true;
        for (size_t i = 0; i < tuple.size(); ++i) {
            auto a = resolve(lit.args[i], b);
            if (a && !(*a == tuple[i])) {
                matches = false;
                break;
            }
        }
        if (matches) return true;
    }
    return false;
}

bool binding_less(const Binding& a, const Binding& b) {
    auto ai = a.begin();
    auto bi = b.begin();
    for (; ai != a.end() && bi != b.end(); ++ai, ++bi) {
        if (ai->first != bi->first) return ai->first < bi->first;
        if (int c = compare(ai->second, bi->second)) return c < 0;
    }
    return a.size() < b.size();
}

}  // namespace

std::vector<Binding> solve(const Conjunction& body, const FunctionSpec& spec) {
    std::vector<Atom> universe = spec.universe();

    // Positives in textual order with early pruning.
    std::vector<Binding> current = {Binding{}};
    for (const auto& lit : body) {
        if (lit.negative) continue;
        std::vector<Binding> next;
        for (const auto& b : current) {
            if (lit.is_builtin()) {
                solve_builtin(spec, universe, lit, b, next);
                continue;
            }
            const Relation* rel = spec.find_relation(lit.pred);
            if (!rel || rel->arity() != lit.args.size()) continue;
            for (const auto& tuple : rel->tuples) {
                Binding nb = b;
                if (unify_tuple(lit.args, tuple, nb)) next.push_back(std::move(nb));
            }
        }
        current = std::move(next);
        if (current.empty()) return {};
    }

    // Negatives, stratified after the positives.
    std::vector<Binding> result;
    for (const auto& b : current) {
        bool ok = true;
        for (const auto& lit : body) {
            if (!lit.negative) continue;
            if (negative_violated(spec, lit, b)) {
                ok = false;
                break;
            }
        }
        if (ok) result.push_back(b);
    }

    std::sort(result.begin(), result.end(), binding_less);
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<std::vector<Atom>> match_rule(const Rule& rule, const FunctionSpec& spec) {
    std::vector<std::vector<Atom>> out;
    for (const Binding& b : solve(rule.body, spec)) {
        std::vector<Atom> inst;
        inst.reserve(rule.head.vars.size());
        for (const auto& v : rule.head.vars) inst.push_back(b.at(v));
        if (std::find(out.begin(), out.end(), inst) == out.end()) out.push_back(std::move(inst));
    }
    return out;
}

}  // namespace synth
