#include "synth/spec_parser.hpp"

#include <algorithm>
#include <cctype>

#include "line_scanner.hpp"

namespace synth {

using detail::Line;
using detail::Scanner;
using detail::split_lines;

namespace {

CType parse_ctype(Scanner& sc, bool allow_void);

CType parse_base_type(Scanner& sc, bool allow_void) {
    if (sc.accept_word("int")) return CType::make_int();
    if (sc.accept_word("float")) return CType::make_float();
    if (sc.accept_word("void")) {
        if (!allow_void)
            throw ParseError(sc.line(), sc.col(), "'void' only allowed as return type");
        return CType::make_void();
    }
    if (sc.accept_word("struct")) {
        sc.expect('{');
        CType agg;
        agg.kind = CType::Kind::Aggregate;
        for (;;) {
            std::string field = sc.ident();
            if (std::find(agg.field_names.begin(), agg.field_names.end(), field) !=
                agg.field_names.end())
                throw ParseError(sc.line(), sc.col(), "duplicate aggregate field '" + field + "'");
            sc.expect(':');
            agg.field_names.push_back(field);
            agg.elems.push_back(parse_ctype(sc, false));
            if (sc.accept('}')) break;
            sc.expect(',');
        }
        return agg;
    }
    throw ParseError(sc.line(), sc.col(), "unknown type name");
}

CType parse_ctype(Scanner& sc, bool allow_void) {
    CType t = parse_base_type(sc, allow_void);
    for (;;) {
        if (sc.accept('*')) {
            if (t.kind == CType::Kind::Void)
                throw ParseError(sc.line(), sc.col(), "void cannot be a pointee");
            t = CType::pointer_to(std::move(t));
        } else if (sc.accept('[')) {
            std::string num = sc.number();
            long long len = 0;
            try {
                len = std::stoll(num);
            } catch (...) {
                throw ParseError(sc.line(), sc.col(), "bad array length");
            }
            if (len <= 0) throw ParseError(sc.line(), sc.col(), "array length must be > 0");
            sc.expect(']');
            t = CType::array_of(std::move(t), len);
        } else {
            return t;
        }
    }
}

Atom parse_atom(Scanner& sc, const Signature& sig) {
    char c = sc.peek();
    if (c == '"') return Atom::string_lit(sc.string_lit());
    if (c == '+' || c == '-' || isdigit(static_cast<unsigned char>(c))) {
        int col = sc.col();
        std::string num = sc.number();
        auto canon = canonical_decimal(num);
        if (!canon) throw ParseError(sc.line(), col, "bad numeric literal '" + num + "'");
        return Atom::num_lit(*canon);
    }
    std::string word = sc.peek_ident();
    if (word == "int" || word == "float" || word == "struct")
        return Atom::type_lit(parse_ctype(sc, false));
    if (word == "void") throw ParseError(sc.line(), sc.col(), "void is not an atom");
    int col = sc.col();
    std::string name = sc.ident();
    if (!sig.find_param(name)) throw ParseError(sc.line(), col, "undeclared parameter " + name);
    return Atom::param(name);
}

}  // namespace

FunctionSpec parse_spec(const std::string& text) {
    std::vector<Line> lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty spec");

    FunctionSpec spec;
    Scanner header(lines[0]);
    if (!header.accept_word("function"))
        throw ParseError(header.line(), header.col(), "expected 'function'");
    spec.signature.name = header.ident();
    header.expect('(');
    if (!header.accept(')')) {
        for (;;) {
            Param p;
            p.name = header.ident();
            if (p.name == "int" || p.name == "float" || p.name == "void" || p.name == "struct")
                throw ParseError(header.line(), header.col(),
                                 "parameter may not be named '" + p.name + "'");
            if (spec.signature.find_param(p.name))
                throw ParseError(header.line(), header.col(), "duplicate parameter " + p.name);
            header.expect(':');
            p.ctype = parse_ctype(header, false);
            p.position = static_cast<int>(spec.signature.params.size());
            spec.signature.params.push_back(std::move(p));
            if (header.accept(')')) break;
            header.expect(',');
        }
    }
    header.expect('-');
    header.expect('>');
    spec.signature.return_type = parse_ctype(header, true);
    if (!header.at_end())
        throw ParseError(header.line(), header.col(), "trailing tokens after signature");

    size_t li = 1;
    if (li < lines.size()) {
        Scanner sc(lines[li]);
        if (!sc.accept_word("relations"))
            throw ParseError(sc.line(), sc.col(), "expected 'relations:'");
        sc.expect(':');
        if (!sc.at_end()) throw ParseError(sc.line(), sc.col(), "trailing tokens");
        ++li;
        for (; li < lines.size(); ++li) {
            if (!lines[li].indented)
                throw ParseError(lines[li].number, 1, "relation tuples must be indented");
            Scanner tsc(lines[li]);
            std::string rname = tsc.ident();
            tsc.expect('(');
            std::vector<Atom> tuple;
            if (!tsc.accept(')')) {
                for (;;) {
                    tuple.push_back(parse_atom(tsc, spec.signature));
                    if (tsc.accept(')')) break;
                    tsc.expect(',');
                }
            }
            if (!tsc.at_end()) throw ParseError(tsc.line(), tsc.col(), "trailing tokens");
            if (tuple.empty())
                throw ParseError(lines[li].number, 1, "relation tuple must have arity >= 1");
            Relation& rel = spec.relations[rname];
            if (rel.name.empty()) rel.name = rname;
            if (!rel.tuples.empty() && rel.tuples.front().size() != tuple.size())
                throw ParseError(lines[li].number, 1,
                                 "relation '" + rname + "' tuple arity mismatch");
            rel.tuples.push_back(std::move(tuple));
        }
    }

    // Canonical tuple order, deduplicated.
    for (auto& [name, rel] : spec.relations) {
        std::sort(rel.tuples.begin(), rel.tuples.end(),
                  [](const std::vector<Atom>& a, const std::vector<Atom>& b) {
                      return std::lexicographical_compare(
                          a.begin(), a.end(), b.begin(), b.end(),
                          [](const Atom& x, const Atom& y) { return x < y; });
                  });
        rel.tuples.erase(std::unique(rel.tuples.begin(), rel.tuples.end()), rel.tuples.end());
    }
    return spec;
}

}  // namespace synth
