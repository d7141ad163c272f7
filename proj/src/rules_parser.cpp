#include "synth/rules_parser.hpp"

#include <cctype>
#include <optional>

#include "line_scanner.hpp"

namespace synth {

using detail::Line;
using detail::Scanner;
using detail::split_lines;

namespace {

std::optional<FragmentKind> head_kind_from(const std::string& s) {
    if (s == "loop") return FragmentKind::Loop;
    if (s == "zip_loop") return FragmentKind::ZipLoop;
    if (s == "store") return FragmentKind::Store;
    if (s == "affine_access") return FragmentKind::AffineAccess;
    return std::nullopt;
}

// Constants in rule bodies are type literals, strings, numbers, or bare
// lowercase names matched against spec parameters by name at solve time
// (rule libraries are generic across specs).
Term parse_term(Scanner& sc) {
    char c = sc.peek();
    if (c == '_') {
        sc.expect('_');
        return Term::wildcard();
    }
    if (c == '"') return Term::constant(Atom::string_lit(sc.string_lit()));
    if (c == '+' || c == '-' || isdigit(static_cast<unsigned char>(c))) {
        int col = sc.col();
        std::string num = sc.number();
        auto canon = canonical_decimal(num);
        if (!canon) throw ParseError(sc.line(), col, "bad numeric literal '" + num + "'");
        return Term::constant(Atom::num_lit(*canon));
    }
    std::string word = sc.ident();
    if (isupper(static_cast<unsigned char>(word[0]))) return Term::make_var(word);
    if (word == "int" || word == "float") {
        CType t = word == "int" ? CType::make_int() : CType::make_float();
        while (sc.accept('*')) t = CType::pointer_to(std::move(t));
        return Term::constant(Atom::type_lit(std::move(t)));
    }
    return Term::constant(Atom::param(word));
}

Literal parse_literal(Scanner& sc) {
    Literal lit;
    std::string word = sc.ident();
    if (word == "not") {
        lit.negative = true;
        lit.pred = sc.ident();
    } else {
        lit.pred = word;
    }
    sc.expect('(');
    if (!sc.accept(')')) {
        for (;;) {
            lit.args.push_back(parse_term(sc));
            if (sc.accept(')')) break;
            sc.expect(',');
        }
    }
    return lit;
}

}  // namespace

RuleLibrary parse_rules(const std::string& text) {
    RuleLibrary lib;
    std::vector<Line> lines = split_lines(text);
    size_t li = 0;
    while (li < lines.size()) {
        if (lines[li].indented)
            throw ParseError(lines[li].number, 1, "unexpected indented line outside a rule body");
        Scanner sc(lines[li]);
        int rline = sc.line();
        if (!sc.accept_word("rule")) throw ParseError(rline, sc.col(), "expected 'rule'");
        std::string kind_name = sc.ident();
        auto kind = head_kind_from(kind_name);
        if (!kind) throw ParseError(rline, 1, "unknown fragment head kind " + kind_name);

        Rule rule;
        rule.name = kind_name;
        rule.head.kind = *kind;
        sc.expect('(');
        if (!sc.accept(')')) {
            for (;;) {
                int vcol = sc.col();
                std::string v = sc.ident();
                if (!isupper(static_cast<unsigned char>(v[0])))
                    throw ParseError(sc.line(), vcol, "head arguments must be variables");
                rule.head.vars.push_back(v);
                if (sc.accept(')')) break;
                sc.expect(',');
            }
        }
        if (static_cast<int>(rule.head.vars.size()) != fragment_kind_arity(*kind))
            throw ParseError(rline, 1,
                             kind_name + " head takes " +
                                 std::to_string(fragment_kind_arity(*kind)) + " arguments");
        sc.expect(':');
        if (!sc.at_end()) throw ParseError(sc.line(), sc.col(), "rule body starts on the next line");

        ++li;
        bool saw_body_line = false;
        for (; li < lines.size() && lines[li].indented; ++li) {
            saw_body_line = true;
            Scanner body(lines[li]);
            for (;;) {
                rule.body.push_back(parse_literal(body));
                if (body.at_end()) break;
                body.expect(',');
                if (body.at_end()) break;  // trailing comma continues on the next line
            }
        }
        if (!saw_body_line) throw ParseError(rline, 1, "rule has no body");

        try {
            validate_conjunction(rule.body);
        } catch (const ParseError& e) {
            std::string msg = e.what();
            size_t sep = msg.find(": ");
            throw ParseError(rline, 1, sep == std::string::npos ? msg : msg.substr(sep + 2));
        }
        for (const auto& v : rule.head.vars) {
            bool bound = false;
            for (const auto& lit : rule.body) {
                if (lit.negative) continue;
                for (const auto& t : lit.args)
                    if (t.kind == Term::Kind::Var && t.var == v) bound = true;
            }
            if (!bound) throw ParseError(rline, 1, "unbound head variable " + v);
        }
        lib.rules.push_back(std::move(rule));
    }
    return lib;
}

}  // namespace synth
