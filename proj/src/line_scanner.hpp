#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "synth/spec_parser.hpp"

namespace synth::detail {

struct Line {
    int number = 0;
    bool indented = false;
    std::string text;  // comment stripped, trimmed
};

inline std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string raw = text.substr(pos, end - pos);
        ++number;
        if (size_t hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        size_t first = raw.find_first_not_of(" \t\r");
        if (first != std::string::npos) {
            size_t last = raw.find_last_not_of(" \t\r");
            out.push_back({number, first > 0, raw.substr(first, last - first + 1)});
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

// Token scanner over one logical line.
class Scanner {
public:
    explicit Scanner(const Line& line) : line_(line.number), text_(line.text) {}

    int line() const { return line_; }
    int col() const { return static_cast<int>(pos_) + 1; }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(line_, col(), std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) throw ParseError(line_, col(), "expected identifier");
        return text_.substr(start, pos_ - start);
    }

    // Peeks the next identifier without consuming; empty when none.
    std::string peek_ident() {
        Scanner probe = *this;
        try {
            return probe.ident();
        } catch (const ParseError&) {
            return {};
        }
    }

    bool accept_word(const std::string& word) {
        skip_ws();
        if (text_.compare(pos_, word.size(), word) != 0) return false;
        size_t after = pos_ + word.size();
        if (after < text_.size() &&
            (isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
            return false;
        pos_ = after;
        return true;
    }

    std::string number() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        while (pos_ < text_.size() &&
               (isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::string string_lit() {
        expect('"');
        size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
        if (pos_ >= text_.size()) throw ParseError(line_, col(), "unterminated string literal");
        std::string s = text_.substr(start, pos_ - start);
        ++pos_;
        return s;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    int line_;
    std::string text_;
    size_t pos_ = 0;
};

}  // namespace synth::detail
