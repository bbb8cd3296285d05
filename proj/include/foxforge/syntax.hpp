#pragma once

#include "foxforge/word.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace foxforge {

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

struct Token {
    enum class Kind { Name, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    long long value = 0; // for Int
    int line = 1;
    int column = 1;
};

/// Tokens: names (letter, then letters/digits/underscores), integers
/// (optionally signed, only expected after '^'), and single-char punctuation.
class Lexer {
public:
    explicit Lexer(std::string text) : text_(std::move(text)) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, current_.line, current_.column);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            current_.text.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
                    name += d;
                    bump();
                } else {
                    break;
                }
            }
            current_.kind = Token::Kind::Name;
            current_.text = std::move(name);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            std::string digits;
            if (c == '-') {
                digits += c;
                bump();
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                bump();
            }
            current_.kind = Token::Kind::Int;
            current_.text = digits;
            current_.value = std::stoll(digits);
            return;
        }
        current_.kind = Token::Kind::Punct;
        current_.text = std::string(1, c);
        bump();
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

inline bool is_punct(const Token& t, char c) {
    return t.kind == Token::Kind::Punct && t.text.size() == 1 && t.text[0] == c;
}

/// word := term ("*"? term)*
/// term := name ("^" int)? | "[" word "," word "]" | "(" word ")" ("^" int)?
/// A word ends at ',', ';', ']', ')' or end of input.
class WordParser {
public:
    WordParser(Lexer& lex, const AlphabetPtr& alphabet) : lex_(lex), alphabet_(alphabet) {}

    Word parse_word() {
        Word w = parse_term();
        for (;;) {
            const Token& t = lex_.peek();
            if (is_punct(t, '*')) {
                lex_.next();
                w = w * parse_term();
                continue;
            }
            if (t.kind == Token::Kind::Name || is_punct(t, '[') || is_punct(t, '(')) {
                w = w * parse_term(); // juxtaposition
                continue;
            }
            return w;
        }
    }

private:
    Word parse_term() {
        const Token t = lex_.next();
        if (t.kind == Token::Kind::Name) {
            int gen = alphabet_->index_of(t.text);
            if (gen < 0)
                throw ParseError("unknown generator '" + t.text + "'", t.line, t.column);
            return apply_power(Word::letter(alphabet_, gen));
        }
        if (is_punct(t, '[')) {
            Word a = parse_word();
            expect(',');
            Word b = parse_word();
            expect(']');
            return commutator(a, b);
        }
        if (is_punct(t, '(')) {
            Word w = parse_word();
            expect(')');
            return apply_power(w);
        }
        throw ParseError("expected a generator, '[' or '('", t.line, t.column);
    }

    Word apply_power(const Word& w) {
        if (is_punct(lex_.peek(), '^')) {
            lex_.next();
            const Token t = lex_.next();
            if (t.kind != Token::Kind::Int)
                throw ParseError("expected an integer exponent after '^'", t.line, t.column);
            return w.pow(t.value);
        }
        return w;
    }

    void expect(char c) {
        const Token t = lex_.next();
        if (!is_punct(t, c))
            throw ParseError(std::string("expected '") + c + "'", t.line, t.column);
    }

    Lexer& lex_;
    AlphabetPtr alphabet_;
};

} // namespace detail

/// Parses a single word, e.g. "[x1,x2]*x3^-2". The whole input must be consumed.
inline Word parse_word(const std::string& text, const AlphabetPtr& alphabet) {
    detail::Lexer lex(text);
    detail::WordParser parser(lex, alphabet);
    Word w = parser.parse_word();
    if (lex.peek().kind != detail::Token::Kind::End)
        throw ParseError("unexpected trailing input '" + lex.peek().text + "'", lex.peek().line,
                         lex.peek().column);
    return w;
}

} // namespace foxforge
