// Copyright 2026 The ermodel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ermodel/dsl.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

namespace ermodel {

std::string ParseError::render() const {
    std::ostringstream out;
    out << span.line << ":" << span.column << ": expected " << expected << ", found " << found;
    return out.str();
}

namespace {

enum class TokenKind { Ident, Integer, LBrace, RBrace, LParen, RParen, Comma, End };

struct Token {
    TokenKind kind;
    std::string text;
    SourceSpan span;
};

// Thrown inside the parser, converted to a Parsed error at the API boundary.
struct ParseFailure {
    ParseError error;
};

[[noreturn]] void fail(const Token& at, std::string expected) {
    std::string found = at.text.empty() ? "end of input" : "'" + at.text + "'";
    throw ParseFailure{ParseError{at.span, std::move(expected), std::move(found)}};
}

class Lexer {
public:
    explicit Lexer(std::string_view source) : source_(source) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_trivia();
            if (pos_ >= source_.size()) break;
            tokens.push_back(next_token());
        }
        // The end-of-input token sits on the last real position so error
        // spans always stay inside the source text.
        SourceSpan end{line_, column_ > 1 ? column_ - 1 : 1, 0};
        tokens.push_back({TokenKind::End, "", end});
        return tokens;
    }

private:
    void skip_trivia() {
        while (pos_ < source_.size()) {
            const char c = source_[pos_];
            if (c == '#') {
                while (pos_ < source_.size() && source_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token next_token() {
        const SourceSpan start{line_, column_, 1};
        const char c = source_[pos_];
        switch (c) {
            case '{': advance(); return {TokenKind::LBrace, "{", start};
            case '}': advance(); return {TokenKind::RBrace, "}", start};
            case '(': advance(); return {TokenKind::LParen, "(", start};
            case ')': advance(); return {TokenKind::RParen, ")", start};
            case ',': advance(); return {TokenKind::Comma, ",", start};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_integer(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident(start);
        Token bad{TokenKind::End, std::string(1, c), start};
        fail(bad, "a token");
    }

    Token lex_integer(SourceSpan start) {
        std::string text;
        while (pos_ < source_.size() && std::isdigit(static_cast<unsigned char>(source_[pos_]))) {
            text.push_back(source_[pos_]);
            advance();
        }
        start.length = text.size();
        return {TokenKind::Integer, std::move(text), start};
    }

    Token lex_ident(SourceSpan start) {
        std::string text;
        while (pos_ < source_.size()) {
            const auto uc = static_cast<unsigned char>(source_[pos_]);
            if (!std::isalnum(uc) && uc != '_') break;
            text.push_back(source_[pos_]);
            advance();
        }
        start.length = text.size();
        return {TokenKind::Ident, std::move(text), start};
    }

    void advance() {
        if (source_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view source_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ERModel parse() {
        ERModel model;
        while (peek().kind != TokenKind::End) {
            if (at_keyword("entity")) {
                model.entities.push_back(parse_entity());
            } else if (at_keyword("relationship")) {
                model.relationships.push_back(parse_relationship());
            } else {
                fail(peek(), "\"entity\" or \"relationship\"");
            }
        }
        return model;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    const Token& take() { return tokens_[pos_++]; }

    bool at_keyword(std::string_view word) const {
        return peek().kind == TokenKind::Ident && peek().text == word;
    }

    void expect_keyword(std::string_view word) {
        if (!at_keyword(word)) fail(peek(), "\"" + std::string(word) + "\"");
        take();
    }

    std::string expect_ident(std::string_view what) {
        if (peek().kind != TokenKind::Ident) fail(peek(), std::string(what));
        return take().text;
    }

    void expect(TokenKind kind, std::string_view what) {
        if (peek().kind != kind) fail(peek(), std::string(what));
        take();
    }

    EntityType parse_entity() {
        expect_keyword("entity");
        EntityType entity;
        entity.name = expect_ident("entity name");
        expect(TokenKind::LBrace, "'{'");
        expect_keyword("key");
        entity.key_attr = expect_ident("key attribute name");
        // The first attribute is the mandatory one; an entity without it
        // is a syntax error, not just a validation problem.
        expect_keyword("attr");
        entity.mandatory_attr = expect_ident("attribute name");
        while (at_keyword("attr")) {
            take();
            entity.secondary_attrs.push_back(expect_ident("attribute name"));
        }
        expect(TokenKind::RBrace, "\"attr\" or '}'");
        return entity;
    }

    RelationshipType parse_relationship() {
        expect_keyword("relationship");
        RelationshipType rel;
        rel.name = expect_ident("relationship name");
        expect_keyword("between");
        rel.left_entity = expect_ident("entity name");
        rel.left_constraint = parse_minmax();
        expect_keyword("and");
        rel.right_entity = expect_ident("entity name");
        rel.right_constraint = parse_minmax();
        if (peek().kind == TokenKind::LBrace) {
            take();
            while (at_keyword("attr")) {
                take();
                rel.attrs.push_back(expect_ident("attribute name"));
            }
            expect(TokenKind::RBrace, "\"attr\" or '}'");
        }
        return rel;
    }

    MinMaxPair parse_minmax() {
        expect(TokenKind::LParen, "'('");
        MinMaxPair pair;
        pair.min = parse_integer("integer minimum");
        expect(TokenKind::Comma, "','");
        if (at_keyword("N")) {
            take();
            pair.max = std::nullopt;
        } else {
            pair.max = parse_integer("integer maximum or \"N\"");
        }
        expect(TokenKind::RParen, "')'");
        return pair;
    }

    std::uint32_t parse_integer(std::string_view what) {
        if (peek().kind != TokenKind::Integer) fail(peek(), std::string(what));
        const Token& token = take();
        std::uint64_t value = 0;
        for (const char c : token.text) {
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) {
                fail(token, "an integer small enough for a constraint bound");
            }
        }
        return static_cast<std::uint32_t>(value);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

void print_minmax(std::ostringstream& out, const MinMaxPair& pair) {
    out << "(" << pair.min << ",";
    if (pair.max.has_value()) {
        out << *pair.max;
    } else {
        out << "N";
    }
    out << ")";
}

}  // namespace

Parsed<ERModel> parse_model(std::string_view source) {
    try {
        Parser parser(Lexer(source).run());
        return parser.parse();
    } catch (const ParseFailure& failure) {
        return failure.error;
    }
}

std::string print_model(const ERModel& model) {
    std::ostringstream out;
    bool first = true;
    for (const auto& entity : model.entities) {
        if (!first) out << "\n";
        first = false;
        out << "entity " << entity.name << " {\n";
        out << "  key " << entity.key_attr << "\n";
        out << "  attr " << entity.mandatory_attr << "\n";
        for (const auto& attr : entity.secondary_attrs) {
            out << "  attr " << attr << "\n";
        }
        out << "}\n";
    }
    for (const auto& rel : model.relationships) {
        if (!first) out << "\n";
        first = false;
        out << "relationship " << rel.name << " between " << rel.left_entity << " ";
        print_minmax(out, rel.left_constraint);
        out << " and " << rel.right_entity << " ";
        print_minmax(out, rel.right_constraint);
        if (!rel.attrs.empty()) {
            out << " {\n";
            for (const auto& attr : rel.attrs) {
                out << "  attr " << attr << "\n";
            }
            out << "}";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace ermodel
