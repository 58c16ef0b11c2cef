#include "supergeo/parse/expression.hpp"

#include "supergeo/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace supergeo {

namespace {

enum class Tok { End, Plus, Minus, Star, Caret, LParen, RParen, Comma, Number, Ident };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        current_.offset = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            current_.text.clear();
            return;
        }
        char c = text_[pos_];
        auto punct = [&](Tok kind) {
            current_.kind = kind;
            current_.text = std::string(1, c);
            ++pos_;
        };
        switch (c) {
            case '+': punct(Tok::Plus); return;
            case '-': punct(Tok::Minus); return;
            case '*': punct(Tok::Star); return;
            case '^': punct(Tok::Caret); return;
            case '(': punct(Tok::LParen); return;
            case ')': punct(Tok::RParen); return;
            case ',': punct(Tok::Comma); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_.kind = Tok::Number;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_.kind = Tok::Ident;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

// Splits `s` into a sequence of names drawn from `parts`, longest match
// first with backtracking.  Appends the chosen indices to `out`.
bool decomposeSuffix(const std::string& s, std::size_t pos,
                     const std::vector<std::pair<std::string, int>>& parts,
                     std::vector<int>& out) {
    if (pos == s.size()) return true;
    for (const auto& [name, var] : parts) {
        if (s.compare(pos, name.size(), name) != 0) continue;
        out.push_back(var);
        if (decomposeSuffix(s, pos + name.size(), parts, out)) return true;
        out.pop_back();
    }
    return false;
}

class Parser {
public:
    Parser(const std::string& text, const Chart& chart) : lex_(text), chart_(chart) {}

    SuperScalar run() {
        SuperScalar v = parseExpr();
        if (lex_.peek().kind != Tok::End)
            throw ParseError(lex_.peek().offset, "unexpected trailing input");
        return v;
    }

private:
    SuperScalar parseExpr() {
        SuperScalar v = parseTerm();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Tok op = lex_.take().kind;
            SuperScalar rhs = parseTerm();
            v = op == Tok::Plus ? v + rhs : v - rhs;
        }
        return v;
    }

    SuperScalar parseTerm() {
        SuperScalar v = parseFactor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            v = v * parseFactor();
        }
        return v;
    }

    SuperScalar parseFactor() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        SuperScalar v = parseAtom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Tok::Number)
                throw ParseError(e.offset, "exponent must be a nonnegative integer");
            if (e.text.size() > 6)
                throw ParseError(e.offset, "exponent is unreasonably large");
            v = v.pow(std::stoi(e.text));
        }
        return negate ? -v : v;
    }

    SuperScalar parseAtom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number:
                return SuperScalar::constant(&chart_, Rational(Integer(t.text)));
            case Tok::LParen: {
                SuperScalar v = parseExpr();
                Token close = lex_.take();
                if (close.kind != Tok::RParen)
                    throw ParseError(close.offset, "expected ')'");
                return v;
            }
            case Tok::Ident: {
                if (lex_.peek().kind == Tok::LParen) return parseCall(t);
                return resolveIdent(t.text, t.offset);
            }
            default:
                throw ParseError(t.offset, "expected a number, name, or '('");
        }
    }

    SuperScalar parseCall(const Token& ident) {
        lex_.take();  // '('
        std::vector<std::string> args;
        if (lex_.peek().kind != Tok::RParen) {
            while (true) {
                Token a = lex_.take();
                if (a.kind != Tok::Ident)
                    throw ParseError(a.offset, "expected a coordinate name");
                args.push_back(a.text);
                if (lex_.peek().kind == Tok::Comma) {
                    lex_.take();
                    continue;
                }
                break;
            }
        }
        Token close = lex_.take();
        if (close.kind != Tok::RParen) throw ParseError(close.offset, "expected ')'");

        const VariableTable& vars = chart_.vars();
        auto var = vars.find(ident.text);
        if (!var || vars.kindOf(*var) != VariableTable::Kind::Jet)
            throw ParseError(ident.offset,
                             "'" + ident.text + "' is not a declared function symbol");
        const std::vector<int>& depends = vars.symbolDepends(*var);
        bool match = depends.size() == args.size();
        for (std::size_t i = 0; match && i < args.size(); ++i)
            match = vars.nameOf(depends[i]) == args[i];
        if (!match)
            throw ParseError(ident.offset, "'" + ident.text +
                                               "' must be applied to its declared "
                                               "dependency list");
        return SuperScalar::variable(&chart_, *var);
    }

    SuperScalar resolveIdent(const std::string& name, std::size_t offset) {
        if (auto odd = chart_.findOdd(name)) return SuperScalar::oddGenerator(&chart_, *odd);
        const VariableTable& vars = chart_.vars();
        if (auto var = vars.find(name)) return SuperScalar::variable(&chart_, *var);

        // Derived symbol name: declared symbol, '_', coordinate names.
        for (std::size_t cut = 1; cut + 1 < name.size(); ++cut) {
            if (name[cut] != '_') continue;
            auto base = vars.find(name.substr(0, cut));
            if (!base || vars.kindOf(*base) != VariableTable::Kind::Jet) continue;
            std::vector<std::pair<std::string, int>> coords;
            for (int i = 0; i < chart_.evenCount(); ++i)
                coords.emplace_back(chart_.evenName(i), chart_.evenVariable(i));
            std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) {
                return a.first.size() != b.first.size() ? a.first.size() > b.first.size()
                                                        : a.first < b.first;
            });
            std::vector<int> dirs;
            if (!decomposeSuffix(name, cut + 1, coords, dirs)) continue;
            EvenScalar acc = EvenScalar::variable(*base);
            for (int d : dirs) acc = acc.derivative(d, vars);
            return SuperScalar::fromEven(&chart_, acc);
        }
        throw ParseError(offset, "unknown identifier '" + name + "'");
    }

    Lexer lex_;
    const Chart& chart_;
};

}  // namespace

SuperScalar parseExpression(const std::string& text, const Chart& chart) {
    return Parser(text, chart).run();
}

}  // namespace supergeo
