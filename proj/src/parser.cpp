#include "qpt/parser.hpp"

#include <cctype>

namespace qpt {

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind = End;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept_op(const char* op) {
        if (tok_.kind == Token::Op && tok_.text == op) {
            advance();
            return true;
        }
        return false;
    }
    void expect_op(const char* op) {
        if (!accept_op(op)) throw ParseError("expected '" + std::string(op) + "' near '" + tok_.text + "'");
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::End, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '.') {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            tok_ = {Token::Number, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = {Token::Ident, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            tok_ = {Token::Op, std::string(1, c)};
            ++pos_;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    Token tok_;
};

// splits names like x12 into (letter prefix, index); index is 1-based
bool split_indexed(const std::string& name, const std::string& prefix, std::size_t& idx) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
    idx = 0;
    for (std::size_t p = prefix.size(); p < name.size(); ++p) {
        if (!std::isdigit(static_cast<unsigned char>(name[p]))) return false;
        idx = idx * 10 + (name[p] - '0');
    }
    return idx > 0;
}

int parse_exponent(Lexer& lex) {
    bool neg = lex.accept_op("-");
    Token t = lex.next();
    if (t.kind != Token::Number || t.text.find('.') != std::string::npos)
        throw ParseError("expected an integer exponent, got '" + t.text + "'");
    int k = 0;
    for (char c : t.text) k = k * 10 + (c - '0');
    return neg ? -k : k;
}

class FieldParser {
  public:
    explicit FieldParser(Lexer& lex) : lex_(lex) {}

    Field expr() {
        Field v = term();
        while (true) {
            if (lex_.accept_op("+"))
                v = v + term();
            else if (lex_.accept_op("-"))
                v = v - term();
            else
                return v;
        }
    }

  private:
    Field term() {
        Field v = factor();
        while (true) {
            if (lex_.accept_op("*"))
                v = v * factor();
            else if (lex_.accept_op("/"))
                v = v / factor();
            else
                return v;
        }
    }

    Field factor() {
        if (lex_.accept_op("-")) return -factor();
        Field v = primary();
        while (lex_.peek().kind == Token::Op && lex_.peek().text == "^") {
            lex_.next();
            v = Field::pow(v, parse_exponent(lex_));
        }
        return v;
    }

    Field primary() {
        Token t = lex_.next();
        if (t.kind == Token::Number) return Field::constant(parse_rational(t.text));
        if (t.kind == Token::Op && t.text == "(") {
            Field v = expr();
            lex_.expect_op(")");
            return v;
        }
        if (t.kind != Token::Ident) throw ParseError("unexpected token '" + t.text + "'");

        if (lex_.peek().kind == Token::Op && lex_.peek().text == "(") {
            lex_.next();
            Field arg = expr();
            lex_.expect_op(")");
            if (t.text == "sqrt") return Field::sqrt(arg);
            if (t.text == "exp") return Field::exp(arg);
            if (t.text == "log") return Field::log(arg);
            if (t.text == "pospart") return Field::pospart(arg);
            if (t.text == "step") return Field::step(arg);
            throw ParseError("unknown function '" + t.text + "'");
        }

        static const char* comps = "txyz";
        std::size_t idx;
        for (int c = 0; c < 4; ++c)
            if (split_indexed(t.text, std::string(1, comps[c]), idx))
                return Field::variable(4 * (idx - 1) + c);
        throw ParseError("unknown name '" + t.text + "'");
    }

    Lexer& lex_;
};

class FormParser {
  public:
    FormParser(Lexer& lex, std::size_t m) : lex_(lex), m_(m) {}

    Form expr() {
        Form v = term();
        while (true) {
            if (lex_.accept_op("+"))
                v = v + term();
            else if (lex_.accept_op("-"))
                v = v - term();
            else
                return v;
        }
    }

  private:
    Form term() {
        Form v = factor();
        while (true) {
            if (lex_.accept_op("*")) {
                v = wedge(v, factor());
            } else if (lex_.accept_op("/")) {
                v = wedge(v, inverted(factor()));
            } else {
                return v;
            }
        }
    }

    Form factor() {
        if (lex_.accept_op("-")) return -factor();
        Form v = primary();
        while (lex_.peek().kind == Token::Op && lex_.peek().text == "^") {
            lex_.next();
            // an integer continues as a power, anything else wedges
            if (lex_.peek().kind == Token::Number ||
                (lex_.peek().kind == Token::Op && lex_.peek().text == "-"))
                v = power(v, parse_exponent(lex_));
            else
                v = wedge(v, primary());
        }
        return v;
    }

    Form primary() {
        Token t = lex_.next();
        if (t.kind == Token::Number)
            return scalar(CPoly(2 * m_, CRational(parse_rational(t.text))));
        if (t.kind == Token::Op && t.text == "(") {
            Form v = expr();
            lex_.expect_op(")");
            return v;
        }
        if (t.kind != Token::Ident) throw ParseError("unexpected token '" + t.text + "'");
        if (t.text == "i") return scalar(CPoly(2 * m_, CRational::i()));

        std::size_t idx;
        if (split_indexed(t.text, "dzb", idx)) return Form::covector(m_, letter(idx, true));
        if (split_indexed(t.text, "dz", idx)) return Form::covector(m_, letter(idx, false));
        if (split_indexed(t.text, "zb", idx)) return scalar(cpoly_zbar(m_, check_index(idx)));
        if (split_indexed(t.text, "z", idx)) return scalar(cpoly_z(m_, check_index(idx)));
        throw ParseError("unknown name '" + t.text + "'");
    }

    Form scalar(CPoly p) { return Form::function(std::move(p)); }

    std::size_t check_index(std::size_t idx) {
        if (idx > m_) throw ParseError("coordinate index out of range for this dimension");
        return idx - 1;
    }

    int letter(std::size_t idx, bool bar) {
        return static_cast<int>(check_index(idx) + (bar ? m_ : 0));
    }

    // division only by constant scalars
    Form inverted(const Form& f) {
        for (const auto& [w, c] : f.terms()) {
            if (!w.empty() || !c.is_constant() || f.terms().size() != 1)
                throw ParseError("division is only defined by nonzero constants");
            CRational v = c.constant_term();
            if (v.is_zero()) throw ParseError("division by zero");
            return scalar(CPoly(2 * m_, CRational(1) / v));
        }
        throw ParseError("division by zero");
    }

    Form power(const Form& f, int k) {
        if (k < 0) return power(inverted(f), -k);
        Form r = scalar(CPoly(2 * m_, CRational(1)));
        for (int it = 0; it < k; ++it) r = wedge(r, f);
        return r;
    }

    Lexer& lex_;
    std::size_t m_;
};

}  // namespace

Field parse_field(const std::string& text) {
    Lexer lex(text);
    FieldParser p(lex);
    Field f = p.expr();
    if (lex.peek().kind != Token::End)
        throw ParseError("trailing input near '" + lex.peek().text + "'");
    return f;
}

Form parse_form(const std::string& text, std::size_t n) {
    Lexer lex(text);
    FormParser p(lex, 2 * n);
    Form f = p.expr();
    if (lex.peek().kind != Token::End)
        throw ParseError("trailing input near '" + lex.peek().text + "'");
    return f;
}

}  // namespace qpt
