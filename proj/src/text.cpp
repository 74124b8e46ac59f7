#include "aba/text.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace aba {
namespace {

struct Token {
    enum Kind { Id, Dot, Comma, Colon, Eq, Lt, Tilde, Arrow, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::End, "", line, col};
        char c = src_[pos_];
        switch (c) {
            case '.': bump(); return {Token::Dot, ".", line, col};
            case ',': bump(); return {Token::Comma, ",", line, col};
            case ':': bump(); return {Token::Colon, ":", line, col};
            case '=': bump(); return {Token::Eq, "=", line, col};
            case '~': bump(); return {Token::Tilde, "~", line, col};
            case '<':
                bump();
                if (pos_ < src_.size() && src_[pos_] == '-') {
                    bump();
                    return {Token::Arrow, "<-", line, col};
                }
                return {Token::Lt, "<", line, col};
            default: break;
        }
        std::string id;
        while (pos_ < src_.size() && !is_delim(src_[pos_])) {
            id.push_back(src_[pos_]);
            bump();
        }
        if (id.empty())
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        return {Token::Id, id, line, col};
    }

private:
    static bool is_delim(char c) {
        return c == '.' || c == ',' || c == ':' || c == '=' || c == '~' || c == '<' ||
               c == '#' || c == ' ' || c == '\t' || c == '\r' || c == '\n';
    }

    void bump() {
        if (src_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) { advance(); }

    Framework run() {
        while (tok_.kind != Token::End) statement();
        finish();
        return normalize_preorder(std::move(f_));
    }

private:
    void advance() { tok_ = lex_.next(); }

    Token expect(Token::Kind k, const char* what) {
        if (tok_.kind != k)
            throw ParseError(std::string("expected ") + what + ", got '" + tok_.text + "'",
                             tok_.line, tok_.col);
        Token t = tok_;
        advance();
        return t;
    }

    void statement() {
        Token kw = expect(Token::Id, "a statement keyword");
        if (kw.text == "assumption") parse_assumption();
        else if (kw.text == "contrary") parse_contrary();
        else if (kw.text == "rule") parse_rule();
        else if (kw.text == "value") parse_value();
        else if (kw.text == "order") parse_order();
        else
            throw ParseError("unknown statement '" + kw.text + "'", kw.line, kw.col);
    }

    SentenceId assumption_ref() {
        Token t = expect(Token::Id, "an assumption name");
        auto s = f_.find_sentence(t.text);
        if (!s || !f_.is_assumption(*s))
            throw ParseError("'" + t.text + "' is not a declared assumption", t.line, t.col);
        return *s;
    }

    void parse_assumption() {
        Token t = expect(Token::Id, "an assumption name");
        auto prior = f_.find_sentence(t.text);
        if (prior && f_.is_assumption(*prior))
            throw ParseError("duplicate assumption '" + t.text + "'", t.line, t.col);
        f_.mark_assumption(f_.intern(t.text));
        expect(Token::Dot, "'.'");
    }

    void parse_contrary() {
        SentenceId a = assumption_ref();
        expect(Token::Colon, "':'");
        f_.add_contrary(a, f_.intern(expect(Token::Id, "a sentence name").text));
        while (tok_.kind == Token::Comma) {
            advance();
            f_.add_contrary(a, f_.intern(expect(Token::Id, "a sentence name").text));
        }
        expect(Token::Dot, "'.'");
    }

    void parse_rule() {
        SentenceId head = f_.intern(expect(Token::Id, "a sentence name").text);
        expect(Token::Arrow, "'<-'");
        std::vector<SentenceId> body;
        if (tok_.kind == Token::Id) {
            body.push_back(f_.intern(tok_.text));
            advance();
            while (tok_.kind == Token::Comma) {
                advance();
                body.push_back(f_.intern(expect(Token::Id, "a sentence name").text));
            }
        }
        expect(Token::Dot, "'.'");
        f_.add_rule(std::move(body), head);
    }

    void parse_value() {
        SentenceId a = assumption_ref();
        expect(Token::Eq, "'='");
        Token v = expect(Token::Id, "a value name");
        int i = f_.asm_index(a);
        std::vector<ValueId> vals = f_.valuation(i);
        ValueId vid = f_.add_value(v.text);
        if (std::find(vals.begin(), vals.end(), vid) == vals.end()) vals.push_back(vid);
        f_.set_valuation(a, std::move(vals));
        expect(Token::Dot, "'.'");
    }

    void parse_order() {
        ValueId lo = f_.add_value(expect(Token::Id, "a value name").text);
        if (tok_.kind == Token::Lt) {
            advance();
            f_.declare_leq(lo, f_.add_value(expect(Token::Id, "a value name").text));
        } else if (tok_.kind == Token::Tilde) {
            advance();
            ValueId hi = f_.add_value(expect(Token::Id, "a value name").text);
            f_.declare_leq(lo, hi);
            f_.declare_leq(hi, lo);
        } else {
            throw ParseError("expected '<' or '~', got '" + tok_.text + "'", tok_.line,
                             tok_.col);
        }
        expect(Token::Dot, "'.'");
    }

    void finish() {
        if (f_.num_assumptions() == 0)
            throw ParseError("assumptions must be nonempty", tok_.line, tok_.col);
        // Assumptions with no declared value share one fresh default.
        bool need_default = false;
        for (int i = 0; i < f_.num_assumptions(); ++i)
            if (f_.valuation(i).empty()) need_default = true;
        if (need_default) {
            std::string dv = "_v";
            while (f_.find_value(dv)) dv += "_";
            ValueId v = f_.add_value(dv);
            for (int i = 0; i < f_.num_assumptions(); ++i)
                if (f_.valuation(i).empty())
                    f_.set_valuation(f_.asm_sentence(i), {v});
        }
    }

    Lexer lex_;
    Token tok_{Token::End, "", 0, 0};
    Framework f_;
};

}  // namespace

Framework parse_framework(const std::string& text) { return Parser(text).run(); }

Framework parse_framework_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_framework(buf.str());
}

std::string serialize(const Framework& f) {
    std::ostringstream out;
    for (int i = 0; i < f.num_assumptions(); ++i)
        out << "assumption " << f.sentence(f.asm_sentence(i)).name << ".\n";
    for (int i = 0; i < f.num_assumptions(); ++i) {
        if (f.contraries(i).empty()) continue;
        out << "contrary " << f.sentence(f.asm_sentence(i)).name << " :";
        for (size_t k = 0; k < f.contraries(i).size(); ++k)
            out << (k ? ", " : " ") << f.sentence(f.contraries(i)[k]).name;
        out << ".\n";
    }
    for (const Rule& r : f.rules()) {
        out << "rule " << f.sentence(r.head).name << " <-";
        for (size_t k = 0; k < r.body.size(); ++k)
            out << (k ? ", " : " ") << f.sentence(r.body[k]).name;
        out << " .\n";
    }
    for (int i = 0; i < f.num_assumptions(); ++i)
        for (ValueId v : f.valuation(i))
            out << "value " << f.sentence(f.asm_sentence(i)).name << " = "
                << f.value_name(v) << ".\n";
    // Declared pairs only; normalization restores the closure on re-parse.
    std::set<std::pair<std::string, std::string>> pairs;
    for (auto [lo, hi] : f.declared_leq())
        pairs.emplace(f.value_name(lo), f.value_name(hi));
    for (const auto& [lo, hi] : pairs)
        out << "order " << lo << " < " << hi << ".\n";
    return out.str();
}

std::vector<char> parse_rule_subset(const Framework& f, const std::string& text) {
    Lexer lex(text);
    std::vector<char> in(f.num_rules(), 0);
    auto expect = [&](Token::Kind k, const char* what) {
        Token t = lex.next();
        if (t.kind != k)
            throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'",
                             t.line, t.col);
        return t;
    };
    auto resolve = [&](const Token& t) {
        auto s = f.find_sentence(t.text);
        if (!s)
            throw ParseError("'" + t.text + "' is not a sentence of the framework",
                             t.line, t.col);
        return *s;
    };
    for (Token t = lex.next(); t.kind != Token::End; t = lex.next()) {
        if (t.kind != Token::Id || t.text != "rule")
            throw ParseError("expected a rule statement", t.line, t.col);
        Token ht = expect(Token::Id, "a sentence name");
        SentenceId head = resolve(ht);
        expect(Token::Arrow, "'<-'");
        std::vector<SentenceId> body;
        Token n = lex.next();
        if (n.kind == Token::Id) {
            body.push_back(resolve(n));
            n = lex.next();
            while (n.kind == Token::Comma) {
                body.push_back(resolve(expect(Token::Id, "a sentence name")));
                n = lex.next();
            }
        }
        if (n.kind != Token::Dot)
            throw ParseError("expected '.', got '" + n.text + "'", n.line, n.col);
        std::sort(body.begin(), body.end());
        bool found = false;
        for (int r = 0; r < f.num_rules(); ++r) {
            if (f.rules()[r].head != head) continue;
            std::vector<SentenceId> rb = f.rules()[r].body;
            std::sort(rb.begin(), rb.end());
            if (rb == body) { in[r] = 1; found = true; }
        }
        if (!found)
            throw ParseError("rule is not part of the framework", ht.line, ht.col);
    }
    return in;
}

bool structurally_equal(const Framework& a, const Framework& b) {
    auto names = [](const Framework& f, const std::vector<SentenceId>& ids) {
        std::set<std::string> out;
        for (SentenceId s : ids) out.insert(f.sentence(s).name);
        return out;
    };
    if (names(a, a.assumptions()) != names(b, b.assumptions())) return false;

    auto rules = [](const Framework& f) {
        std::set<std::pair<std::string, std::vector<std::string>>> out;
        for (const Rule& r : f.rules()) {
            std::vector<std::string> body;
            for (SentenceId s : r.body) body.push_back(f.sentence(s).name);
            out.emplace(f.sentence(r.head).name, std::move(body));
        }
        return out;
    };
    if (rules(a) != rules(b)) return false;

    auto per_asm = [&](const Framework& f) {
        std::map<std::string, std::pair<std::set<std::string>, std::set<std::string>>> out;
        for (int i = 0; i < f.num_assumptions(); ++i) {
            auto& entry = out[f.sentence(f.asm_sentence(i)).name];
            for (SentenceId c : f.contraries(i)) entry.first.insert(f.sentence(c).name);
            for (ValueId v : f.valuation(i)) entry.second.insert(f.value_name(v));
        }
        return out;
    };
    if (per_asm(a) != per_asm(b)) return false;

    // Compare normalized <= restricted to values actually used by assumptions
    // (a stray unused value name should not break equality of behaviour).
    auto leq_rel = [](const Framework& f) {
        std::set<std::pair<std::string, std::string>> out;
        std::set<ValueId> used;
        for (int i = 0; i < f.num_assumptions(); ++i)
            for (ValueId v : f.valuation(i)) used.insert(v);
        for (ValueId x : used)
            for (ValueId y : used)
                if (f.leq(x, y)) out.emplace(f.value_name(x), f.value_name(y));
        return out;
    };
    return leq_rel(a) == leq_rel(b);
}

}  // namespace aba
