#include "hilb/format.hpp"

#include <cctype>
#include <sstream>

namespace hilb {

std::string to_string(const Mono& m, const Context& ctx) {
    std::ostringstream os;
    bool first = true;
    for (size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!first) os << "*";
        os << ctx->name(static_cast<VarId>(v));
        if (m[v] > 1) os << "^" << m[v];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        bool trivial_mono = mono_is_one(t.mono);
        if (c != 1 || trivial_mono) {
            os << to_string(c);
            if (!trivial_mono) os << "*";
        }
        if (!trivial_mono) os << to_string(t.mono, p.ctx());
        first = false;
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    explicit Lexer(const std::string& text) : s(text) {}
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw parse_error("expected digits at offset " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw parse_error("expected identifier at offset " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
};

} // namespace

Poly parse_poly(const Context& ctx, const std::string& text) {
    Lexer lx(text);
    std::vector<Term> terms;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.eat('+')) {
            sign = 1;
        } else if (lx.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms");
        }
        // a term: factors separated by '*', each a rational literal or var^e
        Rat coeff(sign);
        Mono mono(ctx->size(), 0);
        bool any_factor = false;
        do {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.number();
                if (lx.eat('/')) {
                    std::string den = lx.number();
                    coeff *= parse_rat(num + "/" + den);
                } else {
                    coeff *= parse_rat(num);
                }
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = lx.ident();
                unsigned e = 1;
                if (lx.eat('^')) e = static_cast<unsigned>(std::stoul(lx.number()));
                if (!ctx->has(name))
                    throw parse_error("unknown variable '" + name + "' in polynomial text");
                mono[ctx->var(name)] += e;
            } else {
                throw parse_error(std::string("unexpected character '") + c + "' in term");
            }
            any_factor = true;
        } while (lx.eat('*'));
        if (!any_factor) throw parse_error("empty term");
        terms.push_back({std::move(mono), std::move(coeff)});
        first = false;
    }
    if (first) throw parse_error("empty polynomial text");
    return Poly::from_terms(ctx, std::move(terms));
}

} // namespace hilb
