#include "conewall/expr.hpp"

#include <cctype>

namespace cw {

namespace {

class Parser {
public:
    Parser(const std::string& s, const CohRing& R, std::vector<std::string>* warnings, int k_max)
        : s_(s), R_(R), warnings_(warnings), k_max_(k_max) {}

    Descendent expr() {
        Descendent out;
        bool neg = eat('-');
        out = term();
        if (neg) out = out.scaled(-1);
        while (true) {
            if (eat('+'))
                out += term();
            else if (eat('-'))
                out -= term();
            else
                return out;
        }
    }

    CohClass cls() {
        bool neg = eat('-');
        CohClass out = cterm();
        if (neg) out = R_.scale(out, -1);
        while (true) {
            if (eat('+'))
                out = R_.add(out, cterm());
            else if (eat('-'))
                out = R_.add(out, R_.scale(cterm(), -1));
            else
                return out;
        }
    }

    void finish() {
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, p_); }

    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }

    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_digit() {
        skip();
        return p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]));
    }

    long integer() {
        if (!at_digit()) fail("expected a number");
        size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (p_ - start > 9) {
            p_ = start;
            fail("number too long");
        }
        return std::stol(s_.substr(start, p_ - start));
    }

    Rat rational() {
        long n = integer();
        if (!eat('/')) return Rat(n);
        size_t at = p_;
        long d = integer();
        if (d == 0) {
            p_ = at;
            fail("zero denominator");
        }
        return ratio(n, d);
    }

    std::string ident() {
        skip();
        size_t start = p_;
        while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
        return s_.substr(start, p_ - start);
    }

    Descendent term() {
        Descendent out = factor();
        while (eat('*')) out = out * factor();
        return out;
    }

    Descendent factor() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            Descendent e = expr();
            expect(')');
            return e;
        }
        if (at_digit()) return Descendent::constant(rational());
        size_t at = p_;
        if (s_.compare(p_, 2, "ch") != 0) fail("expected ch<k>(...), a number or '('");
        p_ += 2;
        if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_]))) fail("expected the index k after ch");
        long k = integer();
        if (k > k_max_) {
            p_ = at;
            fail("ch" + std::to_string(k) + " is above the largest supported index " + std::to_string(k_max_));
        }
        expect('(');
        size_t cls_at = p_;
        CohClass g = cls();
        expect(')');
        Descendent d = Descendent::ch(static_cast<int>(k), g);
        if (d.is_zero() && warnings_)
            warnings_->push_back("class at byte " + std::to_string(cls_at) + " is zero in the ring; ch" +
                                 std::to_string(k) + " of it is 0");
        return d;
    }

    CohClass cterm() {
        CohClass out = cfactor();
        while (eat('*')) out = R_.mul(out, cfactor());
        return out;
    }

    CohClass cfactor() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end of input");
        CohClass base;
        if (eat('(')) {
            base = cls();
            expect(')');
        } else if (at_digit()) {
            base = R_.scale(R_.unit(), rational());
        } else {
            size_t at = p_;
            std::string name = ident();
            if (name.empty()) fail("expected a class name");
            if (auto i = R_.find(name))
                base = R_.element(*i);
            else if (name == "H")
                base = R_.hyperplane();
            else if (name == "pt")
                base = R_.pt();
            else {
                p_ = at;
                fail("unknown class '" + name + "'");
            }
        }
        if (eat('^')) base = R_.power(base, static_cast<int>(integer()));
        return base;
    }

    const std::string& s_;
    const CohRing& R_;
    std::vector<std::string>* warnings_;
    int k_max_;
    size_t p_ = 0;
};

}  // namespace

Descendent parse_expr(const std::string& src, const CohRing& R, std::vector<std::string>* warnings, int k_max) {
    Parser p(src, R, warnings, k_max);
    Descendent d = p.expr();
    p.finish();
    return d;
}

CohClass parse_class(const std::string& src, const CohRing& R) {
    Parser p(src, R, nullptr, default_k_max);
    CohClass c = p.cls();
    p.finish();
    return c;
}

}  // namespace cw
