#include "qrpw/laurent.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qrpw {

Rational rational_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("rational_parse: empty input");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational_parse: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("rational_parse: ") + e.what());
    }
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Rational LaurentPoly::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            int e = ea + eb;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) {
                Rational c = ca * cb;
                if (c != 0) r.coeffs_[e] = c;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
    if (k == 0) throw std::domain_error("substitute_power: exponent must be nonzero");
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[k * e] = c;
    return r;
}

LaurentPoly LaurentPoly::inverse() const {
    if (!is_monomial()) throw std::domain_error("LaurentPoly::inverse: not a monomial, not a unit");
    const auto& [e, c] = *coeffs_.begin();
    return monomial(Rational(1) / c, -e);
}

double LaurentPoly::eval(double q0) const {
    double acc = 0.0;
    for (const auto& [e, c] : coeffs_) acc += rational_to_double(c) * std::pow(q0, e);
    return acc;
}

namespace {

void append_term(std::string& out, const Rational& c, int e, bool first) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
        if (c < 0) out += "-";
    } else {
        out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
        out += rational_to_string(a);
        return;
    }
    if (a != 1) {
        out += rational_to_string(a);
        out += "*";
    }
    out += "q";
    if (e != 1) {
        out += "^";
        out += std::to_string(e);
    }
}

}  // namespace

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        append_term(out, c, e, first);
        first = false;
    }
    return out;
}

namespace {

struct LpLexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("lp_parse: " + what + " at position " + std::to_string(i) +
                                    " in \"" + s + "\"");
    }
    long long integer() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > (1LL << 60)) fail("integer too large");
            ++i;
        }
        return neg ? -v : v;
    }
    Rational rational() {
        long long num = integer();
        if (accept('/')) {
            long long den = integer();
            return rational_from(num, den);
        }
        return Rational(num);
    }
    // q or q^e; returns exponent.
    int q_power() {
        if (!accept('q')) fail("expected q");
        if (accept('^')) return static_cast<int>(integer());
        return 1;
    }
};

}  // namespace

LaurentPoly lp_parse(const std::string& text) {
    LpLexer lx{text};
    LaurentPoly out;
    bool first = true;
    while (!lx.eof()) {
        Rational sign(1);
        if (lx.accept('-')) {
            sign = -1;
        } else if (lx.accept('+')) {
            if (first) lx.fail("unexpected leading +");
        } else if (!first) {
            lx.fail("expected + or - between terms");
        }
        first = false;
        Rational c(1);
        int e = 0;
        char next = lx.peek();
        if (next == 'q') {
            e = lx.q_power();
        } else if (std::isdigit(static_cast<unsigned char>(next))) {
            c = lx.rational();
            if (lx.accept('*'))
                e = lx.q_power();
            else if (lx.peek() == 'q')
                e = lx.q_power();
        } else {
            lx.fail("expected coefficient or q");
        }
        out += LaurentPoly::monomial(sign * c, e);
    }
    return out;
}

}  // namespace qrpw
