#include "qrpw/parser.hpp"

#include <cctype>
#include <stdexcept>

namespace qrpw {

namespace {

struct ElParser {
    const Presentation& pres;
    const std::string& s;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        ws();
        return i >= s.size();
    }
    bool accept(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error: " + what + " at position " + std::to_string(i) +
                                    " in \"" + s + "\"");
    }

    long long integer() {
        ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected integer");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > (1LL << 40)) fail("integer too large");
            ++i;
        }
        return neg ? -v : v;
    }

    Rational rational() {
        long long num = integer();
        size_t save = i;
        if (accept('/')) {
            ws();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                return rational_from(num, integer());
            i = save;
        }
        return Rational(num);
    }

    // 'q' already peeked; returns the full q-power as a Laurent monomial.
    LaurentPoly q_power() {
        if (!accept('q')) fail("expected q");
        int e = 1;
        if (accept('^')) e = static_cast<int>(integer());
        return LaurentPoly::q_power(e);
    }

    /// Longest generator-name match at the cursor; -1 without consuming on miss.
    int try_generator() {
        ws();
        int best = -1;
        size_t best_len = 0;
        for (size_t g = 0; g < pres.gens.size(); ++g) {
            const std::string& n = pres.gens[g].name;
            if (n.size() > best_len && s.compare(i, n.size(), n) == 0) {
                best = static_cast<int>(g);
                best_len = n.size();
            }
        }
        if (best >= 0) i += best_len;
        return best;
    }

    // Identifier-ish run for error messages only.
    std::string bad_token() {
        ws();
        size_t j = i;
        while (j < s.size()) {
            char c = s[j];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '*' ||
                (j == i + 1 && (c == '-' || c == '+')))
                ++j;
            else
                break;
        }
        return s.substr(i, std::max<size_t>(1, j - i));
    }
};

}  // namespace

Element parse_element(const PresPtr& p, const std::string& text) {
    ElParser ps{*p, text, 0};
    Element acc = p->zero();
    bool first = true;
    while (!ps.eof()) {
        bool negative = false;
        if (ps.accept('-')) {
            negative = true;
        } else if (ps.accept('+')) {
            if (first) ps.fail("unexpected leading +");
        } else if (!first) {
            ps.fail("expected + or - between terms");
        }
        first = false;

        LaurentPoly c = LaurentPoly::one();
        bool have_coeff = false;
        char next = ps.peek();
        if (next == '(') {
            ps.accept('(');
            size_t close = text.find(')', ps.i);
            if (close == std::string::npos) ps.fail("unbalanced parenthesis");
            c = lp_parse(text.substr(ps.i, close - ps.i));
            ps.i = close + 1;
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(next))) {
            c = LaurentPoly(ps.rational());
            have_coeff = true;
            if (ps.accept('*')) {
                c *= ps.q_power();
            } else if (ps.peek() == 'q') {
                c *= ps.q_power();
            }
        } else if (next == 'q') {
            c = ps.q_power();
            have_coeff = true;
        }

        Word w;
        bool have_word = false;
        while (true) {
            int g = ps.try_generator();
            if (g < 0) break;
            have_word = true;
            long long e = 1;
            if (ps.accept('^')) e = ps.integer();
            if (e < 0 && !p->gens[static_cast<size_t>(g)].central)
                ps.fail("negative exponent on non-central generator '" +
                        p->gens[static_cast<size_t>(g)].name + "'");
            w.append(g, e);
        }
        if (!have_coeff && !have_word) {
            std::string tok = ps.bad_token();
            ps.fail(std::isalpha(static_cast<unsigned char>(tok[0]))
                        ? "unknown generator '" + tok + "'"
                        : "expected term");
        }
        acc += p->el({{w, negative ? -c : c}});
    }
    if (first) throw std::invalid_argument("parse error: empty expression");
    return acc;
}

}  // namespace qrpw
