#include "qac/spectral.hpp"

#include <cctype>
#include <stdexcept>

namespace qac {

SpectralParam param_pow(const SpectralParam& a, long long k) {
    return SpectralParam(a.zeta * Rat(k), a.qexp * Rat(k));
}

void check_ptilde(const SpectralParam& ptilde) {
    if (!ptilde.zeta.is_zero())
        throw std::invalid_argument("ptilde must have zeta = 0");
    if (!(ptilde.qexp > Rat(0)))
        throw std::invalid_argument("ptilde must have positive q-exponent");
}

std::optional<long long> ptilde_exponent(const SpectralParam& a, const SpectralParam& ptilde) {
    check_ptilde(ptilde);
    if (!a.zeta.is_zero()) return std::nullopt;
    long long k = 0;
    if (!a.qexp.integer_quotient(ptilde.qexp, k)) return std::nullopt;
    return k;
}

std::string render_param(const SpectralParam& a) {
    auto exp_str = [](const Rat& r) {
        return r.is_integer() ? r.str() : "(" + r.str() + ")";
    };
    if (a.zeta.is_zero()) return "q^" + exp_str(a.qexp);
    if (a.zeta == Rat(1, 2) && a.qexp.is_integer() && (a.qexp.num() % 2 != 0))
        return "(-q)^" + a.qexp.str();
    return "zeta(" + a.zeta.str() + ")*q^" + exp_str(a.qexp);
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    bool eat(std::string_view lit) {
        if (s.substr(pos, lit.size()) == lit) { pos += lit.size(); return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parameter '" + std::string(s) + "': " + what +
                                    " at offset " + std::to_string(pos));
    }
    Rat rat() {
        bool paren = eat('(');
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        }
        if (pos == start) fail("expected rational");
        Rat r = Rat::parse(s.substr(start, pos - start));
        if (paren && !eat(')')) fail("expected ')'");
        return r;
    }
};

} // namespace

SpectralParam parse_param(std::string_view text) {
    // strip all whitespace up front; the grammar is whitespace-insensitive
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace((unsigned char)c)) compact.push_back(c);

    Cursor cur{compact};
    SpectralParam out;
    if (cur.eat("(-q)^")) {
        Rat k = cur.rat();
        if (!k.is_integer()) cur.fail("(-q)^ requires an integer exponent");
        out = neg_q_pow(k.num());
    } else if (cur.eat("zeta(")) {
        Rat z = cur.rat();
        if (!cur.eat(')')) cur.fail("expected ')'");
        if (!cur.eat("*q^")) cur.fail("expected '*q^'");
        out = SpectralParam(z, cur.rat());
    } else if (cur.eat("q^")) {
        out = q_pow(cur.rat());
    } else {
        cur.fail("expected '(-q)^', 'q^' or 'zeta('");
    }
    if (cur.pos != cur.s.size()) cur.fail("trailing input");
    return out;
}

} // namespace qac
