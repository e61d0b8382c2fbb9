#include "rectplan/rational.hpp"

#include <cctype>

#include "rectplan/error.hpp"

namespace rectplan {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s.remove_prefix(1);
    }
    if (s.empty()) fail("MalformedInput", "empty number in '" + std::string(text) + "'");

    Rational q;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            fail("MalformedInput", "bad fraction '" + std::string(text) + "'");
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) fail("MalformedInput", "zero denominator in '" + std::string(text) + "'");
        q = Rational(n, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp))
            fail("MalformedInput", "bad decimal '" + std::string(text) + "'");
        mpz_class n(std::string(ip.empty() ? "0" : std::string(ip)) + std::string(fp), 10);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
        q = Rational(n, d);
    } else {
        if (!all_digits(s)) fail("MalformedInput", "bad integer '" + std::string(text) + "'");
        q = Rational(mpz_class(std::string(s), 10));
    }
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

mpz_class floor_to_int(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

mpz_class ceil_to_int(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace rectplan
