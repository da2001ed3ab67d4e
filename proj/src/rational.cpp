#include "ped/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace ped {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string exp_text(s.substr(e + 1));
        if (exp_text.empty()) throw std::invalid_argument("bad number: " + std::string(text));
        std::size_t used = 0;
        exponent = std::stol(exp_text, &used);
        if (used != exp_text.size()) throw std::invalid_argument("bad number: " + std::string(text));
        s = s.substr(0, e);
    }
    std::string digits;
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("bad number: " + std::string(text));
    if (!int_part.empty() && !all_digits(int_part)) throw std::invalid_argument("bad number: " + std::string(text));
    if (!frac_part.empty() && !all_digits(frac_part)) throw std::invalid_argument("bad number: " + std::string(text));
    digits.append(int_part);
    digits.append(frac_part);
    exponent -= static_cast<long>(frac_part.size());

    mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
    Rational value(mantissa);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
        value /= Rational(scale);
    } else {
        value *= Rational(scale);
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        std::string_view num_digits = num;
        if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
            num_digits.remove_prefix(1);
        }
        if (!all_digits(num_digits) || !all_digits(den)) {
            throw std::invalid_argument("bad rational: " + std::string(text));
        }
        mpz_class n(std::string(num_digits), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        if (!num.empty() && num.front() == '-') n = -n;
        Rational r(n, d);
        r.canonicalize();
        return r;
    }
    return parse_decimal(text);
}

std::string format_rational(const Rational& value) {
    Rational r = value;
    r.canonicalize();
    return r.get_str(10);
}

std::string format_float(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

Rational best_rational_at_most(
    const std::function<bool(const mpz_class&, const mpz_class&)>& at_most,
    long max_denominator) {
    if (!at_most(0, 1)) throw std::invalid_argument("target must be nonnegative");
    const mpz_class limit(max_denominator);

    // Stern-Brocot descent with batched steps. `lo` stays <= x, `hi` > x.
    mpz_class lo_p = 0, lo_q = 1, hi_p = 1, hi_q = 0;

    // Largest t >= 0 such that ok(t) holds, where ok is monotone (true then false).
    auto largest_step = [&](auto ok) {
        mpz_class good = 0, step = 1;
        while (ok(good + step)) {
            good += step;
            step *= 2;
        }
        while (step > 1) {
            step /= 2;
            if (ok(good + step)) good += step;
        }
        return good;
    };

    for (;;) {
        mpz_class t = largest_step([&](const mpz_class& k) {
            mpz_class q = lo_q + k * hi_q;
            if (q > limit) return false;
            if (hi_q == 0 && k > limit * 4 + 16) return false;
            return at_most(lo_p + k * hi_p, q);
        });
        lo_p += t * hi_p;
        lo_q += t * hi_q;
        mpz_class s = largest_step([&](const mpz_class& k) {
            mpz_class q = hi_q + k * lo_q;
            if (q > limit) return false;
            return !at_most(hi_p + k * lo_p, q);
        });
        hi_p += s * lo_p;
        hi_q += s * lo_q;
        if (t == 0 && s == 0) break;
    }
    Rational r(lo_p, lo_q);
    r.canonicalize();
    return r;
}

}  // namespace ped
