#include "ped/radical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <mpfr.h>

namespace ped {

namespace {

// Divides out squares of small primes; makes class merging cheaper and
// keeps radicands short. Not required for correctness.
void strip_small_squares(mpz_class& radicand, Rational& coefficient) {
    static constexpr unsigned long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (unsigned long p : kPrimes) {
        const unsigned long sq = p * p;
        while (mpz_divisible_ui_p(radicand.get_mpz_t(), sq)) {
            mpz_divexact_ui(radicand.get_mpz_t(), radicand.get_mpz_t(), sq);
            coefficient *= p;
        }
    }
    if (mpz_perfect_square_p(radicand.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
        coefficient *= root;
        radicand = 1;
    }
}

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace

RadicalSum RadicalSum::scaled_root(const Rational& coefficient, const Rational& square) {
    if (square < 0) throw std::invalid_argument("negative radicand");
    RadicalSum out;
    if (square == 0 || coefficient == 0) return out;
    // sqrt(p/q) = sqrt(p q) / q
    mpz_class radicand = square.get_num() * square.get_den();
    Rational c = coefficient / Rational(square.get_den());
    strip_small_squares(radicand, c);
    out.add_term(radicand, c);
    return out;
}

void RadicalSum::add_term(const mpz_class& radicand, const Rational& coefficient) {
    if (coefficient == 0) return;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        Term& t = terms_[i];
        if (t.radicand == radicand) {
            t.coefficient += coefficient;
        } else {
            mpz_class product = t.radicand * radicand;
            if (!mpz_perfect_square_p(product.get_mpz_t())) continue;
            // sqrt(m) = sqrt(m r) / r * sqrt(r)
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), product.get_mpz_t());
            t.coefficient += coefficient * Rational(root, t.radicand);
        }
        t.coefficient.canonicalize();
        if (t.coefficient == 0) terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(i));
        return;
    }
    terms_.push_back({radicand, coefficient});
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
    for (const Term& t : other.terms_) add_term(t.radicand, t.coefficient);
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) {
    for (const Term& t : other.terms_) add_term(t.radicand, -t.coefficient);
    return *this;
}

double RadicalSum::to_double() const {
    double total = 0.0;
    for (const Term& t : terms_) total += t.coefficient.get_d() * std::sqrt(t.radicand.get_d());
    return total;
}

int RadicalSum::sign() const {
    if (terms_.empty()) return 0;
    // The radicands are pairwise independent, so a non-empty sum is nonzero
    // and interval refinement terminates.
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        MpfrValue lo_sum(prec), hi_sum(prec), root_lo(prec), root_hi(prec), c_lo(prec), c_hi(prec),
            tmp(prec);
        mpfr_set_zero(lo_sum.get(), 1);
        mpfr_set_zero(hi_sum.get(), 1);
        for (const Term& t : terms_) {
            mpfr_set_z(root_lo.get(), t.radicand.get_mpz_t(), MPFR_RNDD);
            mpfr_sqrt(root_lo.get(), root_lo.get(), MPFR_RNDD);
            mpfr_set_z(root_hi.get(), t.radicand.get_mpz_t(), MPFR_RNDU);
            mpfr_sqrt(root_hi.get(), root_hi.get(), MPFR_RNDU);
            mpfr_set_q(c_lo.get(), t.coefficient.get_mpq_t(), MPFR_RNDD);
            mpfr_set_q(c_hi.get(), t.coefficient.get_mpq_t(), MPFR_RNDU);
            if (t.coefficient > 0) {
                mpfr_mul(tmp.get(), c_lo.get(), root_lo.get(), MPFR_RNDD);
                mpfr_add(lo_sum.get(), lo_sum.get(), tmp.get(), MPFR_RNDD);
                mpfr_mul(tmp.get(), c_hi.get(), root_hi.get(), MPFR_RNDU);
                mpfr_add(hi_sum.get(), hi_sum.get(), tmp.get(), MPFR_RNDU);
            } else {
                mpfr_mul(tmp.get(), c_lo.get(), root_hi.get(), MPFR_RNDD);
                mpfr_add(lo_sum.get(), lo_sum.get(), tmp.get(), MPFR_RNDD);
                mpfr_mul(tmp.get(), c_hi.get(), root_lo.get(), MPFR_RNDU);
                mpfr_add(hi_sum.get(), hi_sum.get(), tmp.get(), MPFR_RNDU);
            }
        }
        if (mpfr_sgn(lo_sum.get()) > 0) return 1;
        if (mpfr_sgn(hi_sum.get()) < 0) return -1;
        if (prec > (1 << 20)) throw std::runtime_error("radical sign did not resolve");
    }
}

std::string RadicalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const Term& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) { return a->radicand < b->radicand; });
    std::string out;
    for (const Term* t : order) {
        Rational c = t->coefficient;
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
            c = abs(c);
        }
        if (t->radicand == 1) {
            out += format_rational(c);
        } else {
            if (c != 1) out += format_rational(c) + "*";
            out += "sqrt(" + t->radicand.get_str() + ")";
        }
    }
    return out;
}

}  // namespace ped
