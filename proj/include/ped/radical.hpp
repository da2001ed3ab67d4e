#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ped/rational.hpp"

namespace ped {

/// Exact value of a finite sum  sum_i c_i * sqrt(m_i)  with rational c_i and
/// positive integer radicands m_i. Terms whose radicands differ by a square
/// factor are merged, so the stored radicands are pairwise independent over
/// the rationals and the sum is zero iff no terms remain.
///
/// Edge lengths are square roots of rational squared lengths, so every ink
/// total of a drawing with rational coordinates is a RadicalSum.
class RadicalSum {
public:
    RadicalSum() = default;

    /// coefficient * sqrt(square)
    static RadicalSum scaled_root(const Rational& coefficient, const Rational& square);

    RadicalSum& operator+=(const RadicalSum& other);
    RadicalSum& operator-=(const RadicalSum& other);
    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }

    /// -1, 0, +1. Exact; refines precision until the sign is certain.
    int sign() const;
    bool is_zero() const { return terms_.empty(); }
    double to_double() const;

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return (a - b).is_zero(); }
    friend std::strong_ordering operator<=>(const RadicalSum& a, const RadicalSum& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t term_count() const { return terms_.size(); }

    /// Terms by increasing radicand, e.g. "3 + 1/2*sqrt(5)"; "0" when empty.
    std::string to_string() const;

private:
    struct Term {
        mpz_class radicand;
        Rational coefficient;
    };
    void add_term(const mpz_class& radicand, const Rational& coefficient);

    std::vector<Term> terms_;
};

}  // namespace ped
