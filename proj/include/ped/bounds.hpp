#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ped/rational.hpp"

namespace ped {

/// One horizontal strip S_i of the middle strip, between y = lower and
/// y = upper. Each point besides the one on the upper boundary consumes
/// at least `consumption` of the line y = 3/4 * upper.
struct StripSpec {
    int index;
    Rational lower;
    Rational upper;
    Rational consumption;
    long capacity;
};

std::vector<StripSpec> middle_strip_partition();

struct BottomPartition {
    std::vector<Rational> boundaries;  ///< cell i spans [boundaries[i], boundaries[i+1]]
    std::vector<long> capacities;
    long total;
};

BottomPartition bottom_strip_partition();

/// slope * t + offset
struct AffineForm {
    Rational slope;
    Rational offset;

    Rational at(const Rational& t) const { return slope * t + offset; }
    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

struct UpperPartition {
    Rational t;
    std::vector<AffineForm> forms;     ///< a_1, b_1, ..., b_4; the last cell ends at 1
    std::vector<Rational> boundaries;  ///< the forms evaluated at t, then 1
    std::vector<long> capacities;
    long total;
};

/// Requires 0 < t <= 1/2; throws std::invalid_argument otherwise.
UpperPartition upper_rect_partition(const Rational& t);

struct CornerCertificate {
    double growth;          ///< atan(1/4) / atan(3/16)
    Rational ratio_base;    ///< 1 - 3 / (4 (1 - 1/16)), first case
    double ratio_diagonal;  ///< 1 - 3 / (4 (1 - sqrt(2)/16)), second case
    double k_base;          ///< log 5 / log 1.3 + 1
    double k_diagonal;      ///< log 6 / log 1.3 + 1
    long capacity;
};

/// Throws std::logic_error if any inequality fails by less than a 1e-6 margin.
CornerCertificate corner_square_certificate();

struct PartitionCertificate {
    std::vector<StripSpec> middle;
    long middle_total;
    BottomPartition bottom;
    UpperPartition upper;
    CornerCertificate corner;
    long points_total;  ///< points of one side, 121
    long upper_bound;   ///< 240
};

/// Full certificate with the upper rectangles evaluated at t. Every
/// constraint is rechecked; throws std::logic_error on a violation.
PartitionCertificate certificate(const Rational& t = Rational(1, 2));

long total_upper_bound();
long one_sided_bound();
long convex_bound();
std::uint64_t erdos_szekeres_threshold();

std::string certificate_json(const PartitionCertificate& c);
std::string certificate_table(const PartitionCertificate& c);

}  // namespace ped
