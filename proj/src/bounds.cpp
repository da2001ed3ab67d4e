#include "ped/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ped {

namespace {

constexpr double kMargin = 1e-6;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("certificate check failed: " + what);
}

// One more than the largest m with m * consumption strictly below 3/4: the
// point on the upper boundary uses 1/4 of the line, the others share the rest.
long strip_capacity(const Rational& consumption) {
    const Rational budget(3, 4);
    long m = 0;
    while ((m + 1) * consumption < budget) ++m;
    return m + 1;
}

}  // namespace

std::vector<StripSpec> middle_strip_partition() {
    const Rational floor_line(1, 4);
    std::vector<StripSpec> strips;
    Rational upper(3, 4);
    for (int i = 1; i <= 8; ++i) {
        Rational by_consumption = Rational(6, 7) * upper;
        Rational by_lower_stubs = (4 * upper - 1) / 3;
        Rational lower = std::max(by_consumption, by_lower_stubs);
        if (i == 8 || lower < floor_line) lower = floor_line;
        Rational cut = Rational(3, 4) * upper;
        Rational consumption = (lower - cut) / lower;
        strips.push_back({i, lower, upper, consumption, strip_capacity(consumption)});
        upper = lower;
    }
    for (const StripSpec& s : strips) {
        require(s.lower < s.upper, "strip " + std::to_string(s.index) + " is empty");
        if (s.index < 8) {
            require(s.lower >= Rational(6, 7) * s.upper, "strip lower bound 6/7");
            require(s.lower >= (4 * s.upper - 1) / 3, "strip lower bound (4b-1)/3");
        }
    }
    require(strips[6].lower > Rational(1, 4), "seventh strip ends above 1/4");
    return strips;
}

BottomPartition bottom_strip_partition() {
    BottomPartition b;
    b.boundaries = {Rational(1, 4), Rational(1, 3), Rational(4, 9), Rational(5, 9), Rational(2, 3), Rational(3, 4)};
    // At most one medial and one lateral point per cell.
    b.capacities.assign(b.boundaries.size() - 1, 2);
    b.total = 0;
    for (long c : b.capacities) b.total += c;
    for (std::size_t i = 0; i < b.boundaries.size(); ++i) {
        require(b.boundaries[i] + b.boundaries[b.boundaries.size() - 1 - i] == 1, "bottom boundaries symmetric");
    }
    return b;
}

UpperPartition upper_rect_partition(const Rational& t) {
    if (t <= 0 || t > Rational(1, 2)) throw std::invalid_argument("t must lie in (0, 1/2]");
    UpperPartition u;
    u.t = t;
    AffineForm a{Rational(3, 4), Rational(1, 4)};
    u.forms.push_back(a);
    for (int i = 1; i <= 4; ++i) {
        // b_i = (4 a_i - t) / 3
        a = AffineForm{(4 * a.slope - 1) / 3, 4 * a.offset / 3};
        u.forms.push_back(a);
    }
    for (const AffineForm& f : u.forms) u.boundaries.push_back(f.at(t));
    u.boundaries.push_back(1);
    u.capacities = {1, 5, 5, 5, 5};
    u.total = 0;
    for (long c : u.capacities) u.total += c;

    // The last cell [b_4, 1] must also be narrow enough: (4 b_4 - t)/3 >= 1
    // on all of (0, 1/2]; the form decreases in t, so check t = 1/2.
    const AffineForm& last = u.forms.back();
    AffineForm reach{(4 * last.slope - 1) / 3, 4 * last.offset / 3};
    require(last.at(Rational(1, 2)) < 1, "b_4(1/2) < 1");
    require(reach.at(Rational(1, 2)) >= 1, "last upper cell fits");
    for (std::size_t i = 0; i + 1 < u.boundaries.size(); ++i) {
        require(u.boundaries[i] < u.boundaries[i + 1], "upper cells ordered");
    }
    return u;
}

CornerCertificate corner_square_certificate() {
    CornerCertificate c;
    c.growth = std::atan(0.25) / std::atan(3.0 / 16.0);
    c.ratio_base = 1 - Rational(3) / (4 * (1 - Rational(1, 16)));
    c.ratio_diagonal = 1.0 - 3.0 / (4.0 * (1.0 - std::sqrt(2.0) / 16.0));
    c.k_base = std::log(5.0) / std::log(1.3) + 1.0;
    c.k_diagonal = std::log(6.0) / std::log(1.3) + 1.0;
    require(c.growth > 1.3 + kMargin, "angle growth exceeds 1.3");
    require(c.ratio_base == Rational(1, 5), "first-case ratio is 1/5");
    require(c.ratio_diagonal > 1.0 / 6.0 + kMargin, "second-case ratio exceeds 1/6");
    require(c.k_diagonal < 7.9 - kMargin, "k < 7.9");
    require(c.k_base < c.k_diagonal, "first case is the weaker bound");
    // k < 7.9 leaves at most seven nested points; the corner vertex adds one.
    long nested = static_cast<long>(std::ceil(c.k_diagonal)) - 1;
    c.capacity = nested + 1;
    return c;
}

PartitionCertificate certificate(const Rational& t) {
    PartitionCertificate c;
    c.middle = middle_strip_partition();
    c.middle_total = 0;
    for (const StripSpec& s : c.middle) c.middle_total += s.capacity;
    c.bottom = bottom_strip_partition();
    c.upper = upper_rect_partition(t);
    c.corner = corner_square_certificate();
    c.points_total = c.middle_total + c.bottom.total + 2 * c.upper.total + 3 * c.corner.capacity;
    c.upper_bound = 2 * c.points_total - 2;
    return c;
}

long total_upper_bound() {
    return certificate().upper_bound;
}

long one_sided_bound() {
    return 17;
}

long convex_bound() {
    return 22;
}

std::uint64_t erdos_szekeres_threshold() {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 30, 15);
    return b.get_ui();
}

std::string certificate_json(const PartitionCertificate& c) {
    using nlohmann::ordered_json;
    ordered_json j;
    ordered_json strips = ordered_json::array();
    for (const StripSpec& s : c.middle) {
        strips.push_back({{"index", s.index},
                          {"lower", format_rational(s.lower)},
                          {"upper", format_rational(s.upper)},
                          {"consumption", format_rational(s.consumption)},
                          {"capacity", s.capacity}});
    }
    j["middle"] = {{"strips", strips}, {"total", c.middle_total}};
    ordered_json bottom = ordered_json::array();
    for (const Rational& r : c.bottom.boundaries) bottom.push_back(format_rational(r));
    j["bottom"] = {{"boundaries", bottom}, {"capacities", c.bottom.capacities}, {"total", c.bottom.total}};
    ordered_json forms = ordered_json::array();
    for (const AffineForm& f : c.upper.forms) {
        forms.push_back({{"slope", format_rational(f.slope)}, {"offset", format_rational(f.offset)}});
    }
    ordered_json bounds = ordered_json::array();
    for (const Rational& r : c.upper.boundaries) bounds.push_back(format_rational(r));
    j["upper"] = {{"t", format_rational(c.upper.t)},
                  {"forms", forms},
                  {"boundaries", bounds},
                  {"capacities", c.upper.capacities},
                  {"total", c.upper.total}};
    j["corner"] = {{"growth", format_float(c.corner.growth)},
                   {"ratio_base", format_rational(c.corner.ratio_base)},
                   {"ratio_diagonal", format_float(c.corner.ratio_diagonal)},
                   {"k_base", format_float(c.corner.k_base)},
                   {"k_diagonal", format_float(c.corner.k_diagonal)},
                   {"capacity", c.corner.capacity}};
    j["points_total"] = c.points_total;
    j["upper_bound"] = c.upper_bound;
    j["one_sided_bound"] = one_sided_bound();
    j["convex_bound"] = convex_bound();
    j["erdos_szekeres_threshold"] = erdos_szekeres_threshold();
    return j.dump(2) + "\n";
}

std::string certificate_table(const PartitionCertificate& c) {
    std::ostringstream out;
    out << "middle strip\n";
    out << "  i  lower                upper                consumption          capacity\n";
    for (const StripSpec& s : c.middle) {
        char line[160];
        std::snprintf(line, sizeof line, "  %d  %-20s %-20s %-20s %ld\n", s.index, format_rational(s.lower).c_str(),
                      format_rational(s.upper).c_str(), format_rational(s.consumption).c_str(), s.capacity);
        out << line;
    }
    out << "  total " << c.middle_total << "\n";
    out << "bottom rectangle\n  boundaries";
    for (const Rational& r : c.bottom.boundaries) out << ' ' << format_rational(r);
    out << "\n  total " << c.bottom.total << "\n";
    out << "upper rectangles at t = " << format_rational(c.upper.t) << "\n";
    for (std::size_t i = 0; i < c.upper.forms.size(); ++i) {
        const AffineForm& f = c.upper.forms[i];
        out << "  " << (i == 0 ? std::string("a_1") : "b_" + std::to_string(i)) << " = "
            << format_rational(f.slope) << " t + " << format_rational(f.offset) << " = "
            << format_rational(c.upper.boundaries[i]) << "\n";
    }
    out << "  capacities";
    for (long cap : c.upper.capacities) out << ' ' << cap;
    out << "\n  total " << c.upper.total << " per side\n";
    out << "corner squares\n";
    out << "  growth " << format_float(c.corner.growth) << "\n";
    out << "  ratio " << format_rational(c.corner.ratio_base) << " / " << format_float(c.corner.ratio_diagonal) << "\n";
    out << "  k < " << format_float(c.corner.k_diagonal) << "\n";
    out << "  capacity " << c.corner.capacity << " each\n";
    out << "points " << c.points_total << "\n";
    out << "bound " << c.upper_bound << "\n";
    return out.str();
}

}  // namespace ped
