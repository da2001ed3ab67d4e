#include "ped/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ped {

namespace {

long floor_of(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

void require_delta(const Rational& delta) {
    if (delta <= 0 || delta >= Rational(1, 2)) throw std::invalid_argument("delta must lie in (0, 1/2)");
}

std::size_t exact_sqrt(std::size_t k, const char* what) {
    auto s = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(k))));
    if (s * s != k) throw std::invalid_argument(std::string(what) + ": k must be a perfect square");
    return s;
}

Rational power(const Rational& base, std::size_t exp) {
    Rational r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// True when some vertex of `a` is collinear with two vertices of `b`.
bool collinear_across(const std::vector<Point>& a, const std::vector<Point>& b) {
    for (const Point& p : a) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                if (orientation(p, b[i], b[j]) == 0) return true;
            }
        }
    }
    return false;
}

}  // namespace

long knn_columns(const Rational& delta) {
    require_delta(delta);
    const Rational keep = 1 - delta;
    const Rational half(1, 2);
    long columns = 0;
    for (Rational p = keep; p > half; p *= keep) ++columns;
    return columns;
}

long knn_capacity(const Rational& delta) {
    return floor_of(1 / delta) * knn_columns(delta);
}

long knn_capacity(double delta) {
    if (!(delta > 0 && delta < 0.5)) throw std::invalid_argument("delta must lie in (0, 1/2)");
    double inv = 1.0 / delta;
    long rows = static_cast<long>(std::floor(inv + kFloatTolerance * std::max(1.0, inv)));
    double r = std::log(0.5) / std::log(1.0 - delta);
    double nearest = std::round(r);
    long columns = std::abs(r - nearest) <= kFloatTolerance * std::max(1.0, r) ? static_cast<long>(nearest) - 1
                                                                              : static_cast<long>(std::floor(r));
    return rows * columns;
}

Layout layout_knn(std::size_t n_left, std::size_t n_right, const Rational& delta) {
    const long capacity = knn_capacity(delta);
    if (static_cast<long>(std::max(n_left, n_right)) > capacity) {
        throw CapacityError("K_{n,n} layout holds at most " + std::to_string(capacity) + " vertices per side at delta " +
                            format_rational(delta));
    }
    const long rows = floor_of(1 / delta);
    const long columns = knn_columns(delta);
    const Rational keep = 1 - delta;
    const Rational eps_default = (power(keep, columns) - Rational(1, 2)) / 2;
    const bool boundary = rows * delta == 1;
    auto eps_for_row = [&](long row) { return boundary && row % 2 == 0 ? Rational(0) : eps_default; };

    // Column-major filling: slot s sits in column s / rows, row s % rows.
    auto place = [&](std::size_t count, bool right, const Rational& sigma) {
        std::vector<Point> pts;
        for (std::size_t s = 0; s < count; ++s) {
            long col = static_cast<long>(s) / rows;
            long row = static_cast<long>(s) % rows;
            Rational reach = power(keep, static_cast<std::size_t>(col));
            Rational eps = eps_for_row(row);
            if (right) {
                pts.push_back({reach - eps, Rational(row) + sigma});
            } else {
                pts.push_back({1 - reach + eps, Rational(row)});
            }
        }
        return pts;
    };

    const std::size_t n = std::max(n_left, n_right);
    Rational sigma(1, static_cast<long>(2 * n * n + 1));
    std::vector<Point> left = place(n_left, false, 0);
    std::vector<Point> right = place(n_right, true, sigma);
    while (collinear_across(left, right) || collinear_across(right, left)) {
        sigma /= 2;
        right = place(n_right, true, sigma);
    }

    std::vector<Point> vertices = left;
    vertices.insert(vertices.end(), right.begin(), right.end());
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n_left; ++u) {
        for (std::size_t v = 0; v < n_right; ++v) edges.push_back({u, n_left + v});
    }
    return {GeometricGraph(std::move(vertices), std::move(edges)), delta};
}

long kkn_capacity(const Rational& delta) {
    require_delta(delta);
    const Rational keep = 1 - delta;
    long k = 0;
    for (Rational p = keep; p > delta; p *= keep) ++k;
    return k;
}

Layout layout_k2kn(std::size_t k, std::size_t n, const Rational& delta) {
    const long capacity = kkn_capacity(delta);
    if (k == 0 || n == 0) throw std::invalid_argument("K_{2k,n} layout needs k, n >= 1");
    if (static_cast<long>(k) > capacity) {
        throw CapacityError("K_{2k,n} layout supports k <= " + std::to_string(capacity) + " at delta " +
                            format_rational(delta));
    }
    const Rational grow = 1 / (1 - delta);
    std::vector<Point> vertices;
    Rational y = 1;
    for (std::size_t i = 0; i < k; ++i, y *= grow) {
        vertices.push_back({0, y});
        vertices.push_back({0, -y});
    }
    Rational x = 1;
    for (std::size_t i = 0; i < n; ++i, x *= grow) vertices.push_back({x, 0});
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < 2 * k; ++u) {
        for (std::size_t v = 0; v < n; ++v) edges.push_back({u, 2 * k + v});
    }
    return {GeometricGraph(std::move(vertices), std::move(edges)), delta};
}

Rational bandwidth_delta(std::size_t k) {
    const mpz_class kk(static_cast<unsigned long>(k));
    return best_rational_at_most([&](const mpz_class& p, const mpz_class& q) { return 8 * kk * p * p <= q * q; },
                                 1000000);
}

Rational circulant_delta(std::size_t k) {
    const mpz_class kk(static_cast<unsigned long>(k));
    return best_rational_at_most([&](const mpz_class& p, const mpz_class& q) { return 36 * kk * p * p <= q * q; },
                                 1000000);
}

Layout layout_bandwidth(std::size_t n, const std::vector<Edge>& edges, std::size_t k) {
    if (k == 0) throw std::invalid_argument("bandwidth layout: k must be positive");
    const std::size_t s = exact_sqrt(k, "bandwidth layout");
    for (const Edge& e : edges) {
        std::size_t gap = e.u > e.v ? e.u - e.v : e.v - e.u;
        if (gap > k) {
            throw std::invalid_argument("bandwidth layout: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " spans more than k = " + std::to_string(k));
        }
    }
    // Padding to a full last column only adds unused grid slots.
    const std::size_t columns = (n + s - 1) / s;
    auto grid = [&](std::size_t i) {
        std::size_t c = i / s;
        std::size_t w = i % s;
        std::size_t r = c % 2 == 0 ? w : s - 1 - w;
        return std::pair<long, long>(static_cast<long>(c), static_cast<long>(r));
    };

    const Rational delta = bandwidth_delta(k);
    auto build = [&](const Rational& eta) {
        std::vector<Point> vertices;
        for (std::size_t i = 0; i < n; ++i) {
            auto [c, r] = grid(i);
            vertices.push_back({Rational(c) + eta * r * r, Rational(r) - eta * c * c});
        }
        return GeometricGraph(std::move(vertices), edges);
    };

    GeometricGraph g = build(0);
    if (validate_ped(g, StubAssignment::uniform(g, delta), ArithmeticMode::Exact).valid()) return {g, delta};

    // Several neighbours of a vertex can be collinear on the grid, so their
    // stubs overlap. Bend rows and columns slightly; the displacement stays
    // far below the slack between edge lengths and sqrt(2k).
    const long extent = static_cast<long>(std::max<std::size_t>(columns, s));
    const long root_bound = static_cast<long>(std::sqrt(2.0 * k)) + 2;
    Rational eta(1, 16 * root_bound * extent * extent);
    for (int attempt = 0; attempt < 24; ++attempt, eta /= 2) {
        g = build(eta);
        if (validate_ped(g, StubAssignment::uniform(g, delta), ArithmeticMode::Exact).valid()) return {g, delta};
    }
    throw std::runtime_error("bandwidth layout: no valid perturbation found");
}

std::vector<Edge> circulant_edges(std::size_t n, std::size_t k) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            std::size_t d = std::min(v - u, n - (v - u));
            if (d >= 1 && d <= k) edges.push_back({u, v});
        }
    }
    return edges;
}

Layout layout_circulant(std::size_t n, std::size_t k) {
    if (k == 0 || k >= n) throw std::invalid_argument("circulant layout: need 1 <= k < n");
    const std::size_t s = exact_sqrt(k, "circulant layout");
    if (n % s != 0) throw std::invalid_argument("circulant layout: n / sqrt(k) must be an integer");
    const std::size_t rays = n / s;
    if (rays % 2 != 0) throw std::invalid_argument("circulant layout: n / sqrt(k) must be even");
    if (rays < 3) throw std::invalid_argument("circulant layout: n / sqrt(k) must be at least 3");

    const double pi = std::numbers::pi;
    const double inner = 1.0 / (2.0 * std::sin(pi / static_cast<double>(rays)));
    const Rational delta = circulant_delta(k);
    const std::vector<Edge> edges = circulant_edges(n, k);

    auto build = [&](double twist) {
        std::vector<Point> vertices;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t a = i / s;
            std::size_t w = i % s;
            std::size_t j = a % 2 == 0 ? w : s - 1 - w;
            double radius = inner + static_cast<double>(j);
            double angle = 2.0 * pi * static_cast<double>(a) / static_cast<double>(rays) +
                           twist * static_cast<double>(j * j);
            vertices.push_back({Rational(radius * std::cos(angle)), Rational(radius * std::sin(angle))});
        }
        return GeometricGraph(std::move(vertices), edges);
    };

    GeometricGraph g = build(0.0);
    if (validate_ped(g, StubAssignment::uniform(g, delta), ArithmeticMode::Float).valid()) return {g, delta};

    // Three or more vertices on one ray are collinear; twist the outer ones.
    double twist = 0.01 / static_cast<double>(k);
    for (int attempt = 0; attempt < 24; ++attempt, twist /= 2) {
        g = build(twist);
        if (validate_ped(g, StubAssignment::uniform(g, delta), ArithmeticMode::Float).valid()) return {g, delta};
    }
    throw std::runtime_error("circulant layout: no valid perturbation found");
}

double kn_delta_bound(std::size_t n) {
    if (n == 0) throw std::invalid_argument("kn_delta_bound: n must be positive");
    return 1.0 / std::sqrt(4.0 * static_cast<double>(n) / std::numbers::pi);
}

long kn_capacity(double delta) {
    if (!(delta > 0)) throw std::invalid_argument("kn_capacity: delta must be positive");
    double r = std::numbers::pi / (4.0 * delta * delta);
    return static_cast<long>(std::floor(r + kFloatTolerance * std::max(1.0, r)));
}

}  // namespace ped
