#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdspec/errors.hpp"
#include "fdspec/rational.hpp"

namespace fdspec {

/// Equidistant grid spacing.
struct GridSpec {
    double h = 1.0;

    explicit GridSpec(double spacing) : h(spacing) {
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw InvalidParameter("grid spacing must be positive and finite");
    }
};

enum class StencilKind { CentralFirst, CentralSecond, HalfPointFirst, OneSidedFirst, OneSidedNth };

inline constexpr StencilKind all_stencil_kinds[] = {
    StencilKind::CentralFirst, StencilKind::CentralSecond, StencilKind::HalfPointFirst,
    StencilKind::OneSidedFirst, StencilKind::OneSidedNth};

inline std::string_view to_string(StencilKind kind) {
    switch (kind) {
    case StencilKind::CentralFirst: return "central-first";
    case StencilKind::CentralSecond: return "central-second";
    case StencilKind::HalfPointFirst: return "half-point";
    case StencilKind::OneSidedFirst: return "one-sided-first";
    case StencilKind::OneSidedNth: return "one-sided-nth";
    }
    return "?";
}

inline std::optional<StencilKind> parse_stencil_kind(std::string_view name) {
    for (auto k : all_stencil_kinds)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

struct StencilNode {
    int offset;
    Rational weight;

    friend bool operator==(const StencilNode&, const StencilNode&) = default;
};

/// A derivative rule  f^(d)(0) ~ prefactor / h^h_power * sum_m weight_m * f_m.
///
/// Only nonzero weights are stored; absent offsets have weight zero.
/// Offsets are strictly increasing.
class Stencil {
public:
    Stencil(StencilKind kind, unsigned n, unsigned derivative_order, unsigned h_power,
            Rational prefactor, std::vector<StencilNode> nodes)
        : kind_(kind), n_(n), derivative_order_(derivative_order), h_power_(h_power),
          prefactor_(std::move(prefactor)), nodes_(std::move(nodes)) {
        if (n_ == 0) throw InvalidParameter("stencil family parameter n must be >= 1");
        if (derivative_order_ == 0) throw InvalidParameter("derivative order must be >= 1");
        if (nodes_.empty()) throw InvalidParameter("stencil has no nodes");
        for (std::size_t i = 1; i < nodes_.size(); ++i)
            if (nodes_[i - 1].offset >= nodes_[i].offset)
                throw InvalidParameter("stencil offsets must be strictly increasing");
    }

    StencilKind kind() const noexcept { return kind_; }
    unsigned n() const noexcept { return n_; }
    unsigned derivative_order() const noexcept { return derivative_order_; }
    unsigned h_power() const noexcept { return h_power_; }
    const Rational& prefactor() const noexcept { return prefactor_; }
    const std::vector<StencilNode>& nodes() const noexcept { return nodes_; }

    std::vector<int> offsets() const {
        std::vector<int> out;
        out.reserve(nodes_.size());
        for (const auto& node : nodes_) out.push_back(node.offset);
        return out;
    }

    Rational weight_at(int offset) const {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), offset,
                                   [](const StencilNode& node, int o) { return node.offset < o; });
        if (it != nodes_.end() && it->offset == offset) return it->weight;
        return Rational(0);
    }

    int min_offset() const { return nodes_.front().offset; }
    int max_offset() const { return nodes_.back().offset; }

    friend bool operator==(const Stencil&, const Stencil&) = default;

private:
    StencilKind kind_;
    unsigned n_;
    unsigned derivative_order_;
    unsigned h_power_;
    Rational prefactor_;
    std::vector<StencilNode> nodes_;
};

/// Highest monomial degree a kind reproduces exactly.
inline unsigned nominal_exactness_degree(StencilKind kind, unsigned n) {
    switch (kind) {
    case StencilKind::CentralFirst: return 2 * n;
    case StencilKind::CentralSecond: return 2 * n + 1;
    case StencilKind::HalfPointFirst: return 2 * n;
    case StencilKind::OneSidedFirst: return n;
    case StencilKind::OneSidedNth: return n;
    }
    return 0;
}

/// Value rational_part * pi^pi_power of an infinite-n weight.
struct LimitWeight {
    unsigned index;
    Rational rational_part;
    int pi_power;

    double value() const {
        double v = rational_part.to_floating<double>();
        return pi_power == -1 ? v / std::numbers::pi : v;
    }
};

namespace detail {

inline void require_positive(unsigned value, const char* what) {
    if (value == 0) throw InvalidParameter(std::string(what) + " must be >= 1");
}

inline Rational sign_power(unsigned exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

/// Gauss-Jordan elimination over the rationals for a small square system.
inline std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw SingularSystem("reduced moment system is singular");
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational inv = a[col][col].reciprocal();
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            const Rational factor = a[row][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    return rhs;
}

} // namespace detail

/// alpha_m^(1)(n), m = 1..n, from the odd-moment system
///   sum_m alpha_m m^(2j+1) = delta_{j0},  j = 0..n-1.
inline std::vector<Rational> central_first_coefficients(unsigned n) {
    detail::require_positive(n, "n");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n, Rational(0));
    rhs[0] = Rational(1);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned m = 1; m <= n; ++m) a[j][m - 1] = pow(Rational(m), 2 * j + 1);
    return detail::solve_square(std::move(a), std::move(rhs));
}

/// alpha_m^(2)(n), m = 1..n, from the even-moment system
///   sum_m alpha_m m^(2j) = delta_{j1},  j = 1..n.
inline std::vector<Rational> central_second_coefficients(unsigned n) {
    detail::require_positive(n, "n");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n, Rational(0));
    rhs[0] = Rational(1);
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned m = 1; m <= n; ++m) a[j - 1][m - 1] = pow(Rational(m), 2 * j);
    return detail::solve_square(std::move(a), std::move(rhs));
}

/// alpha_{2m+1}^(1/2)(n) = 1 / ((2m+1) prod_{k != m} (1 - (2m+1)^2/(2k+1)^2)), m = 0..n-1.
inline std::vector<Rational> half_point_coefficients(unsigned n) {
    detail::require_positive(n, "n");
    std::vector<Rational> out;
    out.reserve(n);
    for (unsigned m = 0; m < n; ++m) {
        const long odd_m = 2L * m + 1;
        mpq_class product(1);
        for (unsigned k = 0; k < n; ++k) {
            if (k == m) continue;
            const long odd_k = 2L * k + 1;
            mpq_class ratio(odd_m * odd_m, odd_k * odd_k);
            ratio.canonicalize();
            product *= 1 - ratio;
        }
        out.push_back(Rational::from_mpq(1 / (odd_m * product)));
    }
    return out;
}

/// Antisymmetric first-derivative rule on nodes -n..-1, 1..n:
///   f'(0) ~ 1/(2h) sum_m alpha_m (f_m - f_-m).
inline Stencil central_first(unsigned n) {
    detail::require_positive(n, "n");
    const auto alpha = central_first_coefficients(n);
    std::vector<StencilNode> nodes;
    for (int m = static_cast<int>(n); m >= 1; --m) nodes.push_back({-m, -alpha[m - 1]});
    for (int m = 1; m <= static_cast<int>(n); ++m) nodes.push_back({m, alpha[m - 1]});
    return Stencil(StencilKind::CentralFirst, n, 1, 1, Rational(BigInt(1), BigInt(2)), std::move(nodes));
}

/// Symmetric second-derivative rule on nodes -n..n:
///   f''(0) ~ 1/h^2 sum_m alpha_m (f_m - 2 f_0 + f_-m).
inline Stencil central_second(unsigned n) {
    detail::require_positive(n, "n");
    const auto alpha = central_second_coefficients(n);
    Rational centre(0);
    for (const auto& a : alpha) centre -= a;
    centre *= Rational(2);
    std::vector<StencilNode> nodes;
    for (int m = static_cast<int>(n); m >= 1; --m) nodes.push_back({-m, alpha[m - 1]});
    nodes.push_back({0, centre});
    for (int m = 1; m <= static_cast<int>(n); ++m) nodes.push_back({m, alpha[m - 1]});
    return Stencil(StencilKind::CentralSecond, n, 2, 2, Rational(1), std::move(nodes));
}

/// Odd-node first-derivative rule on +-1, +-3, ..., +-(2n-1):
///   f'(0) ~ 1/(2h) sum_m alpha_{2m+1} (f_{2m+1} - f_{-2m-1}).
inline Stencil half_point(unsigned n) {
    detail::require_positive(n, "n");
    const auto alpha = half_point_coefficients(n);
    std::vector<StencilNode> nodes;
    for (int m = static_cast<int>(n) - 1; m >= 0; --m) nodes.push_back({-(2 * m + 1), -alpha[m]});
    for (int m = 0; m < static_cast<int>(n); ++m) nodes.push_back({2 * m + 1, alpha[m]});
    return Stencil(StencilKind::HalfPointFirst, n, 1, 1, Rational(BigInt(1), BigInt(2)), std::move(nodes));
}

/// Forward first-derivative rule on nodes 0..n:
///   a_m = (-1)^(m+1) C(n,m) / m,   a_0 = -H_n.
inline Stencil one_sided_first(unsigned n) {
    detail::require_positive(n, "n");
    std::vector<StencilNode> nodes;
    nodes.push_back({0, -harmonic(n)});
    for (unsigned m = 1; m <= n; ++m)
        nodes.push_back({static_cast<int>(m),
                         detail::sign_power(m + 1) * Rational(binomial(n, m), BigInt(m))});
    return Stencil(StencilKind::OneSidedFirst, n, 1, 1, Rational(1), std::move(nodes));
}

/// Forward n-th derivative rule on nodes 0..n: a_m = (-1)^(m+n) C(n,m) / n!, prefactor n!.
inline Stencil one_sided_nth(unsigned n) {
    detail::require_positive(n, "n");
    const BigInt nfact = factorial(n);
    std::vector<StencilNode> nodes;
    for (unsigned m = 0; m <= n; ++m)
        nodes.push_back({static_cast<int>(m), detail::sign_power(m + n) * Rational(binomial(n, m), nfact)});
    return Stencil(StencilKind::OneSidedNth, n, n, n, Rational(nfact), std::move(nodes));
}

inline Stencil make_stencil(StencilKind kind, unsigned n) {
    switch (kind) {
    case StencilKind::CentralFirst: return central_first(n);
    case StencilKind::CentralSecond: return central_second(n);
    case StencilKind::HalfPointFirst: return half_point(n);
    case StencilKind::OneSidedFirst: return one_sided_first(n);
    case StencilKind::OneSidedNth: return one_sided_nth(n);
    }
    throw InvalidParameter("unknown stencil kind");
}

/// a_m^(1)(n) via the product form 1 / (m p_m(n)), p_m(n) = prod_{k != m} (1 - m/k).
inline Rational product_form_one_sided(unsigned m, unsigned n) {
    if (m < 1 || m > n) throw InvalidParameter("product form needs 1 <= m <= n");
    mpq_class p(1);
    for (unsigned k = 1; k <= n; ++k) {
        if (k == m) continue;
        mpq_class ratio(m, k);
        ratio.canonicalize();
        p *= 1 - ratio;
    }
    return Rational::from_mpq(1 / (m * p));
}

/// lim_{n->inf} alpha_m^(1)(n) = (-1)^(m+1) 2/m.
inline LimitWeight central_first_limit(unsigned m) {
    detail::require_positive(m, "m");
    return {m, detail::sign_power(m + 1) * Rational(BigInt(2), BigInt(m)), 0};
}

/// lim_{n->inf} alpha_m^(2)(n) = (-1)^(m+1) 2/m^2.
inline LimitWeight central_second_limit(unsigned m) {
    detail::require_positive(m, "m");
    return {m, detail::sign_power(m + 1) * Rational(BigInt(2), BigInt(m) * m), 0};
}

/// lim_{n->inf} alpha_{2m+1}^(1/2)(n) = (-1)^m 4 / (pi (2m+1)^2); index is 2m+1.
inline LimitWeight half_point_limit(unsigned m) {
    const BigInt odd = 2 * BigInt(m) + 1;
    return {2 * m + 1, detail::sign_power(m) * Rational(BigInt(4), odd * odd), -1};
}

} // namespace fdspec
