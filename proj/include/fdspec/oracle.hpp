#pragma once

// Brute-force cross-checks for the weight families. Everything here goes
// through plain Vandermonde algebra and shares no code path with weights.hpp
// beyond the Stencil/Rational value types.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdspec/errors.hpp"
#include "fdspec/rational.hpp"
#include "fdspec/weights.hpp"

namespace fdspec::oracle {

/// sum_idx a_idx offset_idx^k = delta_{lk}, k = 0..|offsets|-1.
struct MomentSystem {
    std::vector<int> offsets;
    unsigned target_order = 0;

    unsigned degree() const { return offsets.empty() ? 0 : static_cast<unsigned>(offsets.size() - 1); }
};

struct ExactnessReport {
    StencilKind kind;
    unsigned n;
    int max_exact_degree;
    std::optional<unsigned> first_failing_degree;
    std::vector<Rational> residuals;  // indexed by monomial degree
};

struct SeriesSum {
    double value;
    double bound;
};

namespace detail {

using IntMatrix = std::vector<std::vector<BigInt>>;

inline BigInt int_power(long base, unsigned exponent) {
    BigInt r(1);  // 0^0 = 1
    for (unsigned e = 0; e < exponent; ++e) r *= base;
    return r;
}

/// V[k][idx] = offsets[idx]^k.
inline IntMatrix power_matrix(const std::vector<int>& offsets) {
    const std::size_t size = offsets.size();
    IntMatrix v(size, std::vector<BigInt>(size));
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t idx = 0; idx < size; ++idx) v[k][idx] = int_power(offsets[idx], static_cast<unsigned>(k));
    return v;
}

/// In-place Bareiss elimination on the first `cols` columns; extra columns ride along.
/// Returns the determinant of the leading square block (0 when singular).
inline BigInt bareiss(IntMatrix& a, std::size_t cols) {
    const std::size_t rows = a.size();
    BigInt previous(1);
    int sign = 1;
    for (std::size_t k = 0; k < cols; ++k) {
        std::size_t pivot = k;
        while (pivot < rows && a[pivot][k] == 0) ++pivot;
        if (pivot == rows) return BigInt(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < a[i].size(); ++j) {
                BigInt t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    return sign * previous;
}

} // namespace detail

/// Exact solution of the moment system by fraction-free elimination.
inline std::vector<Rational> solve_moment_system(const MomentSystem& sys) {
    const std::size_t size = sys.offsets.size();
    if (size == 0) throw InvalidParameter("moment system needs at least one node");
    if (sys.target_order > sys.degree()) throw InvalidParameter("target order exceeds system degree");

    auto a = detail::power_matrix(sys.offsets);
    for (std::size_t k = 0; k < size; ++k) a[k].push_back(BigInt(k == sys.target_order ? 1 : 0));
    if (detail::bareiss(a, size) == 0) throw SingularSystem("moment system is singular (repeated offsets?)");

    std::vector<Rational> x(size);
    for (std::size_t ii = size; ii-- > 0;) {
        Rational acc(a[ii][size]);
        for (std::size_t j = ii + 1; j < size; ++j) acc -= Rational(a[ii][j]) * x[j];
        x[ii] = acc / Rational(a[ii][ii]);
    }
    return x;
}

/// Delta_0(n): determinant of the (n+1)x(n+1) power matrix on nodes 0..n, by elimination.
inline BigInt vandermonde_det(unsigned n) {
    if (n == 0) throw InvalidParameter("n must be >= 1");
    std::vector<int> nodes(n + 1);
    for (unsigned m = 0; m <= n; ++m) nodes[m] = static_cast<int>(m);
    auto a = detail::power_matrix(nodes);
    return detail::bareiss(a, a.size());
}

/// n! prod_{1<=i<j<=n} (j - i).
inline BigInt vandermonde_det_closed_form(unsigned n) {
    BigInt r = factorial(n);
    for (unsigned j = 2; j <= n; ++j)
        for (unsigned i = 1; i < j; ++i) r *= (j - i);
    return r;
}

/// Delta_m^(l)(n): the power matrix with column m replaced by the unit vector e_l.
inline BigInt cramer_numerator(unsigned m, unsigned l, unsigned n) {
    if (m > n || l > n) throw InvalidParameter("cramer numerator needs m, l <= n");
    std::vector<int> nodes(n + 1);
    for (unsigned k = 0; k <= n; ++k) nodes[k] = static_cast<int>(k);
    auto a = detail::power_matrix(nodes);
    for (unsigned k = 0; k <= n; ++k) a[k][m] = BigInt(k == l ? 1 : 0);
    return detail::bareiss(a, a.size());
}

/// (-1)^(m+1) (n!/m)^2 prod_{1<=i<j<=n; i,j != m} (j - i).
inline BigInt delta_m1_closed_form(unsigned m, unsigned n) {
    if (m < 1 || m > n) throw InvalidParameter("delta_m1 needs 1 <= m <= n");
    BigInt nfact_over_m = factorial(n) / m;
    BigInt r = nfact_over_m * nfact_over_m;
    for (unsigned j = 2; j <= n; ++j) {
        if (j == m) continue;
        for (unsigned i = 1; i < j; ++i) {
            if (i == m) continue;
            r *= (j - i);
        }
    }
    return (m + 1) % 2 == 0 ? r : BigInt(-r);
}

/// Stencil of the given kind rebuilt from the full (unreduced) moment system on its offsets.
inline Stencil stencil_from_moments(StencilKind kind, unsigned n) {
    if (n == 0) throw InvalidParameter("n must be >= 1");
    std::vector<int> offsets;
    unsigned order = 1;
    Rational prefactor(1);
    unsigned h_power = 1;
    switch (kind) {
    case StencilKind::CentralFirst:
        for (int m = -static_cast<int>(n); m <= static_cast<int>(n); ++m) offsets.push_back(m);
        prefactor = Rational(BigInt(1), BigInt(2));
        break;
    case StencilKind::CentralSecond:
        for (int m = -static_cast<int>(n); m <= static_cast<int>(n); ++m) offsets.push_back(m);
        order = 2;
        h_power = 2;
        break;
    case StencilKind::HalfPointFirst:
        for (int m = -static_cast<int>(2 * n - 1); m <= static_cast<int>(2 * n - 1); m += 2) offsets.push_back(m);
        prefactor = Rational(BigInt(1), BigInt(2));
        break;
    case StencilKind::OneSidedFirst:
        for (int m = 0; m <= static_cast<int>(n); ++m) offsets.push_back(m);
        break;
    case StencilKind::OneSidedNth:
        for (int m = 0; m <= static_cast<int>(n); ++m) offsets.push_back(m);
        order = n;
        h_power = n;
        prefactor = Rational(factorial(n));
        break;
    }
    const auto a = solve_moment_system({offsets, order});
    // the derivative is order! * c_order; fold that and the prefactor into the stored weight
    const Rational scale = Rational(factorial(order)) / prefactor;
    std::vector<StencilNode> nodes;
    for (std::size_t idx = 0; idx < offsets.size(); ++idx)
        if (!a[idx].is_zero()) nodes.push_back({offsets[idx], a[idx] * scale});
    return Stencil(kind, n, order, h_power, prefactor, std::move(nodes));
}

/// Applies the stencil to x^k (h factored out) and compares with d^order/dx^order x^k at 0.
inline ExactnessReport exactness_check(const Stencil& stencil, unsigned max_degree) {
    if (max_degree > 2 * stencil.n() + 4)
        throw InvalidParameter("max_degree must be <= 2n + 4");
    ExactnessReport report{stencil.kind(), stencil.n(), static_cast<int>(max_degree), std::nullopt, {}};
    const unsigned order = stencil.derivative_order();
    for (unsigned k = 0; k <= max_degree; ++k) {
        Rational moment(0);
        for (const auto& node : stencil.nodes()) moment += node.weight * Rational(detail::int_power(node.offset, k));
        Rational residual = stencil.prefactor() * moment;
        if (k == order) residual -= Rational(factorial(order));
        if (!residual.is_zero() && !report.first_failing_degree) {
            report.first_failing_degree = k;
            report.max_exact_degree = static_cast<int>(k) - 1;
        }
        report.residuals.push_back(std::move(residual));
    }
    return report;
}

/// Partial sum of term(1..count), accumulated smallest-index-last, with |term(count+1)| as the bound.
template <typename Term>
SeriesSum alternating_series_sum(Term&& term, std::size_t count) {
    if (count == 0) throw InvalidParameter("series needs at least one term");
    double sum = 0.0;
    for (std::size_t m = count; m >= 1; --m) sum += static_cast<double>(term(m));
    return {sum, std::abs(static_cast<double>(term(count + 1)))};
}

} // namespace fdspec::oracle
