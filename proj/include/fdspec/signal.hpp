#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "fdspec/errors.hpp"
#include "fdspec/rational.hpp"
#include "fdspec/weights.hpp"

namespace fdspec {

/// Equidistant samples f_i at x_i = (i - origin) h.
template <typename T>
class BasicSampledSignal {
public:
    BasicSampledSignal(T h, std::vector<T> samples, long origin = 0)
        : h_(std::move(h)), samples_(std::move(samples)), origin_(origin) {
        if (!(h_ > T(0))) throw InvalidParameter("sample spacing h must be positive");
        if (samples_.size() < 2) throw InvalidParameter("a sampled signal needs at least two samples");
        if (origin_ < 0 || origin_ >= size()) throw InvalidParameter("origin index out of range");
    }

    const T& h() const noexcept { return h_; }
    const std::vector<T>& samples() const noexcept { return samples_; }
    long origin() const noexcept { return origin_; }
    long size() const noexcept { return static_cast<long>(samples_.size()); }
    T x(long index) const { return T(index - origin_) * h_; }
    const T& operator[](long index) const { return samples_[static_cast<std::size_t>(index)]; }

private:
    T h_;
    std::vector<T> samples_;
    long origin_;
};

using SampledSignal = BasicSampledSignal<double>;

enum class PolicyKind { Central, OneSidedForward, OneSidedBackward, HalfPoint, Skipped };

struct Policy {
    PolicyKind kind = PolicyKind::Skipped;
    unsigned n = 0;

    std::string str() const {
        switch (kind) {
        case PolicyKind::Central: return "central(" + std::to_string(n) + ")";
        case PolicyKind::OneSidedForward: return "forward(" + std::to_string(n) + ")";
        case PolicyKind::OneSidedBackward: return "backward(" + std::to_string(n) + ")";
        case PolicyKind::HalfPoint: return "half-point(" + std::to_string(n) + ")";
        case PolicyKind::Skipped: return "skipped";
        }
        return "?";
    }

    friend bool operator==(const Policy&, const Policy&) = default;
};

template <typename T>
struct DerivativeResult {
    std::vector<std::optional<T>> values;
    unsigned order;
    std::vector<Policy> policy;
};

namespace detail {

template <typename T>
T convert_weight(const Rational& w) {
    if constexpr (std::is_same_v<T, Rational>) return w;
    else return w.template to_floating<T>();
}

template <typename T>
T int_pow(const T& base, unsigned e) {
    T r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace detail

/// A stencil with weights converted to T once, nodes grouped by |offset|.
template <typename T>
class PreparedStencil {
public:
    explicit PreparedStencil(const Stencil& stencil)
        : prefactor_(detail::convert_weight<T>(stencil.prefactor())), h_power_(stencil.h_power()),
          min_offset_(stencil.min_offset()), max_offset_(stencil.max_offset()) {
        std::vector<std::pair<int, T>> nodes;
        for (const auto& node : stencil.nodes()) nodes.emplace_back(node.offset, detail::convert_weight<T>(node.weight));
        // smallest |offset| first; the negative side of a pair precedes the positive one
        std::stable_sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) {
            const int aa = std::abs(a.first), bb = std::abs(b.first);
            return aa != bb ? aa < bb : a.first < b.first;
        });
        for (auto& node : nodes) {
            if (groups_.empty() || std::abs(groups_.back().front().first) != std::abs(node.first)) groups_.emplace_back();
            groups_.back().push_back(std::move(node));
        }
    }

    int min_offset() const noexcept { return min_offset_; }
    int max_offset() const noexcept { return max_offset_; }

    bool fits(const BasicSampledSignal<T>& signal, long index) const {
        return index + min_offset_ >= 0 && index + max_offset_ < signal.size();
    }

    T apply(const BasicSampledSignal<T>& signal, long index) const {
        for (long probe : {index + min_offset_, index + max_offset_})
            if (probe < 0 || probe >= signal.size())
                throw BoundaryError("stencil at index " + std::to_string(index) + " needs sample " +
                                        std::to_string(probe) + " outside [0, " + std::to_string(signal.size() - 1) +
                                        "]",
                                    probe);
        T total(0);
        for (const auto& group : groups_) {
            T partial(0);
            for (const auto& [offset, weight] : group) partial += weight * signal[index + offset];
            total += partial;
        }
        const T scale = prefactor_ / detail::int_pow(signal.h(), h_power_);
        return scale * total;
    }

private:
    T prefactor_;
    unsigned h_power_;
    int min_offset_;
    int max_offset_;
    std::vector<std::vector<std::pair<int, T>>> groups_;
};

/// prefactor / h^h_power * sum_m w_m f[index + m].
template <typename T>
T apply_stencil_at(const BasicSampledSignal<T>& signal, const Stencil& stencil, long index) {
    return PreparedStencil<T>(stencil).apply(signal, index);
}

/// The same rule read right-to-left: node m -> -m, weight scaled by (-1)^order.
inline Stencil mirror_stencil(const Stencil& stencil) {
    const bool odd = stencil.derivative_order() % 2 == 1;
    std::vector<StencilNode> nodes;
    for (auto it = stencil.nodes().rbegin(); it != stencil.nodes().rend(); ++it)
        nodes.push_back({-it->offset, odd ? -it->weight : it->weight});
    return Stencil(stencil.kind(), stencil.n(), stencil.derivative_order(), stencil.h_power(), stencil.prefactor(),
                   std::move(nodes));
}

/// Central(n) in the interior; one-sided(n) forward/backward near the ends
/// for order 1; order-2 boundary points are skipped.
template <typename T>
DerivativeResult<T> differentiate(const BasicSampledSignal<T>& signal, unsigned n, unsigned order) {
    if (n == 0) throw InvalidParameter("n must be >= 1");
    if (order != 1 && order != 2) throw InvalidParameter("order must be 1 or 2");
    if (signal.size() < static_cast<long>(n) + 1)
        throw InvalidParameter("signal has fewer than n + 1 samples");

    const PreparedStencil<T> central(order == 1 ? central_first(n) : central_second(n));
    std::optional<PreparedStencil<T>> forward, backward;
    if (order == 1) {
        const Stencil one_sided = one_sided_first(n);
        forward.emplace(one_sided);
        backward.emplace(mirror_stencil(one_sided));
    }

    const long size = signal.size();
    DerivativeResult<T> result{std::vector<std::optional<T>>(static_cast<std::size_t>(size)), order,
                               std::vector<Policy>(static_cast<std::size_t>(size))};
    for (long i = 0; i < size; ++i) {
        auto& value = result.values[static_cast<std::size_t>(i)];
        auto& policy = result.policy[static_cast<std::size_t>(i)];
        if (central.fits(signal, i)) {
            value = central.apply(signal, i);
            policy = {PolicyKind::Central, n};
        } else if (order == 2) {
            policy = {PolicyKind::Skipped, 0};
        } else if (i < static_cast<long>(n) && forward->fits(signal, i)) {
            value = forward->apply(signal, i);
            policy = {PolicyKind::OneSidedForward, n};
        } else if (backward->fits(signal, i)) {
            value = backward->apply(signal, i);
            policy = {PolicyKind::OneSidedBackward, n};
        } else {
            policy = {PolicyKind::Skipped, 0};
        }
    }
    return result;
}

/// 1/(2h) sum_{m<n} alpha_{2m+1}^(1/2)(n) (f[index+2m+1] - f[index-2m-1]).
template <typename T>
T differentiate_half_point(const BasicSampledSignal<T>& signal, unsigned n, long index) {
    return apply_stencil_at(signal, half_point(n), index);
}

/// Second derivative of f_m = (-1)^m at 0 from the M-term infinite-n sequence
/// alpha_m^(2) = (-1)^(m+1) 2/m^2; tends to -pi^2/h^2.
inline double alternating_second_derivative_check(unsigned M, double h) {
    if (M == 0) throw InvalidParameter("truncation M must be >= 1");
    if (!(h > 0.0)) throw InvalidParameter("h must be positive");
    auto sample = [](long m) { return m % 2 == 0 ? 1.0 : -1.0; };
    double sum = 0.0;
    for (unsigned m = M; m >= 1; --m) {
        const double alpha = central_second_limit(m).value();
        sum += alpha * (sample(m) - 2.0 * sample(0) + sample(-static_cast<long>(m)));
    }
    return sum / (h * h);
}

/// Analytic test signals with known derivatives.
struct TestFunction {
    enum class Family { Sinusoid, Polynomial, ModulatedAlternating };

    Family family = Family::Sinusoid;
    double omega = 1.0;
    double phase = 0.0;
    std::vector<double> coeffs;  // polynomial or envelope g(x) = sum c_k x^k

    static TestFunction sinusoid(double omega, double phase = 0.0) { return {Family::Sinusoid, omega, phase, {}}; }
    static TestFunction polynomial(std::vector<double> c) { return {Family::Polynomial, 0.0, 0.0, std::move(c)}; }
    static TestFunction modulated_alternating(std::vector<double> envelope) {
        return {Family::ModulatedAlternating, 0.0, 0.0, std::move(envelope)};
    }

    /// Parses "sin:omega=W[,phase=P]", "poly:c0,c1,...", "altpoly:c0,c1,...".
    static TestFunction parse(std::string_view spec);

    /// Derivative (order 0..2) of sum c_k x^k.
    template <typename T>
    T poly(T x, unsigned order) const {
        T acc(0);
        for (std::size_t k = coeffs.size(); k-- > order;) {
            T c = T(coeffs[k]);
            for (std::size_t j = 0; j < order; ++j) c *= T(static_cast<double>(k - j));
            acc = acc * x + c;
        }
        return acc;
    }

    /// Sample at node m; the alternating family carries the (-1)^m carrier.
    template <typename T>
    T value(long m, T h) const {
        const T x = T(m) * h;
        switch (family) {
        case Family::Sinusoid: return std::sin(T(omega) * x + T(phase));
        case Family::Polynomial: return poly(x, 0);
        case Family::ModulatedAlternating: return (m % 2 == 0 ? T(1) : T(-1)) * poly(x, 0);
        }
        return T(0);
    }

    /// Analytic derivative at node m; for the alternating family, of the envelope g.
    template <typename T>
    T derivative(long m, T h, unsigned order) const {
        const T x = T(m) * h;
        switch (family) {
        case Family::Sinusoid: {
            const T w = T(omega);
            return order == 1 ? w * std::cos(w * x + T(phase)) : -w * w * std::sin(w * x + T(phase));
        }
        case Family::Polynomial:
        case Family::ModulatedAlternating: return poly(x, order);
        }
        return T(0);
    }
};

inline TestFunction TestFunction::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw ParseError("function spec needs 'family:args'");
    const std::string family(spec.substr(0, colon));
    const std::string args(spec.substr(colon + 1));

    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(item);
        return parts;
    };
    auto number = [](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
            throw ParseError("not a number: '" + s + "'");
        return v;
    };

    if (family == "sin") {
        TestFunction f = sinusoid(1.0);
        for (const auto& kv : split(args)) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ParseError("sin arguments look like omega=W,phase=P");
            const std::string key = kv.substr(0, eq);
            const double v = number(kv.substr(eq + 1));
            if (key == "omega") f.omega = v;
            else if (key == "phase") f.phase = v;
            else throw ParseError("unknown sin argument '" + key + "'");
        }
        return f;
    }
    if (family == "poly" || family == "altpoly") {
        std::vector<double> c;
        for (const auto& item : split(args)) c.push_back(number(item));
        if (c.empty()) throw ParseError("polynomial needs at least one coefficient");
        return family == "poly" ? polynomial(std::move(c)) : modulated_alternating(std::move(c));
    }
    throw ParseError("unknown function family '" + family + "'");
}

struct ConvergenceRow {
    double h;
    double max_error;
    double roundoff_floor;
    std::optional<double> local_slope;  // against the previous row
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    std::optional<double> fitted_slope;  // empty when every error sits at the round-off floor
    bool exact = false;
};

/// Max interior error of differentiate() over x in [-1, 1] for each h, and the
/// least-squares slope of log(error) against log(h). Arithmetic runs in T.
template <typename T = long double>
ConvergenceStudy convergence_study(const TestFunction& fn, unsigned n, unsigned order,
                                   const std::vector<double>& h_list) {
    if (fn.family == TestFunction::Family::ModulatedAlternating)
        throw InvalidParameter("convergence study needs a function with a pointwise derivative");
    if (h_list.size() < 3) throw InvalidParameter("convergence study needs at least three spacings");
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        if (!(h_list[i] > 0.0)) throw InvalidParameter("spacings must be positive");
        if (i > 0 && !(h_list[i] < h_list[i - 1])) throw InvalidParameter("spacings must be strictly decreasing");
    }
    if (order != 1 && order != 2) throw InvalidParameter("order must be 1 or 2");

    const Stencil interior = order == 1 ? central_first(n) : central_second(n);
    T weight_mass(0);
    for (const auto& node : interior.nodes()) weight_mass += std::abs(node.weight.to_floating<T>());
    weight_mass *= interior.prefactor().to_floating<T>();

    ConvergenceStudy study;
    bool all_exact = true;
    for (double hd : h_list) {
        const T h = T(hd);
        const long half = static_cast<long>(std::ceil(1.0 / hd)) + static_cast<long>(n);
        std::vector<T> samples;
        for (long m = -half; m <= half; ++m) samples.push_back(fn.value<T>(m, h));
        const BasicSampledSignal<T> signal(h, samples, half);
        const auto result = differentiate(signal, n, order);

        T max_err(0), max_sample(0);
        for (const auto& s : samples) max_sample = std::max(max_sample, std::abs(s));
        for (long i = 0; i < signal.size(); ++i) {
            if (result.policy[static_cast<std::size_t>(i)].kind != PolicyKind::Central) continue;
            const T exact = fn.derivative<T>(i - half, h, order);
            max_err = std::max(max_err, std::abs(*result.values[static_cast<std::size_t>(i)] - exact));
        }
        const T floor = T(64) * std::numeric_limits<T>::epsilon() * weight_mass * (max_sample + T(1)) /
                        detail::int_pow(h, order);
        ConvergenceRow row{hd, static_cast<double>(max_err), static_cast<double>(floor), std::nullopt};
        if (!study.rows.empty() && row.max_error > 0.0 && study.rows.back().max_error > 0.0)
            row.local_slope = std::log(study.rows.back().max_error / row.max_error) / std::log(study.rows.back().h / hd);
        all_exact = all_exact && max_err <= floor;
        study.rows.push_back(row);
    }

    study.exact = all_exact;
    if (!all_exact) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double k = static_cast<double>(study.rows.size());
        for (const auto& row : study.rows) {
            const double lx = std::log(row.h);
            const double ly = std::log(std::max(row.max_error, std::numeric_limits<double>::min()));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        study.fitted_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    return study;
}

} // namespace fdspec
