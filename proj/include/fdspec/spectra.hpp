#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdspec/errors.hpp"
#include "fdspec/oracle.hpp"
#include "fdspec/parallel.hpp"
#include "fdspec/rational.hpp"
#include "fdspec/weights.hpp"

namespace fdspec {

using Complex = std::complex<double>;

/// How a one-sided coefficient sequence a_m (m >= 0) is laid out on the DFT ring.
///   HalfSequence       a_m at index m only
///   FullAntisymmetric  +a_m at m, -a_m at N-m
///   FullSymmetric      +a_m at m, +a_m at N-m (a_0 once)
enum class EmbeddingMode { HalfSequence, FullAntisymmetric, FullSymmetric };

inline std::string_view to_string(EmbeddingMode mode) {
    switch (mode) {
    case EmbeddingMode::HalfSequence: return "half-sequence";
    case EmbeddingMode::FullAntisymmetric: return "full-antisymmetric";
    case EmbeddingMode::FullSymmetric: return "full-symmetric";
    }
    return "?";
}

inline std::optional<EmbeddingMode> parse_embedding_mode(std::string_view name) {
    for (auto m : {EmbeddingMode::HalfSequence, EmbeddingMode::FullAntisymmetric, EmbeddingMode::FullSymmetric})
        if (to_string(m) == name) return m;
    return std::nullopt;
}

struct SequenceTerm {
    int index;
    double value;
};

/// b(r) = sum_m a_m exp(-2 pi i m r / N), r = 0..N-1.
struct FilterSpectrum {
    unsigned N = 0;
    EmbeddingMode mode = EmbeddingMode::HalfSequence;
    std::vector<Complex> values;
    std::string source;

    /// Parts of the conjugate b*(r); these are what the figures plot.
    double conj_re(std::size_t r) const { return values.at(r).real(); }
    double conj_im(std::size_t r) const { return -values.at(r).imag(); }
};

enum class SpectrumPart { ConjIm, ConjRe };

enum class CurveFamily { Beta1Inf, Beta2Inf, BetaHalfInf, YHalf, LinearI, ZeroR };

inline std::string_view to_string(CurveFamily family) {
    switch (family) {
    case CurveFamily::Beta1Inf: return "beta1";
    case CurveFamily::Beta2Inf: return "beta2";
    case CurveFamily::BetaHalfInf: return "beta-half";
    case CurveFamily::YHalf: return "yhalf";
    case CurveFamily::LinearI: return "linear-i";
    case CurveFamily::ZeroR: return "zero-r";
    }
    return "?";
}

inline std::optional<CurveFamily> parse_curve_family(std::string_view name) {
    for (auto f : {CurveFamily::Beta1Inf, CurveFamily::Beta2Inf, CurveFamily::BetaHalfInf, CurveFamily::YHalf,
                   CurveFamily::LinearI, CurveFamily::ZeroR})
        if (to_string(f) == name) return f;
    return std::nullopt;
}

inline bool is_frequency_curve(CurveFamily f) {
    return f == CurveFamily::Beta1Inf || f == CurveFamily::Beta2Inf || f == CurveFamily::BetaHalfInf;
}

/// Analytic curve. Beta* curves are functions of omega with spacing h; the
/// others are functions of the integer bin r for DFT length N.
struct ReferenceCurve {
    CurveFamily family;
    double h = 1.0;
    unsigned N = 2000;
};

struct DeviationReport {
    unsigned r_begin;
    unsigned r_end;  // inclusive
    double max_abs;
    double max_rel;
    unsigned argmax;
};

struct TruncatedValue {
    Complex value;
    double bound;
};

namespace detail {

/// (cos, sin) of 2 pi k / N, exact at quarter turns.
inline std::pair<double, double> unit_phase(unsigned long k, unsigned N) {
    k %= N;
    if (k == 0) return {1.0, 0.0};
    if (2 * k == N) return {-1.0, 0.0};
    if (4 * k == N) return {0.0, 1.0};
    if (4 * k == 3ul * N) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N);
    return {std::cos(angle), std::sin(angle)};
}

inline void check_length(unsigned N) {
    if (N < 2 || N % 2 != 0) throw InvalidParameter("DFT length N must be even and >= 2");
}

inline constexpr double domain_slack = 1e-12;

} // namespace detail

/// The a_m (m >= 0) sequence a stencil contributes to a spectrum: the positive
/// half for central and half-point kinds, every node for one-sided kinds.
inline std::vector<StencilNode> coefficient_sequence(const Stencil& stencil) {
    const bool one_sided =
        stencil.kind() == StencilKind::OneSidedFirst || stencil.kind() == StencilKind::OneSidedNth;
    std::vector<StencilNode> out;
    for (const auto& node : stencil.nodes())
        if (node.offset > 0 || (one_sided && node.offset >= 0)) out.push_back(node);
    return out;
}

inline std::vector<SequenceTerm> to_terms(const std::vector<StencilNode>& nodes) {
    std::vector<SequenceTerm> out;
    out.reserve(nodes.size());
    for (const auto& node : nodes) out.push_back({node.offset, node.weight.to_floating<double>()});
    return out;
}

/// Infinite-n coefficient sequence of a Beta* family truncated to M terms.
inline std::vector<SequenceTerm> limit_sequence(CurveFamily family, unsigned M) {
    if (M == 0) throw InvalidParameter("truncation M must be >= 1");
    std::vector<SequenceTerm> out;
    out.reserve(M);
    for (unsigned k = 1; k <= M; ++k) {
        LimitWeight w{};
        switch (family) {
        case CurveFamily::Beta1Inf: w = central_first_limit(k); break;
        case CurveFamily::Beta2Inf: w = central_second_limit(k); break;
        case CurveFamily::BetaHalfInf: w = half_point_limit(k - 1); break;
        default: throw InvalidParameter("limit sequences exist only for beta1, beta2, beta-half");
        }
        out.push_back({static_cast<int>(w.index), w.value()});
    }
    return out;
}

/// Direct sparse DFT of an embedded sequence, O(terms * N).
inline FilterSpectrum dft_spectrum(std::span<const SequenceTerm> terms, unsigned N, EmbeddingMode mode,
                                   std::string source = "sequence") {
    detail::check_length(N);
    for (const auto& t : terms) {
        if (t.index < 0) throw InvalidParameter("sequence indices must be non-negative");
        if (2L * t.index >= static_cast<long>(N))
            throw EmbeddingOverflow("offset " + std::to_string(t.index) + " does not fit below N/2 = " +
                                    std::to_string(N / 2));
    }
    FilterSpectrum spec{N, mode, std::vector<Complex>(N), std::move(source)};
    for (unsigned r = 0; r < N; ++r) {
        double re = 0.0, im = 0.0;
        for (const auto& t : terms) {
            const auto [c, s] = detail::unit_phase(static_cast<unsigned long>(t.index) * r, N);
            switch (mode) {
            case EmbeddingMode::HalfSequence:
                re += t.value * c;
                im -= t.value * s;
                break;
            case EmbeddingMode::FullAntisymmetric:
                if (t.index != 0) im -= 2.0 * t.value * s;
                break;
            case EmbeddingMode::FullSymmetric:
                re += (t.index == 0 ? 1.0 : 2.0) * t.value * c;
                break;
            }
        }
        spec.values[r] = Complex(re, im);
    }
    return spec;
}

/// Spectrum of a stencil's coefficient sequence. b(0) is the exact rational
/// sum rounded once, so zero-sum stencils give b(0) == 0 exactly.
inline FilterSpectrum dft_spectrum(const Stencil& stencil, unsigned N, EmbeddingMode mode) {
    const auto seq = coefficient_sequence(stencil);
    const auto terms = to_terms(seq);
    auto spec = dft_spectrum(terms, N, mode,
                             std::string(to_string(stencil.kind())) + "(n=" + std::to_string(stencil.n()) + ")");
    Rational dc(0);
    for (const auto& node : seq) {
        switch (mode) {
        case EmbeddingMode::HalfSequence: dc += node.weight; break;
        case EmbeddingMode::FullAntisymmetric: break;
        case EmbeddingMode::FullSymmetric: dc += node.offset == 0 ? node.weight : Rational(2) * node.weight; break;
        }
    }
    spec.values[0] = Complex(dc.to_floating<double>(), 0.0);
    return spec;
}

/// Closed-form reference curves. `at` is omega for Beta* and r otherwise.
inline Complex reference_value(const ReferenceCurve& curve, double at) {
    using std::numbers::pi;
    if (is_frequency_curve(curve.family)) {
        if (!(curve.h > 0.0)) throw InvalidParameter("curve spacing h must be positive");
        const double h = curve.h;
        const double x = at * h;
        if (x < -detail::domain_slack) throw DomainError("omega must be >= 0");
        if (curve.family == CurveFamily::Beta1Inf) {
            if (x >= pi * (1.0 - detail::domain_slack))
                throw DomainError("beta1 is defined only for 0 <= omega < pi/h");
            return {0.0, -2.0 * at * h * h};
        }
        if (x > pi * (1.0 + detail::domain_slack)) throw DomainError("omega exceeds pi/h");
        if (curve.family == CurveFamily::Beta2Inf) return {-at * at * h * h * h + pi * pi * h / 3.0, 0.0};
        const double folded = x <= pi / 2 ? x : pi - x;
        return {0.0, -2.0 * h * folded};
    }
    const double N = curve.N;
    if (at < 0.0 || at > N / 2) throw DomainError("r must lie in [0, N/2]");
    switch (curve.family) {
    case CurveFamily::YHalf: return {at <= N / 4 ? 2 * pi * at / N : pi - 2 * pi * at / N, 0.0};
    case CurveFamily::LinearI: return {2 * pi * at / N, 0.0};
    default: return {0.0, 0.0};
    }
}

namespace detail {

inline double abel_factor(double x) {
    const double c = std::abs(std::cos(x / 2));
    return c > 0.0 ? 1.0 / c : std::numeric_limits<double>::infinity();
}

/// Tail bound for the M-term truncation of the Beta* series at x = omega h.
inline double truncation_bound(CurveFamily family, double x, double h, unsigned M) {
    using std::numbers::pi;
    const double m1 = static_cast<double>(M) + 1.0;
    switch (family) {
    case CurveFamily::Beta1Inf:
        return 4.0 * h * abel_factor(x) / m1;
    case CurveFamily::Beta2Inf:
        return 4.0 * h * std::min(abel_factor(x) / (m1 * m1), 1.0 / M);
    case CurveFamily::BetaHalfInf: {
        const double odd = 2.0 * M + 1.0;
        const double c = std::abs(std::cos(x));
        const double abel = c > 0.0 ? 1.0 / (odd * odd * c) : std::numeric_limits<double>::infinity();
        return 8.0 * h / pi * std::min(1.0 / (4.0 * M), abel);
    }
    default: throw InvalidParameter("truncation applies to beta1, beta2, beta-half");
    }
}

} // namespace detail

/// Partial sums of the defining Fourier series of the infinite-n spectra:
///   beta1(w)     = -4ih sum (-1)^(m-1) sin(m w h)/m
///   beta2(w)     =  4h  sum (-1)^(m+1) cos(m w h)/m^2
///   beta_half(w) = -2ih (4/pi) sum_k (-1)^k sin((2k+1) w h)/(2k+1)^2
/// The bound comes from summation by parts and reduces to the first
/// omitted term where the terms alternate.
inline TruncatedValue truncated_limit_spectrum(CurveFamily family, double omega, double h, unsigned M) {
    using std::numbers::pi;
    if (M == 0) throw InvalidParameter("truncation M must be >= 1");
    if (!(h > 0.0)) throw InvalidParameter("h must be positive");
    const double x = omega * h;
    if (x < -detail::domain_slack || x > pi * (1.0 + detail::domain_slack))
        throw DomainError("omega must lie in [0, pi/h]");
    const double bound = detail::truncation_bound(family, x, h, M);
    switch (family) {
    case CurveFamily::Beta1Inf: {
        auto s = oracle::alternating_series_sum(
            [x](std::size_t m) { return (m % 2 == 1 ? 1.0 : -1.0) * std::sin(static_cast<double>(m) * x) / static_cast<double>(m); },
            M);
        return {{0.0, -4.0 * h * s.value}, bound};
    }
    case CurveFamily::Beta2Inf: {
        auto s = oracle::alternating_series_sum(
            [x](std::size_t m) {
                const double md = static_cast<double>(m);
                return (m % 2 == 1 ? 1.0 : -1.0) * std::cos(md * x) / (md * md);
            },
            M);
        return {{4.0 * h * s.value, 0.0}, bound};
    }
    case CurveFamily::BetaHalfInf: {
        auto s = oracle::alternating_series_sum(
            [x](std::size_t k1) {
                const double odd = 2.0 * static_cast<double>(k1) - 1.0;
                return (k1 % 2 == 1 ? 1.0 : -1.0) * std::sin(odd * x) / (odd * odd);
            },
            M);
        return {{0.0, -2.0 * h * 4.0 / pi * s.value}, bound};
    }
    default: throw InvalidParameter("truncation applies to beta1, beta2, beta-half");
    }
}

/// truncated_limit_spectrum at every grid frequency omega_r = 2 pi r/(N h),
/// r = 0..N/2, using a phase table so each term is a lookup.
inline std::vector<TruncatedValue> truncated_limit_curve(CurveFamily family, unsigned N, double h, unsigned M,
                                                         unsigned threads = 1) {
    using std::numbers::pi;
    detail::check_length(N);
    if (M == 0) throw InvalidParameter("truncation M must be >= 1");
    if (!(h > 0.0)) throw InvalidParameter("h must be positive");
    if (!is_frequency_curve(family)) throw InvalidParameter("truncation applies to beta1, beta2, beta-half");
    std::vector<std::pair<double, double>> table(N);
    for (unsigned k = 0; k < N; ++k) table[k] = detail::unit_phase(k, N);

    std::vector<TruncatedValue> out(N / 2 + 1);
    parallel_for(out.size(), threads, [&](std::size_t r) {
        const double x = 2.0 * pi * static_cast<double>(r) / N;
        double sum = 0.0;
        for (unsigned long m = M; m >= 1; --m) {
            const double md = static_cast<double>(m);
            switch (family) {
            case CurveFamily::Beta1Inf:
                sum += (m % 2 == 1 ? 1.0 : -1.0) * table[(m * r) % N].second / md;
                break;
            case CurveFamily::Beta2Inf:
                sum += (m % 2 == 1 ? 1.0 : -1.0) * table[(m * r) % N].first / (md * md);
                break;
            default: {
                const unsigned long odd = 2 * m - 1;
                const double od = static_cast<double>(odd);
                sum += (m % 2 == 1 ? 1.0 : -1.0) * table[(odd * r) % N].second / (od * od);
            }
            }
        }
        Complex value;
        switch (family) {
        case CurveFamily::Beta1Inf: value = {0.0, -4.0 * h * sum}; break;
        case CurveFamily::Beta2Inf: value = {4.0 * h * sum, 0.0}; break;
        default: value = {0.0, -2.0 * h * 4.0 / pi * sum}; break;
        }
        out[r] = {value, detail::truncation_bound(family, x, h, M)};
    });
    return out;
}

/// The truncated limit on the full r = 0..N-1 grid, scaled back to weight-sequence
/// units (divided by h) so it compares with dft_spectrum of a finite stencil in
/// the matching full embedding. No N/2 restriction on M.
inline FilterSpectrum truncated_limit_filter_spectrum(CurveFamily family, unsigned N, double h, unsigned M,
                                                      unsigned threads = 1) {
    const auto half = truncated_limit_curve(family, N, h, M, threads);
    FilterSpectrum spec;
    spec.N = N;
    spec.mode = family == CurveFamily::Beta2Inf ? EmbeddingMode::FullSymmetric : EmbeddingMode::FullAntisymmetric;
    spec.source = std::string(to_string(family)) + "(M=" + std::to_string(M) + ")";
    spec.values.resize(N);
    for (unsigned r = 0; r <= N / 2; ++r) spec.values[r] = half[r].value / h;
    for (unsigned r = N / 2 + 1; r < N; ++r) spec.values[r] = std::conj(spec.values[N - r]);
    return spec;
}

/// Curve value aligned with a spectrum's conjugate part at bin r. Beta* curves
/// are sampled at omega_r and divided by h so they compare with a plain DFT.
inline double curve_part_at(const ReferenceCurve& curve, SpectrumPart part, unsigned r, unsigned N) {
    if (is_frequency_curve(curve.family)) {
        const double omega = 2.0 * std::numbers::pi * r / (static_cast<double>(N) * curve.h);
        const Complex v = std::conj(reference_value(curve, omega)) / curve.h;
        return part == SpectrumPart::ConjIm ? v.imag() : v.real();
    }
    return reference_value(curve, static_cast<double>(r)).real();
}

/// Max absolute and relative deviation of a conjugate spectrum part from a
/// curve on [r_begin, r_end]. Relative deviation is normalised by the curve's
/// max |value| over [0, N/2]; for an identically zero curve, by the spectrum
/// part's own max |value| there.
inline DeviationReport deviation(const FilterSpectrum& spectrum, const ReferenceCurve& curve, SpectrumPart part,
                                 unsigned r_begin, unsigned r_end) {
    const unsigned N = spectrum.N;
    if (r_begin > r_end) throw InvalidParameter("empty r range");
    if (r_end > N / 2) throw InvalidParameter("r range must lie inside [0, N/2]");
    if (!is_frequency_curve(curve.family) && curve.N != N)
        throw InvalidParameter("curve N does not match spectrum N");

    auto measured = [&](unsigned r) {
        return part == SpectrumPart::ConjIm ? spectrum.conj_im(r) : spectrum.conj_re(r);
    };

    double scale = 0.0;
    for (unsigned r = 0; r <= N / 2; ++r) {
        try {
            scale = std::max(scale, std::abs(curve_part_at(curve, part, r, N)));
        } catch (const DomainError&) {
            // beta1 is undefined at the Nyquist bin
        }
    }
    if (scale == 0.0)
        for (unsigned r = 0; r <= N / 2; ++r) scale = std::max(scale, std::abs(measured(r)));

    DeviationReport rep{r_begin, r_end, 0.0, 0.0, r_begin};
    for (unsigned r = r_begin; r <= r_end; ++r) {
        const double d = std::abs(measured(r) - curve_part_at(curve, part, r, N));
        if (d > rep.max_abs) {
            rep.max_abs = d;
            rep.argmax = r;
        }
    }
    rep.max_rel = scale > 0.0 ? rep.max_abs / scale : 0.0;
    return rep;
}

/// c(omega_r) = h sum_m exp(-i omega_r m h) f_m for r = 0..N-1, N = |samples|.
inline std::vector<Complex> signal_spectrum(std::span<const double> samples, double h) {
    const auto N = static_cast<unsigned>(samples.size());
    detail::check_length(N);
    std::vector<Complex> c(N);
    for (unsigned r = 0; r < N; ++r) {
        Complex acc{};
        for (unsigned m = 0; m < N; ++m) {
            const auto [cs, sn] = detail::unit_phase(static_cast<unsigned long>(m) * r, N);
            acc += samples[m] * Complex(cs, -sn);
        }
        c[r] = h * acc;
    }
    return c;
}

/// f_m = 1/(N h) sum_r c_r exp(i omega_r m h); the discrete band-limited inverse.
inline std::vector<Complex> inverse_signal_spectrum(std::span<const Complex> c, double h) {
    const auto N = static_cast<unsigned>(c.size());
    detail::check_length(N);
    std::vector<Complex> f(N);
    for (unsigned m = 0; m < N; ++m) {
        Complex acc{};
        for (unsigned r = 0; r < N; ++r) {
            const auto [cs, sn] = detail::unit_phase(static_cast<unsigned long>(m) * r, N);
            acc += c[r] * Complex(cs, sn);
        }
        f[m] = acc / (static_cast<double>(N) * h);
    }
    return f;
}

/// Band-limited derivative in frequency space: c(omega) -> (i omega)^order c(omega)
/// with omega_r = 2 pi r/(N h), wrapped to negative frequencies above N/2.
/// Order 1 zeroes the Nyquist bin; order 2 keeps it with omega = pi/h.
inline std::vector<Complex> freq_differentiate(std::span<const Complex> spectrum, unsigned order, double h) {
    if (order != 1 && order != 2) throw InvalidParameter("frequency differentiation supports order 1 or 2");
    if (!(h > 0.0)) throw InvalidParameter("h must be positive");
    const auto N = static_cast<unsigned>(spectrum.size());
    detail::check_length(N);
    std::vector<Complex> out(N);
    for (unsigned r = 0; r < N; ++r) {
        const long signed_r = r <= N / 2 ? static_cast<long>(r) : static_cast<long>(r) - static_cast<long>(N);
        const double omega = 2.0 * std::numbers::pi * static_cast<double>(signed_r) / (static_cast<double>(N) * h);
        if (order == 1) out[r] = (2 * r == N) ? Complex{} : Complex(0.0, omega) * spectrum[r];
        else out[r] = -omega * omega * spectrum[r];
    }
    return out;
}

} // namespace fdspec
