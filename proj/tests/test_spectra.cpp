#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fdspec/spectra.hpp"
#include "fdspec/weights.hpp"

using namespace fdspec;
using std::numbers::pi;

namespace {

// Dense textbook DFT of an explicitly embedded length-N vector.
std::vector<Complex> naive_dft(const std::vector<double>& x) {
    const std::size_t N = x.size();
    std::vector<Complex> out(N);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t m = 0; m < N; ++m)
            out[r] += x[m] * std::polar(1.0, -2.0 * pi * double(m) * double(r) / double(N));
    return out;
}

std::vector<double> embed(const std::vector<SequenceTerm>& terms, unsigned N, EmbeddingMode mode) {
    std::vector<double> x(N, 0.0);
    for (const auto& t : terms) {
        x[t.index] += t.value;
        if (t.index == 0) continue;
        if (mode == EmbeddingMode::FullAntisymmetric) x[N - t.index] -= t.value;
        if (mode == EmbeddingMode::FullSymmetric) x[N - t.index] += t.value;
    }
    if (mode == EmbeddingMode::FullAntisymmetric) x[0] = 0.0;
    return x;
}

} // namespace

TEST(DftSpectrum, MatchesDenseDftForEveryMode) {
    const unsigned N = 64;
    for (auto mode : {EmbeddingMode::HalfSequence, EmbeddingMode::FullAntisymmetric, EmbeddingMode::FullSymmetric})
        for (auto kind : all_stencil_kinds) {
            const auto s = make_stencil(kind, 4);
            const auto terms = to_terms(coefficient_sequence(s));
            const auto spec = dft_spectrum(s, N, mode);
            const auto ref = naive_dft(embed(terms, N, mode));
            for (unsigned r = 0; r < N; ++r) EXPECT_LT(std::abs(spec.values[r] - ref[r]), 1e-12);
        }
}

TEST(DftSpectrum, OneSidedZeroSumAtDc) {
    for (unsigned n = 1; n <= 12; ++n) {
        EXPECT_EQ(dft_spectrum(one_sided_first(n), 2000, EmbeddingMode::HalfSequence).values[0], Complex(0.0, 0.0));
        EXPECT_EQ(dft_spectrum(one_sided_nth(n), 64, EmbeddingMode::HalfSequence).values[0], Complex(0.0, 0.0));
    }
}

TEST(DftSpectrum, LimitSequenceVanishesAtNyquist) {
    const auto seq = limit_sequence(CurveFamily::Beta1Inf, 999);
    const auto spec = dft_spectrum(seq, 2000, EmbeddingMode::HalfSequence);
    EXPECT_EQ(spec.conj_im(1000), 0.0);
}

TEST(DftSpectrum, HalfPointOneIsASine) {
    const unsigned N = 2000;
    const auto spec = dft_spectrum(half_point(1), N, EmbeddingMode::HalfSequence);
    for (unsigned r = 0; r <= N / 2; ++r) EXPECT_NEAR(spec.conj_im(r), std::sin(2 * pi * r / N), 1e-15);
}

TEST(DftSpectrum, Errors) {
    EXPECT_THROW(dft_spectrum(central_first(5), 10, EmbeddingMode::HalfSequence), EmbeddingOverflow);
    EXPECT_NO_THROW(dft_spectrum(central_first(4), 10, EmbeddingMode::HalfSequence));
    EXPECT_THROW(dft_spectrum(central_first(1), 9, EmbeddingMode::HalfSequence), InvalidParameter);
    const std::vector<SequenceTerm> negative{{-1, 1.0}};
    EXPECT_THROW(dft_spectrum(negative, 8, EmbeddingMode::HalfSequence), InvalidParameter);
}

TEST(SpectrumProperties, ConjugateSymmetryAndParity) {
    const unsigned N = 256;
    for (unsigned n = 1; n <= 10; ++n)
        for (auto kind : all_stencil_kinds) {
            const auto s = make_stencil(kind, n);
            double mass = 0.0;
            for (const auto& node : coefficient_sequence(s)) mass += std::abs(node.weight.to_floating<double>());
            for (auto mode :
                 {EmbeddingMode::HalfSequence, EmbeddingMode::FullAntisymmetric, EmbeddingMode::FullSymmetric}) {
                const auto spec = dft_spectrum(s, N, mode);
                for (unsigned r = 1; r < N; ++r)
                    EXPECT_LT(std::abs(spec.values[N - r] - std::conj(spec.values[r])), 1e-10);
                for (unsigned r = 0; r < N; ++r) {
                    if (mode == EmbeddingMode::FullAntisymmetric) {
                        EXPECT_LE(std::abs(spec.values[r].real()), 1e-10 * mass);
                    }
                    if (mode == EmbeddingMode::FullSymmetric) {
                        EXPECT_EQ(spec.values[r].imag(), 0.0);
                    }
                }
            }
        }
}

TEST(SpectrumProperties, HalfPointMirrorSymmetry) {
    const unsigned N = 2000;
    for (unsigned n : {1u, 2u, 5u, 10u, 20u}) {
        const auto spec = dft_spectrum(half_point(n), N, EmbeddingMode::HalfSequence);
        for (unsigned r = 0; r <= N / 2; ++r) EXPECT_NEAR(spec.conj_im(r), spec.conj_im(N / 2 - r), 1e-12);
    }
}

TEST(SpectrumProperties, CentralFirstApproachesBeta1) {
    const unsigned N = 2000;
    const double h = 1.0;
    const ReferenceCurve beta1{CurveFamily::Beta1Inf, h, N};
    for (unsigned r : {100u, 300u, 500u, 700u}) {
        double prev = 1e9;
        for (unsigned n : {1u, 2u, 5u, 10u}) {
            const auto spec = dft_spectrum(central_first(n), N, EmbeddingMode::FullAntisymmetric);
            const double residual = std::abs(spec.conj_im(r) - curve_part_at(beta1, SpectrumPart::ConjIm, r, N));
            EXPECT_LT(residual, prev) << "r=" << r << " n=" << n;
            prev = residual;
        }
    }
}

TEST(SpectrumProperties, Beta2IdentityAtDc) {
    const unsigned M = 999;
    const double h = 0.5;
    const auto spec = dft_spectrum(limit_sequence(CurveFamily::Beta2Inf, M), 2000, EmbeddingMode::FullSymmetric);
    const double bound = 4.0 * h / ((M + 1.0) * (M + 1.0));
    EXPECT_LE(std::abs(spec.values[0].real() * h - pi * pi * h / 3.0), bound);
}

TEST(ReferenceValue, Examples) {
    const double h = 0.25;
    EXPECT_DOUBLE_EQ(reference_value({CurveFamily::Beta2Inf, h, 0}, 0.0).real(), pi * pi * h / 3.0);
    const Complex half = reference_value({CurveFamily::BetaHalfInf, h, 0}, pi / (2 * h));
    EXPECT_NEAR(half.imag(), -pi * h, 1e-15);
    EXPECT_NEAR(reference_value({CurveFamily::BetaHalfInf, h, 0}, pi / (2 * h) * (1 + 1e-9)).imag(), -pi * h, 1e-8);
    EXPECT_DOUBLE_EQ(reference_value({CurveFamily::YHalf, 1.0, 2000}, 500).real(), pi / 2);
    EXPECT_DOUBLE_EQ(reference_value({CurveFamily::YHalf, 1.0, 2000}, 1000).real(), 0.0);
    EXPECT_DOUBLE_EQ(reference_value({CurveFamily::LinearI, 1.0, 2000}, 1000).real(), pi);
    EXPECT_EQ(reference_value({CurveFamily::ZeroR, 1.0, 2000}, 10), Complex(0.0, 0.0));
    EXPECT_DOUBLE_EQ(reference_value({CurveFamily::Beta1Inf, h, 0}, 1.0).imag(), -2.0 * h * h);
}

TEST(ReferenceValue, DomainErrors) {
    const double h = 2.0;
    EXPECT_THROW(reference_value({CurveFamily::Beta1Inf, h, 0}, pi / h), DomainError);
    EXPECT_NO_THROW(reference_value({CurveFamily::Beta2Inf, h, 0}, pi / h));
    EXPECT_NO_THROW(reference_value({CurveFamily::BetaHalfInf, h, 0}, pi / h));
    EXPECT_THROW(reference_value({CurveFamily::Beta2Inf, h, 0}, 1.01 * pi / h), DomainError);
    EXPECT_THROW(reference_value({CurveFamily::YHalf, 1.0, 100}, 51), DomainError);
    EXPECT_THROW(reference_value({CurveFamily::LinearI, 1.0, 100}, -1), DomainError);
}

TEST(TruncatedLimitSpectrum, Examples) {
    const double h = 1.0;
    const auto mid = truncated_limit_spectrum(CurveFamily::Beta1Inf, pi / (2 * h), h, 1000000);
    EXPECT_LE(std::abs(mid.value - Complex(0.0, -pi * h)), mid.bound);
    EXPECT_LT(mid.bound, 1e-5);

    const double h2 = 0.3;
    const auto dc = truncated_limit_spectrum(CurveFamily::Beta2Inf, 0.0, h2, 1000000);
    EXPECT_LE(std::abs(dc.value.real() - pi * pi * h2 / 3.0), 4.0 * h2 * 1e-12);
    EXPECT_DOUBLE_EQ(dc.bound, 4.0 * h2 / (1000001.0 * 1000001.0));

    for (unsigned M : {1u, 10u, 1000u}) EXPECT_EQ(truncated_limit_spectrum(CurveFamily::Beta1Inf, 0.0, h, M).value, Complex(0.0, 0.0));
    EXPECT_THROW(truncated_limit_spectrum(CurveFamily::Beta1Inf, 0.1, h, 0), InvalidParameter);
    EXPECT_THROW(truncated_limit_spectrum(CurveFamily::YHalf, 0.1, h, 10), InvalidParameter);
}

TEST(TruncatedLimitSpectrum, BoundHoldsAcrossTheBand) {
    const double h = 0.7;
    for (auto family : {CurveFamily::Beta1Inf, CurveFamily::Beta2Inf, CurveFamily::BetaHalfInf})
        for (double x : {0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0})
            for (unsigned M : {10u, 1000u, 100000u}) {
                const auto t = truncated_limit_spectrum(family, x / h, h, M);
                const Complex ref = reference_value({family, h, 0}, x / h);
                EXPECT_LE(std::abs(t.value - ref), t.bound * (1 + 1e-9) + 1e-13)
                    << to_string(family) << " x=" << x << " M=" << M;
            }
}

TEST(TruncatedLimitCurve, AgreesWithPointwiseSeries) {
    const unsigned N = 200, M = 5000;
    const double h = 0.5;
    for (auto family : {CurveFamily::Beta1Inf, CurveFamily::Beta2Inf, CurveFamily::BetaHalfInf}) {
        const auto curve = truncated_limit_curve(family, N, h, M, 4);
        for (unsigned r = 0; r < N / 2; r += 7) {
            const double omega = 2 * pi * r / (N * h);
            const auto point = truncated_limit_spectrum(family, omega, h, M);
            EXPECT_NEAR(std::abs(curve[r].value - point.value), 0.0, 1e-11);
            EXPECT_DOUBLE_EQ(curve[r].bound, point.bound);
        }
    }
}

TEST(Deviation, Examples) {
    const unsigned N = 2000;
    const auto h1 = dft_spectrum(half_point(1), N, EmbeddingMode::HalfSequence);
    const auto small = deviation(h1, {CurveFamily::YHalf, 1.0, N}, SpectrumPart::ConjIm, 0, 50);
    EXPECT_LE(small.max_abs, std::pow(2 * pi * 50 / 2000, 3) / 6);
    EXPECT_EQ(small.argmax, 50u);

    const auto os = dft_spectrum(one_sided_first(3), N, EmbeddingMode::HalfSequence);
    EXPECT_EQ(deviation(os, {CurveFamily::ZeroR, 1.0, N}, SpectrumPart::ConjRe, 0, 0).max_abs, 0.0);

    const auto h10 = dft_spectrum(half_point(10), N, EmbeddingMode::HalfSequence);
    EXPECT_LE(deviation(h10, {CurveFamily::YHalf, 1.0, N}, SpectrumPart::ConjIm, 0, 350).max_rel, 0.05);
}

TEST(Deviation, Errors) {
    const auto spec = dft_spectrum(half_point(1), 100, EmbeddingMode::HalfSequence);
    EXPECT_THROW(deviation(spec, {CurveFamily::YHalf, 1.0, 100}, SpectrumPart::ConjIm, 5, 4), InvalidParameter);
    EXPECT_THROW(deviation(spec, {CurveFamily::YHalf, 1.0, 100}, SpectrumPart::ConjIm, 0, 51), InvalidParameter);
    EXPECT_THROW(deviation(spec, {CurveFamily::YHalf, 1.0, 200}, SpectrumPart::ConjIm, 0, 10), InvalidParameter);
}

TEST(Deviation, ZeroCurveNormalisesBySpectrum) {
    const unsigned N = 2000;
    const auto spec = dft_spectrum(one_sided_first(1), N, EmbeddingMode::HalfSequence);
    // Re b*(r) = cos(2 pi r/N) - 1, max |.| = 2 at r = N/2
    const auto rep = deviation(spec, {CurveFamily::ZeroR, 1.0, N}, SpectrumPart::ConjRe, 0, 100);
    EXPECT_NEAR(rep.max_rel, (1 - std::cos(2 * pi * 100 / N)) / 2, 1e-14);
}

TEST(FreqDifferentiate, ConstantGivesZero) {
    const std::vector<double> f(16, 3.0);
    const auto c = signal_spectrum(f, 0.5);
    const auto d = freq_differentiate(c, 1, 0.5);
    for (const auto& v : d) EXPECT_LT(std::abs(v), 1e-12);
}

TEST(FreqDifferentiate, PureToneRoundTrip) {
    const unsigned N = 32;
    const double h = 0.25;
    for (unsigned k : {1u, 3u, 7u, 15u}) {
        const double omega = 2 * pi * k / (N * h);
        std::vector<double> f(N);
        for (unsigned m = 0; m < N; ++m) f[m] = std::cos(omega * m * h + 0.3);
        const auto d1 = inverse_signal_spectrum(freq_differentiate(signal_spectrum(f, h), 1, h), h);
        const auto d2 = inverse_signal_spectrum(freq_differentiate(signal_spectrum(f, h), 2, h), h);
        for (unsigned m = 0; m < N; ++m) {
            EXPECT_NEAR(d1[m].real(), -omega * std::sin(omega * m * h + 0.3), 1e-10);
            EXPECT_NEAR(d2[m].real(), -omega * omega * f[m], 1e-9);
            EXPECT_NEAR(d1[m].imag(), 0.0, 1e-10);
        }
    }
}

TEST(FreqDifferentiate, NyquistTone) {
    const unsigned N = 16;
    const double h = 0.5;
    std::vector<double> f(N);
    for (unsigned m = 0; m < N; ++m) f[m] = (m % 2 == 0) ? 1.0 : -1.0;
    const auto c = signal_spectrum(f, h);
    const auto d1 = inverse_signal_spectrum(freq_differentiate(c, 1, h), h);
    const auto d2 = inverse_signal_spectrum(freq_differentiate(c, 2, h), h);
    for (unsigned m = 0; m < N; ++m) {
        EXPECT_NEAR(std::abs(d1[m]), 0.0, 1e-12);
        EXPECT_NEAR(d2[m].real(), -(pi / h) * (pi / h) * f[m], 1e-10);
    }
    EXPECT_THROW(freq_differentiate(c, 3, h), InvalidParameter);
}

TEST(Names, RoundTrip) {
    for (auto f : {CurveFamily::Beta1Inf, CurveFamily::Beta2Inf, CurveFamily::BetaHalfInf, CurveFamily::YHalf,
                   CurveFamily::LinearI, CurveFamily::ZeroR})
        EXPECT_EQ(parse_curve_family(to_string(f)), f);
    for (auto m : {EmbeddingMode::HalfSequence, EmbeddingMode::FullAntisymmetric, EmbeddingMode::FullSymmetric})
        EXPECT_EQ(parse_embedding_mode(to_string(m)), m);
}

TEST(TruncatedLimitFilterSpectrum, MatchesEmbeddedDftWhenItFits) {
    const unsigned N = 512, M = 100;  // half-point limit reaches index 2M - 1
    const double h = 0.4;
    for (auto family : {CurveFamily::Beta1Inf, CurveFamily::Beta2Inf, CurveFamily::BetaHalfInf}) {
        const auto fast = truncated_limit_filter_spectrum(family, N, h, M, 3);
        const auto mode = family == CurveFamily::Beta2Inf ? EmbeddingMode::FullSymmetric : EmbeddingMode::FullAntisymmetric;
        EXPECT_EQ(fast.mode, mode);
        const auto dft = dft_spectrum(limit_sequence(family, M), N, mode);
        for (unsigned r = 0; r < N; ++r) EXPECT_LT(std::abs(fast.values[r] - dft.values[r]), 1e-12) << r;
    }
}

TEST(TruncatedLimitFilterSpectrum, LargeMTracksTheCurve) {
    const unsigned N = 2000;
    const auto spec = truncated_limit_filter_spectrum(CurveFamily::Beta2Inf, N, 1.0, 1000000, 4);
    const auto dev = deviation(spec, {CurveFamily::Beta2Inf, 1.0, N}, SpectrumPart::ConjRe, 0, N / 2);
    EXPECT_LT(dev.max_abs, 4e-6);
}
