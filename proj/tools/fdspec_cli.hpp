#pragma once

// Command-line front end: stencil, spectrum, diff, figure, verify.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fdspec/fdspec.hpp"
#include "fdspec/parallel.hpp"

namespace fdspec::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // no "-0" in tables
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline nlohmann::ordered_json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

inline constexpr const char* spectrum_header = "r,omega,re_b_conj,im_b_conj,ref_value,abs_dev";

struct SpectrumRow {
    unsigned r;
    double omega;
    double re_conj;
    double im_conj;
    double ref;
    double abs_dev;
};

inline std::string csv_row(const SpectrumRow& row) {
    return std::to_string(row.r) + "," + fmt17(row.omega) + "," + fmt17(row.re_conj) + "," + fmt17(row.im_conj) +
           "," + fmt17(row.ref) + "," + fmt17(row.abs_dev);
}

inline double grid_omega(unsigned r, unsigned N, double h) {
    return 2.0 * std::numbers::pi * r / (static_cast<double>(N) * h);
}

inline std::vector<SpectrumRow> spectrum_rows(const FilterSpectrum& spec, double h,
                                              const std::optional<ReferenceCurve>& curve, SpectrumPart part) {
    std::vector<SpectrumRow> rows;
    for (unsigned r = 0; r <= spec.N / 2; ++r) {
        SpectrumRow row{r, grid_omega(r, spec.N, h), spec.conj_re(r), spec.conj_im(r), NAN, NAN};
        if (curve) {
            try {
                row.ref = curve_part_at(*curve, part, r, spec.N);
                row.abs_dev = std::abs((part == SpectrumPart::ConjIm ? row.im_conj : row.re_conj) - row.ref);
            } catch (const DomainError&) {
            }
        }
        rows.push_back(row);
    }
    return rows;
}

inline StencilKind require_kind(const std::string& name) {
    auto kind = parse_stencil_kind(name);
    if (!kind) throw UsageError("unknown --kind '" + name + "'");
    return *kind;
}

inline void require_even_N(unsigned N) {
    if (N < 2 || N % 2 != 0) throw UsageError("--N must be even and >= 2");
}

inline void require_positive_h(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw UsageError("--h must be positive");
}

/// Figure datasets; rows go to `out` as CSV.
struct FigureParams {
    std::string id;
    std::vector<unsigned> n_list;
    unsigned N = 2000;
    double h = 1.0;
    unsigned M = 1000000;
    std::string envelope = "1,0.1";
    unsigned count = 41;
};

inline void figure_limit(const FigureParams& p, std::ostream& out) {
    const bool first = p.id == "1a";
    const CurveFamily family = first ? CurveFamily::Beta1Inf : CurveFamily::Beta2Inf;
    const auto values = truncated_limit_curve(family, p.N, p.h, p.M, thread_cap_from_env());
    const ReferenceCurve curve{family, p.h, p.N};
    out << spectrum_header << "\n";
    for (unsigned r = 0; r <= p.N / 2; ++r) {
        const double omega = grid_omega(r, p.N, p.h);
        const Complex conj = std::conj(values[r].value);
        SpectrumRow row{r, omega, conj.real(), conj.imag(), NAN, NAN};
        try {
            const Complex ref = std::conj(reference_value(curve, omega));
            row.ref = first ? ref.imag() : ref.real();
            row.abs_dev = std::abs((first ? row.im_conj : row.re_conj) - row.ref);
        } catch (const DomainError&) {
        }
        out << csv_row(row) << "\n";
    }
}

inline void figure_stencil_spectra(const FigureParams& p, std::ostream& out) {
    StencilKind kind;
    CurveFamily family;
    SpectrumPart part = SpectrumPart::ConjIm;
    if (p.id == "2a") {
        kind = StencilKind::HalfPointFirst;
        family = CurveFamily::YHalf;
    } else {
        kind = StencilKind::OneSidedFirst;
        family = p.id == "3a" ? CurveFamily::LinearI : CurveFamily::ZeroR;
        if (p.id == "3b") part = SpectrumPart::ConjRe;
    }
    std::vector<unsigned> ns = p.n_list;
    if (ns.empty()) ns = p.id == "2a" ? std::vector<unsigned>{1, 2, 5, 10} : std::vector<unsigned>{1, 3, 5};
    const ReferenceCurve curve{family, p.h, p.N};
    out << "n," << spectrum_header << "\n";
    for (unsigned n : ns) {
        if (n == 0) throw UsageError("--n must be >= 1");
        const auto spec = dft_spectrum(make_stencil(kind, n), p.N, EmbeddingMode::HalfSequence);
        for (const auto& row : spectrum_rows(spec, p.h, curve, part)) out << n << "," << csv_row(row) << "\n";
    }
}

inline void figure_envelope(const FigureParams& p, std::ostream& out) {
    const unsigned n = p.n_list.empty() ? 3 : p.n_list.front();
    if (n == 0) throw UsageError("--n must be >= 1");
    if (p.count < 2) throw UsageError("--count must be >= 2");
    const TestFunction fn = TestFunction::parse("altpoly:" + p.envelope);
    const long origin = static_cast<long>(p.count / 2);
    std::vector<double> samples;
    for (long i = 0; i < static_cast<long>(p.count); ++i) samples.push_back(fn.value<double>(i - origin, p.h));
    const SampledSignal signal(p.h, samples, origin);
    const PreparedStencil<double> stencil(half_point(n));

    out << "index,x,signal,upper_envelope,lower_envelope,raw_derivative,carrier_corrected,exact_envelope_derivative\n";
    for (long i = 0; i < signal.size(); ++i) {
        const long m = i - origin;
        const double g = fn.poly<double>(static_cast<double>(m) * p.h, 0);
        std::string raw, corrected;
        if (stencil.fits(signal, i)) {
            const double d = stencil.apply(signal, i);
            raw = fmt17(d);
            corrected = fmt17(m % 2 == 0 ? -d : d);
        }
        out << i << "," << fmt17(signal.x(i)) << "," << fmt17(signal[i]) << "," << fmt17(g) << "," << fmt17(-g)
            << "," << raw << "," << corrected << "," << fmt17(fn.derivative<double>(m, p.h, 1)) << "\n";
    }
}

struct VerifyCheck {
    std::string name;
    unsigned n;
    bool passed;
};

/// Moment conditions, zero sums, oracle reconstruction, exactness table and determinant identities.
inline std::vector<VerifyCheck> run_verification(unsigned max_n) {
    std::vector<VerifyCheck> checks;
    auto moments_hold = [](const std::vector<Rational>& a, unsigned l, unsigned n) {
        for (unsigned k = 0; k <= n; ++k) {
            Rational s(0);
            for (unsigned m = 0; m <= n; ++m) s += a[m] * pow(Rational(m), k);
            if (s != Rational(k == l ? 1 : 0)) return false;
        }
        return true;
    };
    for (unsigned n = 1; n <= max_n; ++n) {
        std::vector<int> nodes;
        for (unsigned m = 0; m <= n; ++m) nodes.push_back(static_cast<int>(m));
        bool solver_ok = true;
        for (unsigned l = 0; l <= n; ++l)
            solver_ok = solver_ok && moments_hold(oracle::solve_moment_system({nodes, l}), l, n);
        checks.push_back({"moment-conditions-solver", n, solver_ok});

        std::vector<Rational> first, nth;
        const auto s1 = one_sided_first(n);
        const auto sn = one_sided_nth(n);
        for (unsigned m = 0; m <= n; ++m) {
            first.push_back(s1.weight_at(static_cast<int>(m)));
            nth.push_back(sn.weight_at(static_cast<int>(m)));
        }
        checks.push_back({"moment-conditions-closed-form", n, moments_hold(first, 1, n) && moments_hold(nth, n, n)});

        Rational z1(0), zn(0);
        for (unsigned m = 0; m <= n; ++m) {
            z1 += first[m];
            zn += nth[m];
        }
        checks.push_back({"zero-sum", n, z1.is_zero() && zn.is_zero()});

        bool rebuilt = true, exact = true;
        for (auto kind : all_stencil_kinds) {
            const auto s = make_stencil(kind, n);
            rebuilt = rebuilt && oracle::stencil_from_moments(kind, n) == s;
            const auto rep = oracle::exactness_check(s, 2 * n + 4);
            exact = exact && rep.max_exact_degree == static_cast<int>(nominal_exactness_degree(kind, n));
        }
        checks.push_back({"oracle-reconstruction", n, rebuilt});
        checks.push_back({"exactness-degrees", n, exact});

        bool dets = oracle::vandermonde_det(n) == oracle::vandermonde_det_closed_form(n);
        for (unsigned m = 1; m <= n; ++m)
            dets = dets && Rational(oracle::delta_m1_closed_form(m, n)) / Rational(oracle::vandermonde_det(n)) ==
                               s1.weight_at(static_cast<int>(m));
        checks.push_back({"determinant-identities", n, dets});
    }
    return checks;
}

inline std::vector<double> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open samples file '" + path + "'");
    std::vector<double> v;
    std::string tok;
    while (in >> tok) {
        char* end = nullptr;
        const double x = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size()) throw ParseError("bad sample value '" + tok + "'");
        v.push_back(x);
    }
    return v;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-difference stencils, their spectra and sampled-signal derivatives"};
    app.name("fdspec");
    app.set_help_flag("--help", "Print help and exit");  // -h is the grid spacing
    app.require_subcommand(1);

    std::string out_path;
    std::string st_format, sp_format, df_format, vf_format;

    // stencil
    auto* st = app.add_subcommand("stencil", "Print an exact weight table");
    std::string st_kind;
    unsigned st_n = 0;
    st->add_option("--kind", st_kind, "central-first|central-second|half-point|one-sided-first|one-sided-nth")
        ->required();
    st->add_option("--n", st_n, "family parameter n")->required();
    st->add_option("--format", st_format, "json|csv")->default_val("json");
    st->add_option("--out", out_path, "output file (default stdout)");

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "DFT of a weight sequence on r = 0..N/2");
    std::string sp_kind, sp_embedding = "half-sequence", sp_curve, sp_part = "im";
    unsigned sp_n = 0, sp_N = 2000, sp_M = 1000000;
    double sp_h = 1.0;
    bool sp_limit = false;
    std::optional<unsigned> sp_rmax;
    sp->add_option("--kind", sp_kind)->required();
    sp->add_option("--n", sp_n, "family parameter n (finite stencils)");
    sp->add_option("--N", sp_N, "DFT length (even)")->default_val(2000);
    sp->add_option("--h", sp_h, "grid spacing")->default_val(1.0);
    sp->add_option("--embedding", sp_embedding, "half-sequence|full-antisymmetric|full-symmetric")
        ->default_val("half-sequence");
    sp->add_option("--curve", sp_curve, "reference: beta1|beta2|beta-half|yhalf|linear-i|zero-r");
    sp->add_option("--part", sp_part, "conjugate part compared with the curve: im|re")->default_val("im");
    sp->add_flag("--limit", sp_limit, "use the infinite-n sequence truncated at M terms");
    sp->add_option("--M", sp_M, "truncation for --limit")->default_val(1000000);
    sp->add_option("--r-max", sp_rmax, "upper end of the deviation summary range (json)");
    sp->add_option("--format", sp_format, "csv|json")->default_val("csv");
    sp->add_option("--out", out_path);

    // diff
    auto* df = app.add_subcommand("diff", "Differentiate a sampled signal");
    std::string df_function, df_samples, df_kind = "auto", df_stencil_file;
    unsigned df_n = 2, df_order = 1, df_count = 101;
    std::optional<long> df_origin;
    double df_h = 1.0;
    df->add_option("--function", df_function, "sin:omega=W[,phase=P] | poly:c0,c1,... | altpoly:c0,c1,...");
    df->add_option("--samples", df_samples, "file of whitespace-separated samples");
    df->add_option("--h", df_h)->default_val(1.0);
    df->add_option("--count", df_count, "number of samples drawn from --function")->default_val(101);
    df->add_option("--origin", df_origin, "index of x = 0 (default count/2)");
    df->add_option("--n", df_n)->default_val(2);
    df->add_option("--order", df_order, "1|2")->default_val(1);
    df->add_option("--kind", df_kind, "auto|half-point")->default_val("auto");
    df->add_option("--stencil-file", df_stencil_file, "apply a stencil JSON written by `stencil`");
    df->add_option("--format", df_format, "csv|json")->default_val("csv");
    df->add_option("--out", out_path);

    // figure
    auto* fg = app.add_subcommand("figure", "Figure datasets: 1a 1b 2a 2b 3a 3b");
    FigureParams fp;
    fg->add_option("id", fp.id, "figure id")->required();
    fg->add_option("--n", fp.n_list, "family parameters (repeatable)");
    fg->add_option("--N", fp.N)->default_val(2000);
    fg->add_option("--h", fp.h)->default_val(1.0);
    fg->add_option("--M", fp.M, "series truncation for 1a/1b")->default_val(1000000);
    fg->add_option("--envelope", fp.envelope, "envelope coefficients for 2b")->default_val("1,0.1");
    fg->add_option("--count", fp.count, "samples for 2b")->default_val(41);
    fg->add_option("--out", out_path);

    // verify
    auto* vf = app.add_subcommand("verify", "Run the exact invariant checks");
    unsigned vf_max_n = 8;
    vf->add_option("--max-n", vf_max_n)->default_val(8);
    vf->add_option("--format", vf_format, "text|json")->default_val("text");
    vf->add_option("--out", out_path);

    std::vector<const char*> argv;
    argv.push_back("fdspec");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "fdspec: " << e.what() << "\n";
        return exit_usage;
    }

    std::ostringstream buffer;
    int status = exit_ok;
    try {
        if (st->parsed()) {
            const StencilKind kind = require_kind(st_kind);
            if (st_n == 0) throw UsageError("--n must be >= 1");
            const auto stencil = make_stencil(kind, st_n);
            if (st_format == "json") {
                buffer << stencil_to_json(stencil).dump(2) << "\n";
            } else if (st_format == "csv") {
                buffer << "offset,weight,weight_float\n";
                for (const auto& node : stencil.nodes())
                    buffer << node.offset << "," << node.weight.str() << "," << fmt17(node.weight.to_floating<double>())
                           << "\n";
            } else {
                throw UsageError("--format must be json or csv");
            }
        } else if (sp->parsed()) {
            const StencilKind kind = require_kind(sp_kind);
            require_even_N(sp_N);
            require_positive_h(sp_h);
            const auto mode = parse_embedding_mode(sp_embedding);
            if (!mode) throw UsageError("unknown --embedding '" + sp_embedding + "'");
            if (sp_part != "im" && sp_part != "re") throw UsageError("--part must be im or re");
            const SpectrumPart part = sp_part == "im" ? SpectrumPart::ConjIm : SpectrumPart::ConjRe;
            std::optional<ReferenceCurve> curve;
            if (!sp_curve.empty()) {
                const auto family = parse_curve_family(sp_curve);
                if (!family) throw UsageError("unknown --curve '" + sp_curve + "'");
                curve = ReferenceCurve{*family, sp_h, sp_N};
            }
            FilterSpectrum spec;
            if (sp_limit) {
                if (sp->count("--n") > 0) throw UsageError("--limit and --n are mutually exclusive");
                CurveFamily family;
                switch (kind) {
                case StencilKind::CentralFirst: family = CurveFamily::Beta1Inf; break;
                case StencilKind::CentralSecond: family = CurveFamily::Beta2Inf; break;
                case StencilKind::HalfPointFirst: family = CurveFamily::BetaHalfInf; break;
                default: throw UsageError("--limit needs central-first, central-second or half-point");
                }
                if (sp_M == 0) throw UsageError("--M must be >= 1");
                if (sp->count("--embedding") > 0)
                    throw UsageError("--embedding does not apply to --limit (the limit is the full two-sided sequence)");
                spec = truncated_limit_filter_spectrum(family, sp_N, sp_h, sp_M, thread_cap_from_env());
            } else {
                if (sp_n == 0) throw UsageError("--n must be >= 1 (or use --limit)");
                spec = dft_spectrum(make_stencil(kind, sp_n), sp_N, *mode);
            }
            const auto rows = spectrum_rows(spec, sp_h, curve, part);
            if (sp_format == "csv") {
                buffer << spectrum_header << "\n";
                for (const auto& row : rows) buffer << csv_row(row) << "\n";
            } else if (sp_format == "json") {
                nlohmann::ordered_json j;
                j["source"] = spec.source;
                j["N"] = spec.N;
                j["embedding"] = std::string(to_string(spec.mode));
                auto arr = nlohmann::ordered_json::array();
                for (const auto& row : rows)
                    arr.push_back({{"r", row.r}, {"omega", json_number(row.omega)}, {"re_b_conj", json_number(row.re_conj)},
                                   {"im_b_conj", json_number(row.im_conj)}, {"ref_value", json_number(row.ref)},
                                   {"abs_dev", json_number(row.abs_dev)}});
                j["rows"] = std::move(arr);
                if (curve) {
                    unsigned r_end = sp_rmax.value_or(sp_N / 2);
                    if (r_end > sp_N / 2) throw UsageError("--r-max exceeds N/2");
                    if (curve->family == CurveFamily::Beta1Inf && r_end == sp_N / 2) --r_end;
                    const auto dev = deviation(spec, *curve, part, 0, r_end);
                    j["deviation"] = {{"r_begin", dev.r_begin}, {"r_end", dev.r_end}, {"max_abs", dev.max_abs},
                                      {"max_rel", dev.max_rel}, {"argmax", dev.argmax}};
                }
                buffer << j.dump(2) << "\n";
            } else {
                throw UsageError("--format must be csv or json");
            }
        } else if (df->parsed()) {
            if (df_order != 1 && df_order != 2) throw UsageError("--order must be 1 or 2");
            if (df_kind != "auto" && df_kind != "half-point") throw UsageError("--kind must be auto or half-point");
            const bool explicit_kind = df->count("--kind") > 0;
            if (df_kind == "half-point" && df_order == 2)
                throw UsageError("--kind half-point computes first derivatives only; drop --order 2");
            if (!df_stencil_file.empty() && (explicit_kind || df->count("--order") > 0 || df->count("--n") > 0))
                throw UsageError("--stencil-file cannot be combined with --kind, --order or --n");
            if (df_function.empty() == df_samples.empty())
                throw UsageError("give exactly one of --function or --samples");
            require_positive_h(df_h);
            if (df_n == 0) throw UsageError("--n must be >= 1");

            std::vector<double> samples;
            long origin = 0;
            if (!df_function.empty()) {
                const auto fn = TestFunction::parse(df_function);
                origin = df_origin.value_or(static_cast<long>(df_count / 2));
                for (long i = 0; i < static_cast<long>(df_count); ++i) samples.push_back(fn.value<double>(i - origin, df_h));
            } else {
                samples = read_samples(df_samples);
                origin = df_origin.value_or(0);
            }
            const SampledSignal signal(df_h, samples, origin);

            std::vector<std::optional<double>> values(samples.size());
            std::vector<std::string> policy(samples.size(), "skipped");
            if (!df_stencil_file.empty()) {
                std::ifstream in(df_stencil_file);
                if (!in) throw UsageError("cannot open stencil file '" + df_stencil_file + "'");
                nlohmann::json j;
                try {
                    in >> j;
                } catch (const nlohmann::json::exception& e) {
                    throw ParseError(std::string("stencil file is not JSON: ") + e.what());
                }
                const PreparedStencil<double> stencil(stencil_from_json(j));
                for (long i = 0; i < signal.size(); ++i)
                    if (stencil.fits(signal, i)) {
                        values[static_cast<std::size_t>(i)] = stencil.apply(signal, i);
                        policy[static_cast<std::size_t>(i)] = "stencil";
                    }
            } else if (df_kind == "half-point") {
                const PreparedStencil<double> stencil(half_point(df_n));
                for (long i = 0; i < signal.size(); ++i)
                    if (stencil.fits(signal, i)) {
                        values[static_cast<std::size_t>(i)] = stencil.apply(signal, i);
                        policy[static_cast<std::size_t>(i)] = Policy{PolicyKind::HalfPoint, df_n}.str();
                    }
            } else {
                const auto result = differentiate(signal, df_n, df_order);
                for (std::size_t i = 0; i < samples.size(); ++i) {
                    values[i] = result.values[i];
                    policy[i] = result.policy[i].str();
                }
            }

            if (df_format == "csv") {
                buffer << "index,x,value,policy\n";
                for (long i = 0; i < signal.size(); ++i) {
                    const auto& v = values[static_cast<std::size_t>(i)];
                    buffer << i << "," << fmt17(signal.x(i)) << "," << (v ? fmt17(*v) : std::string()) << ","
                           << policy[static_cast<std::size_t>(i)] << "\n";
                }
            } else if (df_format == "json") {
                auto arr = nlohmann::ordered_json::array();
                for (long i = 0; i < signal.size(); ++i) {
                    const auto& v = values[static_cast<std::size_t>(i)];
                    arr.push_back({{"index", i}, {"x", signal.x(i)},
                                   {"value", v ? json_number(*v) : nlohmann::ordered_json(nullptr)},
                                   {"policy", policy[static_cast<std::size_t>(i)]}});
                }
                buffer << nlohmann::ordered_json{{"rows", arr}}.dump(2) << "\n";
            } else {
                throw UsageError("--format must be csv or json");
            }
        } else if (fg->parsed()) {
            require_even_N(fp.N);
            require_positive_h(fp.h);
            if (fp.id == "1a" || fp.id == "1b") {
                if (fp.M == 0) throw UsageError("--M must be >= 1");
                figure_limit(fp, buffer);
            } else if (fp.id == "2a" || fp.id == "3a" || fp.id == "3b") {
                figure_stencil_spectra(fp, buffer);
            } else if (fp.id == "2b") {
                figure_envelope(fp, buffer);
            } else {
                throw UsageError("unknown figure id '" + fp.id + "' (expected 1a 1b 2a 2b 3a 3b)");
            }
        } else if (vf->parsed()) {
            if (vf_max_n < 1 || vf_max_n > 64) throw UsageError("--max-n must be in 1..64");
            if (vf_format != "text" && vf_format != "json") throw UsageError("--format must be text or json");
            const auto checks = run_verification(vf_max_n);
            bool all = true;
            for (const auto& c : checks) all = all && c.passed;
            if (vf_format == "text") {
                for (const auto& c : checks)
                    buffer << (c.passed ? "PASS " : "FAIL ") << c.name << " n=" << c.n << "\n";
                buffer << (all ? "all checks passed" : "some checks FAILED") << "\n";
            } else {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& c : checks) arr.push_back({{"name", c.name}, {"n", c.n}, {"passed", c.passed}});
                buffer << nlohmann::ordered_json{{"checks", arr}, {"all_passed", all}}.dump(2) << "\n";
            }
            if (!all) status = exit_domain;
        }
    } catch (const UsageError& e) {
        err << "fdspec: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        err << "fdspec: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "fdspec: " << e.what() << "\n";
        return exit_domain;
    }

    if (out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "fdspec: cannot write '" << out_path << "'\n";
            return exit_domain;
        }
        file << buffer.str();
    }
    return status;
}

} // namespace fdspec::cli
