#pragma once

// Subcommands behind the eckart-nu tool. Each returns the process exit code:
// 0 success, 1 invalid input, 2 no such bound state, 3 spurious state.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "config.hpp"
#include "emit.hpp"
#include "oracle.hpp"
#include "reference_tables.hpp"
#include "spectrum.hpp"
#include "wavefunction.hpp"

namespace enu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNoBoundState = 2;
inline constexpr int kExitSpurious = 3;

enum class OutputFormat { Csv, Json };

struct SpectrumOptions {
    int n_max = 5;
    int l_max = 0;
    LayoutPolicy layout = LayoutPolicy::rectangular(0);
    std::vector<int> dims{3};
    bool physical_only = false;
    int diff_paper = 0;  // 0: off, otherwise published table id
    OutputFormat format = OutputFormat::Csv;
};

struct CurveOptions {
    double r_min = 0.01;
    double r_max = 10.0;
    int samples = 200;
    OutputFormat format = OutputFormat::Csv;

    void validate() const {
        if (!(r_min > 0.0)) throw Error(ErrorCode::InvalidParameter, "r-min must be > 0");
        if (samples < 1) throw Error(ErrorCode::InvalidParameter, "samples must be >= 1");
        if (samples > 1 && !(r_max > r_min))
            throw Error(ErrorCode::InvalidParameter, "r-max must exceed r-min");
    }

    double at(int i) const {
        if (samples == 1) return r_min;
        return r_min + (r_max - r_min) * static_cast<double>(i) / (samples - 1);
    }
};

namespace detail {

using nlohmann::json;

inline json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

template <class Opt>
json number_or_null(const Opt& x) {
    return x ? number_or_null(*x) : json(nullptr);
}

inline void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

inline int cmd_spectrum(const config::RunConfig& cfg, const SpectrumOptions& opt, std::ostream& out,
                        std::ostream& err) {
    std::vector<TableRow> rows;
    std::optional<reference::PublishedTable> published;
    try {
        cfg.problem.validate();
        if (opt.diff_paper != 0) published = reference::table(opt.diff_paper);
        if (opt.dims.empty()) throw Error(ErrorCode::InvalidParameter, "no dimensions requested");
        for (int D : opt.dims)
            if (D < 2) throw Error(ErrorCode::InvalidParameter, "D must be >= 2");
        LayoutPolicy layout = opt.layout;
        if (layout.kind == LayoutPolicy::Kind::Rectangular) layout.l_max = opt.l_max;
        rows = spectrum_table(cfg.problem, opt.n_max, layout, opt.dims);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    std::vector<std::string> header{"n", "l", "D", "energy", "physical", "mu_bar"};
    if (published) {
        header.emplace_back("published_energy");
        header.emplace_back("delta");
    }

    detail::json arr = detail::json::array();
    std::optional<emit::CsvWriter> csv;
    if (opt.format == OutputFormat::Csv) csv.emplace(out, header);

    for (const auto& row : rows) {
        if (opt.physical_only && !(row.state && row.state->physical)) continue;
        std::optional<double> expected;
        if (published) expected = published->lookup(row.n, row.l, row.D);
        std::optional<double> delta;
        if (expected && row.state) delta = row.state->energy - *expected;

        if (csv) {
            std::vector<std::string> f{std::to_string(row.n), std::to_string(row.l),
                                       std::to_string(row.D)};
            if (row.state) {
                f.push_back(emit::format_double(row.state->energy));
                f.emplace_back(row.state->physical ? "true" : "false");
                f.push_back(emit::format_double(row.state->reduced.mu_bar));
            } else {
                const std::string marker = "error:" + std::string(to_string(*row.error));
                f.push_back(marker);
                f.emplace_back("false");
                f.push_back(marker);
            }
            if (published) {
                f.push_back(expected ? emit::format_double(*expected) : "");
                f.push_back(delta ? emit::format_double(*delta) : "");
            }
            csv->row(f);
        } else {
            detail::json j{{"n", row.n}, {"l", row.l}, {"D", row.D}};
            if (row.state) {
                j["energy"] = row.state->energy;
                j["physical"] = row.state->physical;
                j["mu_bar"] = row.state->reduced.mu_bar;
            } else {
                j["energy"] = nullptr;
                j["physical"] = false;
                j["mu_bar"] = nullptr;
                j["error"] = std::string(to_string(*row.error));
            }
            if (published) {
                j["published_energy"] = detail::number_or_null(expected);
                j["delta"] = detail::number_or_null(delta);
            }
            arr.push_back(std::move(j));
        }
    }
    if (!csv) detail::write_json(out, arr);
    return kExitOk;
}

namespace detail {

/// Emits r plus one column per curve.
template <class Sampler>
int emit_curves(const CurveOptions& opt, const std::vector<std::string>& names, Sampler&& sample,
                std::ostream& out, std::ostream& err) {
    std::vector<std::vector<double>> values;
    try {
        opt.validate();
        for (int i = 0; i < opt.samples; ++i) values.push_back(sample(opt.at(i)));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    if (opt.format == OutputFormat::Csv) {
        std::vector<std::string> header{"r"};
        header.insert(header.end(), names.begin(), names.end());
        emit::CsvWriter csv(out, header);
        for (int i = 0; i < opt.samples; ++i) {
            std::vector<std::string> f{emit::format_double(opt.at(i))};
            for (double v : values[i]) f.push_back(emit::format_double(v));
            csv.row(f);
        }
    } else {
        json arr = json::array();
        for (int i = 0; i < opt.samples; ++i) {
            json j{{"r", opt.at(i)}};
            for (std::size_t c = 0; c < names.size(); ++c) j[names[c]] = number_or_null(values[i][c]);
            arr.push_back(std::move(j));
        }
        write_json(out, arr);
    }
    return kExitOk;
}

}  // namespace detail

inline int cmd_potential(const config::RunConfig& cfg, Family family, const CurveOptions& opt,
                         std::ostream& out, std::ostream& err) {
    try {
        cfg.problem.validate();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return detail::emit_curves(
        opt, {"value"},
        [&](double r) { return std::vector<double>{eval_family(family, cfg.problem.potential, r)}; },
        out, err);
}

inline int cmd_effective(const config::RunConfig& cfg, int l, int D,
                         const std::vector<CentrifugalScheme>& schemes, const CurveOptions& opt,
                         std::ostream& out, std::ostream& err) {
    try {
        cfg.problem.validate();
        centrifugal_factor(l, D);
        if (schemes.empty()) throw Error(ErrorCode::InvalidParameter, "no schemes requested");
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    std::vector<std::string> names;
    for (auto s : schemes) names.emplace_back(to_string(s));
    const auto& p = cfg.problem;
    return detail::emit_curves(
        opt, names,
        [&](double r) {
            std::vector<double> row;
            for (auto s : schemes)
                row.push_back(effective_potential(p.potential, p.approx, l, D, p.mass, p.hbar, s, r));
            return row;
        },
        out, err);
}

inline int cmd_wavefunction(const config::RunConfig& cfg, int n, int l, int D, const CurveOptions& opt,
                            bool normalize, std::ostream& out, std::ostream& err) {
    RadialState state;
    try {
        cfg.problem.validate();
        state = make_radial_state(cfg.problem, n, l, D);
        if (normalize) state = normalized(cfg.problem, state);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        const bool no_state = e.code() == ErrorCode::NoBoundState ||
                              e.code() == ErrorCode::DegenerateState ||
                              e.code() == ErrorCode::ComplexV;
        return no_state ? kExitNoBoundState : kExitInvalid;
    }
    return detail::emit_curves(
        opt, {"U"}, [&](double r) { return std::vector<double>{radial_u(cfg.problem, state, r)}; },
        out, err);
}

inline nlohmann::json report_to_json(const oracle::ComparisonReport& rep) {
    using detail::json;
    json grid{{"r_origin", rep.grid.r_origin}, {"r_max", rep.grid.r_max},
              {"intervals", rep.grid.intervals}};
    json j{{"n", rep.n},
           {"l", rep.l},
           {"D", rep.D},
           {"scheme", std::string(to_string(rep.scheme))},
           {"grid", grid},
           {"threshold", rep.threshold},
           {"E_closed", detail::number_or_null(rep.e_closed)},
           {"closed_physical", rep.closed_physical},
           {"E_oracle", detail::number_or_null(rep.e_oracle)},
           {"oracle_status", rep.e_oracle ? "Bound" : "NoBoundState"},
           {"oracle_bound_states", rep.oracle_bound_states},
           {"delta", detail::number_or_null(rep.delta)},
           {"verdict", std::string(to_string(rep.verdict))},
           {"note", rep.note}};
    if (rep.closed_error) j["closed_error"] = std::string(to_string(*rep.closed_error));
    return j;
}

inline int cmd_validate(const config::RunConfig& cfg, int n, int l, int D, CentrifugalScheme scheme,
                        const oracle::GridSpec& grid, std::ostream& out, std::ostream& err) {
    oracle::ComparisonReport rep;
    try {
        cfg.problem.validate();
        if (n < 0 || l < 0 || D < 2) throw Error(ErrorCode::InvalidParameter, "bad quantum numbers");
        grid.validate();
        rep = oracle::compare(cfg.problem, n, l, D, scheme, grid);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    detail::write_json(out, report_to_json(rep));
    return rep.verdict == oracle::Verdict::Spurious ? kExitSpurious : kExitOk;
}

}  // namespace enu::cli
