#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eckart_nu/commands.hpp"

namespace {

using enu::CentrifugalScheme;
using enu::Family;
using enu::cli::OutputFormat;

struct CommonArgs {
    std::string config_path;
    std::map<std::string, std::optional<double>> overrides;
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App& sub, CommonArgs& args) {
    sub.add_option("--config", args.config_path, "flat JSON config file");
    for (auto key : enu::config::kKeys) {
        auto& slot = args.overrides[std::string(key)];
        sub.add_option("--" + std::string(key), slot, "override config key " + std::string(key));
    }
    sub.add_option("--format", args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--output", args.output, "output path (default stdout)");
}

const std::map<std::string, CentrifugalScheme> kSchemes{
    {"exact", CentrifugalScheme::Exact},
    {"ga", CentrifugalScheme::GreeneAldrich},
    {"improved", CentrifugalScheme::Improved}};

const std::map<std::string, Family> kFamilies{
    {"combined", Family::Combined},     {"hylleraas", Family::DeformedHylleraas},
    {"eckart", Family::Eckart},         {"hulthen", Family::Hulthen},
    {"rosen-morse", Family::RosenMorse}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form bound states of the Eckart plus deformed Hylleraas potential"};
    app.require_subcommand(1);

    CommonArgs common;

    enu::cli::SpectrumOptions spec_opt;
    std::string layout = "rect";
    std::optional<int> l_max;
    auto* spectrum = app.add_subcommand("spectrum", "closed-form energy table");
    add_common(*spectrum, common);
    spectrum->add_option("--n-max", spec_opt.n_max, "highest radial quantum number")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--l-max", l_max, "highest l for the rect layout (default n-max)")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--dims", spec_opt.dims, "comma-separated dimensions")->delimiter(',');
    spectrum->add_option("--layout", layout, "paper: l < n rows; rect: l = 0..l-max")
        ->check(CLI::IsMember({"paper", "rect"}));
    spectrum->add_flag("--physical-only", spec_opt.physical_only, "drop non-normalizable states");
    spectrum->add_option("--diff-paper", spec_opt.diff_paper, "append published table values")
        ->check(CLI::IsMember({1, 2, 3}));

    enu::cli::CurveOptions curve;
    auto add_curve = [&](CLI::App& sub) {
        sub.add_option("--r-min", curve.r_min, "first sample radius");
        sub.add_option("--r-max", curve.r_max, "last sample radius");
        sub.add_option("--samples", curve.samples, "number of samples");
    };

    std::string family = "combined";
    auto* potential = app.add_subcommand("potential", "sample a potential family");
    add_common(*potential, common);
    add_curve(*potential);
    potential->add_option("--family", family, "combined, hylleraas, eckart, hulthen or rosen-morse")
        ->transform(CLI::IsMember(kFamilies));

    int l = 0;
    int D = 3;
    int n = 0;
    std::vector<std::string> schemes{"exact", "ga", "improved"};
    auto* effective = app.add_subcommand("effective", "sample effective potentials");
    add_common(*effective, common);
    add_curve(*effective);
    effective->add_option("--l", l, "angular momentum");
    effective->add_option("--D", D, "spatial dimension");
    effective->add_option("--scheme", schemes, "exact, ga, improved (comma-separated)")
        ->delimiter(',')
        ->check(CLI::IsMember(kSchemes));

    bool normalize = false;
    auto* wavefunction = app.add_subcommand("wavefunction", "sample the radial function U(r)");
    add_common(*wavefunction, common);
    add_curve(*wavefunction);
    wavefunction->add_option("--n", n, "radial quantum number");
    wavefunction->add_option("--l", l, "angular momentum");
    wavefunction->add_option("--D", D, "spatial dimension");
    wavefunction->add_flag("--normalize", normalize, "scale to unit norm");

    std::string scheme = "exact";
    std::optional<int> grid_n;
    std::optional<double> r_max;
    auto* validate = app.add_subcommand("validate", "compare closed form with finite differences");
    add_common(*validate, common);
    validate->add_option("--n", n, "radial quantum number");
    validate->add_option("--l", l, "angular momentum");
    validate->add_option("--D", D, "spatial dimension");
    validate->add_option("--scheme", scheme, "centrifugal model for the reference solver")
        ->check(CLI::IsMember(kSchemes));
    validate->add_option("--grid-n", grid_n, "grid intervals");
    validate->add_option("--r-max", r_max, "box radius (default 40/alpha)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : enu::cli::kExitInvalid;
    }

    enu::config::RunConfig cfg;
    try {
        cfg = common.config_path.empty() ? enu::config::default_config()
                                         : enu::config::load_config(common.config_path);
        for (const auto& [key, value] : common.overrides)
            if (value) enu::config::apply_override(cfg, key, *value);
        enu::config::validate(cfg);
    } catch (const enu::config::ConfigError& e) {
        std::cerr << "error: " << e.what();
        if (!e.key().empty()) std::cerr << " [key " << e.key() << "]";
        if (e.position() >= 0) std::cerr << " [offset " << e.position() << "]";
        std::cerr << '\n';
        return enu::cli::kExitInvalid;
    }
    if (auto warning = cfg.problem.approx.warning()) std::cerr << "warning: " << *warning << '\n';

    const OutputFormat format = common.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    spec_opt.format = format;
    curve.format = format;

    std::ofstream file;
    if (!common.output.empty()) {
        file.open(common.output);
        if (!file) {
            std::cerr << "error: cannot open " << common.output << '\n';
            return enu::cli::kExitInvalid;
        }
    }
    std::ostream& out = common.output.empty() ? std::cout : file;

    if (*spectrum) {
        spec_opt.layout = layout == "paper" ? enu::LayoutPolicy::triangular()
                                            : enu::LayoutPolicy::rectangular(0);
        spec_opt.l_max = l_max.value_or(spec_opt.n_max);
        return enu::cli::cmd_spectrum(cfg, spec_opt, out, std::cerr);
    }
    if (*potential) return enu::cli::cmd_potential(cfg, kFamilies.at(family), curve, out, std::cerr);
    if (*effective) {
        std::vector<CentrifugalScheme> chosen;
        for (const auto& s : schemes) chosen.push_back(kSchemes.at(s));
        return enu::cli::cmd_effective(cfg, l, D, chosen, curve, out, std::cerr);
    }
    if (*wavefunction)
        return enu::cli::cmd_wavefunction(cfg, n, l, D, curve, normalize, out, std::cerr);
    if (*validate) {
        auto grid = enu::oracle::GridSpec::defaults_for(cfg.problem.potential);
        if (grid_n) grid.intervals = *grid_n;
        if (r_max) grid.r_max = *r_max;
        return enu::cli::cmd_validate(cfg, n, l, D, kSchemes.at(scheme), grid, out, std::cerr);
    }
    return enu::cli::kExitInvalid;
}
