#include <gtest/gtest.h>

#include <charconv>
#include <random>
#include <sstream>

#include "eckart_nu/config.hpp"
#include "eckart_nu/emit.hpp"

using namespace enu;
using namespace enu::config;

namespace {

template <class F>
ConfigError expect_config_error(F&& f) {
    try {
        f();
    } catch (const ConfigError& e) {
        return e;
    }
    ADD_FAILURE() << "expected ConfigError";
    return ConfigError(ErrorCode::ParseError, "", -1, "missing");
}

}  // namespace

TEST(Config, CanonicalFile) {
    const RunConfig cfg = parse_config(R"({"V0": 1.0, "V1": 0.01, "V2": 0.5, "a": 2.0, "b": 50,
        "alpha": 1, "omega": 1.6, "lambda": 3.2})",
                                       RunConfig{});
    const auto& p = cfg.problem;
    EXPECT_EQ(p.potential.alpha, 1.0);
    EXPECT_EQ(p.approx.omega, 1.6);
    EXPECT_EQ(p.approx.lambda_adj, 3.2);
    EXPECT_EQ(p.potential.a, 2.0);
    EXPECT_EQ(p.potential.b, 50.0);
    EXPECT_EQ(p.potential.V0, 1.0);
    EXPECT_EQ(p.potential.V1, 0.01);
    EXPECT_EQ(p.potential.V2, 0.5);
    EXPECT_EQ(p.mass, 1.0);
    EXPECT_EQ(p.hbar, 1.0);
}

TEST(Config, EmptyDocumentThenOverrides) {
    RunConfig cfg = parse_config("  \n");
    apply_override(cfg, "alpha", 5.0);
    apply_override(cfg, "lambda", 3.3);
    validate(cfg);
    EXPECT_EQ(cfg.problem.potential.alpha, 5.0);
    EXPECT_EQ(cfg.problem.approx.lambda_adj, 3.3);

    RunConfig from_file = parse_config(R"({"alpha": 2})");
    apply_override(from_file, "alpha", 3.0);
    EXPECT_EQ(from_file.problem.potential.alpha, 3.0);
}

TEST(Config, InvalidValueNamesKey) {
    const auto e = expect_config_error([] { parse_config(R"({"a": 2, "b": 0})"); });
    EXPECT_EQ(e.code(), ErrorCode::InvalidValue);
    EXPECT_EQ(e.key(), "b");
    EXPECT_EQ(e.position(), 9);

    const auto s = expect_config_error([] { parse_config(R"({"alpha": "one"})"); });
    EXPECT_EQ(s.code(), ErrorCode::InvalidValue);
    EXPECT_EQ(s.key(), "alpha");
}

TEST(Config, UnknownKey) {
    const auto e = expect_config_error([] { parse_config(R"({"V0": 1, "depth": 3})"); });
    EXPECT_EQ(e.code(), ErrorCode::UnknownKey);
    EXPECT_EQ(e.key(), "depth");
    EXPECT_EQ(e.position(), 10);
    RunConfig cfg;
    EXPECT_THROW(apply_override(cfg, "gamma", 1.0), ConfigError);
}

TEST(Config, ParseErrorPosition) {
    const auto e = expect_config_error([] { parse_config(R"({"V0": 1,, })"); });
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_GT(e.position(), 0);
    EXPECT_EQ(expect_config_error([] { parse_config("[1, 2]"); }).code(), ErrorCode::ParseError);
    EXPECT_EQ(expect_config_error([] { load_config("/nonexistent/cfg.json"); }).code(),
              ErrorCode::ParseError);
}

TEST(Emit, ShortestRoundTrip) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    std::uniform_int_distribution<int> ex(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng) * std::pow(10.0, ex(rng) / 10);
        const std::string s = emit::format_double(x);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        EXPECT_EQ(back, x) << s;
        EXPECT_LE(s.size(), 24u);
    }
    EXPECT_EQ(emit::format_double(0.04), "0.04");
    EXPECT_EQ(emit::format_double(std::nan("")), "nan");
}

TEST(Emit, CsvQuoting) {
    std::ostringstream out;
    emit::CsvWriter csv(out, {"a", "b"});
    csv.row({"x,y", "say \"hi\""});
    EXPECT_EQ(out.str(), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
    const auto fields = emit::parse_csv_line("\"x,y\",\"say \"\"hi\"\"\"");
    ASSERT_EQ(fields.size(), 2u);
    EXPECT_EQ(fields[0], "x,y");
    EXPECT_EQ(fields[1], "say \"hi\"");
}
