// Copyright 2026 The spinlock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "spinlock/cli.hpp"

namespace spinlock {
namespace {

using std::numbers::pi;

TEST(ParseReal, PlainAndPiForms) {
    EXPECT_EQ(parse_real("0.25"), 0.25);
    EXPECT_EQ(parse_real(" -1e-3 "), -1e-3);
    EXPECT_EQ(parse_real("pi"), pi);
    EXPECT_EQ(parse_real("pi/4"), pi / 4);
    EXPECT_EQ(parse_real("3*pi/4"), 3 * pi / 4);
    EXPECT_EQ(parse_real("2pi"), 2 * pi);
    EXPECT_EQ(parse_real("-pi/2"), -pi / 2);
    EXPECT_THROW(parse_real("abc"), ConfigError);
    EXPECT_THROW(parse_real("1.5x"), ConfigError);
    EXPECT_THROW(parse_real("pi*2"), ConfigError);
    EXPECT_THROW(parse_real(""), ConfigError);
}

TEST(ParseAxis, ListAndLinspace) {
    EXPECT_EQ(parse_axis(Parameter::Beta, "1, 1.5, 2").values, (std::vector<double>{1.0, 1.5, 2.0}));
    const auto ax = parse_axis(Parameter::Theta, "linspace(0, pi, 181)");
    EXPECT_EQ(ax.values.size(), 181u);
    EXPECT_EQ(ax.values.back(), pi);
    EXPECT_NEAR(ax.values[90], pi / 2, 1e-15);
    EXPECT_THROW(parse_axis(Parameter::Beta, "linspace(0, 1)"), ConfigError);
    EXPECT_THROW(parse_axis(Parameter::Beta, "linspace(0, 1, 0)"), ConfigError);
    EXPECT_THROW(parse_axis(Parameter::Beta, "linspace(0, 1, 2.5)"), ConfigError);
}

TEST(ParseConfig, CommentsBlankLinesAndOverrides) {
    const auto s = parse_config_text(
        "# a comment\n\nscheme = A   # trailing\na=3\n  tbar = 1\nbeta = 2\nbeta = 2.5\nperiods = 4\n"
        "observables = magnetization, discord_exact\n");
    EXPECT_EQ(s.get("scheme"), "A");
    EXPECT_EQ(s.get("beta"), "2.5");
    const auto spec = build_spec(s);
    EXPECT_EQ(spec.base.a, 3.0);
    EXPECT_EQ(spec.base.beta, 2.5);
    EXPECT_EQ(spec.base.periods, 4);
    EXPECT_EQ(spec.observables.size(), 2u);
}

TEST(ParseConfig, UnknownKeyListsValidKeys) {
    try {
        parse_config_text("scheme = A\ntemperature = 3\n");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("line 2"), std::string::npos);
        EXPECT_NE(msg.find("temperature"), std::string::npos);
        for (const auto& k : config_keys()) EXPECT_NE(msg.find(k), std::string::npos) << k;
        EXPECT_NE(msg.find("axis."), std::string::npos);
    }
    EXPECT_THROW(parse_config_text("axis.gamma = 1, 2\n"), ConfigError);
    EXPECT_THROW(parse_config_text("no equals sign\n"), ConfigError);
}

TEST(BuildSpec, SchemeParameterCombinations) {
    const std::string common = "tbar = 0.1\nbeta = 3\nperiods = 8\nobservables = concurrence_closed\n";
    EXPECT_THROW(build_spec(parse_config_text("scheme = B\na = 3\nphi = pi/4\n" + common)), ConfigError);
    EXPECT_THROW(build_spec(parse_config_text("scheme = A\na = 3\nphi = pi/4\n" + common)), ConfigError);
    EXPECT_THROW(build_spec(parse_config_text("scheme = B\n" + common)), ConfigError);
    EXPECT_THROW(build_spec(parse_config_text("scheme = C\nphi = 1\n" + common)), ConfigError);
    EXPECT_THROW(build_spec(parse_config_text("scheme = B\nphi = 1\nphi_deg = 45\n" + common)), ConfigError);
    const auto deg = build_spec(parse_config_text("scheme = B\nphi_deg = 45\n" + common));
    EXPECT_NEAR(deg.base.phi, pi / 4, 1e-15);
    EXPECT_THROW(build_spec(parse_config_text("scheme = A\na = 3\nbeta = 1\naxis.beta = 1, 2\n"
                                              "tbar = 1\nperiods = 1\nobservables = magnetization\n")),
                 ConfigError);
    EXPECT_THROW(build_spec(parse_config_text("scheme = A\na = 3\ntbar = 1\nbeta = 1\nperiods = -1\n"
                                              "observables = magnetization\n")),
                 ConfigError);
    EXPECT_THROW(build_spec(parse_config_text("scheme = A\na = 3\ntbar = 1\nbeta = 1\nperiods = 1\n"
                                              "observables = entropy\n")),
                 Error);
    EXPECT_THROW(build_spec(parse_config_text("scheme = A\na = 3\ntbar = 1\nbeta = 1\nperiods = 1\n"
                                              "observables = magnetization\npopulation = 1\n")),
                 ConfigError);
}

TEST(Presets, FigureParameters) {
    Settings fig3;
    fig3.set("preset", "fig3");
    const auto s3 = build_spec(fig3);
    EXPECT_EQ(s3.base.scheme, Scheme::B);
    EXPECT_EQ(s3.base.phi, pi / 4);
    EXPECT_EQ(s3.base.periods, 1);
    ASSERT_EQ(s3.axes.size(), 2u);
    EXPECT_EQ(s3.axes[0].parameter, Parameter::Tbar);
    EXPECT_GT(s3.axes[0].values.front(), 0.0);
    EXPECT_NEAR(s3.axes[0].values.back(), 4 * pi / 3, 1e-15);
    EXPECT_EQ(s3.axes[1].values.back(), 7.0);

    Settings fig4;
    fig4.set("preset", "fig4");
    const auto s4 = build_spec(fig4);
    EXPECT_EQ(s4.base.a, 3.0);
    EXPECT_EQ(s4.base.tbar, 1.0);
    EXPECT_EQ(s4.axes[0].values, (std::vector<double>{1.0, 1.5, 2.0}));
    EXPECT_EQ(s4.observables, std::vector<Observable>{Observable::ConditionalEntropyCurve});

    Settings fig5a;
    fig5a.set("preset", "fig5a");
    const auto s5a = build_spec(fig5a);
    EXPECT_EQ(s5a.axes[0].values, (std::vector<double>{0.5, 1.0}));
    EXPECT_EQ(s5a.observables, std::vector<Observable>{Observable::DiscordExact});

    Settings fig5b;
    fig5b.set("preset", "fig5b");
    fig5b.set("seed", "7");
    const auto s5b = build_spec(fig5b);
    EXPECT_EQ(s5b.base.tbar, 0.003);
    EXPECT_EQ(s5b.axes[0].values, (std::vector<double>{0.5, 1.0, 2.0, 3.0}));
    EXPECT_EQ(s5b.axes[1].values.size(), 2000u);
    EXPECT_EQ(s5b.axes[1].values.front(), 1.0);
    EXPECT_EQ(s5b.axes[1].values.back(), 2000.0);
    EXPECT_EQ(s5b.seed, 7u);

    Settings bad;
    bad.set("preset", "fig9");
    EXPECT_THROW(build_spec(bad), ConfigError);
}

TEST(Presets, KeysOverridePreset) {
    Settings s;
    s.set("preset", "fig5a");
    s.set("axis.tbar", "0.25");
    const auto spec = build_spec(s);
    EXPECT_EQ(spec.axes[0].values, std::vector<double>{0.25});
}

TEST(EvalSpec, ParametersBecomeColumns) {
    const auto spec = build_eval_spec(parse_config_text(
        "scheme = B\nphi = pi/4\ntbar = 0.1\nbeta = 3\nperiods = 8\nobservables = concurrence_closed\n"));
    EXPECT_EQ(spec.size(), 1u);
    EXPECT_EQ(spec.columns(), (std::vector<std::string>{"phi", "tbar", "beta", "periods", "concurrence_closed", "error"}));
    EXPECT_THROW(build_eval_spec(parse_config_text("scheme = A\na = 3\naxis.tbar = 1, 2\nbeta = 1\nperiods = 1\n"
                                                   "observables = magnetization\n")),
                 ConfigError);
}

}  // namespace
}  // namespace spinlock
