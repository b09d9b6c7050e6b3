// Copyright 2026 The Bellkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellkit/io.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace bellkit;
using bellkit::io::Json;
using bellkit::testing::error_code_of;

namespace {

const std::string kData = BELLKIT_TEST_DATA;

std::string message_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(io, format_fixed) {
    EXPECT_EQ(io::format_fixed(1.0), "1.000000000");
    EXPECT_EQ(io::format_fixed(-0.25), "-0.250000000");
    EXPECT_EQ(io::format_fixed(-0.0), "0.000000000");
    EXPECT_EQ(io::format_fixed(-1e-12), "0.000000000");
    EXPECT_EQ(io::format_fixed(2.0 / 3), "0.666666667");
    EXPECT_EQ(io::format_fixed(1e-9), "0.000000001");
    EXPECT_EQ(io::format_fixed(M_PI / 2), "1.570796327");
}

TEST(io, dump_fixed_layout) {
    Json j;
    j["a"] = 0.5;
    j["b"] = Json::array({1.0, 2.0});
    j["c"] = "x";
    j["d"] = true;
    j["e"] = 3;
    EXPECT_EQ(io::dump_fixed(j),
              "{\n  \"a\": 0.500000000,\n  \"b\": [1.000000000, 2.000000000],\n  \"c\": \"x\",\n  \"d\": true,\n"
              "  \"e\": 3\n}\n");
}

TEST(io, parse_errors_name_the_source) {
    const std::string msg = message_of([] { io::parse_text("{\"kind\": ", "broken.json"); });
    EXPECT_NE(msg.find("ParseError"), std::string::npos);
    EXPECT_NE(msg.find("broken.json"), std::string::npos);
    EXPECT_EQ(error_code_of([] { io::read_file("/nonexistent/file.json"); }), ErrorCode::ParseError);
}

TEST(io, parse_errors_carry_json_paths) {
    const Json missing = Json::parse(R"({"kind": "density_operator"})");
    EXPECT_NE(message_of([&] { io::density_from_json(missing); }).find("$.matrix"), std::string::npos);

    const Json bad_entry = Json::parse(R"({"kind": "density_operator", "matrix": [[[1, 0], [0]], [[0, 0], [0, 0]]]})");
    EXPECT_NE(message_of([&] { io::density_from_json(bad_entry); }).find("$.matrix[0][1]"), std::string::npos);

    const Json wrong_kind = Json::parse(R"({"kind": "povm"})");
    EXPECT_NE(message_of([&] { io::density_from_json(wrong_kind); }).find("$.kind"), std::string::npos);

    const Json bad_trace = io::read_file(kData + "/bad_trace.json");
    const std::string msg = message_of([&] { io::density_from_json(bad_trace); });
    EXPECT_NE(msg.find("TraceNotOne"), std::string::npos);
    EXPECT_NE(msg.find("$.matrix"), std::string::npos);

    const Json bad_term = Json::parse(
        R"({"kind": "separable_representation", "terms": [{"weight": 1, "left": [[[1, 0]]], "right": [[[2, 0]]]}]})");
    EXPECT_NE(message_of([&] { io::representation_from_json(bad_term); }).find("$.terms[0].right"), std::string::npos);
}

TEST(io, density_round_trip) {
    std::mt19937_64 rng(1);
    const auto rep = random_product_representation(rng, 2, 3, 3, false);
    const DensityOperator rho = assemble(rep);
    const DensityOperator back = io::density_from_json(io::density_to_json(rho));
    EXPECT_EQ(back.matrix(), rho.matrix());
    EXPECT_EQ(back.factor_dims(), rho.factor_dims());
    const Json file = io::read_file(kData + "/rho_zero.json");
    EXPECT_EQ(io::density_from_json(file).matrix(), rho_zero().matrix());
}

TEST(io, representation_round_trip) {
    std::mt19937_64 rng(2);
    const auto rep = random_product_representation(rng, 2, 2, 4, true);
    const auto back = io::representation_from_json(io::representation_to_json(rep));
    EXPECT_EQ(back.symmetrized(), rep.symmetrized());
    ASSERT_EQ(back.terms().size(), rep.terms().size());
    for (std::size_t m = 0; m < rep.terms().size(); ++m) {
        EXPECT_EQ(back.terms()[m].weight, rep.terms()[m].weight);
        EXPECT_EQ(back.terms()[m].left.matrix(), rep.terms()[m].left.matrix());
        EXPECT_EQ(back.terms()[m].right.matrix(), rep.terms()[m].right.matrix());
    }
}

TEST(io, povm_round_trip_and_shorthand) {
    std::mt19937_64 rng(3);
    const auto p = random_povm(rng, 3, 1.7, true, "noisy");
    const auto back = io::povm_from_json(io::povm_to_json(p));
    EXPECT_EQ(back.label(), "noisy");
    EXPECT_EQ(back.outcomes().values(), p.outcomes().values());
    EXPECT_EQ(back.bound(), 1.7);
    EXPECT_EQ(effect_operator(back), effect_operator(p));

    const auto shorthand = io::povm_from_json(io::read_file(kData + "/spin_b_shorthand.json"));
    const auto full = io::povm_from_json(io::read_file(kData + "/spin_b.json"));
    EXPECT_LE(max_abs_diff(effect_operator(shorthand), effect_operator(full)), 1e-12);
}

TEST(io, model_round_trip_and_errors) {
    const LhvModel m = random_model(5, 4, {{"A", 1.0}, {"B", 0.5}});
    const LhvModel back = io::model_from_json(io::model_to_json(m));
    EXPECT_EQ(back.points(), m.points());
    EXPECT_EQ(back.probabilities(), m.probabilities());
    EXPECT_EQ(back.observable("B").values, m.observable("B").values);
    EXPECT_EQ(back.observable("B").bound, 0.5);
    EXPECT_EQ(error_code_of([] { io::model_from_json(io::read_file(kData + "/bad_distribution_model.json")); }),
              ErrorCode::InvalidDistribution);
}

TEST(io, sweep_config_parsing) {
    const auto bell = io::sweep_request_from_json(io::read_file(kData + "/sweep_bell.json"), kData);
    EXPECT_EQ(bell.mode, io::SweepMode::Grid);
    EXPECT_EQ(bell.config.target, SweepTarget::BellOriginal);
    EXPECT_EQ(bell.config.resolution, 64u);
    ASSERT_TRUE(std::holds_alternative<DensityOperator>(bell.config.state));
    EXPECT_EQ(std::get<DensityOperator>(bell.config.state).matrix(), rho_zero().matrix());

    const auto sound = io::sweep_request_from_json(io::read_file(kData + "/sweep_soundness.json"), kData);
    EXPECT_EQ(sound.mode, io::SweepMode::Soundness);
    EXPECT_EQ(sound.config.sample_count, 1000u);

    const Json bad_target = Json::parse(R"({"kind": "sweep_config", "target": "nope", "state": "rho_zero"})");
    EXPECT_NE(message_of([&] { io::sweep_request_from_json(bad_target); }).find("$.target"), std::string::npos);
    const Json bad_res = Json::parse(R"({"kind": "sweep_config", "resolution": 1, "state": "rho_zero"})");
    EXPECT_NE(message_of([&] { io::sweep_request_from_json(bad_res); }).find("$.resolution"), std::string::npos);
    const Json bad_gamma = Json::parse(R"({"kind": "sweep_config", "gamma": [0, 0, 0, 0], "state": "rho_zero"})");
    EXPECT_NE(message_of([&] { io::sweep_request_from_json(bad_gamma); }).find("ZeroGammas"), std::string::npos);
}

TEST(io, csv_output) {
    SweepConfig cfg;
    cfg.state = rho_zero();
    cfg.resolution = 2;
    cfg.retain = RetainPolicy::All;
    const std::string csv = io::sweep_rows_to_csv(run_grid_sweep(cfg));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "setting0,setting1,setting2,lhs,rhs,slack,violated");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
    EXPECT_EQ(csv.find('\r'), std::string::npos);

    const auto r = make_report("x", 1, 0.75, 1e-9, {});
    EXPECT_EQ(io::report_to_csv(r),
              "name,lhs,rhs,slack,violated,tol\nx,1.000000000,0.750000000,-0.250000000,true,0.000000001\n");
}

TEST(io, schemas_cover_all_inputs) {
    const Json s = io::schemas();
    for (const char *k : {"density_operator", "separable_representation", "povm", "spin_observable", "lhv_model",
                          "sweep_config"}) {
        EXPECT_TRUE(s.contains(k)) << k;
    }
}
