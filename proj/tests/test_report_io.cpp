#include <catch2/catch_amalgamated.hpp>

#include "reidlab/campaign.hpp"

using namespace reidlab;
using Catch::Approx;

TEST_CASE("matrix json round trip is lossless") {
    SeededSource src(701, 0);
    for (std::size_t dim : {1, 2, 5, 9}) {
        ComplexMatrix m = gen_matrix(dim, src);
        ComplexMatrix back = matrix_from_json(to_json(m));
        CHECK(frobenius_norm(back - m) == 0.0);
    }
}

TEST_CASE("vector json round trip is lossless") {
    SeededSource src(702, 0);
    Vector x = gen_vector(6, src);
    Vector back = vector_from_json(to_json(x));
    REQUIRE(back.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(back[i] == x[i]);
}

TEST_CASE("malformed payloads are rejected") {
    CHECK_THROWS_AS(matrix_from_json(Json{{"dim", 2}}), ValueError);
    Json bad = to_json(ComplexMatrix::identity(2));
    bad["dim"] = 3; // dim disagrees with the data block
    CHECK_THROWS_AS(matrix_from_json(bad), DimensionError);
    Json badvec = Json{{"dim", 2}, {"data", Json::array({Json::array({1.0, 0.0})})}};
    CHECK_THROWS_AS(vector_from_json(badvec), DimensionError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ValueError);
}

TEST_CASE("check reports serialize with all campaign fields present") {
    CheckConfig cfg;
    cfg.check = "reid";
    cfg.mode = HypothesisMode::classic;
    cfg.dims = {3};
    cfg.trials = 25;
    cfg.seed = 11;
    CheckReport report = run_check(cfg);
    Json j = to_json(report);
    CHECK(j.at("check_name").get<std::string>() == "reid");
    CHECK(j.at("hypothesis_mode").get<std::string>() == "classic");
    CHECK(j.at("trials").get<long>() == 25);
    CHECK(j.at("seed").get<std::uint64_t>() == 11);
    CHECK(j.at("verdict").get<std::string>() == "pass");
    CHECK(j.at("worst_margin").get<double>() ==
          Approx(j.at("worst_rhs").get<double>() - j.at("worst_lhs").get<double>()));
    CHECK(j.contains("tolerance_profile"));
    CHECK(j.contains("hypothesis_defects"));
    CHECK(j.at("worst_witness").contains("matrices"));
}

TEST_CASE("campaigns are deterministic: same config, byte-identical report") {
    CheckConfig cfg;
    cfg.check = "kittaneh";
    cfg.dims = {2, 3, 4};
    cfg.trials = 50;
    cfg.seed = 99;
    std::string a = to_json(run_check(cfg)).dump(2);
    std::string b = to_json(run_check(cfg)).dump(2);
    CHECK(a == b);
}

TEST_CASE("every registered check runs end to end on a small budget") {
    for (const std::string& name : registered_checks()) {
        CheckConfig cfg;
        cfg.check = name;
        cfg.mode = HypothesisMode::classic;
        cfg.dims = {3};
        cfg.trials = 10;
        cfg.seed = 5;
        CheckReport r = run_check(cfg);
        INFO(name);
        CHECK(r.verdict == Verdict::pass);
    }
}

TEST_CASE("unknown checks and impossible configurations are refused") {
    CheckConfig cfg;
    cfg.check = "no-such-check";
    CHECK_THROWS_AS(run_check(cfg), ValueError);

    cfg.check = "power-monotone";
    cfg.commuting = false; // would demand monotonicity that fails in general
    cfg.dims = {2};
    cfg.trials = 1;
    CHECK_THROWS_AS(run_check(cfg), HypothesisError);
}

TEST_CASE("fuzz mode reports a violation verdict instead of throwing") {
    CheckConfig cfg;
    cfg.check = "reid";
    cfg.mode = HypothesisMode::none;
    cfg.dims = {3};
    cfg.trials = 20000;
    cfg.seed = 1;
    CheckReport r = run_fuzz(cfg);
    CHECK(r.verdict == Verdict::violation);
    CHECK(r.worst_margin < 0.0);
    CHECK(r.worst_witness.matrices.count("A") == 1);
    CHECK(r.worst_witness.matrices.count("K") == 1);
}

TEST_CASE("counterexample runs produce violation reports with exact payloads") {
    CheckReport r = run_counterexample("quasinormal-shift", 8, {});
    CHECK(r.verdict == Verdict::violation);
    CHECK(r.worst_lhs == 2.0);
    CHECK(r.worst_rhs == 1.0);
    CHECK(r.worst_margin == -1.0);

    CheckReport sq = run_counterexample("squaring-noncommuting", 2, {});
    CHECK(sq.verdict == Verdict::violation);
    CHECK(sq.worst_margin == Approx((3.0 - std::sqrt(13.0)) / 2.0).margin(1e-12));
}
