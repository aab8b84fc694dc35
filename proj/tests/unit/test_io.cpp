#include "liexp/constructions.hpp"
#include "liexp/expansion.hpp"
#include "liexp/pipeline.hpp"
#include "liexp/transgression.hpp"

#include <doctest.h>

#include <filesystem>

using namespace liexp;

#ifndef LIEXP_DATA_DIR
#define LIEXP_DATA_DIR "data"
#endif

namespace {

DataPaths data_paths() {
    DataPaths p;
    p.root = LIEXP_DATA_DIR;
    p.config_dir = p.root + "/configs";
    return p;
}

}  // namespace

TEST_CASE("JSON round trips") {
    for (const Semigroup& s : {make_cyclic(5), make_se(3), make_klein()}) CHECK(semigroup_from_json(to_json(s)) == s);
    const LieAlgebra b = h_reduce(2, make_named("ads3"));
    CHECK(algebra_from_json(to_json(b)) == b);
    CHECK(algebra_from_json(Json::parse(format_json(to_json(b)))) == b);
    const CAlgebra c = make_c_algebra(3);
    CHECK(tensor_from_json(to_json(c.rotated_tensor)) == c.rotated_tensor);
    CHECK(algebra_from_json(to_json(c.rotated)).same_constants(c.rotated));
    const ScalarExpr x = ScalarExpr::parse("3/4*ell^-1*alpha0 - 2*alpha3");
    CHECK(scalar_from_json(to_json(x)) == x);
    const auto a = build_connection(c.rotated, 3, gravity_connection({Field::omega, Field::e, Field::h}));
    const ScalarForm f = chern_simons(a, c.rotated_tensor, c.rotated);
    CHECK(form_from_json(to_json(f)) == f);
}

TEST_CASE("output is deterministic") {
    const CAlgebra c = make_c_algebra(3);
    CHECK(format_json(to_json(c.rotated)) == format_json(to_json(make_c_algebra(3).rotated)));
    CHECK(format_json(to_json(c.rotated_tensor)) == format_json(to_json(make_c_algebra(3).rotated_tensor)));
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"name": "x", "order": 2, "table": [[0, 1]]})")), std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"name": "x"})")), std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"([{"alpha": 0, "ell": 0, "q": "x/"}])")), std::invalid_argument);
}

TEST_CASE("fixture files equal the builders") {
    const DataPaths p = data_paths();
    for (const char* name : {"so3", "so31", "so4", "ads3", "ads5"}) {
        CAPTURE(name);
        const LieAlgebra l = load_algebra(Json(name), p);
        CHECK(l == make_named(name));
    }
}

TEST_CASE("golden files parse") {
    for (const auto& entry : std::filesystem::directory_iterator(std::string(LIEXP_DATA_DIR) + "/golden")) {
        CAPTURE(entry.path().string());
        const TargetExpression t = load_target(entry.path().string());
        CHECK((t.dimension == 3 || t.dimension == 5));
        CHECK_FALSE(t.terms.empty());
    }
}

TEST_CASE("pipeline type checks") {
    const DataPaths p = data_paths();
    CHECK_THROWS_AS(run_pipeline(Json::parse(R"({"algebra": "so3", "steps": [{"op": "zero_reduce"}]})"), p), ConfigError);
    CHECK_THROWS_AS(run_pipeline(Json::parse(R"({"algebra": "so3", "steps": [{"op": "s_expand", "semigroup": "Z3"}, {"op": "zero_reduce"}]})"), p),
                    ConfigError);
    CHECK_THROWS_AS(run_pipeline(Json::parse(R"({"algebra": "so3", "steps": [{"op": "s_expand", "semigroup": "Z3"}, {"op": "h_reduce", "n": 2}]})"), p),
                    ConfigError);
    CHECK_THROWS_AS(run_pipeline(Json::parse(R"({"algebra": "so3", "steps": [{"op": "frobnicate"}]})"), p), ConfigError);
    CHECK_THROWS(run_pipeline(Json::parse(R"({"algebra": "nosuch"})"), p));
}

TEST_CASE("h_reduce through a Z4 expansion equals the direct reduction") {
    const DataPaths p = data_paths();
    const PipelineResult via = run_pipeline(Json::parse(R"({"algebra": "ads3", "steps": [{"op": "s_expand", "semigroup": "Z4"}, {"op": "h_reduce", "n": 2}]})"), p);
    CHECK(via.algebra.same_constants(h_reduce(2, make_named("ads3"))));
    const PipelineResult direct = run_pipeline(Json::parse(R"({"algebra": "ads3", "steps": [{"op": "h_reduce", "n": 2}]})"), p);
    CHECK(direct.algebra.same_constants(via.algebra));
}

TEST_CASE("C5 config matches the construction") {
    const DataPaths p = data_paths();
    const Json cfg = read_json_file(p.config_dir + "/c5.json");
    const PipelineResult r = run_pipeline(cfg, p);
    const CAlgebra c = make_c_algebra(5);
    CHECK(r.algebra.same_constants(c.rotated));
    CHECK(build_tensor(cfg.at("tensor"), r) == c.rotated_tensor);
}

TEST_CASE("empty pipeline echoes the input") {
    const PipelineResult r = run_pipeline(Json::parse(R"({"algebra": "so3"})"), data_paths());
    CHECK(r.algebra == make_named("so3"));
}
