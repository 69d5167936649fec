#include "balcone/cli.hpp"

#include "doctest.h"

using namespace balcone;

namespace {

Report run_on_demo(const std::string &cmd, std::vector<std::string> args = {}) {
    RunOptions o;
    o.args = std::move(args);
    return run(cmd, quintic_conifold_scenario(), o);
}

int code_of(const std::string &cmd, std::vector<std::string> args = {}) {
    try {
        run_on_demo(cmd, std::move(args));
    } catch (const std::exception &e) {
        return exit_code_for(e);
    }
    return kExitOk;
}

} // namespace

TEST_CASE("demo report") {
    Report r = run_on_demo("demo");
    const ordered_json &m = r.machine;
    CHECK(m["dim"] == 3);
    bool found4 = false, found5 = false;
    for (const auto &n : m["intersection_numbers"]) {
        if (n["factors"] == ordered_json({"alpha", "beta", "beta"}))
            found4 = n["value"] == "4";
        if (n["factors"] == ordered_json({"beta", "beta", "beta"}))
            found5 = n["value"] == "5";
    }
    CHECK(found4);
    CHECK(found5);
    CHECK(m["pairing"]["matrix"] == ordered_json::array({ordered_json::array({"0", "4"}), ordered_json::array({"4", "5"})}));
    CHECK(m["pairing"]["determinant"] == "-16");
    CHECK(m["balanced_cone"] == ordered_json({{1, 0}, {-1, 4}}));
    CHECK(m["image_closure"] == ordered_json({{1, 0}, {0, 1}}));
    CHECK(m["strict"] == true);
    CHECK(m["gaps"][0]["witness"] == ordered_json({-1, 8}));
    CHECK(m["balanced_rays"] == ordered_json({"α∧β", "β∧β−¼α∧β"}));
    CHECK(m["bound"]["functional"] == ordered_json({"16", "16"}));
    CHECK(m["certificate"]["ok"] == true);
    CHECK(r.text.find("balanced cone bounded by α∧β and β∧β−¼α∧β") !=
          std::string::npos);
}

TEST_CASE("intersect") {
    CHECK(run_on_demo("intersect", {"alpha", "beta", "beta"}).text == "4\n");
    CHECK(run_on_demo("intersect", {"α", "β", "β"}).text == "4\n");
    CHECK(run_on_demo("intersect", {"beta", "beta", "beta"}).machine["value"] == "5");
    CHECK(run_on_demo("intersect", {"alpha", "beta*beta"}).text == "4\n");
    CHECK_THROWS_AS(run_on_demo("intersect", {"alpha", "beta"}), DegreeMismatchError);
    CHECK_THROWS_AS(run_on_demo("intersect", {"alpha", "gamma", "beta"}), UsageError);
    CHECK_THROWS_AS(run_on_demo("intersect"), UsageError);
}

TEST_CASE("other commands") {
    CHECK(run_on_demo("pairing").machine["pairing"]["non_degenerate"] == true);
    CHECK(run_on_demo("dual").machine["dual"] == ordered_json({{1, 0}, {-1, 4}}));
    CHECK(run_on_demo("dual", {"kahler"}).machine["dual"] ==
          ordered_json({{1, 0}, {-5, 4}}));
    CHECK(run_on_demo("image").machine["image_closure"] ==
          ordered_json({{1, 0}, {0, 1}}));
    CHECK(run_on_demo("balanced").machine["balanced_rays"][1] == "β∧β−¼α∧β");
    CHECK(run_on_demo("gap").machine["gaps"].size() == 1);
    CHECK(run_on_demo("bound", {"E1", "3", "4"}).machine["functional"] ==
          ordered_json({"16", "16"}));
    CHECK(run_on_demo("bound", {"E1", "1", "1"}).machine["functional"] ==
          ordered_json({"4", "5"}));
    Report svg = run_on_demo("render");
    REQUIRE(svg.svg);
    CHECK(svg.svg->rfind("<svg", 0) == 0);
}

TEST_CASE("render from a saved report") {
    RunOptions o;
    o.report = run_on_demo("demo").machine;
    Report r = run("render", quintic_conifold_scenario(), o);
    CHECK(*r.svg == *run_on_demo("render").svg);
    o.report = ordered_json{{"command", "pairing"}};
    CHECK_THROWS_AS(run("render", quintic_conifold_scenario(), o), DocumentError);
}

TEST_CASE("exit codes") {
    CHECK(code_of("demo") == kExitOk);
    CHECK(code_of("frobnicate") == kExitUsage);
    CHECK(code_of("intersect", {"nope"}) == kExitUsage);
    CHECK(code_of("bound", {"E9", "1", "1"}) == kExitUsage);
    CHECK(code_of("bound", {"E1", "x", "1"}) == kExitUsage);
    CHECK(code_of("dual", {"sideways"}) == kExitUsage);
    CHECK(code_of("intersect", {"alpha", "beta"}) == kExitValidation);
    CHECK(code_of("bound", {"E1", "0", "1"}) == kExitValidation);
    CHECK(exit_code_for(ComputationError("x")) == kExitComputation);
}

TEST_CASE("degenerate balanced map is a computation error") {
    // On a curve the balanced map is constant, so its image is a point.
    AmbientSpace p1p1 = AmbientSpace::make({1, 1});
    CohomClass h1 = CohomClass::generator(p1p1, 0);
    CohomClass h2 = CohomClass::generator(p1p1, 1);
    Scenario curve{CompleteIntersection::make(p1p1, {{{1, 1}}}),
                   {{"h1", "", h1, ""}, {"h2", "", h2, ""}},
                   {{"one", "", CohomClass::one(p1p1), "1"},
                    {"two", "", Rational(2) * CohomClass::one(p1p1), "2"}},
                   Cone2D::make(Ray::normalize(1, 0), Ray::normalize(0, 1)),
                   Cone2D::make(Ray::normalize(1, 0), Ray::normalize(0, 1)),
                   {}};
    RunOptions o;
    try {
        run("image", curve, o);
        FAIL("expected an error");
    } catch (const std::exception &e) {
        CHECK(exit_code_for(e) == kExitComputation);
    }
}
