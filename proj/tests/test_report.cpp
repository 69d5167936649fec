#include "balcone/report.hpp"
#include "balcone/svg.hpp"

#include "doctest.h"
#include "support.hpp"

#include <regex>

using namespace balcone;

namespace {

Ray ray(long x, long y) { return Ray::normalize(x, y); }

ordered_json demo_gap_json() {
    Scenario s = quintic_conifold_scenario();
    ordered_json j = gap_report_to_json(gap_report(s));
    j["kahler_cone"] = cone_to_json(s.kahler_cone);
    j["labels"] = {{"h11", h11_labels(s)}, {"codim", codim_labels(s)}};
    return j;
}

std::size_t count(const std::string &haystack, const std::string &needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("rationals serialize reduced with positive denominator") {
    CHECK(to_string(make_rational(2, -8)) == "-1/4");
    CHECK(to_string(make_rational(-1, 4)) == "-1/4");
    CHECK(to_string(make_rational(8, 2)) == "4");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS(parse_rational("6/-8"));
    CHECK(parse_rational("-6/8") == make_rational(-3, 4));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational(""));

    balcone::testing::Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        Rational q(balcone::testing::uniform(rng, -50, 50),
                   balcone::testing::uniform(rng, 1, 50));
        q.canonicalize();
        std::string s = to_string(q);
        CHECK(std::regex_match(s, std::regex("-?[0-9]+(/[0-9]+)?")));
        CHECK(parse_rational(s) == q);
    }
}

TEST_CASE("format_ray") {
    const std::vector<std::string> codim = {"α∧β", "β∧β"};
    CHECK(format_ray(ray(-1, 4), codim) == "β∧β−¼α∧β");
    CHECK(format_ray(ray(1, 0), codim) == "α∧β");
    CHECK(format_ray(ray(0, 1), codim) == "β∧β");
    CHECK(format_ray(ray(-1, 8), codim) == "β∧β−⅛α∧β");
    CHECK(format_ray(ray(1, 1), codim) == "α∧β+β∧β");
    CHECK(format_ray(ray(2, -7), codim) == "−β∧β+(2/7)α∧β");
    CHECK(format_fraction(make_rational(3, 4)) == "¾");
    CHECK(format_fraction(make_rational(3, 11)) == "3/11");
}

TEST_CASE("gap report JSON round-trips") {
    Scenario s = quintic_conifold_scenario();
    GapReport g = gap_report(s);
    CHECK(gap_report_from_json(gap_report_to_json(g)) == g);
    CHECK(gap_report_from_json(ordered_json::parse(gap_report_to_json(g).dump())) == g);

    balcone::testing::Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        Cone2D inner = balcone::testing::random_cone(rng);
        Cone2D outer = balcone::testing::random_cone(rng);
        GapReport r{inner, outer, is_subcone(inner, outer), {}};
        if (r.inclusion.strict)
            r.gaps = gap_wedges(inner, outer);
        CHECK(gap_report_from_json(gap_report_to_json(r)) == r);
    }

    ordered_json broken = gap_report_to_json(g);
    broken.erase("balanced_cone");
    CHECK_THROWS_AS(gap_report_from_json(broken), DocumentError);
}

TEST_CASE("TextTable aligns by code points") {
    TextTable t;
    t.heading("h");
    t.row("α", "1");
    t.row("ab", "2");
    CHECK(t.str() == "h\n  α   1\n  ab  2\n");
    TextTable c(true);
    c.heading("h");
    CHECK(c.str() == "\x1b[1mh\x1b[0m\n");
}

TEST_CASE("svg_render") {
    std::string a = render_svg(demo_gap_json());
    std::string b = render_svg(demo_gap_json());
    CHECK(a == b);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(count(a, "<path") == 3);
    CHECK(count(a, "class=\"kahler\"") == 1);
    CHECK(count(a, "class=\"balanced\"") == 1);
    CHECK(count(a, "class=\"image\"") == 1);
    CHECK(a.find(">α∧β<") != std::string::npos);
    CHECK(a.find(">β∧β−¼α∧β<") != std::string::npos);
    CHECK(a.find(">α<") != std::string::npos);
    CHECK(a.find(">β<") != std::string::npos);

    ordered_json missing = demo_gap_json();
    missing.erase("image_closure");
    CHECK_THROWS_AS(render_svg(missing), DocumentError);
    ordered_json no_labels = demo_gap_json();
    no_labels.erase("labels");
    CHECK_THROWS_AS(render_svg(no_labels), DocumentError);
    CHECK_THROWS_AS(render_svg(ordered_json::object()), DocumentError);
}

TEST_CASE("svg labels are escaped") {
    ordered_json j = demo_gap_json();
    j["labels"]["h11"] = {"<a>", "b&c"};
    std::string svg = render_svg(j);
    CHECK(svg.find("&lt;a&gt;") != std::string::npos);
    CHECK(svg.find("b&amp;c") != std::string::npos);
}

TEST_CASE("write_file reports unwritable paths") {
    CHECK_THROWS_AS(write_file("/nonexistent-dir/x.svg", "x"), std::runtime_error);
}
