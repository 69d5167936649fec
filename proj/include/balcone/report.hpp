#pragma once

#include "balcone/pipeline.hpp"
#include "balcone/scenario_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace balcone {

struct Report {
    ordered_json machine;
    std::string text;
    std::optional<std::string> svg;
};

// Ray written in a named basis with its largest coefficient scaled to 1,
// e.g. (-1, 4) over (α∧β, β∧β) becomes "β∧β−¼α∧β".
std::string format_ray(const Ray &r, const std::vector<std::string> &names);

// Unicode vulgar fraction where one exists ("¼"), otherwise "p/q".
std::string format_fraction(const Rational &q);

ordered_json rational_to_json_string(const Rational &q);
ordered_json pairing_to_json(const Scenario &s, const PairingMatrix &pm);
ordered_json gap_report_to_json(const GapReport &g);
// Inverse of gap_report_to_json; throws DocumentError on malformed input.
GapReport gap_report_from_json(const ordered_json &j);

std::vector<std::string> h11_labels(const Scenario &s);
std::vector<std::string> codim_labels(const Scenario &s);

// Two-column text with the first column padded to a common display width.
class TextTable {
  public:
    explicit TextTable(bool color = false) : color_(color) {}
    void heading(const std::string &title);
    void row(const std::string &key, const std::string &value);
    std::string str() const;

  private:
    struct Line {
        bool heading;
        std::string key;
        std::string value;
    };
    bool color_;
    std::vector<Line> lines_;
};

// Number of code points, which is the display width for the labels used
// here.
std::size_t display_width(const std::string &utf8);

} // namespace balcone
