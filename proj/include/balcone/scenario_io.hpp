#pragma once

// JSON scenario documents.
//
//   {
//     "ambient": [4, 1],
//     "divisors": [[1, 1], [4, 1]],
//     "h11_basis": [{"name": "alpha", "label": "α", "multidegree": [0, 1]},
//                   {"name": "beta",  "label": "β", "multidegree": [1, 0]}],
//     "codim_basis": [{"name": "alpha*beta", "expression": "alpha*beta"},
//                     {"name": "beta*beta",  "expression": "beta*beta"}],
//     "kahler_cone": [[1, 0], [0, 1]],
//     "effective_cone": [[1, 0], [-1, 1]],
//     "prime_divisors": [{"name": "E1", "class": [-1, 1]}]
//   }
//
// Integers may be JSON numbers or decimal strings; rationals may also be
// "p/q" strings. See docs/scenario-format.md.

#include "balcone/errors.hpp"
#include "balcone/pipeline.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace balcone {

using ordered_json = nlohmann::ordered_json;

// A parse or validation error located in a document: either a JSON pointer
// ("/kahler_cone/0") or, for syntax errors, a 1-based line and column.
class DocumentError : public ValidationError {
  public:
    DocumentError(std::string path, const std::string &reason);
    DocumentError(int line, int column, const std::string &reason);

    const std::string &path() const { return path_; }
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    std::string path_;
    int line_ = 0;
    int column_ = 0;
};

Scenario parse_scenario(std::string_view text);
Scenario scenario_from_json(const ordered_json &doc);

ordered_json scenario_to_json(const Scenario &s);
std::string serialize_scenario(const Scenario &s);

// The built-in quintic conifold scenario as a document.
std::string demo_scenario_document();

// Parses sums of products of h11 names with rational coefficients, e.g.
// "beta*beta - 1/4*alpha*beta" or "beta^2".
CohomClass parse_class_expression(std::string_view expr,
                                  const std::vector<BasisElement> &h11_basis);

// JSON encodings shared with reports. Integers that fit in 64 bits are
// emitted as numbers, anything larger as decimal strings.
ordered_json integer_to_json(const Integer &z);
Integer integer_from_json(const ordered_json &j, const std::string &path);
Rational rational_from_json(const ordered_json &j, const std::string &path);
ordered_json ray_to_json(const Ray &r);
Ray ray_from_json(const ordered_json &j, const std::string &path);
ordered_json cone_to_json(const Cone2D &c);
Cone2D cone_from_json(const ordered_json &j, const std::string &path);

} // namespace balcone
