#include "balcone/scenario_io.hpp"

#include <cctype>
#include <limits>

namespace balcone {

DocumentError::DocumentError(std::string path, const std::string &reason)
    : ValidationError((path.empty() ? "/" : path) + ": " + reason),
      path_(std::move(path)) {}

DocumentError::DocumentError(int line, int column, const std::string &reason)
    : ValidationError("line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + reason),
      line_(line), column_(column) {}

ordered_json integer_to_json(const Integer &z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const ordered_json &j, const std::string &path) {
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_number_unsigned()) {
        Integer z;
        mpz_set_str(z.get_mpz_t(), std::to_string(j.get<unsigned long>()).c_str(),
                    10);
        return z;
    }
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const ValidationError &e) {
            throw DocumentError(path, e.what());
        }
    }
    throw DocumentError(path, "expected an integer");
}

Rational rational_from_json(const ordered_json &j, const std::string &path) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ValidationError &e) {
            throw DocumentError(path, e.what());
        }
    }
    return Rational(integer_from_json(j, path));
}

ordered_json ray_to_json(const Ray &r) {
    return ordered_json::array({integer_to_json(r.x()), integer_to_json(r.y())});
}

ordered_json cone_to_json(const Cone2D &c) {
    return ordered_json::array({ray_to_json(c.r1()), ray_to_json(c.r2())});
}

namespace {

const ordered_json &require(const ordered_json &obj, const char *key,
                            const std::string &path) {
    if (!obj.is_object())
        throw DocumentError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw DocumentError(path + "/" + key, "missing required key");
    return *it;
}

const ordered_json &require_array(const ordered_json &j,
                                  const std::string &path) {
    if (!j.is_array())
        throw DocumentError(path, "expected an array");
    return j;
}

std::string require_string(const ordered_json &j, const std::string &path) {
    if (!j.is_string())
        throw DocumentError(path, "expected a string");
    return j.get<std::string>();
}

int small_int(const ordered_json &j, const std::string &path) {
    Integer z = integer_from_json(j, path);
    if (!z.fits_sint_p())
        throw DocumentError(path, "integer out of range");
    return static_cast<int>(z.get_si());
}

std::vector<int> int_list(const ordered_json &j, const std::string &path) {
    std::vector<int> out;
    for (std::size_t i = 0; i < require_array(j, path).size(); ++i)
        out.push_back(small_int(j[i], path + "/" + std::to_string(i)));
    return out;
}

Vec2 vec_from_json(const ordered_json &j, const std::string &path) {
    if (!j.is_array() || j.size() != 2)
        throw DocumentError(path, "expected a pair");
    return {rational_from_json(j[0], path + "/0"),
            rational_from_json(j[1], path + "/1")};
}

bool is_name_byte(unsigned char c, bool first) {
    return std::isalpha(c) || c == '_' || c >= 0x80 ||
           (!first && std::isdigit(c));
}

// Recursive-descent parser over
//   expr   := [sign] term (sign term)*
//   term   := factor (['*'] factor)*   (bare juxtaposition after a number)
//   factor := integer ['/' integer] | name ['^' integer]
class ExpressionParser {
  public:
    ExpressionParser(std::string_view text,
                     const std::vector<BasisElement> &basis)
        : text_(text), basis_(basis) {}

    CohomClass parse() {
        if (basis_.empty())
            fail("no h11 basis to refer to");
        const AmbientSpace &space = basis_.front().cls.space();
        CohomClass total = CohomClass::zero(space);
        skip_space();
        bool negative = false;
        if (peek() == '+' || peek() == '-')
            negative = take() == '-';
        for (;;) {
            CohomClass t = term(space);
            total += negative ? -t : t;
            skip_space();
            if (at_end())
                break;
            char c = take();
            if (c != '+' && c != '-')
                fail(std::string("unexpected '") + c + "'");
            negative = c == '-';
        }
        return total;
    }

  private:
    // A numeric factor may be followed directly by a name: "3 beta".
    CohomClass term(const AmbientSpace &space) {
        CohomClass t = CohomClass::one(space);
        for (;;) {
            skip_space();
            bool numeric = std::isdigit(static_cast<unsigned char>(peek()));
            t = t * factor(space);
            skip_space();
            if (peek() == '*') {
                take();
                skip_space();
            } else if (!(numeric && !at_end() &&
                         is_name_byte(static_cast<unsigned char>(peek()), true))) {
                return t;
            }
        }
    }

    CohomClass factor(const AmbientSpace &space) {
        skip_space();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (peek() == '/') {
                take();
                num += "/" + digits();
            }
            return parse_rational(num) * CohomClass::one(space);
        }
        std::string name = identifier();
        const BasisElement *b = nullptr;
        for (const auto &e : basis_)
            if (e.name == name || e.label == name)
                b = &e;
        if (!b)
            fail("unknown h11 name '" + name + "'");
        CohomClass f = b->cls;
        skip_space();
        if (peek() == '^') {
            take();
            skip_space();
            int n = std::stoi(digits());
            f = CohomClass::one(space);
            for (int i = 0; i < n; ++i)
                f = f * b->cls;
        }
        return f;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (!at_end() &&
               is_name_byte(static_cast<unsigned char>(peek()), pos_ == start))
            ++pos_;
        if (start == pos_)
            fail(at_end() ? "unexpected end of expression"
                          : std::string("unexpected '") + peek() + "'");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string &why) const {
        throw ValidationError("expression '" + std::string(text_) + "': " +
                              why);
    }

    std::string_view text_;
    const std::vector<BasisElement> &basis_;
    std::size_t pos_ = 0;
};

// "alpha*beta" -> "α∧β" when the expression is a plain product of names.
std::string derived_label(const std::string &expr,
                          const std::vector<BasisElement> &basis) {
    std::string out;
    std::size_t start = 0;
    for (;;) {
        std::size_t star = expr.find('*', start);
        std::string name = expr.substr(start, star == std::string::npos
                                                  ? std::string::npos
                                                  : star - start);
        const BasisElement *b = nullptr;
        for (const auto &e : basis)
            if (e.name == name)
                b = &e;
        if (!b)
            return expr;
        out += (out.empty() ? "" : "∧") + b->display();
        if (star == std::string::npos)
            return out;
        start = star + 1;
    }
}

Cone2D cone_json(const ordered_json &j, const std::string &path) {
    if (!j.is_array() || j.size() != 2)
        throw DocumentError(path, "expected two rays");
    Ray a = ray_from_json(j[0], path + "/0");
    Ray b = ray_from_json(j[1], path + "/1");
    try {
        return Cone2D::make(a, b);
    } catch (const ComputationError &e) {
        throw DocumentError(path, e.what());
    }
}

} // namespace

Ray ray_from_json(const ordered_json &j, const std::string &path) {
    if (!j.is_array() || j.size() != 2)
        throw DocumentError(path, "expected an integer pair");
    Integer x = integer_from_json(j[0], path + "/0");
    Integer y = integer_from_json(j[1], path + "/1");
    if (x == 0 && y == 0)
        throw DocumentError(path, "zero vector does not span a ray");
    return Ray::normalize(x, y);
}

Cone2D cone_from_json(const ordered_json &j, const std::string &path) {
    return cone_json(j, path);
}

CohomClass parse_class_expression(std::string_view expr,
                                  const std::vector<BasisElement> &h11_basis) {
    return ExpressionParser(expr, h11_basis).parse();
}

Scenario scenario_from_json(const ordered_json &doc) {
    if (!doc.is_object())
        throw DocumentError("", "scenario document must be an object");

    std::vector<int> dims = int_list(require(doc, "ambient", ""), "/ambient");
    AmbientSpace space = [&] {
        try {
            return AmbientSpace::make(dims);
        } catch (const ValidationError &e) {
            throw DocumentError("/ambient", e.what());
        }
    }();

    std::vector<MultiDegree> divisors;
    const auto &div = require_array(require(doc, "divisors", ""), "/divisors");
    for (std::size_t i = 0; i < div.size(); ++i) {
        std::string path = "/divisors/" + std::to_string(i);
        MultiDegree d{int_list(div[i], path)};
        if (static_cast<int>(d.d.size()) != space.factors())
            throw DocumentError(path, "multidegree length must equal the "
                                      "number of ambient factors");
        for (int x : d.d)
            if (x < 0)
                throw DocumentError(path, "multidegree entries must be >= 0");
        divisors.push_back(std::move(d));
    }
    CompleteIntersection ci = [&] {
        try {
            return CompleteIntersection::make(space, divisors);
        } catch (const ValidationError &e) {
            throw DocumentError("/divisors", e.what());
        }
    }();

    std::vector<BasisElement> h11;
    const auto &h = require_array(require(doc, "h11_basis", ""), "/h11_basis");
    for (std::size_t i = 0; i < h.size(); ++i) {
        std::string path = "/h11_basis/" + std::to_string(i);
        std::string name =
            require_string(require(h[i], "name", path), path + "/name");
        std::string label;
        if (h[i].contains("label"))
            label = require_string(h[i]["label"], path + "/label");
        const auto &coeffs =
            require_array(require(h[i], "multidegree", path), path + "/multidegree");
        if (static_cast<int>(coeffs.size()) != space.factors())
            throw DocumentError(path + "/multidegree",
                                "length must equal the number of ambient factors");
        CohomClass cls = CohomClass::zero(space);
        for (int f = 0; f < space.factors(); ++f)
            cls += rational_from_json(coeffs[f], path + "/multidegree/" +
                                                     std::to_string(f)) *
                   CohomClass::generator(space, f);
        if (cls.is_zero())
            throw DocumentError(path + "/multidegree", "zero class");
        h11.push_back({std::move(name), std::move(label), std::move(cls), ""});
    }

    std::vector<BasisElement> codim;
    const auto &c =
        require_array(require(doc, "codim_basis", ""), "/codim_basis");
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::string path = "/codim_basis/" + std::to_string(i);
        std::string name =
            require_string(require(c[i], "name", path), path + "/name");
        std::string expr = require_string(require(c[i], "expression", path),
                                          path + "/expression");
        CohomClass cls = [&] {
            try {
                return parse_class_expression(expr, h11);
            } catch (const ValidationError &e) {
                throw DocumentError(path + "/expression", e.what());
            }
        }();
        std::string label = c[i].contains("label")
                                ? require_string(c[i]["label"], path + "/label")
                                : derived_label(expr, h11);
        codim.push_back(
            {std::move(name), std::move(label), std::move(cls), std::move(expr)});
    }

    Cone2D kahler = cone_json(require(doc, "kahler_cone", ""), "/kahler_cone");
    Cone2D effective =
        cone_json(require(doc, "effective_cone", ""), "/effective_cone");

    std::vector<PrimeDivisor> primes;
    if (doc.contains("prime_divisors")) {
        const auto &p = require_array(doc["prime_divisors"], "/prime_divisors");
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::string path = "/prime_divisors/" + std::to_string(i);
            PrimeDivisor d;
            d.name = require_string(require(p[i], "name", path), path + "/name");
            d.coords = vec_from_json(require(p[i], "class", path), path + "/class");
            if (d.coords.x == 0 && d.coords.y == 0)
                throw DocumentError(path + "/class", "zero class");
            primes.push_back(std::move(d));
        }
    }

    Scenario s{std::move(ci),     std::move(h11),      std::move(codim),
               std::move(kahler), std::move(effective), std::move(primes)};
    try {
        s.validate();
    } catch (const DocumentError &) {
        throw;
    } catch (const ValidationError &e) {
        throw DocumentError("", e.what());
    }
    return s;
}

Scenario parse_scenario(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        // e.byte is the 1-based offset just past the offending character.
        std::size_t upto = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
        int line = 1, column = 1;
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
                ++column;
            }
        }
        std::string what = e.what();
        auto colon = what.rfind(": ");
        throw DocumentError(line, column,
                            "syntax error" + (colon == std::string::npos
                                                  ? std::string()
                                                  : what.substr(colon)));
    }
    return scenario_from_json(doc);
}

namespace {

ordered_json rational_to_json(const Rational &q) {
    if (q.get_den() == 1)
        return integer_to_json(q.get_num());
    return to_string(q);
}

} // namespace

ordered_json scenario_to_json(const Scenario &s) {
    ordered_json doc;
    doc["ambient"] = s.ci.space().dims();
    ordered_json divs = ordered_json::array();
    for (const auto &d : s.ci.divisors())
        divs.push_back(d.d);
    doc["divisors"] = divs;

    const int k = s.ci.space().factors();
    ordered_json h11 = ordered_json::array();
    for (const auto &b : s.h11_basis) {
        ordered_json e;
        e["name"] = b.name;
        if (!b.label.empty())
            e["label"] = b.label;
        ordered_json coeffs = ordered_json::array();
        for (int f = 0; f < k; ++f) {
            Exponent ex(k, 0);
            ex[f] = 1;
            coeffs.push_back(rational_to_json(b.cls.coefficient(ex)));
        }
        e["multidegree"] = coeffs;
        h11.push_back(e);
    }
    doc["h11_basis"] = h11;

    ordered_json codim = ordered_json::array();
    for (const auto &b : s.codim_basis) {
        ordered_json e;
        e["name"] = b.name;
        if (!b.label.empty())
            e["label"] = b.label;
        e["expression"] = b.expression;
        codim.push_back(e);
    }
    doc["codim_basis"] = codim;
    doc["kahler_cone"] = cone_to_json(s.kahler_cone);
    doc["effective_cone"] = cone_to_json(s.effective_cone);
    ordered_json primes = ordered_json::array();
    for (const auto &p : s.prime_divisors)
        primes.push_back({{"name", p.name},
                          {"class", ordered_json::array({rational_to_json(p.coords.x),
                                                         rational_to_json(p.coords.y)})}});
    doc["prime_divisors"] = primes;
    return doc;
}

std::string serialize_scenario(const Scenario &s) {
    return scenario_to_json(s).dump(2) + "\n";
}

std::string demo_scenario_document() {
    return R"({
  "ambient": [4, 1],
  "divisors": [[1, 1], [4, 1]],
  "h11_basis": [
    {"name": "alpha", "label": "α", "multidegree": [0, 1]},
    {"name": "beta", "label": "β", "multidegree": [1, 0]}
  ],
  "codim_basis": [
    {"name": "alpha*beta", "expression": "alpha*beta"},
    {"name": "beta*beta", "expression": "beta*beta"}
  ],
  "kahler_cone": [[1, 0], [0, 1]],
  "effective_cone": [[1, 0], [-1, 1]],
  "prime_divisors": [
    {"name": "E1", "class": [-1, 1]},
    {"name": "E2", "class": [-1, 4]}
  ]
}
)";
}

} // namespace balcone
