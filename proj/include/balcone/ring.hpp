#pragma once

// Cohomology rings of products of projective spaces,
//   H*(P^{n_1} x ... x P^{n_k}; Q) = Q[h_1, ..., h_k] / (h_i^{n_i + 1}),
// with h_i the hyperplane class pulled back from the i-th factor.

#include "balcone/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace balcone {

class AmbientSpace {
  public:
    // Throws ValidationError for an empty list or a factor of dimension < 1.
    static AmbientSpace make(std::vector<int> dims);

    const std::vector<int> &dims() const { return dims_; }
    int factors() const { return static_cast<int>(dims_.size()); }
    int total_dim() const { return total_dim_; }

    friend bool operator==(const AmbientSpace &, const AmbientSpace &) = default;

  private:
    explicit AmbientSpace(std::vector<int> dims);

    std::vector<int> dims_;
    int total_dim_ = 0;
};

// Exponents of h_1..h_k. Stored monomials always satisfy e_i <= n_i.
using Exponent = std::vector<int>;

// Degree of a multihomogeneous polynomial in each factor's variables.
struct MultiDegree {
    std::vector<int> d;

    friend bool operator==(const MultiDegree &, const MultiDegree &) = default;
};

class CohomClass {
  public:
    using Terms = std::map<Exponent, Rational>;

    static CohomClass zero(const AmbientSpace &space);
    static CohomClass one(const AmbientSpace &space);
    static CohomClass generator(const AmbientSpace &space, int factor);
    // A monomial outside the truncation bounds is the zero class.
    static CohomClass monomial(const AmbientSpace &space, Exponent e,
                               Rational coefficient = 1);

    const AmbientSpace &space() const { return space_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponent &e) const;

    // Total degree when every term has the same degree, nullopt for the
    // zero class and for inhomogeneous classes.
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    CohomClass operator-() const;
    CohomClass &operator+=(const CohomClass &other);
    CohomClass &operator-=(const CohomClass &other);
    CohomClass &operator*=(const Rational &scalar);

    friend CohomClass operator+(CohomClass a, const CohomClass &b) {
        return a += b;
    }
    friend CohomClass operator-(CohomClass a, const CohomClass &b) {
        return a -= b;
    }
    friend CohomClass operator*(const Rational &s, CohomClass a) {
        return a *= s;
    }
    friend CohomClass operator*(const CohomClass &a, const CohomClass &b);

    friend bool operator==(const CohomClass &, const CohomClass &) = default;

  private:
    explicit CohomClass(AmbientSpace space) : space_(std::move(space)) {}
    void add_term(const Exponent &e, const Rational &c);
    void require_same_space(const CohomClass &other) const;

    AmbientSpace space_;
    Terms terms_;
};

// sum_i d_i h_i, the first Chern class of O(d).
CohomClass divisor_class(const AmbientSpace &space, const MultiDegree &d);

// sum c_i p_i in canonical form. An empty list has no ambient space and is
// rejected.
CohomClass
linear_combination(std::span<const std::pair<Rational, CohomClass>> terms);

CohomClass mul(const CohomClass &p, const CohomClass &q);

// Product of all factors; the unit class for an empty list.
CohomClass product(const AmbientSpace &space,
                   std::span<const CohomClass> factors);

// Coefficient of the top monomial h_1^{n_1} ... h_k^{n_k}. Zero for
// classes of any other degree.
Rational integrate(const AmbientSpace &space, const CohomClass &p);

// Human-readable form using one name per factor, e.g. "5*a*b + 4*b^2".
std::string format_class(const CohomClass &p,
                         const std::vector<std::string> &generator_names);

} // namespace balcone
