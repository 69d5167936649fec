#pragma once

// Random generators and brute-force oracles shared by the unit and
// acceptance suites. Nothing here calls into the code paths it checks.

#include "balcone/cones.hpp"
#include "balcone/ring.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace balcone::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Between 1 and 3 factors, each of dimension >= 1, total at most max_total.
inline AmbientSpace random_space(Rng &rng, int max_total) {
    int k = uniform(rng, 1, std::min(3, max_total));
    std::vector<int> dims(k, 1);
    int spare = uniform(rng, 0, max_total - k);
    while (spare-- > 0)
        ++dims[uniform(rng, 0, k - 1)];
    return AmbientSpace::make(dims);
}

inline Exponent random_exponent(Rng &rng, const AmbientSpace &space) {
    Exponent e(space.factors());
    for (int i = 0; i < space.factors(); ++i)
        e[i] = uniform(rng, 0, space.dims()[i]);
    return e;
}

// Up to max_terms monomials with integer coefficients in [-9, 9].
inline CohomClass random_class(Rng &rng, const AmbientSpace &space,
                               int max_terms = 6) {
    CohomClass c = CohomClass::zero(space);
    int n = uniform(rng, 0, max_terms);
    for (int t = 0; t < n; ++t)
        c += CohomClass::monomial(space, random_exponent(rng, space),
                                  uniform(rng, -9, 9));
    return c;
}

inline Rational random_rational(Rng &rng) {
    Rational q(uniform(rng, -9, 9), uniform(rng, 1, 5));
    q.canonicalize();
    return q;
}

// Dense multiplication over the full exponent box followed by truncation.
class DenseOracle {
  public:
    explicit DenseOracle(const AmbientSpace &space) : dims_(space.dims()) {}

    std::vector<Rational> dense(const CohomClass &c, int scale) const {
        std::vector<Rational> out(box_size(scale));
        for (const auto &[e, q] : c.terms())
            out[index(e, scale)] += q;
        return out;
    }

    // Product in the box [0, 2 n_i], then every entry with e_i > n_i dropped.
    std::vector<Rational> multiply(const CohomClass &a,
                                   const CohomClass &b) const {
        std::vector<Rational> da = dense(a, 1), db = dense(b, 1);
        std::vector<Rational> full(box_size(2));
        for (std::size_t i = 0; i < da.size(); ++i) {
            if (da[i] == 0)
                continue;
            Exponent ei = unindex(i, 1);
            for (std::size_t j = 0; j < db.size(); ++j) {
                if (db[j] == 0)
                    continue;
                Exponent ej = unindex(j, 1);
                Exponent s(ei.size());
                for (std::size_t f = 0; f < s.size(); ++f)
                    s[f] = ei[f] + ej[f];
                full[index(s, 2)] += da[i] * db[j];
            }
        }
        std::vector<Rational> out(box_size(1));
        for (std::size_t i = 0; i < full.size(); ++i) {
            Exponent e = unindex(i, 2);
            bool keep = true;
            for (std::size_t f = 0; f < e.size(); ++f)
                keep = keep && e[f] <= dims_[f];
            if (keep)
                out[index(e, 1)] += full[i];
        }
        return out;
    }

  private:
    std::size_t box_size(int scale) const {
        std::size_t n = 1;
        for (int d : dims_)
            n *= scale * d + 1;
        return n;
    }
    std::size_t index(const Exponent &e, int scale) const {
        std::size_t idx = 0;
        for (std::size_t f = 0; f < dims_.size(); ++f)
            idx = idx * (scale * dims_[f] + 1) + e[f];
        return idx;
    }
    Exponent unindex(std::size_t idx, int scale) const {
        Exponent e(dims_.size());
        for (std::size_t f = dims_.size(); f-- > 0;) {
            std::size_t base = scale * dims_[f] + 1;
            e[f] = static_cast<int>(idx % base);
            idx /= base;
        }
        return e;
    }

    std::vector<int> dims_;
};

inline Ray random_ray(Rng &rng) {
    for (;;) {
        int x = uniform(rng, -9, 9), y = uniform(rng, -9, 9);
        if (x != 0 || y != 0)
            return Ray::normalize(x, y);
    }
}

inline Cone2D random_cone(Rng &rng) {
    for (;;) {
        Ray a = random_ray(rng), b = random_ray(rng);
        if (det(a, b) != 0)
            return Cone2D::make(a, b);
    }
}

// Integer entries in [-9, 9], non-zero determinant.
inline Matrix random_pairing_matrix(Rng &rng) {
    for (;;) {
        Matrix m(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                m(i, j) = uniform(rng, -9, 9);
        if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) != 0)
            return m;
    }
}

// Point inside a cone: a non-negative rational combination of its rays.
inline Vec2 random_point_in(Rng &rng, const Cone2D &c) {
    Rational s(uniform(rng, 0, 9), uniform(rng, 1, 4));
    Rational t(uniform(rng, 0, 9), uniform(rng, 1, 4));
    s.canonicalize();
    t.canonicalize();
    return {s * c.r1().x() + t * c.r2().x(), s * c.r1().y() + t * c.r2().y()};
}

// Closed dual-cone membership straight from the definition: y pairs
// non-negatively with both generators.
inline bool in_dual_by_definition(const Cone2D &c, const Matrix &m,
                                  const Vec2 &y) {
    for (const Ray *r : {&c.r1(), &c.r2()}) {
        Rational v = r->x() * (m(0, 0) * y.x + m(0, 1) * y.y) +
                     r->y() * (m(1, 0) * y.x + m(1, 1) * y.y);
        if (v < 0)
            return false;
    }
    return true;
}

} // namespace balcone::testing
