#pragma once

// Salient full-dimensional cones in a rank-2 coordinate space, with exact
// integer generators.

#include "balcone/linalg.hpp"
#include "balcone/rational.hpp"

#include <string>

namespace balcone {

struct Vec2 {
    Rational x;
    Rational y;

    friend bool operator==(const Vec2 &, const Vec2 &) = default;
};

Rational det(const Vec2 &a, const Vec2 &b);

// Primitive integer direction: gcd(|x|, |y|) = 1, never the zero vector.
class Ray {
  public:
    // Clears denominators and divides out the gcd. Throws ValidationError on
    // the zero vector.
    static Ray normalize(const Vec2 &v);
    static Ray normalize(Integer x, Integer y);

    const Integer &x() const { return x_; }
    const Integer &y() const { return y_; }
    Vec2 vec() const { return {Rational(x_), Rational(y_)}; }

    friend bool operator==(const Ray &, const Ray &) = default;

  private:
    Ray(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {}

    Integer x_;
    Integer y_;
};

Integer det(const Ray &a, const Ray &b);

std::string to_string(const Ray &r);

enum class Membership { closed, open };

// Non-negative span of two rays, stored counterclockwise: det(r1, r2) > 0.
class Cone2D {
  public:
    // Reorders a, b into canonical orientation. Parallel or antipodal rays
    // throw ComputationError.
    static Cone2D make(const Ray &a, const Ray &b);

    const Ray &r1() const { return r1_; }
    const Ray &r2() const { return r2_; }

    bool contains(const Vec2 &v, Membership mode = Membership::closed) const;
    bool contains(const Ray &r, Membership mode = Membership::closed) const {
        return contains(r.vec(), mode);
    }
    bool has_generator(const Ray &r) const { return r == r1_ || r == r2_; }

    friend bool operator==(const Cone2D &, const Cone2D &) = default;

  private:
    Cone2D(Ray r1, Ray r2) : r1_(std::move(r1)), r2_(std::move(r2)) {}

    Ray r1_;
    Ray r2_;
};

inline Cone2D cone_new(const Ray &a, const Ray &b) { return Cone2D::make(a, b); }

inline bool contains(const Cone2D &c, const Vec2 &v, Membership mode) {
    return c.contains(v, mode);
}

std::string to_string(const Cone2D &c);

// Bilinear form p(x, y) = x^T M y between two rank-2 coordinate spaces.
class Pairing {
  public:
    // Throws ValidationError unless matrix is 2x2.
    explicit Pairing(Matrix matrix);

    const Matrix &matrix() const { return matrix_; }
    Rational operator()(const Vec2 &x, const Vec2 &y) const;
    Rational determinant() const { return matrix_.determinant(); }
    Pairing transpose() const { return Pairing(matrix_.transpose()); }

  private:
    Matrix matrix_;
};

// {y : p(r1, y) >= 0 and p(r2, y) >= 0}. Each generator of the result pairs
// to zero with exactly one generator of c. Throws ComputationError when the
// pairing is degenerate.
Cone2D dual_cone(const Cone2D &c, const Pairing &p);

struct Inclusion {
    bool included = false;
    // included, and some generator of the outer cone lies outside the inner.
    bool strict = false;
    bool operator==(const Inclusion &) const = default;
};

Inclusion is_subcone(const Cone2D &inner, const Cone2D &outer);

} // namespace balcone
