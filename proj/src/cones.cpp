#include "balcone/cones.hpp"

#include "balcone/errors.hpp"

#include <cassert>

namespace balcone {

Rational det(const Vec2 &a, const Vec2 &b) { return a.x * b.y - a.y * b.x; }

Integer det(const Ray &a, const Ray &b) {
    return a.x() * b.y() - a.y() * b.x();
}

Ray Ray::normalize(Integer x, Integer y) {
    if (x == 0 && y == 0)
        throw ValidationError("zero vector does not span a ray");
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return Ray(x / g, y / g);
}

Ray Ray::normalize(const Vec2 &v) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), v.x.get_den_mpz_t(), v.y.get_den_mpz_t());
    Rational sx = v.x * l;
    Rational sy = v.y * l;
    return normalize(Integer(sx.get_num()), Integer(sy.get_num()));
}

std::string to_string(const Ray &r) {
    return "(" + r.x().get_str() + "," + r.y().get_str() + ")";
}

Cone2D Cone2D::make(const Ray &a, const Ray &b) {
    Integer d = det(a, b);
    if (d == 0)
        throw ComputationError("cone generators " + to_string(a) + " and " +
                               to_string(b) + " are parallel or antipodal");
    return d > 0 ? Cone2D(a, b) : Cone2D(b, a);
}

bool Cone2D::contains(const Vec2 &v, Membership mode) const {
    // v = s r1 + t r2 with s = det(v, r2) / D and t = det(r1, v) / D, D > 0.
    Rational s = det(v, r2_.vec());
    Rational t = det(r1_.vec(), v);
    if (mode == Membership::open)
        return s > 0 && t > 0;
    return s >= 0 && t >= 0;
}

std::string to_string(const Cone2D &c) {
    return "cone{" + to_string(c.r1()) + "," + to_string(c.r2()) + "}";
}

Pairing::Pairing(Matrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != 2 || matrix_.cols() != 2)
        throw ValidationError("rank-2 pairing needs a 2x2 matrix");
}

Rational Pairing::operator()(const Vec2 &x, const Vec2 &y) const {
    const Matrix &m = matrix_;
    return x.x * (m(0, 0) * y.x + m(0, 1) * y.y) +
           x.y * (m(1, 0) * y.x + m(1, 1) * y.y);
}

namespace {

// Row vector r^T M, so that p(r, y) = f . y.
Vec2 functional(const Ray &r, const Matrix &m) {
    return {r.x() * m(0, 0) + r.y() * m(1, 0),
            r.x() * m(0, 1) + r.y() * m(1, 1)};
}

Rational dot(const Vec2 &a, const Vec2 &b) { return a.x * b.x + a.y * b.y; }

// The ray in the kernel of `kill` on which `keep` is positive.
Ray kernel_ray(const Vec2 &kill, const Vec2 &keep) {
    Vec2 s{-kill.y, kill.x};
    Rational sign = dot(keep, s);
    assert(sign != 0);
    if (sign < 0)
        s = {-s.x, -s.y};
    return Ray::normalize(s);
}

} // namespace

Cone2D dual_cone(const Cone2D &c, const Pairing &p) {
    if (p.determinant() == 0)
        throw ComputationError("pairing is degenerate (determinant 0)");
    Vec2 f1 = functional(c.r1(), p.matrix());
    Vec2 f2 = functional(c.r2(), p.matrix());
    // f1, f2 are independent because r1, r2 are and M is invertible, so the
    // two half-planes meet in a salient cone.
    assert(det(f1, f2) != 0);
    return Cone2D::make(kernel_ray(f1, f2), kernel_ray(f2, f1));
}

Inclusion is_subcone(const Cone2D &inner, const Cone2D &outer) {
    Inclusion r;
    r.included = outer.contains(inner.r1()) && outer.contains(inner.r2());
    r.strict = r.included &&
               (!inner.contains(outer.r1()) || !inner.contains(outer.r2()));
    return r;
}

} // namespace balcone
