#pragma once

// Balanced-cone computations on a rank-2 complete intersection: the image
// of the Kaehler cone under w -> w^{dim-1}, the dual of the effective cone
// under the intersection pairing, and the gap between the two.

#include "balcone/cones.hpp"
#include "balcone/variety.hpp"

#include <optional>
#include <string>
#include <vector>

namespace balcone {

struct BasisElement {
    std::string name;
    // Display form (e.g. a Greek letter); defaults to name.
    std::string label;
    CohomClass cls;
    // Formal product of h11 names this element was declared from. Empty for
    // h11 elements, which are pure degree-1 classes.
    std::string expression;

    const std::string &display() const { return label.empty() ? name : label; }

    friend bool operator==(const BasisElement &,
                           const BasisElement &) = default;
};

struct PrimeDivisor {
    std::string name;
    Vec2 coords; // in h11 coordinates

    friend bool operator==(const PrimeDivisor &,
                           const PrimeDivisor &) = default;
};

struct Scenario {
    CompleteIntersection ci;
    std::vector<BasisElement> h11_basis;
    std::vector<BasisElement> codim_basis;
    Cone2D kahler_cone;    // h11 coordinates
    Cone2D effective_cone; // h11 coordinates
    std::vector<PrimeDivisor> prime_divisors;

    // Rank-2 bases of the right degrees with a non-degenerate pairing.
    // Throws ValidationError, or ComputationError for a degenerate pairing.
    void validate() const;

    PairingMatrix pairing() const;
    std::vector<CohomClass> h11_classes() const;
    std::vector<CohomClass> codim_classes() const;
    // Ambient class of a vector given in h11 coordinates.
    CohomClass h11_class(const Vec2 &coords) const;
    // Looks up an h11 or codim element by name or label.
    const BasisElement *find(const std::string &name) const;

    friend bool operator==(const Scenario &, const Scenario &) = default;
};

// Coordinates c with p numerically equivalent to c1*codim_1 + c2*codim_2,
// i.e. the solution of M c = w, w_i = int_Y h11_i * p.
Vec2 express_in_basis(const CompleteIntersection &ci, const CohomClass &p,
                      const std::vector<CohomClass> &h11_basis,
                      const std::vector<CohomClass> &codim_basis);

// Closure of the image of the open cone spanned by u, v (h11 coordinates)
// under w -> w^{dim-1}, in codim coordinates. The boundary rays are the
// leading non-zero terms of the binomial expansion of (s u + t v)^{dim-1}
// at either end.
Cone2D balanced_image_closure(const Scenario &s, const Vec2 &u, const Vec2 &v);
Cone2D balanced_image_closure(const Scenario &s);

// Dual of the effective cone under the pairing matrix, in codim coordinates.
Cone2D balanced_cone(const Scenario &s);

// (l1, l2) with int_Y (a1 h1 + a2 h2) * known_prime * ample = l1 a1 + l2 a2.
// Throws ValidationError unless both ample coordinates are positive.
Vec2 divisor_bound_functional(const Scenario &s, const Vec2 &known_prime,
                              const Vec2 &ample);

struct GapWedge {
    Ray from; // boundary ray of the inner cone
    Ray to;   // boundary ray of the outer cone
    Ray witness;

    friend bool operator==(const GapWedge &, const GapWedge &) = default;
};

struct GapReport {
    Cone2D image_closure;
    Cone2D balanced_cone;
    Inclusion inclusion;
    // One wedge per boundary ray the cones do not share; empty unless strict.
    std::vector<GapWedge> gaps;

    friend bool operator==(const GapReport &, const GapReport &) = default;
};

// Wedges of `outer` not covered by `inner`, assuming inner is a subcone.
std::vector<GapWedge> gap_wedges(const Cone2D &inner, const Cone2D &outer);

GapReport gap_report(const Scenario &s);

// Prime-divisor certificate for the supplied effective cone: every supplied
// prime class lies in the effective cone, and for each prime P the bound
// functional of P against `ample` is non-negative on the other primes and
// on the effective generators distinct from P.
struct CertificateCheck {
    struct Entry {
        std::string prime;
        Vec2 functional;
        bool in_effective_cone = false;
        bool bound_holds = false;
    };
    std::vector<Entry> entries;
    bool ok() const;
};

CertificateCheck check_certificate(const Scenario &s, const Vec2 &ample);

// Small resolution of the quintic conifold in P^4 x P^1, cut out by
// divisors of bidegree (1,1) and (4,1). Factor 0 is P^4 (class beta),
// factor 1 is P^1 (class alpha).
Scenario quintic_conifold_scenario();

} // namespace balcone
