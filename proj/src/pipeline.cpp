#include "balcone/pipeline.hpp"

#include "balcone/errors.hpp"

#include <algorithm>
#include <set>

namespace balcone {

std::vector<CohomClass> Scenario::h11_classes() const {
    std::vector<CohomClass> out;
    for (const auto &b : h11_basis)
        out.push_back(b.cls);
    return out;
}

std::vector<CohomClass> Scenario::codim_classes() const {
    std::vector<CohomClass> out;
    for (const auto &b : codim_basis)
        out.push_back(b.cls);
    return out;
}

PairingMatrix Scenario::pairing() const {
    return pairing_matrix(ci, h11_classes(), codim_classes());
}

CohomClass Scenario::h11_class(const Vec2 &coords) const {
    return coords.x * h11_basis.at(0).cls + coords.y * h11_basis.at(1).cls;
}

const BasisElement *Scenario::find(const std::string &name) const {
    for (const auto *basis : {&h11_basis, &codim_basis})
        for (const auto &b : *basis)
            if (b.name == name || b.label == name)
                return &b;
    return nullptr;
}

void Scenario::validate() const {
    if (h11_basis.size() != 2)
        throw ValidationError("h11 basis must have exactly 2 elements");
    if (codim_basis.size() != 2)
        throw ValidationError("codim basis must have exactly 2 elements");
    std::set<std::string> names;
    for (const auto *basis : {&h11_basis, &codim_basis})
        for (const auto &b : *basis)
            if (!names.insert(b.name).second)
                throw ValidationError("duplicate basis name '" + b.name + "'");
    std::set<std::string> primes;
    for (const auto &p : prime_divisors)
        if (!primes.insert(p.name).second)
            throw ValidationError("duplicate prime divisor '" + p.name + "'");
    PairingMatrix pm = pairing();
    if (!pm.non_degenerate())
        throw ValidationError("pairing matrix between h11 and codim bases is "
                              "degenerate");
}

Vec2 express_in_basis(const CompleteIntersection &ci, const CohomClass &p,
                      const std::vector<CohomClass> &h11_basis,
                      const std::vector<CohomClass> &codim_basis) {
    if (h11_basis.size() != 2 || codim_basis.size() != 2)
        throw ValidationError("express_in_basis needs rank-2 bases");
    PairingMatrix pm = pairing_matrix(ci, h11_basis, codim_basis);
    if (!pm.non_degenerate())
        throw ComputationError("codim basis does not span under pairing");
    std::vector<Rational> w;
    for (const auto &h : h11_basis) {
        const CohomClass pair[] = {h, p};
        w.push_back(intersection_number(ci, pair));
    }
    auto c = pm.entries.solve(w);
    return {c[0], c[1]};
}

Cone2D balanced_image_closure(const Scenario &s, const Vec2 &u,
                              const Vec2 &v) {
    const int n = s.ci.dim() - 1;
    if (n < 1)
        throw ComputationError("balanced map degenerate on this cone");
    const CohomClass cu = s.h11_class(u);
    const CohomClass cv = s.h11_class(v);
    const auto h11 = s.h11_classes();
    const auto codim = s.codim_classes();

    // terms[j] = C(n, j) u^j v^(n-j) in codim coordinates
    std::vector<Vec2> terms;
    Integer binom = 1;
    for (int j = 0; j <= n; ++j) {
        CohomClass t = CohomClass::one(s.ci.space());
        for (int i = 0; i < j; ++i)
            t = t * cu;
        for (int i = j; i < n; ++i)
            t = t * cv;
        terms.push_back(
            express_in_basis(s.ci, Rational(binom) * t, h11, codim));
        binom = binom * (n - j) / (j + 1);
    }
    auto nonzero = [](const Vec2 &c) { return c.x != 0 || c.y != 0; };
    auto u_end = std::find_if(terms.rbegin(), terms.rend(), nonzero);
    auto v_end = std::find_if(terms.begin(), terms.end(), nonzero);
    if (v_end == terms.end())
        throw ComputationError("balanced map degenerate on this cone");
    Ray a = Ray::normalize(*u_end);
    Ray b = Ray::normalize(*v_end);
    if (det(a, b) == 0)
        throw ComputationError("balanced map image of this cone is a single "
                               "ray " + to_string(a));
    return Cone2D::make(a, b);
}

Cone2D balanced_image_closure(const Scenario &s) {
    return balanced_image_closure(s, s.kahler_cone.r1().vec(),
                                  s.kahler_cone.r2().vec());
}

Cone2D balanced_cone(const Scenario &s) {
    return dual_cone(s.effective_cone, Pairing(s.pairing().entries));
}

Vec2 divisor_bound_functional(const Scenario &s, const Vec2 &known_prime,
                              const Vec2 &ample) {
    if (ample.x <= 0 || ample.y <= 0)
        throw ValidationError("ample class coordinates must be positive");
    const CohomClass k = s.h11_class(known_prime);
    const CohomClass a = s.h11_class(ample);
    Rational l[2];
    for (int i = 0; i < 2; ++i) {
        const CohomClass f[] = {s.h11_basis.at(i).cls, k, a};
        l[i] = intersection_number(s.ci, f);
    }
    return {l[0], l[1]};
}

namespace {

Rational max_norm(const Ray &r) {
    Integer ax = abs(r.x()), ay = abs(r.y());
    return Rational(ax > ay ? ax : ay);
}

// Sum of the two rays rescaled to unit max-norm: strictly inside the wedge
// and independent of how the rays are scaled.
Ray wedge_witness(const Ray &a, const Ray &b) {
    Rational na = max_norm(a);
    Rational nb = max_norm(b);
    return Ray::normalize(
        Vec2{a.x() / na + b.x() / nb, a.y() / na + b.y() / nb});
}

} // namespace

std::vector<GapWedge> gap_wedges(const Cone2D &inner, const Cone2D &outer) {
    std::vector<GapWedge> out;
    if (!(inner.r1() == outer.r1()))
        out.push_back({inner.r1(), outer.r1(),
                       wedge_witness(inner.r1(), outer.r1())});
    if (!(inner.r2() == outer.r2()))
        out.push_back({inner.r2(), outer.r2(),
                       wedge_witness(inner.r2(), outer.r2())});
    return out;
}

GapReport gap_report(const Scenario &s) {
    GapReport r{balanced_image_closure(s), balanced_cone(s), {}, {}};
    r.inclusion = is_subcone(r.image_closure, r.balanced_cone);
    if (r.inclusion.strict)
        r.gaps = gap_wedges(r.image_closure, r.balanced_cone);
    return r;
}

bool CertificateCheck::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry &e) {
        return e.in_effective_cone && e.bound_holds;
    });
}

CertificateCheck check_certificate(const Scenario &s, const Vec2 &ample) {
    CertificateCheck out;
    auto eval = [](const Vec2 &l, const Vec2 &a) -> Rational {
        return l.x * a.x + l.y * a.y;
    };
    for (const auto &p : s.prime_divisors) {
        CertificateCheck::Entry e;
        e.prime = p.name;
        e.functional = divisor_bound_functional(s, p.coords, ample);
        e.in_effective_cone = s.effective_cone.contains(p.coords);
        e.bound_holds = true;
        const Ray self = Ray::normalize(p.coords);
        for (const auto &q : s.prime_divisors)
            if (q.name != p.name && !(Ray::normalize(q.coords) == self))
                e.bound_holds = e.bound_holds && eval(e.functional, q.coords) >= 0;
        for (const Ray *g : {&s.effective_cone.r1(), &s.effective_cone.r2()})
            if (!(*g == self))
                e.bound_holds = e.bound_holds && eval(e.functional, g->vec()) >= 0;
        out.entries.push_back(std::move(e));
    }
    return out;
}

Scenario quintic_conifold_scenario() {
    AmbientSpace x = AmbientSpace::make({4, 1});
    CompleteIntersection y =
        CompleteIntersection::make(x, {MultiDegree{{1, 1}}, MultiDegree{{4, 1}}});
    const CohomClass beta = CohomClass::generator(x, 0);
    const CohomClass alpha = CohomClass::generator(x, 1);
    Scenario s{
        .ci = y,
        .h11_basis = {{"alpha", "α", alpha, ""}, {"beta", "β", beta, ""}},
        .codim_basis = {{"alpha*beta", "α∧β", alpha * beta, "alpha*beta"},
                        {"beta*beta", "β∧β", beta * beta, "beta*beta"}},
        .kahler_cone = Cone2D::make(Ray::normalize(1, 0), Ray::normalize(0, 1)),
        .effective_cone =
            Cone2D::make(Ray::normalize(1, 0), Ray::normalize(-1, 1)),
        .prime_divisors = {{"E1", {-1, 1}}, {"E2", {-1, 4}}},
    };
    s.validate();
    return s;
}

} // namespace balcone
