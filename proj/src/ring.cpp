#include "balcone/ring.hpp"

#include "balcone/errors.hpp"

#include <numeric>
#include <sstream>

namespace balcone {

AmbientSpace::AmbientSpace(std::vector<int> dims)
    : dims_(std::move(dims)),
      total_dim_(std::accumulate(dims_.begin(), dims_.end(), 0)) {}

AmbientSpace AmbientSpace::make(std::vector<int> dims) {
    if (dims.empty())
        throw ValidationError("ambient space needs at least one factor");
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] < 1)
            throw ValidationError("factor " + std::to_string(i) +
                                  " has dimension " + std::to_string(dims[i]) +
                                  "; must be >= 1");
    return AmbientSpace(std::move(dims));
}

namespace {

bool within_bounds(const AmbientSpace &space, const Exponent &e) {
    if (static_cast<int>(e.size()) != space.factors())
        return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > space.dims()[i])
            return false;
    return true;
}

int total_degree(const Exponent &e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

CohomClass CohomClass::zero(const AmbientSpace &space) {
    return CohomClass(space);
}

CohomClass CohomClass::one(const AmbientSpace &space) {
    return monomial(space, Exponent(space.factors(), 0));
}

CohomClass CohomClass::generator(const AmbientSpace &space, int factor) {
    if (factor < 0 || factor >= space.factors())
        throw ValidationError("no factor " + std::to_string(factor));
    Exponent e(space.factors(), 0);
    e[factor] = 1;
    return monomial(space, std::move(e));
}

CohomClass CohomClass::monomial(const AmbientSpace &space, Exponent e,
                                Rational coefficient) {
    if (static_cast<int>(e.size()) != space.factors())
        throw ValidationError("exponent vector has length " +
                              std::to_string(e.size()) + ", ambient has " +
                              std::to_string(space.factors()) + " factors");
    for (int x : e)
        if (x < 0)
            throw ValidationError("negative exponent");
    CohomClass c(space);
    if (within_bounds(space, e))
        c.add_term(e, coefficient);
    return c;
}

void CohomClass::add_term(const Exponent &e, const Rational &c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void CohomClass::require_same_space(const CohomClass &other) const {
    if (!(space_ == other.space_))
        throw ValidationError("classes live on different ambient spaces");
}

Rational CohomClass::coefficient(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> CohomClass::degree() const {
    if (terms_.empty())
        return std::nullopt;
    int d = total_degree(terms_.begin()->first);
    for (const auto &[e, c] : terms_)
        if (total_degree(e) != d)
            return std::nullopt;
    return d;
}

bool CohomClass::is_homogeneous() const {
    return terms_.empty() || degree().has_value();
}

CohomClass CohomClass::operator-() const {
    CohomClass r = *this;
    for (auto &[e, c] : r.terms_)
        c = -c;
    return r;
}

CohomClass &CohomClass::operator+=(const CohomClass &other) {
    require_same_space(other);
    for (const auto &[e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

CohomClass &CohomClass::operator-=(const CohomClass &other) {
    require_same_space(other);
    for (const auto &[e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

CohomClass &CohomClass::operator*=(const Rational &scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, c] : terms_)
        c *= scalar;
    return *this;
}

CohomClass operator*(const CohomClass &a, const CohomClass &b) {
    a.require_same_space(b);
    CohomClass r(a.space_);
    const auto &dims = a.space_.dims();
    Exponent e(dims.size());
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            bool truncated = false;
            for (std::size_t i = 0; i < dims.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > dims[i]) {
                    truncated = true;
                    break;
                }
            }
            if (!truncated)
                r.add_term(e, ca * cb);
        }
    }
    return r;
}

CohomClass divisor_class(const AmbientSpace &space, const MultiDegree &d) {
    if (static_cast<int>(d.d.size()) != space.factors())
        throw ValidationError("multidegree has length " +
                              std::to_string(d.d.size()) + ", ambient has " +
                              std::to_string(space.factors()) + " factors");
    CohomClass c = CohomClass::zero(space);
    for (int i = 0; i < space.factors(); ++i) {
        if (d.d[i] < 0)
            throw ValidationError("multidegree entry " + std::to_string(i) +
                                  " is negative");
        c += Rational(d.d[i]) * CohomClass::generator(space, i);
    }
    return c;
}

CohomClass
linear_combination(std::span<const std::pair<Rational, CohomClass>> terms) {
    if (terms.empty())
        throw ValidationError("empty linear combination has no ambient space");
    CohomClass r = CohomClass::zero(terms.front().second.space());
    for (const auto &[c, p] : terms)
        r += c * p;
    return r;
}

CohomClass mul(const CohomClass &p, const CohomClass &q) { return p * q; }

CohomClass product(const AmbientSpace &space,
                   std::span<const CohomClass> factors) {
    CohomClass r = CohomClass::one(space);
    for (const auto &f : factors)
        r = r * f;
    return r;
}

Rational integrate(const AmbientSpace &space, const CohomClass &p) {
    if (!(p.space() == space))
        throw ValidationError("class does not live on this ambient space");
    return p.coefficient(space.dims());
}

std::string format_class(const CohomClass &p,
                         const std::vector<std::string> &generator_names) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    // Highest degree first, then lexicographic on exponents.
    std::vector<std::pair<Exponent, Rational>> terms(p.terms().rbegin(),
                                                     p.terms().rend());
    for (const auto &[e, c] : terms) {
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        bool constant = total_degree(e) == 0;
        bool need_star = false;
        if (mag != 1 || constant) {
            out << to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (need_star)
                out << '*';
            out << (i < generator_names.size() ? generator_names[i]
                                               : "h" + std::to_string(i));
            if (e[i] > 1)
                out << '^' << e[i];
            need_star = true;
        }
    }
    return out.str();
}

} // namespace balcone
