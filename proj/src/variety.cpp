#include "balcone/variety.hpp"

#include "balcone/errors.hpp"

namespace balcone {

CompleteIntersection::CompleteIntersection(AmbientSpace space,
                                           std::vector<MultiDegree> divisors,
                                           CohomClass fundamental)
    : space_(std::move(space)), divisors_(std::move(divisors)),
      fundamental_(std::move(fundamental)) {}

CompleteIntersection
CompleteIntersection::make(AmbientSpace space,
                           std::vector<MultiDegree> divisors) {
    const int dim = space.total_dim() - static_cast<int>(divisors.size());
    if (dim < 1)
        throw ValidationError("complete intersection would have dimension " +
                              std::to_string(dim) + "; must be >= 1");
    CohomClass fundamental = CohomClass::one(space);
    for (std::size_t j = 0; j < divisors.size(); ++j) {
        try {
            fundamental = fundamental * divisor_class(space, divisors[j]);
        } catch (const ValidationError &e) {
            throw ValidationError("divisor " + std::to_string(j) + ": " +
                                  e.what());
        }
    }
    if (fundamental.is_zero())
        throw ValidationError("divisor classes annihilate the ambient ring");
    return CompleteIntersection(std::move(space), std::move(divisors),
                                std::move(fundamental));
}

Rational intersection_number(const CompleteIntersection &ci,
                             std::span<const CohomClass> factors) {
    int total = 0;
    bool has_zero = false;
    for (const auto &f : factors) {
        if (!(f.space() == ci.space()))
            throw ValidationError("factor lives on a different ambient space");
        if (f.is_zero()) {
            has_zero = true;
            continue;
        }
        auto d = f.degree();
        if (!d)
            throw ValidationError("factor is not homogeneous");
        total += *d;
    }
    if (has_zero)
        return 0;
    if (total != ci.dim())
        throw DegreeMismatchError(ci.dim(), total);
    CohomClass p = ci.fundamental_class();
    for (const auto &f : factors)
        p = p * f;
    return integrate(ci.space(), p);
}

namespace {

void require_degree(const CohomClass &c, int expected, const char *what,
                    std::size_t index) {
    if (c.is_zero())
        return;
    auto d = c.degree();
    if (!d || *d != expected)
        throw ValidationError(std::string(what) + " " + std::to_string(index) +
                              " must be homogeneous of degree " +
                              std::to_string(expected));
}

} // namespace

PairingMatrix pairing_matrix(const CompleteIntersection &ci,
                             std::vector<CohomClass> row_basis,
                             std::vector<CohomClass> col_basis) {
    for (std::size_t i = 0; i < row_basis.size(); ++i)
        require_degree(row_basis[i], 1, "row", i);
    for (std::size_t j = 0; j < col_basis.size(); ++j)
        require_degree(col_basis[j], ci.dim() - 1, "column", j);

    PairingMatrix pm{std::move(row_basis), std::move(col_basis),
                     Matrix(0, 0)};
    pm.entries = Matrix(pm.row_basis.size(), pm.col_basis.size());
    for (std::size_t i = 0; i < pm.row_basis.size(); ++i)
        for (std::size_t j = 0; j < pm.col_basis.size(); ++j) {
            const CohomClass pair[] = {pm.row_basis[i], pm.col_basis[j]};
            pm.entries(i, j) = intersection_number(ci, pair);
        }
    return pm;
}

} // namespace balcone
