#pragma once

#include "balcone/linalg.hpp"
#include "balcone/ring.hpp"

#include <span>
#include <vector>

namespace balcone {

// A complete intersection Y cut out of an ambient product of projective
// spaces by divisors of the given multidegrees. Classes "on Y" are ambient
// classes; integrals over Y insert the fundamental class [Y].
class CompleteIntersection {
  public:
    static CompleteIntersection make(AmbientSpace space,
                                     std::vector<MultiDegree> divisors);

    const AmbientSpace &space() const { return space_; }
    const std::vector<MultiDegree> &divisors() const { return divisors_; }
    int dim() const { return space_.total_dim() - codim(); }
    int codim() const { return static_cast<int>(divisors_.size()); }

    // Product of the divisor classes; the unit class when there are none.
    const CohomClass &fundamental_class() const { return fundamental_; }

    friend bool operator==(const CompleteIntersection &a,
                           const CompleteIntersection &b) {
        return a.space_ == b.space_ && a.divisors_ == b.divisors_;
    }

  private:
    CompleteIntersection(AmbientSpace space, std::vector<MultiDegree> divisors,
                         CohomClass fundamental);

    AmbientSpace space_;
    std::vector<MultiDegree> divisors_;
    CohomClass fundamental_;
};

inline const CohomClass &fundamental_class(const CompleteIntersection &ci) {
    return ci.fundamental_class();
}

// integral over Y of the product of the factors. Each non-zero factor must
// be homogeneous and their degrees must sum to dim(Y); a zero factor makes
// the product zero regardless of degree.
Rational intersection_number(const CompleteIntersection &ci,
                             std::span<const CohomClass> factors);

struct PairingMatrix {
    std::vector<CohomClass> row_basis;
    std::vector<CohomClass> col_basis;
    Matrix entries;

    bool is_square() const { return entries.is_square(); }
    // Only meaningful for square matrices.
    bool non_degenerate() const {
        return is_square() && entries.determinant() != 0;
    }
};

// entries(i, j) = int_Y row_i * col_j with rows of degree 1 and columns of
// degree dim(Y) - 1.
PairingMatrix pairing_matrix(const CompleteIntersection &ci,
                             std::vector<CohomClass> row_basis,
                             std::vector<CohomClass> col_basis);

} // namespace balcone
