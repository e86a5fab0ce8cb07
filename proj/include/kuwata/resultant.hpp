#pragma once

#include "kuwata/multipoly.hpp"

#include <string>
#include <vector>

namespace kuwata {

// Resultant with respect to var, equal to the Sylvester determinant with the rows of f first.
// Computed by the subresultant chain with exact divisions in the coefficient ring.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);
Scalar resultant(const UPoly& f, const UPoly& g);

std::vector<std::vector<Scalar>> sylvester_matrix(const UPoly& f, const UPoly& g);

struct RankDet {
    int rank = 0;
    Scalar det;
};
// Fraction-free (Bareiss) elimination with row pivoting.
RankDet exact_rank_det(const std::vector<std::vector<Scalar>>& m);

}  // namespace kuwata
