#include "gammatk/types.hpp"

#include <Eigen/SVD>

namespace gammatk {

double op_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.jacobiSvd().singularValues()(0);
}

double commutator_norm(const ComplexMatrix& s, const ComplexMatrix& p) {
    return op_norm(s * p - p * s);
}

}  // namespace gammatk
