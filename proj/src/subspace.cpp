#include "gammatk/subspace.hpp"

#include <sstream>

#include "gammatk/errors.hpp"

namespace gammatk {

SubspaceBasis SubspaceBasis::make(ComplexMatrix frame, std::string label, double tol) {
    if (frame.cols() > frame.rows())
        throw InvalidInput("SubspaceBasis: more columns than ambient dimension");
    const Eigen::Index k = frame.cols();
    const double dev =
        (frame.adjoint() * frame - ComplexMatrix::Identity(k, k)).norm();
    if (dev > tol * (1.0 + std::sqrt(double(k)))) {
        std::ostringstream msg;
        msg << "SubspaceBasis: columns not orthonormal (deviation " << dev << ")";
        throw InvalidInput(msg.str());
    }
    return SubspaceBasis{std::move(frame), std::move(label)};
}

}  // namespace gammatk
