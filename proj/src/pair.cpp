#include "gammatk/pair.hpp"

#include <sstream>

#include "gammatk/errors.hpp"

namespace gammatk {

CommutingPair CommutingPair::make(ComplexMatrix S, ComplexMatrix P,
                                  double ctol, PairRole role) {
    if (S.rows() != S.cols() || P.rows() != P.cols() || S.rows() != P.rows())
        throw InvalidInput("CommutingPair: S and P must be square and of equal size");
    if (!S.allFinite() || !P.allFinite())
        throw InvalidInput("CommutingPair: non-finite entries");

    const double cn = commutator_norm(S, P);
    const double bound = ctol * (1.0 + op_norm(S) * op_norm(P));
    if (cn > bound) {
        std::ostringstream msg;
        msg << "CommutingPair: ||SP-PS|| = " << cn << " exceeds bound " << bound;
        throw CommutatorTooLarge(msg.str());
    }
    return CommutingPair{std::move(S), std::move(P), cn, role};
}

const char* to_string(PairRole r) {
    switch (r) {
        case PairRole::Generic: return "generic";
        case PairRole::GammaContraction: return "gamma-contraction";
        case PairRole::GammaUnitary: return "gamma-unitary";
        case PairRole::PureGammaIsometryModel: return "pure-gamma-isometry-model";
    }
    return "unknown";
}

}  // namespace gammatk
