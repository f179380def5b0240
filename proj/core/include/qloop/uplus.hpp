#ifndef QLOOP_UPLUS_HPP
#define QLOOP_UPLUS_HPP

#include <vector>

#include "qloop/pairing.hpp"

namespace qloop {

/// A basis of U^+[degree]: words whose principal Gram submatrix is invertible,
/// with its exact inverse. gram_inverse * G[pivots][pivots] = 1 exactly.
struct UPlusBasis {
    DimVector degree;
    std::vector<int> pivot_indices;  // positions in gram(degree).words
    std::vector<Word> pivot_words;
    ScalarMatrix gram_inverse;
};

/// The primitive element a_{i,l}: representative is a lift to F with
/// representative - E_{i,l} in the span of lower-level words, orthogonal to
/// that span; tau = <a_{i,l}, a_{i,l}>.
struct PrimitiveData {
    VertexId vertex = 0;
    int level = 1;
    FreeElem representative;
    Scalar tau;
};

const UPlusBasis& uplus_basis(const Session& s, const DimVector& degree);

/// Functional coordinates of homogeneous x: the vector (pair(w, x)) over all
/// words w of degree |x|. Equal vectors == equal classes in U^+.
ScalarVector uplus_coords(const Session& s, const FreeElem& x);

const PrimitiveData& primitive_a(const Session& s, VertexId i, int level);

/// Kernel of the linear system defining a_{i,l}, as elements of F; the
/// primitive is unique in U^+ iff all of these are radical.
std::vector<FreeElem> primitive_solution_kernel(const Session& s, VertexId i, int level);

/// delta(rep) - rep(x)1 - 1(x)rep vanishes in U^+ (x) U^+.
bool check_primitivity(const Session& s, const PrimitiveData& p);
/// bar(rep) - rep is radical.
bool bar_invariance_check(const Session& s, const PrimitiveData& p);

/// a_{i,c} = prod_j a_{i,c_j} (word lift) and tau_{i,c} = prod_j tau_{i,c_j}.
FreeElem a_product(const Session& s, VertexId i, const Composition& c);
Scalar tau_product(const Session& s, VertexId i, const Composition& c);

/// Coproduct-component operators: side upper extracts the coefficient of
/// a_{i,c} from the left tensor leg, side lower from the right leg. General
/// compositions iterate single-part extraction along the product structure
/// of a_{i,c} (lower peels the rightmost factor first, upper the leftmost).
enum class DeltaSide { lower, upper };
FreeElem delta_component(const Session& s, VertexId i, const Composition& c, const FreeElem& x,
                         DeltaSide side);

}  // namespace qloop

#endif
