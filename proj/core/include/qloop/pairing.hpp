#ifndef QLOOP_PAIRING_HPP
#define QLOOP_PAIRING_HPP

#include <vector>

#include "qloop/freealg.hpp"
#include "qloop/linalg.hpp"
#include "qloop/session.hpp"

namespace qloop {

/// Pairings of all words of one degree, with exact rank and kernel data.
/// The kernel is the radical of the form in that degree, so
/// rank == dim U^+[degree] and rank + kernel_basis.size() == words.size().
struct GramTable {
    DimVector degree;
    std::vector<Word> words;
    ScalarMatrix matrix;  // matrix[r][c] = <words[r], words[c]>
    int rank = 0;
    std::vector<FreeElem> kernel_basis;
};

/// The Hopf pairing on F: <1,1> = 1, <E_iota, E_kappa> = delta nu_iota, and
/// <ab,c> = <a(x)b, delta(c)> together with its dual adjunction; evaluation
/// peels words recursively and is memoized per session.
Scalar pair_words(const Session& s, const Word& x, const Word& y);
Scalar pair(const Session& s, const FreeElem& x, const FreeElem& y);

/// Memoized per-degree table.
const GramTable& gram(const Session& s, const DimVector& degree);
int graded_dim(const Session& s, const DimVector& degree);

/// sum_{t+t'=-(iota,j)+1} (-1)^t E_j^(t) E_iota E_j^(t') for real j.
FreeElem serre_element(const Session& s, GenIndex iota, VertexId j);

/// [E_{i,l}, E_{i,k}] at an isotropic vertex.
FreeElem iso_commutator(const Session& s, VertexId i, int l, int k);

/// True iff every word of matching degree pairs to zero with x
/// (componentwise on inhomogeneous input).
bool in_radical(const Session& s, const FreeElem& x);

/// True iff x pairs to zero against all word pairs of matching bidegrees,
/// i.e. x vanishes in U^+ (x) U^+.
bool tensor_vanishes_in_uplus(const Session& s, const TensorElem& x);

}  // namespace qloop

#endif
