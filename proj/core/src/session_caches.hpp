#ifndef QLOOP_SESSION_CACHES_HPP
#define QLOOP_SESSION_CACHES_HPP

#include <map>
#include <tuple>
#include <utility>

#include "qloop/casimir.hpp"
#include "qloop/double_alg.hpp"
#include "qloop/freealg.hpp"
#include "qloop/pairing.hpp"
#include "qloop/uplus.hpp"

namespace qloop::detail {

// All memoized state of a session. Guarded by Session::cache_mutex(); entries
// are computed outside the lock and inserted idempotently.
struct SessionCaches {
    std::map<Word, TensorElem> delta;
    std::map<std::pair<Word, Word>, Scalar> pair;
    std::map<DimVector, GramTable> gram;
    std::map<DimVector, UPlusBasis> basis;
    std::map<GenIndex, PrimitiveData> primitive;
    // Coordinates of every word of degree l*i in the spanning set
    // {a_{i,c} : c in C_{i,l}}: columns indexed like gram words.
    std::map<GenIndex, ScalarMatrix> a_coords;
    // E_{i,l} * F_{j,k} normal forms keyed by (i, l, j, k).
    std::map<std::tuple<VertexId, int, VertexId, int>, DoubleElem> ef_rule;
    // Antipode images of generators: key.level > 0 is E, the flag picks skew.
    std::map<std::tuple<GenIndex, bool, bool>, DoubleElem> antipode_gen;  // (iota, isF, skew)
    std::map<int, DoubleElem> casimir;  // per truncation height
    std::map<DimVector, std::vector<std::pair<DoubleElem, DoubleElem>>> theta;
    // Verma-action kernels: surviving (f word, K exponent, coefficient)
    // triples of E_eword * F_fword, keyed by the two words.
    std::map<std::pair<Word, Word>, std::vector<std::tuple<Word, DimVector, Scalar>>>
        verma_kernel;
};

}  // namespace qloop::detail

#endif
