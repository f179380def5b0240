#ifndef QLOOP_CASIMIR_HPP
#define QLOOP_CASIMIR_HPP

#include "qloop/double_alg.hpp"

namespace qloop {

/// Height-truncated quasi-R-matrix: for each degree alpha with ht <= cutoff,
/// the pairs (b^-, b^*) over the basis of U^+[alpha]; Theta_0 = 1 (x) 1.
struct ThetaTrunc {
    int cutoff = 0;
    std::map<DimVector, std::vector<std::pair<DoubleElem, DoubleElem>>> components;
};

ThetaTrunc theta_build(const Session& s, int p);

/// Checks Delta(u) Theta = Theta Deltabar(u) in the truncated completion.
/// Terms beyond the truncation are discarded: a tensor term survives iff
/// ht(F-degree of leg 1) <= p - (E-height of u) and
/// ht(E-degree of leg 2) <= p - (F-height of u); the margins swallow exactly
/// the residue contributed by the missing Theta_alpha with ht(alpha) > p.
/// Throws CutoffError when p is too small to retain anything.
bool theta_intertwine_check(const Session& s, const ThetaTrunc& theta, const DoubleElem& u);

/// Vector of the Verma module M(alpha): F-side words applied to the highest
/// weight vector. Equality is pairing-certified per weight component.
struct VermaVec {
    DimVector highest_weight;
    std::map<Word, Scalar> terms;  // F-words; the empty word is v_alpha

    static VermaVec highest(const DimVector& alpha);
    void add_term(const Word& w, const Scalar& c);
    VermaVec operator+(const VermaVec& o) const;
    VermaVec operator-(const VermaVec& o) const;
    VermaVec scaled(const Scalar& c) const;
};

/// Action of the double: F by left multiplication, K by the weight scalar,
/// E by straightening through the F-word and annihilating v_alpha.
VermaVec verma_act(const Session& s, const DoubleElem& u, const VermaVec& m);

bool verma_is_zero(const Session& s, const VermaVec& m);
bool verma_equal(const Session& s, const VermaVec& a, const VermaVec& b);

/// Omega_{<=p} = m(S (x) 1)(sum_{ht(alpha)<=p} Theta_alpha), cached per p.
const DoubleElem& casimir_operator(const Session& s, int p);
VermaVec casimir_apply(const Session& s, const VermaVec& m, int p);

/// The three operator identities K_i Omega = Omega K_i,
/// K_{-li} a_{i,l} Omega = K_{li} Omega a_{i,l} and
/// b_{i,l} K_{li} Omega K_{li} = Omega b_{i,l}, verified on every basis
/// vector of M(alpha) down to the given depth.
bool casimir_identity_check(const Session& s, const DimVector& alpha, VertexId i, int l,
                            int depth);

/// f(alpha) = (alpha, alpha) + sum_i alpha_i (i,i); the weight functional
/// (alpha, alpha + 2 rho) with rho eliminated via (i, 2 rho) = (i,i).
long f_of(const QuiverSpec& q, const DimVector& alpha);

}  // namespace qloop

#endif
