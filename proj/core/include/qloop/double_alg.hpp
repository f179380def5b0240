#ifndef QLOOP_DOUBLE_ALG_HPP
#define QLOOP_DOUBLE_ALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "qloop/uplus.hpp"

namespace qloop {

/// Triangular monomial F_word * K_mu * E_word of the Drinfeld double.
struct DoubleKey {
    Word f_word;
    DimVector k_exp;
    Word e_word;
    auto operator<=>(const DoubleKey&) const = default;
};

/// Element of the double in normal form: linear combination of triangular
/// monomials. Monomials are not assumed independent modulo the radical;
/// equality tests go through dd_is_zero.
class DoubleElem {
public:
    // K exponents are always full-size vectors over the quiver's vertices,
    // so structurally equal monomials always merge.
    DoubleElem() = default;
    static DoubleElem unit(const QuiverSpec& q);
    static DoubleElem e_gen(const QuiverSpec& q, GenIndex iota);
    static DoubleElem f_gen(const QuiverSpec& q, GenIndex iota);
    static DoubleElem k_power(const DimVector& mu);
    static DoubleElem from_key(const DoubleKey& k, const Scalar& coef = Scalar(1));
    static DoubleElem from_e_elem(const QuiverSpec& q, const FreeElem& x);
    static DoubleElem from_f_elem(const QuiverSpec& q, const FreeElem& x);

    bool is_empty() const { return terms_.empty(); }
    const std::map<DoubleKey, Scalar>& terms() const { return terms_; }

    void add_term(const DoubleKey& k, const Scalar& coef);
    DoubleElem operator+(const DoubleElem& o) const;
    DoubleElem operator-(const DoubleElem& o) const;
    DoubleElem scaled(const Scalar& c) const;
    bool operator==(const DoubleElem& o) const { return terms_ == o.terms_; }

private:
    std::map<DoubleKey, Scalar> terms_;
};

/// Element of U (x) U with the componentwise product.
class DoubleTensor {
public:
    using Key = std::pair<DoubleKey, DoubleKey>;

    DoubleTensor() = default;
    static DoubleTensor unit(const QuiverSpec& q);
    static DoubleTensor from_pair(const DoubleElem& a, const DoubleElem& b);

    bool is_empty() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    void add_term(const DoubleKey& a, const DoubleKey& b, const Scalar& coef);
    DoubleTensor operator+(const DoubleTensor& o) const;
    DoubleTensor operator-(const DoubleTensor& o) const;
    DoubleTensor scaled(const Scalar& c) const;
    bool operator==(const DoubleTensor& o) const { return terms_ == o.terms_; }

private:
    std::map<Key, Scalar> terms_;
};

/// Product in normal form. Cross products E_{i,l} * F_{j,k} reduce through
/// straightening rules derived once per generator pair from the double
/// relation and cached on the session.
DoubleElem dd_mul(const Session& s, const DoubleElem& a, const DoubleElem& b);

/// The cached normal form of E_{i,l} * F_{j,k}.
const DoubleElem& ef_straighten_rule(const Session& s, GenIndex e, GenIndex f);

/// Coproduct into the componentwise tensor algebra.
DoubleTensor dd_coproduct(const Session& s, const DoubleElem& x);
DoubleTensor dd_tensor_mul(const Session& s, const DoubleTensor& x, const DoubleTensor& y);

/// The involution omega: E <-> F, K_mu -> K_{-mu}.
DoubleElem omega(const Session& s, const DoubleElem& x);

/// Bar: E and F letters fixed, K_mu -> K_{-mu}, coefficients v -> v^-1.
DoubleElem dd_bar(const DoubleElem& x);
DoubleTensor dd_bar(const DoubleTensor& x);

/// Antipode (skew = false) or skew antipode S^op = S^-1 (skew = true).
DoubleElem antipode(const Session& s, const DoubleElem& x, bool skew = false);

/// Counit: coefficient of the K-sector with K_mu evaluated at 1.
Scalar counit(const DoubleElem& x);

/// Pairing-certified zero test in U = Utilde / radical.
bool dd_is_zero(const Session& s, const DoubleElem& x);
bool dd_tensor_is_zero(const Session& s, const DoubleTensor& x);

/// Zero test for n-leg tensors over U (used for coassociativity checks).
bool dd_multi_tensor_is_zero(const Session& s,
                             const std::map<std::vector<DoubleKey>, Scalar>& terms);

/// Residue of the double relation for a, b in the positive part:
/// sum <a_(1), b_(2)> omega(b_(1)) a_(2) - sum <a_(2), b_(1)> a_(1) omega(b_(2)).
DoubleElem dd_relation_residue(const Session& s, const DoubleElem& a, const DoubleElem& b);

std::string to_string(const DoubleKey& k, const QuiverSpec& q);
std::string to_string(const DoubleElem& x, const QuiverSpec& q);

}  // namespace qloop

#endif
