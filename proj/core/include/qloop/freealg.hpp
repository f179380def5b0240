#ifndef QLOOP_FREEALG_HPP
#define QLOOP_FREEALG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qloop/quiver.hpp"
#include "qloop/scalar.hpp"

namespace qloop {

/// Word in the generators E_iota; the empty word is the unit of F.
/// Canonical order: by length first, then lexicographically on (vertex, level),
/// so maps keyed by Word have reproducible iteration order.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<GenIndex> letters) : letters_(std::move(letters)) {}
    static Word single(GenIndex iota) { return Word({iota}); }

    size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<GenIndex>& letters() const { return letters_; }
    const GenIndex& letter(size_t k) const { return letters_[k]; }

    Word concat(const Word& o) const;
    /// Letters [from, from+count).
    Word subword(size_t from, size_t count) const;

    DimVector degree(const QuiverSpec& q) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    std::strong_ordering operator<=>(const Word& o) const;

private:
    std::vector<GenIndex> letters_;
};

/// Finite Q(v)-linear combination of words; zero coefficients are never stored.
class FreeElem {
public:
    FreeElem() = default;
    static FreeElem unit() { return from_word(Word(), Scalar(1)); }
    static FreeElem generator(GenIndex iota) { return from_word(Word::single(iota), Scalar(1)); }
    static FreeElem from_word(const Word& w, const Scalar& coef = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& coef);

    FreeElem operator+(const FreeElem& o) const;
    FreeElem operator-(const FreeElem& o) const;
    FreeElem operator-() const;
    FreeElem scaled(const Scalar& s) const;
    bool operator==(const FreeElem& o) const { return terms_ == o.terms_; }

    /// Split into homogeneous components keyed by degree.
    std::map<DimVector, FreeElem> components(const QuiverSpec& q) const;
    /// Degree when homogeneous; throws otherwise (zero counts as degree 0).
    DimVector degree(const QuiverSpec& q) const;
    int max_height(const QuiverSpec& q) const;

private:
    std::map<Word, Scalar> terms_;
};

/// Element of F (x) F, stored on pairs of words. The product twists:
/// (a(x)b)(c(x)d) = v^((|b|,|c|)) (ac)(x)(bd).
class TensorElem {
public:
    using Key = std::pair<Word, Word>;

    TensorElem() = default;
    static TensorElem from_pair(const Word& a, const Word& b, const Scalar& coef = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add_term(const Word& a, const Word& b, const Scalar& coef);
    TensorElem operator+(const TensorElem& o) const;
    TensorElem operator-(const TensorElem& o) const;
    TensorElem scaled(const Scalar& s) const;
    bool operator==(const TensorElem& o) const { return terms_ == o.terms_; }

    /// Terms whose legs have the given degrees.
    TensorElem bidegree_part(const QuiverSpec& q, const DimVector& left,
                             const DimVector& right) const;

private:
    std::map<Key, Scalar> terms_;
};

/// Concatenation product, extended bilinearly.
FreeElem fa_mul(const FreeElem& a, const FreeElem& b);

/// Twisted product on F (x) F.
TensorElem tensor_mul(const QuiverSpec& q, const TensorElem& x, const TensorElem& y);

/// The comultiplication: delta(E_{i,l}) = sum_{t+t'=l} v_i^{tt'} E_{i,t} (x) E_{i,t'},
/// extended as an algebra morphism into the twisted tensor algebra.
TensorElem delta(const QuiverSpec& q, const FreeElem& x);
TensorElem delta_word(const QuiverSpec& q, const Word& w);

/// E_j^(t) = E_j^t / [t]_v! for a real vertex j.
FreeElem divided_power_word(const QuiverSpec& q, VertexId j, int t);

/// Words fixed, coefficients conjugated by v -> v^-1.
FreeElem bar(const FreeElem& x);

/// All words of the given degree in canonical order; degree 0 yields the empty word.
std::vector<Word> words_of_degree(const QuiverSpec& q, const DimVector& degree);

std::string to_string(const Word& w, const QuiverSpec& q);
std::string to_string(const FreeElem& x, const QuiverSpec& q);

}  // namespace qloop

#endif
