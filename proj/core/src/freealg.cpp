#include "qloop/freealg.hpp"

#include <algorithm>

namespace qloop {

Word Word::concat(const Word& o) const {
    std::vector<GenIndex> ls = letters_;
    ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(ls));
}

Word Word::subword(size_t from, size_t count) const {
    return Word(std::vector<GenIndex>(letters_.begin() + from, letters_.begin() + from + count));
}

DimVector Word::degree(const QuiverSpec& q) const {
    DimVector d(q.vertex_count());
    for (const auto& g : letters_) d[g.vertex] += g.level;
    return d;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() <=> o.letters_.size();
    return letters_ <=> o.letters_;
}

FreeElem FreeElem::from_word(const Word& w, const Scalar& coef) {
    FreeElem x;
    x.add_term(w, coef);
    return x;
}

Scalar FreeElem::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void FreeElem::add_term(const Word& w, const Scalar& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeElem FreeElem::operator+(const FreeElem& o) const {
    FreeElem r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreeElem FreeElem::operator-(const FreeElem& o) const {
    FreeElem r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

FreeElem FreeElem::operator-() const {
    FreeElem r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreeElem FreeElem::scaled(const Scalar& s) const {
    FreeElem r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
    return r;
}

std::map<DimVector, FreeElem> FreeElem::components(const QuiverSpec& q) const {
    std::map<DimVector, FreeElem> out;
    for (const auto& [w, c] : terms_) out[w.degree(q)].add_term(w, c);
    return out;
}

DimVector FreeElem::degree(const QuiverSpec& q) const {
    if (terms_.empty()) return q.zero_vector();
    DimVector d = terms_.begin()->first.degree(q);
    for (const auto& [w, c] : terms_)
        if (!(w.degree(q) == d)) throw std::invalid_argument("element is not homogeneous");
    return d;
}

int FreeElem::max_height(const QuiverSpec& q) const {
    int h = 0;
    for (const auto& [w, c] : terms_) h = std::max(h, w.degree(q).height());
    return h;
}

TensorElem TensorElem::from_pair(const Word& a, const Word& b, const Scalar& coef) {
    TensorElem t;
    t.add_term(a, b, coef);
    return t;
}

void TensorElem::add_term(const Word& a, const Word& b, const Scalar& coef) {
    if (coef.is_zero()) return;
    Key k{a, b};
    auto [it, inserted] = terms_.emplace(std::move(k), coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
    TensorElem r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TensorElem TensorElem::operator-(const TensorElem& o) const {
    TensorElem r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

TensorElem TensorElem::scaled(const Scalar& s) const {
    TensorElem r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

TensorElem TensorElem::bidegree_part(const QuiverSpec& q, const DimVector& left,
                                     const DimVector& right) const {
    TensorElem r;
    for (const auto& [k, c] : terms_)
        if (k.first.degree(q) == left && k.second.degree(q) == right)
            r.add_term(k.first, k.second, c);
    return r;
}

FreeElem fa_mul(const FreeElem& a, const FreeElem& b) {
    FreeElem r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(wa.concat(wb), ca * cb);
    return r;
}

TensorElem tensor_mul(const QuiverSpec& q, const TensorElem& x, const TensorElem& y) {
    TensorElem r;
    for (const auto& [kx, cx] : x.terms()) {
        const DimVector db = kx.second.degree(q);
        for (const auto& [ky, cy] : y.terms()) {
            const DimVector dc = ky.first.degree(q);
            Scalar twist = Scalar::v_power(q.euler_form(db, dc));
            r.add_term(kx.first.concat(ky.first), kx.second.concat(ky.second), cx * cy * twist);
        }
    }
    return r;
}

TensorElem delta_word(const QuiverSpec& q, const Word& w) {
    TensorElem acc = TensorElem::from_pair(Word(), Word());
    for (const auto& g : w.letters()) {
        TensorElem dg;
        const Scalar vi = q.v_vertex(g.vertex);
        for (int t = 0; t <= g.level; ++t) {
            const int t2 = g.level - t;
            Word left = t > 0 ? Word::single({g.vertex, t}) : Word();
            Word right = t2 > 0 ? Word::single({g.vertex, t2}) : Word();
            dg.add_term(left, right, vi.pow(static_cast<long>(t) * t2));
        }
        acc = tensor_mul(q, acc, dg);
    }
    return acc;
}

TensorElem delta(const QuiverSpec& q, const FreeElem& x) {
    TensorElem r;
    for (const auto& [w, c] : x.terms()) r = r + delta_word(q, w).scaled(c);
    return r;
}

FreeElem divided_power_word(const QuiverSpec& q, VertexId j, int t) {
    if (!q.is_real(j))
        throw std::invalid_argument("divided powers are only defined at real vertices");
    if (t < 0) throw std::invalid_argument("divided power exponent must be nonnegative");
    Word w(std::vector<GenIndex>(t, GenIndex{j, 1}));
    return FreeElem::from_word(w, Scalar(1) / quantum_factorial(t));
}

FreeElem bar(const FreeElem& x) {
    FreeElem r;
    for (const auto& [w, c] : x.terms()) r.add_term(w, c.bar());
    return r;
}

namespace {

void words_rec(const QuiverSpec& q, DimVector remaining, std::vector<GenIndex>& prefix,
               std::vector<Word>& out) {
    if (remaining.is_zero()) {
        out.emplace_back(prefix);
        return;
    }
    for (size_t i = 0; i < remaining.size(); ++i) {
        if (remaining[i] <= 0) continue;
        const VertexId v = static_cast<VertexId>(i);
        const int max_level = q.is_real(v) ? 1 : remaining[i];
        for (int l = 1; l <= max_level; ++l) {
            prefix.push_back({v, l});
            remaining[i] -= l;
            words_rec(q, remaining, prefix, out);
            remaining[i] += l;
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<Word> words_of_degree(const QuiverSpec& q, const DimVector& degree) {
    if (!degree.is_nonnegative())
        throw std::invalid_argument("words exist only for nonnegative degrees");
    std::vector<Word> out;
    std::vector<GenIndex> prefix;
    words_rec(q, degree, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Word& w, const QuiverSpec& q) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t k = 0; k < w.length(); ++k) {
        if (k) out += "*";
        out += "E[" + q.vertex_name(w.letter(k).vertex) + "," +
               std::to_string(w.letter(k).level) + "]";
    }
    return out;
}

std::string to_string(const FreeElem& x, const QuiverSpec& q) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        if (w.empty()) {
            out += "(" + c.to_string() + ")";
        } else if (c.is_one()) {
            out += to_string(w, q);
        } else {
            out += "(" + c.to_string() + ")*" + to_string(w, q);
        }
    }
    return out;
}

}  // namespace qloop
