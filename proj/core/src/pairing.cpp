#include "qloop/pairing.hpp"

#include "session_caches.hpp"

namespace qloop {

namespace {

// Memoized delta of a single word.
const TensorElem& delta_cached(const Session& s, const Word& w) {
    {
        std::lock_guard<std::mutex> lock(s.cache_mutex());
        auto it = s.caches().delta.find(w);
        if (it != s.caches().delta.end()) return it->second;
    }
    TensorElem d = delta_word(s.quiver(), w);
    std::lock_guard<std::mutex> lock(s.cache_mutex());
    return s.caches().delta.emplace(w, std::move(d)).first->second;
}

}  // namespace

Scalar pair_words(const Session& s, const Word& x, const Word& y) {
    const QuiverSpec& q = s.quiver();
    const DimVector dx = x.degree(q);
    if (!(dx == y.degree(q))) return Scalar();
    s.check_height(dx.height());
    if (x.empty()) return Scalar(1);
    if (x.length() == 1 && y.length() == 1) {
        // Equal degrees on single letters force equal generators.
        return q.nu(x.letter(0));
    }

    const std::pair<Word, Word> key{x, y};
    {
        std::lock_guard<std::mutex> lock(s.cache_mutex());
        auto it = s.caches().pair.find(key);
        if (it != s.caches().pair.end()) return it->second;
    }

    Scalar acc;
    if (x.length() >= 2) {
        // <E_iota w, y> = sum <E_iota, y_(1)> <w, y_(2)> over matching bidegrees.
        const GenIndex iota = x.letter(0);
        const Word head = Word::single(iota);
        const Word rest = x.subword(1, x.length() - 1);
        const DimVector dh = q.gen_degree(iota);
        const DimVector dr = dx - dh;
        for (const auto& [legs, c] : delta_cached(s, y).terms()) {
            if (!(legs.first.degree(q) == dh) || !(legs.second.degree(q) == dr)) continue;
            Scalar left = pair_words(s, head, legs.first);
            if (left.is_zero()) continue;
            Scalar right = pair_words(s, rest, legs.second);
            if (right.is_zero()) continue;
            acc += c * left * right;
        }
    } else {
        // x = E_{i,l} against a longer word: peel y through delta(E_{i,l}).
        const GenIndex iota = x.letter(0);
        const GenIndex kappa = y.letter(0);
        if (kappa.vertex == iota.vertex && kappa.level < iota.level) {
            const int l = iota.level, k = kappa.level;
            const Word rest = y.subword(1, y.length() - 1);
            acc = q.v_vertex(iota.vertex).pow(static_cast<long>(k) * (l - k)) *
                  q.nu({iota.vertex, k}) *
                  pair_words(s, Word::single({iota.vertex, l - k}), rest);
        }
    }

    std::lock_guard<std::mutex> lock(s.cache_mutex());
    return s.caches().pair.emplace(key, std::move(acc)).first->second;
}

Scalar pair(const Session& s, const FreeElem& x, const FreeElem& y) {
    Scalar acc;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            Scalar p = pair_words(s, wx, wy);
            if (!p.is_zero()) acc += cx * cy * p;
        }
    return acc;
}

const GramTable& gram(const Session& s, const DimVector& degree) {
    {
        std::lock_guard<std::mutex> lock(s.cache_mutex());
        auto it = s.caches().gram.find(degree);
        if (it != s.caches().gram.end()) return it->second;
    }
    if (!degree.is_nonnegative())
        throw std::invalid_argument("gram: degree must be nonnegative");
    s.check_height(degree.height());

    GramTable t;
    t.degree = degree;
    t.words = words_of_degree(s.quiver(), degree);
    const size_t n = t.words.size();
    t.matrix.assign(n, ScalarVector(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) t.matrix[r][c] = pair_words(s, t.words[r], t.words[c]);

    Echelon e(t.matrix);
    t.rank = e.rank();
    for (const auto& vec : e.kernel()) {
        FreeElem x;
        for (size_t k = 0; k < n; ++k) x.add_term(t.words[k], vec[k]);
        t.kernel_basis.push_back(std::move(x));
    }

    std::lock_guard<std::mutex> lock(s.cache_mutex());
    return s.caches().gram.emplace(degree, std::move(t)).first->second;
}

int graded_dim(const Session& s, const DimVector& degree) { return gram(s, degree).rank; }

FreeElem serre_element(const Session& s, GenIndex iota, VertexId j) {
    const QuiverSpec& q = s.quiver();
    if (!q.is_real(j))
        throw std::invalid_argument("Serre elements need a real vertex as second argument");
    const int bound = -iota.level * q.euler_form(iota.vertex, j) + 1;
    if (bound < 0)
        throw std::invalid_argument("Serre element undefined: -(iota,j)+1 is negative");
    s.check_height(iota.level + bound);

    const FreeElem mid = FreeElem::generator(iota);
    FreeElem acc;
    for (int t = 0; t <= bound; ++t) {
        FreeElem term = fa_mul(divided_power_word(q, j, t),
                               fa_mul(mid, divided_power_word(q, j, bound - t)));
        acc = (t % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

FreeElem iso_commutator(const Session& s, VertexId i, int l, int k) {
    const QuiverSpec& q = s.quiver();
    if (!q.is_isotropic(i))
        throw std::invalid_argument("commutator relations only apply at isotropic vertices");
    if (l < 1 || k < 1) throw std::invalid_argument("levels must be positive");
    s.check_height(l + k);
    const FreeElem el = FreeElem::generator({i, l});
    const FreeElem ek = FreeElem::generator({i, k});
    return fa_mul(el, ek) - fa_mul(ek, el);
}

bool in_radical(const Session& s, const FreeElem& x) {
    for (const auto& [degree, comp] : x.components(s.quiver())) {
        for (const Word& w : words_of_degree(s.quiver(), degree)) {
            Scalar acc;
            for (const auto& [wx, cx] : comp.terms()) acc += cx * pair_words(s, w, wx);
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

bool tensor_vanishes_in_uplus(const Session& s, const TensorElem& x) {
    const QuiverSpec& q = s.quiver();
    // Group terms by bidegree; each block must be killed by all functionals
    // <w1, left> <w2, right>, i.e. G1 * block * G2^T = 0.
    std::map<std::pair<DimVector, DimVector>, std::vector<std::pair<TensorElem::Key, Scalar>>>
        blocks;
    for (const auto& [k, c] : x.terms())
        blocks[{k.first.degree(q), k.second.degree(q)}].emplace_back(k, c);

    for (const auto& [bidegree, entries] : blocks) {
        const GramTable& g1 = gram(s, bidegree.first);
        const GramTable& g2 = gram(s, bidegree.second);
        std::map<Word, int> idx1, idx2;
        for (size_t k = 0; k < g1.words.size(); ++k) idx1[g1.words[k]] = static_cast<int>(k);
        for (size_t k = 0; k < g2.words.size(); ++k) idx2[g2.words[k]] = static_cast<int>(k);

        ScalarMatrix block(g1.words.size(), ScalarVector(g2.words.size()));
        for (const auto& [key, c] : entries)
            block[idx1.at(key.first)][idx2.at(key.second)] += c;

        ScalarMatrix left = matrix_product(g1.matrix, block);
        for (size_t r = 0; r < left.size(); ++r)
            for (size_t c2 = 0; c2 < g2.words.size(); ++c2) {
                Scalar acc;
                for (size_t m = 0; m < g2.words.size(); ++m) {
                    if (left[r][m].is_zero() || g2.matrix[c2][m].is_zero()) continue;
                    acc += left[r][m] * g2.matrix[c2][m];
                }
                if (!acc.is_zero()) return false;
            }
    }
    return true;
}

}  // namespace qloop
