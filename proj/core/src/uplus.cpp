#include "qloop/uplus.hpp"

#include "session_caches.hpp"

namespace qloop {

const UPlusBasis& uplus_basis(const Session& s, const DimVector& degree) {
    {
        std::lock_guard<std::mutex> lock(s.cache_mutex());
        auto it = s.caches().basis.find(degree);
        if (it != s.caches().basis.end()) return it->second;
    }
    const GramTable& g = gram(s, degree);
    UPlusBasis b;
    b.degree = degree;
    b.pivot_indices = symmetric_pivot_set(g.matrix);
    if (static_cast<int>(b.pivot_indices.size()) != g.rank)
        throw std::runtime_error("internal: pivot set size differs from Gram rank");
    for (int k : b.pivot_indices) b.pivot_words.push_back(g.words[k]);

    ScalarMatrix sub(b.pivot_indices.size(), ScalarVector(b.pivot_indices.size()));
    for (size_t r = 0; r < b.pivot_indices.size(); ++r)
        for (size_t c = 0; c < b.pivot_indices.size(); ++c)
            sub[r][c] = g.matrix[b.pivot_indices[r]][b.pivot_indices[c]];
    b.gram_inverse = matrix_inverse(sub);

    std::lock_guard<std::mutex> lock(s.cache_mutex());
    return s.caches().basis.emplace(degree, std::move(b)).first->second;
}

ScalarVector uplus_coords(const Session& s, const FreeElem& x) {
    const DimVector degree = x.degree(s.quiver());
    const GramTable& g = gram(s, degree);
    ScalarVector coords(g.words.size());
    for (size_t k = 0; k < g.words.size(); ++k) {
        Scalar acc;
        for (const auto& [w, c] : x.terms()) acc += c * pair_words(s, g.words[k], w);
        coords[k] = acc;
    }
    return coords;
}

namespace {

Word level_word(VertexId i, const Composition& c) {
    std::vector<GenIndex> letters;
    letters.reserve(c.parts.size());
    for (int p : c.parts) letters.push_back({i, p});
    return Word(std::move(letters));
}

// Lower-level span of degree l*i: words E_{i,c} with every part below l.
// Partitions at isotropic vertices (commutators sit in the radical),
// compositions otherwise.
std::vector<Word> lower_span_words(const QuiverSpec& q, VertexId i, int l) {
    auto comps = q.is_isotropic(i) ? partitions_of(l) : compositions_of(l);
    std::vector<Word> words;
    for (const auto& c : comps)
        if (c.parts.size() >= 2) words.push_back(level_word(i, c));
    return words;
}

PrimitiveData compute_primitive(const Session& s, VertexId i, int level) {
    const QuiverSpec& q = s.quiver();
    if (!q.is_imaginary(i))
        throw std::invalid_argument("primitive elements a_{i,l} live at imaginary vertices");
    if (level < 1) throw std::invalid_argument("level must be positive");
    s.check_height(level);

    PrimitiveData p;
    p.vertex = i;
    p.level = level;
    const Word top = Word::single({i, level});
    if (level == 1) {
        p.representative = FreeElem::from_word(top);
        p.tau = q.nu({i, 1});
        return p;
    }

    const std::vector<Word> span = lower_span_words(q, i, level);
    const size_t n = span.size();
    // <E_{i,l} - sum_a x_a w_a, w_b> = 0 for all b: solve M^T x = rhs.
    ScalarMatrix mt(n, ScalarVector(n));
    ScalarMatrix rhs(n, ScalarVector(1));
    for (size_t b = 0; b < n; ++b) {
        for (size_t a = 0; a < n; ++a) mt[b][a] = pair_words(s, span[a], span[b]);
        rhs[b][0] = pair_words(s, top, span[b]);
    }
    auto sol = Echelon(mt, rhs).solve();
    if (!sol)
        throw std::runtime_error("pairing degenerate beyond radical; hypothesis (hypo) violated");

    FreeElem rep = FreeElem::from_word(top);
    for (size_t a = 0; a < n; ++a) rep.add_term(span[a], -(*sol)[a][0]);
    p.representative = std::move(rep);
    p.tau = pair(s, p.representative, p.representative);
    return p;
}

}  // namespace

const PrimitiveData& primitive_a(const Session& s, VertexId i, int level) {
    const GenIndex key{i, level};
    {
        std::lock_guard<std::mutex> lock(s.cache_mutex());
        auto it = s.caches().primitive.find(key);
        if (it != s.caches().primitive.end()) return it->second;
    }
    PrimitiveData p = compute_primitive(s, i, level);
    std::lock_guard<std::mutex> lock(s.cache_mutex());
    return s.caches().primitive.emplace(key, std::move(p)).first->second;
}

std::vector<FreeElem> primitive_solution_kernel(const Session& s, VertexId i, int level) {
    const QuiverSpec& q = s.quiver();
    if (!q.is_imaginary(i))
        throw std::invalid_argument("primitive elements a_{i,l} live at imaginary vertices");
    const std::vector<Word> span = lower_span_words(q, i, level);
    const size_t n = span.size();
    ScalarMatrix mt(n, ScalarVector(n));
    for (size_t b = 0; b < n; ++b)
        for (size_t a = 0; a < n; ++a) mt[b][a] = pair_words(s, span[a], span[b]);
    std::vector<FreeElem> out;
    for (const auto& vec : Echelon(mt).kernel()) {
        FreeElem x;
        for (size_t a = 0; a < n; ++a) x.add_term(span[a], vec[a]);
        out.push_back(std::move(x));
    }
    return out;
}

bool check_primitivity(const Session& s, const PrimitiveData& p) {
    const QuiverSpec& q = s.quiver();
    TensorElem d = delta(q, p.representative);
    for (const auto& [w, c] : p.representative.terms()) {
        d.add_term(w, Word(), -c);
        d.add_term(Word(), w, -c);
    }
    return tensor_vanishes_in_uplus(s, d);
}

bool bar_invariance_check(const Session& s, const PrimitiveData& p) {
    return in_radical(s, bar(p.representative) - p.representative);
}

FreeElem a_product(const Session& s, VertexId i, const Composition& c) {
    FreeElem acc = FreeElem::unit();
    for (int part : c.parts) acc = fa_mul(acc, primitive_a(s, i, part).representative);
    return acc;
}

Scalar tau_product(const Session& s, VertexId i, const Composition& c) {
    Scalar acc(1);
    for (int part : c.parts) acc *= primitive_a(s, i, part).tau;
    return acc;
}

namespace {

// Coordinates of every word of degree l*i in the spanning set
// {a_{i,c} : c in C_{i,l}}, solved once per (i,l) and cached. Column w of the
// result expresses [word w] = sum_c coords[c][w] [a_{i,c}] in U^+.
const ScalarMatrix& a_span_coords(const Session& s, VertexId i, int level) {
    const GenIndex key{i, level};
    {
        std::lock_guard<std::mutex> lock(s.cache_mutex());
        auto it = s.caches().a_coords.find(key);
        if (it != s.caches().a_coords.end()) return it->second;
    }
    const QuiverSpec& q = s.quiver();
    const auto comps = enumerate_c(q, i, level);
    const GramTable& g = gram(s, q.gen_degree({i, level}));

    std::vector<FreeElem> a_elems;
    for (const auto& c : comps) a_elems.push_back(a_product(s, i, c));

    ScalarMatrix lhs(g.words.size(), ScalarVector(comps.size()));
    for (size_t u = 0; u < g.words.size(); ++u)
        for (size_t c = 0; c < comps.size(); ++c) {
            Scalar acc;
            for (const auto& [w, coef] : a_elems[c].terms())
                acc += coef * pair_words(s, g.words[u], w);
            lhs[u][c] = acc;
        }
    auto sol = Echelon(lhs, g.matrix).solve();
    if (!sol)
        throw std::runtime_error(
            "coproduct-component extraction failed: {a_{i,c}} does not span U^+[l*i]");
    std::lock_guard<std::mutex> lock(s.cache_mutex());
    return s.caches().a_coords.emplace(key, std::move(*sol)).first->second;
}

FreeElem delta_component_single(const Session& s, VertexId i, int part, const FreeElem& x,
                                DeltaSide side) {
    const QuiverSpec& q = s.quiver();
    if (x.is_zero()) return {};
    const DimVector dx = x.degree(q);
    const DimVector leg = q.gen_degree({i, part});
    const DimVector rest = dx - leg;
    if (!rest.is_nonnegative()) return {};

    const auto comps = enumerate_c(q, i, part);
    size_t trivial = comps.size();
    for (size_t k = 0; k < comps.size(); ++k)
        if (comps[k].parts.size() == 1) trivial = k;

    const ScalarMatrix& coords = a_span_coords(s, i, part);
    const GramTable& g = gram(s, leg);
    std::map<Word, int> word_index;
    for (size_t k = 0; k < g.words.size(); ++k) word_index[g.words[k]] = static_cast<int>(k);

    TensorElem block =
        side == DeltaSide::lower
            ? delta(q, x).bidegree_part(q, rest, leg)
            : delta(q, x).bidegree_part(q, leg, rest);

    FreeElem out;
    for (const auto& [key, c] : block.terms()) {
        const Word& a_leg = side == DeltaSide::lower ? key.second : key.first;
        const Word& carried = side == DeltaSide::lower ? key.first : key.second;
        const Scalar& lambda = coords[trivial][word_index.at(a_leg)];
        if (lambda.is_zero()) continue;
        out.add_term(carried, c * lambda);
    }
    return out;
}

}  // namespace

FreeElem delta_component(const Session& s, VertexId i, const Composition& c, const FreeElem& x,
                         DeltaSide side) {
    if (c.parts.empty()) throw std::invalid_argument("composition must be nonempty");
    FreeElem acc = x;
    if (side == DeltaSide::lower) {
        // delta(x) = sum_c delta_{i,c}(x) (x) a_{i,c} + obd, a_{i,c} read off
        // its rightmost factor first.
        for (size_t k = c.parts.size(); k-- > 0;)
            acc = delta_component_single(s, i, c.parts[k], acc, side);
    } else {
        for (size_t k = 0; k < c.parts.size(); ++k)
            acc = delta_component_single(s, i, c.parts[k], acc, side);
    }
    return acc;
}

}  // namespace qloop
