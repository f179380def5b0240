#include "qloop/cli.hpp"

#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qloop/casimir.hpp"
#include "qloop/expr.hpp"

namespace qloop {

using json = nlohmann::ordered_json;

Scalar random_nu_draw(DiagRng& rng) {
    Scalar nu(1);
    for (int k = 1; k <= 2; ++k)
        nu += Scalar(rng.below(3)) * Scalar::v_power(-k);
    return nu;
}

QuiverSpec with_random_nu(const QuiverSpec& q, DiagRng& rng, int max_height) {
    QuiverSpec r = q;
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
        const int top = q.is_real(i) ? 1 : max_height;
        for (int l = 1; l <= top; ++l) r.set_nu({i, l}, random_nu_draw(rng));
    }
    return r;
}

FreeElem random_homogeneous(const Session& s, DiagRng& rng, const DimVector& degree) {
    const auto words = words_of_degree(s.quiver(), degree);
    FreeElem x;
    for (const Word& w : words) x.add_term(w, Scalar(rng.below(4)));
    if (x.is_zero() && !words.empty()) x.add_term(words.front(), Scalar(1));
    return x;
}

namespace {

struct Emitter {
    std::ostream& out;
    bool as_json = true;
    bool all_pass = true;

    void record(const std::string& check, json input, const json& result,
                const json& witness = json()) {
        if (result.is_boolean() && !result.get<bool>()) all_pass = false;
        if (as_json) {
            json rec;
            rec["check"] = check;
            rec["input"] = std::move(input);
            rec["result"] = result;
            if (!witness.is_null()) rec["witness"] = witness;
            out << rec.dump() << "\n";
        } else {
            std::string status = "info";
            if (result.is_boolean()) status = result.get<bool>() ? "pass" : "FAIL";
            out << status << "  " << check << "  " << input.dump() << "  " << result.dump();
            if (!witness.is_null()) out << "  witness=" << witness.dump();
            out << "\n";
        }
    }
};

json degree_json(const QuiverSpec& q, const DimVector& d) {
    json j;
    for (size_t i = 0; i < d.size(); ++i) j[q.vertex_name(static_cast<VertexId>(i))] = d[i];
    return j;
}

json comp_json(const Composition& c) { return json(c.parts); }

int arg_int(const CommandArgs& args, const std::string& key, int fallback) {
    auto it = args.find(key);
    return it == args.end() ? fallback : std::stoi(it->second);
}

std::string arg_string(const CommandArgs& args, const std::string& key) {
    auto it = args.find(key);
    if (it == args.end()) throw std::invalid_argument("missing required argument --" + key);
    return it->second;
}

std::vector<GenIndex> generator_indices(const QuiverSpec& q, int max_level) {
    std::vector<GenIndex> out;
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
        const int top = q.is_real(i) ? 1 : max_level;
        for (int l = 1; l <= top; ++l) out.push_back({i, l});
    }
    return out;
}

std::string gen_name(const QuiverSpec& q, GenIndex g) {
    return "(" + q.vertex_name(g.vertex) + "," + std::to_string(g.level) + ")";
}

// ---------------------------------------------------------------------------
// Suites. Each returns through the emitter; `nu_label` tags which nu
// configuration the session carries.

void suite_dims(const Session& s, Emitter& em) {
    for (const DimVector& d : degrees_up_to(s.quiver(), s.max_height())) {
        const GramTable& g = gram(s, d);
        json result;
        result["words"] = g.words.size();
        result["rank"] = g.rank;
        result["kernel"] = g.kernel_basis.size();
        em.record("dims", json{{"degree", degree_json(s.quiver(), d)}}, result);
    }
}

void suite_modulo(const Session& s, Emitter& em, const std::string& nu_label) {
    const QuiverSpec& q = s.quiver();
    const int bound = std::min(5, s.max_height());
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
        if (!q.is_imaginary(i)) continue;
        for (int size = 1; size <= bound; ++size) {
            for (const Composition& c : compositions_of(size)) {
                long cross = 0;
                for (size_t a = 0; a < c.parts.size(); ++a)
                    for (size_t b = a + 1; b < c.parts.size(); ++b)
                        cross += static_cast<long>(c.parts[a]) * c.parts[b];
                Scalar expected = q.v_vertex(i).pow(cross);
                Word word_c;
                for (int part : c.parts) {
                    expected *= q.nu({i, part});
                    word_c = word_c.concat(Word::single({i, part}));
                }
                const Scalar actual =
                    pair_words(s, Word::single({i, size}), word_c);
                em.record("modulo",
                          json{{"vertex", q.vertex_name(i)},
                               {"c", comp_json(c)},
                               {"nu", nu_label}},
                          actual == expected);
            }
        }
    }
}

void suite_hypo(const Session& s, Emitter& em) {
    const QuiverSpec& q = s.quiver();
    const int order = s.series_order();
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
        if (!q.is_imaginary(i)) continue;
        const std::string name = q.vertex_name(i);
        if (q.is_isotropic(i)) {
            // Isotropic vertices: with nu identically 1 the graded dimension
            // is the partition count.
            const int lmax = std::min(6, s.max_height());
            bool nu_is_one = true;
            for (int l = 1; l <= lmax; ++l) nu_is_one = nu_is_one && q.nu({i, l}).is_one();
            if (!nu_is_one) continue;
            for (int l = 1; l <= lmax; ++l) {
                const int dim = graded_dim(s, q.unit_vector(i).scaled(l));
                const int expected = static_cast<int>(partitions_of(l).size());
                em.record("iso-dim",
                          json{{"vertex", name}, {"level", l}, {"expected", expected}},
                          dim == expected);
            }
            continue;
        }
        const int lmax = std::min(4, s.max_height());
        bool hypo_ok = true;
        for (int l = 1; l <= lmax; ++l) {
            const Scalar norm = pair_words(s, Word::single({i, l}), Word::single({i, l}));
            const bool ok = in_one_plus_vinv_nat(norm, order);
            hypo_ok = hypo_ok && ok;
            em.record("hypo", json{{"vertex", name}, {"level", l}, {"order", order}}, ok);
        }
        if (!hypo_ok) continue;
        // Near-orthonormality of the composition monomials.
        for (int size = 1; size <= lmax; ++size) {
            const auto comps = compositions_of(size);
            for (const Composition& c : comps)
                for (const Composition& c2 : comps) {
                    Word wc, wc2;
                    for (int part : c.parts) wc = wc.concat(Word::single({i, part}));
                    for (int part : c2.parts) wc2 = wc2.concat(Word::single({i, part}));
                    Scalar val = pair_words(s, wc, wc2);
                    if (c == c2) val -= Scalar(1);
                    em.record("nondeg-window",
                              json{{"vertex", name},
                                   {"c", comp_json(c)},
                                   {"c'", comp_json(c2)},
                                   {"order", order}},
                              in_vinv_nat(val, order));
                }
        }
        const int rank_bound = std::min(5, s.max_height());
        for (int l = 1; l <= rank_bound; ++l) {
            const int dim = graded_dim(s, q.unit_vector(i).scaled(l));
            const int expected = 1 << (l - 1);
            em.record("composition-dim",
                      json{{"vertex", name}, {"level", l}, {"expected", expected}},
                      dim == expected);
        }
    }
}

void suite_radical(const Session& s, Emitter& em, const std::string& nu_label) {
    const QuiverSpec& q = s.quiver();
    // Serre elements for every generator against every real vertex that
    // yields a nonnegative exponent bound within the cutoff.
    for (VertexId j = 0; j < static_cast<VertexId>(q.vertex_count()); ++j) {
        if (!q.is_real(j)) continue;
        for (const GenIndex& iota : generator_indices(q, s.max_height())) {
            const int bound = -iota.level * q.euler_form(iota.vertex, j) + 1;
            if (bound < 0) continue;
            if (iota.level + bound > s.max_height()) continue;
            const bool ok = in_radical(s, serre_element(s, iota, j));
            em.record("serre-radical",
                      json{{"iota", gen_name(q, iota)},
                           {"j", q.vertex_name(j)},
                           {"nu", nu_label}},
                      ok);
        }
    }
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
        if (!q.is_isotropic(i)) continue;
        const int bound = std::min(6, s.max_height());
        for (int l = 1; l <= bound - 1; ++l)
            for (int k = l; k + l <= bound; ++k) {
                const bool ok = in_radical(s, iso_commutator(s, i, l, k));
                em.record("iso-comm-radical",
                          json{{"vertex", q.vertex_name(i)},
                               {"l", l},
                               {"k", k},
                               {"nu", nu_label}},
                          ok);
            }
    }
}

void suite_primitive(const Session& s, Emitter& em) {
    const QuiverSpec& q = s.quiver();
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
        if (!q.is_imaginary(i)) continue;
        const int lmax = std::min(4, s.max_height());
        for (int l = 1; l <= lmax; ++l) {
            const json input{{"vertex", q.vertex_name(i)}, {"level", l}};
            const PrimitiveData& p = primitive_a(s, i, l);
            // Orthogonality against the full lower span, compositions included.
            bool orth = true;
            for (const Composition& c : compositions_of(l)) {
                if (c.parts.size() < 2) continue;
                Word w;
                for (int part : c.parts) w = w.concat(Word::single({i, part}));
                orth = orth && pair(s, p.representative, FreeElem::from_word(w)).is_zero();
            }
            em.record("prim-orthogonality", input, orth);
            bool lower = true;
            for (const auto& [w, c] : p.representative.terms())
                for (const auto& g : w.letters()) lower = lower && (g.level <= l);
            em.record("prim-lower-span", input, lower);
            em.record("prim-bar-invariance", input, bar_invariance_check(s, p));
            em.record("prim-primitivity", input, check_primitivity(s, p));
            bool unique = true;
            for (const FreeElem& h : primitive_solution_kernel(s, i, l))
                unique = unique && in_radical(s, h);
            em.record("prim-uniqueness", input, unique);
        }
    }
}

void suite_lemma_delta(const Session& s, Emitter& em, DiagRng& rng) {
    const QuiverSpec& q = s.quiver();
    const int lmax = std::min(3, s.max_height() - 1);
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
        if (!q.is_imaginary(i)) continue;
        for (int l = 1; l <= lmax; ++l) {
            const json input{{"vertex", q.vertex_name(i)}, {"level", l}};
            const PrimitiveData& p = primitive_a(s, i, l);
            bool orth = true;
            for (const Composition& c : enumerate_c(q, i, l)) {
                const Scalar val = pair(s, p.representative, a_product(s, i, c));
                const Scalar expected = c.parts.size() == 1 ? p.tau : Scalar();
                orth = orth && val == expected;
            }
            em.record("delta-orthogonality", input, orth);

            const int hy = std::min({4 - l, s.max_height() - l, 3});
            if (hy < 0) continue;
            const auto degrees = degrees_up_to(q, hy);
            bool left_ok = true, right_ok = true;
            for (int trial = 0; trial < 10; ++trial) {
                const DimVector dy = degrees[rng.below(static_cast<int>(degrees.size()))];
                const DimVector dz = dy + q.gen_degree({i, l});
                const FreeElem y = random_homogeneous(s, rng, dy);
                const FreeElem z = random_homogeneous(s, rng, dz);
                const Composition single{{l}};
                left_ok = left_ok &&
                          pair(s, fa_mul(p.representative, y), z) ==
                              p.tau * pair(s, y, delta_component(s, i, single, z,
                                                                 DeltaSide::upper));
                right_ok = right_ok &&
                           pair(s, fa_mul(y, p.representative), z) ==
                               p.tau * pair(s, y, delta_component(s, i, single, z,
                                                                  DeltaSide::lower));
            }
            em.record("lemma-delta-left", input, left_ok);
            em.record("lemma-delta-right", input, right_ok);
        }
    }
}

void suite_double(const Session& s, Emitter& em, DiagRng& rng) {
    const QuiverSpec& q = s.quiver();
    // The derived sl2-sector rule, reproduced exactly.
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
        const DoubleElem lhs = dd_mul(s, DoubleElem::e_gen(q, {i, 1}),
                                      DoubleElem::f_gen(q, {i, 1}));
        DoubleElem expected = dd_mul(s, DoubleElem::f_gen(q, {i, 1}),
                                     DoubleElem::e_gen(q, {i, 1}));
        const Scalar nu = q.nu({i, 1});
        expected = expected + DoubleElem::k_power(q.unit_vector(i).scaled(-1)).scaled(nu);
        expected = expected - DoubleElem::k_power(q.unit_vector(i)).scaled(nu);
        em.record("dd-sl2-rule", json{{"vertex", q.vertex_name(i)}}, lhs == expected);
    }
    const int bound = std::min(5, s.max_height());
    const auto gens = generator_indices(q, bound);
    for (const GenIndex& a : gens) {
        if (a.level > bound) continue;
        for (const GenIndex& b : gens) {
            if (b.level > bound) continue;
            const DoubleElem residue = dd_relation_residue(
                s, DoubleElem::e_gen(q, a), DoubleElem::e_gen(q, b));
            em.record("dd-residue",
                      json{{"a", gen_name(q, a)}, {"b", gen_name(q, b)}},
                      dd_is_zero(s, residue));
        }
    }
    const int hmax = std::min(3, s.max_height());
    const auto degrees = degrees_up_to(q, hmax);
    bool random_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        DimVector da = degrees[rng.below(static_cast<int>(degrees.size()))];
        DimVector db = degrees[rng.below(static_cast<int>(degrees.size()))];
        const DoubleElem a = DoubleElem::from_e_elem(q, random_homogeneous(s, rng, da));
        const DoubleElem b = DoubleElem::from_e_elem(q, random_homogeneous(s, rng, db));
        random_ok = random_ok && dd_is_zero(s, dd_relation_residue(s, a, b));
    }
    em.record("dd-residue-random", json{{"trials", 20}, {"height", hmax}}, random_ok);
}

DoubleElem hopf_convolution(const Session& s, const DoubleElem& x, bool s_on_left,
                            bool skew) {
    const DoubleTensor d = dd_coproduct(s, x);
    DoubleElem acc;
    for (const auto& [key, c] : d.terms()) {
        DoubleElem left = DoubleElem::from_key(key.first);
        DoubleElem right = DoubleElem::from_key(key.second);
        if (s_on_left)
            left = antipode(s, left, skew);
        else
            right = antipode(s, right, skew);
        acc = acc + dd_mul(s, left, right).scaled(c);
    }
    return acc;
}

bool coassoc_ok(const Session& s, const DoubleElem& x) {
    const DoubleTensor d = dd_coproduct(s, x);
    std::map<std::vector<DoubleKey>, Scalar> diff;
    auto add = [&diff](const std::vector<DoubleKey>& k, const Scalar& c) {
        auto [it, inserted] = diff.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) diff.erase(it);
        }
    };
    for (const auto& [key, c] : d.terms()) {
        const DoubleTensor left = dd_coproduct(s, DoubleElem::from_key(key.first));
        for (const auto& [k2, c2] : left.terms())
            add({k2.first, k2.second, key.second}, c * c2);
        const DoubleTensor right = dd_coproduct(s, DoubleElem::from_key(key.second));
        for (const auto& [k2, c2] : right.terms())
            add({key.first, k2.first, k2.second}, -(c * c2));
    }
    return dd_multi_tensor_is_zero(s, diff);
}

DoubleElem random_double_product(const Session& s, DiagRng& rng, int height) {
    const QuiverSpec& q = s.quiver();
    DoubleElem acc = DoubleElem::unit(q);
    int e_budget = height, f_budget = height;
    const int letters = 2 + rng.below(2);
    for (int k = 0; k < letters; ++k) {
        const VertexId i = static_cast<VertexId>(rng.below(static_cast<int>(q.vertex_count())));
        const int kind = rng.below(3);
        if (kind == 0 && e_budget > 0) {
            const int l = 1 + rng.below(q.is_real(i) ? 1 : e_budget);
            acc = dd_mul(s, acc, DoubleElem::e_gen(q, {i, l}));
            e_budget -= l;
        } else if (kind == 1 && f_budget > 0) {
            const int l = 1 + rng.below(q.is_real(i) ? 1 : f_budget);
            acc = dd_mul(s, acc, DoubleElem::f_gen(q, {i, l}));
            f_budget -= l;
        } else {
            acc = dd_mul(s, acc, DoubleElem::k_power(q.unit_vector(i).scaled(
                                    rng.below(2) ? 1 : -1)));
        }
    }
    return acc;
}

void suite_hopf(const Session& s, Emitter& em, DiagRng& rng) {
    const QuiverSpec& q = s.quiver();
    const int bound = std::min(4, s.max_height());
    std::vector<std::pair<std::string, DoubleElem>> gens;
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i)
        gens.emplace_back("K[" + q.vertex_name(i) + "]",
                          DoubleElem::k_power(q.unit_vector(i)));
    for (const GenIndex& g : generator_indices(q, bound)) {
        gens.emplace_back("E" + gen_name(q, g), DoubleElem::e_gen(q, g));
        gens.emplace_back("F" + gen_name(q, g), DoubleElem::f_gen(q, g));
    }
    for (const auto& [name, x] : gens) {
        const Scalar eps = counit(x);
        DoubleElem left = hopf_convolution(s, x, true, false) -
                          DoubleElem::unit(q).scaled(eps);
        DoubleElem right = hopf_convolution(s, x, false, false) -
                           DoubleElem::unit(q).scaled(eps);
        em.record("hopf-antipode-left", json{{"x", name}}, dd_is_zero(s, left));
        em.record("hopf-antipode-right", json{{"x", name}}, dd_is_zero(s, right));
    }
    for (const GenIndex& g : generator_indices(q, bound)) {
        const DoubleElem e = DoubleElem::e_gen(q, g);
        const DoubleElem f = DoubleElem::f_gen(q, g);
        const bool ok_e = dd_is_zero(s, antipode(s, antipode(s, e, false), true) - e);
        const bool ok_f = dd_is_zero(s, antipode(s, antipode(s, f, false), true) - f);
        em.record("skew-inverse", json{{"iota", gen_name(q, g)}},
                  ok_e && ok_f);
    }
    for (const auto& [name, x] : gens)
        em.record("coassoc", json{{"x", name}}, coassoc_ok(s, x));
    const int hmax = std::min(3, s.max_height());
    bool rand_hopf = true, rand_coassoc = true;
    for (int trial = 0; trial < 10; ++trial) {
        const DoubleElem x = random_double_product(s, rng, hmax);
        const Scalar eps = counit(x);
        rand_hopf = rand_hopf &&
                    dd_is_zero(s, hopf_convolution(s, x, true, false) -
                                      DoubleElem::unit(q).scaled(eps)) &&
                    dd_is_zero(s, hopf_convolution(s, x, false, false) -
                                      DoubleElem::unit(q).scaled(eps));
        rand_coassoc = rand_coassoc && coassoc_ok(s, x);
    }
    em.record("hopf-antipode-random", json{{"trials", 10}}, rand_hopf);
    em.record("coassoc-random", json{{"trials", 10}}, rand_coassoc);
}

void suite_theta(const Session& s, Emitter& em, int p) {
    const QuiverSpec& q = s.quiver();
    const ThetaTrunc theta = theta_build(s, p);
    std::vector<std::pair<std::string, DoubleElem>> gens;
    for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i)
        gens.emplace_back("K[" + q.vertex_name(i) + "]",
                          DoubleElem::k_power(q.unit_vector(i)));
    for (const GenIndex& g : generator_indices(q, p)) {
        gens.emplace_back("E" + gen_name(q, g), DoubleElem::e_gen(q, g));
        gens.emplace_back("F" + gen_name(q, g), DoubleElem::f_gen(q, g));
    }
    for (const auto& [name, u] : gens)
        em.record("theta-intertwine", json{{"u", name}, {"p", p}},
                  theta_intertwine_check(s, theta, u));
}

void suite_casimir(const Session& s, Emitter& em) {
    const QuiverSpec& q = s.quiver();
    std::vector<DimVector> weights;
    weights.push_back(q.zero_vector());
    weights.push_back(q.unit_vector(0));
    if (q.vertex_count() >= 2) weights.push_back(q.unit_vector(0) + q.unit_vector(1));

    for (const DimVector& alpha : weights) {
        const json walpha = degree_json(q, alpha);
        {
            const VermaVec v = VermaVec::highest(alpha);
            const int p = std::min(2, s.max_height());
            em.record("casimir-highest", json{{"alpha", walpha}},
                      verma_equal(s, casimir_apply(s, v, p), v));
        }
        {
            // Stability: raising the truncation past the vector depth is
            // invisible.
            bool stable = true;
            const int dmax = std::min(2, s.max_height() - 2);
            for (const DimVector& d : degrees_up_to(q, std::max(0, dmax)))
                for (const Word& w : words_of_degree(q, d)) {
                    VermaVec m;
                    m.highest_weight = alpha;
                    m.add_term(w, Scalar(1));
                    const int p = d.height() + 1;
                    stable = stable && verma_equal(s, casimir_apply(s, m, p),
                                                   casimir_apply(s, m, p + 1));
                }
            em.record("casimir-stability", json{{"alpha", walpha}}, stable);
        }
        for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
            const int lmax = q.is_real(i) ? 1 : std::min(2, s.max_height());
            for (int l = 1; l <= lmax; ++l) {
                const int depth = std::min(2, s.max_height() - l);
                if (depth < 0) continue;
                em.record("casimir-identities",
                          json{{"alpha", walpha},
                               {"vertex", q.vertex_name(i)},
                               {"level", l},
                               {"depth", depth}},
                          casimir_identity_check(s, alpha, i, l, depth));
            }
        }
    }
}

void suite_f(const Session& s, Emitter& em, int lmax, int box) {
    const QuiverSpec& q = s.quiver();
    const size_t n = q.vertex_count();
    for (VertexId i = 0; i < static_cast<VertexId>(n); ++i) {
        for (int l = 1; l <= lmax; ++l) {
            bool ok = true;
            json witness;
            std::vector<int> idx(n, -box);
            while (true) {
                DimVector alpha(n);
                for (size_t k = 0; k < n; ++k) alpha[k] = idx[k];
                const long lhs = f_of(q, alpha - q.unit_vector(i).scaled(l)) - f_of(q, alpha) +
                                 2L * l * q.euler_form(q.unit_vector(i), alpha);
                const long rhs = static_cast<long>(l) * (l - 1) * q.euler_form(i, i);
                if (lhs != rhs) {
                    ok = false;
                    witness = degree_json(q, alpha);
                    break;
                }
                size_t k = 0;
                while (k < n && idx[k] == box) idx[k++] = -box;
                if (k == n) break;
                ++idx[k];
            }
            em.record("f-identity",
                      json{{"vertex", q.vertex_name(i)}, {"level", l}, {"box", box}}, ok,
                      witness);
        }
    }
}

// ---------------------------------------------------------------------------

int dispatch(const SessionConfig& cfg, const std::string& command, const CommandArgs& args,
             std::ostream& out) {
    Emitter em{out, cfg.json};
    Session session(cfg.quiver, cfg.max_height, cfg.series_order);
    DiagRng rng(cfg.random_seed);
    const QuiverSpec& q = session.quiver();

    if (command == "dims") {
        suite_dims(session, em);
    } else if (command == "gram") {
        auto degrees = args.count("degree")
                           ? std::vector<DimVector>{parse_dim_vector(q, args.at("degree"))}
                           : degrees_up_to(q, cfg.max_height);
        for (const DimVector& d : degrees) {
        const GramTable& g = gram(session, d);
        if (cfg.json) {
            json result;
            result["words"] = g.words.size();
            result["rank"] = g.rank;
            result["kernel"] = g.kernel_basis.size();
            json rows = json::array();
            for (const auto& row : g.matrix) {
                json r = json::array();
                for (const Scalar& x : row) r.push_back(x.to_string());
                rows.push_back(r);
            }
            result["matrix"] = rows;
            em.record("gram", json{{"degree", degree_json(q, d)}}, result);
        } else {
            out << "degree " << to_string(d, q) << ": " << g.words.size() << " words, rank "
                << g.rank << "\n";
            for (size_t r = 0; r < g.words.size(); ++r) {
                out << "  " << to_string(g.words[r], q) << ":";
                for (const Scalar& x : g.matrix[r]) out << "  " << x.to_string();
                out << "\n";
            }
        }
        }
    } else if (command == "radical") {
        auto degrees = args.count("degree")
                           ? std::vector<DimVector>{parse_dim_vector(q, args.at("degree"))}
                           : degrees_up_to(q, cfg.max_height);
        for (const DimVector& d : degrees) {
            const GramTable& g = gram(session, d);
            json basis = json::array();
            for (const FreeElem& x : g.kernel_basis) basis.push_back(to_string(x, q));
            json result;
            result["words"] = g.words.size();
            result["rank"] = g.rank;
            result["kernel"] = g.kernel_basis.size();
            em.record("radical", json{{"degree", degree_json(q, d)}}, result, basis);
        }
    } else if (command == "serre-check" || command == "iso-comm-check") {
        Emitter sub{out, cfg.json};
        suite_radical(session, sub, "config");
        em.all_pass = sub.all_pass;
    } else if (command == "primitive") {
        const VertexId i = q.vertex_index(arg_string(args, "vertex"));
        const int l = arg_int(args, "level", 1);
        const PrimitiveData& p = primitive_a(session, i, l);
        json result;
        result["representative"] = to_string(p.representative, q);
        result["tau"] = p.tau.to_string();
        result["primitivity"] = check_primitivity(session, p);
        result["bar-invariant"] = bar_invariance_check(session, p);
        em.record("primitive",
                  json{{"vertex", q.vertex_name(i)}, {"level", l}}, result);
        if (!result["primitivity"].get<bool>() || !result["bar-invariant"].get<bool>())
            em.all_pass = false;
    } else if (command == "delta-comp") {
        const VertexId i = q.vertex_index(arg_string(args, "vertex"));
        Composition c;
        std::istringstream comp_in(arg_string(args, "comp"));
        for (std::string piece; std::getline(comp_in, piece, ',');)
            if (!piece.empty()) c.parts.push_back(std::stoi(piece));
        const FreeElem x = parse_free_elem(q, arg_string(args, "expr"));
        const auto side =
            args.count("side") && args.at("side") == "upper" ? DeltaSide::upper
                                                             : DeltaSide::lower;
        const FreeElem result = delta_component(session, i, c, x, side);
        em.record("delta-comp",
                  json{{"vertex", q.vertex_name(i)},
                       {"comp", comp_json(c)},
                       {"side", side == DeltaSide::upper ? "upper" : "lower"}},
                  json(to_string(result, q)));
    } else if (command == "straighten") {
        const DoubleElem x = parse_double_elem(session, arg_string(args, "expr"));
        em.record("straighten", json{{"expr", arg_string(args, "expr")}},
                  json(to_string(x, q)));
    } else if (command == "hopf-check") {
        suite_hopf(session, em, rng);
    } else if (command == "theta") {
        const int p = arg_int(args, "max-height", cfg.max_height);
        const ThetaTrunc theta = theta_build(session, p);
        for (const auto& [alpha, pairs] : theta.components) {
            json comps = json::array();
            for (const auto& [bminus, bstar] : pairs)
                comps.push_back(json{{"b-", to_string(bminus, q)},
                                     {"b*", to_string(bstar, q)}});
            em.record("theta", json{{"degree", degree_json(q, alpha)}}, comps);
        }
    } else if (command == "theta-check") {
        // products in U (x) U reach height p + ht(u) before the completion
        // filter applies, so the default truncation leaves that headroom
        const int cap = q.vertex_count() == 1 ? 4 : 3;
        suite_theta(session, em, arg_int(args, "p", std::min(cfg.max_height / 2, cap)));
    } else if (command == "casimir-check") {
        if (args.count("alpha")) {
            const DimVector alpha = parse_dim_vector(q, args.at("alpha"));
            const int depth = arg_int(args, "depth", 2);
            for (VertexId i = 0; i < static_cast<VertexId>(q.vertex_count()); ++i) {
                const int lmax = q.is_real(i) ? 1 : std::min(2, cfg.max_height);
                for (int l = 1; l <= lmax; ++l)
                    em.record("casimir-identities",
                              json{{"alpha", degree_json(q, alpha)},
                                   {"vertex", q.vertex_name(i)},
                                   {"level", l},
                                   {"depth", depth}},
                              casimir_identity_check(session, alpha, i, l, depth));
            }
        } else {
            suite_casimir(session, em);
        }
    } else if (command == "f-check") {
        suite_f(session, em, arg_int(args, "max-height", 5), 3);
    } else if (command == "verify-all") {
        suite_dims(session, em);
        suite_modulo(session, em, "config");
        suite_hypo(session, em);
        suite_radical(session, em, "config");
        for (int draw = 1; draw <= 3; ++draw) {
            Session rs(with_random_nu(q, rng, cfg.max_height), cfg.max_height,
                       cfg.series_order);
            const std::string label = "random-" + std::to_string(draw);
            suite_modulo(rs, em, label);
            suite_radical(rs, em, label);
        }
        suite_primitive(session, em);
        suite_lemma_delta(session, em, rng);
        suite_double(session, em, rng);
        suite_hopf(session, em, rng);
        suite_theta(session, em,
                    std::min(cfg.max_height / 2, q.vertex_count() == 1 ? 4 : 3));
        suite_casimir(session, em);
        suite_f(session, em, std::min(5, cfg.max_height), 3);
    } else {
        throw std::invalid_argument("unknown command '" + command + "'");
    }
    return em.all_pass ? 0 : 1;
}

}  // namespace

int run_command(const SessionConfig& cfg, const std::string& command, const CommandArgs& args,
                std::ostream& out) {
    try {
        return dispatch(cfg, command, args, out);
    } catch (const CutoffError& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qloop
