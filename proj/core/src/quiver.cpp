#include "qloop/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qloop {

int DimVector::height() const {
    int h = 0;
    for (int c : coords_) h += c;
    return h;
}

bool DimVector::is_zero() const {
    for (int c : coords_)
        if (c != 0) return false;
    return true;
}

bool DimVector::is_nonnegative() const {
    for (int c : coords_)
        if (c < 0) return false;
    return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
    DimVector r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
    DimVector r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
}

DimVector DimVector::scaled(int k) const {
    DimVector r = *this;
    for (auto& c : r.coords_) c *= k;
    return r;
}

int Composition::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

VertexId QuiverSpec::add_vertex(const std::string& name) {
    for (const auto& n : names_)
        if (n == name) throw std::invalid_argument("duplicate vertex '" + name + "'");
    names_.push_back(name);
    loops_.push_back(0);
    for (auto& row : edges_) row.push_back(0);
    edges_.emplace_back(names_.size(), 0);
    return static_cast<VertexId>(names_.size()) - 1;
}

void QuiverSpec::add_edge(const std::string& a, const std::string& b) {
    add_edge(vertex_index(a), vertex_index(b));
}

void QuiverSpec::add_edge(VertexId a, VertexId b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
        ++loops_[a];
    } else {
        ++edges_[a][b];
        ++edges_[b][a];
    }
}

void QuiverSpec::set_nu(GenIndex iota, const Scalar& value) {
    check_vertex(iota.vertex);
    if (value.is_zero()) throw std::invalid_argument("nu must be nonzero");
    if (is_real(iota.vertex) && iota.level != 1)
        throw std::invalid_argument("real vertex '" + names_[iota.vertex] +
                                    "' only carries level 1");
    if (iota.level < 1) throw std::invalid_argument("generator level must be positive");
    nu_[iota] = value;
}

void QuiverSpec::set_nu_default(const Scalar& value) {
    if (value.is_zero()) throw std::invalid_argument("nu must be nonzero");
    nu_default_ = value;
}

const std::string& QuiverSpec::vertex_name(VertexId i) const {
    check_vertex(i);
    return names_[i];
}

VertexId QuiverSpec::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<VertexId>(i);
    throw std::invalid_argument("unknown vertex '" + name + "'");
}

int QuiverSpec::loop_count(VertexId i) const {
    check_vertex(i);
    return loops_[i];
}

int QuiverSpec::edge_count(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return loops_[a];
    return edges_[a][b];
}

int QuiverSpec::euler_form(VertexId i, VertexId j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return 2 - 2 * loops_[i];
    return -edges_[i][j];
}

long QuiverSpec::euler_form(const DimVector& a, const DimVector& b) const {
    if (a.size() != vertex_count() || b.size() != vertex_count())
        throw std::invalid_argument("dimension vector size mismatch");
    long acc = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            acc += static_cast<long>(a[i]) * b[j] *
                   euler_form(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    return acc;
}

Scalar QuiverSpec::v_vertex(VertexId i) const { return Scalar::v_power(1 - loop_count(i)); }

Scalar QuiverSpec::nu(GenIndex iota) const {
    check_vertex(iota.vertex);
    if (iota.level < 1 || (is_real(iota.vertex) && iota.level != 1))
        throw std::invalid_argument("no generator (" + vertex_name(iota.vertex) + "," +
                                    std::to_string(iota.level) + "): real vertices only carry level 1");
    auto it = nu_.find(iota);
    if (it != nu_.end()) return it->second;
    if (nu_default_) return *nu_default_;
    throw std::invalid_argument("nu undefined for (" + vertex_name(iota.vertex) + "," +
                                std::to_string(iota.level) + ")");
}

bool QuiverSpec::has_nu(GenIndex iota) const {
    return nu_.count(iota) > 0 || nu_default_.has_value();
}

DimVector QuiverSpec::unit_vector(VertexId i) const {
    check_vertex(i);
    DimVector d(vertex_count());
    d[i] = 1;
    return d;
}

DimVector QuiverSpec::gen_degree(GenIndex iota) const {
    check_vertex(iota.vertex);
    DimVector d(vertex_count());
    d[iota.vertex] = iota.level;
    return d;
}

void QuiverSpec::check_vertex(VertexId i) const {
    if (i < 0 || static_cast<size_t>(i) >= names_.size())
        throw std::invalid_argument("unknown vertex index " + std::to_string(i));
}

QuiverSpec QuiverSpec::parse(std::istream& in, const std::string& source_name) {
    QuiverSpec q;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument(source_name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        try {
            if (keyword == "vertex") {
                std::string name;
                if (!(ls >> name)) fail("vertex needs a name");
                q.add_vertex(name);
            } else if (keyword == "edge") {
                std::string a, b;
                if (!(ls >> a >> b)) fail("edge needs two endpoints");
                q.add_edge(a, b);
            } else if (keyword == "nu") {
                std::string name;
                int level;
                if (!(ls >> name >> level)) fail("nu needs a vertex, a level and an expression");
                std::string expr;
                std::getline(ls, expr);
                q.set_nu({q.vertex_index(name), level}, Scalar::parse(expr));
            } else if (keyword == "nu-default") {
                std::string expr;
                std::getline(ls, expr);
                q.set_nu_default(Scalar::parse(expr));
            } else {
                fail("unknown directive '" + keyword + "'");
            }
        } catch (const std::invalid_argument& e) {
            std::string what = e.what();
            if (what.rfind(source_name, 0) == 0) throw;
            fail(what);
        }
    }
    return q;
}

QuiverSpec QuiverSpec::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open quiver file '" + path + "'");
    return parse(in, path);
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix,
                      std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back({prefix});
        return;
    }
    for (int p = remaining; p >= 1; --p) {
        prefix.push_back(p);
        compositions_rec(remaining - p, prefix, out);
        prefix.pop_back();
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back({prefix});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int l) {
    if (l < 1) throw std::invalid_argument("compositions_of: l must be positive");
    std::vector<Composition> out;
    std::vector<int> prefix;
    compositions_rec(l, prefix, out);
    return out;
}

std::vector<Composition> partitions_of(int l) {
    if (l < 1) throw std::invalid_argument("partitions_of: l must be positive");
    std::vector<Composition> out;
    std::vector<int> prefix;
    partitions_rec(l, l, prefix, out);
    return out;
}

std::vector<Composition> enumerate_c(const QuiverSpec& q, VertexId i, int l) {
    if (!q.is_imaginary(i))
        throw std::invalid_argument("C_{i,l} only defined at imaginary vertices");
    return q.is_isotropic(i) ? partitions_of(l) : compositions_of(l);
}

Scalar quantum_integer(int t) {
    // [t] = v^(t-1) + v^(t-3) + ... + v^(1-t)
    if (t < 0) throw std::invalid_argument("quantum_integer: negative argument");
    IntPoly num;
    for (int k = 0; k < t; ++k) num.set_coeff(2 * k, 1);
    return Scalar::from_fraction(num, IntPoly::monomial(1, t > 0 ? t - 1 : 0));
}

Scalar quantum_factorial(int t) {
    Scalar r(1);
    for (int s = 2; s <= t; ++s) r *= quantum_integer(s);
    return r;
}

namespace {

void degrees_rec(size_t coord, int budget, DimVector& cur, std::vector<DimVector>& out) {
    if (coord == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= budget; ++k) {
        cur[coord] = k;
        degrees_rec(coord + 1, budget - k, cur, out);
    }
    cur[coord] = 0;
}

}  // namespace

std::vector<DimVector> degrees_up_to(const QuiverSpec& q, int max_height) {
    std::vector<DimVector> out;
    DimVector cur = q.zero_vector();
    degrees_rec(0, max_height, cur, out);
    std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a < b;
    });
    return out;
}

std::string to_string(const DimVector& d, const QuiverSpec& q) {
    std::string out = "[";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += q.vertex_name(static_cast<VertexId>(i)) + ":" + std::to_string(d[i]);
    }
    return out + "]";
}

DimVector parse_dim_vector(const QuiverSpec& q, const std::string& text) {
    DimVector d(q.vertex_count());
    if (text.empty()) return d;
    size_t idx = 0, start = 0;
    bool named = text.find('=') != std::string::npos;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) {
            if (named) {
                size_t eq = piece.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("expected name=value in '" + piece + "'");
                VertexId v = q.vertex_index(piece.substr(0, eq));
                d[v] = std::stoi(piece.substr(eq + 1));
            } else {
                if (idx >= d.size())
                    throw std::invalid_argument("too many coordinates in '" + text + "'");
                d[idx++] = std::stoi(piece);
            }
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return d;
}

}  // namespace qloop
