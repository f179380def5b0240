#ifndef QLOOP_QUIVER_HPP
#define QLOOP_QUIVER_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

/// Index into a QuiverSpec's ordered vertex list.
using VertexId = int;

/// Generator index iota = (i, l) in I_infty. Real vertices only carry l = 1.
struct GenIndex {
    VertexId vertex = 0;
    int level = 1;
    auto operator<=>(const GenIndex&) const = default;
};

/// Element of NI or ZI: one integer per vertex of the ambient quiver.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(size_t n) : coords_(n, 0) {}

    int operator[](size_t i) const { return coords_[i]; }
    int& operator[](size_t i) { return coords_[i]; }
    size_t size() const { return coords_.size(); }

    int height() const;
    bool is_zero() const;
    bool is_nonnegative() const;

    DimVector operator+(const DimVector& o) const;
    DimVector operator-(const DimVector& o) const;
    DimVector scaled(int k) const;
    auto operator<=>(const DimVector&) const = default;

private:
    std::vector<int> coords_;
};

/// Tuple of positive integers; a partition when weakly decreasing.
struct Composition {
    std::vector<int> parts;

    int sum() const;
    auto operator<=>(const Composition&) const = default;
};

/// Quiver with loops, the parameter family nu, and the symmetric Euler form.
/// Edge orientation is discarded: only edge multiplicities enter the form.
class QuiverSpec {
public:
    VertexId add_vertex(const std::string& name);
    void add_edge(const std::string& a, const std::string& b);
    void add_edge(VertexId a, VertexId b);
    void set_nu(GenIndex iota, const Scalar& value);
    void set_nu_default(const Scalar& value);

    size_t vertex_count() const { return names_.size(); }
    const std::string& vertex_name(VertexId i) const;
    VertexId vertex_index(const std::string& name) const;  // throws on unknown vertex

    int loop_count(VertexId i) const;
    int edge_count(VertexId a, VertexId b) const;
    bool is_real(VertexId i) const { return loop_count(i) == 0; }
    bool is_imaginary(VertexId i) const { return loop_count(i) >= 1; }
    bool is_isotropic(VertexId i) const { return loop_count(i) == 1; }

    /// (i,j) on vertices: 2 - 2*omega_i on the diagonal, minus the edge count off it.
    int euler_form(VertexId i, VertexId j) const;
    /// Bilinear extension to ZI.
    long euler_form(const DimVector& a, const DimVector& b) const;
    /// v_i = v^{(i,i)/2}; the exponent 1 - omega_i is always an integer.
    Scalar v_vertex(VertexId i) const;

    Scalar nu(GenIndex iota) const;  // set value, else the default; throws if neither
    bool has_nu(GenIndex iota) const;
    const std::map<GenIndex, Scalar>& nu_overrides() const { return nu_; }
    const std::optional<Scalar>& nu_default() const { return nu_default_; }

    DimVector zero_vector() const { return DimVector(vertex_count()); }
    DimVector unit_vector(VertexId i) const;
    DimVector gen_degree(GenIndex iota) const;  // deg E_{i,l} = l*i

    void check_vertex(VertexId i) const;

    /// Line-oriented quiver file: `vertex <name>`, `edge <a> <b>`,
    /// `nu <name> <level> <expr>`, `nu-default <expr>`, `#` comments.
    static QuiverSpec parse(std::istream& in, const std::string& source_name = "<input>");
    static QuiverSpec parse_file(const std::string& path);

private:
    std::vector<std::string> names_;
    std::vector<int> loops_;
    std::vector<std::vector<int>> edges_;  // symmetric multiplicity matrix, loops on diagonal
    std::map<GenIndex, Scalar> nu_;
    std::optional<Scalar> nu_default_;
};

/// All compositions of l, lexicographically descending: (3),(2,1),(1,2),(1,1,1).
std::vector<Composition> compositions_of(int l);
/// All partitions of l, lexicographically descending: (3),(2,1),(1,1,1).
std::vector<Composition> partitions_of(int l);

/// C_{i,l}: compositions of l when (i,i) < 0, partitions when i is isotropic.
/// Throws std::invalid_argument for real i.
std::vector<Composition> enumerate_c(const QuiverSpec& q, VertexId i, int l);

/// [t]_v = (v^t - v^-t)/(v - v^-1).
Scalar quantum_integer(int t);
/// [t]_v! — the divided-power denominator at real vertices.
Scalar quantum_factorial(int t);

/// All alpha in NI with ht(alpha) <= max_height, ordered by height then
/// lexicographically.
std::vector<DimVector> degrees_up_to(const QuiverSpec& q, int max_height);

std::string to_string(const DimVector& d, const QuiverSpec& q);
/// Accepts "1,0,2" (vertex order) or "i=1,k=2" (named, others zero).
DimVector parse_dim_vector(const QuiverSpec& q, const std::string& text);

}  // namespace qloop

#endif
