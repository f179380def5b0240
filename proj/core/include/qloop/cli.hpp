#ifndef QLOOP_CLI_HPP
#define QLOOP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>

#include "qloop/freealg.hpp"
#include "qloop/session.hpp"

namespace qloop {

/// Configuration shared by all commands.
struct SessionConfig {
    QuiverSpec quiver;
    int max_height = 4;
    int series_order = 20;
    std::uint64_t random_seed = 0;
    bool json = false;  // machine-readable records instead of tables
};

using CommandArgs = std::map<std::string, std::string>;

/// Dispatches one command. Records are written to `out` in deterministic
/// order; identical config and seed give byte-identical output.
/// Exit status: 0 all checks passed, 1 some check failed, 2 usage or parse
/// error (including height-cutoff violations).
int run_command(const SessionConfig& cfg, const std::string& command, const CommandArgs& args,
                std::ostream& out);

/// Deterministic RNG for randomized diagnostics. Draws go through the raw
/// mt19937_64 stream (reduction by modulus), so sequences are identical on
/// every platform.
class DiagRng {
public:
    explicit DiagRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 engine_;
};

/// One nu draw: 1 + c1 v^-1 + c2 v^-2 with c1, c2 in {0,1,2}. Stays inside
/// 1 + v^-1 N[[v^-1]], the membership hypothesis territory.
Scalar random_nu_draw(DiagRng& rng);

/// Copy of q with every generator index below the cutoff given a fresh draw,
/// vertices in declaration order and levels ascending.
QuiverSpec with_random_nu(const QuiverSpec& q, DiagRng& rng, int max_height);

/// Random homogeneous element of the given degree: coefficients drawn from
/// {0,1,2,3} per word, patched to keep the element nonzero.
FreeElem random_homogeneous(const Session& s, DiagRng& rng, const DimVector& degree);

}  // namespace qloop

#endif
