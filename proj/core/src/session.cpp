#include "qloop/session.hpp"

#include "session_caches.hpp"

namespace qloop {

Session::Session(QuiverSpec quiver, int max_height, int series_order)
    : quiver_(std::move(quiver)),
      max_height_(max_height),
      series_order_(series_order),
      caches_(std::make_unique<detail::SessionCaches>()) {
    if (max_height_ < 1) throw std::invalid_argument("max height must be >= 1");
    if (series_order_ < 1) throw std::invalid_argument("series order must be >= 1");
    // Every generator index reachable below the cutoff needs a nonzero nu.
    for (VertexId i = 0; i < static_cast<VertexId>(quiver_.vertex_count()); ++i) {
        const int top = quiver_.is_real(i) ? 1 : max_height_;
        for (int l = 1; l <= top; ++l) {
            const Scalar value = quiver_.nu({i, l});  // throws when undefined
            if (value.is_zero())
                throw std::invalid_argument("nu must be nonzero at (" + quiver_.vertex_name(i) +
                                            "," + std::to_string(l) + ")");
        }
    }
}

Session::~Session() = default;

void Session::check_height(int h) const {
    if (h > max_height_)
        throw CutoffError("height cutoff exceeded: " + std::to_string(h) + " > " +
                          std::to_string(max_height_));
}

}  // namespace qloop
