#ifndef QLOOP_SESSION_HPP
#define QLOOP_SESSION_HPP

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "qloop/quiver.hpp"

namespace qloop {

namespace detail {
struct SessionCaches;
}

/// Raised when an operation would create terms beyond the session height cutoff.
class CutoffError : public std::runtime_error {
public:
    explicit CutoffError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable (quiver, nu, cutoff) context shared by all algebra operations,
/// plus memo caches keyed structurally. The caches are guarded by a mutex so
/// concurrent workers may share one session; recomputation is idempotent.
class Session {
public:
    Session(QuiverSpec quiver, int max_height, int series_order = 20);
    ~Session();
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    const QuiverSpec& quiver() const { return quiver_; }
    int max_height() const { return max_height_; }
    int series_order() const { return series_order_; }

    /// Throws CutoffError when h exceeds the session cutoff.
    void check_height(int h) const;

    detail::SessionCaches& caches() const { return *caches_; }
    std::mutex& cache_mutex() const { return mutex_; }

private:
    QuiverSpec quiver_;
    int max_height_;
    int series_order_;
    std::unique_ptr<detail::SessionCaches> caches_;
    mutable std::mutex mutex_;
};

}  // namespace qloop

#endif
