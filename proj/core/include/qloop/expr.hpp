#ifndef QLOOP_EXPR_HPP
#define QLOOP_EXPR_HPP

#include <string_view>

#include "qloop/double_alg.hpp"

namespace qloop {

/// Parse error carrying a character position.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, size_t position)
        : std::invalid_argument(msg + " at position " + std::to_string(position)),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Parses elements of F in the rendering grammar: scalar literals and
/// generator atoms E[vertex,level] combined with + - * / ^ and parentheses.
/// Division requires a scalar divisor. Round-trips to_string(FreeElem).
FreeElem parse_free_elem(const QuiverSpec& q, std::string_view text);

/// Parses elements of the double: atoms E[v,l], F[v,l], K[v] (with integer
/// K exponents); products are straightened to normal form on the fly.
DoubleElem parse_double_elem(const Session& s, std::string_view text);

}  // namespace qloop

#endif
