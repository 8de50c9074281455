#pragma once

// Text form of Q(nu) scalars, shared by the CLI and JSON reports.
//
//   scalar := ['-'] term (('+' | '-') term)*
//   term   := rat ['*' 'nu'] | 'nu'
//   rat    := digits ['/' digits]
//
// Whitespace between tokens is ignored.  format_scalar emits the canonical
// spelling: "0", "-3/4", "nu", "-nu", "1+2*nu", "3/2-5*nu".

#include "klein/arith/quadratic.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace klein {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }
    /// The message without the position prefix.
    const std::string& message() const { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

QuadRat parse_scalar(std::string_view text);

/// Comma-separated scalars, e.g. "1+2*nu,0,0,0,0".  Reported positions are
/// offsets into the whole list.
std::vector<QuadRat> parse_scalar_list(std::string_view text);

std::string format_scalar(const QuadRat& x);

}  // namespace klein
