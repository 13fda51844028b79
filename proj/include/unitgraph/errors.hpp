#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitgraph {

/// Raised by the ring-spec parser. Semantic errors (GF(6), Z1, ...) carry
/// the position of the offending atom and an empty expected list.
class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, semantic };

    ParseError(Kind kind, std::size_t position, std::string message,
               std::vector<std::string> expected = {});

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    Kind kind_;
    std::size_t position_;
    std::vector<std::string> expected_;
};

/// A ring could not be realized: order above the cap, reducible GF modulus,
/// malformed structural input.
class RealizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration cap (ideal enumeration, oracle size) was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace unitgraph
