#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace semitotal {

/// Malformed input handed to a constructor or parser.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Edge list rejected; carries the offending pair.
class EdgeError : public InputError {
public:
    EdgeError(const std::string& what, int u, int v) : InputError(what), pair_(u, v) {}
    std::pair<int, int> pair() const { return pair_; }

private:
    std::pair<int, int> pair_;
};

/// graph6 decode failure at a byte offset.
class Graph6Error : public InputError {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : InputError(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A mathematical precondition does not hold (isolated vertex, non-minimum set, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exhaustive enumeration refused because the instance is too large.
class OracleGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A construction that must always succeed did not. Never patched over.
class FalsificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace semitotal
