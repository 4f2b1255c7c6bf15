#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qspec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated precondition or semantically invalid input (zero ring, non-monic modulus, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured resource cap was exceeded.
class SizingError : public Error {
public:
    using Error::Error;
};

// A computed structure disagreed with the result it is supposed to reproduce.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("at position " + std::to_string(position) + ": " + message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Caps shared by every construction and enumeration.
struct Limits {
    std::size_t max_ring_size = 4096;
    std::size_t verify_axioms_up_to = 256;
    std::size_t max_ideals = 100000;
    std::size_t max_closed_sets = std::size_t{1} << 20;
};

}  // namespace qspec
