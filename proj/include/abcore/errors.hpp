#pragma once

#include <stdexcept>
#include <string>

namespace abcore {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class non_coprime : public error {
public:
    non_coprime(long long a, long long b)
        : error("gcd(" + std::to_string(a) + ", " + std::to_string(b) +
                ") != 1: the poset of gaps is infinite"),
          a_(a), b_(b) {}

    long long a() const noexcept { return a_; }
    long long b() const noexcept { return b_; }

private:
    long long a_;
    long long b_;
};

class invalid_family : public error {
public:
    using error::error;
};

class element_not_in_poset : public error {
public:
    explicit element_not_in_poset(int p)
        : error("element " + std::to_string(p) + " is not in the poset"), element_(p) {}

    int element() const noexcept { return element_; }

private:
    int element_;
};

class not_beta_set : public error {
public:
    using error::error;
};

class division_by_non_unit : public error {
public:
    division_by_non_unit() : error("series division by a series with zero constant term") {}
};

class integrality_violation : public error {
public:
    using error::error;
};

class enumeration_too_large : public error {
public:
    enumeration_too_large(std::size_t elements, std::size_t limit)
        : error("poset has " + std::to_string(elements) + " elements; limit is " +
                std::to_string(limit)) {}
};

}  // namespace abcore
