#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gysin {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class NotNormalCrossing : public Error {
public:
    using Error::Error;
};

class NotSimplePole : public Error {
public:
    using Error::Error;
};

class NotWeylSymmetric : public Error {
public:
    using Error::Error;
};

class ResidualVariable : public Error {
public:
    using Error::Error;
};

class NotPolynomial : public Error {
public:
    using Error::Error;
};

class NegativeMultiplicity : public Error {
public:
    using Error::Error;
};

class InvalidSpace : public Error {
public:
    using Error::Error;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace gysin
