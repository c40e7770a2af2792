#pragma once

#include <stdexcept>
#include <string>

namespace nsfact {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// from_generators: the generator set was empty.
class EmptyGenerators : public Error {
public:
    EmptyGenerators() : Error("generator set is empty") {}
};

// from_generators: gcd of the generators exceeds 1, so the complement is infinite.
class NotCoprime : public Error {
public:
    explicit NotCoprime(long long gcd)
        : Error("generators not coprime (gcd = " + std::to_string(gcd) + ")") {}
};

// from_gaps: the complement of the gap set is not closed under addition.
class NotClosed : public Error {
public:
    using Error::Error;
};

// adjoin: the adjoined element is not a special gap.
class NotSpecialGap : public Error {
public:
    using Error::Error;
};

// A semigroup that was required to contain another does not.
class NotOversemigroup : public Error {
public:
    using Error::Error;
};

// A parameter violated its stated constraint (parity, range, sign).
class BadParameter : public Error {
public:
    using Error::Error;
};

// An enumeration grew past its configured safety cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace nsfact
