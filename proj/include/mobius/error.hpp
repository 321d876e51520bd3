#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates the matroid circuit axioms.
class AxiomViolation : public Error {
public:
    using Error::Error;
};

class NotSimple : public Error {
public:
    using Error::Error;
};

class BadArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A configured resource cap (size, search budget, degree) was hit.
class SizeLimit : public Error {
public:
    using Error::Error;
};

// Two independent computations that must agree did not.
class MismatchBug : public Error {
public:
    using Error::Error;
};

}  // namespace mobius
