#pragma once

#include <stdexcept>
#include <string>

namespace serre {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// Zero has no inverse in a field.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// Two objects were combined although they live over different Hopf algebras.
class HopfMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A construction that requires valid structure constants received broken ones.
class AxiomFailure : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle refuses instances with more than `bound` vectors.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

class NotInvolutory : public Error {
public:
    using Error::Error;
};

class RankNotInvertible : public Error {
public:
    using Error::Error;
};

class NotAMorphism : public Error {
public:
    using Error::Error;
};

class NotInjective : public Error {
public:
    using Error::Error;
};

} // namespace serre
