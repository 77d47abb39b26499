#pragma once

#include <stdexcept>
#include <string>

namespace ipsf {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or inconsistent inputs (CLI exit status 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A numerical procedure failed: singular system, factorization breakdown,
// eigensolver non-convergence (CLI exit status 3).
class NumericalError : public Error {
public:
    using Error::Error;
};

// Filesystem / serialization problems.
class IoError : public Error {
public:
    using Error::Error;
};

// Stored table bundle fails its checksum.
class IntegrityError : public IoError {
public:
    using IoError::IoError;
};

// Stored table bundle has an unrecognized format version.
class VersionError : public IoError {
public:
    using IoError::IoError;
};

} // namespace ipsf
