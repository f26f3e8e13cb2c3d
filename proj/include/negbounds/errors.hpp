#pragma once

#include <stdexcept>
#include <string>

namespace negbounds {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquare : Error {
    using Error::Error;
};
struct NonHermitian : Error {
    using Error::Error;
};
struct EmptyMatrix : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct NotPositiveSemidefinite : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct InvalidEpsilon : Error {
    using Error::Error;
};
struct DimensionTooLarge : Error {
    using Error::Error;
};
struct DegenerateSuperposition : Error {
    using Error::Error;
};
struct NotBiorthogonal : Error {
    using Error::Error;
};
struct AmplitudeTooSmall : Error {
    using Error::Error;
};
struct SpectrumNotNormalized : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct DuplicateIndex : Error {
    using Error::Error;
};
struct DimOutOfRange : Error {
    using Error::Error;
};
struct SupportTooLarge : Error {
    using Error::Error;
};
struct FloorOutOfRange : Error {
    using Error::Error;
};
struct ConfigInvalid : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct BadStateFile : Error {
    using Error::Error;
};

}  // namespace negbounds
