#pragma once

#include <stdexcept>
#include <string>

namespace tempnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownVertex : Error {
    using Error::Error;
};

struct NegativeWeight : Error {
    using Error::Error;
};

struct NotDedicated : Error {
    using Error::Error;
};

struct BadN : Error {
    using Error::Error;
};

struct BadIndex : Error {
    using Error::Error;
};

struct NonSquare : Error {
    using Error::Error;
};

struct NonConformable : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace tempnet
