#pragma once

#include <stdexcept>
#include <string>

namespace mod3 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generator id that does not belong to the presentation, or is used with
// the wrong degree class (exterior slot vs. polynomial slot).
struct PresentationMismatchError : Error {
    using Error::Error;
};

// Degree outside [0, degree_cap], or an operation asked for at a degree
// where it is not defined.
struct OutOfRangeError : Error {
    using Error::Error;
};

// Cohomology/homology degrees that fail to line up (pairings, caps,
// inhomogeneous input where a homogeneous one is required).
struct DegreeMismatchError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

// A proposed alpha list that is not made of distinct integral degree-1
// classes of the presentation.
struct InvalidWitnessError : Error {
    using Error::Error;
};

// The presentation has fewer eligible degree-1 classes than the search needs.
struct NotEnoughClassesError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace mod3
