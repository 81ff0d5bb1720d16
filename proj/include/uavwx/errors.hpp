#pragma once

#include <stdexcept>
#include <string>

namespace uavwx {

/// Input outside the mathematical domain of a model (negative rate, zero distance, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input inside the mathematical domain but outside a model's validity window.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Link geometry for which the elevation angle is undefined (h = r = 0).
class GeometryError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Data file missing, malformed, or violating a table invariant.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Data file whose content does not match its recorded checksum.
class IntegrityError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace uavwx
