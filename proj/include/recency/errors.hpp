#pragma once

#include <stdexcept>
#include <string>

namespace recency {

// Base type for all errors raised by this library. The CLI maps any
// Error to exit code 1 with the message on the diagnostic stream.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A column named by the mapping is absent from the CSV header.
class MissingColumnError : public Error {
public:
    using Error::Error;
};

// The input produced zero valid records.
class EmptyLogError : public Error {
public:
    using Error::Error;
};

// A mining operation was handed an empty record set.
class EmptyDatasetError : public Error {
public:
    using Error::Error;
};

// A distribution with total count zero was queried.
class EmptyDistributionError : public Error {
public:
    using Error::Error;
};

// base_slot does not evenly divide the day.
class InvalidSlotError : public Error {
public:
    using Error::Error;
};

// Fewer than two weeks of data; adjacent-week scoring is impossible.
class InsufficientWeeksError : public Error {
public:
    using Error::Error;
};

// A boundary pair does not name adjacent week indices present in the data.
class BoundaryMismatchError : public Error {
public:
    using Error::Error;
};

// A synthetic log spec violates its invariants.
class InvalidDriftSpecError : public Error {
public:
    using Error::Error;
};

// A configuration value is out of range or unrecognized.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace recency
