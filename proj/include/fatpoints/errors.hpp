#pragma once

#include <stdexcept>
#include <string>

namespace fatpoints {

/// Malformed data: unknown ids, unresolved line names, bad coordinates.
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. a non-GMS vector where
/// the Hilbert function must be known).
class PreconditionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Unparseable or schema-violating input files and command-line values.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace fatpoints
