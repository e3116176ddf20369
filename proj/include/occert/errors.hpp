#pragma once

#include <stdexcept>
#include <string>

namespace occ {

// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic on incompatible variable sets.
struct varset_mismatch : error {
  explicit varset_mismatch(const std::string& msg) : error(msg) {}
};

// Division by zero, zero denominator after substitution, inverse of zero.
struct division_by_zero : error {
  explicit division_by_zero(const std::string& msg) : error(msg) {}
};

// Relator instantiated with a zero unit parameter, psi with a^2 = 1, ...
struct domain_error : error {
  explicit domain_error(const std::string& msg) : error(msg) {}
};

// Homomorphic image requested for a generator without an assigned image.
struct unmapped_generator : error {
  explicit unmapped_generator(const std::string& msg) : error(msg) {}
};

// Malformed input text (field/word/matrix/certificate files).
struct parse_error : error {
  explicit parse_error(const std::string& msg) : error(msg) {}
};

// Certificate structurally unusable (unknown relator, missing witness, ...).
struct certificate_error : error {
  explicit certificate_error(const std::string& msg) : error(msg) {}
};

// A scripted construction failed its own verification; indicates a bug.
struct internal_error : error {
  explicit internal_error(const std::string& msg) : error(msg) {}
};

}  // namespace occ
