#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace belief {

struct BeliefError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched or unknown value spaces, unknown labels, bad arguments.
struct DomainError : BeliefError {
  using BeliefError::BeliefError;
};

// Conditioning on evidence with validity zero.
struct ZeroValidityError : BeliefError {
  using BeliefError::BeliefError;
};

struct EmptyMultisetError : BeliefError {
  using BeliefError::BeliefError;
};

// KL divergence where the support condition fails.
struct InfiniteDivergenceError : BeliefError {
  using BeliefError::BeliefError;
};

// Rejection sampler finished with no accepted trace.
struct ZeroAcceptedError : BeliefError {
  ZeroAcceptedError(const std::string& what, std::uint64_t attempted_)
      : BeliefError(what), attempted(attempted_) {}
  std::uint64_t attempted;
};

// Enumeration size cap exceeded.
struct ResourceError : BeliefError {
  using BeliefError::BeliefError;
};

// Model file schema violation; names the offending field.
struct ValidationError : BeliefError {
  ValidationError(const std::string& field_, const std::string& what)
      : BeliefError(field_ + ": " + what), field(field_) {}
  std::string field;
};

}  // namespace belief
