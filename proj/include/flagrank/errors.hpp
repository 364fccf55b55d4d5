#pragma once

#include <stdexcept>
#include <string>

namespace flagrank {

// Error taxonomy mirrored by CLI exit codes: input 2, resource 3,
// hypothesis/instability 1. Anything derived from std::logic_error is an
// internal invariant violation, i.e. a bug.

struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};

// a hypothesis of the identity being checked fails on the given input
struct hypothesis_error : std::runtime_error {
  explicit hypothesis_error(const std::string& m) : std::runtime_error(m) {}
};

// randomized counting did not stabilize across samples and primes
struct instability_error : std::runtime_error {
  explicit instability_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace flagrank
