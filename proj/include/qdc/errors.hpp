#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

// Bad user input: malformed files, invalid selectors, division by zero,
// non-group tables. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A centralizer is not covered by the built-in irrep catalog and no user
// file was supplied. CLI exit code 3.
struct coverage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A correctness gate failed (oracle mismatch, Leibniz failure, d^2 != 0).
// Carries the gate name and the first counterexample. CLI exit code 4.
struct gate_error : std::runtime_error {
  std::string gate;
  gate_error(std::string gate_name, const std::string& what)
      : std::runtime_error("gate '" + gate_name + "' failed: " + what),
        gate(std::move(gate_name)) {}
};

// A configured resource bound was exceeded. CLI exit code 5.
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qdc
