#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nucleus {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using CliqueId = std::uint32_t;
using Count = std::uint64_t;

inline constexpr CliqueId kInvalidClique = static_cast<CliqueId>(-1);
inline constexpr std::uint32_t kInvalidNode = static_cast<std::uint32_t>(-1);

/// Default cap on materialized supergraph storage (bytes).
inline constexpr std::uint64_t kDefaultMemoryBudget = 8ull << 30;

/// Malformed edge-list input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UndefinedDensityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Estimated memory demand exceeds the configured budget.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t required_bytes, std::uint64_t budget_bytes)
      : std::runtime_error(what + " (needs ~" + std::to_string(required_bytes) +
                           " bytes, budget " + std::to_string(budget_bytes) + ")"),
        required_(required_bytes),
        budget_(budget_bytes) {}
  std::uint64_t required_bytes() const { return required_; }
  std::uint64_t budget_bytes() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Artifacts derived from different graphs were mixed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Brute-force reference refused an input that is too large.
class GuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int binom_small(int n, int k) {
  if (k < 0 || k > n) return 0;
  int out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace nucleus
