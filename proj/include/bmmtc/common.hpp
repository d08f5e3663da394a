#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bmmtc {

/// Hard cap on the sub-dimension d; joint tables hold 2^d counts.
inline constexpr int kDefaultDimCap = 20;

/// Default cap on the number of candidate partitions Algorithm-style search may visit.
inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

inline constexpr std::string_view kVersion = "0.1.0";

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a requested sub-dimension exceeds the joint-table cap or the
/// number of informative columns.
class InfeasibleDimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the constrained-partition search space exceeds the configured cap.
class SearchCapError : public std::runtime_error {
 public:
  SearchCapError(const std::string& msg, std::uint64_t count)
      : std::runtime_error(msg), partition_count(count) {}
  std::uint64_t partition_count;
};

/// Raised when a Monte Carlo experiment's model violates the statement it verifies.
class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Renders a real with 17 significant digits; round-trips bit-exactly through strtod.
inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "infinity" : "-infinity";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Ceiling with a small tolerance so values a float-rounding away from an
/// integer (e.g. 1/(1.0/3.0)) do not get bumped to the next one.
inline long long ceil_tol(double x, double tol = 1e-9) {
  const double r = std::nearbyint(x);
  if (std::fabs(x - r) <= tol) return static_cast<long long>(r);
  return static_cast<long long>(std::ceil(x));
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace bmmtc
