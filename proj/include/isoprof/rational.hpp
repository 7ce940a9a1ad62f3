#pragma once

#include <cstdint>
#include <string>

namespace isoprof {

// Positive fraction used for cut levels; comparisons stay in integers.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 2;

  static Rational parse(const std::string& text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  // size <= (num/den) * total
  bool admits(std::uint64_t size, std::uint64_t total) const {
    return static_cast<std::int64_t>(size) * den <= num * static_cast<std::int64_t>(total);
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  bool operator==(const Rational&) const = default;
};

}  // namespace isoprof
