#pragma once

// Minimal arbitrary-precision unsigned integer: addition and decimal
// formatting only, which is all the partition-count recurrence needs.

#include <cstdint>
#include <string>
#include <vector>

namespace inquest {

class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(std::uint64_t value);

  BigUint& operator+=(const BigUint& other);
  friend BigUint operator+(BigUint a, const BigUint& b) {
    a += b;
    return a;
  }

  bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }
  bool operator!=(const BigUint& other) const { return !(*this == other); }

  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws RangeError if it does not fit
  std::string to_string() const;

 private:
  static constexpr std::uint32_t kBase = 1000000000u;  // 1e9 per limb
  std::vector<std::uint32_t> limbs_;                   // little-endian
};

}  // namespace inquest
