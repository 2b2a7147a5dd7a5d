#include "inquest/bigint.hpp"

#include <algorithm>
#include <cstdio>

#include "inquest/errors.hpp"

namespace inquest {

BigUint::BigUint(std::uint64_t value) {
  if (value == 0) {
    limbs_.push_back(0);
    return;
  }
  while (value > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
    value /= kBase;
  }
}

BigUint& BigUint::operator+=(const BigUint& other) {
  const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
  limbs_.resize(n, 0);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t v = limbs_[i] + carry;
    if (i < other.limbs_.size()) v += other.limbs_[i];
    carry = v >= kBase ? 1 : 0;
    limbs_[i] = carry ? v - kBase : v;
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

bool BigUint::fits_u64() const {
  // 3 limbs max 999999999'999999999'999999999 > 2^64; check by value.
  if (limbs_.size() > 3) return false;
  unsigned __int128 v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    v = v * kBase + limbs_[i];
  }
  return v <= static_cast<unsigned __int128>(~0ull);
}

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) {
    throw RangeError("big integer does not fit in 64 bits: " + to_string());
  }
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    v = v * kBase + limbs_[i];
  }
  return v;
}

std::string BigUint::to_string() const {
  std::string out = std::to_string(limbs_.back());
  char buf[16];
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    out += buf;
  }
  return out;
}

}  // namespace inquest
