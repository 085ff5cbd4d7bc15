#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace pauliray {

// Unsigned big integer, base 2^32 limbs, least significant first.
// Only the operations the counting formulas and automorphism orders
// need: multiply by a machine word, compare, print.
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v);

    BigUint& mul(std::uint64_t factor);
    BigUint& shl(unsigned bits);  // multiply by 2^bits

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // requires fits_u64()
    std::string to_string() const;

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
    bool operator==(std::uint64_t v) const;
    bool operator!=(std::uint64_t v) const { return !(*this == v); }

    friend std::ostream& operator<<(std::ostream& os, const BigUint& v) { return os << v.to_string(); }

  private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace pauliray
