#include "pauliray/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace pauliray {

BigUint::BigUint(std::uint64_t v) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    trim();
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::mul(std::uint64_t factor) {
    if (factor == 0) {
        limbs_.assign(1, 0);
        return *this;
    }
    std::uint32_t lo = static_cast<std::uint32_t>(factor);
    std::uint32_t hi = static_cast<std::uint32_t>(factor >> 32);
    std::vector<std::uint32_t> out(limbs_.size() + 2, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t a = limbs_[i];
        // a * lo into out[i], a * hi into out[i+1]
        std::uint64_t p = a * static_cast<std::uint64_t>(lo) + out[i];
        out[i] = static_cast<std::uint32_t>(p);
        carry = p >> 32;
        p = a * static_cast<std::uint64_t>(hi) + out[i + 1] + carry;
        out[i + 1] = static_cast<std::uint32_t>(p);
        carry = p >> 32;
        std::size_t j = i + 2;
        while (carry) {
            std::uint64_t q = static_cast<std::uint64_t>(out[j]) + carry;
            out[j] = static_cast<std::uint32_t>(q);
            carry = q >> 32;
            ++j;
        }
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

BigUint& BigUint::shl(unsigned bits) {
    if (is_zero()) return *this;
    unsigned words = bits / 32, rem = bits % 32;
    limbs_.insert(limbs_.begin(), words, 0);
    if (rem) {
        std::uint32_t carry = 0;
        for (std::size_t i = words; i < limbs_.size(); ++i) {
            std::uint32_t next = limbs_[i] >> (32 - rem);
            limbs_[i] = (limbs_[i] << rem) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }
    return *this;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value exceeds 64 bits");
    std::uint64_t v = limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
}

bool BigUint::operator==(std::uint64_t v) const {
    return fits_u64() && to_u64() == v;
}

std::string BigUint::to_string() const {
    // Repeated division by 10^9.
    std::vector<std::uint32_t> work(limbs_.rbegin(), limbs_.rend());  // most significant first
    std::string out;
    while (!(work.size() == 1 && work[0] == 0)) {
        std::uint64_t rem = 0;
        for (auto& w : work) {
            std::uint64_t cur = (rem << 32) | w;
            w = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (work.size() > 1 && work.front() == 0) work.erase(work.begin());
        std::string chunk = std::to_string(rem);
        if (!(work.size() == 1 && work[0] == 0)) chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
    }
    return out.empty() ? "0" : out;
}

}  // namespace pauliray
