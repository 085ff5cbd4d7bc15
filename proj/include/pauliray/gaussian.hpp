#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "pauliray/util.hpp"

namespace pauliray {

// Gaussian integer a + b*i with 64-bit components.  Stabilizer-state
// amplitudes only ever need {0, ±1, ±i} after canonicalization, but overlap
// computations form sums of products, so full arithmetic is provided.
struct GaussianInteger {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInteger() = default;
    constexpr GaussianInteger(std::int64_t r, std::int64_t i) : re(r), im(i) {}

    friend constexpr GaussianInteger operator+(GaussianInteger a, GaussianInteger b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr GaussianInteger operator-(GaussianInteger a, GaussianInteger b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr GaussianInteger operator*(GaussianInteger a, GaussianInteger b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianInteger& operator+=(GaussianInteger o) { return *this = *this + o; }
    GaussianInteger& operator-=(GaussianInteger o) { return *this = *this - o; }
    GaussianInteger& operator*=(GaussianInteger o) { return *this = *this * o; }

    friend constexpr bool operator==(GaussianInteger a, GaussianInteger b) {
        return a.re == b.re && a.im == b.im;
    }
    friend constexpr bool operator!=(GaussianInteger a, GaussianInteger b) { return !(a == b); }

    constexpr GaussianInteger conj() const { return {re, -im}; }
    constexpr std::int64_t norm2() const { return re * re + im * im; }
    constexpr bool is_zero() const { return re == 0 && im == 0; }

    // i^k for k mod 4.
    static constexpr GaussianInteger unit(unsigned k) {
        switch (k & 3u) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    // Exact quotient *this / d; throws unless d divides exactly.
    GaussianInteger exact_div(GaussianInteger d) const {
        if (d.is_zero()) throw PreconditionError("GaussianInteger: division by zero");
        GaussianInteger num = *this * d.conj();
        std::int64_t n2 = d.norm2();
        if (num.re % n2 != 0 || num.im % n2 != 0)
            throw PreconditionError("GaussianInteger: inexact division");
        return {num.re / n2, num.im / n2};
    }

    std::string to_string() const {
        if (im == 0) return std::to_string(re);
        if (re == 0) {
            if (im == 1) return "i";
            if (im == -1) return "-i";
            return std::to_string(im) + "i";
        }
        std::string s = std::to_string(re);
        if (im > 0) s += "+";
        if (im == 1) s += "i";
        else if (im == -1) s += "-i";
        else s += std::to_string(im) + "i";
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, GaussianInteger g) {
        return os << g.to_string();
    }
};

}  // namespace pauliray
