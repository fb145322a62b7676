#pragma once

#include "squint/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace squint {

/// Finite exterior test algebra Lambda_k: exact rational coefficients on
/// products theta_S over subsets S of {1,...,k}, stored as bitmasks.
/// theta_i^2 = 0 and theta_i theta_j = -theta_j theta_i.
class Grassmann {
public:
    static constexpr int kMaxGenerators = 24;

    Grassmann() : k_(0) {} // zero of the trivial algebra; assignment re-seats
    explicit Grassmann(int k);
    static Grassmann constant(int k, Rational c);
    static Grassmann theta(int k, int i); // 1-based generator index

    int generators() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
    Rational coefficient(std::uint32_t mask) const;
    Rational body() const { return coefficient(0); } // constant term

    Grassmann operator+(const Grassmann& o) const;
    Grassmann operator-(const Grassmann& o) const;
    Grassmann operator-() const;
    Grassmann operator*(const Grassmann& o) const;
    Grassmann operator*(const Rational& c) const;
    bool operator==(const Grassmann& o) const;
    bool operator!=(const Grassmann& o) const { return !(*this == o); }

    Grassmann& operator+=(const Grassmann& o) { return *this = *this + o; }
    Grassmann& operator-=(const Grassmann& o) { return *this = *this - o; }

    Grassmann pow(int n) const;

    std::optional<std::uint8_t> parity() const; // nullopt if mixed; zero is any
    bool parity_compatible(std::uint8_t want) const;

    bool is_invertible() const { return body() != 0; }
    Grassmann inverse() const; // geometric series on the nilpotent part
    Grassmann power(long n) const; // integer powers, negative allowed

private:
    int k_;
    std::map<std::uint32_t, Rational> terms_;
    void add_term(std::uint32_t mask, const Rational& c);
};

inline Grassmann operator*(const Rational& c, const Grassmann& g) { return g * c; }

/// Sign of theta_S * theta_T as (-1)^{#{(s,t) in S x T : s > t}}.
int subset_merge_sign(std::uint32_t s, std::uint32_t t);

} // namespace squint
