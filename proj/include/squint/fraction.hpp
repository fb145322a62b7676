#pragma once

#include "squint/ring.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace squint {

/// Exact division f = q*d by a nonzero polynomial d in even variables only;
/// nullopt when d does not divide f.
std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& d);

/// Append-only registry of localization denominators. Every entry is a
/// nonzero polynomial in even variables only, i.e. an element of the
/// integral-domain subring, so cross-multiplication is injective.
class DenomTable {
public:
    /// Registers p (or returns the id of an identical earlier entry).
    int register_denominator(const Polynomial& p);
    int size() const { return static_cast<int>(polys_.size()); }
    const Polynomial& poly(int id) const { return polys_.at(id); }

private:
    std::vector<Polynomial> polys_;
};

using DenomTablePtr = std::shared_ptr<DenomTable>;

/// Element of the localization at the registered even denominators:
/// numerator polynomial over a formal product of denominator factors.
/// Only syntactically identical factors cancel (by exact division).
class EvenFraction {
public:
    EvenFraction() = default;
    static EvenFraction from_polynomial(DenomTablePtr table, Polynomial num);
    static EvenFraction over(DenomTablePtr table, Polynomial num,
                             std::vector<std::pair<int, int>> denominator);

    const Polynomial& numerator() const { return num_; }
    const std::vector<std::pair<int, int>>& denominator() const { return den_; }
    const DenomTablePtr& table() const { return table_; }
    bool is_zero() const { return num_.is_zero(); }

    EvenFraction operator+(const EvenFraction& o) const;
    EvenFraction operator-(const EvenFraction& o) const;
    EvenFraction operator-() const;
    EvenFraction operator*(const EvenFraction& o) const;
    EvenFraction operator*(const Rational& c) const;
    EvenFraction& operator+=(const EvenFraction& o) { return *this = *this + o; }
    EvenFraction& operator-=(const EvenFraction& o) { return *this = *this - o; }

    /// Equality in the localization, by cross-multiplication.
    bool operator==(const EvenFraction& o) const;
    bool operator!=(const EvenFraction& o) const { return !(*this == o); }

    bool parity_compatible(std::uint8_t want) const { return num_.parity_compatible(want); }
    std::optional<std::uint8_t> parity() const { return num_.parity(); }

private:
    DenomTablePtr table_;
    Polynomial num_;
    std::vector<std::pair<int, int>> den_; // (denominator id, power > 0), sorted by id
    void normalize();
    Polynomial denominator_product(const std::vector<std::pair<int, int>>& d) const;
};

inline EvenFraction operator*(const Rational& c, const EvenFraction& f) { return f * c; }

} // namespace squint
