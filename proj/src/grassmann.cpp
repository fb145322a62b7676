#include "squint/grassmann.hpp"

#include <bit>
#include <stdexcept>

namespace squint {

int subset_merge_sign(std::uint32_t s, std::uint32_t t) {
    // count pairs (a in s, b in t) with a > b
    int inversions = 0;
    while (t) {
        std::uint32_t low = t & -t; // lowest bit of t
        // bits of s strictly above that bit
        inversions += std::popcount(s & ~(low | (low - 1)));
        t &= t - 1;
    }
    return (inversions & 1) ? -1 : 1;
}

Grassmann::Grassmann(int k) : k_(k) {
    if (k < 0 || k > kMaxGenerators) throw std::invalid_argument("bad Grassmann generator count");
}

Grassmann Grassmann::constant(int k, Rational c) {
    Grassmann g(k);
    if (c != 0) g.terms_[0] = std::move(c);
    return g;
}

Grassmann Grassmann::theta(int k, int i) {
    Grassmann g(k);
    if (i < 1 || i > k) throw std::invalid_argument("Grassmann generator out of range");
    g.terms_[1u << (i - 1)] = 1;
    return g;
}

Rational Grassmann::coefficient(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Grassmann::add_term(std::uint32_t mask, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Grassmann Grassmann::operator+(const Grassmann& o) const {
    if (k_ != o.k_) throw std::invalid_argument("Grassmann generator counts differ");
    Grassmann r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Grassmann Grassmann::operator-(const Grassmann& o) const { return *this + (-o); }

Grassmann Grassmann::operator-() const {
    Grassmann r(k_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Grassmann Grassmann::operator*(const Grassmann& o) const {
    if (k_ != o.k_) throw std::invalid_argument("Grassmann generator counts differ");
    Grassmann r(k_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            if (ma & mb) continue;
            Rational prod = ca * cb;
            if (subset_merge_sign(ma, mb) < 0) prod = -prod;
            r.add_term(ma | mb, prod);
        }
    return r;
}

Grassmann Grassmann::operator*(const Rational& c) const {
    Grassmann r(k_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

bool Grassmann::operator==(const Grassmann& o) const {
    return k_ == o.k_ && terms_ == o.terms_;
}

Grassmann Grassmann::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative exponent; use power()");
    Grassmann acc = Grassmann::constant(k_, 1);
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

std::optional<std::uint8_t> Grassmann::parity() const {
    std::optional<std::uint8_t> p;
    for (const auto& [m, c] : terms_) {
        std::uint8_t mp = static_cast<std::uint8_t>(std::popcount(m) & 1);
        if (!p)
            p = mp;
        else if (*p != mp)
            return std::nullopt;
    }
    return terms_.empty() ? std::optional<std::uint8_t>(0) : p;
}

bool Grassmann::parity_compatible(std::uint8_t want) const {
    for (const auto& [m, c] : terms_)
        if ((std::popcount(m) & 1) != want) return false;
    return true;
}

Grassmann Grassmann::inverse() const {
    Rational c0 = body();
    if (c0 == 0) throw std::domain_error("Grassmann element is not invertible");
    // (c + n)^{-1} = c^{-1} sum_j (-n/c)^j, n nilpotent
    Grassmann n = *this - Grassmann::constant(k_, c0);
    Rational inv_c0 = Rational(1) / c0;
    Grassmann minus_n_over_c = n * Rational(-inv_c0);
    Grassmann acc = Grassmann::constant(k_, inv_c0);
    Grassmann term = Grassmann::constant(k_, inv_c0);
    while (true) {
        term = term * minus_n_over_c;
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

Grassmann Grassmann::power(long n) const {
    if (n >= 0) return pow(static_cast<int>(n));
    return inverse().pow(static_cast<int>(-n));
}

} // namespace squint
