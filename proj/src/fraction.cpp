#include "squint/fraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace squint {

namespace {

bool even_variables_only(const Polynomial& p) {
    const RingContext& ctx = *p.context();
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.factors)
            if (ctx.var_parity(v)) return false;
    return true;
}

// graded lex on sparse exponent lists, ascending variable index
bool monomial_less_grlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first != b.factors[j].first)
            // the one owning the smaller variable is lex-greater
            return a.factors[i].first > b.factors[j].first;
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second < b.factors[j].second;
        ++i;
        ++j;
    }
    // equal degree and matching prefix: both lists are exhausted
    return false;
}

const Monomial* leading_monomial_grlex(const Polynomial& p) {
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || monomial_less_grlex(*best, m)) best = &m;
    return best;
}

// a / b for monomials, nullopt if not divisible (even variables only)
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
    Monomial q;
    std::size_t i = 0;
    for (const auto& [v, e] : b.factors) {
        while (i < a.factors.size() && a.factors[i].first < v) {
            q.factors.push_back(a.factors[i]);
            ++i;
        }
        if (i == a.factors.size() || a.factors[i].first != v || a.factors[i].second < e)
            return std::nullopt;
        if (a.factors[i].second > e) q.factors.emplace_back(v, a.factors[i].second - e);
        ++i;
    }
    for (; i < a.factors.size(); ++i) q.factors.push_back(a.factors[i]);
    return q;
}

} // namespace

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (!even_variables_only(d))
        throw std::invalid_argument("denominators must be polynomials in even variables only");
    RingPtr ctx = f.context();
    if (ctx.get() != d.context().get())
        throw std::invalid_argument("polynomials from incompatible ring contexts");

    // split off odd parts: f = sum_O O * g_O with g_O in even variables;
    // even variables are central, so the split carries no signs
    std::map<Monomial, Polynomial> groups;
    for (const auto& [m, c] : f.terms()) {
        Monomial odd_part, even_part;
        for (const auto& fac : m.factors)
            (ctx->var_parity(fac.first) ? odd_part : even_part).factors.push_back(fac);
        auto it = groups.find(odd_part);
        if (it == groups.end()) it = groups.emplace(odd_part, Polynomial::zero(ctx)).first;
        it->second += Polynomial::monomial(ctx, even_part, c);
    }

    const Monomial* lt_d = leading_monomial_grlex(d);
    Rational lc_d = d.coefficient(*lt_d);

    Polynomial result = Polynomial::zero(ctx);
    for (auto& [odd_part, g] : groups) {
        Polynomial quotient = Polynomial::zero(ctx);
        while (!g.is_zero()) {
            const Monomial* lt_g = leading_monomial_grlex(g);
            auto qm = monomial_div(*lt_g, *lt_d);
            if (!qm) return std::nullopt;
            Rational qc = g.coefficient(*lt_g) / lc_d;
            Polynomial step = Polynomial::monomial(ctx, *qm, qc);
            quotient += step;
            g -= step * d;
        }
        result += Polynomial::monomial(ctx, odd_part, 1) * quotient;
    }
    return result;
}

int DenomTable::register_denominator(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial is not invertible");
    if (!even_variables_only(p))
        throw std::invalid_argument("denominators must be polynomials in even variables only");
    for (int i = 0; i < size(); ++i)
        if (polys_[i] == p) return i;
    polys_.push_back(p);
    return size() - 1;
}

EvenFraction EvenFraction::from_polynomial(DenomTablePtr table, Polynomial num) {
    EvenFraction f;
    f.table_ = std::move(table);
    f.num_ = std::move(num);
    return f;
}

EvenFraction EvenFraction::over(DenomTablePtr table, Polynomial num,
                                std::vector<std::pair<int, int>> denominator) {
    EvenFraction f;
    f.table_ = std::move(table);
    f.num_ = std::move(num);
    f.den_ = std::move(denominator);
    std::sort(f.den_.begin(), f.den_.end());
    f.normalize();
    return f;
}

Polynomial EvenFraction::denominator_product(const std::vector<std::pair<int, int>>& d) const {
    Polynomial prod = Polynomial::constant(num_.context(), 1);
    for (const auto& [id, pow] : d) prod = prod * table_->poly(id).pow(pow);
    return prod;
}

void EvenFraction::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::vector<std::pair<int, int>> rest;
    for (auto [id, pow] : den_) {
        if (pow < 0) throw std::invalid_argument("negative denominator power");
        while (pow > 0) {
            auto q = try_divide(num_, table_->poly(id));
            if (!q) break;
            num_ = std::move(*q);
            --pow;
        }
        if (pow > 0) rest.emplace_back(id, pow);
    }
    den_ = std::move(rest);
}

namespace {
void require_same_table(const DenomTablePtr& a, const DenomTablePtr& b) {
    if (!a || !b || a.get() != b.get())
        throw std::invalid_argument("fractions over different denominator tables");
}
} // namespace

EvenFraction EvenFraction::operator+(const EvenFraction& o) const {
    require_same_table(table_, o.table_);
    // common denominator: per-id max power
    std::map<int, std::pair<int, int>> pows; // id -> (mine, theirs)
    for (auto [id, p] : den_) pows[id].first = p;
    for (auto [id, p] : o.den_) pows[id].second = p;
    std::vector<std::pair<int, int>> common;
    Polynomial scale_a = Polynomial::constant(num_.context(), 1);
    Polynomial scale_b = scale_a;
    for (auto& [id, pp] : pows) {
        int m = std::max(pp.first, pp.second);
        common.emplace_back(id, m);
        if (m > pp.first) scale_a = scale_a * table_->poly(id).pow(m - pp.first);
        if (m > pp.second) scale_b = scale_b * table_->poly(id).pow(m - pp.second);
    }
    return over(table_, num_ * scale_a + o.num_ * scale_b, std::move(common));
}

EvenFraction EvenFraction::operator-(const EvenFraction& o) const { return *this + (-o); }

EvenFraction EvenFraction::operator-() const {
    EvenFraction f = *this;
    f.num_ = -f.num_;
    return f;
}

EvenFraction EvenFraction::operator*(const EvenFraction& o) const {
    require_same_table(table_, o.table_);
    std::map<int, int> pows;
    for (auto [id, p] : den_) pows[id] += p;
    for (auto [id, p] : o.den_) pows[id] += p;
    std::vector<std::pair<int, int>> den(pows.begin(), pows.end());
    return over(table_, num_ * o.num_, std::move(den));
}

EvenFraction EvenFraction::operator*(const Rational& c) const {
    EvenFraction f = *this;
    f.num_ = f.num_ * c;
    if (f.num_.is_zero()) f.den_.clear();
    return f;
}

bool EvenFraction::operator==(const EvenFraction& o) const {
    require_same_table(table_, o.table_);
    std::map<int, std::pair<int, int>> pows;
    for (auto [id, p] : den_) pows[id].first = p;
    for (auto [id, p] : o.den_) pows[id].second = p;
    Polynomial scale_a = Polynomial::constant(num_.context(), 1);
    Polynomial scale_b = scale_a;
    for (auto& [id, pp] : pows) {
        int m = std::max(pp.first, pp.second);
        if (m > pp.first) scale_a = scale_a * table_->poly(id).pow(m - pp.first);
        if (m > pp.second) scale_b = scale_b * table_->poly(id).pow(m - pp.second);
    }
    return num_ * scale_a == o.num_ * scale_b;
}

} // namespace squint
