#include "squint/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace squint {

std::shared_ptr<const RingContext> RingContext::make(Setup setup) {
    return make(std::move(setup), {});
}

std::shared_ptr<const RingContext> RingContext::make(Setup setup,
                                                     const std::vector<std::string>& param_names) {
    check_setup(setup);
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->setup_ = std::move(setup);
    const Quiver& q = ctx->setup_.quiver;
    const SuperDimVector& alpha = ctx->setup_.alpha;
    const ParityVector& b = ctx->setup_.parity;

    for (int e = 0; e < q.edge_count(); ++e) {
        ctx->edge_var_base_.push_back(static_cast<int>(ctx->vars_.size()));
        const SDim& dh = alpha[q.head(e)];
        const SDim& dt = alpha[q.tail(e)];
        for (int i = 1; i <= dh.total(); ++i)
            for (int j = 1; j <= dt.total(); ++j) {
                VarInfo v;
                v.edge = e;
                v.row = i;
                v.col = j;
                std::uint8_t base = ((i <= dh.even) == (j <= dt.even)) ? 0 : 1;
                v.parity = static_cast<std::uint8_t>((base + b[q.head(e)] + b[q.tail(e)]) & 1);
                v.name = "x[" + q.edge_id(e) + "," + std::to_string(i) + "," + std::to_string(j) + "]";
                ctx->vars_.push_back(std::move(v));
            }
    }
    ctx->edge_var_count_ = static_cast<int>(ctx->vars_.size());
    for (const std::string& name : param_names) {
        VarInfo v;
        v.name = name;
        ctx->vars_.push_back(std::move(v));
    }
    return ctx;
}

int RingContext::var_index(int edge, int row, int col) const {
    if (edge < 0 || edge >= quiver().edge_count()) throw std::invalid_argument("unknown edge");
    const SDim& dh = alpha()[quiver().head(edge)];
    const SDim& dt = alpha()[quiver().tail(edge)];
    if (row < 1 || row > dh.total() || col < 1 || col > dt.total())
        throw std::invalid_argument("variable index out of range for " + quiver().edge_id(edge));
    return edge_var_base_[edge] + (row - 1) * dt.total() + (col - 1);
}

int RingContext::param_index(int k) const {
    if (k < 0 || k >= param_count()) throw std::invalid_argument("parameter index out of range");
    return edge_var_count_ + k;
}

std::uint8_t RingContext::base_parity(int edge, int row, int col) const {
    const SDim& dh = alpha()[quiver().head(edge)];
    const SDim& dt = alpha()[quiver().tail(edge)];
    return ((row <= dh.even) == (col <= dt.even)) ? 0 : 1;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
}

int Monomial::exponent(int var) const {
    for (const auto& [v, e] : factors)
        if (v == var) return e;
    return 0;
}

std::optional<std::pair<Monomial, int>> monomial_mul(const RingContext& ctx, const Monomial& a,
                                                     const Monomial& b) {
    Monomial out;
    out.factors.reserve(a.factors.size() + b.factors.size());
    std::size_t i = 0, j = 0;
    // Number of odd variables of `a` not yet emitted; every odd variable of
    // `b` emitted before them crosses that many odd factors.
    int odd_left_in_a = 0;
    for (const auto& [v, e] : a.factors)
        if (ctx.var_parity(v)) ++odd_left_in_a;
    int sign = 1;
    while (i < a.factors.size() || j < b.factors.size()) {
        bool take_a;
        if (i == a.factors.size())
            take_a = false;
        else if (j == b.factors.size())
            take_a = true;
        else if (a.factors[i].first == b.factors[j].first) {
            int v = a.factors[i].first;
            if (ctx.var_parity(v)) return std::nullopt; // odd square
            out.factors.emplace_back(v, a.factors[i].second + b.factors[j].second);
            ++i;
            ++j;
            continue;
        } else
            take_a = a.factors[i].first < b.factors[j].first;
        if (take_a) {
            if (ctx.var_parity(a.factors[i].first)) --odd_left_in_a;
            out.factors.push_back(a.factors[i]);
            ++i;
        } else {
            if (ctx.var_parity(b.factors[j].first) && (odd_left_in_a & 1)) sign = -sign;
            out.factors.push_back(b.factors[j]);
            ++j;
        }
    }
    return std::make_pair(std::move(out), sign);
}

std::uint8_t monomial_parity(const RingContext& ctx, const Monomial& m) {
    int p = 0;
    for (const auto& [v, e] : m.factors)
        if (ctx.var_parity(v)) p += e;
    return static_cast<std::uint8_t>(p & 1);
}

MultiDegree monomial_multidegree(const RingContext& ctx, const Monomial& m) {
    MultiDegree n(ctx.quiver().edge_count(), 0);
    for (const auto& [v, e] : m.factors) {
        int edge = ctx.var(v).edge;
        if (edge >= 0) n[edge] += e;
    }
    return n;
}

Polynomial Polynomial::zero(RingPtr ctx) {
    Polynomial p;
    p.ctx_ = std::move(ctx);
    return p;
}

Polynomial Polynomial::constant(RingPtr ctx, Rational c) {
    Polynomial p = zero(std::move(ctx));
    if (c != 0) p.terms_[Monomial{}] = std::move(c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ctx, int var) {
    if (var < 0 || var >= ctx->var_count()) throw std::invalid_argument("variable out of range");
    Polynomial p = zero(std::move(ctx));
    p.terms_[Monomial{{{var, 1}}}] = 1;
    return p;
}

Polynomial Polynomial::monomial(RingPtr ctx, const Monomial& m, Rational c) {
    Polynomial p = zero(std::move(ctx));
    if (c != 0) p.terms_[m] = std::move(c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {
void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b || a.get() != b.get())
        throw std::invalid_argument("polynomials from incompatible ring contexts");
}
} // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ctx_, o.ctx_);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ctx_, o.ctx_);
    Polynomial r = zero(ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto prod = monomial_mul(*ctx_, ma, mb);
            if (!prod) continue;
            Rational c = ca * cb;
            if (prod->second < 0) c = -c;
            r.add_term(prod->first, c);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r = zero(ctx_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_ring(ctx_, o.ctx_);
    return terms_ == o.terms_;
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial acc = constant(ctx_, 1);
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

std::optional<std::uint8_t> Polynomial::parity() const {
    std::optional<std::uint8_t> p;
    for (const auto& [m, c] : terms_) {
        std::uint8_t mp = monomial_parity(*ctx_, m);
        if (!p)
            p = mp;
        else if (*p != mp)
            return std::nullopt;
    }
    return terms_.empty() ? std::optional<std::uint8_t>(0) : p;
}

bool Polynomial::parity_compatible(std::uint8_t want) const {
    for (const auto& [m, c] : terms_)
        if (monomial_parity(*ctx_, m) != want) return false;
    return true;
}

std::optional<MultiDegree> Polynomial::multidegree() const {
    std::optional<MultiDegree> n;
    for (const auto& [m, c] : terms_) {
        MultiDegree mn = monomial_multidegree(*ctx_, m);
        if (!n)
            n = std::move(mn);
        else if (*n != mn)
            return std::nullopt;
    }
    if (!n) return MultiDegree(ctx_->quiver().edge_count(), 0);
    return n;
}

std::map<MultiDegree, Polynomial> Polynomial::components_by_multidegree() const {
    std::map<MultiDegree, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        MultiDegree n = monomial_multidegree(*ctx_, m);
        auto it = out.find(n);
        if (it == out.end()) it = out.emplace(n, zero(ctx_)).first;
        it->second.add_term(m, c);
    }
    return out;
}

std::map<Monomial, Polynomial> Polynomial::components_by_param_monomial() const {
    std::map<Monomial, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        Monomial params, rest;
        for (const auto& f : m.factors)
            (ctx_->is_param(f.first) ? params : rest).factors.push_back(f);
        auto it = out.find(params);
        if (it == out.end()) it = out.emplace(params, zero(ctx_)).first;
        it->second.add_term(rest, c);
    }
    return out;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial substitute(const Polynomial& f, const std::map<int, Polynomial>& images,
                      RingPtr target) {
    const RingContext& src = *f.context();
    for (const auto& [v, img] : images) {
        require_same_ring(img.context(), target);
        if (!img.parity_compatible(src.var_parity(v)))
            throw std::invalid_argument("substitution image changes parity of " + src.var(v).name);
    }
    bool same_ring = (target.get() == f.context().get());
    Polynomial out = Polynomial::zero(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (const auto& [v, e] : m.factors) {
            auto it = images.find(v);
            Polynomial img = Polynomial::zero(target);
            if (it != images.end())
                img = it->second;
            else if (same_ring)
                img = Polynomial::variable(target, v);
            else
                throw std::invalid_argument("substitution does not cover " + src.var(v).name);
            term = term * img.pow(e);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

Polynomial derivation_apply(const std::map<int, Polynomial>& images, std::uint8_t d_parity,
                            const Polynomial& f) {
    const RingPtr& ctx = f.context();
    for (const auto& [v, img] : images) {
        require_same_ring(img.context(), ctx);
        if (!img.parity_compatible(static_cast<std::uint8_t>((ctx->var_parity(v) + d_parity) & 1)))
            throw std::invalid_argument("parity-inconsistent derivation image for " +
                                        ctx->var(v).name);
    }
    Polynomial out = Polynomial::zero(ctx);
    for (const auto& [m, c] : f.terms()) {
        // canonical factor order: ascending variable index (evens carry no sign)
        int odd_seen = 0;
        for (std::size_t slot = 0; slot < m.factors.size(); ++slot) {
            auto [v, e] = m.factors[slot];
            bool odd = ctx->var_parity(v) != 0;
            auto it = images.find(v);
            if (it == images.end() || it->second.is_zero()) {
                if (odd) ++odd_seen;
                continue;
            }
            // monomial with this slot's exponent reduced by one, split around it
            Monomial left, right;
            for (std::size_t s = 0; s < m.factors.size(); ++s) {
                if (s < slot)
                    left.factors.push_back(m.factors[s]);
                else if (s == slot) {
                    if (e > 1) left.factors.emplace_back(v, e - 1);
                } else
                    right.factors.push_back(m.factors[s]);
            }
            // sign over factors to the left of the differentiated copy; even
            // variables contribute nothing, so only odd factors count
            int sign = ((d_parity & 1) && (odd_seen & 1)) ? -1 : 1;
            Rational coeff = c * e;
            if (sign < 0) coeff = -coeff;
            Polynomial piece = Polynomial::monomial(ctx, left, coeff);
            piece = piece * it->second;
            piece = piece * Polynomial::monomial(ctx, right, 1);
            out += piece;
            if (odd) ++odd_seen;
        }
    }
    return out;
}

Grassmann evaluate_grassmann(const Polynomial& f, const std::map<int, Grassmann>& point, int k) {
    const RingContext& ctx = *f.context();
    for (const auto& [v, g] : point) {
        if (g.generators() != k) throw std::invalid_argument("Grassmann generator count mismatch");
        if (!g.parity_compatible(ctx.var_parity(v)))
            throw std::invalid_argument("parity mismatch in Grassmann assignment for " +
                                        ctx.var(v).name);
    }
    Grassmann out(k);
    for (const auto& [m, c] : f.terms()) {
        Grassmann term = Grassmann::constant(k, c);
        for (const auto& [v, e] : m.factors) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("Grassmann point does not cover " + ctx.var(v).name);
            term = term * it->second.pow(e);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

} // namespace squint
