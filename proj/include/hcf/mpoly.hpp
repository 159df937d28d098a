#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcf/rat.hpp"

namespace hcf {

/// Sparse multivariate polynomial over Rat in a fixed ordered parameter list
/// (default session parameters: a, b, t). Exponent vectors are dense over
/// that list and packed into a 64-bit key (16 bits per variable, at most 4
/// variables), so term order is lexicographic with variable 0 most
/// significant. Invariants: no stored zero coefficients, terms sorted by key.
class MPoly {
public:
    static constexpr int kMaxArity = 4;
    static constexpr int kExpBits = 16;
    static constexpr std::uint64_t kExpMask = (1u << kExpBits) - 1;

    using Key = std::uint64_t;
    using Term = std::pair<Key, Rat>;

    MPoly() = default;
    explicit MPoly(int arity) : arity_(check_arity(arity)) {}

    static MPoly zero(int arity) { return MPoly(arity); }

    static MPoly constant(int arity, Rat c) {
        MPoly p(arity);
        if (!c.is_zero()) p.t_.emplace_back(0, std::move(c));
        return p;
    }

    static MPoly var(int arity, int idx) {
        return monomial_one(arity, idx, 1);
    }

    static MPoly monomial_one(int arity, int idx, int e) {
        MPoly p(arity);
        if (idx < 0 || idx >= arity) throw Error("MPoly: variable index out of range");
        std::vector<int> exps(arity, 0);
        exps[idx] = e;
        p.t_.emplace_back(pack(exps, arity), Rat(1));
        return p;
    }

    static MPoly from_terms(int arity, std::vector<Term> terms) {
        MPoly p(arity);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        for (auto& t : terms) {
            if (t.second.is_zero()) continue;
            if (!p.t_.empty() && p.t_.back().first == t.first)
                p.t_.back().second += t.second;
            else
                p.t_.push_back(std::move(t));
        }
        p.strip_zeros();
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }

    /// Constant term (the full value when is_constant()).
    Rat constant_value() const {
        if (t_.empty()) return Rat(0);
        if (t_.front().first == 0) return t_.front().second;
        return Rat(0);
    }

    bool is_one() const { return is_constant() && constant_value().is_one(); }

    const std::vector<Term>& terms() const { return t_; }

    static Key pack(std::span<const int> exps, int arity) {
        Key k = 0;
        for (int i = 0; i < arity; ++i) {
            if (exps[i] < 0 || exps[i] > static_cast<int>(kExpMask))
                throw Error("MPoly: exponent out of range");
            k = (k << kExpBits) | static_cast<Key>(exps[i]);
        }
        return k;
    }

    static std::vector<int> unpack(Key k, int arity) {
        std::vector<int> e(arity, 0);
        for (int i = arity - 1; i >= 0; --i) {
            e[i] = static_cast<int>(k & kExpMask);
            k >>= kExpBits;
        }
        return e;
    }

    friend bool operator==(const MPoly& x, const MPoly& y) {
        return x.arity_ == y.arity_ && x.t_ == y.t_;
    }
    friend bool operator!=(const MPoly& x, const MPoly& y) { return !(x == y); }

    MPoly operator-() const {
        MPoly r(*this);
        for (auto& t : r.t_) t.second = -t.second;
        return r;
    }

    friend MPoly operator+(const MPoly& x, const MPoly& y) { return merge(x, y, false); }
    friend MPoly operator-(const MPoly& x, const MPoly& y) { return merge(x, y, true); }

    friend MPoly operator*(const MPoly& x, const MPoly& y) {
        check_same(x, y);
        MPoly r(x.arity_);
        if (x.is_zero() || y.is_zero()) return r;
        if (x.is_constant()) return y.scaled(x.constant_value());
        if (y.is_constant()) return x.scaled(y.constant_value());
        std::unordered_map<Key, Rat> acc;
        acc.reserve(x.t_.size() * y.t_.size());
        for (const auto& [kx, cx] : x.t_)
            for (const auto& [ky, cy] : y.t_) {
                Key k = add_keys(kx, ky, x.arity_);
                auto [it, fresh] = acc.try_emplace(k, Rat(0));
                if (fresh)
                    it->second = cx * cy;
                else
                    it->second += cx * cy;
            }
        r.t_.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (!c.is_zero()) r.t_.emplace_back(k, std::move(c));
        std::sort(r.t_.begin(), r.t_.end(),
                  [](const Term& s, const Term& t) { return s.first < t.first; });
        return r;
    }

    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scaled(const Rat& c) const {
        if (c.is_zero()) return MPoly(arity_);
        MPoly r(*this);
        for (auto& t : r.t_) t.second *= c;
        return r;
    }

    MPoly pow(unsigned e) const {
        MPoly r = constant(arity_, Rat(1));
        MPoly base = *this;
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    Rat eval(std::span<const Rat> point) const {
        if (static_cast<int>(point.size()) != arity_)
            throw Error("MPoly: evaluation point arity mismatch");
        Rat acc(0);
        for (const auto& [k, c] : t_) {
            Rat m = c;
            auto e = unpack(k, arity_);
            for (int i = 0; i < arity_; ++i)
                if (e[i] != 0) m *= point[i].pow(e[i]);
            acc += m;
        }
        return acc;
    }

    /// Bitmask of variables that actually occur.
    unsigned vars_mask() const {
        unsigned m = 0;
        for (const auto& [k, c] : t_) {
            auto e = unpack(k, arity_);
            for (int i = 0; i < arity_; ++i)
                if (e[i] != 0) m |= 1u << i;
        }
        return m;
    }

    int degree_in(int idx) const {
        int d = 0;
        for (const auto& [k, c] : t_) d = std::max(d, unpack(k, arity_)[idx]);
        return d;
    }

    /// Componentwise-minimal exponent vector over all terms (monomial content).
    std::vector<int> min_exps() const {
        std::vector<int> m(arity_, 0);
        bool first = true;
        for (const auto& [k, c] : t_) {
            auto e = unpack(k, arity_);
            if (first) { m = e; first = false; continue; }
            for (int i = 0; i < arity_; ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    /// Divides every term by the given monomial; exponents must stay >= 0.
    MPoly shift_down(std::span<const int> exps) const {
        MPoly r(arity_);
        r.t_.reserve(t_.size());
        for (const auto& [k, c] : t_) {
            auto e = unpack(k, arity_);
            for (int i = 0; i < arity_; ++i) {
                e[i] -= exps[i];
                if (e[i] < 0) throw Error("MPoly: shift_down underflow");
            }
            r.t_.emplace_back(pack(e, arity_), c);
        }
        return r;
    }

    /// Positive rational content; content of zero is 0.
    Rat content() const {
        Rat c(0);
        for (const auto& [k, coef] : t_) c = Rat::content(c, coef);
        return c;
    }

    /// Leading coefficient in term order (largest key). Zero poly -> 0.
    Rat lead_coeff() const { return t_.empty() ? Rat(0) : t_.back().second; }

    /// Exact quotient if divisor divides this polynomial, nullopt otherwise.
    static std::optional<MPoly> exact_div(const MPoly& p, const MPoly& d) {
        check_same(p, d);
        if (d.is_zero()) throw Error("MPoly: exact_div by zero");
        if (p.is_zero()) return MPoly(p.arity_);
        if (d.is_constant()) return p.scaled(d.constant_value().inv());
        MPoly r = p;
        std::vector<Term> q;
        const Key dk = d.t_.back().first;
        const Rat& dc = d.t_.back().second;
        const auto de = unpack(dk, d.arity_);
        while (!r.is_zero()) {
            auto re = unpack(r.t_.back().first, r.arity_);
            for (int i = 0; i < r.arity_; ++i) {
                re[i] -= de[i];
                if (re[i] < 0) return std::nullopt;
            }
            Rat qc = r.t_.back().second / dc;
            Key qk = pack(re, r.arity_);
            MPoly m(r.arity_);
            m.t_.emplace_back(qk, qc);
            q.emplace_back(qk, std::move(qc));
            r -= m * d;
        }
        return from_terms(p.arity_, std::move(q));
    }

    /// Dense coefficient list in variable idx; requires vars ⊆ {idx}.
    std::vector<Rat> to_univariate(int idx) const {
        std::vector<Rat> c(static_cast<std::size_t>(degree_in(idx)) + 1, Rat(0));
        for (const auto& [k, coef] : t_) {
            auto e = unpack(k, arity_);
            for (int i = 0; i < arity_; ++i)
                if (i != idx && e[i] != 0)
                    throw Error("MPoly: not univariate in requested variable");
            c[e[idx]] = coef;
        }
        return c;
    }

    static MPoly from_univariate(int arity, int idx, std::span<const Rat> coeffs) {
        std::vector<Term> ts;
        std::vector<int> e(arity, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            e[idx] = static_cast<int>(i);
            ts.emplace_back(pack(e, arity), coeffs[i]);
        }
        return from_terms(arity, std::move(ts));
    }

    std::string to_string(std::span<const std::string> names) const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [k, c] = *it;
            if (!s.empty()) s += " + ";
            auto e = unpack(k, arity_);
            std::string mono;
            for (int i = 0; i < arity_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < static_cast<int>(names.size()) ? names[i] : "v" + std::to_string(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) s += c.to_string();
            else if (c.is_one()) s += mono;
            else if ((-c).is_one()) s += "-" + mono;
            else s += c.to_string() + "*" + mono;
        }
        return s;
    }

private:
    static int check_arity(int arity) {
        if (arity < 0 || arity > kMaxArity) throw Error("MPoly: arity out of range");
        return arity;
    }

    static void check_same(const MPoly& x, const MPoly& y) {
        if (x.arity_ != y.arity_) throw Error("MPoly: arity mismatch");
    }

    static Key add_keys(Key x, Key y, int arity) {
        // Per-field overflow check, then a plain add (fields are independent
        // because each stays below 2^16).
        for (int i = 0; i < arity; ++i) {
            std::uint64_t ex = (x >> (kExpBits * i)) & kExpMask;
            std::uint64_t ey = (y >> (kExpBits * i)) & kExpMask;
            if (ex + ey > kExpMask) throw Error("MPoly: exponent overflow");
        }
        return x + y;
    }

    static MPoly merge(const MPoly& x, const MPoly& y, bool sub) {
        check_same(x, y);
        MPoly r(x.arity_);
        r.t_.reserve(x.t_.size() + y.t_.size());
        std::size_t i = 0, j = 0;
        while (i < x.t_.size() || j < y.t_.size()) {
            if (j == y.t_.size() || (i < x.t_.size() && x.t_[i].first < y.t_[j].first)) {
                r.t_.push_back(x.t_[i++]);
            } else if (i == x.t_.size() || y.t_[j].first < x.t_[i].first) {
                r.t_.emplace_back(y.t_[j].first, sub ? -y.t_[j].second : y.t_[j].second);
                ++j;
            } else {
                Rat c = sub ? x.t_[i].second - y.t_[j].second : x.t_[i].second + y.t_[j].second;
                if (!c.is_zero()) r.t_.emplace_back(x.t_[i].first, std::move(c));
                ++i, ++j;
            }
        }
        return r;
    }

    void strip_zeros() {
        t_.erase(std::remove_if(t_.begin(), t_.end(),
                                [](const Term& t) { return t.second.is_zero(); }),
                 t_.end());
    }

    int arity_ = 0;
    std::vector<Term> t_;
};

/// Default session parameter names.
inline const std::vector<std::string>& default_params() {
    static const std::vector<std::string> names = {"a", "b", "t"};
    return names;
}

}  // namespace hcf
