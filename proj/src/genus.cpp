#include "mvlab/genus.hpp"

#include <map>
#include <mutex>
#include <string>

#include "mvlab/error.hpp"

namespace mvlab {

namespace {

// |B_2k| / (2k)!
BigRat bernoulli_weight(int k)
{
    BigRat b = abs(bernoulli(2 * k));
    return b / BigRat(factorial(2 * k));
}

// (-1/4)^j
BigRat quarter_sign(int j)
{
    return make_rat(BigInt(j % 2 == 0 ? 1 : -1), pow_int(4, j));
}

LaurentT one_minus_T()
{
    LaurentT p(BigRat(1));
    p.add_term(1, BigRat(-1));
    return p;
}

// Iterated D_T images of a growing family of Laurent polynomials.
class DerivativeCache {
public:
    void push(LaurentT base) { cache_.push_back({std::move(base)}); }
    const LaurentT& base(int h) const { return cache_[h][0]; }
    std::size_t size() const { return cache_.size(); }

    const LaurentT& get(int h, int k)
    {
        auto& row = cache_[h];
        while (static_cast<int>(row.size()) <= k) {
            row.push_back(laurent_dt(row.back(), 1));
        }
        return row[k];
    }

private:
    std::vector<std::vector<LaurentT>> cache_;
};

void check_tilde_support(int g, const LaurentT& p)
{
    if (g < 2 || p.is_zero()) {
        return;
    }
    if (p.min_exponent() < -(5 * g - 1) || p.max_exponent() > -(4 * g - 1)) {
        throw consistency_error("u~^[" + std::to_string(g) + "] has support outside T^-(5g-1)..T^-(4g-1): "
                                + p.to_string());
    }
}

class GenusEngine {
public:
    LaurentT tilde(int g)
    {
        std::lock_guard lock(mutex_);
        return tilde_locked(g);
    }

    LaurentT u_via_tilde(int g)
    {
        std::lock_guard lock(mutex_);
        return u_via_tilde_locked(g);
    }

    LaurentT u_direct(int g)
    {
        std::lock_guard lock(mutex_);
        extend_u_direct(g);
        return u_direct_.base(g);
    }

    GenusCoeffs coeffs(int g)
    {
        std::lock_guard lock(mutex_);
        return coeffs_locked(g);
    }

    std::vector<BigRat> kazarian(int g)
    {
        std::lock_guard lock(mutex_);
        extend_kazarian(g);
        return kazarian_[g];
    }

private:
    const LaurentT& tilde_locked(int g)
    {
        if (tilde_.size() == 0) {
            tilde_.push(one_minus_T());
        }
        while (static_cast<int>(tilde_.size()) <= g) {
            const int h = static_cast<int>(tilde_.size());
            LaurentT s;
            for (int g1 = 1; 2 * g1 <= h; ++g1) {
                const int g2 = h - g1;
                LaurentT prod = tilde_.base(g1) * tilde_.base(g2);
                // (1/2) sum over ordered pairs: off-diagonal pairs appear twice.
                if (g1 != g2) {
                    s += prod;
                } else {
                    s += prod * make_rat(1, 2);
                }
            }
            for (int g1 = 1; g1 <= h; ++g1) {
                s += tilde_.get(h - g1, 2 * g1) * bernoulli_weight(g1);
            }
            LaurentT next = s.shifted(-1);
            check_tilde_support(h, next);
            tilde_.push(std::move(next));
        }
        return tilde_.base(g);
    }

    const LaurentT& u_via_tilde_locked(int g)
    {
        tilde_locked(g);
        while (static_cast<int>(u_tilde_.size()) <= g) {
            const int h = static_cast<int>(u_tilde_.size());
            LaurentT s = tilde_.base(h);
            for (int g1 = 1; g1 <= h; ++g1) {
                const BigInt p = pow_int(2, 2 * g1 - 1);
                const BigRat w = make_rat(p - 1, p) * bernoulli_weight(g1);
                s += tilde_.get(h - g1, 2 * g1) * w;
            }
            u_tilde_.push_back(std::move(s));
        }
        return u_tilde_[g];
    }

    void extend_u_direct(int g)
    {
        if (u_direct_.size() == 0) {
            u_direct_.push(one_minus_T());
        }
        while (static_cast<int>(u_direct_.size()) <= g) {
            const int h = static_cast<int>(u_direct_.size());
            LaurentT quad;
            for (int g1 = 0; g1 < h; ++g1) {
                for (int g2 = 0; g2 < h && g1 + g2 <= h; ++g2) {
                    const int J = h - g1 - g2;
                    LaurentT inner;
                    for (int j1 = 0; j1 <= J; ++j1) {
                        const int j2 = J - j1;
                        const BigRat w = make_rat(BigInt(1), factorial(2 * j1 + 1) * factorial(2 * j2 + 1));
                        inner += (u_direct_.get(g1, 2 * j1) * u_direct_.get(g2, 2 * j2)) * w;
                    }
                    quad += inner * quarter_sign(J);
                }
            }
            LaurentT lin;
            for (int j = 1; j <= h; ++j) {
                lin += u_direct_.get(h - j, 2 * j) * (quarter_sign(j) / BigRat(factorial(2 * j)));
            }
            LaurentT next = (quad * make_rat(1, 2) - lin).shifted(-1);
            u_direct_.push(std::move(next));
        }
    }

    GenusCoeffs coeffs_locked(int g)
    {
        if (g < 2) {
            throw domain_error("C_{g,j} defined for g >= 2, got g = " + std::to_string(g));
        }
        if (auto it = coeffs_.find(g); it != coeffs_.end()) {
            return it->second;
        }
        const LaurentT& u = u_via_tilde_locked(g);
        GenusCoeffs out{g, {}};
        bool ok = u.size() == static_cast<std::size_t>(g + 1);
        for (int j = 0; ok && j <= g; ++j) {
            const int e = -(5 * g - 1 - j);
            const auto it = u.terms().find(e);
            if (it == u.terms().end()) {
                ok = false;
                break;
            }
            out.C.push_back(it->second / BigRat((5 * g - 3 - j) * (5 * g - 5 - j)));
        }
        if (!ok) {
            throw consistency_error("u^[" + std::to_string(g) + "] not supported on T^-(5g-1-j): " + u.to_string());
        }
        coeffs_.emplace(g, out);
        return out;
    }

    void extend_kazarian(int g)
    {
        if (g < 1) {
            throw domain_error("Kazarian recursion starts at g = 1");
        }
        if (kazarian_.empty()) {
            kazarian_.push_back({});
            kazarian_.push_back({make_rat(1, 12), make_rat(1, 24)});
        }
        while (static_cast<int>(kazarian_.size()) <= g) {
            const int h = static_cast<int>(kazarian_.size());
            std::vector<BigRat> row;
            for (int j = 0; j <= h; ++j) {
                BigRat v = 0;
                if (j > 0) {
                    v += make_rat(h + 1 - j, 5 * h - 2 - j) * row[j - 1];
                }
                if (j <= h - 1) {
                    v += make_rat((5 * h - 6 - j) * (5 * h - 4 - j), 12) * kazarian_[h - 1][j];
                }
                BigRat conv = 0;
                for (int g1 = 1; g1 < h; ++g1) {
                    const int g2 = h - g1;
                    for (int j1 = 0; j1 <= std::min(j, g1); ++j1) {
                        const int j2 = j - j1;
                        if (j2 <= g2) {
                            conv += kazarian_[g1][j1] * kazarian_[g2][j2];
                        }
                    }
                }
                v += conv / 2;
                row.push_back(std::move(v));
            }
            kazarian_.push_back(std::move(row));
        }
    }

    std::mutex mutex_;
    DerivativeCache tilde_;
    std::vector<LaurentT> u_tilde_;
    DerivativeCache u_direct_;
    std::map<int, GenusCoeffs> coeffs_;
    std::vector<std::vector<BigRat>> kazarian_;
};

GenusEngine& engine()
{
    static GenusEngine e;
    return e;
}

void require_nonnegative(int g)
{
    if (g < 0) {
        throw domain_error("genus must be nonnegative, got " + std::to_string(g));
    }
}

} // namespace

LaurentT tilde_u(int g)
{
    require_nonnegative(g);
    return engine().tilde(g);
}

LaurentT u_from_tilde(int g)
{
    require_nonnegative(g);
    return engine().u_via_tilde(g);
}

LaurentT u_direct(int g)
{
    require_nonnegative(g);
    return engine().u_direct(g);
}

GenusCoeffs coeffs_C(int g)
{
    return engine().coeffs(g);
}

std::vector<BigRat> kazarian_c(int g)
{
    return engine().kazarian(g);
}

BigRat agn_from_series(int g, int n)
{
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
        return 0;
    }
    if (g == 0) {
        return n >= 3 ? double_factorial(2 * n - 7) : BigRat(0);
    }
    if (g == 1) {
        // d^n/dx^n of (1/24) log(1/T) + (1/24)(1 - T) at T = 1, n >= 1.
        const BigRat log_part = BigRat(pow_int(2, n - 1) * factorial(n - 1));
        return (log_part + double_factorial(2 * n - 3)) / 24;
    }
    static std::mutex mutex;
    static std::map<std::pair<int, int>, BigRat> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find({g, n}); it != memo.end()) {
            return it->second;
        }
    }
    const GenusCoeffs c = coeffs_C(g);
    BigRat s = 0;
    for (int j = 0; j <= g; ++j) {
        s += c.C[j] * pochhammer(make_rat(5 * g - 5 - j, 2), n);
    }
    s *= BigRat(pow_int(2, n));
    std::lock_guard lock(mutex);
    memo.emplace(std::make_pair(g, n), s);
    return s;
}

GenusBlock closed_H(int g)
{
    GenusBlock h;
    switch (g) {
    case 0:
        h.laurent.add_term(0, make_rat(1, 40));
        h.laurent.add_term(2, make_rat(-1, 12));
        h.laurent.add_term(4, make_rat(1, 8));
        h.laurent.add_term(5, make_rat(-1, 15));
        break;
    case 1:
        h.log_coeff = make_rat(1, 24);
        h.laurent.add_term(0, make_rat(1, 24));
        h.laurent.add_term(1, make_rat(-1, 24));
        break;
    case 2:
        h.laurent.add_term(-5, make_rat(7, 1440));
        h.laurent.add_term(-4, make_rat(5, 1152));
        h.laurent.add_term(-3, make_rat(7, 5760));
        break;
    default:
        throw domain_error("closed form of H_g only for g <= 2, got g = " + std::to_string(g));
    }
    return h;
}

GenusBlock genus_block(int g)
{
    require_nonnegative(g);
    if (g <= 1) {
        return closed_H(g);
    }
    const GenusCoeffs c = coeffs_C(g);
    GenusBlock h;
    for (int j = 0; j <= g; ++j) {
        h.laurent.add_term(-(5 * g - 5 - j), c.C[j]);
    }
    return h;
}

LaurentT genus_ode_residual(int g)
{
    require_nonnegative(g);
    std::vector<LaurentT> first;
    for (int k = 0; k <= g; ++k) {
        first.push_back(derivative(genus_block(k)));
    }
    auto second = [&](int k) { return laurent_dt(first[k], 1); };

    LaurentT r = x_in_T() * second(g);
    r += first[g] * make_rat(4 * g - 3, 2);
    LaurentT quad;
    for (int g1 = 0; g1 <= g; ++g1) {
        quad += second(g1) * second(g - g1);
    }
    r -= quad * make_rat(1, 4);
    if (g >= 1) {
        r -= laurent_dt(first[g - 1], 3) * make_rat(1, 24);
    }
    return r;
}

} // namespace mvlab
