#include "mvlab/funceq.hpp"

#include <algorithm>
#include <string>

#include "mvlab/error.hpp"

namespace mvlab {

BiSeries::BiSeries(int nx, int eps_lo, int eps_hi)
    : nx_(nx), lo_(eps_lo), hi_(eps_hi)
{
    if (nx < 0 || eps_hi < eps_lo) {
        throw domain_error("empty series box");
    }
    const std::size_t size = static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(hi_ - lo_ + 1);
    coeffs_.resize(size);
    known_.assign(size, 0);
}

std::size_t BiSeries::index(int a, int b) const
{
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(hi_ - lo_ + 1) + static_cast<std::size_t>(b - lo_);
}

bool BiSeries::inside(int a, int b) const
{
    return a >= 0 && a <= nx_ && b >= lo_ && b <= hi_;
}

bool BiSeries::known(int a, int b) const
{
    if (a < 0) {
        return true;
    }
    if (b < lo_) {
        return true;
    }
    if (!inside(a, b)) {
        return false;
    }
    return known_[index(a, b)] != 0;
}

GaussianRat BiSeries::coeff(int a, int b) const
{
    if (!inside(a, b)) {
        return {};
    }
    return coeffs_[index(a, b)];
}

void BiSeries::set(int a, int b, const GaussianRat& v, bool known)
{
    if (!inside(a, b)) {
        throw domain_error("coefficient (" + std::to_string(a) + ", " + std::to_string(b) + ") outside series box");
    }
    coeffs_[index(a, b)] = known ? v : GaussianRat{};
    known_[index(a, b)] = known ? 1 : 0;
}

namespace {

BiSeries combine(const BiSeries& x, const BiSeries& y, const BigRat& sy)
{
    BiSeries out(std::max(x.nx(), y.nx()), std::min(x.eps_lo(), y.eps_lo()), std::max(x.eps_hi(), y.eps_hi()));
    for (int a = 0; a <= out.nx(); ++a) {
        for (int b = out.eps_lo(); b <= out.eps_hi(); ++b) {
            const bool k = x.known(a, b) && y.known(a, b);
            out.set(a, b, k ? x.coeff(a, b) + y.coeff(a, b) * sy : GaussianRat{}, k);
        }
    }
    return out;
}

} // namespace

BiSeries operator+(const BiSeries& x, const BiSeries& y)
{
    return combine(x, y, BigRat(1));
}

BiSeries operator-(const BiSeries& x, const BiSeries& y)
{
    return combine(x, y, BigRat(-1));
}

BiSeries operator*(const BiSeries& x, const BiSeries& y)
{
    const int lo = x.eps_lo() + y.eps_lo();
    const int hi = std::max(x.eps_hi() + y.eps_lo(), y.eps_hi() + x.eps_lo());
    BiSeries out(std::min(x.nx(), y.nx()), lo, hi);
    for (int a = 0; a <= out.nx(); ++a) {
        for (int b = lo; b <= hi; ++b) {
            GaussianRat v;
            bool k = true;
            for (int a1 = 0; k && a1 <= a; ++a1) {
                for (int b1 = x.eps_lo(); b1 <= b - y.eps_lo(); ++b1) {
                    const int a2 = a - a1;
                    const int b2 = b - b1;
                    if (!x.known(a1, b1) || !y.known(a2, b2)) {
                        k = false;
                        break;
                    }
                    const GaussianRat p = x.coeff(a1, b1);
                    if (!p.is_zero()) {
                        v += p * y.coeff(a2, b2);
                    }
                }
            }
            out.set(a, b, k ? v : GaussianRat{}, k);
        }
    }
    return out;
}

BiSeries operator*(const BiSeries& x, const BigRat& k)
{
    BiSeries out = x;
    for (int a = 0; a <= x.nx(); ++a) {
        for (int b = x.eps_lo(); b <= x.eps_hi(); ++b) {
            if (x.known(a, b)) {
                out.set(a, b, x.coeff(a, b) * k);
            }
        }
    }
    return out;
}

BiSeries BiSeries::dx(unsigned k) const
{
    BiSeries cur = *this;
    for (unsigned step = 0; step < k; ++step) {
        BiSeries out(cur.nx(), cur.eps_lo(), cur.eps_hi());
        for (int a = 0; a <= cur.nx(); ++a) {
            for (int b = cur.eps_lo(); b <= cur.eps_hi(); ++b) {
                const bool kn = cur.known(a + 1, b);
                out.set(a, b, kn ? cur.coeff(a + 1, b) * BigRat(a + 1) : GaussianRat{}, kn);
            }
        }
        cur = std::move(out);
    }
    return cur;
}

BiSeries BiSeries::times_x() const
{
    BiSeries out(nx_, lo_, hi_);
    for (int a = 0; a <= nx_; ++a) {
        for (int b = lo_; b <= hi_; ++b) {
            const bool kn = known(a - 1, b);
            out.set(a, b, kn ? coeff(a - 1, b) : GaussianRat{}, kn);
        }
    }
    return out;
}

BiSeries BiSeries::times_eps(int s) const
{
    BiSeries out(nx_, lo_ + s, hi_ + s);
    for (int a = 0; a <= nx_; ++a) {
        for (int b = lo_; b <= hi_; ++b) {
            out.set(a, b + s, coeff(a, b), known(a, b));
        }
    }
    return out;
}

BiSeries BiSeries::eps_degree() const
{
    BiSeries out = *this;
    for (int a = 0; a <= nx_; ++a) {
        for (int b = lo_; b <= hi_; ++b) {
            if (known(a, b)) {
                out.set(a, b, coeff(a, b) * BigRat(b));
            }
        }
    }
    return out;
}

BiSeries BiSeries::shift_x(int sign) const
{
    if (sign != 1 && sign != -1) {
        throw domain_error("shift sign must be +1 or -1");
    }
    // (x + s i eps/2)^(a+k) contributes C(a+k, k) (s i/2)^k x^a eps^k.
    std::vector<GaussianRat> step;
    for (int k = 0; k <= hi_ - lo_; ++k) {
        step.push_back(imaginary_power(make_rat(sign, 2), static_cast<unsigned long>(k)));
    }
    BiSeries out(nx_, lo_, hi_);
    for (int a = 0; a <= nx_; ++a) {
        for (int b = lo_; b <= hi_; ++b) {
            GaussianRat v;
            bool kn = true;
            for (int k = 0; b - k >= lo_; ++k) {
                if (!known(a + k, b - k)) {
                    kn = false;
                    break;
                }
                const GaussianRat c = coeff(a + k, b - k);
                if (!c.is_zero()) {
                    v += step[k] * c * BigRat(binomial(a + k, k));
                }
            }
            out.set(a, b, kn ? v : GaussianRat{}, kn);
        }
    }
    return out;
}

BiSeries free_energy_series(const AgnTable& table, int gmax, int nx)
{
    BiSeries h(nx, -2, 2 * gmax - 2);
    for (int a = 0; a <= nx; ++a) {
        const BigRat inv_fact = make_rat(BigInt(1), factorial(a));
        for (int b = -2; b <= 2 * gmax - 2; ++b) {
            if (b % 2 != 0) {
                h.set(a, b, {});
                continue;
            }
            const int g = (b + 2) / 2;
            BigRat v = 0;
            if (2 * g - 2 + a > 0) {
                if (!table.contains(g, a)) {
                    throw domain_error("table lacks a_{" + std::to_string(g) + "," + std::to_string(a) + "}");
                }
                v = table.at(g, a) * inv_fact;
            }
            h.set(a, b, GaussianRat(v));
        }
    }
    return h;
}

int funceq_table_nmax(int nx, int gmax)
{
    return nx + 2 * gmax + 4;
}

namespace {

void collect(FunctionalEqReport& report, const std::string& name, const BiSeries& e, int nx)
{
    EquationCheck check{name, 0, 0};
    for (int a = 0; a <= std::min(nx, e.nx()); ++a) {
        for (int b = e.eps_lo(); b <= e.eps_hi(); ++b) {
            if (!e.known(a, b)) {
                continue;
            }
            ++check.checked;
            const GaussianRat v = e.coeff(a, b);
            if (!v.is_zero()) {
                ++check.nonzero;
                report.residuals.push_back({name, a, b, v});
            }
        }
    }
    report.equations.push_back(check);
}

} // namespace

FunctionalEqReport verify_functional_eqs(int nx, int gmax, const AgnTable& table)
{
    if (nx < 4 || gmax < 1) {
        throw domain_error("functional equation check needs Nx >= 4 and Gmax >= 1");
    }
    const BiSeries h = free_energy_series(table, gmax, funceq_table_nmax(nx, gmax));
    const BiSeries hp = h.shift_x(1);
    const BiSeries hm = h.shift_x(-1);
    const BiSeries diff = hp - hm;
    const BiSeries d_diff = diff.dx();
    const BiSeries d_sq = d_diff * d_diff;

    FunctionalEqReport report;
    report.nx = nx;
    report.gmax = gmax;

    BiSeries quad = d_sq + (hp + hm).dx(2);
    if (quad.known(1, -2)) {
        quad.set(1, -2, quad.coeff(1, -2) - GaussianRat(BigRat(2)));
    }
    collect(report, "shift-quadratic", quad, nx);

    const BiSeries cubic = diff.eps_degree() + diff.dx().times_x() * make_rat(1, 2)
                           - diff.dx(3).times_eps(2) * make_rat(1, 24) + (d_sq * d_diff).times_eps(2) * make_rat(1, 12);
    collect(report, "shift-cubic", cubic, nx);

    const BiSeries d1 = h.dx();
    const BiSeries d2 = d1.dx();
    const BiSeries unshifted = d1.eps_degree() + d2.times_x() + d1 * make_rat(1, 2)
                               - (d2 * d2).times_eps(2) * make_rat(1, 4) - d2.dx(2).times_eps(2) * make_rat(1, 24);
    collect(report, "unshifted", unshifted, nx);

    report.pass = report.residuals.empty()
                  && std::all_of(report.equations.begin(), report.equations.end(),
                                 [](const EquationCheck& c) { return c.checked > 0; });
    return report;
}

FunctionalEqReport verify_functional_eqs(int nx, int gmax)
{
    if (nx < 4 || gmax < 1) {
        throw domain_error("functional equation check needs Nx >= 4 and Gmax >= 1");
    }
    return verify_functional_eqs(nx, gmax, build_table(gmax, funceq_table_nmax(nx, gmax), AgnMethod::direct));
}

} // namespace mvlab
