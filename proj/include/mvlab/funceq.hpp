#pragma once

// Truncated two-variable series in x and eps and the exact check of the
// three identities satisfied by the free energy H(x, eps) = sum_g eps^(2g-2) H_g(x).

#include <string>
#include <vector>

#include "mvlab/agn.hpp"
#include "mvlab/gaussian.hpp"

namespace mvlab {

// sum c_{a,b} x^a eps^b over the box 0 <= a <= nx, eps_lo <= b <= eps_hi.
//
// Every coefficient carries a flag telling whether it is exactly determined
// by the data the series was built from. Orders below eps_lo are known to be
// zero; orders outside the box in any other direction are unknown. Flags are
// propagated exactly by every operation, so a residual is only ever read
// where it cannot be polluted by truncation.
class BiSeries {
public:
    BiSeries(int nx, int eps_lo, int eps_hi);

    int nx() const { return nx_; }
    int eps_lo() const { return lo_; }
    int eps_hi() const { return hi_; }

    bool known(int a, int b) const;
    // Zero outside the box.
    GaussianRat coeff(int a, int b) const;
    // Requires (a, b) inside the box.
    void set(int a, int b, const GaussianRat& v, bool known = true);

    friend BiSeries operator+(const BiSeries& x, const BiSeries& y);
    friend BiSeries operator-(const BiSeries& x, const BiSeries& y);
    friend BiSeries operator*(const BiSeries& x, const BiSeries& y);
    friend BiSeries operator*(const BiSeries& x, const BigRat& k);

    // d/dx.
    BiSeries dx(unsigned k = 1) const;
    // x * (.)
    BiSeries times_x() const;
    // eps^s * (.)
    BiSeries times_eps(int s) const;
    // eps d/deps.
    BiSeries eps_degree() const;
    // Exact substitution x -> x + sign * i eps / 2, sign = +1 or -1.
    BiSeries shift_x(int sign) const;

private:
    std::size_t index(int a, int b) const;
    bool inside(int a, int b) const;

    int nx_;
    int lo_;
    int hi_;
    std::vector<GaussianRat> coeffs_;
    std::vector<char> known_;
};

// H truncated to genus <= gmax and x-order <= nx:
// coefficient of x^n eps^(2g-2) is a_{g,n}/n!.
BiSeries free_energy_series(const AgnTable& table, int gmax, int nx);

struct ResidualTerm {
    std::string equation;
    int x_order = 0;
    int eps_order = 0;
    GaussianRat value;
};

struct EquationCheck {
    std::string equation;
    std::size_t checked = 0;
    std::size_t nonzero = 0;
};

struct FunctionalEqReport {
    int nx = 0;
    int gmax = 0;
    std::vector<EquationCheck> equations;
    std::vector<ResidualTerm> residuals;
    bool pass = false;
};

// Table range needed by verify_functional_eqs: g <= gmax, n <= this bound.
int funceq_table_nmax(int nx, int gmax);

// Residuals of
//   shift-quadratic: [d(H+ - H-)]^2 + d^2(H+ + H-) - 2x/eps^2
//   shift-cubic:     (eps d/deps + x d/2 - eps^2 d^3/24)(H+ - H-) + eps^2 [d(H+ - H-)]^3 / 12
//   unshifted:       eps d/deps dH + x d^2H + dH/2 - eps^2 (d^2H)^2/4 - eps^2 d^4H/24
// with H+- = H(x +- i eps/2), d = d/dx, checked on every determined
// coefficient of x-order <= nx. Requires nx >= 4, gmax >= 1.
FunctionalEqReport verify_functional_eqs(int nx, int gmax);
// Same, on caller-supplied a_{g,n}. The table must cover
// g <= gmax, n <= funceq_table_nmax(nx, gmax).
FunctionalEqReport verify_functional_eqs(int nx, int gmax, const AgnTable& table);

} // namespace mvlab
