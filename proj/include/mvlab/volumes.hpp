#pragma once

// Masur-Veech volumes, area Siegel-Veech constants and the large-n constants kappa_g.

#include <string>

#include "mvlab/bigfloat.hpp"
#include "mvlab/rational.hpp"

namespace mvlab {

// coeff * pi^(pi_half_exponent / 2).
struct PiScaled {
    BigRat coeff;
    int pi_half_exponent = 0;

    BigFloat numeric(long bits = BigFloat::default_bits) const;
    friend bool operator==(const PiScaled&, const PiScaled&) = default;
};

std::string to_string(const PiScaled& v);

// Vol Q_{g,n} = 2^(2g+1) pi^(6g-6+2n) (4g-4+n)!/(6g-7+2n)! a_{g,n};
// (0,3) is the closed value 4. Throws mvlab::domain_error for 2g-2+n <= 0.
PiScaled volume(int g, int n);
// pi^(2n-6) / 2^(n-5), n >= 3.
PiScaled volume_closed_g0(int n);
// (pi^(2n)/3) (n!/(2n-1)!! + 2n/((2n-1) 2^n)), n >= 1.
PiScaled volume_closed_g1(int n);

// (2^(2g-1)-1)/2^(2g-1) (4g-7)!! |B_2g|/(2g)!, g >= 2.
BigRat lambda_g_value(int g);

// Itzykson-Zuber sequence: c_0 = -1, c_1 = 2, c_2 = 98,
// c_g = 50 (g-1)^2 c_{g-1} + 1/2 sum_{h=2}^{g-2} c_h c_{g-h}.
BigRat cg_seq(int g);

// kappa_g = 64 pi^(6g - 11/2) c_g / (384^g Gamma((5g-1)/2)), g >= 0.
PiScaled kappa(int g);

// Area Siegel-Veech constant of the principal stratum, a rational multiple of pi^-2.
// Throws mvlab::domain_error if 2g-2+n <= 0 or a_{g,n} = 0.
PiScaled sv_constant(int g, int n);

} // namespace mvlab
