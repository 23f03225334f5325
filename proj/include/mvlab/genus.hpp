#pragma once

// Genus-by-genus data in the variable T = sqrt(1 - 2x).
//
// u = eps^2 d^2H/dx^2 = sum_g eps^(2g) u^[g] and its Miura partner
// u~ = sum_g eps^(2g) u~^[g] are Laurent polynomials in T at every genus.
// Two independent recursions produce u^[g]: directly, and through u~^[g]
// (the fast path used for large genus). The coefficients C_{g,j} of
// H_g = sum_j C_{g,j} T^-(5g-5-j) are read off u^[g].

#include <vector>

#include "mvlab/laurent.hpp"
#include "mvlab/rational.hpp"

namespace mvlab {

struct GenusCoeffs {
    int g = 0;
    std::vector<BigRat> C; // C[j], j = 0..g

    friend bool operator==(const GenusCoeffs&, const GenusCoeffs&) = default;
};

LaurentT tilde_u(int g);
// u^[g] assembled from u~^[0..g] with Bernoulli weights.
LaurentT u_from_tilde(int g);
// u^[g] from the double-sum recursion on u itself. Shares no state with tilde_u.
LaurentT u_direct(int g);

// C_{g,j} for g >= 2. Throws mvlab::consistency_error if u^[g] is not
// supported exactly on T^-(5g-1-j), 0 <= j <= g.
GenusCoeffs coeffs_C(int g);

// c_{g,j} = C_{g,j} (5g-5-j)(5g-3-j) by Kazarian's recursion, g >= 1.
// Seeded at g = 1 with the two coefficients of u^[1].
std::vector<BigRat> kazarian_c(int g);

// a_{g,n} from the T-structure of H_g, without the a_{g,n} recursions:
// (2n-7)!! at genus 0, the derivative formula of H_1 at genus 1, and
// 2^n sum_j C_{g,j} ((5g-5-j)/2)_n for g >= 2.
BigRat agn_from_series(int g, int n);

// Closed forms of H_0, H_1, H_2. Throws mvlab::domain_error for g > 2.
GenusBlock closed_H(int g);
// H_g for any g >= 0: closed forms for g <= 1, C_{g,j} otherwise.
GenusBlock genus_block(int g);

// x H_g'' + (2g - 3/2) H_g' - 1/4 sum H_{g1}'' H_{g2}'' - 1/24 H_{g-1}'''';
// identically zero when the genus blocks are right.
LaurentT genus_ode_residual(int g);

} // namespace mvlab
