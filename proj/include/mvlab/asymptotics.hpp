#pragma once

// Extraction of the 1/g expansion coefficients of normalized volumes and of
// area Siegel-Veech constants, and comparison with the conjectured polynomials
// m_k(n), C_k(n) in n and M = -pi^2/144.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvlab/bigfloat.hpp"
#include "mvlab/rational.hpp"

namespace mvlab {

struct AsymFit {
    int K = 0;
    int g_lo = 0; // window of the interpolation
    int g_hi = 0;
    std::vector<BigFloat> coefficients;   // c_0..c_K, square interpolation on the top K+1 samples
    std::vector<BigFloat> error_estimates; // from refitting on the window shifted down
    std::vector<BigFloat> least_squares;   // c_0..c_K, least squares over the top 2K samples
};

using AsymSample = std::pair<int, BigFloat>;

// f(g) ~ sum_{k<=K} c_k g^-k. Needs at least K+2 samples with distinct g.
// The shifted window moves down by min(5, #samples - K - 1).
AsymFit richardson_fit(std::vector<AsymSample> samples, int K);

// a_{g,n} (4g-4+n)! 3^(4g+n-4) pi^(6g-5+2n) / ((6g-7+2n)! 2^(10g+4n-11)), tends to 1.
BigFloat normalize_vol(int g, int n, const BigRat& a, long bits = BigFloat::default_bits);

// Fits over 2 <= g <= gmax. Require gmax >= 2K + 10.
AsymFit estimate_m(int n, int gmax, int K, long bits = BigFloat::default_bits);
AsymFit estimate_C(int n, int gmax, int K, long bits = BigFloat::default_bits);

// Polynomial in n and M with rational coefficients.
class MPoly {
public:
    // Adds c n^i M^j.
    MPoly& add(int n_power, int m_power, const BigRat& c);
    const std::map<std::pair<int, int>, BigRat>& terms() const { return terms_; }
    int n_degree() const;
    int m_degree() const;
    BigFloat eval(const BigRat& n, const BigFloat& M) const;
    // Exact value for rational M (used to test evaluation).
    BigRat eval_exact(const BigRat& n, const BigRat& M) const;

private:
    std::map<std::pair<int, int>, BigRat> terms_;
};

BigFloat constant_M(long bits = BigFloat::default_bits);

// The published m_k and C_k, k <= 3. Throws mvlab::domain_error for k > 3.
const MPoly& published_m_poly(int k);
const MPoly& published_C_poly(int k);
BigFloat published_m(int k, int n, long bits = BigFloat::default_bits);
BigFloat published_C(int k, int n, long bits = BigFloat::default_bits);

enum class AsymTarget { vol, sv };
std::string_view to_string(AsymTarget t);
AsymTarget parse_asym_target(std::string_view s);

struct CompareRow {
    int n = 0;
    int k = 0;
    BigFloat estimate;
    BigFloat error;
    BigFloat least_squares;
    BigFloat reference;
    BigFloat deviation; // relative, absolute for k = 0
    std::string criterion;
    bool pass = false;
};

struct CompareReport {
    AsymTarget target = AsymTarget::vol;
    int gmax = 0;
    int K = 0;
    long bits = 0;
    bool widened = false; // short window: tolerances widened to 10x the error bar
    std::vector<CompareRow> rows;
    bool pass = true;
};

// Reference gmax the tolerance schedule is calibrated for.
inline constexpr int asym_reference_gmax = 60;

// Rows for every n in n_list and k <= min(3, K). Tolerances at gmax >= 60:
//   k = 0: |est - ref| < 1e-8
//   k = 1: relative < 1e-5 (vol), 1e-3 (sv)
//   k = 2: relative < 1e-3
//   k = 3: same sign, within a factor 10, and |est - ref| <= error bar.
CompareReport compare_report(AsymTarget target, const std::vector<int>& n_list, int gmax, int K,
                             long bits = BigFloat::default_bits);

} // namespace mvlab
