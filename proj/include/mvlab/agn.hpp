#pragma once

// The rational table a_{g,n} and the two recursions that produce it.
//
// a_{g,n} is zero whenever 2g - 2 + n <= 0 (and for negative indices).

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "mvlab/rational.hpp"

namespace mvlab {

enum class AgnMethod { direct, alternative, series };

std::string_view to_string(AgnMethod m);
// Accepts "direct", "alt"/"alternative" and "series".
AgnMethod parse_agn_method(std::string_view s);

// a_{g,n} by the quadratic recursion in n with denominators 4g - 4 + n.
// Every (g, n) is legal. Intermediate values over the triangle
// {g' <= g, n' <= n + 3(g - g')} are memoized process-wide.
//
// The recursion only reaches n >= 1. The n = 0 column is recovered from the
// same genus: H_g is a combination of the g+1 powers T^-(5g-5-j), so the
// values a_{g,1..g+1} fix the coefficients and their sum is a_{g,0}.
BigRat a_direct(int g, int n);

// a_{g,n} by the alternating recursion in q = n - 2 with Bernoulli-like
// (-1/4)^j weights. Requires n >= 2; throws mvlab::domain_error otherwise.
BigRat a_alt(int g, int n);

// Fully populated table for 0 <= g <= gmax, 0 <= n <= nmax, immutable once built.
class AgnTable {
public:
    using Key = std::pair<int, int>;

    AgnTable() = default;
    AgnTable(AgnMethod method, std::map<Key, BigRat> entries);

    AgnMethod method() const { return method_; }
    const std::map<Key, BigRat>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool contains(int g, int n) const { return entries_.count({g, n}) != 0; }
    // Throws std::out_of_range if absent.
    const BigRat& at(int g, int n) const;
    // Stored value, or zero for keys outside the table (out-of-domain convention).
    BigRat value_or_zero(int g, int n) const;

    // A copy with one entry replaced; for building deliberately broken inputs.
    AgnTable with_entry(int g, int n, const BigRat& v) const;

    friend bool operator==(const AgnTable& a, const AgnTable& b) { return a.entries_ == b.entries_; }

private:
    AgnMethod method_ = AgnMethod::direct;
    std::map<Key, BigRat> entries_;
};

// For method = alternative, the n < 2 columns come from the genus series.
AgnTable build_table(int gmax, int nmax, AgnMethod method);

// Text format, LF line endings:
//   # agn-table v1
//   g<TAB>n<TAB>p/q       (one line per entry, lowest terms, sorted by (g, n))
inline constexpr std::string_view agn_table_header = "# agn-table v1";

std::string serialize_table(const AgnTable& t);
// Throws mvlab::format_error naming the offending line.
AgnTable parse_table(std::string_view text, AgnMethod method = AgnMethod::direct);

void save_table(const AgnTable& t, const std::filesystem::path& path);
AgnTable load_table(const std::filesystem::path& path, AgnMethod method = AgnMethod::direct);

} // namespace mvlab
