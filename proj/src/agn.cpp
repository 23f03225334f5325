#include "mvlab/agn.hpp"

#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mvlab/error.hpp"
#include "mvlab/genus.hpp"

namespace mvlab {

std::string_view to_string(AgnMethod m)
{
    switch (m) {
    case AgnMethod::direct:
        return "direct";
    case AgnMethod::alternative:
        return "alt";
    case AgnMethod::series:
        return "series";
    }
    return "?";
}

AgnMethod parse_agn_method(std::string_view s)
{
    if (s == "direct") {
        return AgnMethod::direct;
    }
    if (s == "alt" || s == "alternative") {
        return AgnMethod::alternative;
    }
    if (s == "series") {
        return AgnMethod::series;
    }
    throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

namespace {

bool zero_by_definition(int g, int n)
{
    return g < 0 || n < 0 || 2 * g - 2 + n <= 0;
}

// Solves m x = rhs exactly by Gaussian elimination. m is square and nonsingular.
std::vector<BigRat> solve_exact(std::vector<std::vector<BigRat>> m, std::vector<BigRat> rhs)
{
    const std::size_t size = rhs.size();
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && sgn(m[pivot][col]) == 0) {
            ++pivot;
        }
        if (pivot == size) {
            throw consistency_error("singular Pochhammer system");
        }
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = col + 1; row < size; ++row) {
            if (sgn(m[row][col]) == 0) {
                continue;
            }
            const BigRat f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < size; ++k) {
                m[row][k] -= f * m[col][k];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<BigRat> x(size);
    for (std::size_t i = size; i-- > 0;) {
        BigRat s = rhs[i];
        for (std::size_t k = i + 1; k < size; ++k) {
            s -= m[i][k] * x[k];
        }
        x[i] = s / m[i][i];
    }
    return x;
}

class DirectEngine {
public:
    BigRat value(int g, int n)
    {
        if (zero_by_definition(g, n)) {
            return 0;
        }
        std::lock_guard lock(mutex_);
        if (n == 0) {
            return column_zero(g);
        }
        ensure(g, n);
        return rows_[g][n];
    }

private:
    const BigRat& at(int g, int n) const { return rows_[g][n]; }

    void ensure(int g, int n)
    {
        if (static_cast<int>(rows_.size()) <= g) {
            rows_.resize(g + 1);
        }
        for (int gp = 0; gp <= g; ++gp) {
            const int target = n + 3 * (g - gp);
            auto& row = rows_[gp];
            while (static_cast<int>(row.size()) <= target) {
                const int np = static_cast<int>(row.size());
                row.push_back(np == 0 ? BigRat(0) : cell(gp, np));
            }
        }
    }

    BigRat cell(int g, int n) const
    {
        if (zero_by_definition(g, n)) {
            return 0;
        }
        if (g == 0 && (n == 3 || n == 4)) {
            return 1;
        }
        BigRat s = 0;
        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            for (int n1 = 2; n1 <= n + 1; ++n1) {
                const int n2 = n + 3 - n1;
                if (n2 < 2 || (g1 == 0 && n1 == 3) || (g2 == 0 && n2 == 3)) {
                    continue;
                }
                if (zero_by_definition(g1, n1) || zero_by_definition(g2, n2)) {
                    continue;
                }
                s += BigRat(binomial(n - 1, n1 - 2)) * at(g1, n1) * at(g2, n2);
            }
        }
        s /= 2;
        if (g >= 1) {
            s += at(g - 1, n + 3) / 12;
        }
        return s / (4 * g - 4 + n);
    }

    BigRat column_zero(int g)
    {
        if (auto it = column_zero_.find(g); it != column_zero_.end()) {
            return it->second;
        }
        ensure(g, g + 1);
        // a_{g,n} = 2^n sum_j C_j ((5g-5-j)/2)_n for n = 1..g+1.
        const std::size_t size = g + 1;
        std::vector<std::vector<BigRat>> m(size, std::vector<BigRat>(size));
        std::vector<BigRat> rhs(size);
        for (std::size_t i = 0; i < size; ++i) {
            const int nn = static_cast<int>(i) + 1;
            for (std::size_t j = 0; j < size; ++j) {
                m[i][j] = BigRat(pow_int(2, nn)) * pochhammer(make_rat(5 * g - 5 - static_cast<long>(j), 2), nn);
            }
            rhs[i] = at(g, nn);
        }
        BigRat sum = 0;
        for (const auto& c : solve_exact(std::move(m), std::move(rhs))) {
            sum += c;
        }
        column_zero_.emplace(g, sum);
        return sum;
    }

    std::mutex mutex_;
    std::vector<std::vector<BigRat>> rows_;
    std::map<int, BigRat> column_zero_;
};

class AltEngine {
public:
    BigRat value(int g, int n)
    {
        if (n < 2) {
            throw domain_error("alternating recursion needs n >= 2, got n = " + std::to_string(n));
        }
        if (g < 0) {
            return 0;
        }
        std::lock_guard lock(mutex_);
        ensure(g, n);
        return rows_[g][n];
    }

private:
    void ensure(int g, int n)
    {
        if (static_cast<int>(rows_.size()) <= g) {
            rows_.resize(g + 1);
        }
        for (int gp = 0; gp <= g; ++gp) {
            const int target = n + 2 * (g - gp);
            auto& row = rows_[gp];
            while (static_cast<int>(row.size()) <= target) {
                const int np = static_cast<int>(row.size());
                row.push_back(np < 2 ? BigRat(0) : cell(gp, np));
            }
        }
    }

    BigRat cell(int g, int n) const
    {
        if (g == 0 && n == 2) {
            return 0;
        }
        const int q = n - 2;
        BigRat s = 0;
        for (int g1 = 0; g1 <= g; ++g1) {
            for (int g2 = 0; g1 + g2 <= g; ++g2) {
                const int J = g - g1 - g2;
                const int total = q + 4 + 2 * J;
                BigRat inner = 0;
                for (int j1 = 0; j1 <= J; ++j1) {
                    const int j2 = J - j1;
                    for (int n1 = 2 * j1 + 2; n1 <= total - 2 * j2 - 2; ++n1) {
                        const int n2 = total - n1;
                        if (zero_by_definition(g1, n1) || zero_by_definition(g2, n2)) {
                            continue;
                        }
                        const BigInt den = factorial(2 * j1 + 1) * factorial(2 * j2 + 1) * factorial(n1 - 2 * j1 - 2)
                            * factorial(n2 - 2 * j2 - 2);
                        inner += rows_[g1][n1] * rows_[g2][n2] / BigRat(den);
                    }
                }
                if (sgn(inner) != 0) {
                    BigRat w = make_rat(BigInt(J % 2 == 0 ? 1 : -1), pow_int(4, J));
                    s += w * inner;
                }
            }
        }
        s *= BigRat(factorial(q)) / 2;
        for (int j = 1; j <= g; ++j) {
            const BigRat w = make_rat(BigInt(j % 2 == 0 ? 1 : -1), pow_int(4, j) * factorial(2 * j));
            s -= w * rows_[g - j][n + 2 * j];
        }
        if (q == 1 && g == 0) {
            s += 1;
        }
        return s;
    }

    std::mutex mutex_;
    std::vector<std::vector<BigRat>> rows_;
};

DirectEngine& direct_engine()
{
    static DirectEngine engine;
    return engine;
}

AltEngine& alt_engine()
{
    static AltEngine engine;
    return engine;
}

} // namespace

BigRat a_direct(int g, int n)
{
    return direct_engine().value(g, n);
}

BigRat a_alt(int g, int n)
{
    return alt_engine().value(g, n);
}

AgnTable::AgnTable(AgnMethod method, std::map<Key, BigRat> entries)
    : method_(method), entries_(std::move(entries))
{
}

const BigRat& AgnTable::at(int g, int n) const
{
    const auto it = entries_.find({g, n});
    if (it == entries_.end()) {
        throw std::out_of_range("a_{" + std::to_string(g) + "," + std::to_string(n) + "} not in table");
    }
    return it->second;
}

BigRat AgnTable::value_or_zero(int g, int n) const
{
    const auto it = entries_.find({g, n});
    return it == entries_.end() ? BigRat(0) : it->second;
}

AgnTable AgnTable::with_entry(int g, int n, const BigRat& v) const
{
    auto copy = entries_;
    copy[{g, n}] = v;
    return AgnTable(method_, std::move(copy));
}

AgnTable build_table(int gmax, int nmax, AgnMethod method)
{
    if (gmax < 0 || nmax < 0) {
        throw domain_error("table bounds must be nonnegative");
    }
    std::map<AgnTable::Key, BigRat> entries;
    for (int g = 0; g <= gmax; ++g) {
        for (int n = 0; n <= nmax; ++n) {
            BigRat v;
            switch (method) {
            case AgnMethod::direct:
                v = a_direct(g, n);
                break;
            case AgnMethod::alternative:
                v = n >= 2 ? a_alt(g, n) : agn_from_series(g, n);
                break;
            case AgnMethod::series:
                v = agn_from_series(g, n);
                break;
            }
            entries.emplace(AgnTable::Key{g, n}, std::move(v));
        }
    }
    return AgnTable(method, std::move(entries));
}

std::string serialize_table(const AgnTable& t)
{
    std::string out(agn_table_header);
    out += '\n';
    for (const auto& [key, v] : t.entries()) {
        out += std::to_string(key.first);
        out += '\t';
        out += std::to_string(key.second);
        out += '\t';
        out += to_fraction_string(v);
        out += '\n';
    }
    return out;
}

namespace {

int parse_index(std::string_view s, std::size_t line, const char* what)
{
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end || v < 0 || (s.size() > 1 && s.front() == '0')) {
        throw format_error(line, std::string("bad ") + what + " index '" + std::string(s) + "'");
    }
    return v;
}

} // namespace

AgnTable parse_table(std::string_view text, AgnMethod method)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.empty()) {
        throw format_error(1, "empty file, expected header '" + std::string(agn_table_header) + "'");
    }
    if (lines[0] != agn_table_header) {
        constexpr std::string_view family = "# agn-table v";
        if (lines[0].substr(0, family.size()) == family) {
            throw format_error(1, "unsupported table version '" + std::string(lines[0].substr(2)) + "'");
        }
        throw format_error(1, "bad header '" + std::string(lines[0]) + "'");
    }
    std::map<AgnTable::Key, BigRat> entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const std::string_view line = lines[i];
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos) {
            throw format_error(lineno, "malformed line '" + std::string(line) + "'");
        }
        const int g = parse_index(line.substr(0, t1), lineno, "genus");
        const int n = parse_index(line.substr(t1 + 1, t2 - t1 - 1), lineno, "point");
        BigRat v;
        try {
            v = parse_fraction(line.substr(t2 + 1));
        } catch (const std::invalid_argument& e) {
            throw format_error(lineno, std::string(e.what()) + " '" + std::string(line.substr(t2 + 1)) + "'");
        }
        if (!entries.emplace(AgnTable::Key{g, n}, std::move(v)).second) {
            throw format_error(lineno, "duplicate entry (" + std::to_string(g) + ", " + std::to_string(n) + ")");
        }
    }
    return AgnTable(method, std::move(entries));
}

void save_table(const AgnTable& t, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << serialize_table(t);
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

AgnTable load_table(const std::filesystem::path& path, AgnMethod method)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_table(buf.str(), method);
    } catch (const format_error& e) {
        throw e.in(path.string());
    }
}

} // namespace mvlab
