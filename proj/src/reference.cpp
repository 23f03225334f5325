#include "mvlab/reference.hpp"

#include <array>
#include <string_view>

namespace mvlab {

const std::map<std::pair<int, int>, BigRat>& published_agn()
{
    static const std::map<std::pair<int, int>, BigRat> table = [] {
        static constexpr std::array<std::array<std::string_view, 7>, 5> rows{{
            {"0/1", "0/1", "0/1", "1/1", "1/1", "3/1", "15/1"},
            {"0/1", "1/12", "1/8", "11/24", "21/8", "163/8", "1595/8"},
            {"1/96", "29/640", "337/1152", "319/128", "10109/384", "42445/128", "620641/128"},
            {"575/21504", "20555/82944", "77633/27648", "1038595/27648", "16011391/27648", "31040465/3072",
             "201498115/1024"},
            {"2106241/7962624", "1103729/294912", "160909109/2654208", "14674841399/13271040",
             "99177888029/4423680", "442442475179/884736", "10765584400823/884736"},
        }};
        std::map<std::pair<int, int>, BigRat> out;
        for (int g = 0; g < 5; ++g) {
            for (int n = 0; n < 7; ++n) {
                out.emplace(std::make_pair(g, n), parse_fraction(rows[g][n]));
            }
        }
        return out;
    }();
    return table;
}

} // namespace mvlab
