#pragma once

// Published values a_{g,n} for 0 <= g <= 4, 0 <= n <= 6.

#include <map>
#include <utility>

#include "mvlab/rational.hpp"

namespace mvlab {

const std::map<std::pair<int, int>, BigRat>& published_agn();

} // namespace mvlab
