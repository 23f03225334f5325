#include "mvlab/gaussian.hpp"

namespace mvlab {

GaussianRat imaginary_power(const BigRat& scale, unsigned long k)
{
    BigRat mag = 1;
    for (unsigned long j = 0; j < k; ++j) {
        mag *= scale;
    }
    switch (k % 4) {
    case 0:
        return {mag, 0};
    case 1:
        return {0, mag};
    case 2:
        return {-mag, 0};
    default:
        return {0, -mag};
    }
}

} // namespace mvlab
