#include "fracbody/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fracbody {

namespace {

void check_basic(int n, double s, double p) {
    if (n < 1 || n > 3) {
        std::ostringstream msg;
        msg << "dimension n = " << n << " unsupported, must be 1, 2 or 3";
        throw std::invalid_argument(msg.str());
    }
    if (!(s > 0.0 && s < 1.0)) {
        std::ostringstream msg;
        msg << "fractional order s = " << s << " outside (0, 1)";
        throw std::invalid_argument(msg.str());
    }
    if (!(p > 1.0)) {
        std::ostringstream msg;
        msg << "exponent p = " << p << " must satisfy p > 1";
        throw std::invalid_argument(msg.str());
    }
}

FracParams fill(int n, double s, double p) {
    FracParams fp;
    fp.n = n;
    fp.s = s;
    fp.p = p;
    fp.ps = p * s;
    fp.sobolev_exp = fp.ps < n ? n * p / (n - fp.ps)
                               : std::numeric_limits<double>::quiet_NaN();
    return fp;
}

}  // namespace

FracParams validate_params(int n, double s, double p) {
    check_basic(n, s, p);
    if (!(p < n / s)) {
        std::ostringstream msg;
        msg << "p >= n/s (p = " << p << ", n/s = " << n / s
            << "); the Sobolev exponent n p/(n - p s) requires p < n/s";
        throw std::invalid_argument(msg.str());
    }
    return fill(n, s, p);
}

FracParams FracParams::for_limit_sweep(int n, double s, double p) {
    check_basic(n, s, p);
    return fill(n, s, p);
}

}  // namespace fracbody
