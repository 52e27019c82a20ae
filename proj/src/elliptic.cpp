#include "heine/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "heine/types.hpp"

namespace heine {

namespace {

void check_modulus(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw ModulusRange("elliptic modulus must satisfy 0 <= k < 1, got " + std::to_string(k));
}

struct Agm {
    double mean;
    double weighted_sq; // sum_{n>=0} 2^{n-1} c_n^2 with c_0 = k
};

// AGM of (1, k') carrying c_n = c_{n-1}^2 / (4 a_n), which avoids the
// cancellation in (a - b)/2.
Agm agm(double k, double kp) {
    double a = 1.0;
    double b = kp;
    double c = k;
    double pow2 = 0.5;
    double s = pow2 * c * c;
    for (int i = 0; i < 64 && std::abs(c) > 1e-17 * a; ++i) {
        const double an = 0.5 * (a + b);
        c = c * c / (4.0 * an);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        s += pow2 * c * c;
    }
    return {a, s};
}

} // namespace

double elliptic_k(double k) {
    check_modulus(k);
    return elliptic_ke(k, std::sqrt((1.0 - k) * (1.0 + k))).k;
}

double elliptic_e(double k) {
    check_modulus(k);
    return elliptic_ke(k, std::sqrt((1.0 - k) * (1.0 + k))).e;
}

EllipticPair elliptic_ke(double k, double k_complement) {
    check_modulus(k);
    if (!(k_complement > 0.0 && k_complement <= 1.0))
        throw ModulusRange("complementary modulus must satisfy 0 < k' <= 1");
    const Agm g = agm(k, k_complement);
    const double kk = std::numbers::pi / (2.0 * g.mean);
    return {kk, kk * (1.0 - g.weighted_sq)};
}

} // namespace heine
