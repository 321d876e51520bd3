#include "mobius/linalg.hpp"

namespace mobius {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::value PrimeField::inv(value a) const {
    if (a == 0) throw BadArgument("division by zero");
    long long t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r) {
        long long q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    return from_int(t);
}

}  // namespace mobius
