#include "varsamp/field.hpp"

namespace varsamp {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool Field::is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Field::Field(std::uint64_t p) : p_(p) {
    if (p == 2) throw EvenModulus("modulus 2 is not supported (odd primes only)");
    if (p >= (1ull << 63)) throw CompositeModulus("modulus must be below 2^63");
    if (p < 3 || (p % 2 == 0) || !is_prime_u64(p))
        throw CompositeModulus("modulus " + std::to_string(p) + " is not an odd prime");
}

FieldElement pow(FieldElement a, std::uint64_t e) {
    a.check_bound();
    return FieldElement(powmod_u64(a.value_, e, a.modulus_), a.modulus_);
}

FieldElement inv(FieldElement a) {
    a.check_bound();
    if (a.value_ == 0) throw DivisionByZero("inverse of zero");
    return pow(a, a.modulus_ - 2); // Fermat; modulus is prime by construction
}

} // namespace varsamp
