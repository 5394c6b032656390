#pragma once

#include "hn/errors.hpp"

namespace hn::ff {

// Prime field GF(p) for small p.  Elements are ints in [0, p); every
// operation reduces its result.  Prime fields keep sigma = identity in the
// series instance, so no extension-field machinery exists anywhere.
struct FieldPrime {
    int p = 2;

    FieldPrime() = default;
    explicit FieldPrime(int prime) : p(prime) {
        if (p < 2 || p > 17 || !is_prime(p))
            throw InvalidInput("field modulus must be a prime <= 17, got " + std::to_string(p));
    }

    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    int reduce(long long v) const {
        long long r = v % p;
        return static_cast<int>(r < 0 ? r + p : r);
    }
    int add(int a, int b) const { return (a + b) % p; }
    int sub(int a, int b) const { return (a - b + p) % p; }
    int mul(int a, int b) const { return (a * b) % p; }
    int neg(int a) const { return (p - a) % p; }

    // a^(p-2), Fermat inverse.
    int inv(int a) const {
        if (a % p == 0) throw InvalidInput("inverse of zero in GF(p)");
        int result = 1, base = a % p;
        int e = p - 2;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const FieldPrime& a, const FieldPrime& b) { return a.p == b.p; }
};

} // namespace hn::ff
