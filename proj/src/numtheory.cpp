#include "chartab/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chartab {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (auto& [p, e] : factorize(n)) {
        std::size_t m = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q) {
    if (q < 2) return {0, 0};
    auto f = factorize(q);
    if (f.size() != 1) return {0, 0};
    return {f[0].first, f[0].second};
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    // m prime throughout this code base.
    return pow_mod(a % m, m - 2, m);
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    if (r == 0) return 0;
    std::uint64_t s = pow_mod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return s == 1 ? 1 : -1;
}

std::uint64_t primitive_root_mod(std::uint64_t p) {
    if (p == 2) return 1;
    std::uint64_t n = p - 1;
    auto primes = prime_divisors(n);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t r : primes) {
            if (pow_mod(g, n / r, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

} // namespace chartab
