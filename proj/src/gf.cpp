#include "chartab/gf.hpp"

#include "chartab/numtheory.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace chartab {

namespace {

// polynomial arithmetic over GF(p), coefficient vectors with constant first
using PPoly = std::vector<std::uint64_t>;

PPoly pmod(PPoly a, const PPoly& m, std::uint64_t p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (a.size() >= m.size()) {
        std::uint64_t c = a.back(); // m monic
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t t = (c * m[i]) % p;
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

PPoly pmul(const PPoly& a, const PPoly& b, const PPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return pmod(std::move(r), m, p);
}

PPoly ppow(PPoly a, std::uint64_t e, const PPoly& m, std::uint64_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = pmul(r, a, m, p);
        a = pmul(a, a, m, p);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const PPoly& m, std::uint64_t p, unsigned f) {
    // x^(p^f) == x (mod m), and x^(p^(f/r)) != x for every prime r | f
    PPoly x{0, 1};
    PPoly t = x;
    for (unsigned i = 0; i < f; ++i) t = ppow(t, p, m, p);
    if (t != pmod(x, m, p)) return false;
    for (auto r : prime_divisors(f)) {
        PPoly u = x;
        for (std::uint64_t i = 0; i < f / r; ++i) u = ppow(u, p, m, p);
        if (u == pmod(x, m, p)) return false;
    }
    return true;
}

bool is_primitive(const PPoly& m, std::uint64_t p, std::uint64_t q) {
    PPoly x{0, 1};
    for (auto r : prime_divisors(q - 1)) {
        PPoly t = ppow(x, (q - 1) / r, m, p);
        if (t.size() == 1 && t[0] == 1) return false;
    }
    PPoly t = ppow(x, q - 1, m, p);
    return t.size() == 1 && t[0] == 1;
}

} // namespace

GaloisField::GaloisField(std::uint64_t q) : q_(q) {
    auto [p, f] = prime_power_decompose(q);
    if (p == 0) throw std::invalid_argument("GF order is not a prime power: " + std::to_string(q));
    if (q > 65536) throw std::invalid_argument("GF order too large: " + std::to_string(q));
    p_ = p;
    f_ = f;

    if (f_ == 1) {
        modulus_ = {0, 1};
        gen_ = primitive_root_mod(p_);
    } else {
        // first monic primitive polynomial in (c_{f-1}, ..., c_1, c_0) order
        bool found = false;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < f_; ++i) total *= p_;
        for (std::uint64_t code = 0; code < total && !found; ++code) {
            PPoly m(f_ + 1, 0);
            m[f_] = 1;
            std::uint64_t rest = code;
            for (unsigned i = 0; i < f_; ++i) { // constant coefficient varies fastest
                m[i] = rest % p_;
                rest /= p_;
            }
            if (is_irreducible(m, p_, f_) && is_primitive(m, p_, q_)) {
                modulus_ = m;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no primitive polynomial found");
        gen_ = p_; // the class of x
    }

    // exp/log tables over the generator
    expt_.assign(q_ - 1, 0);
    logt_.assign(q_, 0);
    auto mul_raw = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (f_ == 1) return (a * b) % p_;
        PPoly pa, pb;
        for (std::uint64_t t = a; t; t /= p_) pa.push_back(t % p_);
        for (std::uint64_t t = b; t; t /= p_) pb.push_back(t % p_);
        PPoly r = pmul(pa, pb, modulus_, p_);
        std::uint64_t enc = 0, w = 1;
        for (std::size_t i = 0; i < r.size(); ++i) { enc += r[i] * w; w *= p_; }
        return enc;
    };
    std::uint64_t acc = 1;
    for (std::uint64_t k = 0; k < q_ - 1; ++k) {
        expt_[k] = static_cast<std::uint32_t>(acc);
        logt_[acc] = static_cast<std::uint32_t>(k);
        acc = mul_raw(acc, gen_);
    }
    if (acc != 1) throw std::logic_error("generator does not have order q-1");

    frob_.assign(q_, 0);
    for (std::uint64_t a = 1; a < q_; ++a)
        frob_[a] = static_cast<std::uint32_t>(
            expt_[(static_cast<std::uint64_t>(logt_[a]) * p_) % (q_ - 1)]);
}

std::shared_ptr<const GaloisField> GaloisField::get(std::uint64_t q) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const GaloisField>> reg;
    std::lock_guard<std::mutex> lk(mu);
    auto it = reg.find(q);
    if (it == reg.end())
        it = reg.emplace(q, std::shared_ptr<const GaloisField>(new GaloisField(q))).first;
    return it->second;
}

std::uint64_t GaloisField::add(std::uint64_t a, std::uint64_t b) const {
    if (f_ == 1) return (a + b) % p_;
    std::uint64_t r = 0, w = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

std::uint64_t GaloisField::neg(std::uint64_t a) const {
    if (f_ == 1) return (p_ - a % p_) % p_;
    std::uint64_t r = 0, w = 1;
    while (a) {
        r += ((p_ - a % p_) % p_) * w;
        a /= p_;
        w *= p_;
    }
    return r;
}

std::uint64_t GaloisField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t GaloisField::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    return expt_[(static_cast<std::uint64_t>(logt_[a]) + logt_[b]) % (q_ - 1)];
}

std::uint64_t GaloisField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("GF inverse of zero");
    return expt_[(q_ - 1 - logt_[a]) % (q_ - 1)];
}

std::uint64_t GaloisField::pow(std::uint64_t a, std::int64_t e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("GF pow of zero with nonpositive exponent");
        return 0;
    }
    std::int64_t m = static_cast<std::int64_t>(q_ - 1);
    std::int64_t k = (static_cast<std::int64_t>(logt_[a]) * (e % m)) % m;
    if (k < 0) k += m;
    return expt_[k];
}

std::uint64_t GaloisField::frobenius(std::uint64_t a) const { return frob_[a]; }

std::uint64_t GaloisField::frobenius_iter(std::uint64_t a, unsigned k) const {
    for (unsigned i = 0; i < k % f_; ++i) a = frob_[a];
    return a;
}

bool GaloisField::is_square(std::uint64_t a) const {
    if (a == 0) return true;
    if (p_ == 2) return true;
    return logt_[a] % 2 == 0;
}

std::string GaloisField::element_str(std::uint64_t a) const {
    if (f_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::ostringstream os;
    bool first = true;
    unsigned i = 0;
    for (std::uint64_t t = a; t; t /= p_, ++i) {
        std::uint64_t c = t % p_;
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) os << c;
        else {
            if (c != 1) os << c << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace chartab
