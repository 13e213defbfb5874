#include "chartab/cyclotomic.hpp"

#include "chartab/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace chartab {

namespace {

using Poly = std::vector<mpz_class>; // coefficient vector, index = exponent

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// h(x) = g(x^k)
Poly poly_subst_pow(const Poly& g, std::uint64_t k) {
    Poly h(1 + (g.size() - 1) * k, mpz_class(0));
    for (std::size_t i = 0; i < g.size(); ++i) h[i * k] = g[i];
    return h;
}

// Exact division of integer polynomials, divisor monic-leading or at least
// with leading coefficient dividing everything it must.
Poly poly_div_exact(Poly num, const Poly& den) {
    poly_trim(num);
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        std::size_t shift = num.size() - den.size();
        mpz_class c = num.back() / den.back();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        poly_trim(num);
    }
    if (!num.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

Poly cyclotomic_poly(std::uint64_t n) {
    if (n == 1) return Poly{mpz_class(-1), mpz_class(1)};
    auto primes = prime_divisors(n);
    std::uint64_t rad = 1;
    Poly g{mpz_class(-1), mpz_class(1)}; // x - 1
    for (auto p : primes) {
        g = poly_div_exact(poly_subst_pow(g, p), g);
        rad *= p;
    }
    if (rad != n) g = poly_subst_pow(g, n / rad);
    return g;
}

// Per-order data: the cyclotomic polynomial, reduction rows for x^k with
// phi <= k < n, and cached subfield-descent solvers.
class CycContext {
public:
    const std::uint64_t n;
    const std::uint64_t phi;
    Poly cyclo;
    // red[k - phi][j]: coefficient of x^j in (x^k mod cyclo)
    std::vector<std::vector<mpz_class>> red;

    explicit CycContext(std::uint64_t n_)
        : n(n_), phi(euler_phi(n_)), cyclo(cyclotomic_poly(n_)) {
        red.resize(n - phi);
        if (n > phi) {
            std::vector<mpz_class> row(phi);
            for (std::uint64_t j = 0; j < phi; ++j) row[j] = -cyclo[j];
            red[0] = row;
            for (std::uint64_t k = phi + 1; k < n; ++k) {
                std::vector<mpz_class> next(phi, mpz_class(0));
                const auto& prev = red[k - phi - 1];
                // multiply by x, then reduce the overflow term
                const mpz_class& top = prev[phi - 1];
                for (std::uint64_t j = phi; j-- > 1;) next[j] = prev[j - 1];
                next[0] = 0;
                if (top != 0)
                    for (std::uint64_t j = 0; j < phi; ++j) next[j] += top * red[0][j];
                red[k - phi] = std::move(next);
            }
        }
    }

    // Reduces a raw coefficient vector (exponents < n) to canonical
    // power-basis coefficients of length phi.
    std::vector<Rational> reduce(const std::vector<Rational>& raw) const {
        std::vector<Rational> out(phi, Rational(0));
        for (std::uint64_t k = 0; k < raw.size() && k < phi; ++k) out[k] = raw[k];
        for (std::uint64_t k = phi; k < raw.size(); ++k) {
            if (raw[k] == 0) continue;
            const auto& row = red[k - phi];
            for (std::uint64_t j = 0; j < phi; ++j) {
                if (row[j] != 0) out[j] += raw[k] * Rational(row[j]);
            }
        }
        return out;
    }

    struct Descent {
        std::uint64_t m;                  // target order, m = n / r
        std::vector<std::uint64_t> piv;   // pivot row indices, size phi(m)
        // pinv * a[piv] gives candidate coefficients over basis of order m
        std::vector<std::vector<Rational>> pinv;
        std::vector<std::vector<Rational>> basis; // columns as rows: basis[j] = coeffs of zeta_n^(j*r)
    };

    const Descent& descent(std::uint64_t r) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = descents_.find(r);
        if (it != descents_.end()) return it->second;
        Descent d;
        d.m = n / r;
        std::uint64_t pm = euler_phi(d.m);
        d.basis.resize(pm);
        for (std::uint64_t j = 0; j < pm; ++j) {
            std::vector<Rational> raw(n, Rational(0));
            raw[(j * r) % n] = 1;
            d.basis[j] = reduce(raw);
        }
        // Gaussian elimination to find pivot rows of the (phi x pm) matrix
        // with columns d.basis[j].
        std::vector<std::vector<Rational>> work(phi, std::vector<Rational>(pm));
        for (std::uint64_t j = 0; j < pm; ++j)
            for (std::uint64_t i = 0; i < phi; ++i) work[i][j] = d.basis[j][i];
        std::vector<bool> used(phi, false);
        for (std::uint64_t col = 0; col < pm; ++col) {
            std::uint64_t sel = phi;
            for (std::uint64_t i = 0; i < phi; ++i) {
                if (!used[i] && work[i][col] != 0) { sel = i; break; }
            }
            if (sel == phi) throw std::logic_error("descent basis not independent");
            used[sel] = true;
            d.piv.push_back(sel);
            Rational inv = 1 / work[sel][col];
            for (std::uint64_t j = col; j < pm; ++j) work[sel][j] *= inv;
            for (std::uint64_t i = 0; i < phi; ++i) {
                if (i == sel || work[i][col] == 0) continue;
                Rational f = work[i][col];
                for (std::uint64_t j = col; j < pm; ++j) work[i][j] -= f * work[sel][j];
            }
        }
        std::sort(d.piv.begin(), d.piv.end());
        // invert the pivot submatrix P[i][j] = basis[j][piv[i]]
        std::uint64_t k = pm;
        std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(2 * k, Rational(0)));
        for (std::uint64_t i = 0; i < k; ++i) {
            for (std::uint64_t j = 0; j < k; ++j) aug[i][j] = d.basis[j][d.piv[i]];
            aug[i][k + i] = 1;
        }
        for (std::uint64_t col = 0; col < k; ++col) {
            std::uint64_t sel = k;
            for (std::uint64_t i = col; i < k; ++i)
                if (aug[i][col] != 0) { sel = i; break; }
            if (sel == k) throw std::logic_error("descent pivot submatrix singular");
            std::swap(aug[sel], aug[col]);
            Rational inv = 1 / aug[col][col];
            for (std::uint64_t j = 0; j < 2 * k; ++j) aug[col][j] *= inv;
            for (std::uint64_t i = 0; i < k; ++i) {
                if (i == col || aug[i][col] == 0) continue;
                Rational f = aug[i][col];
                for (std::uint64_t j = 0; j < 2 * k; ++j) aug[i][j] -= f * aug[col][j];
            }
        }
        d.pinv.assign(k, std::vector<Rational>(k));
        for (std::uint64_t i = 0; i < k; ++i)
            for (std::uint64_t j = 0; j < k; ++j) d.pinv[i][j] = aug[i][k + j];
        auto [pos, ok] = descents_.emplace(r, std::move(d));
        return pos->second;
    }

private:
    std::mutex mu_;
    std::map<std::uint64_t, Descent> descents_;
};

CycContext& context(std::uint64_t n) {
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, std::unique_ptr<CycContext>> reg;
    if (n == 0) throw std::invalid_argument("cyclotomic order 0 is not allowed");
    if (n > 200000) throw std::invalid_argument("cyclotomic order too large");
    std::lock_guard<std::mutex> lk(mu);
    auto it = reg.find(n);
    if (it == reg.end()) it = reg.emplace(n, std::make_unique<CycContext>(n)).first;
    return *it->second;
}

} // namespace

CycNum::CycNum() {
    auto r = std::make_shared<Rep>();
    r->n = 1;
    r->c.assign(1, Rational(0));
    rep_ = std::move(r);
}

CycNum::CycNum(long v) : CycNum(Rational(v)) {}

CycNum::CycNum(const Rational& v) {
    auto r = std::make_shared<Rep>();
    r->n = 1;
    r->c.assign(1, v);
    rep_ = std::move(r);
}

std::uint64_t CycNum::order() const { return rep_->n; }
const std::vector<Rational>& CycNum::coeffs() const { return rep_->c; }

bool CycNum::is_zero() const {
    for (const auto& x : rep_->c)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_rational() const { return rep_->n == 1; }

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational: " + str());
    return rep_->c[0];
}

bool CycNum::is_integer() const {
    return is_rational() && rep_->c[0].get_den() == 1;
}

mpz_class CycNum::integer_value() const {
    if (!is_integer()) throw std::domain_error("value is not an integer: " + str());
    return rep_->c[0].get_num();
}

CycNum CycNum::from_dense(std::uint64_t n, std::vector<Rational> poly) {
    CycContext& ctx = context(n);
    std::vector<Rational> canon = ctx.reduce(poly);
    // minimize the order: rationals straight to order 1, otherwise try
    // descending through prime-divisor steps until the conductor is reached
    std::uint64_t cur = n;
    for (;;) {
        bool rational_only = true;
        for (std::uint64_t j = 1; j < canon.size(); ++j)
            if (canon[j] != 0) { rational_only = false; break; }
        if (rational_only) {
            auto r = std::make_shared<Rep>();
            r->n = 1;
            r->c.assign(1, canon.empty() ? Rational(0) : canon[0]);
            return CycNum(std::move(r));
        }
        if (cur == 1) break;
        bool descended = false;
        CycContext& c2 = context(cur);
        for (auto r : prime_divisors(cur)) {
            if (cur / r == 0) continue;
            const auto& d = c2.descent(r);
            std::uint64_t pm = d.pinv.size();
            std::vector<Rational> cand(pm, Rational(0));
            for (std::uint64_t i = 0; i < pm; ++i)
                for (std::uint64_t j = 0; j < pm; ++j)
                    if (d.pinv[i][j] != 0) cand[i] += d.pinv[i][j] * canon[d.piv[j]];
            // verify the candidate reproduces the value
            bool ok = true;
            std::vector<Rational> back(canon.size(), Rational(0));
            for (std::uint64_t j = 0; j < pm && ok; ++j) {
                if (cand[j] == 0) continue;
                for (std::uint64_t i = 0; i < back.size(); ++i)
                    back[i] += cand[j] * d.basis[j][i];
            }
            for (std::uint64_t i = 0; i < back.size(); ++i)
                if (back[i] != canon[i]) { ok = false; break; }
            if (ok) {
                cur = d.m;
                canon = std::move(cand);
                descended = true;
                break;
            }
        }
        if (!descended) break;
    }
    auto r = std::make_shared<Rep>();
    r->n = cur;
    r->c = std::move(canon);
    return CycNum(std::move(r));
}

CycNum CycNum::make(std::uint64_t n,
                    const std::vector<std::pair<std::int64_t, Rational>>& terms) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<Rational> poly(n, Rational(0));
    for (const auto& [e, c] : terms) {
        std::int64_t k = e % static_cast<std::int64_t>(n);
        if (k < 0) k += n;
        poly[static_cast<std::uint64_t>(k)] += c;
    }
    return from_dense(n, std::move(poly));
}

CycNum CycNum::root_of_unity(std::uint64_t n, std::int64_t k) {
    return make(n, {{k, Rational(1)}});
}

CycNum CycNum::operator+(const CycNum& o) const {
    std::uint64_t N = lcm_u64(rep_->n, o.rep_->n);
    std::vector<Rational> poly(N, Rational(0));
    std::uint64_t s1 = N / rep_->n, s2 = N / o.rep_->n;
    for (std::uint64_t j = 0; j < rep_->c.size(); ++j)
        if (rep_->c[j] != 0) poly[(j * s1) % N] += rep_->c[j];
    for (std::uint64_t j = 0; j < o.rep_->c.size(); ++j)
        if (o.rep_->c[j] != 0) poly[(j * s2) % N] += o.rep_->c[j];
    return from_dense(N, std::move(poly));
}

CycNum CycNum::operator-() const {
    auto r = std::make_shared<Rep>();
    r->n = rep_->n;
    r->c.resize(rep_->c.size());
    for (std::size_t i = 0; i < rep_->c.size(); ++i) r->c[i] = -rep_->c[i];
    return CycNum(std::move(r));
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    if (is_rational()) {
        if (rep_->c[0] == 0) return CycNum();
        // scaling by a nonzero rational preserves the conductor
        auto r = std::make_shared<Rep>();
        r->n = o.rep_->n;
        r->c.resize(o.rep_->c.size());
        for (std::size_t i = 0; i < o.rep_->c.size(); ++i) r->c[i] = rep_->c[0] * o.rep_->c[i];
        return CycNum(std::move(r));
    }
    if (o.is_rational()) return o * *this;
    std::uint64_t N = lcm_u64(rep_->n, o.rep_->n);
    std::uint64_t s1 = N / rep_->n, s2 = N / o.rep_->n;
    std::vector<Rational> poly(N, Rational(0));
    for (std::uint64_t i = 0; i < rep_->c.size(); ++i) {
        if (rep_->c[i] == 0) continue;
        std::uint64_t ei = (i * s1) % N;
        for (std::uint64_t j = 0; j < o.rep_->c.size(); ++j) {
            if (o.rep_->c[j] == 0) continue;
            poly[(ei + j * s2) % N] += rep_->c[i] * o.rep_->c[j];
        }
    }
    return from_dense(N, std::move(poly));
}

bool CycNum::operator==(const CycNum& o) const {
    return rep_->n == o.rep_->n && rep_->c == o.rep_->c;
}

int CycNum::cmp(const CycNum& a, const CycNum& b) {
    if (a.rep_->n != b.rep_->n) return a.rep_->n < b.rep_->n ? -1 : 1;
    for (std::size_t i = 0; i < a.rep_->c.size(); ++i) {
        int c = ::cmp(a.rep_->c[i], b.rep_->c[i]);
        if (c != 0) return c;
    }
    return 0;
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::galois(std::int64_t k) const {
    std::uint64_t n = rep_->n;
    std::int64_t km = k % static_cast<std::int64_t>(n);
    if (km < 0) km += n;
    if (gcd_u64(static_cast<std::uint64_t>(km), n) != 1)
        throw std::invalid_argument("galois exponent not coprime to the order");
    if (n == 1) return *this;
    std::vector<Rational> poly(n, Rational(0));
    for (std::uint64_t j = 0; j < rep_->c.size(); ++j)
        if (rep_->c[j] != 0) poly[(j * km) % n] += rep_->c[j];
    return from_dense(n, std::move(poly));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero cyclotomic value");
    if (is_rational()) return CycNum(Rational(1) / rep_->c[0]);
    std::uint64_t n = rep_->n;
    CycContext& ctx = context(n);
    std::uint64_t phi = ctx.phi;
    // solve (this) * x = 1 over the power basis
    std::vector<std::vector<Rational>> aug(phi, std::vector<Rational>(phi + 1, Rational(0)));
    for (std::uint64_t j = 0; j < phi; ++j) {
        std::vector<Rational> raw(n, Rational(0));
        for (std::uint64_t i = 0; i < phi; ++i)
            if (rep_->c[i] != 0) raw[(i + j) % n] += rep_->c[i];
        auto col = ctx.reduce(raw);
        for (std::uint64_t i = 0; i < phi; ++i) aug[i][j] = col[i];
    }
    aug[0][phi] = 1;
    for (std::uint64_t col = 0; col < phi; ++col) {
        std::uint64_t sel = phi;
        for (std::uint64_t i = col; i < phi; ++i)
            if (aug[i][col] != 0) { sel = i; break; }
        if (sel == phi) throw std::domain_error("inverse: singular (zero value?)");
        std::swap(aug[sel], aug[col]);
        Rational inv = 1 / aug[col][col];
        for (std::uint64_t j = 0; j <= phi; ++j) aug[col][j] *= inv;
        for (std::uint64_t i = 0; i < phi; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (std::uint64_t j = 0; j <= phi; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    std::vector<Rational> x(rep_->n, Rational(0));
    for (std::uint64_t i = 0; i < phi; ++i) x[i] = aug[i][phi];
    return from_dense(n, std::move(x));
}

namespace {
std::string rat_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}
} // namespace

std::string CycNum::str() const {
    if (is_rational()) return rat_str(rep_->c[0]);
    std::uint64_t n = rep_->n;
    std::ostringstream os;
    bool first = true;
    for (std::uint64_t k = 0; k < rep_->c.size(); ++k) {
        const Rational& c = rep_->c[k];
        if (c == 0) continue;
        Rational a = c;
        if (sgn(a) < 0) {
            os << "-";
            a = -a;
        } else if (!first) {
            os << "+";
        }
        first = false;
        if (k == 0) {
            os << rat_str(a);
            continue;
        }
        if (a != 1) os << rat_str(a) << "*";
        os << "E(" << n << ")";
        if (k != 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;
    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw CycParseError(i, msg); }

    mpz_class parse_uint() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected a number");
        return mpz_class(s.substr(start, i - start));
    }

    Rational parse_rational() {
        mpz_class num = parse_uint();
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            mpz_class den = parse_uint();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    // root := E ( uint ) [^ int]
    CycNum parse_root() {
        skip_ws();
        if (peek() != 'E') fail("expected 'E'");
        ++i;
        if (peek() != '(') fail("expected '(' after E");
        ++i;
        mpz_class n = parse_uint();
        if (peek() != ')') fail("expected ')'");
        ++i;
        if (!n.fits_ulong_p() || n == 0) fail("invalid root order");
        std::int64_t k = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            bool neg = false;
            skip_ws();
            if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                neg = s[i] == '-';
                ++i;
            }
            mpz_class e = parse_uint();
            k = e.get_si();
            if (neg) k = -k;
        }
        return CycNum::root_of_unity(n.get_ui(), k);
    }

    CycNum parse_term() {
        char c = peek();
        if (c == 'E') return parse_root();
        Rational q = parse_rational();
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            CycNum r = parse_root();
            return CycNum(q) * r;
        }
        return CycNum(q);
    }

    CycNum parse_expr() {
        CycNum acc;
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++i;
        }
        if (eof()) fail("empty expression");
        CycNum t = parse_term();
        acc = negate ? -t : t;
        while (!eof()) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++i;
            if (eof()) fail("dangling operator");
            CycNum u = parse_term();
            acc = op == '-' ? acc - u : acc + u;
        }
        return acc;
    }
};

} // namespace

CycNum CycNum::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw CycParseError(0, "empty cyclotomic literal");
    return p.parse_expr();
}

std::complex<double> CycNum::embed() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 6.283185307179586476925287;
    for (std::uint64_t k = 0; k < rep_->c.size(); ++k) {
        if (rep_->c[k] == 0) continue;
        double c = rep_->c[k].get_d();
        double ang = tau * static_cast<double>(k) / static_cast<double>(rep_->n);
        acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

} // namespace chartab
