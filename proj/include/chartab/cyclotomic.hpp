#ifndef CHARTAB_CYCLOTOMIC_HPP
#define CHARTAB_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chartab {

using Rational = mpq_class;

struct CycParseError : std::runtime_error {
    std::size_t position;
    CycParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// An exact element of the cyclotomic field Q(zeta_n).
///
/// Values are kept in a canonical form: coefficients over the power basis
/// {zeta_n^0, ..., zeta_n^(phi(n)-1)} reduced modulo the n-th cyclotomic
/// polynomial, with n lowered to the smallest order whose field contains the
/// value (rationals end up at order 1).  Two values are equal iff their
/// canonical (order, coefficients) agree.  Instances are immutable and cheap
/// to copy.
class CycNum {
public:
    CycNum(); // zero
    explicit CycNum(long v);
    explicit CycNum(const Rational& v);

    /// Sum of terms c * zeta_n^k; exponents are taken mod n.
    static CycNum make(std::uint64_t n,
                       const std::vector<std::pair<std::int64_t, Rational>>& terms);
    static CycNum root_of_unity(std::uint64_t n, std::int64_t k);

    std::uint64_t order() const;
    /// Canonical coefficients, length phi(order()).
    const std::vector<Rational>& coeffs() const;

    bool is_zero() const;
    bool is_rational() const;
    /// Throws std::domain_error unless is_rational().
    Rational rational_value() const;
    bool is_integer() const;
    /// Rational value as integer; throws unless an integer.
    mpz_class integer_value() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator-() const;
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// Total order on canonical forms, for deterministic sorting only.
    static int cmp(const CycNum& a, const CycNum& b);

    /// Complex conjugation, zeta_n -> zeta_n^-1.
    CycNum conj() const;
    /// Galois action zeta_n -> zeta_n^k; requires gcd(k, order()) = 1.
    CycNum galois(std::int64_t k) const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    CycNum inverse() const;

    /// Text form in the interchange grammar, e.g. "-1/2+1/2*E(7)+1/2*E(7)^2".
    std::string str() const;
    /// Parses the interchange grammar; throws CycParseError.
    static CycNum parse(const std::string& text);

    /// Floating-point embedding zeta_n -> exp(2*pi*i/n), display/tests only.
    std::complex<double> embed() const;

private:
    struct Rep {
        std::uint64_t n = 1;
        std::vector<Rational> c; // length phi(n)
    };
    std::shared_ptr<const Rep> rep_;
    explicit CycNum(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
    static CycNum from_dense(std::uint64_t n, std::vector<Rational> poly);
    friend class CycContext;
};

inline CycNum conj(const CycNum& a) { return a.conj(); }
inline CycNum galois(const CycNum& a, std::int64_t k) { return a.galois(k); }
inline bool is_zero(const CycNum& a) { return a.is_zero(); }

} // namespace chartab

#endif
