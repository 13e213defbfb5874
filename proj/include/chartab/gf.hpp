#ifndef CHARTAB_GF_HPP
#define CHARTAB_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace chartab {

/// Exact arithmetic in GF(q), q = p^f.
///
/// Elements are encoded as integers in [0, q): the element sum c_i * x^i maps
/// to sum c_i * p^i, where x is the class of the variable modulo the field's
/// defining polynomial.  The defining polynomial is the first monic primitive
/// polynomial of degree f over GF(p) in the coefficient order
/// (c_{f-1}, ..., c_1, c_0), each coefficient running 0..p-1; the resulting
/// table for small fields is listed in the README.  For f = 1 the generator
/// is the least primitive root mod p.
class GaloisField {
public:
    static std::shared_ptr<const GaloisField> get(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    std::uint64_t p() const { return p_; }
    unsigned f() const { return f_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const; // throws on 0
    std::uint64_t pow(std::uint64_t a, std::int64_t e) const;
    /// Frobenius x -> x^p.
    std::uint64_t frobenius(std::uint64_t a) const;
    std::uint64_t frobenius_iter(std::uint64_t a, unsigned k) const;

    /// A fixed multiplicative generator (x itself for f > 1).
    std::uint64_t generator() const { return gen_; }
    bool is_square(std::uint64_t a) const; // nonzero squares only; 0 -> true

    /// Coefficients of the defining polynomial, constant term first
    /// (length f + 1, monic).
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    std::string element_str(std::uint64_t a) const;

private:
    explicit GaloisField(std::uint64_t q);
    std::uint64_t q_, p_;
    unsigned f_;
    std::uint64_t gen_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint32_t> expt_; // expt_[k] = gen^k, k in [0, q-1)
    std::vector<std::uint32_t> logt_; // logt_[a] for a in [1, q)
    std::vector<std::uint32_t> frob_; // frobenius table
};

} // namespace chartab

#endif
