#ifndef CHARTAB_ELEMENT_HPP
#define CHARTAB_ELEMENT_HPP

#include "chartab/gf.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace chartab {

/// Group element variants:
///  - permutation on up to 14 points
///  - invertible 2x2 / 3x3 matrix over GF(q)
///  - projective matrix class (scalars normalized so the first nonzero
///    entry equals 1)
///  - twisted pair (matrix-like part, automorphism power), composing as
///    (A, i)(B, j) = (A * s^i(B), i + j mod f) where s is either the entrywise
///    Frobenius or the Frobenius composed with inverse-transpose duality.
class Element {
public:
    enum class Kind : std::uint8_t {
        Permutation = 0,
        Matrix = 1,
        Projective = 2,
        Twisted = 3,
    };
    enum class Twist : std::uint8_t {
        Frobenius = 0,     // entrywise x -> x^p, power mod f
        FrobeniusDual = 1, // x -> frobenius((x^T)^-1), power mod 2
    };

    Element() = default;

    static Element permutation(const std::vector<std::uint8_t>& images);
    static Element matrix(std::shared_ptr<const GaloisField> F, unsigned dim,
                          const std::vector<std::uint64_t>& entries,
                          bool projective);
    /// Twisted pair over a matrix or projective base.
    static Element twisted(Element base, unsigned power, Twist twist, unsigned modulus);

    Kind kind() const { return kind_; }
    bool is_identity() const;
    Element identity_like() const;

    Element operator*(const Element& o) const;
    Element inverse() const;
    bool operator==(const Element& o) const { return key() == o.key(); }
    bool operator!=(const Element& o) const { return key() != o.key(); }
    bool operator<(const Element& o) const { return key() < o.key(); }

    /// Unique 64-bit encoding of the element (canonical within its universe).
    std::uint64_t key() const;
    unsigned order() const;

    std::string str() const;

    // accessors used by family constructions
    unsigned perm_degree() const { return n_; }
    std::uint8_t perm_image(unsigned i) const { return perm_[i]; }
    unsigned mat_dim() const { return dim_; }
    std::uint64_t mat_entry(unsigned r, unsigned c) const { return mat_[r * dim_ + c]; }
    const std::shared_ptr<const GaloisField>& field() const { return F_; }
    unsigned twist_power() const { return power_; }
    Element twisted_base() const;

private:
    Kind kind_ = Kind::Permutation;
    // permutation payload
    std::uint8_t n_ = 0;
    std::array<std::uint8_t, 14> perm_{};
    // matrix payload
    std::shared_ptr<const GaloisField> F_;
    std::uint8_t dim_ = 0;
    std::array<std::uint8_t, 9> mat_{};
    bool base_projective_ = false;
    // twist payload
    Twist twist_ = Twist::Frobenius;
    std::uint8_t power_ = 0;
    std::uint8_t twist_mod_ = 1;

    void normalize_projective();
    Element apply_twist(unsigned times) const; // to the matrix payload
    Element mat_mul(const Element& o) const;
    Element mat_inverse() const;
};

} // namespace chartab

#endif
