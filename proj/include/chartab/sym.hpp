#ifndef CHARTAB_SYM_HPP
#define CHARTAB_SYM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chartab {

/// A partition of n: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    unsigned n() const { return n_; }
    const std::vector<unsigned>& parts() const { return parts_; }
    Partition conjugate() const;
    bool is_self_conjugate() const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }
    std::string str() const;

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

/// All partitions of n, in a fixed deterministic order.
std::vector<Partition> partitions_of(unsigned n);

/// Character value chi_lambda(mu) of the symmetric group by the recursive
/// rim-hook rule, memoized.  Requires |lambda| = |mu|.
std::int64_t mn_value(const Partition& lambda, const Partition& mu);

/// Degree chi_lambda(1) by the hook length formula.
std::uint64_t sym_degree(const Partition& lambda);

/// Centralizer order z_mu = prod i^{m_i} m_i!.
std::uint64_t cycle_type_centralizer(const Partition& mu);

/// Conjugacy classes of the alternating group, built combinatorially:
/// even cycle types; a type with all parts odd and distinct splits in two.
struct AnClass {
    Partition type;
    bool split_half = false; // one of a split pair
    std::uint64_t size = 0;
    std::uint32_t element_order = 1;
};
std::vector<AnClass> an_classes(unsigned n);

/// Restriction of chi_lambda to the alternating group: the irreducible row
/// over an_classes(n) when lambda is not self-conjugate (split pairs carry
/// equal values), std::nullopt (the split case) otherwise.
std::optional<std::vector<std::int64_t>> an_character_values(const Partition& lambda);

/// Degree-2^r zero witness: lambda = (2^r, 1) with the order-4 cycle type mu
/// on which chi_lambda vanishes; n = 2^r + 1, r >= 3.
std::pair<Partition, Partition> two_power_zero_witness(unsigned r);

} // namespace chartab

#endif
