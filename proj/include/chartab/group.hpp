#ifndef CHARTAB_GROUP_HPP
#define CHARTAB_GROUP_HPP

#include "chartab/element.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace chartab {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Global element budget for explicit group enumeration (default 2e6);
/// overridable via the CHARTAB_MAX_ORDER environment variable or CLI flag.
std::uint64_t group_order_budget();
void set_group_order_budget(std::uint64_t n);

struct ConjClass {
    std::uint32_t rep;            // index of the minimal-key representative
    std::uint64_t size;
    std::uint32_t element_order;
    std::vector<std::uint32_t> power_map; // power_map[k] = class of rep^k, k in [0, order)
};

class FiniteGroup {
public:
    FiniteGroup(std::string label, std::vector<Element> generators);

    const std::string& label() const { return label_; }
    std::uint64_t order() const { return elements_.size(); }
    const std::vector<Element>& elements() const { return elements_; }
    const std::vector<Element>& generators() const { return gens_; }
    const Element& element(std::uint32_t i) const { return elements_[i]; }
    const Element& identity() const { return elements_[id_index_]; }

    bool contains(const Element& e) const;
    std::uint32_t index_of(const Element& e) const; // throws if absent

    /// Conjugacy classes in canonical order:
    /// (element_order, size, minimal representative key) ascending.
    const std::vector<ConjClass>& classes() const;
    /// Class index of each element, aligned with elements().
    const std::vector<std::uint32_t>& class_of() const;
    std::uint32_t class_of_element(const Element& e) const;

    /// Exponent of the group (lcm of element orders).
    std::uint64_t exponent() const;

    std::vector<Element> center() const;
    struct CenterInfo {
        std::uint64_t order;
        bool cyclic;
        bool prime_power; // true also for the trivial center
        std::uint64_t prime; // 0 when trivial or not a prime power
    };
    CenterInfo center_info() const;

    FiniteGroup derived_subgroup() const;
    std::uint64_t centralizer_order(const Element& g) const;
    unsigned element_order(const Element& g) const { return g.order(); }

private:
    std::string label_;
    std::vector<Element> gens_;
    std::vector<Element> elements_; // sorted by key
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::uint32_t id_index_ = 0;
    mutable std::vector<ConjClass> classes_;
    mutable std::vector<std::uint32_t> class_of_;
    void compute_classes() const;
};

/// Breadth-first closure of a generating set; throws BudgetExceeded.
std::vector<Element> closure(const std::vector<Element>& gens,
                             std::uint64_t budget = group_order_budget());

} // namespace chartab

#endif
