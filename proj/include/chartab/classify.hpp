#ifndef CHARTAB_CLASSIFY_HPP
#define CHARTAB_CLASSIFY_HPP

#include "chartab/chartable.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chartab {

struct CenterMeta {
    std::uint64_t order = 1;
    bool cyclic = true;
};

struct VanishRec {
    std::uint32_t class_index;
    std::string class_name;
    std::uint32_t element_order;
};

struct CharVerdict {
    std::size_t index = 0;
    std::uint64_t degree = 0;
    bool faithful = false;
    std::vector<VanishRec> vanishing;
    // condition (i): every zero class has one common element order, a power
    // of a single prime p
    std::optional<bool> same_prime_power_order;
    std::uint64_t p = 0;              // the prime, when (i) holds
    std::uint32_t zero_order = 0;     // the common element order, when (i) holds
    std::optional<bool> count_within_out_bound;
    std::optional<bool> center_condition;
    enum class P13 { Pass, Fail, Unknown } problem13 = P13::Unknown;
    bool one_class = false;
    std::string primitivity; // "primitive" / "imprimitive-shape-possible" / "unknown"
};

struct ClassificationReport {
    std::string group;
    std::uint64_t order = 0;
    std::string table_source; // "oracle:dixon/v1" etc.
    CenterMeta center;
    bool center_prime_power = true;
    std::optional<std::uint64_t> out_bound;
    std::vector<CharVerdict> characters;
    std::vector<std::uint64_t> one_class_primitive_degrees; // sorted
};

/// Indices of rows whose kernel is trivial (chi(g) = chi(1) only at 1).
std::set<std::size_t> faithful_characters(const CharTable& t);

/// Per-character verdicts for the three classification conditions.  A missing
/// out_bound degrades condition (ii) and the verdict to Unknown; require_p,
/// when set, pins the prime of condition (i).
std::vector<CharVerdict> problem13_check(const CharTable& t, const CenterMeta& center,
                                         std::optional<std::uint64_t> out_bound,
                                         std::optional<std::uint64_t> require_p = std::nullopt);

/// Faithful rows vanishing on exactly one class.
std::set<std::size_t> one_class_characters(const CharTable& t);

/// The imprimitivity-shape gate: degree-vs-index bounds for the two
/// non-solvable shapes (an A5 quotient over a 2-group kernel, index 6; a
/// PSL2(8):3 quotient, index 14); every other known non-solvable family
/// passes unconditionally.  Unknown or solvable labels give "unknown".
std::string primitivity_gate(const std::string& group_label, std::uint64_t degree);

/// Known |Out(M/Z(M))| for quasisimple family specs; nullopt otherwise.
std::optional<std::uint64_t> out_bound_for_spec(const std::string& spec);

/// Full report for a constructed family (oracle table path).
ClassificationReport classify_group(const std::string& spec,
                                    std::optional<std::uint64_t> require_p = std::nullopt,
                                    std::optional<std::uint64_t> out_bound_override = std::nullopt);

/// Report for an ingested table with optional metadata.
ClassificationReport classify_table(const CharTable& t, std::optional<CenterMeta> center,
                                    std::optional<std::uint64_t> out_bound,
                                    std::optional<std::uint64_t> require_p = std::nullopt);

// ---- verification drivers -------------------------------------------------

struct DriverLine {
    std::string item;
    bool pass = false;
    std::string detail;
};

struct DriverReport {
    std::string name;
    std::vector<DriverLine> lines;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

/// One-class catalogue over the candidate family list; checks the qualifying
/// (group, degree) multisets exactly, plus the centre/zero-order echo on
/// every qualifying character.
DriverReport verify_thm15();

/// Closed-form vanishing counts for the analytic families over prime powers
/// 5..qmax, plus analytic-vs-oracle canonical equality for q <= oracle_max.
DriverReport verify_prop46(std::uint64_t qmax, std::uint64_t oracle_max = 13);

/// Two-power-degree zero witnesses for the given r values.
DriverReport verify_prop43(const std::vector<unsigned>& rs);

/// The outer-bound inequality sweep over odd prime powers 32 < q <= qmax.
DriverReport verify_lemma45(std::uint64_t qmax);

/// Negative controls: no faithful character of an:7, an:8, sl2:9, m11 passes
/// the classification conditions.
DriverReport verify_negatives();

/// Central-commutator sweep: for x, y with [x,y] in Z(G) and a faithful
/// irreducible chi with chi(x) != 0, checks [x,y] = 1.
DriverReport verify_commutator_sweep(const std::vector<std::string>& specs = {"sl2:5", "psl2:7"});

struct BridgeReport {
    bool two_classes = false;
    std::uint32_t common_order = 0;      // actual common element order of the zeros
    bool same_prime_power = false;
    bool problem13_at_bound2 = false;
    bool pgl11_negative = false;         // no faithful one-class row of degree 5 or 10
    std::vector<std::uint64_t> pgl11_one_class_degrees;
};

/// The deg-5 analysis of psl2:11 (analytic + oracle agreement) and the
/// pgl2:11 negative check.
BridgeReport verify_psl211_bridge();

} // namespace chartab

#endif
