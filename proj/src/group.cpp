#include "chartab/group.hpp"

#include "chartab/numtheory.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace chartab {

namespace {
std::atomic<std::uint64_t> g_budget{0};

std::uint64_t init_budget() {
    if (const char* env = std::getenv("CHARTAB_MAX_ORDER")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 2000000ull;
}
} // namespace

std::uint64_t group_order_budget() {
    std::uint64_t b = g_budget.load();
    if (b == 0) {
        b = init_budget();
        g_budget.store(b);
    }
    return b;
}

void set_group_order_budget(std::uint64_t n) { g_budget.store(n); }

std::vector<Element> closure(const std::vector<Element>& gens, std::uint64_t budget) {
    if (gens.empty()) throw std::invalid_argument("closure of empty generating set");
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    std::vector<Element> out;
    Element id = gens[0].identity_like();
    out.push_back(id);
    seen.emplace(id.key(), 0);
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t i = queue.front();
        queue.pop_front();
        for (const Element& g : gens) {
            Element x = out[i] * g;
            auto [it, fresh] = seen.emplace(x.key(), static_cast<std::uint32_t>(out.size()));
            if (fresh) {
                out.push_back(x);
                if (out.size() > budget)
                    throw BudgetExceeded("group order exceeds the element budget of " +
                                         std::to_string(budget));
                queue.push_back(static_cast<std::uint32_t>(out.size() - 1));
            }
        }
    }
    return out;
}

FiniteGroup::FiniteGroup(std::string label, std::vector<Element> generators)
    : label_(std::move(label)), gens_(std::move(generators)) {
    elements_ = closure(gens_);
    std::sort(elements_.begin(), elements_.end());
    index_.reserve(elements_.size() * 2);
    for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].key(), i);
    id_index_ = index_.at(gens_[0].identity_like().key());
}

bool FiniteGroup::contains(const Element& e) const { return index_.count(e.key()) != 0; }

std::uint32_t FiniteGroup::index_of(const Element& e) const {
    auto it = index_.find(e.key());
    if (it == index_.end()) throw std::out_of_range("element not in group " + label_);
    return it->second;
}

void FiniteGroup::compute_classes() const {
    if (!classes_.empty()) return;
    std::uint32_t n = static_cast<std::uint32_t>(elements_.size());
    class_of_.assign(n, UINT32_MAX);
    std::vector<ConjClass> raw;
    std::vector<Element> geninv;
    for (const auto& g : gens_) geninv.push_back(g.inverse());
    for (std::uint32_t i = 0; i < n; ++i) {
        if (class_of_[i] != UINT32_MAX) continue;
        std::uint32_t cid = static_cast<std::uint32_t>(raw.size());
        std::vector<std::uint32_t> orbit{i};
        class_of_[i] = cid;
        for (std::size_t h = 0; h < orbit.size(); ++h) {
            const Element& x = elements_[orbit[h]];
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                Element y = gens_[gi] * x * geninv[gi];
                std::uint32_t j = index_.at(y.key());
                if (class_of_[j] == UINT32_MAX) {
                    class_of_[j] = cid;
                    orbit.push_back(j);
                }
            }
        }
        ConjClass c;
        c.rep = *std::min_element(orbit.begin(), orbit.end());
        c.size = orbit.size();
        c.element_order = elements_[i].order();
        raw.push_back(std::move(c));
    }
    // canonical order: (element_order, size, representative key)
    std::vector<std::uint32_t> perm(raw.size());
    for (std::uint32_t i = 0; i < raw.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto &x = raw[a], &y = raw[b];
        if (x.element_order != y.element_order) return x.element_order < y.element_order;
        if (x.size != y.size) return x.size < y.size;
        return elements_[x.rep].key() < elements_[y.rep].key();
    });
    std::vector<std::uint32_t> newid(raw.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) newid[perm[i]] = i;
    classes_.resize(raw.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) classes_[i] = raw[perm[i]];
    for (auto& c : class_of_) c = newid[c];
    // power maps
    for (auto& c : classes_) {
        const Element& rep = elements_[c.rep];
        c.power_map.resize(c.element_order);
        Element x = rep.identity_like();
        for (std::uint32_t k = 0; k < c.element_order; ++k) {
            c.power_map[k] = class_of_[index_.at(x.key())];
            x = x * rep;
        }
    }
}

const std::vector<ConjClass>& FiniteGroup::classes() const {
    compute_classes();
    return classes_;
}

const std::vector<std::uint32_t>& FiniteGroup::class_of() const {
    compute_classes();
    return class_of_;
}

std::uint32_t FiniteGroup::class_of_element(const Element& e) const {
    compute_classes();
    return class_of_[index_of(e)];
}

std::uint64_t FiniteGroup::exponent() const {
    std::uint64_t e = 1;
    for (const auto& c : classes()) e = lcm_u64(e, c.element_order);
    return e;
}

std::vector<Element> FiniteGroup::center() const {
    std::vector<Element> z;
    for (const Element& e : elements_) {
        bool central = true;
        for (const Element& g : gens_) {
            if (!(e * g == g * e)) { central = false; break; }
        }
        if (central) z.push_back(e);
    }
    return z;
}

FiniteGroup::CenterInfo FiniteGroup::center_info() const {
    auto z = center();
    CenterInfo info;
    info.order = z.size();
    info.cyclic = false;
    for (const Element& e : z) {
        if (e.order() == z.size()) { info.cyclic = true; break; }
    }
    if (info.order == 1) info.cyclic = true;
    auto [p, f] = prime_power_decompose(info.order);
    info.prime_power = info.order == 1 || p != 0;
    info.prime = p;
    return info;
}

FiniteGroup FiniteGroup::derived_subgroup() const {
    std::vector<Element> seed;
    for (const Element& a : gens_)
        for (const Element& b : gens_)
            seed.push_back(a.inverse() * b.inverse() * a * b);
    if (seed.empty()) seed.push_back(gens_[0].identity_like());
    // normal closure under conjugation by the generators
    for (;;) {
        std::vector<Element> sub = closure(seed);
        std::unordered_map<std::uint64_t, bool> member;
        for (const Element& s : sub) member.emplace(s.key(), true);
        bool grew = false;
        for (const Element& k : sub) {
            for (const Element& g : gens_) {
                Element c = g.inverse() * k * g;
                if (!member.count(c.key())) {
                    seed.push_back(c);
                    grew = true;
                    break;
                }
            }
            if (grew) break;
        }
        if (!grew) return FiniteGroup(label_ + "'", seed);
    }
}

std::uint64_t FiniteGroup::centralizer_order(const Element& g) const {
    std::uint64_t n = 0;
    for (const Element& e : elements_)
        if (e * g == g * e) ++n;
    return n;
}

} // namespace chartab
