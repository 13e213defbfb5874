#include "chartab/families.hpp"

#include "chartab/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace chartab {

namespace {

Element perm_from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
    std::vector<std::uint8_t> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            unsigned from = cyc[i] - 1, to = cyc[(i + 1) % cyc.size()] - 1;
            img[from] = static_cast<std::uint8_t>(to);
        }
    }
    return Element::permutation(img);
}

std::vector<Element> symmetric_gens(unsigned n) {
    if (n == 0 || n > 14) throw std::invalid_argument("sn degree out of range");
    if (n == 1) return {Element::permutation({0})};
    std::vector<Element> g;
    g.push_back(perm_from_cycles(n, {{1, 2}}));
    if (n > 2) {
        std::vector<unsigned> full(n);
        for (unsigned i = 0; i < n; ++i) full[i] = i + 1;
        g.push_back(perm_from_cycles(n, {full}));
    }
    return g;
}

std::vector<Element> alternating_gens(unsigned n) {
    if (n == 0 || n > 14) throw std::invalid_argument("an degree out of range");
    if (n <= 2) return {Element::permutation(std::vector<std::uint8_t>{0})};
    std::vector<Element> g;
    g.push_back(perm_from_cycles(n, {{1, 2, 3}}));
    if (n >= 4) {
        std::vector<unsigned> cyc;
        if (n % 2 == 1) {
            for (unsigned i = 1; i <= n; ++i) cyc.push_back(i);
        } else {
            for (unsigned i = 2; i <= n; ++i) cyc.push_back(i);
        }
        g.push_back(perm_from_cycles(n, {cyc}));
    }
    return g;
}

std::vector<Element> sl2_gens(std::uint64_t q, bool projective) {
    auto F = GaloisField::get(q);
    std::uint64_t nu = F->generator();
    std::vector<Element> g;
    auto mat = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
        return Element::matrix(F, 2, {a, b, c, d}, projective);
    };
    g.push_back(mat(1, 1, 0, 1));
    if (F->f() > 1) g.push_back(mat(1, nu, 0, 1));
    g.push_back(mat(0, 1, F->neg(1), 0));
    if (q > 3) g.push_back(mat(nu, 0, 0, F->inv(nu)));
    return g;
}

std::vector<Element> gl2_gens(std::uint64_t q, bool projective) {
    auto F = GaloisField::get(q);
    auto g = sl2_gens(q, projective);
    g.push_back(Element::matrix(F, 2, {F->generator(), 0, 0, 1}, projective));
    return g;
}

std::vector<Element> psigmal2_gens(std::uint64_t q) {
    auto F = GaloisField::get(q);
    std::vector<Element> g;
    for (const Element& e : gl2_gens(q, true))
        g.push_back(Element::twisted(e, 0, Element::Twist::Frobenius, F->f()));
    Element id = Element::matrix(F, 2, {1, 0, 0, 1}, true);
    g.push_back(Element::twisted(id, 1, Element::Twist::Frobenius, F->f()));
    return g;
}

// ---- stored generators --------------------------------------------------

// Triple cover of A6 inside SL3(4); entries are GF(4) codes over the modulus
// x^2+x+1 (0, 1, x=2, x+1=3).  Found by search, validated on every
// construction.
constexpr std::uint64_t K3A6_A[9] = {1, 3, 2, 0, 3, 1, 0, 3, 3}; // order 2
constexpr std::uint64_t K3A6_B[9] = {2, 0, 2, 2, 1, 2, 1, 0, 2}; // order 4

// Outer element for 3a6:2_3 in the duality-twisted universe: conjugation
// acts as g -> M * s(g) * M^-1 with s(g) = frob((g^T)^-1).  The plain
// Frobenius twist inverts the centre, so it cannot give this extension.
constexpr std::uint64_t K3A6_OUT[9] = {1, 1, 2, 0, 1, 0, 0, 0, 1};

// Degree-11 permutation generators of M11 (images of 1..11, 1-based cycles).
const std::vector<std::vector<unsigned>> M11_GEN1 = {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
const std::vector<std::vector<unsigned>> M11_GEN2 = {{3, 7, 11, 8}, {4, 10, 5, 6}};

// --------------------------------------------------------------------------

void require(bool cond, const std::string& what) {
    if (!cond) throw ValidationError("stored-generator validation failed: " + what);
}

// Simplicity test from class data: no proper union of conjugacy classes
// containing the identity forms a subgroup.
bool simple_by_class_stats(const FiniteGroup& G) {
    const auto& cls = G.classes();
    std::size_t r = cls.size();
    if (r > 20) throw std::logic_error("class-statistics simplicity test too large");
    std::uint64_t n = G.order();
    for (std::uint64_t mask = 1; mask + 1 < (1ull << (r - 1)); ++mask) {
        // mask over non-identity classes; class 0 is the identity
        std::uint64_t sum = 1;
        for (std::size_t i = 1; i < r; ++i)
            if (mask & (1ull << (i - 1))) sum += cls[i].size;
        if (sum == 1 || sum == n || n % sum != 0) continue;
        // candidate: verify closure of the class union
        std::vector<std::uint32_t> members;
        const auto& cof = G.class_of();
        for (std::uint32_t e = 0; e < n; ++e) {
            std::uint32_t c = cof[e];
            if (c == 0 || (mask & (1ull << (c - 1)))) members.push_back(e);
        }
        std::set<std::uint64_t> mem;
        for (auto e : members) mem.insert(G.element(e).key());
        bool closed = true;
        for (auto a : members) {
            for (auto b : members) {
                Element p = G.element(a) * G.element(b);
                if (!mem.count(p.key())) { closed = false; break; }
            }
            if (!closed) break;
        }
        if (closed) return false;
    }
    return true;
}

std::shared_ptr<const FiniteGroup> make_m10() {
    auto F = GaloisField::get(9);
    std::vector<Element> psl;
    for (const Element& e : sl2_gens(9, true))
        psl.push_back(Element::twisted(e, 0, Element::Twist::Frobenius, 2));
    auto pgl = std::make_shared<FiniteGroup>("psigmal2:9", psigmal2_gens(9));
    require(pgl->order() == 1440, "psigmal2:9 should have order 1440");
    auto pslset = closure(psl);
    std::set<std::uint64_t> inpsl;
    for (const auto& e : pslset) inpsl.insert(e.key());
    require(pslset.size() == 360, "PSL2(9) inside psigmal2:9 should have order 360");
    for (const Element& x : pgl->elements()) {
        if (inpsl.count(x.key())) continue;
        std::vector<Element> gens = psl;
        gens.push_back(x);
        std::vector<Element> sub = closure(gens);
        if (sub.size() != 720) continue;
        bool has8 = false, has10 = false, has12 = false;
        for (const Element& e : sub) {
            unsigned o = e.order();
            if (o == 8) has8 = true;
            if (o == 10) has10 = true;
            if (o == 12) has12 = true;
        }
        if (has8 && !has10 && !has12) {
            auto g = std::make_shared<FiniteGroup>("m10", gens);
            require(g->order() == 720, "m10 should have order 720");
            return g;
        }
    }
    throw ValidationError("m10: no index-2 subgroup with the required order statistics");
}

std::shared_ptr<const FiniteGroup> make_3a6() {
    auto F = GaloisField::get(4);
    std::vector<std::uint64_t> a(K3A6_A, K3A6_A + 9), b(K3A6_B, K3A6_B + 9);
    std::vector<Element> gens{Element::matrix(F, 3, a, false), Element::matrix(F, 3, b, false)};
    auto g = std::make_shared<FiniteGroup>("3a6", gens);
    require(g->order() == 1080, "3a6 should have order 1080");
    auto ci = g->center_info();
    require(ci.order == 3 && ci.cyclic, "3a6 center should be cyclic of order 3");
    // central quotient: the projectivized group, checked simple of order 360
    std::vector<Element> pgens;
    for (const Element& e : gens)
        pgens.push_back(Element::matrix(F, 3,
                                        {e.mat_entry(0, 0), e.mat_entry(0, 1), e.mat_entry(0, 2),
                                         e.mat_entry(1, 0), e.mat_entry(1, 1), e.mat_entry(1, 2),
                                         e.mat_entry(2, 0), e.mat_entry(2, 1), e.mat_entry(2, 2)},
                                        true));
    FiniteGroup quo("3a6/z", pgens);
    require(quo.order() == 360, "3a6 central quotient should have order 360");
    require(simple_by_class_stats(quo), "3a6 central quotient should be simple");
    return g;
}

std::shared_ptr<const FiniteGroup> make_3a6_2_3() {
    auto base = make_3a6();
    auto F = GaloisField::get(4);
    std::vector<Element> gens;
    for (const Element& e : base->generators())
        gens.push_back(Element::twisted(e, 0, Element::Twist::FrobeniusDual, 2));
    std::vector<std::uint64_t> m(K3A6_OUT, K3A6_OUT + 9);
    gens.push_back(Element::twisted(Element::matrix(F, 3, m, false), 1,
                                    Element::Twist::FrobeniusDual, 2));
    auto g = std::make_shared<FiniteGroup>("3a6:2_3", gens);
    require(g->order() == 2160, "3a6:2_3 should have order 2160");
    auto ci = g->center_info();
    require(ci.order == 3 && ci.cyclic, "3a6:2_3 center should be cyclic of order 3");
    // central quotient must be the 2_3 extension of A6: order-8 elements
    // present, none of order 10 or 12
    std::vector<Element> qg;
    for (const Element& e : g->generators()) {
        Element b = e.twisted_base();
        std::vector<std::uint64_t> ent(9);
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) ent[i * 3 + j] = b.mat_entry(i, j);
        qg.push_back(Element::twisted(Element::matrix(F, 3, ent, true), e.twist_power(),
                                      Element::Twist::FrobeniusDual, 2));
    }
    FiniteGroup quo("3a6:2_3/z", qg);
    require(quo.order() == 720, "3a6:2_3 central quotient should have order 720");
    bool has8 = false, has10 = false, has12 = false;
    for (const Element& e : quo.elements()) {
        unsigned o = e.order();
        if (o == 8) has8 = true;
        if (o == 10) has10 = true;
        if (o == 12) has12 = true;
    }
    require(has8 && !has10 && !has12, "3a6:2_3 quotient should have the m10 order statistics");
    return g;
}

std::shared_ptr<const FiniteGroup> make_m11() {
    std::vector<Element> gens{perm_from_cycles(11, M11_GEN1), perm_from_cycles(11, M11_GEN2)};
    auto g = std::make_shared<FiniteGroup>("m11", gens);
    require(g->order() == 7920, "m11 should have order 7920");
    require(g->center_info().order == 1, "m11 center should be trivial");
    require(simple_by_class_stats(*g), "m11 should be simple");
    return g;
}

std::uint64_t parse_q(const std::string& spec, const std::string& prefix) {
    std::string rest = spec.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad group spec: " + spec);
    std::uint64_t q = std::stoull(rest);
    auto [p, f] = prime_power_decompose(q);
    if (p == 0) throw std::invalid_argument("q is not a prime power in spec: " + spec);
    return q;
}

std::shared_ptr<const FiniteGroup> build(const std::string& spec) {
    if (spec.rfind("sn:", 0) == 0) {
        unsigned n = static_cast<unsigned>(std::stoul(spec.substr(3)));
        return std::make_shared<FiniteGroup>(spec, symmetric_gens(n));
    }
    if (spec.rfind("an:", 0) == 0) {
        unsigned n = static_cast<unsigned>(std::stoul(spec.substr(3)));
        return std::make_shared<FiniteGroup>(spec, alternating_gens(n));
    }
    if (spec.rfind("sl2:", 0) == 0) {
        std::uint64_t q = parse_q(spec, "sl2:");
        auto g = std::make_shared<FiniteGroup>(spec, sl2_gens(q, false));
        require(g->order() == q * (q * q - 1), "sl2 order should be q(q^2-1)");
        return g;
    }
    if (spec.rfind("gl2:", 0) == 0) {
        std::uint64_t q = parse_q(spec, "gl2:");
        auto g = std::make_shared<FiniteGroup>(spec, gl2_gens(q, false));
        require(g->order() == q * (q * q - 1) * (q - 1), "gl2 order should be q(q^2-1)(q-1)");
        return g;
    }
    if (spec.rfind("psl2:", 0) == 0) {
        std::uint64_t q = parse_q(spec, "psl2:");
        auto g = std::make_shared<FiniteGroup>(spec, sl2_gens(q, true));
        require(g->order() == q * (q * q - 1) / gcd_u64(2, q - 1),
                "psl2 order should be q(q^2-1)/gcd(2,q-1)");
        return g;
    }
    if (spec.rfind("pgl2:", 0) == 0) {
        std::uint64_t q = parse_q(spec, "pgl2:");
        auto g = std::make_shared<FiniteGroup>(spec, gl2_gens(q, true));
        require(g->order() == q * (q * q - 1), "pgl2 order should be q(q^2-1)");
        return g;
    }
    if (spec.rfind("psigmal2:", 0) == 0) {
        std::uint64_t q = parse_q(spec, "psigmal2:");
        auto [p, f] = prime_power_decompose(q);
        auto g = std::make_shared<FiniteGroup>(spec, psigmal2_gens(q));
        require(g->order() == f * q * (q * q - 1), "psigmal2 order should be f*q(q^2-1)");
        return g;
    }
    if (spec == "2a5") {
        auto g = std::make_shared<FiniteGroup>(spec, sl2_gens(5, false));
        require(g->order() == 120 && g->center_info().order == 2, "2a5 = sl2:5 validation");
        return g;
    }
    if (spec == "m10") return make_m10();
    if (spec == "3a6") return make_3a6();
    if (spec == "3a6:2_3") return make_3a6_2_3();
    if (spec == "m11") return make_m11();
    throw std::invalid_argument("unknown group spec: " + spec);
}

} // namespace

std::shared_ptr<const FiniteGroup> construct_family(const std::string& spec) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const FiniteGroup>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(spec);
        if (it != cache.end()) return it->second;
    }
    auto g = build(spec);
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(spec, g);
    return g;
}

bool spec_is_known(const std::string& spec) {
    static const char* fixed[] = {"m10", "2a5", "3a6", "3a6:2_3", "m11"};
    for (auto* s : fixed)
        if (spec == s) return true;
    for (const char* pre : {"sn:", "an:", "sl2:", "gl2:", "psl2:", "pgl2:", "psigmal2:"})
        if (spec.rfind(pre, 0) == 0) return true;
    return false;
}

} // namespace chartab
