#include "chartab/lie.hpp"

#include "chartab/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace chartab {

namespace {

// zeta_n^k + zeta_n^-k, memoized
CycNum two_cos(std::uint64_t n, std::uint64_t k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::uint64_t>, CycNum> cache;
    k %= n;
    k = std::min(k, n - k);
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    CycNum v = CycNum::make(n, {{static_cast<std::int64_t>(k), Rational(1)},
                                {-static_cast<std::int64_t>(k), Rational(1)}});
    cache.emplace(std::make_pair(n, k), v);
    return v;
}

// sqrt(eps * q) with eps = (-1)^((q-1)/2), as an exact cyclotomic value:
// p^(f/2) for even f, p^((f-1)/2) times the quadratic Gauss sum for odd f.
CycNum gauss_root(std::uint64_t q) {
    auto [p, f] = prime_power_decompose(q);
    if (f % 2 == 0) {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < f / 2; ++i) r *= p;
        return CycNum(Rational(static_cast<unsigned long>(r)));
    }
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (std::uint64_t t = 1; t < p; ++t)
        terms.push_back({static_cast<std::int64_t>(t),
                         Rational(legendre_symbol(static_cast<std::int64_t>(t), p))});
    CycNum g = CycNum::make(p, terms);
    std::uint64_t scale = 1;
    for (unsigned i = 0; i + 1 < f; i += 2) scale *= p;
    return CycNum(Rational(static_cast<unsigned long>(scale))) * g;
}

CycNum cyc_int(std::int64_t v) { return CycNum(Rational(static_cast<long>(v))); }
CycNum sign_pm(std::int64_t parity) { return cyc_int(parity % 2 == 0 ? 1 : -1); }

struct Builder {
    CharTable t;
    std::vector<std::string> labels;

    std::size_t add_class(const std::string& label, std::uint64_t size, std::uint32_t order) {
        CharTable::Cls c;
        c.size = size;
        c.element_order = order;
        t.classes.push_back(std::move(c));
        labels.push_back(label);
        return t.classes.size() - 1;
    }

    void add_row(const std::string& label, std::vector<CycNum> row) {
        t.rows.push_back(std::move(row));
        t.row_labels.push_back(label);
    }

    // sorts classes canonically by (order, size, label), remaps power maps
    void finish() {
        std::size_t r = t.classes.size();
        std::vector<std::size_t> idx(r);
        for (std::size_t i = 0; i < r; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const auto &x = t.classes[a], &y = t.classes[b];
            if (x.element_order != y.element_order) return x.element_order < y.element_order;
            if (x.size != y.size) return x.size < y.size;
            return labels[a] < labels[b];
        });
        std::vector<std::size_t> pos(r);
        for (std::size_t p = 0; p < r; ++p) pos[idx[p]] = p;
        CharTable nt;
        nt.label = t.label;
        nt.group_order = t.group_order;
        nt.classes.resize(r);
        nt.class_labels.resize(r);
        for (std::size_t p = 0; p < r; ++p) {
            nt.classes[p] = t.classes[idx[p]];
            for (auto& pk : nt.classes[p].power_map) pk = static_cast<std::uint32_t>(pos[pk]);
            nt.class_labels[p] = labels[idx[p]];
        }
        nt.rows.resize(t.rows.size());
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            nt.rows[i].resize(r);
            for (std::size_t p = 0; p < r; ++p) nt.rows[i][p] = t.rows[i][idx[p]];
        }
        nt.row_labels = t.row_labels;
        t = std::move(nt);
        t.finalize();
    }
};

void check_q(std::uint64_t q) {
    auto [p, f] = prime_power_decompose(q);
    if (p == 0 || q < 4)
        throw std::invalid_argument("family tables need a prime power q >= 4, got " +
                                    std::to_string(q));
}

// true when k (mod p), viewed inside GF(q), is a nonzero square
bool prime_field_square(std::uint64_t k, std::uint64_t p, unsigned f) {
    k %= p;
    return f % 2 == 0 || legendre_symbol(static_cast<std::int64_t>(k), p) == 1;
}

CharTable sl2_even(std::uint64_t q) {
    Builder b;
    b.t.label = "sl2:" + std::to_string(q);
    b.t.group_order = q * (q * q - 1);
    std::uint64_t La = (q - 2) / 2, Lb = q / 2;
    std::size_t c1 = b.add_class("1", 1, 1);
    std::size_t cc = b.add_class("c", q * q - 1, 2);
    std::vector<std::size_t> ca(La + 1), cb(Lb + 1);
    for (std::uint64_t l = 1; l <= La; ++l)
        ca[l] = b.add_class("a:" + std::to_string(l), q * (q + 1),
                            static_cast<std::uint32_t>((q - 1) / gcd_u64(l, q - 1)));
    for (std::uint64_t m = 1; m <= Lb; ++m)
        cb[m] = b.add_class("b:" + std::to_string(m), q * (q - 1),
                            static_cast<std::uint32_t>((q + 1) / gcd_u64(m, q + 1)));
    // power maps
    auto aidx = [&](std::uint64_t e) -> std::size_t {
        e %= (q - 1);
        if (e == 0) return c1;
        return ca[std::min(e, q - 1 - e)];
    };
    auto bidx = [&](std::uint64_t e) -> std::size_t {
        e %= (q + 1);
        if (e == 0) return c1;
        return cb[std::min(e, q + 1 - e)];
    };
    b.t.classes[c1].power_map = {static_cast<std::uint32_t>(c1)};
    b.t.classes[cc].power_map = {static_cast<std::uint32_t>(c1), static_cast<std::uint32_t>(cc)};
    for (std::uint64_t l = 1; l <= La; ++l) {
        auto& pm = b.t.classes[ca[l]].power_map;
        for (std::uint32_t k = 0; k < b.t.classes[ca[l]].element_order; ++k)
            pm.push_back(static_cast<std::uint32_t>(aidx(l * k)));
    }
    for (std::uint64_t m = 1; m <= Lb; ++m) {
        auto& pm = b.t.classes[cb[m]].power_map;
        for (std::uint32_t k = 0; k < b.t.classes[cb[m]].element_order; ++k)
            pm.push_back(static_cast<std::uint32_t>(bidx(m * k)));
    }
    std::size_t r = b.t.classes.size();
    auto row = [&](CycNum at1, CycNum atc) {
        std::vector<CycNum> v(r);
        v[c1] = at1;
        v[cc] = atc;
        return v;
    };
    {
        std::vector<CycNum> v(r, cyc_int(1));
        b.add_row("1", v);
    }
    {
        auto v = row(cyc_int(static_cast<std::int64_t>(q)), cyc_int(0));
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = cyc_int(1);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = cyc_int(-1);
        b.add_row("st", v);
    }
    for (std::uint64_t i = 1; i <= La; ++i) {
        auto v = row(cyc_int(static_cast<std::int64_t>(q + 1)), cyc_int(1));
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = two_cos(q - 1, i * l);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = CycNum();
        b.add_row("chi:" + std::to_string(i), v);
    }
    for (std::uint64_t j = 1; j <= Lb; ++j) {
        auto v = row(cyc_int(static_cast<std::int64_t>(q - 1)), cyc_int(-1));
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = CycNum();
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = -two_cos(q + 1, j * m);
        b.add_row("theta:" + std::to_string(j), v);
    }
    b.finish();
    return b.t;
}

CharTable sl2_odd(std::uint64_t q) {
    auto [p, f] = prime_power_decompose(q);
    Builder b;
    b.t.label = "sl2:" + std::to_string(q);
    b.t.group_order = q * (q * q - 1);
    std::uint64_t La = (q - 3) / 2, Lb = (q - 1) / 2;
    std::uint64_t usz = (q * q - 1) / 2;
    std::size_t c1 = b.add_class("1", 1, 1);
    std::size_t cz = b.add_class("z", 1, 2);
    std::size_t cc = b.add_class("c", usz, static_cast<std::uint32_t>(p));
    std::size_t cd = b.add_class("d", usz, static_cast<std::uint32_t>(p));
    std::size_t czc = b.add_class("zc", usz, static_cast<std::uint32_t>(2 * p));
    std::size_t czd = b.add_class("zd", usz, static_cast<std::uint32_t>(2 * p));
    std::vector<std::size_t> ca(La + 1), cb(Lb + 1);
    for (std::uint64_t l = 1; l <= La; ++l)
        ca[l] = b.add_class("a:" + std::to_string(l), q * (q + 1),
                            static_cast<std::uint32_t>((q - 1) / gcd_u64(l, q - 1)));
    for (std::uint64_t m = 1; m <= Lb; ++m)
        cb[m] = b.add_class("b:" + std::to_string(m), q * (q - 1),
                            static_cast<std::uint32_t>((q + 1) / gcd_u64(m, q + 1)));
    auto aidx = [&](std::uint64_t e) -> std::size_t {
        e %= (q - 1);
        if (e == 0) return c1;
        if (e == (q - 1) / 2) return cz;
        return ca[std::min(e, q - 1 - e)];
    };
    auto bidx = [&](std::uint64_t e) -> std::size_t {
        e %= (q + 1);
        if (e == 0) return c1;
        if (e == (q + 1) / 2) return cz;
        return cb[std::min(e, q + 1 - e)];
    };
    // unipotent times central powers: (z^s u_k) with u_k the unipotent of
    // parameter k; returns the class index
    auto uidx = [&](std::uint64_t zpow, std::uint64_t k, bool from_d) -> std::size_t {
        k %= p;
        bool zbit = zpow % 2 == 1;
        if (k == 0) return zbit ? cz : c1;
        bool sq = prime_field_square(k, p, f);
        bool is_c = from_d ? !sq : sq;
        if (!zbit) return is_c ? cc : cd;
        return is_c ? czc : czd;
    };
    b.t.classes[c1].power_map = {static_cast<std::uint32_t>(c1)};
    b.t.classes[cz].power_map = {static_cast<std::uint32_t>(c1), static_cast<std::uint32_t>(cz)};
    auto fill_unip = [&](std::size_t ci, bool from_d, bool with_z) {
        auto& pm = b.t.classes[ci].power_map;
        std::uint32_t o = b.t.classes[ci].element_order;
        for (std::uint32_t k = 0; k < o; ++k)
            pm.push_back(static_cast<std::uint32_t>(uidx(with_z ? k : 0, k, from_d)));
    };
    fill_unip(cc, false, false);
    fill_unip(cd, true, false);
    fill_unip(czc, false, true);
    fill_unip(czd, true, true);
    for (std::uint64_t l = 1; l <= La; ++l) {
        auto& pm = b.t.classes[ca[l]].power_map;
        for (std::uint32_t k = 0; k < b.t.classes[ca[l]].element_order; ++k)
            pm.push_back(static_cast<std::uint32_t>(aidx(l * k)));
    }
    for (std::uint64_t m = 1; m <= Lb; ++m) {
        auto& pm = b.t.classes[cb[m]].power_map;
        for (std::uint32_t k = 0; k < b.t.classes[cb[m]].element_order; ++k)
            pm.push_back(static_cast<std::uint32_t>(bidx(m * k)));
    }

    std::int64_t eps = ((q - 1) / 2) % 2 == 0 ? 1 : -1;
    CycNum tau = gauss_root(q);
    CycNum half = CycNum(Rational(1, 2));
    std::size_t r = b.t.classes.size();

    {
        std::vector<CycNum> v(r, cyc_int(1));
        b.add_row("1", v);
    }
    {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q));
        v[cz] = cyc_int(static_cast<std::int64_t>(q));
        v[cc] = v[cd] = v[czc] = v[czd] = CycNum();
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = cyc_int(1);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = cyc_int(-1);
        b.add_row("st", v);
    }
    for (std::uint64_t i = 1; i <= La; ++i) {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q + 1));
        v[cz] = sign_pm(i) * cyc_int(static_cast<std::int64_t>(q + 1));
        v[cc] = v[cd] = cyc_int(1);
        v[czc] = v[czd] = sign_pm(i);
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = two_cos(q - 1, i * l);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = CycNum();
        b.add_row("chi:" + std::to_string(i), v);
    }
    for (std::uint64_t j = 1; j <= Lb; ++j) {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q - 1));
        v[cz] = sign_pm(j) * cyc_int(static_cast<std::int64_t>(q - 1));
        v[cc] = v[cd] = cyc_int(-1);
        v[czc] = v[czd] = -sign_pm(j);
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = CycNum();
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = -two_cos(q + 1, j * m);
        b.add_row("theta:" + std::to_string(j), v);
    }
    for (int s : {1, -1}) {
        CycNum tpl = half * (cyc_int(1) + cyc_int(s) * tau);
        CycNum tmn = half * (cyc_int(1) - cyc_int(s) * tau);
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>((q + 1) / 2));
        v[cz] = cyc_int(eps * static_cast<std::int64_t>((q + 1) / 2));
        v[cc] = tpl;
        v[cd] = tmn;
        v[czc] = cyc_int(eps) * tpl;
        v[czd] = cyc_int(eps) * tmn;
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = sign_pm(l);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = CycNum();
        b.add_row(s == 1 ? "xi:1" : "xi:2", v);
    }
    for (int s : {1, -1}) {
        CycNum tpl = half * (cyc_int(-1) + cyc_int(s) * tau);
        CycNum tmn = half * (cyc_int(-1) - cyc_int(s) * tau);
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>((q - 1) / 2));
        v[cz] = cyc_int(-eps * static_cast<std::int64_t>((q - 1) / 2));
        v[cc] = tpl;
        v[cd] = tmn;
        v[czc] = cyc_int(-eps) * tpl;
        v[czd] = cyc_int(-eps) * tmn;
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = CycNum();
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = sign_pm(m + 1);
        b.add_row(s == 1 ? "eta:1" : "eta:2", v);
    }
    b.finish();
    return b.t;
}

CharTable psl2_odd(std::uint64_t q) {
    auto [p, f] = prime_power_decompose(q);
    bool q1 = q % 4 == 1;
    Builder b;
    b.t.label = "psl2:" + std::to_string(q);
    b.t.group_order = q * (q * q - 1) / 2;
    std::uint64_t La = q1 ? (q - 1) / 4 : (q - 3) / 4;
    std::uint64_t Lb = q1 ? (q - 1) / 4 : (q + 1) / 4;
    std::uint64_t ta = (q - 1) / 2, tb = (q + 1) / 2; // torus orders
    std::uint64_t usz = (q * q - 1) / 2;
    std::size_t c1 = b.add_class("1", 1, 1);
    std::size_t cc = b.add_class("c", usz, static_cast<std::uint32_t>(p));
    std::size_t cd = b.add_class("d", usz, static_cast<std::uint32_t>(p));
    std::vector<std::size_t> ca(La + 1), cb(Lb + 1);
    for (std::uint64_t l = 1; l <= La; ++l) {
        std::uint64_t size = q * (q + 1);
        if (q1 && l == (q - 1) / 4) size /= 2;
        ca[l] = b.add_class("a:" + std::to_string(l), size,
                            static_cast<std::uint32_t>(ta / gcd_u64(l, ta)));
    }
    for (std::uint64_t m = 1; m <= Lb; ++m) {
        std::uint64_t size = q * (q - 1);
        if (!q1 && m == (q + 1) / 4) size /= 2;
        cb[m] = b.add_class("b:" + std::to_string(m), size,
                            static_cast<std::uint32_t>(tb / gcd_u64(m, tb)));
    }
    auto aidx = [&](std::uint64_t e) -> std::size_t {
        e %= ta;
        if (e == 0) return c1;
        return ca[std::min(e, ta - e)];
    };
    auto bidx = [&](std::uint64_t e) -> std::size_t {
        e %= tb;
        if (e == 0) return c1;
        return cb[std::min(e, tb - e)];
    };
    b.t.classes[c1].power_map = {static_cast<std::uint32_t>(c1)};
    auto fill_unip = [&](std::size_t ci, bool from_d) {
        auto& pm = b.t.classes[ci].power_map;
        for (std::uint32_t k = 0; k < p; ++k) {
            if (k == 0) { pm.push_back(static_cast<std::uint32_t>(c1)); continue; }
            bool sq = prime_field_square(k, p, f);
            bool is_c = from_d ? !sq : sq;
            pm.push_back(static_cast<std::uint32_t>(is_c ? cc : cd));
        }
    };
    fill_unip(cc, false);
    fill_unip(cd, true);
    for (std::uint64_t l = 1; l <= La; ++l) {
        auto& pm = b.t.classes[ca[l]].power_map;
        for (std::uint32_t k = 0; k < b.t.classes[ca[l]].element_order; ++k)
            pm.push_back(static_cast<std::uint32_t>(aidx(l * k)));
    }
    for (std::uint64_t m = 1; m <= Lb; ++m) {
        auto& pm = b.t.classes[cb[m]].power_map;
        for (std::uint32_t k = 0; k < b.t.classes[cb[m]].element_order; ++k)
            pm.push_back(static_cast<std::uint32_t>(bidx(m * k)));
    }

    CycNum tau = gauss_root(q);
    CycNum half = CycNum(Rational(1, 2));
    std::size_t r = b.t.classes.size();
    {
        std::vector<CycNum> v(r, cyc_int(1));
        b.add_row("1", v);
    }
    {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q));
        v[cc] = v[cd] = CycNum();
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = cyc_int(1);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = cyc_int(-1);
        b.add_row("st", v);
    }
    for (std::uint64_t i = 2; i <= (q - 3) / 2; i += 2) {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q + 1));
        v[cc] = v[cd] = cyc_int(1);
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = two_cos(q - 1, i * l);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = CycNum();
        b.add_row("chi:" + std::to_string(i), v);
    }
    for (std::uint64_t j = 2; j <= (q - 1) / 2; j += 2) {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q - 1));
        v[cc] = v[cd] = cyc_int(-1);
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = CycNum();
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = -two_cos(q + 1, j * m);
        b.add_row("theta:" + std::to_string(j), v);
    }
    if (q1) {
        for (int s : {1, -1}) {
            std::vector<CycNum> v(r);
            v[c1] = cyc_int(static_cast<std::int64_t>((q + 1) / 2));
            v[cc] = half * (cyc_int(1) + cyc_int(s) * tau);
            v[cd] = half * (cyc_int(1) - cyc_int(s) * tau);
            for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = sign_pm(l);
            for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = CycNum();
            b.add_row(s == 1 ? "xi:1" : "xi:2", v);
        }
    } else {
        for (int s : {1, -1}) {
            std::vector<CycNum> v(r);
            v[c1] = cyc_int(static_cast<std::int64_t>((q - 1) / 2));
            v[cc] = half * (cyc_int(-1) + cyc_int(s) * tau);
            v[cd] = half * (cyc_int(-1) - cyc_int(s) * tau);
            for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = CycNum();
            for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = sign_pm(m + 1);
            b.add_row(s == 1 ? "eta:1" : "eta:2", v);
        }
    }
    b.finish();
    return b.t;
}

CharTable pgl2_odd(std::uint64_t q) {
    auto [p, f] = prime_power_decompose(q);
    (void)f;
    Builder b;
    b.t.label = "pgl2:" + std::to_string(q);
    b.t.group_order = q * (q * q - 1);
    std::uint64_t La = (q - 3) / 2, Lb = (q - 1) / 2;
    std::size_t c1 = b.add_class("1", 1, 1);
    std::size_t cu = b.add_class("u", q * q - 1, static_cast<std::uint32_t>(p));
    std::vector<std::size_t> ca(La + 1), cb(Lb + 1);
    for (std::uint64_t l = 1; l <= La; ++l)
        ca[l] = b.add_class("a:" + std::to_string(l), q * (q + 1),
                            static_cast<std::uint32_t>((q - 1) / gcd_u64(l, q - 1)));
    std::size_t ct = b.add_class("t", q * (q + 1) / 2, 2);
    for (std::uint64_t m = 1; m <= Lb; ++m)
        cb[m] = b.add_class("b:" + std::to_string(m), q * (q - 1),
                            static_cast<std::uint32_t>((q + 1) / gcd_u64(m, q + 1)));
    std::size_t ct2 = b.add_class("t'", q * (q - 1) / 2, 2);
    auto aidx = [&](std::uint64_t e) -> std::size_t {
        e %= (q - 1);
        if (e == 0) return c1;
        if (e == (q - 1) / 2) return ct;
        return ca[std::min(e, q - 1 - e)];
    };
    auto bidx = [&](std::uint64_t e) -> std::size_t {
        e %= (q + 1);
        if (e == 0) return c1;
        if (e == (q + 1) / 2) return ct2;
        return cb[std::min(e, q + 1 - e)];
    };
    b.t.classes[c1].power_map = {static_cast<std::uint32_t>(c1)};
    {
        auto& pm = b.t.classes[cu].power_map;
        for (std::uint32_t k = 0; k < p; ++k)
            pm.push_back(static_cast<std::uint32_t>(k == 0 ? c1 : cu));
    }
    b.t.classes[ct].power_map = {static_cast<std::uint32_t>(c1), static_cast<std::uint32_t>(ct)};
    b.t.classes[ct2].power_map = {static_cast<std::uint32_t>(c1), static_cast<std::uint32_t>(ct2)};
    for (std::uint64_t l = 1; l <= La; ++l) {
        auto& pm = b.t.classes[ca[l]].power_map;
        for (std::uint32_t k = 0; k < b.t.classes[ca[l]].element_order; ++k)
            pm.push_back(static_cast<std::uint32_t>(aidx(l * k)));
    }
    for (std::uint64_t m = 1; m <= Lb; ++m) {
        auto& pm = b.t.classes[cb[m]].power_map;
        for (std::uint32_t k = 0; k < b.t.classes[cb[m]].element_order; ++k)
            pm.push_back(static_cast<std::uint32_t>(bidx(m * k)));
    }
    std::size_t r = b.t.classes.size();
    std::int64_t sa = ((q - 1) / 2) % 2 == 0 ? 1 : -1; // lambda0 at t
    std::int64_t sb = ((q + 1) / 2) % 2 == 0 ? 1 : -1; // lambda0 at t'
    {
        std::vector<CycNum> v(r, cyc_int(1));
        b.add_row("1", v);
    }
    {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(1);
        v[cu] = cyc_int(1);
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = sign_pm(l);
        v[ct] = cyc_int(sa);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = sign_pm(m);
        v[ct2] = cyc_int(sb);
        b.add_row("lambda", v);
    }
    {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q));
        v[cu] = CycNum();
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = cyc_int(1);
        v[ct] = cyc_int(1);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = cyc_int(-1);
        v[ct2] = cyc_int(-1);
        b.add_row("st", v);
    }
    {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q));
        v[cu] = CycNum();
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = sign_pm(l);
        v[ct] = cyc_int(sa);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = -sign_pm(m);
        v[ct2] = cyc_int(-sb);
        b.add_row("lambda_st", v);
    }
    for (std::uint64_t i = 1; i <= La; ++i) {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q + 1));
        v[cu] = cyc_int(1);
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = two_cos(q - 1, i * l);
        v[ct] = cyc_int(2) * sign_pm(i);
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = CycNum();
        v[ct2] = CycNum();
        b.add_row("chi:" + std::to_string(i), v);
    }
    for (std::uint64_t j = 1; j <= Lb; ++j) {
        std::vector<CycNum> v(r);
        v[c1] = cyc_int(static_cast<std::int64_t>(q - 1));
        v[cu] = cyc_int(-1);
        for (std::uint64_t l = 1; l <= La; ++l) v[ca[l]] = CycNum();
        v[ct] = CycNum();
        for (std::uint64_t m = 1; m <= Lb; ++m) v[cb[m]] = -two_cos(q + 1, j * m);
        v[ct2] = cyc_int(-2) * sign_pm(j);
        b.add_row("theta:" + std::to_string(j), v);
    }
    b.finish();
    return b.t;
}

} // namespace

CharTable sl2_table(std::uint64_t q) {
    check_q(q);
    return q % 2 == 0 ? sl2_even(q) : sl2_odd(q);
}

CharTable psl2_table(std::uint64_t q) {
    check_q(q);
    if (q % 2 == 0) {
        CharTable t = sl2_even(q);
        t.label = "psl2:" + std::to_string(q);
        return t;
    }
    return psl2_odd(q);
}

CharTable pgl2_table(std::uint64_t q) {
    check_q(q);
    if (q % 2 == 0) {
        CharTable t = sl2_even(q);
        t.label = "pgl2:" + std::to_string(q);
        return t;
    }
    return pgl2_odd(q);
}

std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
vanishing_profile(const CharTable& t) {
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> out(t.char_count());
    for (std::size_t i = 0; i < t.char_count(); ++i)
        for (std::uint32_t k = 0; k < t.class_count(); ++k)
            if (t.rows[i][k].is_zero())
                out[i].push_back({k, t.classes[k].element_order});
    return out;
}

std::uint64_t predicted_vanishing_count(GroupFamily g, CharFamily c, std::uint64_t q) {
    check_q(q);
    bool even = q % 2 == 0;
    bool q1 = q % 4 == 1;
    auto bad = [&]() -> std::uint64_t {
        throw std::invalid_argument("no closed-form count for this family combination");
    };
    switch (g) {
    case GroupFamily::SL2Odd:
        if (even) return bad();
        switch (c) {
        case CharFamily::Chi: return (q - 1) / 2;
        case CharFamily::Theta: return (q - 3) / 2;
        case CharFamily::Xi: return q1 ? bad() : (q - 1) / 2;
        case CharFamily::Eta: return q1 ? (q - 3) / 2 : bad();
        default: return bad();
        }
    case GroupFamily::PSL2Odd:
        if (even) return bad();
        switch (c) {
        case CharFamily::Steinberg: return 2;
        case CharFamily::Chi: return q1 ? (q - 1) / 4 : (q - 3) / 4;
        case CharFamily::Theta: return q1 ? (q - 1) / 4 : (q - 3) / 4;
        case CharFamily::Xi: return q1 ? (q - 1) / 4 : bad();
        case CharFamily::Eta: return q1 ? bad() : (q - 3) / 4;
        }
        return bad();
    case GroupFamily::SL2Even:
        if (!even) return bad();
        switch (c) {
        case CharFamily::Steinberg: return 1;
        case CharFamily::Chi: return q / 2;
        case CharFamily::Theta: return (q - 2) / 2; // exact; stated as a lower bound
        default: return bad();
        }
    }
    return bad();
}

std::uint64_t designated_zero_count(const CharTable& t, std::size_t i) {
    if (t.row_labels.empty() || t.class_labels.empty())
        throw std::invalid_argument("designated counts need a labeled analytic table");
    const std::string& rl = t.row_labels[i];
    bool is_psl = t.label.rfind("psl2:", 0) == 0;
    char side = 0; // 'a' or 'b' or 's' (steinberg: the unipotent classes)
    if (rl.rfind("chi", 0) == 0 || rl.rfind("xi", 0) == 0) side = 'b';
    else if (rl.rfind("theta", 0) == 0 || rl.rfind("eta", 0) == 0) side = 'a';
    else if (rl == "st") side = 's';
    else throw std::invalid_argument("row has no designated class family: " + rl);

    std::uint64_t count = 0;
    for (std::uint32_t k = 0; k < t.class_count(); ++k) {
        const std::string& cl = t.class_labels[k];
        bool in_family = false;
        if (side == 's') in_family = cl == "c" || cl == "d";
        else in_family = cl.rfind(std::string(1, side) + ":", 0) == 0;
        if (!in_family) continue;
        // the chi-family closed form for psl2 with q = 3 mod 4 counts only the
        // full-size nonsplit classes, not the half-size involution class
        if (is_psl && side == 'b' && rl.rfind("chi", 0) == 0) {
            std::uint64_t full = 0;
            for (std::uint32_t k2 = 0; k2 < t.class_count(); ++k2)
                if (t.class_labels[k2].rfind("b:", 0) == 0)
                    full = std::max<std::uint64_t>(full, t.classes[k2].size);
            if (t.classes[k].size != full) continue;
        }
        if (t.rows[i][k].is_zero()) ++count;
    }
    return count;
}

std::uint64_t out_order(std::uint64_t q) {
    auto [p, f] = prime_power_decompose(q);
    if (p == 0) throw std::invalid_argument("out_order needs a prime power");
    return gcd_u64(2, q - 1) * f;
}

bool lemma45_check(std::uint64_t q) {
    auto [p, f] = prime_power_decompose(q);
    if (p == 0 || p == 2) throw std::invalid_argument("inequality needs an odd prime power");
    if (q <= 32) throw std::invalid_argument("inequality is stated for q > 32");
    return 4 * (2 * static_cast<std::uint64_t>(f) + 1) < q - 3;
}

} // namespace chartab
