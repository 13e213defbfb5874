#include "chartab/dixon.hpp"

#include "chartab/families.hpp"
#include "chartab/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace chartab {

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

// Row-reduces the basis matrix in place (rows = vectors, mod l) and records
// pivot columns; zero rows are dropped.
void rref(Mat& m, Vec& pivots, std::uint64_t l) {
    pivots.clear();
    std::size_t row = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        std::uint64_t inv = inv_mod(m[row][col], l);
        for (std::size_t j = col; j < cols; ++j) m[row][j] = mul_mod(m[row][j], inv, l);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            std::uint64_t f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t t = mul_mod(f, m[row][j], l);
                m[i][j] = (m[i][j] + l - t) % l;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
}

// characteristic polynomial mod l by Faddeev-LeVerrier (l prime > dim)
Vec char_poly(const Mat& a, std::uint64_t l) {
    std::size_t n = a.size();
    Mat m(n, Vec(n, 0));
    Vec coef(n + 1, 0);
    coef[n] = 1; // monic, coefficient of lambda^n
    Mat acc(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1;
    std::uint64_t c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // acc = a * (acc + c_{n-k+1} I); with the recurrence M_k = A M_{k-1} + c_{n-k+1} A
        Mat next(n, Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t s = 0;
                for (std::size_t t = 0; t < n; ++t)
                    s = (s + mul_mod(a[i][t], acc[t][j], l)) % l;
                next[i][j] = s;
            }
        std::uint64_t tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr = (tr + next[i][i]) % l;
        // c_{n-k} = -tr/k
        std::uint64_t ck = mul_mod(tr, inv_mod(k % l, l), l);
        ck = (l - ck) % l;
        coef[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) next[i][i] = (next[i][i] + ck) % l;
        acc = std::move(next);
        (void)c;
    }
    return coef;
}

Vec kernel_vector_space(const Mat& m, std::uint64_t l, Mat& out_basis) {
    Mat w = m;
    Vec piv;
    rref(w, piv, l);
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<bool> ispiv(cols, false);
    for (auto p : piv) ispiv[p] = true;
    out_basis.clear();
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (ispiv[freec]) continue;
        Vec v(cols, 0);
        v[freec] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = (l - w[r][freec]) % l;
        out_basis.push_back(std::move(v));
    }
    return piv;
}

struct ClassData {
    std::vector<std::vector<std::uint32_t>> members;
    std::vector<std::uint32_t> rep_index;
};

ClassData class_members(const FiniteGroup& G) {
    ClassData d;
    const auto& cls = G.classes();
    const auto& cof = G.class_of();
    d.members.resize(cls.size());
    d.rep_index.resize(cls.size());
    for (std::uint32_t c = 0; c < cls.size(); ++c) {
        d.members[c].reserve(cls[c].size);
        d.rep_index[c] = cls[c].rep;
    }
    for (std::uint32_t e = 0; e < G.order(); ++e) d.members[cof[e]].push_back(e);
    return d;
}

// B_i[j][k] = a_{ijk} mod l
Mat class_matrix(const FiniteGroup& G, const ClassData& cd, std::uint32_t i, std::uint64_t l) {
    std::size_t r = G.classes().size();
    Mat b(r, Vec(r, 0));
    const auto& cof = G.class_of();
    for (std::uint32_t k = 0; k < r; ++k) {
        const Element z = G.element(cd.rep_index[k]);
        for (std::uint32_t xe : cd.members[i]) {
            Element y = G.element(xe).inverse() * z;
            std::uint32_t j = cof[G.index_of(y)];
            b[j][k] = (b[j][k] + 1) % l;
        }
    }
    return b;
}

} // namespace

std::vector<std::uint64_t> class_mult_coeffs(const FiniteGroup& G, std::uint32_t i,
                                             std::uint32_t j) {
    const auto& cls = G.classes();
    std::vector<std::uint64_t> out(cls.size(), 0);
    ClassData cd = class_members(G);
    const auto& cof = G.class_of();
    for (std::uint32_t k = 0; k < cls.size(); ++k) {
        const Element z = G.element(cd.rep_index[k]);
        std::uint64_t count = 0;
        for (std::uint32_t xe : cd.members[i]) {
            Element y = G.element(xe).inverse() * z;
            if (cof[G.index_of(y)] == j) ++count;
        }
        out[k] = count;
    }
    return out;
}

std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t n) {
    long double bound = 2.0L * std::sqrt(static_cast<long double>(n));
    for (std::uint64_t l = e + 1;; l += e) {
        if (static_cast<long double>(l) > bound && is_prime(l)) return l;
    }
}

CharTable character_table(const FiniteGroup& G) {
    const auto& cls = G.classes();
    std::size_t r = cls.size();
    std::uint64_t n = G.order();
    std::uint64_t e = G.exponent();
    std::uint64_t l = dixon_prime(e, n);
    std::uint64_t z = pow_mod(primitive_root_mod(l), (l - 1) / e, l);

    ClassData cd = class_members(G);

    // split the common eigenspaces of the class matrices, ascending index
    std::vector<Mat> spaces;
    {
        Mat full(r, Vec(r, 0));
        for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
        spaces.push_back(std::move(full));
    }
    for (std::uint32_t mi = 0; mi < r; ++mi) {
        bool done = true;
        for (const auto& s : spaces)
            if (s.size() > 1) { done = false; break; }
        if (done) break;
        if (cls[mi].size == 1 && cls[mi].element_order == 1) continue; // identity matrix
        Mat b = class_matrix(G, cd, mi, l);
        std::vector<Mat> next;
        for (auto& w : spaces) {
            if (w.size() == 1) {
                next.push_back(std::move(w));
                continue;
            }
            // W must be in RREF with known pivots
            Vec piv;
            rref(w, piv, l);
            std::size_t d = w.size();
            // action matrix: B * w_s = sum_t act[t][s] w_t
            Mat act(d, Vec(d, 0));
            for (std::size_t s = 0; s < d; ++s) {
                Vec img(r, 0);
                for (std::size_t j = 0; j < r; ++j) {
                    std::uint64_t acc = 0;
                    for (std::size_t k = 0; k < r; ++k)
                        if (b[j][k] && w[s][k]) acc = (acc + mul_mod(b[j][k], w[s][k], l)) % l;
                    img[j] = acc;
                }
                for (std::size_t t = 0; t < d; ++t) act[t][s] = img[piv[t]];
                // consistency: img must equal sum act[t][s] * w_t
                for (std::size_t j = 0; j < r; ++j) {
                    std::uint64_t acc = 0;
                    for (std::size_t t = 0; t < d; ++t)
                        if (act[t][s] && w[t][j]) acc = (acc + mul_mod(act[t][s], w[t][j], l)) % l;
                    if (acc != img[j])
                        throw TableError(G.label() + ": class-matrix action leaves the subspace");
                }
            }
            Vec poly = char_poly(act, l);
            // eigenvalues: scan the roots of the characteristic polynomial
            std::vector<std::uint64_t> eig;
            for (std::uint64_t lam = 0; lam < l; ++lam) {
                std::uint64_t v = 0;
                for (std::size_t c = poly.size(); c-- > 0;) v = (mul_mod(v, lam, l) + poly[c]) % l;
                if (v == 0) eig.push_back(lam);
            }
            for (std::uint64_t lam : eig) {
                Mat shifted = act;
                for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + l - lam) % l;
                Mat kb;
                kernel_vector_space(shifted, l, kb);
                if (kb.empty()) continue;
                Mat sub;
                for (const Vec& coord : kb) {
                    Vec v(r, 0);
                    for (std::size_t t = 0; t < d; ++t)
                        if (coord[t])
                            for (std::size_t k = 0; k < r; ++k)
                                v[k] = (v[k] + mul_mod(coord[t], w[t][k], l)) % l;
                    sub.push_back(std::move(v));
                }
                next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r)
        throw TableError(G.label() + ": eigenspace splitting yielded " +
                         std::to_string(spaces.size()) + " spaces for " + std::to_string(r) +
                         " classes");

    // identity class has canonical index 0
    if (cls[0].element_order != 1)
        throw TableError(G.label() + ": identity class is not first");

    std::vector<std::uint64_t> divs = divisors(n);

    CharTable t;
    t.label = G.label();
    t.group_order = n;
    t.classes.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
        t.classes[k].size = cls[k].size;
        t.classes[k].element_order = cls[k].element_order;
        t.classes[k].power_map = cls[k].power_map;
    }

    for (auto& sp : spaces) {
        Vec piv;
        rref(sp, piv, l);
        Vec& v = sp[0];
        if (v[0] == 0) throw TableError(G.label() + ": eigenvector vanishes at the identity");
        std::uint64_t v0inv = inv_mod(v[0], l);
        Vec omega(r);
        for (std::size_t k = 0; k < r; ++k) omega[k] = mul_mod(v[k], v0inv, l);
        // degree from the norm sum: sum_k omega_k * omega_{k*} / |C_k| = n / d^2
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < r; ++k) {
            std::uint32_t kinv = t.inverse_class(static_cast<std::uint32_t>(k));
            std::uint64_t term = mul_mod(omega[k], omega[kinv], l);
            term = mul_mod(term, inv_mod(cls[k].size % l, l), l);
            s = (s + term) % l;
        }
        if (s == 0) throw TableError(G.label() + ": zero norm sum in degree recovery");
        std::uint64_t d2 = mul_mod(n % l, inv_mod(s, l), l);
        std::uint64_t deg = 0;
        for (std::uint64_t dv : divs) {
            if (dv * dv > n) break;
            if (mul_mod(dv % l, dv % l, l) == d2) { deg = dv; break; }
        }
        if (deg == 0)
            throw TableError(G.label() + ": no divisor degree matches the modular square");
        // modular character values
        Vec chi(r);
        for (std::size_t k = 0; k < r; ++k)
            chi[k] = mul_mod(mul_mod(deg % l, omega[k], l), inv_mod(cls[k].size % l, l), l);
        // exact lift: chi(g) = sum_t m_t zeta_o^t with multiplicities from the
        // inverse transform over the power-map classes
        std::vector<CycNum> row(r);
        for (std::size_t k = 0; k < r; ++k) {
            std::uint32_t o = cls[k].element_order;
            std::uint64_t y = pow_mod(z, e / o, l);
            std::uint64_t yinv = inv_mod(y, l);
            std::uint64_t oinv = inv_mod(o % l, l);
            std::vector<std::pair<std::int64_t, Rational>> terms;
            for (std::uint32_t tt = 0; tt < o; ++tt) {
                std::uint64_t acc = 0;
                for (std::uint32_t u = 0; u < o; ++u) {
                    std::uint64_t w1 = pow_mod(yinv, static_cast<std::uint64_t>(u) * tt % (l - 1), l);
                    acc = (acc + mul_mod(chi[cls[k].power_map[u]], w1, l)) % l;
                }
                std::uint64_t m = mul_mod(acc, oinv, l);
                if (m == 0) continue;
                if (m > deg)
                    throw TableError(G.label() + ": lifted multiplicity " + std::to_string(m) +
                                     " exceeds the degree " + std::to_string(deg));
                terms.push_back({tt, Rational(static_cast<unsigned long>(m))});
            }
            row[k] = CycNum::make(o, terms);
        }
        t.rows.push_back(std::move(row));
    }

    t.finalize();
    t.validate();
    return t;
}

const CharTable& oracle_table(const std::string& spec) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<CharTable>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(spec);
        if (it != cache.end()) return *it->second;
    }
    auto G = construct_family(spec);
    auto table = std::make_unique<CharTable>(character_table(*G));
    std::lock_guard<std::mutex> lk(mu);
    auto [it, fresh] = cache.emplace(spec, std::move(table));
    return *it->second;
}

} // namespace chartab
