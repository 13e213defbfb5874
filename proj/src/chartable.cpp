#include "chartab/chartable.hpp"

#include "chartab/numtheory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace chartab {

std::size_t CharTable::identity_index() const {
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (classes[k].element_order == 1) return k;
    throw TableError("table has no identity class");
}

std::uint64_t CharTable::degree(std::size_t i) const {
    const CycNum& v = rows.at(i).at(identity_index());
    if (!v.is_integer() || sgn(v.rational_value()) <= 0)
        throw TableError("character degree is not a positive integer: " + v.str());
    return v.integer_value().get_ui();
}

std::uint32_t CharTable::inverse_class(std::uint32_t k) const {
    const Cls& c = classes.at(k);
    return c.power_map.at((c.element_order - 1) % c.element_order);
}

CycNum cyc_sum(const std::vector<CycNum>& terms) {
    std::map<std::uint64_t, CycNum> by_order;
    for (const CycNum& t : terms) {
        auto it = by_order.find(t.order());
        if (it == by_order.end()) by_order.emplace(t.order(), t);
        else it->second = it->second + t;
    }
    CycNum acc;
    for (auto& [n, v] : by_order) acc = acc + v;
    return acc;
}

void CharTable::validate() const {
    std::size_t r = classes.size();
    if (rows.size() != r)
        throw TableError(label + ": character count " + std::to_string(rows.size()) +
                         " differs from class count " + std::to_string(r));
    std::uint64_t total = 0;
    for (const auto& c : classes) {
        if (c.size == 0 || group_order % c.size != 0)
            throw TableError(label + ": class size " + std::to_string(c.size) +
                             " does not divide the group order");
        if (c.element_order == 0 || group_order % c.element_order != 0)
            throw TableError(label + ": element order does not divide the group order");
        if (c.power_map.size() != c.element_order)
            throw TableError(label + ": power map length mismatch");
        total += c.size;
    }
    if (total != group_order)
        throw TableError(label + ": class equation fails, sizes sum to " +
                         std::to_string(total) + " not " + std::to_string(group_order));

    std::size_t id = identity_index();
    // first character must be trivial
    for (std::size_t k = 0; k < r; ++k)
        if (rows[0][k] != CycNum(1))
            throw TableError(label + ": first character is not trivial at class " +
                             std::to_string(k));

    mpz_class degsum = 0;
    for (std::size_t i = 0; i < r; ++i) {
        std::uint64_t d = degree(i);
        degsum += mpz_class(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    }
    if (degsum != mpz_class(static_cast<unsigned long>(group_order)))
        throw TableError(label + ": sum of squared degrees is " + degsum.get_str() +
                         ", expected " + std::to_string(group_order));

    // row orthogonality, exactly
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            std::vector<CycNum> terms;
            terms.reserve(r);
            for (std::size_t k = 0; k < r; ++k) {
                CycNum t = rows[i][k] * rows[j][k].conj();
                terms.push_back(CycNum(Rational(static_cast<unsigned long>(classes[k].size))) * t);
            }
            CycNum s = cyc_sum(terms);
            CycNum expect = i == j ? CycNum(Rational(static_cast<unsigned long>(group_order)))
                                   : CycNum();
            if (s != expect)
                throw TableError(label + ": row orthogonality fails for characters " +
                                 std::to_string(i) + "," + std::to_string(j) + ": got " +
                                 s.str());
        }
    }
    // column orthogonality, exactly
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t l = k; l < r; ++l) {
            std::vector<CycNum> terms;
            terms.reserve(r);
            for (std::size_t i = 0; i < r; ++i)
                terms.push_back(rows[i][k] * rows[i][l].conj());
            CycNum s = cyc_sum(terms);
            CycNum expect = k == l
                ? CycNum(Rational(static_cast<unsigned long>(group_order / classes[k].size)))
                : CycNum();
            if (s != expect)
                throw TableError(label + ": column orthogonality fails for classes " +
                                 std::to_string(k) + "," + std::to_string(l) + ": got " +
                                 s.str());
        }
    }
    (void)id;
}

void assign_class_names(CharTable& t) {
    std::map<std::uint32_t, char> letter;
    for (auto& c : t.classes) {
        char& l = letter.try_emplace(c.element_order, 'a').first->second;
        c.name = std::to_string(c.element_order) + l;
        ++l;
    }
}

void CharTable::finalize() {
    std::size_t id = identity_index();
    std::vector<std::size_t> idx(rows.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto is_trivial = [&](std::size_t i) {
        for (const auto& v : rows[i])
            if (v != CycNum(1)) return false;
        return true;
    };
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        const CycNum& da = rows[a][id];
        const CycNum& db = rows[b][id];
        int c = CycNum::cmp(da, db);
        if (c != 0) return c < 0;
        for (std::size_t k = 0; k < rows[a].size(); ++k) {
            int vc = CycNum::cmp(rows[a][k], rows[b][k]);
            if (vc != 0) return vc < 0;
        }
        return false;
    });
    std::vector<std::vector<CycNum>> nr;
    std::vector<std::string> nl;
    for (std::size_t i : idx) {
        nr.push_back(std::move(rows[i]));
        if (!row_labels.empty()) nl.push_back(row_labels[i]);
    }
    rows = std::move(nr);
    row_labels = std::move(nl);
    if (classes[0].name.empty()) assign_class_names(*this);
}

namespace {

// refinement-based canonical labeling of (classes x characters)
struct Canon {
    const CharTable& t;
    std::size_t r;
    std::vector<std::string> val; // val[i*r+k]: canonical value strings
    std::vector<int> cls_block;
    std::vector<int> chr_block;

    explicit Canon(const CharTable& tab) : t(tab), r(tab.class_count()) {
        val.resize(r * r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k) val[i * r + k] = t.rows[i][k].str();
    }

    template <class Key>
    static void partition_by(std::vector<int>& block, const std::vector<Key>& keys) {
        std::vector<std::size_t> idx(keys.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (block[a] != block[b]) return block[a] < block[b];
            return keys[a] < keys[b];
        });
        std::vector<int> nb(keys.size());
        int cur = 0;
        for (std::size_t h = 0; h < idx.size(); ++h) {
            if (h > 0 && !(block[idx[h]] == block[idx[h - 1]] && keys[idx[h]] == keys[idx[h - 1]]))
                ++cur;
            nb[idx[h]] = cur;
        }
        block = std::move(nb);
    }

    void refine() {
        cls_block.assign(r, 0);
        chr_block.assign(r, 0);
        {
            std::vector<std::pair<std::uint32_t, std::uint64_t>> ck(r);
            for (std::size_t k = 0; k < r; ++k)
                ck[k] = {t.classes[k].element_order, t.classes[k].size};
            partition_by(cls_block, ck);
            std::vector<std::string> rk(r);
            for (std::size_t i = 0; i < r; ++i) rk[i] = t.rows[i][t.identity_index()].str();
            partition_by(chr_block, rk);
        }
        for (int round = 0; round < 64; ++round) {
            int before = *std::max_element(cls_block.begin(), cls_block.end()) +
                         *std::max_element(chr_block.begin(), chr_block.end());
            // refine classes by per-character-block value multisets and
            // power-map image blocks
            std::vector<std::string> ck(r);
            for (std::size_t k = 0; k < r; ++k) {
                std::vector<std::pair<int, std::string>> sig;
                for (std::size_t i = 0; i < r; ++i)
                    sig.push_back({chr_block[i], val[i * r + k]});
                std::sort(sig.begin(), sig.end());
                std::ostringstream os;
                for (auto& s : sig) os << s.first << ":" << s.second << "|";
                os << "pm";
                for (auto pk : t.classes[k].power_map) os << "," << cls_block[pk];
                ck[k] = os.str();
            }
            partition_by(cls_block, ck);
            // refine characters by per-class-block value multisets
            std::vector<std::string> rk(r);
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<std::pair<int, std::string>> sig;
                for (std::size_t k = 0; k < r; ++k)
                    sig.push_back({cls_block[k], val[i * r + k]});
                std::sort(sig.begin(), sig.end());
                std::ostringstream os;
                for (auto& s : sig) os << s.first << ":" << s.second << "|";
                rk[i] = os.str();
            }
            partition_by(chr_block, rk);
            int after = *std::max_element(cls_block.begin(), cls_block.end()) +
                        *std::max_element(chr_block.begin(), chr_block.end());
            if (after == before) break;
        }
    }

    std::string encode(const std::vector<std::size_t>& cls_order) const {
        std::vector<std::size_t> pos(r);
        for (std::size_t p = 0; p < r; ++p) pos[cls_order[p]] = p;
        // rows: trivial first, rest sorted by (degree key, value vector)
        std::vector<std::size_t> rows_idx;
        for (std::size_t i = 0; i < r; ++i) rows_idx.push_back(i);
        std::size_t id = t.identity_index();
        auto trivial = [&](std::size_t i) {
            for (std::size_t k = 0; k < r; ++k)
                if (t.rows[i][k] != CycNum(1)) return false;
            return true;
        };
        std::sort(rows_idx.begin(), rows_idx.end(), [&](std::size_t a, std::size_t b) {
            bool ta = trivial(a), tb = trivial(b);
            if (ta != tb) return ta;
            int c = CycNum::cmp(t.rows[a][id], t.rows[b][id]);
            if (c != 0) return c < 0;
            for (std::size_t p = 0; p < r; ++p) {
                int vc = CycNum::cmp(t.rows[a][cls_order[p]], t.rows[b][cls_order[p]]);
                if (vc != 0) return vc < 0;
            }
            return false;
        });
        std::ostringstream os;
        os << t.group_order << ";";
        for (std::size_t p = 0; p < r; ++p) {
            const auto& c = t.classes[cls_order[p]];
            os << "o" << c.element_order << "s" << c.size << "p";
            for (auto pk : c.power_map) os << "," << pos[pk];
            os << ";";
        }
        for (std::size_t i : rows_idx) {
            for (std::size_t p = 0; p < r; ++p) os << val[i * r + cls_order[p]] << ";";
        }
        return os.str();
    }
};

} // namespace

std::string CharTable::canonical_key() const {
    Canon c(*this);
    c.refine();
    std::size_t r = class_count();
    // group classes by refined block, keep block order by block id
    std::map<int, std::vector<std::size_t>> blocks;
    for (std::size_t k = 0; k < r; ++k) blocks[c.cls_block[k]].push_back(k);
    // enumerate within-block permutations, bounded
    std::uint64_t combos = 1;
    for (auto& [b, mem] : blocks) {
        std::uint64_t f = 1;
        for (std::size_t i = 2; i <= mem.size(); ++i) f *= i;
        combos *= f;
        if (combos > 100000)
            throw TableError(label + ": canonical form is too ambiguous (" +
                             std::to_string(combos) + " candidate orderings)");
    }
    std::vector<std::vector<std::size_t>> blockvec;
    for (auto& [b, mem] : blocks) blockvec.push_back(mem);
    std::string best;
    std::vector<std::size_t> order;
    std::vector<std::vector<std::size_t>> perms(blockvec.size());
    for (auto& bv : blockvec) std::sort(bv.begin(), bv.end());
    // iterate the cartesian product of block permutations
    std::vector<std::vector<std::size_t>> cur = blockvec;
    std::function<void(std::size_t)> rec = [&](std::size_t bi) {
        if (bi == blockvec.size()) {
            order.clear();
            for (auto& bv : cur)
                for (auto k : bv) order.push_back(k);
            std::string enc = c.encode(order);
            if (best.empty() || enc < best) best = enc;
            return;
        }
        std::vector<std::size_t> p = blockvec[bi];
        std::sort(p.begin(), p.end());
        do {
            cur[bi] = p;
            rec(bi + 1);
        } while (std::next_permutation(p.begin(), p.end()));
    };
    rec(0);
    return best;
}

bool nonlinear_rows_have_zero(const CharTable& t) {
    std::size_t id = t.identity_index();
    for (std::size_t i = 0; i < t.char_count(); ++i) {
        if (t.degree(i) == 1) continue;
        bool found = false;
        for (std::size_t k = 0; k < t.class_count(); ++k)
            if (t.rows[i][k].is_zero()) { found = true; break; }
        if (!found) return false;
    }
    (void)id;
    return true;
}

bool nonlinear_rows_have_prime_power_order_zero(const CharTable& t) {
    for (std::size_t i = 0; i < t.char_count(); ++i) {
        if (t.degree(i) == 1) continue;
        bool found = false;
        for (std::size_t k = 0; k < t.class_count(); ++k) {
            if (!t.rows[i][k].is_zero()) continue;
            auto [p, f] = prime_power_decompose(t.classes[k].element_order);
            if (p != 0) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace chartab
