#include "chartab/sym.hpp"

#include "chartab/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chartab {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<unsigned> out;
    for (unsigned col = 0; !parts_.empty() && col < parts_[0]; ++col) {
        unsigned cnt = 0;
        for (unsigned p : parts_)
            if (p > col) ++cnt;
        out.push_back(cnt);
    }
    return Partition(out);
}

bool Partition::is_self_conjugate() const { return *this == conjugate(); }

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // descending lexicographic enumeration
    auto rec = [&](auto&& self, unsigned left, unsigned maxpart) -> void {
        if (left == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (unsigned p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

namespace {

using Key = std::pair<std::vector<unsigned>, std::vector<unsigned>>;

std::int64_t mn_rec(const std::vector<unsigned>& lam, const std::vector<unsigned>& mu,
                    std::map<Key, std::int64_t>& memo) {
    if (lam.empty()) return 1;
    auto it = memo.find({lam, mu});
    if (it != memo.end()) return it->second;
    // remove a rim hook of length mu[0] from lam in every possible way
    unsigned h = mu[0];
    std::vector<unsigned> rest(mu.begin() + 1, mu.end());
    std::int64_t total = 0;
    // beta-numbers: first-column hook lengths b_i = lam_i + (k - 1 - i)
    std::size_t k = lam.size();
    std::vector<long> beta(k);
    for (std::size_t i = 0; i < k; ++i) beta[i] = static_cast<long>(lam[i]) + (k - 1 - i);
    for (std::size_t i = 0; i < k; ++i) {
        long nb = beta[i] - static_cast<long>(h);
        if (nb < 0) continue;
        bool clash = false;
        for (std::size_t j = 0; j < k; ++j)
            if (static_cast<long>(beta[j]) == nb) { clash = true; break; }
        if (clash) continue;
        // sign: number of beta values strictly between nb and beta[i]
        unsigned crossed = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (beta[j] > nb && beta[j] < beta[i]) ++crossed;
        std::vector<long> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<unsigned> nlam;
        for (std::size_t j = 0; j < k; ++j) {
            long v = nbeta[j] - static_cast<long>(k - 1 - j);
            if (v > 0) nlam.push_back(static_cast<unsigned>(v));
            else if (v < 0) throw std::logic_error("beta set corrupted");
        }
        std::int64_t sgn = crossed % 2 == 0 ? 1 : -1;
        total += sgn * mn_rec(nlam, rest, memo);
    }
    memo.emplace(Key{lam, mu}, total);
    return total;
}

std::mutex g_mn_mutex;
std::map<Key, std::int64_t> g_mn_memo;

} // namespace

std::int64_t mn_value(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("partition sizes differ: " + lambda.str() + " vs " + mu.str());
    std::lock_guard<std::mutex> lk(g_mn_mutex);
    return mn_rec(lambda.parts(), mu.parts(), g_mn_memo);
}

std::uint64_t sym_degree(const Partition& lambda) {
    // hook length formula: n! / prod(hooks)
    const auto& lam = lambda.parts();
    if (lam.empty()) return 1;
    if (lambda.n() > 33) throw std::invalid_argument("hook formula capped at n = 33");
    Partition conj = lambda.conjugate();
    const auto& cj = conj.parts();
    // degree = n! / prod hooks; compute with exact 128-bit intermediates
    unsigned __int128 num = 1;
    for (unsigned i = 1; i <= lambda.n(); ++i) num *= i;
    unsigned __int128 den = 1;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (unsigned j = 0; j < lam[i]; ++j) {
            unsigned hook = (lam[i] - j - 1) + (cj[j] - i - 1) + 1;
            den *= hook;
        }
    if (num % den != 0) throw std::logic_error("hook formula non-integral");
    return static_cast<std::uint64_t>(num / den);
}

std::uint64_t cycle_type_centralizer(const Partition& mu) {
    std::map<unsigned, unsigned> mult;
    for (unsigned p : mu.parts()) ++mult[p];
    std::uint64_t z = 1;
    for (auto [part, m] : mult) {
        for (unsigned i = 0; i < m; ++i) z *= part;
        for (unsigned i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

std::vector<AnClass> an_classes(unsigned n) {
    if (n < 2) throw std::invalid_argument("alternating classes need n >= 2");
    std::uint64_t fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    std::vector<AnClass> out;
    for (const Partition& mu : partitions_of(n)) {
        unsigned even_parts = 0;
        for (unsigned p : mu.parts())
            if (p % 2 == 0) ++even_parts;
        if (even_parts % 2 != 0) continue; // odd permutation type
        std::uint64_t sn_size = fact / cycle_type_centralizer(mu);
        std::uint32_t order = 1;
        for (unsigned p : mu.parts()) order = static_cast<std::uint32_t>(lcm_u64(order, p));
        bool splits = true;
        std::vector<unsigned> seen;
        for (unsigned p : mu.parts()) {
            if (p % 2 == 0 || std::find(seen.begin(), seen.end(), p) != seen.end()) {
                splits = false;
                break;
            }
            seen.push_back(p);
        }
        if (splits) {
            AnClass a;
            a.type = mu;
            a.split_half = true;
            a.size = sn_size / 2;
            a.element_order = order;
            out.push_back(a);
            out.push_back(a);
        } else {
            AnClass a;
            a.type = mu;
            a.size = sn_size;
            a.element_order = order;
            out.push_back(a);
        }
    }
    return out;
}

std::optional<std::vector<std::int64_t>> an_character_values(const Partition& lambda) {
    if (lambda.is_self_conjugate()) return std::nullopt;
    auto classes = an_classes(lambda.n());
    std::vector<std::int64_t> row;
    row.reserve(classes.size());
    for (const auto& c : classes) row.push_back(mn_value(lambda, c.type));
    return row;
}

std::pair<Partition, Partition> two_power_zero_witness(unsigned r) {
    if (r < 3) throw std::invalid_argument("witness needs r >= 3 (n = 2^r + 1 >= 9)");
    if (r > 10) throw std::invalid_argument("witness size capped at r = 10");
    unsigned n = (1u << r) + 1;
    Partition lambda(std::vector<unsigned>{1u << r, 1});
    std::vector<unsigned> mu;
    if (n % 4 == 3) {
        // never reached for n = 2^r + 1, r >= 2; kept as stated
        mu.push_back(4);
        for (unsigned i = 0; i < (n - 5) / 2; ++i) mu.push_back(2);
        mu.push_back(1);
    } else {
        mu.push_back(4);
        mu.push_back(4);
        for (unsigned i = 0; i < (n - 9) / 2; ++i) mu.push_back(2);
        mu.push_back(1);
    }
    return {lambda, Partition(mu)};
}

} // namespace chartab
