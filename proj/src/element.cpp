#include "chartab/element.hpp"

#include <sstream>
#include <stdexcept>

namespace chartab {

Element Element::permutation(const std::vector<std::uint8_t>& images) {
    if (images.size() > 14) throw std::invalid_argument("permutation degree above 14");
    Element e;
    e.kind_ = Kind::Permutation;
    e.n_ = static_cast<std::uint8_t>(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] >= images.size()) throw std::invalid_argument("bad permutation image");
        e.perm_[i] = images[i];
    }
    return e;
}

Element Element::matrix(std::shared_ptr<const GaloisField> F, unsigned dim,
                        const std::vector<std::uint64_t>& entries, bool projective) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("matrix dimension must be 2 or 3");
    if (entries.size() != dim * dim) throw std::invalid_argument("entry count mismatch");
    if (dim == 2 && F->q() > 255) throw std::invalid_argument("GF too large for 2x2 encoding");
    if (dim == 3 && F->q() > 16) throw std::invalid_argument("GF too large for 3x3 encoding");
    Element e;
    e.kind_ = projective ? Kind::Projective : Kind::Matrix;
    e.F_ = std::move(F);
    e.dim_ = static_cast<std::uint8_t>(dim);
    for (unsigned i = 0; i < dim * dim; ++i) {
        if (entries[i] >= e.F_->q()) throw std::invalid_argument("matrix entry out of field");
        e.mat_[i] = static_cast<std::uint8_t>(entries[i]);
    }
    if (projective) e.normalize_projective();
    return e;
}

Element Element::twisted(Element base, unsigned power, Twist twist, unsigned modulus) {
    if (base.kind_ != Kind::Matrix && base.kind_ != Kind::Projective)
        throw std::invalid_argument("twisted base must be a matrix variant");
    if (twist == Twist::FrobeniusDual && (modulus != 2 || base.F_->f() > 2))
        throw std::invalid_argument("dual twist needs modulus 2 over a field with f <= 2");
    Element e = base;
    e.base_projective_ = base.kind_ == Kind::Projective;
    e.kind_ = Kind::Twisted;
    e.twist_ = twist;
    e.twist_mod_ = static_cast<std::uint8_t>(modulus);
    e.power_ = static_cast<std::uint8_t>(power % modulus);
    return e;
}

Element Element::twisted_base() const {
    if (kind_ != Kind::Twisted) throw std::logic_error("not a twisted element");
    Element e = *this;
    e.kind_ = base_projective_ ? Kind::Projective : Kind::Matrix;
    e.power_ = 0;
    return e;
}

void Element::normalize_projective() {
    const auto& F = *F_;
    unsigned nn = dim_ * dim_;
    for (unsigned i = 0; i < nn; ++i) {
        if (mat_[i] != 0) {
            if (mat_[i] == 1) return;
            std::uint64_t s = F.inv(mat_[i]);
            for (unsigned j = 0; j < nn; ++j)
                mat_[j] = static_cast<std::uint8_t>(F.mul(mat_[j], s));
            return;
        }
    }
    throw std::invalid_argument("zero matrix cannot be projective");
}

bool Element::is_identity() const { return *this == identity_like(); }

Element Element::identity_like() const {
    switch (kind_) {
    case Kind::Permutation: {
        std::vector<std::uint8_t> img(n_);
        for (unsigned i = 0; i < n_; ++i) img[i] = static_cast<std::uint8_t>(i);
        return permutation(img);
    }
    case Kind::Matrix:
    case Kind::Projective: {
        std::vector<std::uint64_t> ent(dim_ * dim_, 0);
        for (unsigned i = 0; i < dim_; ++i) ent[i * dim_ + i] = 1;
        return matrix(F_, dim_, ent, kind_ == Kind::Projective);
    }
    case Kind::Twisted: {
        Element b = twisted_base().identity_like();
        return twisted(b, 0, twist_, twist_mod_);
    }
    }
    throw std::logic_error("unreachable");
}

Element Element::apply_twist(unsigned times) const {
    Element r = *this;
    const auto& F = *F_;
    if (twist_ == Twist::Frobenius) {
        for (unsigned i = 0; i < dim_ * dim_; ++i)
            r.mat_[i] = static_cast<std::uint8_t>(F.frobenius_iter(mat_[i], times));
    } else {
        if (times % 2 == 1) {
            Element inv = mat_inverse();
            // transpose then entrywise Frobenius
            for (unsigned i = 0; i < dim_; ++i)
                for (unsigned j = 0; j < dim_; ++j)
                    r.mat_[i * dim_ + j] =
                        static_cast<std::uint8_t>(F.frobenius(inv.mat_[j * dim_ + i]));
        }
    }
    if (kind_ == Kind::Projective || (kind_ == Kind::Twisted && base_projective_))
        r.normalize_projective();
    return r;
}

Element Element::mat_mul(const Element& o) const {
    Element r = *this;
    const auto& F = *F_;
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) {
            std::uint64_t acc = 0;
            for (unsigned k = 0; k < dim_; ++k)
                acc = F.add(acc, F.mul(mat_[i * dim_ + k], o.mat_[k * dim_ + j]));
            r.mat_[i * dim_ + j] = static_cast<std::uint8_t>(acc);
        }
    return r;
}

Element Element::mat_inverse() const {
    const auto& F = *F_;
    Element r = *this;
    if (dim_ == 2) {
        std::uint64_t a = mat_[0], b = mat_[1], c = mat_[2], d = mat_[3];
        std::uint64_t det = F.sub(F.mul(a, d), F.mul(b, c));
        if (det == 0) throw std::domain_error("singular matrix");
        std::uint64_t di = F.inv(det);
        r.mat_[0] = static_cast<std::uint8_t>(F.mul(d, di));
        r.mat_[1] = static_cast<std::uint8_t>(F.mul(F.neg(b), di));
        r.mat_[2] = static_cast<std::uint8_t>(F.mul(F.neg(c), di));
        r.mat_[3] = static_cast<std::uint8_t>(F.mul(a, di));
        return r;
    }
    // 3x3 via the adjugate
    auto m = [&](unsigned i, unsigned j) -> std::uint64_t { return mat_[i * 3 + j]; };
    auto co = [&](unsigned i, unsigned j) -> std::uint64_t {
        unsigned r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return F.sub(F.mul(m(r0, c0), m(r1, c1)), F.mul(m(r0, c1), m(r1, c0)));
    };
    std::uint64_t det = 0;
    for (unsigned j = 0; j < 3; ++j) det = F.add(det, F.mul(m(0, j), co(0, j)));
    if (det == 0) throw std::domain_error("singular matrix");
    std::uint64_t di = F.inv(det);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            r.mat_[i * 3 + j] = static_cast<std::uint8_t>(F.mul(co(j, i), di));
    return r;
}

Element Element::operator*(const Element& o) const {
    if (kind_ != o.kind_) throw std::invalid_argument("element kind mismatch");
    switch (kind_) {
    case Kind::Permutation: {
        Element r = *this;
        // (this * o)(i) = this(o(i))
        for (unsigned i = 0; i < n_; ++i) r.perm_[i] = perm_[o.perm_[i]];
        return r;
    }
    case Kind::Matrix:
        return mat_mul(o);
    case Kind::Projective: {
        Element r = mat_mul(o);
        r.normalize_projective();
        return r;
    }
    case Kind::Twisted: {
        Element ob = o.apply_twist(power_);
        Element r = mat_mul(ob);
        if (base_projective_) r.normalize_projective();
        r.power_ = static_cast<std::uint8_t>((power_ + o.power_) % twist_mod_);
        return r;
    }
    }
    throw std::logic_error("unreachable");
}

Element Element::inverse() const {
    switch (kind_) {
    case Kind::Permutation: {
        Element r = *this;
        for (unsigned i = 0; i < n_; ++i) r.perm_[perm_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }
    case Kind::Matrix:
        return mat_inverse();
    case Kind::Projective: {
        Element r = mat_inverse();
        r.normalize_projective();
        return r;
    }
    case Kind::Twisted: {
        unsigned ip = (twist_mod_ - power_) % twist_mod_;
        Element bi = mat_inverse();
        Element r = bi.apply_twist(ip);
        if (base_projective_) r.normalize_projective();
        r.power_ = static_cast<std::uint8_t>(ip);
        return r;
    }
    }
    throw std::logic_error("unreachable");
}

std::uint64_t Element::key() const {
    std::uint64_t k = static_cast<std::uint64_t>(kind_);
    switch (kind_) {
    case Kind::Permutation: {
        k = (k << 4) | n_;
        for (unsigned i = 0; i < n_; ++i) k = (k << 4) | perm_[i];
        return k;
    }
    case Kind::Matrix:
    case Kind::Projective:
    case Kind::Twisted: {
        unsigned bits = dim_ == 2 ? 8 : 4;
        k = (k << 2) | (kind_ == Kind::Twisted ? (base_projective_ ? 2u : 1u) : 0u);
        k = (k << 4) | power_;
        for (unsigned i = 0; i < dim_ * dim_; ++i)
            k = (k << bits) | mat_[i];
        return k;
    }
    }
    throw std::logic_error("unreachable");
}

unsigned Element::order() const {
    Element id = identity_like();
    Element x = *this;
    unsigned o = 1;
    while (!(x == id)) {
        x = x * *this;
        ++o;
        if (o > 1u << 20) throw std::logic_error("element order runaway");
    }
    return o;
}

std::string Element::str() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Permutation: {
        bool any = false;
        std::vector<bool> seen(n_, false);
        for (unsigned i = 0; i < n_; ++i) {
            if (seen[i] || perm_[i] == i) continue;
            os << "(";
            unsigned j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) os << ",";
                first = false;
                os << j + 1;
                j = perm_[j];
            }
            os << ")";
            any = true;
        }
        if (!any) os << "()";
        return os.str();
    }
    default: {
        if (kind_ == Kind::Twisted) os << "(";
        os << "[";
        for (unsigned i = 0; i < dim_; ++i) {
            if (i) os << "; ";
            for (unsigned j = 0; j < dim_; ++j) {
                if (j) os << ",";
                os << F_->element_str(mat_[i * dim_ + j]);
            }
        }
        os << "]";
        if (kind_ == Kind::Twisted) os << ", s^" << static_cast<unsigned>(power_) << ")";
        return os.str();
    }
    }
}

} // namespace chartab
