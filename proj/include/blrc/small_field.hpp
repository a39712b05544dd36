#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace blrc {

/// Finite field GF(q) for prime powers q <= 16.
///
/// Elements are the integers 0..q-1. For q = p^m an element encodes the
/// polynomial sum c_j x^j with digits c_j in base p (so in GF(4), x -> 2 and
/// x+1 -> 3). Reduction uses a fixed primitive polynomial per order:
/// GF(4) x^2+x+1, GF(8) x^3+x+1, GF(9) x^2+2x+2, GF(16) x^4+x+1.
class SmallField {
public:
    using Element = std::uint8_t;

    /// Throws InvalidArgument unless q is in {2,3,4,5,7,8,9,11,13,16}.
    explicit SmallField(unsigned q);

    static bool supported(unsigned q) noexcept;

    unsigned order() const noexcept { return q_; }
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }

    Element add(Element x, Element y) const noexcept { return add_[x * q_ + y]; }
    Element mul(Element x, Element y) const noexcept { return mul_[x * q_ + y]; }
    Element neg(Element x) const noexcept { return neg_[x]; }
    Element sub(Element x, Element y) const noexcept { return add(x, neg(y)); }
    /// Throws InvalidArgument("zero has no inverse") for x == 0.
    Element inv(Element x) const;

private:
    unsigned q_;
    unsigned p_;
    unsigned m_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    std::vector<Element> inv_;
};

inline SmallField::Element field_add(const SmallField& f, SmallField::Element x, SmallField::Element y) {
    return f.add(x, y);
}
inline SmallField::Element field_mul(const SmallField& f, SmallField::Element x, SmallField::Element y) {
    return f.mul(x, y);
}
inline SmallField::Element field_inv(const SmallField& f, SmallField::Element x) { return f.inv(x); }

}  // namespace blrc
