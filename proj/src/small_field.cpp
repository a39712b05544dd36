#include "blrc/small_field.hpp"

#include <string>

#include "blrc/error.hpp"

namespace blrc {

namespace {

struct FieldSpec {
    unsigned q, p, m;
    // Monic reduction polynomial, coefficients low to high (m + 1 entries).
    std::array<unsigned, 5> modulus;
};

constexpr std::array<FieldSpec, 10> kFields{{
    {2, 2, 1, {0, 1}},
    {3, 3, 1, {0, 1}},
    {4, 2, 2, {1, 1, 1}},
    {5, 5, 1, {0, 1}},
    {7, 7, 1, {0, 1}},
    {8, 2, 3, {1, 1, 0, 1}},
    {9, 3, 2, {2, 2, 1}},
    {11, 11, 1, {0, 1}},
    {13, 13, 1, {0, 1}},
    {16, 2, 4, {1, 1, 0, 0, 1}},
}};

const FieldSpec* find_spec(unsigned q) noexcept {
    for (const auto& f : kFields) {
        if (f.q == q) return &f;
    }
    return nullptr;
}

bool is_prime_power(unsigned q) {
    if (q < 2) return false;
    unsigned p = 2;
    while (q % p) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

}  // namespace

bool SmallField::supported(unsigned q) noexcept { return find_spec(q) != nullptr; }

SmallField::SmallField(unsigned q) {
    const FieldSpec* spec = find_spec(q);
    if (!spec) {
        if (!is_prime_power(q)) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
        throw InvalidArgument("field order " + std::to_string(q) + " is not supported (need q <= 16)");
    }
    q_ = spec->q;
    p_ = spec->p;
    m_ = spec->m;

    auto digits = [&](unsigned x) {
        std::array<unsigned, 8> d{};
        for (unsigned j = 0; j < m_; ++j, x /= p_) d[j] = x % p_;
        return d;
    };
    auto encode = [&](const std::array<unsigned, 8>& d) {
        unsigned x = 0;
        for (unsigned j = m_; j-- > 0;) x = x * p_ + d[j];
        return static_cast<Element>(x);
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned x = 0; x < q_; ++x) {
        const auto dx = digits(x);
        std::array<unsigned, 8> dn{};
        for (unsigned j = 0; j < m_; ++j) dn[j] = (p_ - dx[j]) % p_;
        neg_[x] = encode(dn);
        for (unsigned y = 0; y < q_; ++y) {
            const auto dy = digits(y);
            std::array<unsigned, 8> sum{};
            for (unsigned j = 0; j < m_; ++j) sum[j] = (dx[j] + dy[j]) % p_;
            add_[x * q_ + y] = encode(sum);

            std::array<unsigned, 8> prod{};
            for (unsigned i = 0; i < m_; ++i) {
                for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
            }
            // x^m = -(modulus[0] + ... + modulus[m-1] x^{m-1})
            for (unsigned deg = 2 * m_ - 2; deg >= m_ && deg < 8; --deg) {
                const unsigned c = prod[deg];
                if (!c) continue;
                prod[deg] = 0;
                for (unsigned j = 0; j < m_; ++j) {
                    prod[deg - m_ + j] = (prod[deg - m_ + j] + c * (p_ - spec->modulus[j] % p_)) % p_;
                }
            }
            mul_[x * q_ + y] = encode(prod);
        }
    }
    for (unsigned x = 1; x < q_; ++x) {
        for (unsigned y = 1; y < q_; ++y) {
            if (mul_[x * q_ + y] == 1) inv_[x] = static_cast<Element>(y);
        }
    }
}

SmallField::Element SmallField::inv(Element x) const {
    if (x == 0) throw InvalidArgument("zero has no inverse");
    if (x >= q_) throw InvalidArgument("element out of range");
    return inv_[x];
}

}  // namespace blrc
