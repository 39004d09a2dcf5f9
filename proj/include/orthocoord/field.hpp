#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orthocoord {

/// Uniform scalar representation. Rationals are stored canonically; elements
/// of GF(p^k) are stored as integers 0..q-1 whose base-p digits are the
/// coefficients of the residue polynomial (lowest degree first).
using Scalar = mpq_class;

enum class Involution { Identity, Frobenius };

/// Exact field handle: either Q or GF(p^k). Cheap to copy.
class Field {
public:
    static Field rationals();
    static Field galois(std::uint32_t p, std::uint32_t k = 1);

    bool is_rational() const;
    bool is_finite() const { return !is_rational(); }
    bool is_prime_field() const;
    std::uint32_t characteristic() const;  // 0 for Q
    std::uint32_t degree() const;          // 1 for Q
    std::uint64_t order() const;           // 0 for Q

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const;
    /// Brings an arbitrary rational into canonical form (finite fields:
    /// reduction of p/q mod characteristic; only valid for prime fields when
    /// the value is not already an element index).
    Scalar reduce(const Scalar& v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    bool is_zero(const Scalar& a) const { return sgn(a) == 0; }

    /// Applies the field involution. Frobenius needs an even extension degree.
    Scalar conj(const Scalar& a, Involution sigma) const;
    bool supports(Involution sigma) const;

    /// All elements in index order; finite fields only.
    std::vector<Scalar> elements() const;

    std::string format(const Scalar& a) const;
    Scalar parse(const std::string& text) const;
    std::string name() const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    struct Impl;

private:
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace orthocoord
