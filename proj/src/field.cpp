#include "orthocoord/field.hpp"

#include <sstream>

#include "orthocoord/error.hpp"

namespace orthocoord {

struct Field::Impl {
    bool rational = true;
    std::uint32_t p = 0;
    std::uint32_t k = 1;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // monic, degree k, low degree first
    std::vector<std::uint32_t> mul_table;
    std::vector<std::uint32_t> inverse;
};

namespace {

constexpr std::uint32_t kMaxExtensionOrder = 256;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> digits(std::uint32_t x, std::uint32_t p, std::uint32_t k) {
    std::vector<std::uint32_t> d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = x % p;
        x /= p;
    }
    return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t x = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
    return x;
}

// Polynomial product reduced modulo a monic modulus of degree k.
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t k,
                          const std::vector<std::uint32_t>& modulus) {
    auto da = digits(a, p, k);
    auto db = digits(b, p, k);
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p;
    for (std::uint32_t deg = 2 * k - 1; deg >= k; --deg) {
        std::uint64_t c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (std::uint32_t i = 0; i < k; ++i)
            prod[deg - k + i] = (prod[deg - k + i] + (p - c) * modulus[i]) % p;
    }
    std::vector<std::uint32_t> out(k);
    for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return undigits(out, p);
}

long to_index(const Scalar& a) { return a.get_num().get_si(); }

}  // namespace

Field Field::rationals() {
    static const auto impl = std::make_shared<const Impl>();
    return Field(impl);
}

Field Field::galois(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw Error(ErrorKind::MalformedInput, "characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorKind::MalformedInput, "extension degree must be positive");
    auto impl = std::make_shared<Impl>();
    impl->rational = false;
    impl->p = p;
    impl->k = k;
    if (k == 1) {
        impl->q = p;
        return Field(impl);
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    if (q > kMaxExtensionOrder)
        throw Error(ErrorKind::Unsupported, "extension fields are limited to order " + std::to_string(kMaxExtensionOrder));
    impl->q = static_cast<std::uint32_t>(q);
    // Smallest monic modulus that yields a field: no zero divisors.
    for (std::uint32_t low = 0; low < q; ++low) {
        auto modulus = digits(low, p, k);
        if (modulus[0] == 0) continue;
        std::vector<std::uint32_t> table(q * q);
        bool field = true;
        for (std::uint32_t a = 0; a < q && field; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                auto c = poly_mulmod(a, b, p, k, modulus);
                table[a * q + b] = c;
                if (a != 0 && b != 0 && c == 0) {
                    field = false;
                    break;
                }
            }
        if (!field) continue;
        impl->modulus = modulus;
        impl->mul_table = std::move(table);
        impl->inverse.assign(q, 0);
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                if (impl->mul_table[a * q + b] == 1) impl->inverse[a] = b;
        return Field(impl);
    }
    throw Error(ErrorKind::Unsupported, "no irreducible modulus found");
}

bool Field::is_rational() const { return impl_->rational; }
bool Field::is_prime_field() const { return impl_->rational || impl_->k == 1; }
std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->k; }
std::uint64_t Field::order() const { return impl_->q; }

Scalar Field::from_int(long v) const {
    if (impl_->rational) return Scalar(v);
    long p = impl_->p;
    return Scalar(((v % p) + p) % p);
}

Scalar Field::reduce(const Scalar& v) const {
    if (impl_->rational) {
        Scalar r = v;
        r.canonicalize();
        return r;
    }
    mpz_class p = impl_->p;
    mpz_class num = v.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = v.get_den() % p;
    if (den == 0) throw Error(ErrorKind::MalformedInput, "denominator divisible by the characteristic");
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * den_inv) % p;
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    const auto& f = *impl_;
    if (f.rational) return a + b;
    if (f.k == 1) return Scalar((to_index(a) + to_index(b)) % f.p);
    auto da = digits(to_index(a), f.p, f.k);
    auto db = digits(to_index(b), f.p, f.k);
    for (std::uint32_t i = 0; i < f.k; ++i) da[i] = (da[i] + db[i]) % f.p;
    return Scalar(undigits(da, f.p));
}

Scalar Field::neg(const Scalar& a) const {
    const auto& f = *impl_;
    if (f.rational) return -a;
    if (f.k == 1) return Scalar((f.p - to_index(a)) % f.p);
    auto da = digits(to_index(a), f.p, f.k);
    for (auto& d : da) d = (f.p - d) % f.p;
    return Scalar(undigits(da, f.p));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    const auto& f = *impl_;
    if (f.rational) return a * b;
    if (f.k == 1) return Scalar(static_cast<long>((static_cast<std::uint64_t>(to_index(a)) * to_index(b)) % f.p));
    return Scalar(f.mul_table[to_index(a) * f.q + to_index(b)]);
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw Error(ErrorKind::MalformedInput, "division by zero");
    const auto& f = *impl_;
    if (f.rational) return 1 / a;
    if (f.k == 1) {
        mpz_class r, x = to_index(a), p = f.p;
        mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        return Scalar(r);
    }
    return Scalar(f.inverse[to_index(a)]);
}

bool Field::supports(Involution sigma) const {
    if (sigma == Involution::Identity) return true;
    return !impl_->rational && impl_->k % 2 == 0;
}

Scalar Field::conj(const Scalar& a, Involution sigma) const {
    if (sigma == Involution::Identity) return a;
    if (!supports(sigma)) throw Error(ErrorKind::Unsupported, "frobenius involution needs GF(p^{2m}), got " + name());
    // x -> x^(p^(k/2))
    Scalar r = a;
    for (std::uint32_t step = 0; step < impl_->k / 2; ++step) {
        Scalar base = r;
        Scalar acc = one();
        for (std::uint32_t i = 0; i < impl_->p; ++i) acc = mul(acc, base);
        r = acc;
    }
    return r;
}

std::vector<Scalar> Field::elements() const {
    if (impl_->rational) throw Error(ErrorKind::InfiniteLattice, "Q has no finite element list");
    std::vector<Scalar> out;
    out.reserve(impl_->q);
    for (std::uint32_t i = 0; i < impl_->q; ++i) out.emplace_back(i);
    return out;
}

std::string Field::format(const Scalar& a) const {
    if (impl_->rational) return a.get_str();
    return a.get_num().get_str();
}

Scalar Field::parse(const std::string& text) const {
    Scalar v;
    try {
        if (v.set_str(text, 10) != 0) throw Error(ErrorKind::MalformedInput, "bad scalar '" + text + "'");
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::MalformedInput, "bad scalar '" + text + "'");
    }
    v.canonicalize();
    if (impl_->rational) return v;
    if (impl_->k == 1) return reduce(v);
    if (v.get_den() != 1 || v < 0 || v >= impl_->q)
        throw Error(ErrorKind::MalformedInput, "element index '" + text + "' out of range for " + name());
    return v;
}

std::string Field::name() const {
    if (impl_->rational) return "Q";
    if (impl_->k == 1) return "GF(" + std::to_string(impl_->p) + ")";
    return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k) + ")";
}

bool Field::operator==(const Field& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->rational == other.impl_->rational && impl_->p == other.impl_->p && impl_->k == other.impl_->k;
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotALattice: return "NotALattice";
        case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
        case ErrorKind::NoBounds: return "NoBounds";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotInvolution: return "NotInvolution";
        case ErrorKind::NotOrderReversing: return "NotOrderReversing";
        case ErrorKind::NotComplement: return "NotComplement";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::InternalProofViolation: return "InternalProofViolation";
        case ErrorKind::NotOrthosymmetric: return "NotOrthosymmetric";
        case ErrorKind::Isotropic: return "Isotropic";
        case ErrorKind::NotInvertibleGram: return "NotInvertibleGram";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::NotStarRegular: return "NotStarRegular";
        case ErrorKind::NotRegular: return "NotRegular";
        case ErrorKind::InfiniteLattice: return "InfiniteLattice";
        case ErrorKind::NotProjection: return "NotProjection";
        case ErrorKind::NotARing: return "NotARing";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::CancellationFailure: return "CancellationFailure";
        case ErrorKind::WellDefinednessViolation: return "WellDefinednessViolation";
        case ErrorKind::NotAFrame: return "NotAFrame";
        case ErrorKind::NonPrimeField: return "NonPrimeField";
        case ErrorKind::ClosureFailure: return "ClosureFailure";
        case ErrorKind::FrameImageDegenerate: return "FrameImageDegenerate";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

}  // namespace orthocoord
