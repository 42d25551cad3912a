// Small finite fields F_q, q = p^e. Elements travel as integer codes in
// [0,q): the code's base-p digits are the coefficients of the element in the
// power basis of the generator. Each (p,e) has one canonical modulus (the
// lexicographically least monic irreducible), so codes mean the same thing
// across runs, files and machines.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace progen {

using fel = uint16_t;  // field element code

struct FieldSpec {
    uint32_t p = 2;
    uint32_t e = 1;
    std::vector<uint32_t> modulus;  // c_0..c_e over F_p, monic, irreducible

    uint32_t q() const {
        uint32_t r = 1;
        for (uint32_t i = 0; i < e; ++i) r *= p;
        return r;
    }
    bool operator==(const FieldSpec& o) const { return p == o.p && e == o.e; }
};

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors c_0..c_d, for modulus work only.
inline std::vector<uint32_t> poly_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& m, uint32_t p) {
    while (a.size() >= m.size()) {
        uint32_t lead = a.back();
        if (lead) {
            size_t off = a.size() - m.size();
            for (size_t i = 0; i < m.size(); ++i)
                a[off + i] = (a[off + i] + p * p - lead * m[i] % p) % p;
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline std::vector<uint32_t> poly_mulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                         const std::vector<uint32_t>& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

// Trial factorization: divide by every monic polynomial of degree <= deg/2.
inline bool poly_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
    uint32_t deg = static_cast<uint32_t>(m.size()) - 1;
    if (deg == 1) return true;
    for (uint32_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            std::vector<uint32_t> div(d + 1);
            uint64_t c = code;
            for (uint32_t i = 0; i < d; ++i) { div[i] = static_cast<uint32_t>(c % p); c /= p; }
            div[d] = 1;
            // long-divide m by div, check remainder
            std::vector<uint32_t> rem(m);
            while (rem.size() >= div.size()) {
                uint32_t lead = rem.back();
                if (lead) {
                    size_t off = rem.size() - div.size();
                    for (size_t i = 0; i < div.size(); ++i)
                        rem[off + i] = (rem[off + i] + p * p - lead * div[i] % p) % p;
                }
                rem.pop_back();
            }
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

// Canonical modulus: the monic irreducible x^e + c_{e-1}x^{e-1} + ... + c_0
// whose coefficient tuple is least when read high degree first (equivalently,
// least integer encoding sum c_i p^i). Matches the usual small-field tables:
// x^2+x+1 for F4, x^3+x+1 for F8, x^2+1 for F9.
inline std::vector<uint32_t> canonical_modulus(uint32_t p, uint32_t e) {
    if (e == 1) return {0, 1};  // x (unused for prime fields)
    uint64_t count = 1;
    for (uint32_t i = 0; i < e; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
        std::vector<uint32_t> m(e + 1);
        uint64_t c = code;
        for (uint32_t i = 0; i < e; ++i) { m[i] = static_cast<uint32_t>(c % p); c /= p; }
        m[e] = 1;
        if (m[0] == 0) continue;  // reducible: x divides
        if (detail::poly_irreducible(m, p)) return m;
    }
    throw std::logic_error("canonical_modulus: no irreducible polynomial found");
}

class Field {
public:
    // Cached canonical field for q = p^e. Extension fields require q <= 256;
    // prime fields are accepted up to 2^16.
    static const Field& get(uint32_t p, uint32_t e = 1) {
        static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Field>> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(p, e);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, e))).first;
        return *it->second;
    }
    static const Field& for_q(uint32_t q) {
        for (uint32_t p = 2; p <= q; ++p) {
            if (!detail::is_prime_u32(p)) continue;
            uint32_t t = q, e = 0;
            while (t % p == 0) { t /= p; ++e; }
            if (t == 1) return get(p, e);
        }
        throw std::invalid_argument("Field: q is not a prime power");
    }

    uint32_t p() const { return spec_.p; }
    uint32_t e() const { return spec_.e; }
    uint32_t q() const { return q_; }
    const FieldSpec& spec() const { return spec_; }

    fel zero() const { return 0; }
    fel one() const { return 1; }

    fel add(fel a, fel b) const {
        if (tab_) return add_[a * q_ + b];
        return static_cast<fel>((a + b) % q_);
    }
    fel sub(fel a, fel b) const { return add(a, neg(b)); }
    fel neg(fel a) const {
        if (tab_) return neg_[a];
        return a ? static_cast<fel>(q_ - a) : 0;
    }
    fel mul(fel a, fel b) const {
        if (tab_) return mul_[a * q_ + b];
        return static_cast<fel>(static_cast<uint64_t>(a) * b % q_);
    }
    fel inv(fel a) const {
        if (a == 0) throw std::domain_error("Field: inverse of zero");
        if (tab_) return inv_[a];
        // extended Euclid on integers (prime field)
        int64_t t = 0, nt = 1, r = q_, nr = a;
        while (nr) {
            int64_t qd = r / nr;
            std::swap(t -= qd * nt, nt);
            std::swap(r -= qd * nr, nr);
        }
        if (t < 0) t += q_;
        return static_cast<fel>(t);
    }
    fel div(fel a, fel b) const { return mul(a, inv(b)); }
    fel pow(fel a, uint64_t n) const {
        fel r = 1, b = a;
        while (n) {
            if (n & 1) r = mul(r, b);
            b = mul(b, b);
            n >>= 1;
        }
        return r;
    }
    // Image of an integer in the field: reduction into the prime subfield.
    fel from_int(uint64_t v) const { return static_cast<fel>(v % spec_.p); }

    // Frobenius x -> x^p, used for Galois-orbit work on extension fields.
    fel frobenius(fel a) const { return pow(a, spec_.p); }

    std::string str() const {
        return spec_.e == 1 ? "F" + std::to_string(spec_.p)
                            : "F" + std::to_string(q_) + "=F" + std::to_string(spec_.p) + "^" + std::to_string(spec_.e);
    }

private:
    FieldSpec spec_;
    uint32_t q_;
    bool tab_ = false;
    std::vector<fel> add_, mul_, neg_, inv_;

    Field(uint32_t p, uint32_t e) {
        if (!detail::is_prime_u32(p)) throw std::invalid_argument("Field: p is not prime");
        if (e < 1) throw std::invalid_argument("Field: e must be >= 1");
        spec_.p = p;
        spec_.e = e;
        uint64_t q = 1;
        for (uint32_t i = 0; i < e; ++i) q *= p;
        if (e == 1 && q > 65536) throw std::invalid_argument("Field: prime too large");
        if (e > 1 && q > 256) throw std::invalid_argument("Field: extension field q > 256 unsupported");
        q_ = static_cast<uint32_t>(q);
        spec_.modulus = canonical_modulus(p, e);
        if (q_ <= 256) build_tables();
    }

    std::vector<uint32_t> decode(fel a) const {
        std::vector<uint32_t> c(spec_.e, 0);
        for (uint32_t i = 0; i < spec_.e; ++i) { c[i] = a % spec_.p; a = static_cast<fel>(a / spec_.p); }
        return c;
    }
    fel encode(const std::vector<uint32_t>& c) const {
        uint64_t v = 0;
        for (size_t i = spec_.e; i-- > 0;) v = v * spec_.p + (i < c.size() ? c[i] : 0);
        return static_cast<fel>(v);
    }

    void build_tables() {
        tab_ = true;
        add_.resize(static_cast<size_t>(q_) * q_);
        mul_.resize(static_cast<size_t>(q_) * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (uint32_t a = 0; a < q_; ++a) {
            auto ca = decode(static_cast<fel>(a));
            std::vector<uint32_t> na(spec_.e);
            for (uint32_t i = 0; i < spec_.e; ++i) na[i] = (spec_.p - ca[i]) % spec_.p;
            neg_[a] = encode(na);
            for (uint32_t b = 0; b < q_; ++b) {
                auto cb = decode(static_cast<fel>(b));
                std::vector<uint32_t> s(spec_.e);
                for (uint32_t i = 0; i < spec_.e; ++i) s[i] = (ca[i] + cb[i]) % spec_.p;
                add_[a * q_ + b] = encode(s);
                std::vector<uint32_t> pa(ca.begin(), ca.end()), pb(cb.begin(), cb.end());
                while (!pa.empty() && pa.back() == 0) pa.pop_back();
                while (!pb.empty() && pb.back() == 0) pb.pop_back();
                auto prod = detail::poly_mulmod(pa, pb, spec_.modulus, spec_.p);
                std::vector<uint32_t> pc(prod.begin(), prod.end());
                mul_[a * q_ + b] = encode(pc);
            }
        }
        for (uint32_t a = 1; a < q_; ++a)
            for (uint32_t b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) { inv_[a] = static_cast<fel>(b); break; }
    }
};

}  // namespace progen
