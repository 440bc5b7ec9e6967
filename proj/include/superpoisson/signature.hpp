/*
 * signature.hpp -- generator signature of a free supercommutative algebra.
 *
 * m even generators x1..xm (degree 0), n odd generators th1..thn (degree 1).
 * When de_rham is set the odd generators play the role of the differentials
 * of the even ones, which forces n == m.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace superpoisson {

struct Signature {
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    bool de_rham = false;

    Signature() = default;
    Signature(std::uint32_t m_, std::uint32_t n_, bool de_rham_ = false)
        : m(m_), n(n_), de_rham(de_rham_)
    {
        if (n > 62)
            throw std::invalid_argument("at most 62 odd generators supported");
        if (m > 62)
            throw std::invalid_argument("at most 62 even generators supported");
        if (de_rham && n != m)
            throw std::invalid_argument("de Rham signature requires n == m");
    }

    friend bool operator==(const Signature&, const Signature&) = default;
};

// A generator: either even (x_i) or odd (th_j).  Indices are 0-based
// internally; the surface syntax x1, th1 is 1-based.
struct GenId {
    bool odd = false;
    std::uint32_t index = 0;

    friend bool operator==(const GenId&, const GenId&) = default;
    friend auto operator<=>(const GenId&, const GenId&) = default;
};

inline GenId even_gen(std::uint32_t i) { return GenId{false, i}; }
inline GenId odd_gen(std::uint32_t j) { return GenId{true, j}; }

inline int gen_degree(const GenId& u) { return u.odd ? 1 : 0; }
inline int gen_parity(const GenId& u) { return u.odd ? 1 : 0; }

inline std::uint32_t gen_count(const Signature& sig) { return sig.m + sig.n; }

// Enumeration order: x1..xm then th1..thn.
inline GenId gen_at(const Signature& sig, std::uint32_t k)
{
    if (k < sig.m)
        return even_gen(k);
    if (k < sig.m + sig.n)
        return odd_gen(k - sig.m);
    throw std::out_of_range("generator index");
}

inline std::string gen_name(const GenId& u)
{
    return (u.odd ? "th" : "x") + std::to_string(u.index + 1);
}

inline void check_gen(const Signature& sig, const GenId& u)
{
    if ((u.odd && u.index >= sig.n) || (!u.odd && u.index >= sig.m))
        throw std::out_of_range("generator outside signature: " + gen_name(u));
}

} // namespace superpoisson
