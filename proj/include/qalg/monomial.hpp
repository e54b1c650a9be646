#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qalg {

/// Generators of the three-dimensional algebra, in the fixed order A < B < C.
enum class Gen : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr Gen kGens[3] = {Gen::A, Gen::B, Gen::C};

inline char gen_letter(Gen g) { return static_cast<char>('A' + static_cast<int>(g)); }

/// Word in the free algebra on {A, B, C}: a plain string over those letters.
using Word = std::string;

/// Ordered monomial A^a B^b C^c; (0,0,0) is the unit.
struct Monomial {
    std::uint16_t a = 0;
    std::uint16_t b = 0;
    std::uint16_t c = 0;

    static Monomial of(Gen g) {
        Monomial m;
        m.power(g) = 1;
        return m;
    }
    static Monomial from_word(std::string_view w);

    std::uint16_t& power(Gen g) { return g == Gen::A ? a : g == Gen::B ? b : c; }
    std::uint16_t power(Gen g) const { return g == Gen::A ? a : g == Gen::B ? b : c; }
    unsigned degree() const { return unsigned{a} + b + c; }
    /// Number of B and C letters.
    unsigned bc_degree() const { return unsigned{b} + c; }
    bool is_one() const { return a == 0 && b == 0 && c == 0; }

    Word word() const { return Word(a, 'A') + Word(b, 'B') + Word(c, 'C'); }
    /// "1", "A", "A^2*B", ... ; lowercase letters for commutative rendering.
    std::string to_string(bool commutative = false) const;

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        return {static_cast<std::uint16_t>(x.a + y.a), static_cast<std::uint16_t>(x.b + y.b),
                static_cast<std::uint16_t>(x.c + y.c)};
    }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial Monomial::from_word(std::string_view w) {
    Monomial m;
    for (char ch : w) m.power(static_cast<Gen>(ch - 'A'))++;
    return m;
}

inline std::string Monomial::to_string(bool commutative) const {
    if (is_one()) return "1";
    std::string out;
    for (Gen g : kGens) {
        unsigned p = power(g);
        if (p == 0) continue;
        if (!out.empty()) out += "*";
        char letter = gen_letter(g);
        out += commutative ? static_cast<char>(letter - 'A' + 'a') : letter;
        if (p > 1) out += "^" + std::to_string(p);
    }
    return out;
}

}  // namespace qalg
