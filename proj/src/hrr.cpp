#include "quadric/hrr.hpp"

#include "quadric/errors.hpp"

namespace quadric {

const ChowClass& todd_class() {
    static const ChowClass td(Rat(1), Rat(3, 2), Rat(13, 6), Rat(1));
    return td;
}

ChernCharacter chern_character(const ChernData& c) {
    // Newton identities truncated at degree 3, in (h, l, p) units:
    // (c1 h)^2 = 2 c1^2 l and (c1 h)^3 = 2 c1^3 p, (c1 h)(c2 l) = c1 c2 p.
    ChernCharacter ch;
    ch.ch0 = Rat(c.rank);
    ch.ch1 = Rat(c.c1);
    ch.ch2 = Rat(c.c1 * c.c1 - c.c2);
    ch.ch3 = Rat(2 * c.c1 * c.c1 * c.c1 - 3 * c.c1 * c.c2 + 3 * c.c3, 6);
    return ch;
}

ChernData chern_from_character(const ChernCharacter& ch) {
    ChernData c;
    c.rank = to_integer(ch.ch0);
    c.c1 = to_integer(ch.ch1);
    c.c2 = to_integer(ch.ch1 * ch.ch1 - ch.ch2);
    // Invert ch3 = (2c1^3 - 3c1c2 + 3c3)/6 with c2 substituted.
    const Rat c1(c.c1);
    const Rat c3 = Rat(2) * ch.ch3 + c1 * c1 * c1 / Rat(3) - c1 * ch.ch2;
    if (!is_integer(c3))
        throw NonIntegerResult("character is not integral Chern data (c3 = " + to_string(c3) + ")");
    c.c3 = num(c3);
    return c;
}

Rat chi_formula(const ChernData& c) {
    const Rat c1(c.c1), c2(c.c2), c3(c.c3);
    return (Rat(2) * c1 * c1 * c1 - Rat(3) * c1 * c2 + Rat(3) * c3) / Rat(6) +
           Rat(3) * (c1 * c1 - c2) / Rat(2) + Rat(13) * c1 / Rat(6) + Rat(c.rank);
}

Rat chi_hrr(const ChernData& c) {
    const ChowClass prod = chern_character(c).as_class() * todd_class();
    return prod[3];
}

} // namespace quadric
