#include "qalg/bivector.hpp"

namespace qalg {

std::string Bivector::to_string() const {
    static const char* names[3] = {"A^B", "A^C", "B^C"};
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += c[i] < 0 ? " - " : " + ";
        else if (c[i] < 0) out += "-";
        Rational mag = abs(c[i]);
        if (mag != 1) out += qalg::to_string(mag) + "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace qalg
