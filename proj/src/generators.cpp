#include "hlm/generators.hpp"

#include "hlm/gauss_rational.hpp"

#include <stdexcept>

namespace hlm {

namespace {
constexpr std::array<std::string_view, kNumGen> kNames = {
    "F01", "F02", "F03", "F12", "F13", "F23", "P0", "P1",
    "P2",  "P3",  "X0",  "X1",  "X2",  "X3",  "Id",
};
}

std::string_view gen_name(Gen g) { return kNames[idx(g)]; }

Gen parse_gen(std::string_view name) {
    for (std::size_t k = 0; k < kNumGen; ++k)
        if (kNames[k] == name) return gen(k);
    throw ParseError("unknown generator '" + std::string(name) + "'");
}

Gen F(int i, int j) {
    for (std::size_t k = 0; k < kLorentzPairs.size(); ++k)
        if (kLorentzPairs[k][0] == i && kLorentzPairs[k][1] == j) return gen(k);
    throw std::invalid_argument("F(i,j) needs 0 <= i < j <= 3");
}

int permutation_sign(const int* p, int n) {
    int sign = 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (p[a] == p[b]) return 0;
            if (p[a] > p[b]) sign = -sign;
        }
    return sign;
}

int levi_civita4(int i, int j, int k, int l) {
    int p[4] = {i, j, k, l};
    return permutation_sign(p, 4);
}

}  // namespace hlm
