#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace hlm {

/// The 15 basis elements: Lorentz generators F_ij (i<j), momenta P_i,
/// coordinates X_i and the generalized identity Id. The enumerator order is
/// the order used for every matrix index and every serialization.
enum class Gen : std::uint8_t {
    F01, F02, F03, F12, F13, F23,
    P0, P1, P2, P3,
    X0, X1, X2, X3,
    Id,
};

inline constexpr std::size_t kNumGen = 15;

inline constexpr std::size_t idx(Gen g) { return static_cast<std::size_t>(g); }
inline constexpr Gen gen(std::size_t k) { return static_cast<Gen>(k); }

std::string_view gen_name(Gen g);
Gen parse_gen(std::string_view name);

inline constexpr Gen P(int i) { return static_cast<Gen>(6 + i); }
inline constexpr Gen X(int i) { return static_cast<Gen>(10 + i); }

/// F_ij for i<j.
Gen F(int i, int j);

/// Minkowski metric diag(1,-1,-1,-1); also its own inverse.
inline constexpr int metric(int i, int j) { return i != j ? 0 : (i == 0 ? 1 : -1); }
inline constexpr int metric(int i) { return i == 0 ? 1 : -1; }

/// The six Lorentz index pairs in generator order.
inline constexpr std::array<std::array<int, 2>, 6> kLorentzPairs = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

/// Levi-Civita symbol with lower indices, epsilon_0123 = +1.
int levi_civita4(int i, int j, int k, int l);

/// Sign of the permutation taking (0..n-1) to p; 0 if p repeats an index.
int permutation_sign(const int* p, int n);

}  // namespace hlm
