#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace dtile {

using Triple = std::array<std::int64_t, 3>;

/// Remainder of x modulo h in [0, h). Throws ZeroModulus when h < 1.
std::int64_t residue(std::int64_t x, std::int64_t h);

/// gcd with gcd(p, 0) = p.
std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Inverse of x modulo h, if it exists.
std::optional<std::int64_t> mod_inverse(std::int64_t x, std::int64_t h);

/// Three cyclic congruences
///   a x + c y + b z = r1, b x + a y + c z = r2, c x + b y + a z = r3  (mod h)
/// where x, y, z count tiles of types (1,2,3), (2,3,1), (3,1,2).
struct CongruenceSystem {
  std::int64_t h = 1;
  std::array<Triple, 3> rows{};
  Triple targets{};

  /// h = a + b + c. Targets are reduced mod h.
  static CongruenceSystem abc(std::int64_t a, std::int64_t b, std::int64_t c, const Triple& targets);

  bool satisfied_by(const Triple& xyz) const;
  /// Row i evaluated at xyz, reduced mod h.
  std::int64_t row_value(int i, const Triple& xyz) const;
};

struct Residues {
  std::int64_t delta = 0;
  std::int64_t g = 1;
};

/// delta = c^2 - ab, g = gcd(a + b + c, delta).
Residues residues_abc(std::int64_t a, std::int64_t b, std::int64_t c);

bool solvable_abc(std::int64_t a, std::int64_t b, std::int64_t c);

/// ((a+c)/delta, -(a+b)/delta, 0) mod h; solves targets (1, -1, 0).
/// Throws NotCoprime when gcd(h, delta) > 1.
Triple special_solution(std::int64_t a, std::int64_t b, std::int64_t c);

/// x1 = r1 x0 - r3 z0, y1 = r1 y0 - r3 x0, z1 = r1 z0 - r3 y0 (mod h) from the
/// special solution. Throws NotCoprime, BadTargets if r1 + r2 + r3 != 0 mod h.
Triple general_solution(std::int64_t a, std::int64_t b, std::int64_t c, const Triple& targets);

/// Lexicographically least solution in [0,h)^3, or none.
std::optional<Triple> brute_force_solve(const CongruenceSystem& sys);

/// The a = 1 system, decided by brute force.
bool solvable_1bc(std::int64_t b, std::int64_t c, const Triple& targets);

/// Targets (ceil(h/3), floor(h/3), rest) for h = 1 + b + c.
Triple targets_1bc(std::int64_t b, std::int64_t c);

/// Tile-type counts (x, y, z) whose removal leaves every part size divisible
/// by h = a + b + c; none when the residue system is unsolvable.
/// Throws BadSizes unless the sizes sum to 0 mod h.
std::optional<Triple> balancing_plan(std::int64_t a, std::int64_t b, std::int64_t c, const Triple& part_sizes);

}  // namespace dtile
