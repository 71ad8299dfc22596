#include "dtile/congruence.hpp"

#include <numeric>

#include "dtile/error.hpp"

namespace dtile {

std::int64_t residue(std::int64_t x, std::int64_t h) {
  if (h < 1) fail(ErrorCode::ZeroModulus, "modulus must be >= 1");
  const std::int64_t r = x % h;
  return r < 0 ? r + h : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::optional<std::int64_t> mod_inverse(std::int64_t x, std::int64_t h) {
  if (h < 1) fail(ErrorCode::ZeroModulus, "modulus must be >= 1");
  std::int64_t r0 = h, r1 = residue(x, h);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return std::nullopt;
  return residue(s0, h);
}

namespace {

void check_positive(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || b < 1 || c < 1) fail(ErrorCode::BadParameters, "a, b, c must be positive");
}

}  // namespace

CongruenceSystem CongruenceSystem::abc(std::int64_t a, std::int64_t b, std::int64_t c, const Triple& targets) {
  check_positive(a, b, c);
  CongruenceSystem s;
  s.h = a + b + c;
  const Triple first = {residue(a, s.h), residue(c, s.h), residue(b, s.h)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.rows[i][j] = first[(j - i + 3) % 3];
  for (int i = 0; i < 3; ++i) s.targets[i] = residue(targets[i], s.h);
  return s;
}

std::int64_t CongruenceSystem::row_value(int i, const Triple& xyz) const {
  std::int64_t v = 0;
  for (int j = 0; j < 3; ++j) v += rows[i][j] * residue(xyz[j], h);
  return residue(v, h);
}

bool CongruenceSystem::satisfied_by(const Triple& xyz) const {
  for (int i = 0; i < 3; ++i)
    if (row_value(i, xyz) != targets[i]) return false;
  return true;
}

Residues residues_abc(std::int64_t a, std::int64_t b, std::int64_t c) {
  check_positive(a, b, c);
  Residues r;
  r.delta = c * c - a * b;
  r.g = gcd64(a + b + c, r.delta);
  return r;
}

bool solvable_abc(std::int64_t a, std::int64_t b, std::int64_t c) { return residues_abc(a, b, c).g == 1; }

Triple special_solution(std::int64_t a, std::int64_t b, std::int64_t c) {
  const Residues r = residues_abc(a, b, c);
  const std::int64_t h = a + b + c;
  if (r.g != 1) fail(ErrorCode::NotCoprime, "gcd(a+b+c, c^2-ab) > 1");
  const std::int64_t inv = *mod_inverse(r.delta, h);
  return {residue((a + c) % h * inv, h), residue(-((a + b) % h) * inv, h), 0};
}

Triple general_solution(std::int64_t a, std::int64_t b, std::int64_t c, const Triple& targets) {
  const Triple s = special_solution(a, b, c);
  const std::int64_t h = a + b + c;
  if (residue(targets[0] + targets[1] + targets[2], h) != 0) {
    fail(ErrorCode::BadTargets, "targets must sum to 0 modulo a+b+c");
  }
  const std::int64_t r1 = residue(targets[0], h);
  const std::int64_t r3 = residue(targets[2], h);
  return {residue(r1 * s[0] - r3 * s[2], h), residue(r1 * s[1] - r3 * s[0], h), residue(r1 * s[2] - r3 * s[1], h)};
}

std::optional<Triple> brute_force_solve(const CongruenceSystem& sys) {
  const std::int64_t h = sys.h;
  if (h < 1) fail(ErrorCode::ZeroModulus, "modulus must be >= 1");
  for (std::int64_t x = 0; x < h; ++x) {
    for (std::int64_t y = 0; y < h; ++y) {
      for (std::int64_t z = 0; z < h; ++z) {
        const Triple t = {x, y, z};
        if (sys.satisfied_by(t)) return t;
      }
    }
  }
  return std::nullopt;
}

bool solvable_1bc(std::int64_t b, std::int64_t c, const Triple& targets) {
  return brute_force_solve(CongruenceSystem::abc(1, b, c, targets)).has_value();
}

Triple targets_1bc(std::int64_t b, std::int64_t c) {
  check_positive(1, b, c);
  const std::int64_t h = 1 + b + c;
  const std::int64_t r1 = (h + 2) / 3;
  const std::int64_t r2 = h / 3;
  return {r1, r2, h - r1 - r2};
}

std::optional<Triple> balancing_plan(std::int64_t a, std::int64_t b, std::int64_t c, const Triple& part_sizes) {
  check_positive(a, b, c);
  const std::int64_t h = a + b + c;
  if (residue(part_sizes[0] + part_sizes[1] + part_sizes[2], h) != 0) {
    fail(ErrorCode::BadSizes, "part sizes must sum to 0 modulo a+b+c");
  }
  const Triple r = {residue(part_sizes[0], h), residue(part_sizes[1], h), residue(part_sizes[2], h)};
  if (solvable_abc(a, b, c)) return general_solution(a, b, c, r);
  return brute_force_solve(CongruenceSystem::abc(a, b, c, r));
}

}  // namespace dtile
