#include "dtile/patterns.hpp"

#include <algorithm>
#include <sstream>

#include "dtile/error.hpp"

namespace dtile {

std::array<int, 3> Pattern::role_sizes() const {
  std::array<int, 3> s{0, 0, 0};
  if (roles) {
    for (Role r : *roles) ++s[static_cast<std::size_t>(r)];
  }
  return s;
}

Pattern transitive_tournament(int k) {
  if (k < 1) fail(ErrorCode::ZeroSize, "transitive tournament needs k >= 1");
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) b.add_edge(i, j);
  return {b.build(), std::nullopt, "TT" + std::to_string(k), Pattern::Shape::General};
}

Pattern directed_cycle(int l) {
  if (l < 3) fail(ErrorCode::TooSmall, "directed cycle needs at least 3 vertices");
  GraphBuilder b(l);
  for (int i = 0; i < l; ++i) b.add_edge(i, (i + 1) % l);
  // The triangle is D(1,1,1) and carries its roles.
  std::optional<std::vector<Role>> roles;
  if (l == 3) roles = std::vector<Role>{Role::A, Role::B, Role::C};
  return {b.build(), std::move(roles), "C" + std::to_string(l), Pattern::Shape::Cycle};
}

Pattern directed_path(int l) {
  if (l < 1) fail(ErrorCode::TooSmall, "directed path needs at least 1 vertex");
  GraphBuilder b(l);
  for (int i = 0; i + 1 < l; ++i) b.add_edge(i, i + 1);
  return {b.build(), std::nullopt, "P" + std::to_string(l), Pattern::Shape::Path};
}

Pattern power(const Pattern& base, int k) {
  if (k < 1) fail(ErrorCode::BadParameters, "power needs k >= 1");
  const int l = base.order();
  GraphBuilder b(l);
  switch (base.shape) {
    case Pattern::Shape::Cycle:
      if (l < 2 * k + 1) {
        fail(ErrorCode::NotOriented, "the k-th power of C" + std::to_string(l) + " has 2-cycles for k=" +
                                         std::to_string(k));
      }
      for (int i = 0; i < l; ++i)
        for (int s = 1; s <= k; ++s) b.add_edge(i, (i + s) % l);
      break;
    case Pattern::Shape::Path:
      for (int i = 0; i < l; ++i)
        for (int s = 1; s <= k && i + s < l; ++s) b.add_edge(i, i + s);
      break;
    case Pattern::Shape::General:
      fail(ErrorCode::BadPattern, "power is defined for directed cycles and paths only");
  }
  return {b.build(), std::nullopt, base.name + "^" + std::to_string(k), Pattern::Shape::General};
}

Pattern d_abc(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) fail(ErrorCode::ZeroPart, "every class of D(a,b,c) needs at least one vertex");
  const int n = a + b + c;
  const int start[4] = {0, a, a + b, n};
  GraphBuilder g(n);
  std::vector<Role> roles(static_cast<std::size_t>(n));
  for (int cls = 0; cls < 3; ++cls) {
    for (int i = start[cls]; i < start[cls + 1]; ++i) {
      roles[static_cast<std::size_t>(i)] = static_cast<Role>(cls);
      for (int j = i + 1; j < start[cls + 1]; ++j) g.add_edge(i, j);
      const int next = (cls + 1) % 3;
      for (int j = start[next]; j < start[next + 1]; ++j) g.add_edge(i, j);
    }
  }
  return {g.build(), std::move(roles),
          "D(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
          Pattern::Shape::General};
}

Pattern k4_minus() {
  GraphBuilder b(4);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 0).add_edge(2, 3).add_edge(3, 1);
  return {b.build(), std::nullopt, "K4-", Pattern::Shape::General};
}

std::array<int, 3> normalized(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

std::vector<int> parse_ints(const std::string& body, const std::string& spec) {
  std::vector<int> out;
  if (body.empty() || body.back() == ',') fail(ErrorCode::BadPattern, "bad argument list in pattern '" + spec + "'");
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::BadPattern, "bad integer in pattern '" + spec + "'");
    }
    if (used != tok.size()) fail(ErrorCode::BadPattern, "bad integer in pattern '" + spec + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Pattern parse_pattern(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::vector<int> args =
      colon == std::string::npos ? std::vector<int>{} : parse_ints(spec.substr(colon + 1), spec);
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      fail(ErrorCode::BadPattern, "pattern '" + spec + "' expects " + std::to_string(count) + " argument(s)");
    }
  };
  if (kind == "dabc") {
    want(3);
    return d_abc(args[0], args[1], args[2]);
  }
  if (kind == "tt") {
    want(1);
    return transitive_tournament(args[0]);
  }
  if (kind == "cyc") {
    want(1);
    return directed_cycle(args[0]);
  }
  if (kind == "path") {
    want(1);
    return directed_path(args[0]);
  }
  if (kind == "cycpow") {
    want(2);
    return power(directed_cycle(args[0]), args[1]);
  }
  if (kind == "pathpow") {
    want(2);
    return power(directed_path(args[0]), args[1]);
  }
  if (kind == "k4m") {
    want(0);
    return k4_minus();
  }
  fail(ErrorCode::BadPattern, "unknown pattern kind '" + kind + "'");
}

}  // namespace dtile
