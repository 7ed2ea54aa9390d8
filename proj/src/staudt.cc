// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vonstaudt/staudt.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "vonstaudt/error.h"

namespace vonstaudt {

std::string GroundElement::Name() const {
  switch (kind) {
    case Kind::kO:
      return "O";
    case Kind::kXInf:
      return "xinf";
    case Kind::kYInf:
      return "yinf";
    case Kind::kX:
      return "x" + std::to_string(index);
    case Kind::kY:
      return "y" + std::to_string(index);
    case Kind::kZ:
      return "z" + std::to_string(index);
    case Kind::kR:
      return "r" + std::to_string(index);
  }
  return "?";
}

GroundElement GroundElement::Parse(std::string_view name) {
  if (name == "O") return O();
  if (name == "xinf") return XInf();
  if (name == "yinf") return YInf();
  if (name.size() >= 2 && name.size() <= 10 &&
      std::string_view("xyzr").find(name[0]) != std::string_view::npos &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char ch) { return ch >= '0' && ch <= '9'; }) &&
      (name.size() == 2 || name[1] != '0')) {
    std::uint32_t idx = static_cast<std::uint32_t>(std::stoul(std::string(name.substr(1))));
    switch (name[0]) {
      case 'x':
        return X(idx);
      case 'y':
        return Y(idx);
      case 'z':
        return Z(idx);
      default:
        return R(idx);
    }
  }
  throw FormatError("unknown ground element '" + std::string(name) + "'");
}

namespace {

bool CircuitLess(const Circuit& a, const Circuit& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool Subset(const Circuit& a, const Circuit& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Circuit Sorted(std::initializer_list<std::uint32_t> xs) {
  Circuit c(xs);
  std::sort(c.begin(), c.end());
  return c;
}

// Calls f on every k-subset of positions [0, n) in lexicographic order until
// f returns false.
template <typename F>
bool ForEachSubset(std::uint32_t n, std::uint32_t k, F&& f) {
  if (k > n) return true;
  Circuit s(k);
  std::iota(s.begin(), s.end(), 0u);
  for (;;) {
    if (!f(s)) return false;
    int t = static_cast<int>(k) - 1;
    while (t >= 0 && s[t] == n - k + t) --t;
    if (t < 0) return true;
    ++s[t];
    for (std::uint32_t u = t + 1; u < k; ++u) s[u] = s[u - 1] + 1;
  }
}

}  // namespace

Matroid::Matroid(std::vector<GroundElement> ground, std::vector<Circuit> circuits,
                 bool rank3_closure)
    : ground_(std::move(ground)), circuits_(std::move(circuits)), closure_(rank3_closure) {
  std::set<GroundElement> seen(ground_.begin(), ground_.end());
  if (seen.size() != ground_.size()) throw InvalidArgument("repeated ground element");
  for (auto& c : circuits_) {
    if (c.empty()) throw InvalidArgument("empty circuit");
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
      throw InvalidArgument("circuit with a repeated element");
    }
    if (c.back() >= ground_.size()) throw InvalidArgument("circuit element out of range");
  }
  std::sort(circuits_.begin(), circuits_.end(), CircuitLess);
  circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
}

std::optional<std::uint32_t> Matroid::Position(const GroundElement& e) const {
  auto it = std::find(ground_.begin(), ground_.end(), e);
  if (it == ground_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - ground_.begin());
}

std::uint32_t Matroid::PositionOrThrow(const GroundElement& e) const {
  auto p = Position(e);
  if (!p) throw InvalidArgument("element " + e.Name() + " not in the ground set");
  return *p;
}

bool Matroid::IsDependent(const Circuit& subset) const {
  if (closure_ && subset.size() >= 4) return true;
  for (const auto& c : circuits_) {
    if (c.size() > subset.size()) break;
    if (Subset(c, subset)) return true;
  }
  return false;
}

bool Matroid::IsCircuit(const Circuit& subset) const {
  if (subset.empty() || !IsDependent(subset)) return false;
  for (std::size_t t = 0; t < subset.size(); ++t) {
    Circuit rest = subset;
    rest.erase(rest.begin() + t);
    if (IsDependent(rest)) return false;
  }
  return true;
}

std::string Matroid::Describe(const Circuit& c) const {
  std::string out = "{";
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (t) out += ",";
    out += ground_.at(c[t]).Name();
  }
  return out + "}";
}

std::vector<GroundElement> StaudtGround(const AtomicSystem& p) {
  std::uint32_t n = p.N();
  std::vector<GroundElement> g = {GroundElement::O(), GroundElement::XInf(),
                                  GroundElement::YInf()};
  for (std::uint32_t i = 1; i <= n; ++i) g.push_back(GroundElement::X(i));
  for (std::uint32_t i = 1; i <= n; ++i) g.push_back(GroundElement::Y(i));
  for (std::uint32_t i = 1; i <= n; ++i) g.push_back(GroundElement::Z(i));
  for (std::uint32_t k : p.AddThirdSlots()) g.push_back(GroundElement::R(k));
  return g;
}

CircuitFamily BuildCircuits(const AtomicSystem& p, UnitCircuits unit) {
  const std::uint32_t n = p.N();
  std::vector<GroundElement> ground = StaudtGround(p);
  const std::uint32_t kO = 0, kXInf = 1, kYInf = 2;
  auto x = [&](std::uint32_t i) { return i == 0 ? kO : 3 + (i - 1); };
  auto y = [&](std::uint32_t i) { return i == 0 ? kO : 3 + n + (i - 1); };
  auto z = [&](std::uint32_t i) { return i == 0 ? kYInf : 3 + 2 * n + (i - 1); };
  std::map<std::uint32_t, std::uint32_t> r;
  for (std::uint32_t t = 3 + 3 * n; t < ground.size(); ++t) r[ground[t].index] = t;

  std::vector<Circuit> circuits;
  auto add_line = [&](std::vector<std::uint32_t> pts) {
    ForEachSubset(static_cast<std::uint32_t>(pts.size()), 3, [&](const Circuit& s) {
      circuits.push_back(Sorted({pts[s[0]], pts[s[1]], pts[s[2]]}));
      return true;
    });
  };
  std::vector<std::uint32_t> xl = {kO, kXInf}, yl = {kO, kYInf}, zl = {kXInf, kYInf};
  for (std::uint32_t i = 1; i <= n; ++i) {
    xl.push_back(x(i));
    yl.push_back(y(i));
    zl.push_back(z(i));
  }
  add_line(xl);
  add_line(yl);
  add_line(zl);

  for (const auto& e : p.equations()) {
    if (e.op == AtomicEquation::Op::kMul) {
      circuits.push_back(Sorted({x(e.i), y(e.k), z(e.j)}));
    } else {
      std::uint32_t rk = r.at(e.k);
      circuits.push_back(Sorted({y(1), rk, kXInf}));
      circuits.push_back(Sorted({x(e.k), rk, kYInf}));
      circuits.push_back(Sorted({x(e.i), rk, z(e.j)}));
    }
  }
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (unit == UnitCircuits::kLeftUnit || unit == UnitCircuits::kBoth) {
      circuits.push_back(Sorted({x(i), y(i), z(1)}));
    }
    if (unit == UnitCircuits::kRightUnit || unit == UnitCircuits::kBoth) {
      circuits.push_back(Sorted({x(i), y(1), z(i)}));
    }
  }
  return CircuitFamily(std::move(ground), std::move(circuits), true);
}

MatroidCheck CheckMatroid(const CircuitFamily& c) {
  const auto& cs = c.circuits();
  MatroidCheck out;
  // Antichain among explicit circuits.
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i].size() < cs[j].size() && Subset(cs[i], cs[j])) {
        out.is_matroid = false;
        out.first = cs[i];
        out.second = cs[j];
        return out;
      }
    }
  }
  // Under the closure an explicit circuit of size >= 5 contains a dependent
  // 4-subset, which is then an implicit circuit inside it.
  if (c.rank3_closure()) {
    for (const auto& big : cs) {
      if (big.size() < 5) continue;
      Circuit inner;
      ForEachSubset(static_cast<std::uint32_t>(big.size()), 4, [&](const Circuit& s) {
        Circuit sub = {big[s[0]], big[s[1]], big[s[2]], big[s[3]]};
        if (c.IsCircuit(sub)) {
          inner = sub;
          return false;
        }
        return true;
      });
      out.is_matroid = false;
      out.first = inner;
      out.second = big;
      return out;
    }
  }

  // Circuit elimination. With the closure every set of size >= 4 is
  // dependent, so only explicit pairs whose union has at most 4 elements
  // can fail; an implicit circuit meets any other circuit in a union of at
  // least 5 elements.
  std::vector<std::vector<std::uint32_t>> by_element(c.ground().size());
  for (std::uint32_t t = 0; t < cs.size(); ++t) {
    for (std::uint32_t e : cs[t]) by_element[e].push_back(t);
  }
  for (std::uint32_t i = 0; i < cs.size(); ++i) {
    std::set<std::uint32_t> partners;
    for (std::uint32_t e : cs[i]) {
      for (std::uint32_t j : by_element[e]) {
        if (j > i) partners.insert(j);
      }
    }
    for (std::uint32_t j : partners) {
      Circuit uni, both;
      std::set_union(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(),
                     std::back_inserter(uni));
      if (c.rank3_closure() && uni.size() > 4) continue;
      std::set_intersection(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(),
                            std::back_inserter(both));
      std::vector<std::uint32_t> pivots;
      for (std::uint32_t e : both) {
        Circuit rest;
        std::remove_copy(uni.begin(), uni.end(), std::back_inserter(rest), e);
        if (!c.IsDependent(rest)) pivots.push_back(e);
      }
      if (!pivots.empty()) {
        out.is_matroid = false;
        out.first = cs[i];
        out.second = cs[j];
        out.pivots = std::move(pivots);
        return out;
      }
    }
  }
  return out;
}

std::size_t RankOf(const Matroid& m, const Circuit& subset) {
  Circuit s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (std::uint32_t e : s) {
    if (e >= m.ground().size()) throw InvalidArgument("subset element out of range");
  }
  std::size_t cap = m.rank3_closure() ? std::min<std::size_t>(3, s.size()) : s.size();
  std::size_t best = 0;
  Circuit cur;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    best = std::max(best, cur.size());
    if (best == cap) return;
    for (std::size_t t = start; t < s.size() && best < cap; ++t) {
      cur.push_back(s[t]);
      if (!m.IsDependent(cur)) self(self, t + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

namespace {

void CheckSameGround(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) throw InvalidArgument("ground sets differ");
}

}  // namespace

bool IsWeakImage(const Matroid& candidate, const CircuitFamily& of) {
  CheckSameGround(candidate, of);
  for (const auto& c : of.circuits()) {
    if (!candidate.IsDependent(c)) return false;
  }
  if (!of.rank3_closure() || candidate.rank3_closure()) return true;
  return ForEachSubset(static_cast<std::uint32_t>(of.ground().size()), 4,
                       [&](const Circuit& s) {
                         return !of.IsCircuit(s) || candidate.IsDependent(s);
                       });
}

FamilyCheck InFamily(const Matroid& candidate, const AtomicSystem& p,
                     UnitCircuits unit) {
  CircuitFamily mp = BuildCircuits(p, unit);
  CheckSameGround(candidate, mp);
  FamilyCheck out;
  auto fail = [&](int cond, std::string msg) {
    out.member = false;
    out.failures.emplace_back(cond, std::move(msg));
  };

  MatroidCheck mc = CheckMatroid(candidate);
  if (!mc.is_matroid) {
    fail(0, "candidate violates the circuit axioms at " + candidate.Describe(*mc.first) +
                ", " + candidate.Describe(*mc.second));
  } else if (!IsWeakImage(candidate, mp)) {
    fail(0, "candidate is not a weak image of the system's circuit family");
  }

  for (const auto& c : candidate.circuits()) {
    if (c.size() == 1) {
      fail(1, "loop at " + candidate.ground()[c[0]].Name());
      break;
    }
  }

  Circuit frame = {candidate.PositionOrThrow(GroundElement::O()),
                   candidate.PositionOrThrow(GroundElement::X(1)),
                   candidate.PositionOrThrow(GroundElement::Y(1)),
                   candidate.PositionOrThrow(GroundElement::XInf()),
                   candidate.PositionOrThrow(GroundElement::YInf())};
  std::sort(frame.begin(), frame.end());
  for (unsigned mask = 1; mask < 32; ++mask) {
    Circuit s;
    for (unsigned t = 0; t < 5; ++t) {
      if (mask >> t & 1) s.push_back(frame[t]);
    }
    if (candidate.IsCircuit(s) != mp.IsCircuit(s)) {
      fail(2, "frame subset " + candidate.Describe(s) +
                  (mp.IsCircuit(s) ? " should be a circuit" : " should not be a circuit"));
      break;
    }
  }

  std::uint32_t xinf = candidate.PositionOrThrow(GroundElement::XInf());
  for (std::uint32_t i = 1; i <= p.N(); ++i) {
    std::uint32_t xi = candidate.PositionOrThrow(GroundElement::X(i));
    if (candidate.IsCircuit(Sorted({xi, xinf}))) {
      fail(3, "x" + std::to_string(i) + " is parallel to xinf");
      break;
    }
  }
  return out;
}

Matroid Simplify(const Matroid& m) {
  const std::size_t n = m.ground().size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& c : m.circuits()) {
    if (c.size() == 1) {
      throw InvalidArgument("cannot simplify: loop at " + m.ground()[c[0]].Name());
    }
    if (c.size() == 2) {
      std::uint32_t a = find(c[0]), b = find(c[1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::int64_t> remap(n, -1);
  std::vector<GroundElement> ground;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (find(e) == e) {
      remap[e] = static_cast<std::int64_t>(ground.size());
      ground.push_back(m.ground()[e]);
    }
  }
  std::vector<Circuit> circuits;
  for (const auto& c : m.circuits()) {
    Circuit mapped;
    for (std::uint32_t e : c) {
      if (remap[e] < 0) break;
      mapped.push_back(static_cast<std::uint32_t>(remap[e]));
    }
    if (mapped.size() == c.size()) circuits.push_back(std::move(mapped));
  }
  return Matroid(std::move(ground), std::move(circuits), m.rank3_closure());
}

}  // namespace vonstaudt
