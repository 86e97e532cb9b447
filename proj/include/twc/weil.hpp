#pragma once

// Weil-group parameter algebra for general linear groups: irreducible blocks
// over R and C, Langlands and Arthur parameters as canonical multisets, the
// Arthur-to-Langlands expansion, infinitesimal characters, duality and the
// sign-character twist.

#include <algorithm>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "twc/rational.hpp"

namespace twc {

enum class Flavor { Real, Complex };

// W(s, eps): one-dimensional real block.
struct WBlock {
  Rat s;
  int eps = 0;
  WBlock(Rat s_, int eps_) : s(s_), eps(eps_) {
    if (eps != 0 && eps != 1) throw input_error("W block: eps must be 0 or 1");
  }
  friend bool operator==(const WBlock&, const WBlock&) = default;
};

// V(s1, s2) with s2 - s1 a positive integer: two-dimensional real block.
struct VBlock {
  Rat s1, s2;
  VBlock(Rat a, Rat b) : s1(a), s2(b) {
    Rat d = s2 - s1;
    if (!d.is_integer() || d.num() <= 0)
      throw input_error("V block: s2 - s1 must be a positive integer");
  }
  friend bool operator==(const VBlock&, const VBlock&) = default;
};

// chi_{s1,s2} with s1 - s2 an integer: character of C^x.
struct ChiBlock {
  Rat s1, s2;
  ChiBlock(Rat a, Rat b) : s1(a), s2(b) {
    if (!(s1 - s2).is_integer()) throw input_error("chi block: s1 - s2 must be an integer");
  }
  friend bool operator==(const ChiBlock&, const ChiBlock&) = default;
};

using WeilIrrep = std::variant<WBlock, VBlock, ChiBlock>;

inline int irrep_dim(const WeilIrrep& r) { return std::holds_alternative<VBlock>(r) ? 2 : 1; }

inline Flavor irrep_flavor(const WeilIrrep& r) {
  return std::holds_alternative<ChiBlock>(r) ? Flavor::Complex : Flavor::Real;
}

// Canonical key: (variant rank, s or (s1,s2), eps).
inline std::tuple<int, Rat, Rat, int> irrep_key(const WeilIrrep& r) {
  if (auto* w = std::get_if<WBlock>(&r)) return {0, w->s, w->s, w->eps};
  if (auto* v = std::get_if<VBlock>(&r)) return {1, v->s1, v->s2, 0};
  auto& c = std::get<ChiBlock>(r);
  return {2, c.s1, c.s2, 0};
}

inline bool irrep_less(const WeilIrrep& a, const WeilIrrep& b) {
  return irrep_key(a) < irrep_key(b);
}

// Canonical two-dimensional representative with s2 - s1 > 0; equal
// parameters are reducible and rejected.
inline WeilIrrep normalize_two_dim(const Rat& s1, const Rat& s2) {
  if (s1 == s2) throw input_error("V(s,s) is reducible; split into W blocks");
  if (s2 < s1) return VBlock(s2, s1);
  return VBlock(s1, s2);
}

inline WeilIrrep dual(const WeilIrrep& r) {
  if (auto* w = std::get_if<WBlock>(&r)) return WBlock(-w->s, w->eps);
  if (auto* v = std::get_if<VBlock>(&r)) return normalize_two_dim(-v->s2, -v->s1);
  auto& c = std::get<ChiBlock>(r);
  return ChiBlock(-c.s2, -c.s1);
}

struct LanglandsParam {
  Flavor flavor = Flavor::Real;
  std::vector<WeilIrrep> blocks;  // canonically sorted

  LanglandsParam() = default;
  LanglandsParam(Flavor f, std::vector<WeilIrrep> bs) : flavor(f), blocks(std::move(bs)) {
    for (const auto& b : blocks)
      if (irrep_flavor(b) != flavor) throw input_error("parameter mixes real and complex blocks");
    std::sort(blocks.begin(), blocks.end(), irrep_less);
  }

  int dim() const {
    int d = 0;
    for (const auto& b : blocks) d += irrep_dim(b);
    return d;
  }
  friend bool operator==(const LanglandsParam&, const LanglandsParam&) = default;
};

struct ArthurBlock {
  WeilIrrep rep;
  int a = 1;  // SL(2) dimension
  ArthurBlock(WeilIrrep r, int a_) : rep(std::move(r)), a(a_) {
    if (a < 1) throw input_error("Arthur block: SL(2) dimension must be positive");
    if (auto* w = std::get_if<WBlock>(&rep)) {
      if (!w->s.is_zero()) throw input_error("Arthur W block must have s = 0");
    } else if (auto* v = std::get_if<VBlock>(&rep)) {
      if (!(v->s1 + v->s2).is_zero()) throw input_error("Arthur V block must have s1 + s2 = 0");
    } else {
      auto& c = std::get<ChiBlock>(rep);
      if (!(c.s1 + c.s2).is_zero()) throw input_error("Arthur chi block must have s1 + s2 = 0");
    }
  }
  friend bool operator==(const ArthurBlock&, const ArthurBlock&) = default;
};

struct ArthurParam {
  Flavor flavor = Flavor::Real;
  std::vector<ArthurBlock> blocks;

  ArthurParam() = default;
  ArthurParam(Flavor f, std::vector<ArthurBlock> bs) : flavor(f), blocks(std::move(bs)) {
    for (const auto& b : blocks)
      if (irrep_flavor(b.rep) != flavor) throw input_error("parameter mixes real and complex blocks");
    std::sort(blocks.begin(), blocks.end(), [](const ArthurBlock& x, const ArthurBlock& y) {
      auto kx = irrep_key(x.rep), ky = irrep_key(y.rep);
      if (kx < ky) return true;
      if (ky < kx) return false;
      return x.a < y.a;
    });
  }

  int dim() const {
    int d = 0;
    for (const auto& b : blocks) d += irrep_dim(b.rep) * b.a;
    return d;
  }
};

// Restriction to the Weil group along the principal arc: each block spreads
// into a ladder of irreducibles.
inline LanglandsParam phi_of_psi(const ArthurParam& psi) {
  std::vector<WeilIrrep> out;
  for (const auto& blk : psi.blocks) {
    int n = blk.a;
    if (auto* w = std::get_if<WBlock>(&blk.rep)) {
      for (int i = 1; i <= n; ++i) out.push_back(WBlock(w->s + half(n + 1) - Rat(i), w->eps));
    } else if (auto* v = std::get_if<VBlock>(&blk.rep)) {
      for (int i = 1; i <= n; ++i)
        out.push_back(VBlock(v->s1 - half(n + 1) + Rat(i), v->s2 - half(n + 1) + Rat(i)));
    } else {
      auto& c = std::get<ChiBlock>(blk.rep);
      for (int i = 1; i <= n; ++i) {
        Rat shift = Rat(i) - half(n + 1);
        out.push_back(ChiBlock(c.s1 + shift, c.s2 + shift));
      }
    }
  }
  return LanglandsParam(psi.flavor, std::move(out));
}

inline std::vector<Rat> infinitesimal_character(const LanglandsParam& p) {
  if (p.flavor != Flavor::Real) throw input_error("real infinitesimal character of complex parameter");
  std::vector<Rat> out;
  for (const auto& b : p.blocks) {
    if (auto* w = std::get_if<WBlock>(&b))
      out.push_back(w->s);
    else {
      auto& v = std::get<VBlock>(b);
      out.push_back(v.s1);
      out.push_back(v.s2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<Rat, Rat>> infinitesimal_character_complex(const LanglandsParam& p) {
  if (p.flavor != Flavor::Complex) throw input_error("complex infinitesimal character of real parameter");
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& b : p.blocks) {
    auto& c = std::get<ChiBlock>(b);
    out.emplace_back(c.s1, c.s2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::pair<bool, bool> is_integral_regular(const std::vector<Rat>& infchar) {
  bool integral = true, regular = true;
  for (std::size_t i = 0; i < infchar.size(); ++i)
    for (std::size_t j = i + 1; j < infchar.size(); ++j) {
      if (!(infchar[i] - infchar[j]).is_integer()) integral = false;
      if (infchar[i] == infchar[j]) regular = false;
    }
  return {integral, regular};
}

inline std::pair<bool, bool> is_integral_regular(const std::vector<std::pair<Rat, Rat>>& infchar) {
  bool integral = true, regular = true;
  for (std::size_t i = 0; i < infchar.size(); ++i)
    for (std::size_t j = i + 1; j < infchar.size(); ++j) {
      if (!(infchar[i].first - infchar[j].first).is_integer() ||
          !(infchar[i].second - infchar[j].second).is_integer())
        integral = false;
      if (infchar[i].first == infchar[j].first || infchar[i].second == infchar[j].second)
        regular = false;
    }
  return {integral, regular};
}

inline LanglandsParam dual(const LanglandsParam& p) {
  std::vector<WeilIrrep> out;
  out.reserve(p.blocks.size());
  for (const auto& b : p.blocks) out.push_back(dual(b));
  return LanglandsParam(p.flavor, std::move(out));
}

inline bool is_selfdual(const LanglandsParam& p) { return dual(p) == p; }

inline WeilIrrep twist_by_sign(const WeilIrrep& r) {
  if (auto* w = std::get_if<WBlock>(&r)) return WBlock(w->s, 1 - w->eps);
  if (std::holds_alternative<VBlock>(r)) return r;  // sgn tensor fixes V blocks
  throw input_error("sign twist is undefined for complex blocks");
}

inline LanglandsParam twist_by_sign(const LanglandsParam& p) {
  if (p.flavor != Flavor::Real) throw input_error("sign twist is undefined for complex parameters");
  std::vector<WeilIrrep> out;
  for (const auto& b : p.blocks) out.push_back(twist_by_sign(b));
  return LanglandsParam(p.flavor, std::move(out));
}

inline ArthurParam twist_by_sign(const ArthurParam& p) {
  if (p.flavor != Flavor::Real) throw input_error("sign twist is undefined for complex parameters");
  std::vector<ArthurBlock> out;
  for (const auto& b : p.blocks) out.emplace_back(twist_by_sign(b.rep), b.a);
  return ArthurParam(p.flavor, std::move(out));
}

}  // namespace twc
