#pragma once

// Classical and unitary group data, parameter validation, Levi and q-value
// bookkeeping, and the two independently computed expansions of the twisted
// trace of the representation attached to a parameter: a flat product of
// twisted ladder sums, and the transfer-side recursion whose signs come from
// orbit lengths of clans.  The exact equality of the two formal characters is
// the main identity this library verifies.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "twc/clan.hpp"
#include "twc/standard.hpp"

namespace twc {

struct GroupDatum {
  Family family = Family::A;
  int rank = 0;  // cases A-D
  int N = 0;     // ambient general linear size

  static GroupDatum classical(Family f, int rank) {
    if (f == Family::U) throw input_error("unitary groups are built from N, not rank");
    if (rank < 1) throw input_error("group rank must be positive");
    GroupDatum g;
    g.family = f;
    g.rank = rank;
    g.N = f == Family::A ? 2 * rank + 1 : 2 * rank;
    return g;
  }
  static GroupDatum unitary(int N) {
    if (N < 1) throw input_error("unitary N must be positive");
    GroupDatum g;
    g.family = Family::U;
    g.rank = N;
    g.N = N;
    return g;
  }
  // Quasi-split unitary signature (b, c), |b - c| <= 1.
  int b() const { return N / 2; }
  int c() const { return N - N / 2; }
};

struct SpehBlockSpec {
  long long p = 0;
  int n = 0;  // rank of the block (N_i in the unitary case)
};

struct TailSpec {
  int rank = 0;
  std::vector<int> eps;  // one bit (A, B), two bits (C, D)
};

struct AJParameter {
  Family family = Family::A;
  std::vector<SpehBlockSpec> blocks;
  std::optional<TailSpec> tail;
};

// ---------------------------------------------------------------------------
// q values and signs.

inline long long q_unitary(int p, int q) { return static_cast<long long>(p) * q; }
inline long long q_symplectic(int n) { return static_cast<long long>(n) * (n + 1) / 2; }
inline long long q_special_orthogonal(int p, int q) {
  return static_cast<long long>(p) * q / 2;
}
inline long long q_gl_complex(int N) { return static_cast<long long>(N) * (N - 1) / 2; }

inline int kottwitz_sign(long long q_inner, long long q_quasisplit) {
  return (q_quasisplit - q_inner) % 2 == 0 ? 1 : -1;
}

struct LeviFactor {
  std::string kind;  // "U", "Sp", "SO"
  int b = 0, c = 0;
  long long q = 0;
};

struct LeviData {
  std::vector<LeviFactor> factors;
  long long q_star = 0;
};

inline int odd_block_count(const AJParameter& psi) {
  int odd = 0;
  for (const auto& b : psi.blocks)
    if (b.n % 2 != 0) ++odd;
  return odd;
}

// Quasi-split Levi attached to a parameter: balanced unitary factors, one per
// block, plus the tail factor.  For even orthogonal tails the inner class
// (split or not) is pinned by the signature parity of the ambient group.
inline LeviData levi_quasisplit(const GroupDatum& g, const AJParameter& psi) {
  LeviData out;
  for (const auto& blk : psi.blocks) {
    LeviFactor f;
    f.kind = "U";
    f.b = blk.n / 2;
    f.c = blk.n - blk.n / 2;
    f.q = q_unitary(f.b, f.c);
    out.factors.push_back(f);
    out.q_star += f.q;
  }
  int r = psi.tail ? psi.tail->rank : 0;
  if (g.family == Family::A) {
    LeviFactor f{"Sp", r, r, q_symplectic(r)};
    out.factors.push_back(f);
    out.q_star += f.q;
  } else if (g.family == Family::B && r >= 1) {
    LeviFactor f{"SO", r, r + 1, q_special_orthogonal(r, r + 1)};
    out.factors.push_back(f);
    out.q_star += f.q;
  } else if ((g.family == Family::C || g.family == Family::D) && r >= 1) {
    int beta = (g.rank - (g.family == Family::D ? 1 : 0)) % 2;
    LeviFactor f;
    f.kind = "SO";
    if (r % 2 == beta) {
      f.b = r;
      f.c = r;
    } else {
      f.b = r - 1;
      f.c = r + 1;
    }
    f.q = q_special_orthogonal(f.b, f.c);
    out.factors.push_back(f);
    out.q_star += f.q;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Composition with the standard representation of the dual group.

inline ArthurParam std_compose(const GroupDatum& g, const AJParameter& psi) {
  std::vector<ArthurBlock> blocks;
  if (g.family == Family::U) {
    for (const auto& b : psi.blocks)
      blocks.emplace_back(ChiBlock(Rat(-b.p, 2), Rat(b.p, 2)), b.n);
    return ArthurParam(Flavor::Complex, std::move(blocks));
  }
  for (const auto& b : psi.blocks)
    blocks.emplace_back(VBlock(Rat(-b.p, 2), Rat(b.p, 2)), b.n);
  int r = psi.tail ? psi.tail->rank : 0;
  std::vector<int> eps = psi.tail ? psi.tail->eps : std::vector<int>{};
  switch (g.family) {
    case Family::A:
      blocks.emplace_back(WBlock(Rat(0), eps.empty() ? odd_block_count(psi) % 2 : eps[0]),
                          2 * r + 1);
      break;
    case Family::B:
      if (r >= 1) blocks.emplace_back(WBlock(Rat(0), eps.at(0)), 2 * r);
      break;
    case Family::C:
    case Family::D:
      if (r >= 1) {
        blocks.emplace_back(WBlock(Rat(0), eps.at(0)), 2 * r - 1);
        blocks.emplace_back(WBlock(Rat(0), eps.at(1)), 1);
      }
      break;
    case Family::U:
      break;
  }
  return ArthurParam(Flavor::Real, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Validation.

namespace detail {

inline std::vector<Rat> flatten_infchar(const ArthurParam& psi) {
  LanglandsParam phi = phi_of_psi(psi);
  if (psi.flavor == Flavor::Real) return infinitesimal_character(phi);
  std::vector<Rat> out;
  for (const auto& [a, b] : infinitesimal_character_complex(phi)) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

}  // namespace detail

// Sorts blocks by decreasing p and fills in the forced tail data.  Call
// validate_aj before trusting the result.
inline AJParameter normalized_aj(const GroupDatum& g, AJParameter psi) {
  psi.family = g.family;
  std::sort(psi.blocks.begin(), psi.blocks.end(),
            [](const SpehBlockSpec& a, const SpehBlockSpec& b) { return a.p > b.p; });
  if (g.family == Family::A) {
    int eps = odd_block_count(psi) % 2;
    if (!psi.tail) psi.tail = TailSpec{0, {eps}};
    if (psi.tail->eps.empty()) psi.tail->eps = {eps};
  } else if (g.family != Family::U && psi.tail && psi.tail->rank == 0) {
    psi.tail.reset();
  }
  return psi;
}

inline std::vector<std::string> validate_aj(const GroupDatum& g, const AJParameter& psi) {
  std::vector<std::string> errors;
  auto err = [&](const std::string& m) { errors.push_back(m); };

  if (psi.family != g.family) err("parameter family does not match the group");
  bool unitary = g.family == Family::U;

  int total = 0;
  for (const auto& b : psi.blocks) {
    total += b.n;
    if (b.n < 1) err("block rank must be positive");
    if (b.p < 1) err("block parameter p must be a positive integer");
    if (unitary) {
      if (b.p % 2 != 0) err("unitary block p must be even: p=" + std::to_string(b.p));
      if (!(b.p > b.n - 1))
        err("unitary block needs p > N_i - 1: p=" + std::to_string(b.p) +
            ", N_i=" + std::to_string(b.n));
    } else {
      bool want_odd = g.family != Family::B;
      if (((b.p + b.n) % 2 != 0) != want_odd)
        err("block parity violated: p=" + std::to_string(b.p) + ", n=" + std::to_string(b.n));
      if (b.p < b.n - 1)
        err("block needs p >= n - 1: p=" + std::to_string(b.p) + ", n=" + std::to_string(b.n));
    }
  }
  for (std::size_t i = 0; i < psi.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < psi.blocks.size(); ++j)
      if (psi.blocks[i].p == psi.blocks[j].p)
        err("block parameters p_i must be distinct: p=" + std::to_string(psi.blocks[i].p));

  int tail_rank = psi.tail ? psi.tail->rank : 0;
  if (tail_rank < 0) err("tail rank must be nonnegative");

  if (unitary) {
    if (psi.tail) err("unitary parameters have no tail block");
    if (total != g.N) err("block sizes must sum to N");
  } else {
    if (total + tail_rank != g.rank) err("block ranks plus tail rank must sum to the group rank");
  }

  int odd = odd_block_count(psi);
  switch (g.family) {
    case Family::A: {
      if (psi.tail && !psi.tail->eps.empty()) {
        if (psi.tail->eps.size() != 1 || (psi.tail->eps[0] != 0 && psi.tail->eps[0] != 1))
          err("tail eps must be a single bit");
        else if (psi.tail->eps[0] != odd % 2)
          err("tail eps is forced by the odd-block count");
      }
      break;
    }
    case Family::B: {
      if (tail_rank >= 1) {
        if (!psi.tail || psi.tail->eps.size() != 1 ||
            (psi.tail->eps[0] != 0 && psi.tail->eps[0] != 1))
          err("tail eps must be a single bit");
      }
      break;
    }
    case Family::C:
    case Family::D: {
      bool want_mixed = (odd % 2 == 1) == (g.family == Family::C);
      if (tail_rank >= 1) {
        if (!psi.tail || psi.tail->eps.size() != 2 ||
            (psi.tail->eps[0] != 0 && psi.tail->eps[0] != 1) ||
            (psi.tail->eps[1] != 0 && psi.tail->eps[1] != 1)) {
          err("tail eps must be a pair of bits");
        } else {
          bool mixed = psi.tail->eps[0] != psi.tail->eps[1];
          if (mixed != want_mixed) err("tail eps pair does not match the odd-block parity");
        }
      } else {
        bool want_odd_count = g.family == Family::D;
        if ((odd % 2 == 1) != want_odd_count)
          err("odd-block count parity does not match the group family");
      }
      break;
    }
    case Family::U:
      break;
  }
  if (!errors.empty()) return errors;

  // Dominance: each block must strictly dominate everything to its right.
  AJParameter sorted = normalized_aj(g, psi);
  for (std::size_t i = 0; i < sorted.blocks.size(); ++i) {
    AJParameter rest = sorted;
    rest.blocks.erase(rest.blocks.begin(), rest.blocks.begin() + i + 1);
    if (rest.blocks.empty() && (!rest.tail || rest.tail->rank == 0) && g.family != Family::A)
      break;
    std::vector<Rat> residual = detail::flatten_infchar(std_compose(g, rest));
    if (!residual.empty() && !speh_dominates(sorted.blocks[i].p, sorted.blocks[i].n, residual)) {
      err("ordering hypothesis fails at block p=" + std::to_string(sorted.blocks[i].p) +
          ", n=" + std::to_string(sorted.blocks[i].n));
      return errors;
    }
  }

  // Infinitesimal character: integral, and regular on the group side (even
  // orthogonal groups tolerate a single zero pair).
  ArthurParam composed = std_compose(g, sorted);
  if (g.family == Family::U) {
    auto infc = infinitesimal_character_complex(phi_of_psi(composed));
    auto [integral, regular] = is_integral_regular(infc);
    if (!integral) err("infinitesimal character is not integral");
    if (!regular) err("infinitesimal character is not regular");
  } else {
    auto infc = infinitesimal_character(phi_of_psi(composed));
    auto [integral, _] = is_integral_regular(infc);
    if (!integral) err("infinitesimal character is not integral");
    int zeros = 0;
    bool dup_nonzero = false;
    for (std::size_t i = 0; i < infc.size(); ++i) {
      if (infc[i].is_zero()) ++zeros;
      if (i + 1 < infc.size() && infc[i] == infc[i + 1] && !infc[i].is_zero()) dup_nonzero = true;
    }
    bool zeros_ok = (g.family == Family::C || g.family == Family::D) ? zeros <= 2 : zeros <= 1;
    if (dup_nonzero || !zeros_ok) err("infinitesimal character is not regular");
  }
  return errors;
}

inline AJParameter validated_aj(const GroupDatum& g, const AJParameter& psi) {
  auto errors = validate_aj(g, psi);
  if (!errors.empty()) {
    std::string msg = "invalid parameter:";
    for (const auto& e : errors) msg += " " + e + ";";
    throw input_error(msg);
  }
  return normalized_aj(g, psi);
}

// ---------------------------------------------------------------------------
// Transfer of one involution: the ladder module X(w0 s) together with the
// Vogan length of its parameter, computed through the orbit length of the
// clan with underlying involution s on the quasi-split unitary group.

inline long long vogan_length_via_clan(const Perm& s, int n) {
  int b = n / 2, c = n - n / 2;
  Clan cl = clan_from_involution(s, b, c);
  long long dim_flag = static_cast<long long>(n) * (n - 1) / 2;
  return clan_length(cl) - dim_flag + q_unitary(b, c);
}

inline std::pair<StandardModule, long long> transfer_of_involution(const Perm& s, int n,
                                                                   long long p, Flavor flavor) {
  if (!s.is_involution()) throw input_error("transfer_of_involution: not an involution");
  Perm w0s = compose(Perm::longest(n), s);
  StandardModule m = flavor == Flavor::Real ? X_of(w0s, n, p) : X_complex(w0s, n, p);
  return {std::move(m), vogan_length_via_clan(s, n)};
}

// Transfer-side expansion of one Speh block: global sign from the balanced
// unitary q value, term signs from clan-side Vogan lengths.
inline FormalCharacter speh_elementary_expansion(Flavor flavor, int n, long long p) {
  long long qstar = q_unitary(n / 2, n - n / 2);
  FormalCharacter out(flavor);
  for (const auto& s : involutions(n)) {
    auto [m, lv] = transfer_of_involution(s, n, p, flavor);
    long long expo = qstar + lv;
    out.add(TwistedSymbol{std::move(m), std::nullopt}, expo % 2 == 0 ? 1 : -1);
  }
  return out;
}

// The tail contribution as a formal character.  Rank zero in the odd case is
// a plain character symbol; positive rank is an opaque atom.  For split-tail
// families the atom's tag is normalized to the group the tail character
// lands on after the full reduction: equal bits tag C, mixed bits tag D.
inline FormalCharacter tail_expansion(Family family, const std::optional<TailSpec>& tail) {
  Flavor flavor = family == Family::U ? Flavor::Complex : Flavor::Real;
  int r = tail ? tail->rank : 0;
  if (family == Family::U || (r == 0 && family != Family::A))
    return FormalCharacter::unit(flavor);
  FormalCharacter out(flavor);
  if (family == Family::A && r == 0) {
    StandardModule m(Flavor::Real, {GammaDS(Rat(0), tail->eps.at(0))});
    out.add(TwistedSymbol{std::move(m), std::nullopt}, 1);
    return out;
  }
  TailAtom atom{family, r, tail->eps};
  if (family == Family::C || family == Family::D)
    atom.family = tail->eps.at(0) == tail->eps.at(1) ? Family::C : Family::D;
  out.add(TwistedSymbol{StandardModule(Flavor::Real, {}), std::move(atom)}, 1);
  return out;
}

namespace detail {

// Strip the dominant block; odd block rank swaps the even orthogonal
// families and twists the residual tail bits.
inline std::pair<Family, AJParameter> residual_parameter(const GroupDatum& g,
                                                         const AJParameter& psi) {
  const SpehBlockSpec& head = psi.blocks.front();
  AJParameter rest = psi;
  rest.blocks.erase(rest.blocks.begin());
  Family fam = g.family;
  if (g.family != Family::U && head.n % 2 != 0) {
    if (fam == Family::C)
      fam = Family::D;
    else if (fam == Family::D)
      fam = Family::C;
    if (rest.tail)
      for (int& e : rest.tail->eps) e = 1 - e;
  }
  rest.family = fam;
  return {fam, rest};
}

}  // namespace detail

// Transfer-route expansion: peel the dominant block, expand it through the
// clan-side signs, recurse on the residual group (with the sign twist for
// odd block rank), and multiply.
inline FormalCharacter composite_expansion(const GroupDatum& g, const AJParameter& psi_in) {
  AJParameter psi = validated_aj(g, psi_in);
  Flavor flavor = g.family == Family::U ? Flavor::Complex : Flavor::Real;
  if (psi.blocks.empty()) return tail_expansion(g.family, psi.tail);

  const SpehBlockSpec head = psi.blocks.front();
  FormalCharacter head_fc = speh_elementary_expansion(flavor, head.n, head.p);
  auto [fam2, rest] = detail::residual_parameter(g, psi);

  FormalCharacter rest_fc(flavor);
  if (rest.blocks.empty()) {
    rest_fc = tail_expansion(fam2, rest.tail);
  } else if (flavor == Flavor::Complex) {
    rest_fc = composite_expansion(GroupDatum::unitary(g.N - head.n), rest);
  } else {
    int rest_rank = rest.tail ? rest.tail->rank : 0;
    for (const auto& b : rest.blocks) rest_rank += b.n;
    rest_fc = composite_expansion(GroupDatum::classical(fam2, rest_rank), rest);
  }
  if (flavor == Flavor::Real && head.n % 2 != 0) rest_fc = twist_by_sign(rest_fc);
  return product(head_fc, rest_fc);
}

// Direct-route expansion: the product of the per-block twisted ladder sums,
// with the cumulative sign twist applied to everything right of each
// odd-rank block, times the tail symbol.
inline FormalCharacter lhs_expansion(const GroupDatum& g, const AJParameter& psi_in) {
  AJParameter psi = validated_aj(g, psi_in);
  Flavor flavor = g.family == Family::U ? Flavor::Complex : Flavor::Real;
  FormalCharacter acc = FormalCharacter::unit(flavor);
  int twist_parity = 0;
  for (const auto& blk : psi.blocks) {
    FormalCharacter f = flavor == Flavor::Real ? twisted_speh(blk.n, blk.p)
                                               : twisted_speh_complex(blk.n, blk.p);
    if (twist_parity % 2 != 0) f = twist_by_sign(f);
    acc = product(acc, f);
    if (flavor == Flavor::Real) twist_parity ^= blk.n & 1;
  }
  return product(acc, tail_expansion(g.family, psi.tail));
}

// ---------------------------------------------------------------------------
// Dual-route verification.

struct WitnessRow {
  Perm s;
  int theta_len = 0;
  long long vogan_len = 0;
  long long q_star = 0;
  int lhs_exponent = 0;
  int rhs_exponent = 0;
  bool ok = false;
};

struct VerifyReport {
  bool match = false;
  bool infchar_ok = false;
  bool selfdual_ok = false;
  bool signs_ok = true;
  long long q_star = 0;
  FormalCharacter lhs{Flavor::Real};
  FormalCharacter rhs{Flavor::Real};
  FormalCharacter diff{Flavor::Real};
  std::vector<WitnessRow> witness_table;

  bool pass() const { return match && infchar_ok && selfdual_ok && signs_ok; }
};

inline VerifyReport verify_main_identity(const GroupDatum& g, const AJParameter& psi_in) {
  AJParameter psi = validated_aj(g, psi_in);
  VerifyReport rep;
  rep.lhs = lhs_expansion(g, psi);
  rep.rhs = composite_expansion(g, psi);
  rep.diff = rep.lhs - rep.rhs;
  rep.match = rep.diff.empty();
  rep.q_star = levi_quasisplit(g, psi).q_star;

  // Infinitesimal-character homogeneity: every symbol carries the ladder
  // union of the non-opaque part of the parameter.
  std::vector<ArthurBlock> visible;
  for (const auto& b : psi.blocks) {
    if (g.family == Family::U)
      visible.emplace_back(ChiBlock(Rat(-b.p, 2), Rat(b.p, 2)), b.n);
    else
      visible.emplace_back(VBlock(Rat(-b.p, 2), Rat(b.p, 2)), b.n);
  }
  if (g.family == Family::A && psi.tail->rank == 0)
    visible.emplace_back(WBlock(Rat(0), psi.tail->eps.at(0)), 1);

  rep.infchar_ok = true;
  rep.selfdual_ok = true;
  if (g.family == Family::U) {
    // The two coordinates are independent Weyl orbits for GL(N,C).
    auto expected = split_complex_infchar(
        infinitesimal_character_complex(phi_of_psi(ArthurParam(Flavor::Complex, visible))));
    for (const auto& [sym, _] : rep.lhs.terms()) {
      if (split_complex_infchar(standard_infchar_complex(sym.standard)) != expected)
        rep.infchar_ok = false;
      if (!is_selfdual(sym.standard)) rep.selfdual_ok = false;
    }
  } else {
    auto expected = infinitesimal_character(phi_of_psi(ArthurParam(Flavor::Real, visible)));
    for (const auto& [sym, _] : rep.lhs.terms()) {
      if (standard_infchar_real(sym.standard) != expected) rep.infchar_ok = false;
      if (!is_selfdual(sym.standard)) rep.selfdual_ok = false;
    }
  }

  // Elementary case: check the sign congruence witness by witness.
  if (psi.blocks.size() == 1 && (!psi.tail || psi.tail->rank == 0)) {
    int n = psi.blocks[0].n;
    long long qstar = q_unitary(n / 2, n - n / 2);
    int base = theta_length(Perm::longest(n));
    for (const auto& s : involutions(n)) {
      WitnessRow row;
      row.s = s;
      row.theta_len = theta_length(s);
      row.vogan_len = vogan_length_via_clan(s, n);
      row.q_star = qstar;
      row.lhs_exponent = (base + row.theta_len) % 2;
      row.rhs_exponent = static_cast<int>((qstar + row.vogan_len) % 2);
      row.ok = row.lhs_exponent == row.rhs_exponent;
      if (!row.ok) rep.signs_ok = false;
      rep.witness_table.push_back(row);
    }
  }
  return rep;
}

}  // namespace twc
