#pragma once

// Representation-side algebra for general linear groups: essentially discrete
// series data, canonical standard modules, the ladder standard modules X(w)
// of the Johnson resolution, the Speh reducibility criterion, and formal
// characters on twisted standard symbols with their ordinary and twisted
// alternating-sum expansions.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twc/permutation.hpp"
#include "twc/weil.hpp"

namespace twc {

// gamma(s, eps): character of GL(1,R).
struct GammaDS {
  Rat s;
  int eps = 0;
  GammaDS(Rat s_, int eps_) : s(s_), eps(eps_) {
    if (eps != 0 && eps != 1) throw input_error("gamma: eps must be 0 or 1");
  }
  friend bool operator==(const GammaDS&, const GammaDS&) = default;
};

// delta(s1, s2) with s2 - s1 a positive integer: discrete series of GL(2,R).
struct DeltaDS {
  Rat s1, s2;
  DeltaDS(Rat a, Rat b) : s1(a), s2(b) {
    Rat d = s2 - s1;
    if (!d.is_integer() || d.num() <= 0)
      throw input_error("delta: s2 - s1 must be a positive integer");
  }
  friend bool operator==(const DeltaDS&, const DeltaDS&) = default;
};

// eta(s1, s2) with s1 - s2 an integer: character of GL(1,C).
struct EtaDS {
  Rat s1, s2;
  EtaDS(Rat a, Rat b) : s1(a), s2(b) {
    if (!(s1 - s2).is_integer()) throw input_error("eta: s1 - s2 must be an integer");
  }
  friend bool operator==(const EtaDS&, const EtaDS&) = default;
};

using DiscreteSeries = std::variant<GammaDS, DeltaDS, EtaDS>;

inline Rat e_value(const DiscreteSeries& d) {
  if (auto* g = std::get_if<GammaDS>(&d)) return g->s;
  if (auto* dl = std::get_if<DeltaDS>(&d)) return (dl->s1 + dl->s2) / Rat(2);
  auto& e = std::get<EtaDS>(d);
  return (e.s1 + e.s2) / Rat(2);
}

inline Flavor ds_flavor(const DiscreteSeries& d) {
  return std::holds_alternative<EtaDS>(d) ? Flavor::Complex : Flavor::Real;
}

inline DiscreteSeries dual(const DiscreteSeries& d) {
  if (auto* g = std::get_if<GammaDS>(&d)) return GammaDS(-g->s, g->eps);
  if (auto* dl = std::get_if<DeltaDS>(&d)) return DeltaDS(-dl->s2, -dl->s1);
  auto& e = std::get<EtaDS>(d);
  return EtaDS(-e.s2, -e.s1);
}

// Canonical order: e-values nondecreasing, ties broken by
// (variant, s1, s2, eps).
inline bool ds_less(const DiscreteSeries& a, const DiscreteSeries& b) {
  Rat ea = e_value(a), eb = e_value(b);
  if (ea != eb) return ea < eb;
  if (a.index() != b.index()) return a.index() < b.index();
  auto fields = [](const DiscreteSeries& d) -> std::tuple<Rat, Rat, int> {
    if (auto* g = std::get_if<GammaDS>(&d)) return {g->s, g->s, g->eps};
    if (auto* dl = std::get_if<DeltaDS>(&d)) return {dl->s1, dl->s2, 0};
    auto& e = std::get<EtaDS>(d);
    return {e.s1, e.s2, 0};
  };
  return fields(a) < fields(b);
}

struct StandardModule {
  Flavor flavor = Flavor::Real;
  std::vector<DiscreteSeries> parts;  // canonically sorted

  StandardModule() = default;
  StandardModule(Flavor f, std::vector<DiscreteSeries> ps) : flavor(f), parts(std::move(ps)) {
    for (const auto& p : parts)
      if (ds_flavor(p) != flavor) throw input_error("standard module mixes flavors");
    std::sort(parts.begin(), parts.end(), ds_less);
  }

  int gl_size() const {
    int n = 0;
    for (const auto& p : parts) n += std::holds_alternative<DeltaDS>(p) ? 2 : 1;
    return n;
  }

  friend bool operator==(const StandardModule&, const StandardModule&) = default;
  friend bool operator<(const StandardModule& a, const StandardModule& b) {
    if (a.flavor != b.flavor) return a.flavor < b.flavor;
    return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                        b.parts.end(), ds_less);
  }
};

inline StandardModule canonicalize(Flavor f, std::vector<DiscreteSeries> parts) {
  return StandardModule(f, std::move(parts));
}

// Dictionary between Weil blocks and discrete series data.
inline StandardModule standard_of_parameter(const LanglandsParam& p) {
  std::vector<DiscreteSeries> parts;
  for (const auto& b : p.blocks) {
    if (auto* w = std::get_if<WBlock>(&b))
      parts.push_back(GammaDS(w->s, w->eps));
    else if (auto* v = std::get_if<VBlock>(&b))
      parts.push_back(DeltaDS(v->s1, v->s2));
    else {
      auto& c = std::get<ChiBlock>(b);
      parts.push_back(EtaDS(c.s1, c.s2));
    }
  }
  return StandardModule(p.flavor, std::move(parts));
}

inline LanglandsParam parameter_of_standard(const StandardModule& m) {
  std::vector<WeilIrrep> blocks;
  for (const auto& p : m.parts) {
    if (auto* g = std::get_if<GammaDS>(&p))
      blocks.push_back(WBlock(g->s, g->eps));
    else if (auto* d = std::get_if<DeltaDS>(&p))
      blocks.push_back(VBlock(d->s1, d->s2));
    else {
      auto& e = std::get<EtaDS>(p);
      blocks.push_back(ChiBlock(e.s1, e.s2));
    }
  }
  return LanglandsParam(m.flavor, std::move(blocks));
}

inline bool is_selfdual(const StandardModule& m) {
  std::vector<DiscreteSeries> d;
  d.reserve(m.parts.size());
  for (const auto& p : m.parts) d.push_back(dual(p));
  return StandardModule(m.flavor, std::move(d)) == m;
}

// Ladder standard module X(w, n, p): the product over i of
// delta((-p-(n-1))/2 + (i-1), (p-(n-1))/2 + (w(i)-1)).  At p = n-1 the
// single degenerate block delta(0,0) stands for the pair Triv x sgn.
inline StandardModule X_of(const Perm& w, int n, long long p) {
  if (w.size() != n) throw input_error("X_of: permutation size mismatch");
  if (p < n - 1) throw input_error("X_of: requires p >= n - 1");
  if (p < 1) throw input_error("X_of: requires p >= 1");
  std::vector<DiscreteSeries> parts;
  for (int i = 1; i <= n; ++i) {
    Rat a = Rat(-p - (n - 1), 2) + Rat(i - 1);
    Rat b = Rat(p - (n - 1), 2) + Rat(w(i) - 1);
    if (a == b) {
      parts.push_back(GammaDS(Rat(0), 0));
      parts.push_back(GammaDS(Rat(0), 1));
    } else {
      parts.push_back(DeltaDS(a, b));
    }
  }
  return StandardModule(Flavor::Real, std::move(parts));
}

inline StandardModule speh_standard(long long p, int n) {
  if (p < 1) throw input_error("speh_standard: p must be a positive integer");
  if (p < n - 1) throw input_error("speh_standard: requires p >= n - 1");
  return X_of(Perm::identity(n), n, p);
}

// Complex analogue: product over i of
// eta((-p-(N-1))/2 + (i-1), (p-(N-1))/2 + (s(i)-1)), needing |p| > N-1.
inline StandardModule X_complex(const Perm& s, int N, long long p) {
  if (s.size() != N) throw input_error("X_complex: permutation size mismatch");
  if (!(p > N - 1 || -p > N - 1)) throw input_error("X_complex: requires |p| > N - 1");
  std::vector<DiscreteSeries> parts;
  for (int i = 1; i <= N; ++i)
    parts.push_back(
        EtaDS(Rat(-p - (N - 1), 2) + Rat(i - 1), Rat(p - (N - 1), 2) + Rat(s(i) - 1)));
  return StandardModule(Flavor::Complex, std::move(parts));
}

// ---------------------------------------------------------------------------
// Pairwise reducibility of induced products (Speh's criterion).

struct GLBlock {
  bool is_delta = false;
  int eps = 0;       // character case
  long long p = 0;   // delta(-p/2, p/2) case
  static GLBlock character(int eps) { return {false, eps, 0}; }
  static GLBlock delta(long long p) {
    if (p < 1) throw input_error("delta block needs positive p");
    return {true, 0, p};
  }
};

inline bool is_positive_integer(const Rat& r) { return r.is_integer() && r.num() > 0; }

inline bool reducible(const GLBlock& b1, const Rat& t1, const GLBlock& b2, const Rat& t2) {
  Rat d = t1 - t2;
  if (!d.is_integer()) return false;
  long long di = d.num();
  if (!b1.is_delta && !b2.is_delta) {
    if (b1.eps == b2.eps) return di % 2 != 0;
    return di != 0 && di % 2 == 0;
  }
  Rat ad = d.abs();
  if (b1.is_delta && b2.is_delta) {
    long long gap = b1.p > b2.p ? b1.p - b2.p : b2.p - b1.p;
    return is_positive_integer(ad - Rat(gap, 2));
  }
  long long pd = b1.is_delta ? b1.p : b2.p;
  return is_positive_integer(ad - Rat(pd, 2));
}

// Strict dominance of a ladder over a set of spectral values: the lowest
// ladder rung (p - (a-1))/2 exceeds every |entry|.
inline bool speh_dominates(long long p, int a, const std::vector<Rat>& values) {
  Rat gap = Rat(p - (a - 1), 2);
  for (const auto& v : values)
    if (!(gap > v.abs())) return false;
  return true;
}

// The irreducibility window p1 >= m >= m2 >= -p2 (with m2 optional).
inline bool within_irreducibility_window(const Rat& p1, const Rat& p2, const Rat& m,
                                         const std::optional<Rat>& m2) {
  if (!(p1 >= m)) return false;
  if (m2) {
    if (!(m >= *m2)) return false;
    return *m2 >= -p2;
  }
  return m >= -p2;
}

// ---------------------------------------------------------------------------
// Formal characters on twisted standard symbols.

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', U = 'U' };

// Opaque stand-in for the twisted trace of a positive-rank tail packet; both
// verification routes carry it verbatim.
struct TailAtom {
  Family family = Family::A;
  int rank = 1;
  std::vector<int> eps;  // one bit (A, B) or two bits (C, D)

  friend bool operator==(const TailAtom&, const TailAtom&) = default;
  friend bool operator<(const TailAtom& a, const TailAtom& b) {
    return std::tie(a.family, a.rank, a.eps) < std::tie(b.family, b.rank, b.eps);
  }
};

struct TwistedSymbol {
  StandardModule standard;
  std::optional<TailAtom> tail;

  friend bool operator==(const TwistedSymbol&, const TwistedSymbol&) = default;
  friend bool operator<(const TwistedSymbol& a, const TwistedSymbol& b) {
    if (a.standard != b.standard) return a.standard < b.standard;
    if (a.tail.has_value() != b.tail.has_value()) return b.tail.has_value();
    if (!a.tail) return false;
    return *a.tail < *b.tail;
  }
};

// Integer-coefficient map on twisted standard symbols; zero coefficients are
// never stored.  This is the Grothendieck-group vehicle of every identity.
class FormalCharacter {
public:
  explicit FormalCharacter(Flavor f = Flavor::Real) : flavor_(f) {}

  Flavor flavor() const { return flavor_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<TwistedSymbol, long long>& terms() const { return terms_; }

  void add(TwistedSymbol sym, long long coeff) {
    if (coeff == 0) return;
    if (sym.standard.flavor != flavor_ && !sym.standard.parts.empty())
      throw input_error("formal character: flavor mismatch");
    auto it = terms_.find(sym);
    if (it == terms_.end()) {
      terms_.emplace(std::move(sym), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  long long coefficient(const TwistedSymbol& sym) const {
    auto it = terms_.find(sym);
    return it == terms_.end() ? 0 : it->second;
  }

  long long coefficient_sum() const {
    long long s = 0;
    for (const auto& [_, c] : terms_) s += c;
    return s;
  }

  friend FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter out = a;
    for (const auto& [k, c] : b.terms_) out.add(k, c);
    return out;
  }
  friend FormalCharacter operator-(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter out = a;
    for (const auto& [k, c] : b.terms_) out.add(k, -c);
    return out;
  }
  FormalCharacter operator-() const {
    FormalCharacter out(flavor_);
    for (const auto& [k, c] : terms_) out.add(k, -c);
    return out;
  }
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

  // The multiplicative unit: one empty symbol with coefficient one.
  static FormalCharacter unit(Flavor f) {
    FormalCharacter out(f);
    out.add(TwistedSymbol{StandardModule(f, {}), std::nullopt}, 1);
    return out;
  }

private:
  Flavor flavor_;
  std::map<TwistedSymbol, long long> terms_;
};

// Bilinear product: symbols merge by canonicalized union of constituents; a
// tail atom is carried through, and two atoms may never meet.
inline FormalCharacter product(const FormalCharacter& f, const FormalCharacter& g) {
  if (f.flavor() != g.flavor()) throw input_error("product: flavor mismatch");
  FormalCharacter out(f.flavor());
  for (const auto& [k1, c1] : f.terms())
    for (const auto& [k2, c2] : g.terms()) {
      if (k1.tail && k2.tail)
        throw input_error("product: two tail atoms in one symbol are unsupported");
      std::vector<DiscreteSeries> parts = k1.standard.parts;
      parts.insert(parts.end(), k2.standard.parts.begin(), k2.standard.parts.end());
      TwistedSymbol sym{StandardModule(f.flavor(), std::move(parts)),
                        k1.tail ? k1.tail : k2.tail};
      out.add(std::move(sym), c1 * c2);
    }
  return out;
}

// Twist by the sign character: flips every gamma constituent and every tail
// atom bit; delta constituents are fixed.
inline FormalCharacter twist_by_sign(const FormalCharacter& f) {
  if (f.flavor() != Flavor::Real) throw input_error("sign twist is undefined for complex symbols");
  FormalCharacter out(f.flavor());
  for (const auto& [k, c] : f.terms()) {
    std::vector<DiscreteSeries> parts;
    parts.reserve(k.standard.parts.size());
    for (const auto& p : k.standard.parts) {
      if (auto* g = std::get_if<GammaDS>(&p))
        parts.push_back(GammaDS(g->s, 1 - g->eps));
      else
        parts.push_back(p);
    }
    std::optional<TailAtom> tail = k.tail;
    if (tail)
      for (int& e : tail->eps) e = 1 - e;
    out.add(TwistedSymbol{StandardModule(f.flavor(), std::move(parts)), std::move(tail)}, c);
  }
  return out;
}

// Alternating sum over the whole symmetric group (the ordinary resolution in
// the Grothendieck group).
inline FormalCharacter grothendieck_speh(int n, long long p) {
  FormalCharacter out(Flavor::Real);
  for (const auto& w : all_permutations(n))
    out.add(TwistedSymbol{X_of(w, n, p), std::nullopt}, w.length() % 2 == 0 ? 1 : -1);
  return out;
}

// Twisted trace of the self-dual Speh representation as a signed sum over
// the theta-stable ladder modules X(w0 s), s an involution.  The sign for s
// is (-1)^(theta_length(w0) + theta_length(s)).
inline FormalCharacter twisted_speh(int n, long long p) {
  FormalCharacter out(Flavor::Real);
  Perm w0 = Perm::longest(n);
  int base = theta_length(w0);
  for (const auto& s : involutions(n)) {
    int sign = (base + theta_length(s)) % 2 == 0 ? 1 : -1;
    out.add(TwistedSymbol{X_of(compose(w0, s), n, p), std::nullopt}, sign);
  }
  return out;
}

// Complex analogue for the self-dual character eta(-p/2, p/2) of GL(N,C).
inline FormalCharacter twisted_speh_complex(int N, long long p) {
  FormalCharacter out(Flavor::Complex);
  Perm w0 = Perm::longest(N);
  int base = theta_length(w0);
  for (const auto& s : involutions(N)) {
    int sign = (base + theta_length(s)) % 2 == 0 ? 1 : -1;
    out.add(TwistedSymbol{X_complex(compose(w0, s), N, p), std::nullopt}, sign);
  }
  return out;
}

// Infinitesimal-character multiset carried by a symbol's constituents.
inline std::vector<Rat> standard_infchar_real(const StandardModule& m) {
  std::vector<Rat> out;
  for (const auto& p : m.parts) {
    if (auto* g = std::get_if<GammaDS>(&p))
      out.push_back(g->s);
    else if (auto* d = std::get_if<DeltaDS>(&p)) {
      out.push_back(d->s1);
      out.push_back(d->s2);
    } else
      throw input_error("real infinitesimal character of complex module");
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<Rat, Rat>> standard_infchar_complex(const StandardModule& m) {
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& p : m.parts) {
    auto* e = std::get_if<EtaDS>(&p);
    if (!e) throw input_error("complex infinitesimal character of real module");
    out.emplace_back(e->s1, e->s2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The coordinate multisets of a complex infinitesimal character; the Weyl
// group acts on the two coordinates independently.
inline std::pair<std::vector<Rat>, std::vector<Rat>> split_complex_infchar(
    const std::vector<std::pair<Rat, Rat>>& pairs) {
  std::vector<Rat> first, second;
  for (const auto& [a, b] : pairs) {
    first.push_back(a);
    second.push_back(b);
  }
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return {std::move(first), std::move(second)};
}

}  // namespace twc
