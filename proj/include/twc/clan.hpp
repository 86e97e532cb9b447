#pragma once

// Clans: involutions with signed fixed points, parametrizing K-orbits on the
// flag variety of U(p,q).  Symbolic text form, enumeration, the orbit-length
// function, the two graded Hasse-edge rules, and packet grouping by the
// underlying involution.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "twc/permutation.hpp"

namespace twc {

class Clan {
public:
  Clan(Perm eta, std::map<int, int> signs) : eta_(std::move(eta)), signs_(std::move(signs)) {
    if (!eta_.is_involution()) throw input_error("clan: eta must be an involution");
    for (int i = 1; i <= eta_.size(); ++i) {
      bool fixed = eta_(i) == i;
      auto it = signs_.find(i);
      if (fixed && (it == signs_.end() || (it->second != 1 && it->second != -1)))
        throw input_error("clan: fixed point " + std::to_string(i) + " needs a sign");
      if (!fixed && it != signs_.end())
        throw input_error("clan: sign on non-fixed point " + std::to_string(i));
    }
  }

  int N() const { return eta_.size(); }
  const Perm& eta() const { return eta_; }
  int sign_at(int i) const { return signs_.at(i); }

  int cycles() const {
    int m = 0;
    for (int i = 1; i <= N(); ++i)
      if (eta_(i) > i) ++m;
    return m;
  }
  int p() const {
    int plus = 0;
    for (auto& [_, s] : signs_)
      if (s > 0) ++plus;
    return cycles() + plus;
  }
  int q() const { return N() - p(); }

  // Canonical text form: labels renumbered by first occurrence; compact for
  // N <= 9, comma-separated beyond.
  std::string str() const {
    std::vector<std::string> tok(N());
    int next = 1;
    for (int i = 1; i <= N(); ++i) {
      int j = eta_(i);
      if (j == i)
        tok[i - 1] = sign_at(i) > 0 ? "+" : "-";
      else if (j > i) {
        tok[i - 1] = tok[j - 1] = std::to_string(next++);
      }
    }
    std::string out;
    for (int i = 0; i < N(); ++i) {
      if (N() > 9 && i) out += ",";
      out += tok[i];
    }
    return out;
  }

  static Clan parse(const std::string& text) {
    std::string t = text;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    std::vector<std::string> tok;
    if (t.find(',') != std::string::npos) {
      std::string cur;
      for (char c : t) {
        if (c == ',') {
          tok.push_back(cur);
          cur.clear();
        } else
          cur += c;
      }
      tok.push_back(cur);
    } else {
      for (char c : t) tok.emplace_back(1, c);
    }
    int n = static_cast<int>(tok.size());
    if (n == 0) throw input_error("empty clan text");
    std::map<std::string, std::vector<int>> where;
    std::map<int, int> signs;
    for (int i = 1; i <= n; ++i) {
      const std::string& s = tok[i - 1];
      if (s == "+")
        signs[i] = 1;
      else if (s == "-")
        signs[i] = -1;
      else if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)
        where[s].push_back(i);
      else
        throw input_error("bad clan symbol: '" + s + "'");
    }
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) img[i - 1] = i;
    for (auto& [label, pos] : where) {
      if (pos.size() != 2)
        throw input_error("clan label '" + label + "' must occur exactly twice");
      img[pos[0] - 1] = pos[1];
      img[pos[1] - 1] = pos[0];
    }
    return Clan(Perm(std::move(img)), std::move(signs));
  }

  friend bool operator==(const Clan& a, const Clan& b) {
    return a.eta_ == b.eta_ && a.signs_ == b.signs_;
  }
  friend bool operator<(const Clan& a, const Clan& b) {
    if (a.eta_ != b.eta_) return a.eta_ < b.eta_;
    return a.signs_ < b.signs_;
  }

private:
  Perm eta_;
  std::map<int, int> signs_;  // fixed point -> +1/-1
};

// Sum over 2-cycles (i<j) of (j-i) minus the number of cycles (k,l) with
// k < i < l < j.  This is the orbit length with the signature base removed.
inline long long clan_cycle_sum(const Perm& eta) {
  long long total = 0;
  int n = eta.size();
  for (int i = 1; i <= n; ++i) {
    int j = eta(i);
    if (j <= i) continue;
    long long cross = 0;
    for (int k = 1; k < i; ++k) {
      int l = eta(k);
      if (l > i && l < j) ++cross;
    }
    total += (j - i) - cross;
  }
  return total;
}

inline long long clan_length(const Clan& c) {
  long long p = c.p(), q = c.q();
  return (p * (p - 1) + q * (q - 1)) / 2 + clan_cycle_sum(c.eta());
}

// A clan with the given underlying involution in the (p,q) family, signs
// assigned '+' first.  The length does not depend on the sign choice.
inline Clan clan_from_involution(const Perm& eta, int p, int q) {
  int m = 0;
  for (int i = 1; i <= eta.size(); ++i)
    if (eta(i) > i) ++m;
  if (m > std::min(p, q) || p + q != eta.size())
    throw input_error("involution does not fit signature (" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
  std::map<int, int> signs;
  int plus_left = p - m;
  for (int i = 1; i <= eta.size(); ++i) {
    if (eta(i) != i) continue;
    signs[i] = plus_left > 0 ? 1 : -1;
    if (plus_left > 0) --plus_left;
  }
  return Clan(eta, std::move(signs));
}

inline std::vector<Clan> enumerate_clans(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw input_error("enumerate_clans: need p+q >= 1");
  int n = p + q;
  std::vector<Clan> out;
  for (const auto& eta : involutions(n)) {
    int m = 0;
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i) {
      if (eta(i) > i) ++m;
      if (eta(i) == i) fixed.push_back(i);
    }
    int plus = p - m, minus = q - m;
    if (plus < 0 || minus < 0) continue;
    std::map<int, int> signs;
    auto assign = [&](auto&& self, std::size_t idx, int pl, int mi) -> void {
      if (idx == fixed.size()) {
        out.emplace_back(eta, signs);
        return;
      }
      if (pl > 0) {
        signs[fixed[idx]] = 1;
        self(self, idx + 1, pl - 1, mi);
      }
      if (mi > 0) {
        signs[fixed[idx]] = -1;
        self(self, idx + 1, pl, mi - 1);
      }
      signs.erase(fixed[idx]);
    };
    assign(assign, 0, plus, minus);
  }
  return out;
}

// Every clan obtained from c by one of the two edge rules: replacing an
// adjacent equal-label pair by (+-) or (-+), or swapping two adjacent
// symbols that are not both signs.
inline std::vector<Clan> hasse_rule_candidates(const Clan& c) {
  std::vector<Clan> out;
  int n = c.N();
  const Perm& eta = c.eta();
  for (int i = 1; i < n; ++i) {
    bool fixed_i = eta(i) == i, fixed_j = eta(i + 1) == i + 1;
    if (eta(i) == i + 1) {
      // rule (a): split the adjacent cycle into a signed pair
      for (int si : {1, -1}) {
        std::vector<int> img(n);
        for (int k = 1; k <= n; ++k) img[k - 1] = eta(k);
        img[i - 1] = i;
        img[i] = i + 1;
        std::map<int, int> signs;
        for (int k = 1; k <= n; ++k)
          if (eta(k) == k) signs[k] = c.sign_at(k);
        signs[i] = si;
        signs[i + 1] = -si;
        out.emplace_back(Perm(std::move(img)), std::move(signs));
      }
      continue;  // same-label swap is the identity
    }
    if (fixed_i && fixed_j) continue;  // rule (b) excludes two signs
    // rule (b): conjugate by the transposition (i, i+1)
    Perm t = Perm::transposition(n, i, i + 1);
    Perm eta2 = compose(compose(t, eta), t);
    std::map<int, int> signs;
    for (int k = 1; k <= n; ++k)
      if (eta2(k) == k) signs[k] = c.sign_at(k == i ? i + 1 : (k == i + 1 ? i : k));
    out.emplace_back(std::move(eta2), std::move(signs));
  }
  return out;
}

// Covering pairs (upper, lower) with length dropping by exactly one,
// generated by the two rules over the whole (p,q) family.
inline std::vector<std::pair<Clan, Clan>> hasse_edges(int p, int q) {
  std::set<std::pair<Clan, Clan>> edges;
  for (const auto& c : enumerate_clans(p, q)) {
    long long lc = clan_length(c);
    for (const auto& d : hasse_rule_candidates(c)) {
      long long ld = clan_length(d);
      if (ld == lc - 1)
        edges.insert({c, d});
      else if (ld == lc + 1)
        edges.insert({d, c});
    }
  }
  return {edges.begin(), edges.end()};
}

// Clans grouped by underlying involution; each group is the parameter set of
// one L-packet.
inline std::vector<std::vector<Clan>> clan_packets(int p, int q) {
  std::map<Perm, std::vector<Clan>> groups;
  for (const auto& c : enumerate_clans(p, q)) groups[c.eta()].push_back(c);
  std::vector<std::vector<Clan>> out;
  for (auto& [_, g] : groups) out.push_back(std::move(g));
  return out;
}

// Orbit length against theta-length plus the signature base, over the whole
// family; returns the first offending clan on failure.
inline bool verify_length_relation(int p, int q, std::string* offender = nullptr) {
  long long base = (static_cast<long long>(p) * (p - 1) + static_cast<long long>(q) * (q - 1)) / 2;
  for (const auto& c : enumerate_clans(p, q)) {
    if (clan_length(c) != theta_length(c.eta()) + base) {
      if (offender) *offender = c.str();
      return false;
    }
  }
  return true;
}

}  // namespace twc
