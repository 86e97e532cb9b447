#pragma once

// Symmetric-group combinatorics: permutations in one-line notation, Bruhat
// order, ordinary length, involutions and their theta-length, and the
// witness searches behind the descent/ascent lemmas used by the twisted
// character formulas.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twc/rational.hpp"

namespace twc {

class Perm {
public:
  Perm() = default;
  explicit Perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i + 1;
  }
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw input_error("not a bijection of {1..n}: " + str());
      seen[v - 1] = 1;
    }
  }

  int size() const { return static_cast<int>(img_.size()); }
  // w(i), 1-based.
  int operator()(int i) const { return img_[i - 1]; }

  static Perm identity(int n) { return Perm(n); }
  static Perm longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Perm(std::move(v));
  }
  static Perm transposition(int n, int i, int j) {
    Perm w(n);
    std::swap(w.img_[i - 1], w.img_[j - 1]);
    return w;
  }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }
  bool is_involution() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)((*this)(i)) != i) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 1; i <= size(); ++i) v[(*this)(i)-1] = i;
    return Perm(std::move(v));
  }

  int length() const {
    int inv = 0;
    for (int i = 1; i <= size(); ++i)
      for (int j = i + 1; j <= size(); ++j)
        if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
  }

  int exceedances() const {
    int e = 0;
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) > i) ++e;
    return e;
  }

  // Swap the images at positions i and j: w * (i j).
  Perm right_mult_transposition(int i, int j) const {
    Perm w = *this;
    std::swap(w.img_[i - 1], w.img_[j - 1]);
    return w;
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(img_[i]);
    }
    return s + "]";
  }

  static Perm parse(const std::string& text) {
    std::string t = text;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
      throw input_error("permutation must be bracketed one-line notation: " + text);
    t = t.substr(1, t.size() - 2);
    std::vector<int> v;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(item, &used));
        if (used != item.size()) throw input_error("bad entry: " + item);
      } catch (const std::logic_error&) {
        throw input_error("bad permutation entry: " + item);
      }
    }
    if (v.empty()) throw input_error("empty permutation: " + text);
    return Perm(std::move(v));
  }

private:
  std::vector<int> img_;
};

// a after b: result(i) = a(b(i)).
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw input_error("compose: size mismatch");
  std::vector<int> v(a.size());
  for (int i = 1; i <= a.size(); ++i) v[i - 1] = a(b(i));
  return Perm(std::move(v));
}

inline std::vector<Perm> all_permutations(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// All involutions of S_n in lexicographic one-line order.
inline std::vector<Perm> involutions(int n) {
  if (n < 1) throw input_error("involutions: n must be positive");
  std::vector<Perm> out;
  std::vector<int> img(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    while (i <= n && img[i - 1] != 0) ++i;
    if (i > n) {
      out.emplace_back(img);
      return;
    }
    img[i - 1] = i;
    self(self, i + 1);
    img[i - 1] = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (img[j - 1] != 0) continue;
      img[i - 1] = j;
      img[j - 1] = i;
      self(self, i + 1);
      img[i - 1] = 0;
      img[j - 1] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

// Theta-length of an involution: (inversions + exceedances) / 2.
inline int theta_length(const Perm& w) {
  if (!w.is_involution()) throw input_error("theta_length: not an involution: " + w.str());
  return (w.length() + w.exceedances()) / 2;
}

// Bruhat order via the lifting property on right descents.  Equivalent to
// the subword criterion on any reduced word for w.
inline bool bruhat_leq(Perm v, Perm w) {
  if (v.size() != w.size()) throw input_error("bruhat_leq: size mismatch");
  for (;;) {
    if (v == w) return true;
    int i = 0;
    for (int k = 1; k < w.size(); ++k)
      if (w(k) > w(k + 1)) {
        i = k;
        break;
      }
    if (i == 0) return false;  // w = id and v != w
    if (v(i) > v(i + 1)) v = v.right_mult_transposition(i, i + 1);
    w = w.right_mult_transposition(i, i + 1);
  }
}

// Elements covered by w in Bruhat order: w(i j) with i<j, w(i)>w(j) and no
// intermediate value in between.
inline std::vector<Perm> bruhat_coatoms(const Perm& w) {
  std::vector<Perm> out;
  int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) <= w(j)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k)
        if (w(i) > w(k) && w(k) > w(j)) blocked = true;
      if (!blocked) out.push_back(w.right_mult_transposition(i, j));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Elements covering w.
inline std::vector<Perm> bruhat_atoms(const Perm& w) {
  std::vector<Perm> out;
  int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) >= w(j)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k)
        if (w(i) < w(k) && w(k) < w(j)) blocked = true;
      if (!blocked) out.push_back(w.right_mult_transposition(i, j));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// w = tau^{-1} sigma_X tau with length additivity; X has no two adjacent
// indices.  Exhaustive search, deterministic by lexicographic (X, tau).
struct SigmaDecomposition {
  std::vector<int> X;  // subset of {1..n-1}
  Perm tau;
};

inline Perm sigma_of_set(int n, const std::vector<int>& X) {
  Perm s(n);
  for (int i : X) s = s.right_mult_transposition(i, i + 1);
  return s;
}

inline SigmaDecomposition sigma_decomposition(const Perm& w) {
  if (!w.is_involution()) throw input_error("sigma_decomposition: not an involution");
  int n = w.size();
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (w(i) > i) ++m;
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  auto gen = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == m) {
      sets.push_back(cur);
      return;
    }
    for (int i = next; i <= n - 1; ++i) {
      cur.push_back(i);
      self(self, i + 2);  // skip the adjacent index
      cur.pop_back();
    }
  };
  gen(gen, 1);
  auto perms = all_permutations(n);
  std::vector<int> lens(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) lens[i] = perms[i].length();
  int wlen = w.length();
  for (const auto& X : sets) {
    Perm sigma = sigma_of_set(n, X);
    int want = wlen - static_cast<int>(X.size());
    if (want < 0 || want % 2 != 0) continue;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (2 * lens[i] != want) continue;
      if (compose(compose(perms[i].inverse(), sigma), perms[i]) == w)
        return {X, perms[i]};
    }
  }
  throw verification_error("sigma_decomposition: no decomposition found for " + w.str());
}

// Witness that an involution admits a theta-length step in Bruhat order,
// either directly (case 1: a covered involution) or through a length-two
// chain (case 2).  Searches are exhaustive with lexicographic tie-break.
struct ThetaStepWitness {
  Perm w;
  int which_case = 0;  // 1 or 2
  Perm w_prime;
  std::optional<Perm> s;  // present in case 2
};

inline std::vector<ThetaStepWitness> theta_descent_witnesses(int n) {
  if (n < 2) throw input_error("theta_descent_witnesses: n must be at least 2");
  std::vector<ThetaStepWitness> out;
  for (const auto& w : involutions(n)) {
    if (w.is_identity()) continue;
    int lt = theta_length(w);
    std::optional<ThetaStepWitness> best;
    for (const auto& wp : bruhat_coatoms(w))
      if (wp.is_involution() && theta_length(wp) == lt - 1) {
        best = ThetaStepWitness{w, 1, wp, std::nullopt};
        break;  // coatoms are sorted, first hit is lexicographic minimum
      }
    if (!best) {
      for (const auto& s : bruhat_coatoms(w)) {
        for (const auto& wp : bruhat_coatoms(s))
          if (wp.is_involution() && theta_length(wp) == lt - 1) {
            ThetaStepWitness cand{w, 2, wp, s};
            if (!best || std::tie(cand.w_prime, *cand.s) < std::tie(best->w_prime, *best->s))
              best = cand;
          }
      }
    }
    if (!best)
      throw verification_error("no descent witness for involution " + w.str());
    out.push_back(*best);
  }
  return out;
}

inline std::vector<ThetaStepWitness> theta_ascent_witnesses(int n) {
  if (n < 2) throw input_error("theta_ascent_witnesses: n must be at least 2");
  std::vector<ThetaStepWitness> out;
  Perm w0 = Perm::longest(n);
  for (const auto& w : involutions(n)) {
    if (w == w0) continue;
    int lt = theta_length(w);
    std::optional<ThetaStepWitness> best;
    for (const auto& wp : bruhat_atoms(w))
      if (wp.is_involution() && theta_length(wp) == lt + 1) {
        best = ThetaStepWitness{w, 1, wp, std::nullopt};
        break;
      }
    if (!best) {
      for (const auto& s : bruhat_atoms(w)) {
        for (const auto& wp : bruhat_atoms(s))
          if (wp.is_involution() && theta_length(wp) == lt + 1) {
            ThetaStepWitness cand{w, 2, wp, s};
            if (!best || std::tie(cand.w_prime, *cand.s) < std::tie(best->w_prime, *best->s))
              best = cand;
          }
      }
    }
    if (!best)
      throw verification_error("no ascent witness for involution " + w.str());
    out.push_back(*best);
  }
  return out;
}

}  // namespace twc
