#pragma once

// Brute-force reference implementations used only by the tests. They read
// a presentation as plain data and share no code with the library's
// modulus, sign or enumeration routines.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loopcalc/model.hpp"

namespace oracle {

using Exps = std::vector<std::int64_t>;

struct Presentation {
  std::vector<std::int64_t> degrees;
  std::vector<std::pair<std::int64_t, Exps>> relations;  // k * monomial = 0

  bool odd(std::size_t i) const { return degrees[i] % 2 != 0; }
};

inline Presentation from_spec(const loopcalc::ModelSpec& spec) {
  Presentation p;
  std::vector<std::string> names;
  for (const auto& g : spec.generators) {
    p.degrees.push_back(g.degree);
    names.push_back(g.name);
  }
  for (const auto& r : spec.relations) {
    Exps e(names.size(), 0);
    for (const auto& [name, power] : r.factors) {
      const auto pos = std::find(names.begin(), names.end(), name) - names.begin();
      e[static_cast<std::size_t>(pos)] += power;
    }
    p.relations.emplace_back(static_cast<std::int64_t>(r.coefficient), e);
  }
  return p;
}

inline std::int64_t degree(const Presentation& p, const Exps& e) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * p.degrees[i];
  return d;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Smallest positive k with k*m in the ideal, found by closing {0} under
/// +/- each applicable relation coefficient inside a bounded range; 0 when
/// no relation applies. Odd generators squared count as k = 1.
inline std::int64_t modulus(const Presentation& p, const Exps& e) {
  std::vector<std::int64_t> ks;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (p.odd(i) && e[i] >= 2) ks.push_back(1);
  for (const auto& [k, m] : p.relations)
    if (divides(m, e)) ks.push_back(k);
  if (ks.empty()) return 0;
  const std::int64_t limit = 4 * *std::max_element(ks.begin(), ks.end());
  std::set<std::int64_t> reached{0};
  std::vector<std::int64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (auto r : frontier)
      for (auto k : ks)
        for (auto s : {r + k, r - k})
          if (s >= -limit && s <= limit && reached.insert(s).second) next.push_back(s);
    frontier = std::move(next);
  }
  return *reached.upper_bound(0);
}

struct Product {
  bool zero = false;
  int sign = 1;
  Exps exps;
};

/// Multiplies two monomials by writing both as words of generator
/// letters, concatenating, and bubble-sorting into index order; each swap
/// of two odd letters flips the sign.
inline Product multiply(const Presentation& p, const Exps& a, const Exps& b) {
  std::vector<std::size_t> word;
  for (const Exps* m : {&a, &b})
    for (std::size_t i = 0; i < m->size(); ++i)
      for (std::int64_t k = 0; k < (*m)[i]; ++k) word.push_back(i);
  Product out;
  for (std::size_t pass = 0; pass < word.size(); ++pass)
    for (std::size_t j = 0; j + 1 < word.size(); ++j)
      if (word[j] > word[j + 1]) {
        if (p.odd(word[j]) && p.odd(word[j + 1])) out.sign = -out.sign;
        std::swap(word[j], word[j + 1]);
      }
  out.exps.assign(a.size(), 0);
  for (auto g : word) ++out.exps[g];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (p.odd(i) && out.exps[i] >= 2) out.zero = true;
  if (modulus(p, out.exps) == 1) out.zero = true;
  return out;
}

/// Every exponent vector in the box e_i <= box_i of the given degree
/// whose modulus is not 1.
inline std::vector<std::pair<Exps, std::int64_t>> basis_in_box(
    const Presentation& p, const Exps& box, std::int64_t deg) {
  std::vector<std::pair<Exps, std::int64_t>> out;
  Exps e(box.size(), 0);
  while (true) {
    if (degree(p, e) == deg) {
      const auto mod = modulus(p, e);
      if (mod != 1) out.emplace_back(e, mod);
    }
    std::size_t i = 0;
    while (i < e.size() && e[i] == box[i]) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Reduces an integer into the canonical range for a modulus.
inline std::int64_t reduce(std::int64_t c, std::int64_t mod) {
  if (mod == 0) return c;
  return ((c % mod) + mod) % mod;
}

}  // namespace oracle
