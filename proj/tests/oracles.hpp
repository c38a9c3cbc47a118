// Copyright 2026 The galdual Authors
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

#pragma once

// Deliberately naive reference implementations used as test oracles. None
// of them calls into the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "galdual/model.hpp"

namespace oracle {

using galdual::Element;
using galdual::Member;
using galdual::Quantifier;
using galdual::Relation;
using galdual::Structure;
using galdual::Tuple;
using Images = std::vector<Element>;

inline std::vector<Images> all_images(std::size_t n) {
  Images p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<Images> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Relation image_of(const Images& g, const Relation& r) {
  std::vector<Tuple> mapped;
  for (Tuple t : r.tuples()) {
    for (Element& a : t) a = g[a];
    mapped.push_back(t);
  }
  return Relation::from_tuples(r.domain_size(), r.arity(), mapped);
}

inline bool fixes(const Images& g, const Relation& r) {
  return image_of(g, r) == r;
}

inline bool fixes(const Images& g, const Quantifier& q) {
  for (const Member& m : q.members()) {
    Member image;
    for (const Relation& r : m) image.push_back(image_of(g, r));
    if (!q.contains(image)) return false;
  }
  return true;
}

inline std::set<Images> aut(const Structure& s) {
  std::set<Images> out;
  for (const Images& g : all_images(s.domain_size())) {
    bool ok = true;
    for (const auto& [name, r] : s.relations()) ok = ok && fixes(g, r);
    for (const auto& [name, q] : s.quantifiers()) ok = ok && fixes(g, q);
    if (ok) out.insert(g);
  }
  return out;
}

inline Images multiply(const Images& g, const Images& h) {
  Images out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[h[i]];
  return out;
}

inline std::set<Images> closure(std::size_t n, const std::vector<Images>& gens) {
  Images id(n);
  std::iota(id.begin(), id.end(), Element{0});
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const Images& a : frontier) {
      for (const Images& g : gens) {
        Images b = multiply(g, a);
        if (seen.insert(b).second) next.push_back(b);
      }
    }
    frontier.swap(next);
  }
  return seen;
}

// Restricted growth strings: every set partition of {0..n-1} once.
inline std::vector<std::vector<std::uint32_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> a(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i,
                                                            std::uint32_t top) {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (std::uint32_t b = 0; b <= top + 1 && (i > 0 || b == 0); ++b) {
      a[i] = b;
      rec(i + 1, std::max(top, b));
    }
  };
  if (n == 0) return out;
  a[0] = 0;
  rec(1, 0);
  return out;
}

inline bool saturated_by(const Relation& r, const std::vector<std::uint32_t>& block) {
  const std::size_t n = r.domain_size();
  for (std::size_t i = 0; i < r.tuple_space(); ++i) {
    const Tuple a = galdual::decode_tuple(n, r.arity(), i);
    for (std::size_t j = 0; j < r.tuple_space(); ++j) {
      const Tuple b = galdual::decode_tuple(n, r.arity(), j);
      bool related = true;
      for (std::size_t l = 0; l < a.size(); ++l) related = related && block[a[l]] == block[b[l]];
      if (related && r.contains_index(i) != r.contains_index(j)) return false;
    }
  }
  return true;
}

// The coarsest equivalence under which every relation of the structure is
// saturated. Quantifiers impose nothing: in a language without equality a
// quantifier application is one more definable relation built from
// definable arguments.
inline std::vector<std::uint32_t> coarsest_saturating(const Structure& s) {
  std::vector<std::uint32_t> best;
  std::size_t best_blocks = SIZE_MAX;
  for (const auto& p : set_partitions(s.domain_size())) {
    bool ok = true;
    for (const auto& [name, r] : s.relations()) ok = ok && saturated_by(r, p);
    const std::size_t blocks = *std::max_element(p.begin(), p.end()) + 1;
    if (ok && blocks < best_blocks) {
      best = p;
      best_blocks = blocks;
    }
  }
  return best;
}

// Similarities as sets of pairs.
using Pairs = std::set<std::pair<Element, Element>>;

inline bool total_and_onto(std::size_t n, const Pairs& p) {
  std::vector<bool> left(n), right(n);
  for (const auto& [a, b] : p) {
    left[a] = true;
    right[b] = true;
  }
  return std::all_of(left.begin(), left.end(), [](bool x) { return x; }) &&
         std::all_of(right.begin(), right.end(), [](bool x) { return x; });
}

inline Pairs pairs_of_mask(std::size_t n, std::uint64_t mask) {
  Pairs out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((mask >> (a * n + b)) & 1u) out.insert({Element(a), Element(b)});
    }
  }
  return out;
}

inline Pairs compose(const Pairs& p, const Pairs& q) {
  Pairs out;
  for (const auto& [a, b] : p) {
    for (const auto& [c, d] : q) {
      if (b == c) out.insert({a, d});
    }
  }
  return out;
}

inline Pairs converse(const Pairs& p) {
  Pairs out;
  for (const auto& [a, b] : p) out.insert({b, a});
  return out;
}

// For all ā p b̄ componentwise: ā ∈ r iff b̄ ∈ s. Enumerates all tuple pairs.
inline bool lifts(const Pairs& p, const Relation& r, const Relation& s) {
  const std::size_t n = r.domain_size();
  for (std::size_t i = 0; i < r.tuple_space(); ++i) {
    const Tuple a = galdual::decode_tuple(n, r.arity(), i);
    for (std::size_t j = 0; j < s.tuple_space(); ++j) {
      const Tuple b = galdual::decode_tuple(n, r.arity(), j);
      bool related = true;
      for (std::size_t l = 0; l < a.size(); ++l) {
        related = related && p.count({a[l], b[l]});
      }
      if (related && r.contains_index(i) != s.contains_index(j)) return false;
    }
  }
  return true;
}

}  // namespace oracle
