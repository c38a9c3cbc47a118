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

#include "galdual/definable.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "galdual/error.hpp"

namespace galdual {

namespace {

using Ids = std::vector<std::uint32_t>;

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
  }
};

// Splits the blocks of `ids` by the keys produced by key(index, out), which
// appends to `out`. Ids are renumbered by first occurrence. Returns true when
// some block was split.
template <class KeyFn>
bool refine(Ids& ids, std::size_t& count, KeyFn key) {
  std::map<std::vector<std::uint32_t>, std::uint32_t> renumber;
  std::vector<std::uint32_t> buffer;
  Ids next(ids.size());
  for (std::size_t t = 0; t < ids.size(); ++t) {
    buffer.clear();
    buffer.push_back(ids[t]);
    key(t, buffer);
    auto [it, inserted] =
        renumber.emplace(buffer, static_cast<std::uint32_t>(renumber.size()));
    next[t] = it->second;
  }
  const bool split = renumber.size() != count;
  ids = std::move(next);
  count = renumber.size();
  return split;
}

// Membership of quantifier members by packed slot bitmasks.
class PackedQuantifier {
 public:
  PackedQuantifier(const Quantifier& q) {
    const std::size_t n = q.domain_size();
    unsigned offset = 0;
    for (unsigned arity : q.type().slots()) {
      const std::uint64_t width = checked_power(n, arity);
      if (width > 64 || offset + width > 64) {
        fail(ErrorKind::kResourceLimit,
             "quantifier of type " + q.type().to_string() +
                 " too wide for the definable-closure search");
      }
      offsets_.push_back(offset);
      widths_.push_back(static_cast<unsigned>(width));
      offset += static_cast<unsigned>(width);
    }
    for (const Member& m : q.members()) {
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        key |= relation_mask(m[j]) << offsets_[j];
      }
      keys_.push_back(key);
    }
    std::sort(keys_.begin(), keys_.end());
  }

  bool contains(std::uint64_t key) const {
    return std::binary_search(keys_.begin(), keys_.end(), key);
  }
  unsigned offset(std::size_t j) const { return offsets_[j]; }
  std::size_t slots() const { return offsets_.size(); }

 private:
  std::vector<unsigned> offsets_;
  std::vector<unsigned> widths_;
  std::vector<std::uint64_t> keys_;
};

class ClosureBuilder {
 public:
  ClosureBuilder(const Structure& structure, unsigned bound, bool with_params,
                 const Limits& limits)
      : n_(structure.domain_size()), bound_(bound), with_params_(with_params) {
    require_index_space(checked_power(n_, bound), limits,
                        "definable closure");
    for (unsigned k = 0; k <= bound; ++k) {
      size_.push_back(tuple_count(n_, k));
      ids_.emplace_back(size_[k], 0);
      count_.push_back(1);
    }
    for (const auto& [name, r] : structure.relations()) {
      if (r.arity() > bound) {
        fail(ErrorKind::kPrecondition,
             "relation '" + name + "' has arity " + std::to_string(r.arity()) +
                 " above the arity bound " + std::to_string(bound));
      }
      if (r.arity() == 0) continue;
      refine(ids_[r.arity()], count_[r.arity()],
             [&](std::size_t t, std::vector<std::uint32_t>& out) {
               out.push_back(r.contains_index(t) ? 1 : 0);
             });
    }
    for (const auto& [name, q] : structure.quantifiers()) {
      quantifiers_.emplace_back(q.type(), PackedQuantifier(q));
    }
    for (unsigned k = 0; k <= bound; ++k) {
      std::vector<Ids> swaps;
      for (unsigned i = 0; i + 1 < k; ++i) {
        Ids map(size_[k]);
        for (std::size_t t = 0; t < size_[k]; ++t) {
          Tuple tuple = decode_tuple(n_, k, t);
          std::swap(tuple[i], tuple[i + 1]);
          map[t] = static_cast<std::uint32_t>(encode_tuple(n_, tuple));
        }
        swaps.push_back(std::move(map));
      }
      swaps_.push_back(std::move(swaps));
    }
  }

  DefinableClosure run() {
    std::size_t rounds = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      ++rounds;
      for (unsigned k = 1; k <= bound_; ++k) changed |= structural_pass(k);
      for (const auto& [type, packed] : quantifiers_) {
        unsigned widest = 0;
        for (unsigned arity : type.slots()) widest = std::max(widest, arity);
        for (unsigned p = 1; widest + p <= bound_; ++p) {
          changed |= quantifier_pass(type, packed, p);
        }
      }
    }
    std::vector<AtomPartition> atoms;
    for (unsigned k = 0; k <= bound_; ++k) atoms.emplace_back(n_, k, ids_[k]);
    return DefinableClosure(n_, bound_, with_params_, std::move(atoms), rounds);
  }

 private:
  bool structural_pass(unsigned k) {
    bool changed = false;
    Ids& ids = ids_[k];
    for (const Ids& map : swaps_[k]) {
      changed |= refine(ids, count_[k],
                        [&](std::size_t t, std::vector<std::uint32_t>& out) {
                          out.push_back(ids[map[t]]);
                        });
    }
    // Adding a dummy last coordinate to a (k-1)-ary relation.
    const Ids& lower = ids_[k - 1];
    changed |= refine(ids, count_[k],
                      [&](std::size_t t, std::vector<std::uint32_t>& out) {
                        out.push_back(lower[t / n_]);
                      });
    if (k < bound_) {
      const Ids& upper = ids_[k + 1];
      // Identifying the last two coordinates of a (k+1)-ary relation.
      changed |= refine(ids, count_[k],
                        [&](std::size_t t, std::vector<std::uint32_t>& out) {
                          out.push_back(upper[t * n_ + t % n_]);
                        });
      // Existential projection of the last coordinate.
      changed |= refine(ids, count_[k],
                        [&](std::size_t t, std::vector<std::uint32_t>& out) {
                          const std::size_t start = out.size();
                          for (std::size_t a = 0; a < n_; ++a) {
                            out.push_back(upper[t * n_ + a]);
                          }
                          std::sort(out.begin() + start, out.end());
                          out.erase(std::unique(out.begin() + start, out.end()),
                                    out.end());
                        });
      if (with_params_) {
        // Pinning the last coordinate to each domain element.
        changed |= refine(ids, count_[k],
                          [&](std::size_t t, std::vector<std::uint32_t>& out) {
                            for (std::size_t a = 0; a < n_; ++a) {
                              out.push_back(upper[t * n_ + a]);
                            }
                          });
      }
    }
    return changed;
  }

  using PairSet =
      std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash>;

  // Pairs (sec(φ, c), sec(φ, d)) over all definable φ of arity i + p, with
  // the slot coordinates first and the parameters last.
  PairSet achievable(unsigned i, unsigned p, std::size_t c, std::size_t d,
                     bool& differs) const {
    const Ids& source = ids_[i + p];
    const std::size_t stride = size_[p];
    std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> by_atom;
    for (std::size_t y = 0; y < size_[i]; ++y) {
      by_atom[source[y * stride + c]].first |= std::uint64_t{1} << y;
      by_atom[source[y * stride + d]].second |= std::uint64_t{1} << y;
    }
    PairSet pairs{{0, 0}};
    for (const auto& [atom, sections] : by_atom) {
      if (sections.first != sections.second) differs = true;
      std::vector<std::pair<std::uint64_t, std::uint64_t>> grown;
      for (const auto& [u, v] : pairs) {
        grown.emplace_back(u | sections.first, v | sections.second);
      }
      pairs.insert(grown.begin(), grown.end());
    }
    return pairs;
  }

  bool separated(const QuantifierType& type, const PackedQuantifier& packed,
                 unsigned p, std::size_t c, std::size_t d) const {
    bool differs = false;
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> slots;
    for (std::size_t j = 0; j < type.size(); ++j) {
      PairSet pairs = achievable(type[j], p, c, d, differs);
      slots.emplace_back(pairs.begin(), pairs.end());
    }
    if (!differs) return false;
    // Depth-first over one achievable pair per slot.
    std::vector<std::size_t> choice(slots.size(), 0);
    while (true) {
      std::uint64_t u = 0, v = 0;
      for (std::size_t j = 0; j < slots.size(); ++j) {
        u |= slots[j][choice[j]].first << packed.offset(j);
        v |= slots[j][choice[j]].second << packed.offset(j);
      }
      if (packed.contains(u) != packed.contains(v)) return true;
      std::size_t j = slots.size();
      while (j-- > 0) {
        if (++choice[j] < slots[j].size()) break;
        choice[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) return false;
    }
  }

  bool quantifier_pass(const QuantifierType& type,
                       const PackedQuantifier& packed, unsigned p) {
    for (unsigned arity : type.slots()) {
      if (size_[arity] > 64) {
        fail(ErrorKind::kResourceLimit,
             "quantifier slot wider than 64 tuples in definable closure");
      }
    }
    Ids& ids = ids_[p];
    std::vector<std::vector<std::size_t>> blocks(count_[p]);
    for (std::size_t t = 0; t < ids.size(); ++t) blocks[ids[t]].push_back(t);
    std::vector<std::uint32_t> rep(ids.size());
    for (auto& block : blocks) {
      std::vector<std::size_t> rest = block;
      while (!rest.empty()) {
        const std::size_t c = rest.front();
        std::vector<std::size_t> left;
        for (std::size_t d : rest) {
          if (d == c || !separated(type, packed, p, c, d)) {
            rep[d] = static_cast<std::uint32_t>(c);
          } else {
            left.push_back(d);
          }
        }
        rest = std::move(left);
      }
    }
    return refine(ids, count_[p],
                  [&](std::size_t t, std::vector<std::uint32_t>& out) {
                    out.push_back(rep[t]);
                  });
  }

  std::size_t n_;
  unsigned bound_;
  bool with_params_;
  std::vector<std::size_t> size_;
  std::vector<Ids> ids_;
  std::vector<std::size_t> count_;
  std::vector<std::vector<Ids>> swaps_;
  std::vector<std::pair<QuantifierType, PackedQuantifier>> quantifiers_;
};

}  // namespace

AtomPartition::AtomPartition(std::size_t n, unsigned arity,
                             std::vector<std::uint32_t> atom)
    : n_(n), arity_(arity), atom_(std::move(atom)) {
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (auto& id : atom_) {
    id = renumber.emplace(id, static_cast<std::uint32_t>(renumber.size()))
             .first->second;
  }
  count_ = renumber.size();
}

bool AtomPartition::contains(const Relation& relation) const {
  if (relation.arity() != arity_ || relation.domain_size() != n_) {
    fail(ErrorKind::kArityMismatch, "relation does not match the atom space");
  }
  std::vector<int> seen(count_, -1);
  for (std::size_t t = 0; t < atom_.size(); ++t) {
    const int in = relation.contains_index(t) ? 1 : 0;
    int& s = seen[atom_[t]];
    if (s == -1) {
      s = in;
    } else if (s != in) {
      return false;
    }
  }
  return true;
}

Relation AtomPartition::union_of(std::uint64_t mask) const {
  Relation r(n_, arity_);
  for (std::size_t t = 0; t < atom_.size(); ++t) {
    if (atom_[t] < 64 && ((mask >> atom_[t]) & 1u)) r.insert_index(t);
  }
  return r;
}

DefinableClosure::DefinableClosure(std::size_t n, unsigned arity_bound,
                                   bool with_params,
                                   std::vector<AtomPartition> atoms,
                                   std::size_t rounds)
    : n_(n),
      arity_bound_(arity_bound),
      with_params_(with_params),
      atoms_(std::move(atoms)),
      rounds_(rounds) {}

const AtomPartition& DefinableClosure::atoms(unsigned arity) const {
  if (arity > arity_bound_) {
    fail(ErrorKind::kInvalidArgument,
         "arity " + std::to_string(arity) + " above the closure bound " +
             std::to_string(arity_bound_));
  }
  return atoms_[arity];
}

bool DefinableClosure::contains(const Relation& relation) const {
  return atoms(relation.arity()).contains(relation);
}

std::vector<Relation> DefinableClosure::relations(unsigned arity,
                                                  const Limits& limits) const {
  const AtomPartition& part = atoms(arity);
  if (part.atom_count() >= 63 ||
      (std::uint64_t{1} << part.atom_count()) > limits.max_listed_objects) {
    fail(ErrorKind::kResourceLimit,
         "listing 2^" + std::to_string(part.atom_count()) +
             " definable relations exceeds max_listed_objects=" +
             std::to_string(limits.max_listed_objects));
  }
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << part.atom_count());
       ++mask) {
    out.push_back(part.union_of(mask));
  }
  return out;
}

EquivalencePartition DefinableClosure::binary_equivalence() const {
  const unsigned k = std::min(2u, arity_bound_);
  if (k == 0) return EquivalencePartition::single_block(n_);
  const AtomPartition& part = atoms_[k];
  const std::size_t row = tuple_count(n_, k - 1);
  std::map<std::vector<std::uint32_t>, std::uint32_t> rows;
  std::vector<std::uint32_t> block(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    std::vector<std::uint32_t> key(part.atom_ids().begin() + a * row,
                                   part.atom_ids().begin() + (a + 1) * row);
    block[a] = rows.emplace(key, static_cast<std::uint32_t>(rows.size()))
                   .first->second;
  }
  return EquivalencePartition(std::move(block));
}

EquivalencePartition DefinableClosure::full_equivalence() const {
  std::map<std::vector<std::uint32_t>, std::uint32_t> keys;
  std::vector<std::uint32_t> block(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    std::vector<std::uint32_t> key;
    for (unsigned k = 1; k <= arity_bound_; ++k) {
      const std::size_t row = tuple_count(n_, k - 1);
      const auto& ids = atoms_[k].atom_ids();
      key.insert(key.end(), ids.begin() + a * row, ids.begin() + (a + 1) * row);
    }
    block[a] = keys.emplace(key, static_cast<std::uint32_t>(keys.size()))
                   .first->second;
  }
  return EquivalencePartition(std::move(block));
}

DefinableClosure definable_closure_eqfree(const Structure& structure,
                                          unsigned arity_bound,
                                          bool with_params,
                                          const Limits& limits) {
  return ClosureBuilder(structure, arity_bound, with_params, limits).run();
}

unsigned default_arity_bound(const Structure& structure) {
  return std::max({3u, structure.max_relation_arity(),
                   structure.max_slot_arity()});
}

SimEquivResult sim_equiv_detailed(const Structure& structure,
                                  const Limits& limits, unsigned start_bound) {
  const std::size_t n = structure.domain_size();
  unsigned bound = start_bound ? start_bound : default_arity_bound(structure);
  bound = std::max(bound, structure.max_relation_arity());
  EquivalencePartition current =
      definable_closure_eqfree(structure, bound, true, limits)
          .binary_equivalence();
  while (true) {
    if (checked_power(n, bound + 1) > limits.max_tuples) {
      return {current, bound, false};
    }
    EquivalencePartition next =
        definable_closure_eqfree(structure, bound + 1, true, limits)
            .binary_equivalence();
    if (next == current) return {current, bound, true};
    current = std::move(next);
    ++bound;
  }
}

EquivalencePartition sim_equiv(const Structure& structure,
                               const Limits& limits) {
  return sim_equiv_detailed(structure, limits).equivalence;
}

}  // namespace galdual
