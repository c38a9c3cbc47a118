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

#include <string>
#include <string_view>
#include <vector>

#include "galdual/formula.hpp"
#include "galdual/limits.hpp"
#include "galdual/model.hpp"

namespace galdual {

// Descriptions of a structure "from below". Throughout, variable x_i stands
// for domain element i (the canonical assignment), and variables from n
// upward are bound inside quantifier slots and the bijection formula.

/// Conjunction of the literals ±symbol(x_{t_1}, ..., x_{t_k}) over all
/// tuples t in lexicographic order, positive exactly for members.
FormulaPtr describe_relation(const Relation& relation, std::string_view symbol);

/// For every sequence K of the quantifier's member space, the literal
/// ±symbol ȳ_1...ȳ_k (φ_1, ..., φ_k) with φ_j = ⋁_{t ∈ K_j} ⋀_l y_{j,l} = x_{t_l},
/// positive exactly for members. Slot j binds the variables first_bound +
/// (i_1 + ... + i_{j-1}) onwards.
FormulaPtr describe_quantifier(const Quantifier& quantifier,
                               std::string_view symbol, Var first_bound,
                               const Limits& limits = {});

/// Conjunction of the descriptions of every symbol of the structure, in name
/// order, relations first.
FormulaPtr describe_structure(const Structure& structure,
                              const Limits& limits = {});

/// x_0..x_{n-1} enumerate the domain without repetition.
FormulaPtr bijection_psi(std::size_t n);

/// A defining formula together with its free symbols and variables.
struct PhiFormula {
  FormulaPtr formula;
  /// Second-order variables, one per quantifier slot (quantifier targets).
  std::vector<std::string> symbols;
  /// First-order free variables (relation targets).
  std::vector<Var> free_vars;
};

/// ∀X ((Δ_S ∧ ψ) → ⋁_{U ∈ Q} ⋀_j Δ_{U_j}(R_j)) with fresh symbols R_j.
PhiFormula build_phi_quantifier(const Structure& structure,
                                const Quantifier& target,
                                const Limits& limits = {});

/// ∃X (Δ_S ∧ ψ ∧ ⋁_{t ∈ T} ⋀_l z_l = x_{t_l}) with free variables z̄.
PhiFormula build_phi_relation(const Structure& structure,
                              const Relation& target,
                              const Limits& limits = {});

/// Candidates (R_1, ..., R_k) of the given type for which the formula holds
/// with R_j bound to phi.symbols[j]. With `only_saturated`, candidates
/// with a slot not saturated under it are skipped.
Quantifier accepted_members(const Structure& structure, const PhiFormula& phi,
                            const QuantifierType& type,
                            const EquivalencePartition* only_saturated = nullptr,
                            const Limits& limits = {});

/// Extension of the formula over phi.free_vars.
Relation accepted_tuples(const Structure& structure, const PhiFormula& phi);

}  // namespace galdual
