// Copyright 2026 The epiq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file
/// Finite groups acting on finite spaces of conceptual-variable values.
///
/// Group elements are indices into a Cayley table. `cayley[g][h]` is the
/// product gh, and an action satisfies act(g, act(h, x)) = act(gh, x), i.e.
/// h is applied first. A `VariableMap` is a function theta from the point
/// space onto its value space; it is permissible for an action when equal
/// theta values stay equal after every group element acts, in which case the
/// action descends to the value space.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "epiq/error.hpp"

namespace epiq::groups {

using Index = std::size_t;
using Table = std::vector<std::vector<Index>>;

class FiniteGroup {
 public:
  /// Validates the table as a group multiplication table (Latin square,
  /// two-sided identity, associativity) and derives identity and inverses.
  explicit FiniteGroup(Table cayley) : cayley_(std::move(cayley)) {
    const Index n = cayley_.size();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "group must have at least one element");
    for (const auto& row : cayley_) {
      if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "Cayley table is not square");
      for (Index v : row) {
        if (v >= n) throw Error(ErrorKind::InvalidArgument, "Cayley table entry out of range");
      }
    }
    for (Index g = 0; g < n; ++g) {
      std::vector<bool> row_seen(n, false), col_seen(n, false);
      for (Index h = 0; h < n; ++h) {
        if (row_seen[cayley_[g][h]] || col_seen[cayley_[h][g]]) {
          throw Error(ErrorKind::InvalidArgument, "Cayley table is not a Latin square");
        }
        row_seen[cayley_[g][h]] = col_seen[cayley_[h][g]] = true;
      }
    }
    std::optional<Index> e;
    for (Index g = 0; g < n && !e; ++g) {
      bool ok = true;
      for (Index h = 0; h < n && ok; ++h) ok = cayley_[g][h] == h && cayley_[h][g] == h;
      if (ok) e = g;
    }
    if (!e) throw Error(ErrorKind::InvalidArgument, "Cayley table has no identity");
    identity_ = *e;
    inverse_.assign(n, 0);
    for (Index g = 0; g < n; ++g) {
      for (Index h = 0; h < n; ++h) {
        if (cayley_[g][h] == identity_) inverse_[g] = h;
      }
      if (cayley_[inverse_[g]][g] != identity_) {
        throw Error(ErrorKind::InvalidArgument, "inverse is not two-sided");
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        for (Index c = 0; c < n; ++c) {
          if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]]) {
            throw Error(ErrorKind::InvalidArgument, "Cayley table is not associative");
          }
        }
      }
    }
  }

  static FiniteGroup trivial() { return FiniteGroup(Table{{0}}); }

  /// Z_n with element k standing for "add k".
  static FiniteGroup cyclic(Index n) {
    Table t(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(t));
  }

  Index order() const noexcept { return cayley_.size(); }
  Index identity() const noexcept { return identity_; }
  Index inverse(Index g) const { return inverse_.at(g); }
  Index multiply(Index g, Index h) const { return cayley_.at(g).at(h); }
  const Table& cayley() const noexcept { return cayley_; }

 private:
  Table cayley_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
};

/// A subgroup together with the parent indices of its elements; element k of
/// `group` is `elements[k]` in the parent.
struct Subgroup {
  FiniteGroup group;
  std::vector<Index> elements;
};

/// Builds the subgroup on `elements` (parent indices). Throws InvalidArgument
/// unless the set is closed under products.
inline Subgroup make_subgroup(const FiniteGroup& parent, std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<std::optional<Index>> local(parent.order());
  for (Index k = 0; k < elements.size(); ++k) local.at(elements[k]) = k;
  Table t(elements.size(), std::vector<Index>(elements.size()));
  for (Index a = 0; a < elements.size(); ++a) {
    for (Index b = 0; b < elements.size(); ++b) {
      const auto prod = local[parent.multiply(elements[a], elements[b])];
      if (!prod) throw Error(ErrorKind::InvalidArgument, "subset is not closed under the product");
      t[a][b] = *prod;
    }
  }
  return Subgroup{FiniteGroup(std::move(t)), std::move(elements)};
}

class GroupAction {
 public:
  /// `table[g][x]` is the image of point x under element g.
  GroupAction(FiniteGroup group, std::vector<std::string> space, Table table)
      : group_(std::move(group)), space_(std::move(space)), table_(std::move(table)) {
    const Index n = space_.size();
    if (table_.size() != group_.order()) {
      throw Error(ErrorKind::InvalidArgument, "action table needs one row per group element");
    }
    for (const auto& row : table_) {
      if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "action row length differs from space size");
      for (Index y : row) {
        if (y >= n) throw Error(ErrorKind::InvalidArgument, "action image out of range");
      }
    }
    for (Index x = 0; x < n; ++x) {
      if (table_[group_.identity()][x] != x) {
        throw Error(ErrorKind::InvalidArgument, "identity element does not fix every point");
      }
    }
    for (Index g = 0; g < group_.order(); ++g) {
      for (Index h = 0; h < group_.order(); ++h) {
        for (Index x = 0; x < n; ++x) {
          if (table_[g][table_[h][x]] != table_[group_.multiply(g, h)][x]) {
            throw Error(ErrorKind::InvalidArgument, "action is not compatible with the group product");
          }
        }
      }
    }
  }

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<std::string>& space() const noexcept { return space_; }
  const Table& table() const noexcept { return table_; }
  Index size() const noexcept { return space_.size(); }
  Index act(Index g, Index x) const { return table_.at(g).at(x); }

  /// True when g moves no point.
  bool acts_trivially(Index g) const {
    for (Index x = 0; x < size(); ++x) {
      if (act(g, x) != x) return false;
    }
    return true;
  }

 private:
  FiniteGroup group_;
  std::vector<std::string> space_;
  Table table_;
};

/// The action of a subgroup obtained by restricting `action`.
inline GroupAction restrict_action(const GroupAction& action, const Subgroup& sub) {
  Table t;
  t.reserve(sub.elements.size());
  for (Index g : sub.elements) t.push_back(action.table().at(g));
  return GroupAction(sub.group, action.space(), std::move(t));
}

class VariableMap {
 public:
  VariableMap(std::vector<std::string> domain, std::vector<std::string> codomain, std::vector<Index> map)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
    if (map_.size() != domain_.size()) throw Error(ErrorKind::InvalidArgument, "variable map is not total");
    std::vector<bool> hit(codomain_.size(), false);
    for (Index v : map_) {
      if (v >= codomain_.size()) throw Error(ErrorKind::InvalidArgument, "variable value out of range");
      hit[v] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw Error(ErrorKind::InvalidArgument, "codomain contains values outside the image");
    }
  }

  /// Builds a map from per-point value labels; the codomain is the set of
  /// labels in order of first appearance.
  static VariableMap from_labels(std::vector<std::string> domain, const std::vector<std::string>& labels) {
    std::vector<std::string> codomain;
    std::vector<Index> map;
    for (const auto& l : labels) {
      auto it = std::find(codomain.begin(), codomain.end(), l);
      if (it == codomain.end()) {
        codomain.push_back(l);
        map.push_back(codomain.size() - 1);
      } else {
        map.push_back(static_cast<Index>(it - codomain.begin()));
      }
    }
    return VariableMap(std::move(domain), std::move(codomain), std::move(map));
  }

  static VariableMap identity(std::vector<std::string> domain) {
    std::vector<Index> map(domain.size());
    std::iota(map.begin(), map.end(), Index{0});
    auto codomain = domain;
    return VariableMap(std::move(domain), std::move(codomain), std::move(map));
  }

  const std::vector<std::string>& domain() const noexcept { return domain_; }
  const std::vector<std::string>& codomain() const noexcept { return codomain_; }
  const std::vector<Index>& map() const noexcept { return map_; }
  Index operator()(Index point) const { return map_.at(point); }

 private:
  std::vector<std::string> domain_;
  std::vector<std::string> codomain_;
  std::vector<Index> map_;
};

namespace detail {

inline void require_same_space(const VariableMap& theta, const GroupAction& action) {
  if (theta.domain().size() != action.size()) {
    throw Error(ErrorKind::SpaceMismatch, "variable domain and action space differ in size");
  }
}

// theta(g x) depends on x only through theta(x)
inline bool element_descends(const VariableMap& theta, const GroupAction& action, Index g) {
  std::vector<std::optional<Index>> image(theta.codomain().size());
  for (Index x = 0; x < action.size(); ++x) {
    auto& slot = image[theta(x)];
    const Index y = theta(action.act(g, x));
    if (slot && *slot != y) return false;
    slot = y;
  }
  return true;
}

}  // namespace detail

/// Exhaustive check that theta(x1) = theta(x2) implies theta(g x1) = theta(g x2)
/// for every group element g.
inline bool check_permissible(const VariableMap& theta, const GroupAction& action) {
  detail::require_same_space(theta, action);
  for (Index g = 0; g < action.group().order(); ++g) {
    if (!detail::element_descends(theta, action, g)) return false;
  }
  return true;
}

/// The action induced on theta's value space: (g theta)(x) = theta(g x).
inline GroupAction induce_action(const VariableMap& theta, const GroupAction& action) {
  if (!check_permissible(theta, action)) {
    throw Error(ErrorKind::NotPermissible, "variable is not permissible under the action");
  }
  const Index nv = theta.codomain().size();
  Table t(action.group().order(), std::vector<Index>(nv));
  for (Index g = 0; g < action.group().order(); ++g) {
    for (Index x = 0; x < action.size(); ++x) t[g][theta(x)] = theta(action.act(g, x));
  }
  // GroupAction's constructor re-verifies the homomorphism property.
  return GroupAction(action.group(), theta.codomain(), std::move(t));
}

/// Largest subgroup under which theta is permissible. Possibly trivial.
inline Subgroup maximal_permissible_subgroup(const VariableMap& theta, const GroupAction& action) {
  detail::require_same_space(theta, action);
  std::vector<Index> keep;
  for (Index g = 0; g < action.group().order(); ++g) {
    if (detail::element_descends(theta, action, g)) keep.push_back(g);
  }
  return make_subgroup(action.group(), std::move(keep));
}

struct Partition {
  std::vector<std::vector<Index>> blocks;  // each block ascending; blocks ordered by smallest point
  std::vector<Index> block_of;             // point -> block index

  bool transitive() const noexcept { return blocks.size() == 1; }
};

inline Partition orbits(const GroupAction& action) {
  Partition p;
  const Index n = action.size();
  p.block_of.assign(n, n);
  for (Index x = 0; x < n; ++x) {
    if (p.block_of[x] != n) continue;
    std::vector<Index> block;
    for (Index g = 0; g < action.group().order(); ++g) block.push_back(action.act(g, x));
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    for (Index y : block) p.block_of[y] = p.blocks.size();
    p.blocks.push_back(std::move(block));
  }
  return p;
}

/// True iff alpha is a function of beta: beta(x1) = beta(x2) implies alpha(x1) = alpha(x2).
inline bool refines(const VariableMap& beta, const VariableMap& alpha) {
  if (beta.domain().size() != alpha.domain().size()) {
    throw Error(ErrorKind::SpaceMismatch, "variables are defined on different spaces");
  }
  std::vector<std::optional<Index>> f(beta.codomain().size());
  for (Index x = 0; x < beta.domain().size(); ++x) {
    auto& slot = f[beta(x)];
    if (slot && *slot != alpha(x)) return false;
    slot = alpha(x);
  }
  return true;
}

/// Indices of the maximal elements of a declared set of accessible variables
/// under the ordering "alpha <= beta iff alpha is a function of beta".
inline std::vector<Index> maximal_variables(const std::vector<VariableMap>& declared) {
  std::vector<Index> out;
  for (Index i = 0; i < declared.size(); ++i) {
    bool dominated = false;
    for (Index j = 0; j < declared.size() && !dominated; ++j) {
      dominated = j != i && refines(declared[j], declared[i]) && !refines(declared[i], declared[j]);
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

enum class MeasureSide { left, right, both };

struct InvariantMeasure {
  std::vector<double> weights;
  MeasureSide side = MeasureSide::both;

  double measure(const std::vector<Index>& subset) const {
    double m = 0.0;
    for (Index x : subset) m += weights.at(x);
    return m;
  }
};

/// Invariant measure constant on each orbit. `orbit_masses[k]` is the total
/// mass of orbit k (orbits ordered as in `orbits`); by default every orbit
/// gets unit mass, which makes the measure a probability on each orbit.
/// For finite groups a measure that is constant on orbits is both left and
/// right invariant.
inline InvariantMeasure invariant_measure(const GroupAction& action,
                                          std::optional<std::vector<double>> orbit_masses = std::nullopt) {
  const Partition p = orbits(action);
  std::vector<double> masses = orbit_masses.value_or(std::vector<double>(p.blocks.size(), 1.0));
  if (masses.size() != p.blocks.size()) {
    throw Error(ErrorKind::InvalidArgument, "need one mass per orbit");
  }
  InvariantMeasure mu;
  mu.weights.assign(action.size(), 0.0);
  for (Index k = 0; k < p.blocks.size(); ++k) {
    if (!(masses[k] >= 0.0)) throw Error(ErrorKind::InvalidArgument, "orbit mass must be nonnegative");
    for (Index x : p.blocks[k]) mu.weights[x] = masses[k] / static_cast<double>(p.blocks[k].size());
  }
  return mu;
}

/// Exhaustive structural checks of a variable against an action.
struct StructureCheck {
  bool permissible = false;          // under the full group
  Subgroup maximal;                  // largest subgroup keeping theta permissible
  bool maximal_permissible = false;  // theta is permissible under `maximal`
  bool maximal_is_maximal = false;   // every element outside `maximal` breaks permissibility
  bool induced_homomorphism = false; // induced action on the values composes like the subgroup
  Partition space_orbits;
  Partition value_orbits;            // orbits of the induced action
};

inline StructureCheck check_structure(const VariableMap& theta, const GroupAction& action) {
  StructureCheck out{check_permissible(theta, action), maximal_permissible_subgroup(theta, action), false, false, false, {}, {}};
  const GroupAction sub_action = restrict_action(action, out.maximal);
  out.maximal_permissible = check_permissible(theta, sub_action);

  out.maximal_is_maximal = true;
  std::vector<bool> inside(action.group().order(), false);
  for (Index g : out.maximal.elements) inside[g] = true;
  for (Index g = 0; g < action.group().order(); ++g) {
    if (!inside[g] && detail::element_descends(theta, action, g)) out.maximal_is_maximal = false;
  }

  const GroupAction induced = induce_action(theta, sub_action);
  const FiniteGroup& h = induced.group();
  out.induced_homomorphism = true;
  for (Index g1 = 0; g1 < h.order(); ++g1) {
    for (Index g2 = 0; g2 < h.order(); ++g2) {
      for (Index v = 0; v < induced.size(); ++v) {
        if (induced.act(h.multiply(g1, g2), v) != induced.act(g1, induced.act(g2, v))) out.induced_homomorphism = false;
      }
    }
    for (Index x = 0; x < action.size(); ++x) {
      if (induced.act(g1, theta(x)) != theta(sub_action.act(g1, x))) out.induced_homomorphism = false;
    }
  }
  out.space_orbits = orbits(action);
  out.value_orbits = orbits(induced);
  return out;
}

}  // namespace epiq::groups
