// Copyright 2026 The Equivariant Trisection Diagrams Authors.
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

// Small finite groups given by a multiplication table with named elements.
// Element 0 is the identity.

#ifndef ETD_GROUP_HPP_
#define ETD_GROUP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "etd/cmap.hpp"

namespace etd {

class FiniteGroup {
 public:
  FiniteGroup() : names_{"e"}, table_{{0}}, inverse_{0} {}

  // Validates closure, associativity, identity at index 0 and inverses.
  // Throws Error(kParse) on failure.
  static FiniteGroup FromTable(std::vector<std::string> names,
                               std::vector<std::vector<int>> table);
  // Closure of permutation generators, elements ordered breadth-first.
  // Generator i receives names[i] when given; other elements get words.
  static FiniteGroup FromPermutations(const std::vector<Perm>& generators,
                                      const std::vector<std::string>& names,
                                      int cap = 100000);
  static FiniteGroup Trivial();
  static FiniteGroup Cyclic(int n);
  static FiniteGroup Quaternion();
  static FiniteGroup Dihedral(int n);  // order 2n, elements r^k and s r^k
  static FiniteGroup Product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return static_cast<int>(names_.size()); }
  int Mul(int a, int b) const { return table_[a][b]; }
  int Inv(int a) const { return inverse_[a]; }
  int ElementOrder(int a) const;
  const std::string& Name(int a) const { return names_[a]; }
  std::optional<int> Find(const std::string& name) const;
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }

  // Elements of the subgroup generated by the given elements, sorted.
  std::vector<int> Generate(const std::vector<int>& gens) const;
  bool IsAbelian() const;
  bool IsNormal(const std::vector<int>& subgroup) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

// A homomorphism onto a quotient, given by the images of all elements.
struct GroupMap {
  FiniteGroup target;
  std::vector<int> image;
};

// The quotient by a normal subgroup, with cosets named by representatives.
GroupMap QuotientGroup(const FiniteGroup& g, const std::vector<int>& normal);

}  // namespace etd

#endif  // ETD_GROUP_HPP_
