#pragma once

#include <string>
#include <vector>

#include "gfl/indices.hpp"

namespace gfl {

// Dimensions of the ambient free module: gen_count slots, var_count variables.
struct Shape {
  int gen_count = 1;
  int var_count = 0;

  bool operator==(const Shape& o) const {
    return gen_count == o.gen_count && var_count == o.var_count;
  }
};

// Reduces a set of module indices to its minimal elements under
// componentwise divisibility (an antichain), sorted descending lex.
std::vector<ModuleIndex> minimal_generators(std::vector<ModuleIndex> gens);

// A good family of module monomials: the complement of the monomial ideal
// generated by a finite removed set. Stored by the minimal generators of the
// removed set; those generators are exactly the corners once the family is a
// staircase of standard monomials.
class Staircase {
 public:
  Staircase() : shape_{0, 0} {}

  static Staircase full(int gen_count, int var_count);
  static Staircase from_removed_generators(Shape shape, std::vector<ModuleIndex> gens);

  const Shape& shape() const { return shape_; }
  const std::vector<ModuleIndex>& corners() const { return corners_; }

  bool contains(const ModuleIndex& j) const;

  // Shrinks the family by removing the monomial ideal generated by j.
  Staircase remove_corner(const ModuleIndex& j) const;

  // Number of family members of total degree <= d, summed over slots.
  long long count_up_to_degree(int d) const;
  // The family members of total degree <= d, sorted descending lex.
  std::vector<ModuleIndex> elements_up_to_degree(int d) const;

  // Per-slot grid picture, two-variable families only: 'C' corners,
  // '#' removed, '.' family.
  std::string render_ascii() const;

  bool operator==(const Staircase& o) const {
    return shape_ == o.shape_ && corners_ == o.corners_;
  }
  bool operator!=(const Staircase& o) const { return !(*this == o); }

 private:
  Staircase(Shape shape, std::vector<ModuleIndex> corners)
      : shape_(shape), corners_(std::move(corners)) {}

  Shape shape_;
  std::vector<ModuleIndex> corners_;  // antichain, descending lex
};

}  // namespace gfl
