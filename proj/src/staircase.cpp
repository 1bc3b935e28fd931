#include "gfl/staircase.hpp"

#include <algorithm>
#include <sstream>

namespace gfl {

namespace {

void check_member_shape(const Shape& shape, const ModuleIndex& j) {
  if (j.slot > shape.gen_count) fail(Err::Structural, "module slot out of range");
  if (j.exps.size() != shape.var_count) fail(Err::Structural, "exponent width mismatch");
}

// Visits every exponent vector of total degree <= d, in no particular order.
template <typename F>
void for_each_exponent(int var_count, int d, std::vector<int>& buf, int pos, F&& visit) {
  if (pos == var_count) {
    visit(ExponentVector(buf));
    return;
  }
  for (int e = 0; e <= d; ++e) {
    buf[pos] = e;
    for_each_exponent(var_count, d - e, buf, pos + 1, visit);
  }
  buf[pos] = 0;
}

}  // namespace

std::vector<ModuleIndex> minimal_generators(std::vector<ModuleIndex> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ModuleIndex& a, const ModuleIndex& b) { return IdxDescLex{}(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ModuleIndex> keep;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && index_divides(gens[j], gens[i])) redundant = true;
    if (!redundant) keep.push_back(gens[i]);
  }
  return keep;
}

Staircase Staircase::full(int gen_count, int var_count) {
  if (gen_count < 0 || var_count < 0) fail(Err::Structural, "negative staircase dimensions");
  return Staircase(Shape{gen_count, var_count}, {});
}

Staircase Staircase::from_removed_generators(Shape shape, std::vector<ModuleIndex> gens) {
  for (const auto& j : gens) check_member_shape(shape, j);
  return Staircase(shape, minimal_generators(std::move(gens)));
}

bool Staircase::contains(const ModuleIndex& j) const {
  check_member_shape(shape_, j);
  for (const auto& c : corners_)
    if (index_divides(c, j)) return false;
  return true;
}

Staircase Staircase::remove_corner(const ModuleIndex& j) const {
  if (!contains(j)) fail(Err::AlreadyRemoved, "index is already outside the family");
  std::vector<ModuleIndex> gens = corners_;
  gens.push_back(j);
  return Staircase(shape_, minimal_generators(std::move(gens)));
}

long long Staircase::count_up_to_degree(int d) const {
  if (d < 0) return 0;
  long long count = 0;
  std::vector<int> buf(static_cast<size_t>(shape_.var_count), 0);
  for (int s = 1; s <= shape_.gen_count; ++s) {
    for_each_exponent(shape_.var_count, d, buf, 0, [&](ExponentVector e) {
      if (contains(ModuleIndex(s, std::move(e)))) ++count;
    });
  }
  return count;
}

std::vector<ModuleIndex> Staircase::elements_up_to_degree(int d) const {
  std::vector<ModuleIndex> out;
  if (d < 0) return out;
  std::vector<int> buf(static_cast<size_t>(shape_.var_count), 0);
  for (int s = 1; s <= shape_.gen_count; ++s) {
    for_each_exponent(shape_.var_count, d, buf, 0, [&](ExponentVector e) {
      ModuleIndex j(s, std::move(e));
      if (contains(j)) out.push_back(std::move(j));
    });
  }
  std::sort(out.begin(), out.end(),
            [](const ModuleIndex& a, const ModuleIndex& b) { return IdxDescLex{}(a, b); });
  return out;
}

std::string Staircase::render_ascii() const {
  if (shape_.var_count != 2) fail(Err::Structural, "grid rendering needs exactly two variables");
  std::ostringstream out;
  for (int s = 1; s <= shape_.gen_count; ++s) {
    if (shape_.gen_count > 1) out << "slot " << s << "\n";
    int extent = 8;
    for (const auto& c : corners_)
      if (c.slot == s) extent = std::max({extent, c.exps.at(0) + 2, c.exps.at(1) + 2});
    for (int y = extent - 1; y >= 0; --y) {
      for (int x = 0; x < extent; ++x) {
        ModuleIndex j(s, ExponentVector({x, y}));
        char cell;
        if (std::find(corners_.begin(), corners_.end(), j) != corners_.end())
          cell = 'C';
        else
          cell = contains(j) ? '.' : '#';
        if (x) out << ' ';
        out << cell;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace gfl
