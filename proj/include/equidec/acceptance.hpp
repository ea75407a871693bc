#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "equidec/geometry.hpp"

namespace equidec {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Fixtures.
Polytope pair_polytope();
Polytope pair_polytope_prime();
Polytope rational_triangle();        ///< (-4,0), (-1,0), (-3,2/3)
Polytope rational_triangle_prime();  ///< (1,0), (3,0), (1,1)
Polytope interval(const Rat& lo, const Rat& hi);

CriterionResult criterion_closed_forms();
CriterionResult criterion_evaluation_table();
CriterionResult criterion_white(unsigned seed = 20240601, int images_per_class = 50);
CriterionResult criterion_T_decompositions(long max_q = 12);
CriterionResult criterion_main_identity(unsigned seed = 7, int samples = 100);
CriterionResult criterion_polytope_pair();
CriterionResult criterion_rational_examples();
CriterionResult criterion_mutations();

/// All eight, in order.
std::vector<CriterionResult> run_acceptance();

/// One line per criterion: "[PASS] 3 white classification (1.2 s) ..."
void print_acceptance_table(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace equidec
