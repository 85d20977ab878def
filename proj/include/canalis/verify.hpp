#pragma once

#include <canalis/exact.hpp>

#include <string>
#include <vector>

namespace canalis
{

struct check_result
{
  std::string name;
  std::string expected; ///< oracle value
  std::string actual;   ///< closed-form value
  bool passed = false;
};

struct verification_report
{
  std::vector<check_result> checks;

  bool ok() const;
  const check_result* first_failure() const;
};

/// Biases used by the default probability cross-checks: 1/10, 1/4, 1/2, 3/5, 9/10.
std::vector<exact_prob> standard_biases();

/*! \brief Cross-checks every closed form against the exhaustive census.

  For each n in [1, max_n] (max_n <= 4): |C|, c(k) for every k, |BC| = 2n, and
  for every bias Pr_p(C), Pr_p(BC), Pr_p(PCE_k) and Pr_p(NCE_k) against the
  census weight enumerators, all as exact values.
*/
verification_report verify_against_census( unsigned max_n, const std::vector<exact_prob>& biases = standard_biases() );

} // namespace canalis
