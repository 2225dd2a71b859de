#pragma once

// Named end-to-end verification pipelines. Each returns rows with the same
// bound columns, so the output is always valid CSV.
//
//   thm1           ex(n; K3-sub, K2,2-ind) vs thm1, plus the co-degree cap
//                  R(3,2) on every witness                     n = 4..9
//   thm2           3 t3(G) vs thm2(n,4,2,2,3) over all K4-free,
//                  induced-K2,2-free graphs                    n = 4..9
//   thm3           min over sampled induced-K2,3-free graphs of
//                  omega(G) - thm3_clique_lb(n, delta(G), 2)   n = 5..10
//   thm4-eg        C5-free, induced-K2,2-free graphs: largest co-degree of a
//                  non-adjacent pair vs eg-cap, ex vs thm4     n = 4..9
//   c3c4-identity  ex(n; C3-sub, C4-ind) vs ex(n; C3-sub, C4-sub) by an
//                  independent strategy                       n = 4..8
//   es-c4c5        ex(n, {C4, C5}) vs es-c4c5                  n = 4..8
//   constructions  edge counts and certification of the algebraic graphs

#include "turanlab/search.hpp"

#include <string>
#include <vector>

namespace turanlab {

struct SuiteOptions {
    int max_n = 0;  // 0: the suite's default upper end
    int thm3_samples = 500;
    SearchOptions search;
};

std::vector<std::string> suite_names();

// Throws std::invalid_argument for an unknown suite or a max_n below the
// suite's first order.
std::vector<VerificationRow> run_suite(const std::string& name, const SuiteOptions& options = {});

// Largest |N(x) ∩ N(y)| over non-adjacent pairs x != y; 0 when none.
int max_nonadjacent_codegree(const Graph& g);

}  // namespace turanlab
