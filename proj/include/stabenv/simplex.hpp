#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stabenv/closedform.hpp"
#include "stabenv/series.hpp"

namespace stabenv {

enum class LayerSource { closed_form, gr2_formula, localization };

/// Layer n of the Gr_2-simplex keyed by (i1, i2). Row r = i2 - i1 and
/// NE-SW diagonal i2 are derived views.
struct SimplexLayer {
  int n = 0;
  bool extended = false;  // i1 = i2 entries present
  std::map<std::pair<int, int>, Rational> entries;

  // Missing positions read as 0.
  Rational at(int i1, int i2) const;
};

// Standard layer: 1 <= i1 < i2 <= n, with <1,2>_2 := 1.
SimplexLayer build_layer(int n, LayerSource source = LayerSource::gr2_formula,
                         Execution exec = Execution::parallel);

// Extended layer: 1 <= i1 <= i2 <= n from gr2_closed_form; n = 2 is <1,2> = 1
// alone.
SimplexLayer build_extended_layer(int n);

enum class NeighborMode {
  plain,           // recurrence at every entry
  with_exception,  // consecutive entries given by Narayana numbers instead
  extended,        // recurrence on extended layers, no exception
};

// <ij>_n = <ij>_{n-1} + <i-1,j>_{n-1} + <i,j-1>_{n-1} + <i-1,j-1>_{n-1} for
// every i < j of hi; in extended mode lo supplies <ii>_{n-1} too.
CheckOutcome four_neighbor_check(const SimplexLayer& lo, const SimplexLayer& hi, NeighborMode mode);

// with_exception (resp. extended) checks for each consecutive pair of layers
// in n_low..n_max.
CheckOutcome four_neighbor_theorem_check(int n_low, int n_max);
CheckOutcome extended_recurrence_check(int n_low, int n_max);

// Variables a, b, c.
VarSetPtr abc_vars();
// Variables x, y, z.
VarSetPtr xyz_vars();

// <i1,i2>_n -> a^{i1-1} b^{i2-i1-1} c^{n-i2}; homogeneous of degree n-2.
MultiPoly layer_to_polynomial(const SimplexLayer& layer);

// Exact division by a + 2b + c. Throws NotDivisible.
MultiPoly reduce_layer(const MultiPoly& layer_poly);

// Divisibility of every standard layer 3 <= n <= n_max by a + 2b + c.
CheckOutcome divisibility_check(int n_max);

// xi_{l,r,c} is the coefficient of a^{r-c} b^{l-r} c^{c-1} in the reduced
// polynomial of layer n = l + 2.
using ReducedLayer = std::map<std::pair<int, int>, Rational>;  // (r, c) -> xi
ReducedLayer reduced_layer(int l);

// xi_{l,r,c} = xi_{l-1,r,c} + xi_{l-1,r-1,c} + xi_{l-1,r-1,c-1} + xi_{l-1,r-2,c-1}
// for 2 <= l <= n_max - 2.
CheckOutcome reduced_recurrence_check(int n_max);

// a^i b^j c^k <-> x^{i+j+k+1} y^{i+k+1} z^{k+1}.
Monomial abc_to_xyz(const Monomial& m);
// x^l y^r z^k -> a^{r-k} b^{l-r} c^{k-1}; requires 1 <= k <= r <= l.
Monomial xyz_to_abc(const Monomial& m);

/// B (reduced simplex) and F (simplex) as series in x, y, z.
struct GeneratingFunctions {
  TruncatedSeries b;
  TruncatedSeries f;
};

// Throws InsufficientOrder when order < 1.
GeneratingFunctions generating_functions(int order);

// Coefficient of x^{n-1} y^{n-(i2-i1)} z^{i1} in F. Throws InsufficientOrder
// unless order > 3n.
Rational generating_function_coeff(int n, int i1, int i2, int order);
Rational generating_function_coeff(const GeneratingFunctions& gf, int n, int i1, int i2);

// All integrals for Gr(k, n), keyed by fixed point, for the (k+1)-simplex
// export. No recurrence is checked.
std::map<FixedPoint, Rational> build_layer_k(int n, int k, LayerSource source = LayerSource::closed_form,
                                             Execution exec = Execution::parallel);

// Triangle layout: top row <1,n>, each lower row one step southwest (a/b)
// and southeast (c/b).
std::string format_layer_text(const SimplexLayer& layer);
std::string format_reduced_text(const ReducedLayer& layer, int l);

}  // namespace stabenv
