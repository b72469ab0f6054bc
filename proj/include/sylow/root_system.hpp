#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sylow/group_data.hpp"
#include "sylow/int_matrix.hpp"

namespace sylow {

/// Root lattice of one simple component in simple-root coordinates.
/// cartan(i,j) = <alpha_i^vee, alpha_j>, Bourbaki labelling (0-based).
struct RootDatum {
  SimpleFactor factor;
  int rank = 0;
  IntMatrix cartan;
  std::vector<bool> long_root;
  /// Diagram permutation induced by the twist (identity when split).
  std::vector<int> sigma;
  /// s_i acting on column vectors: s_i = I - e_i * row_i(cartan).
  std::vector<SmallMat> reflections;
};

IntMatrix cartan_matrix(Series s, int rank);
RootDatum root_datum(const SimpleFactor& f);

/// F* on one component: q * P_sigma for integral q; for the very twisted
/// types alpha_i -> p^(k+1) alpha_sigma(i) (long) or p^k alpha_sigma(i)
/// (short), where q = p^((2k+1)/2).
SmallMat frobenius_matrix(const RootDatum& rd, const QSpec& q);

/// Block matrix sending (x_1..x_n) to (x_2, .., x_n, F1(x_1)).
SmallMat descent_frobenius(const SmallMat& f1, int n);
/// diag(1, .., 1, w1).
SmallMat descent_lift(const SmallMat& w1, int n);

/// Weyl group enumerated by breadth-first search on right multiplication by
/// simple reflections, so words are shortlex-minimal and indices give a
/// deterministic tie-break.
struct WeylGroup {
  int rank = 0;
  std::vector<SmallMat> elements;
  std::vector<std::string> words;
  std::unordered_map<SmallMat, int, SmallMatHash> index;
  int longest = 0;
};

/// Enumeration cap; SYLOW_WEYL_CAP overrides the default of 100000.
std::uint64_t weyl_cap();

/// Cached enumeration for the diagram of f. Throws when |W| exceeds the cap.
const WeylGroup& weyl_group(const SimpleFactor& f);

/// Product of simple reflections named by 1-based digits, e.g. "1212".
SmallMat word_matrix(const RootDatum& rd, const std::string& word);

/// Longest element, found without enumerating W.
SmallMat longest_element(const RootDatum& rd);

} // namespace sylow
