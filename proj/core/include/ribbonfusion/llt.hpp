#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ribbonfusion/tableaux.hpp"

namespace ribbonfusion {

/// Semistandard r-ribbon tableau, stored as its chain of partitions
/// 0 = c_0 <= c_1 <= ... <= c_m = shape, one step per letter; every step is
/// a horizontal r-ribbon strip. spin2 is the doubled total spin.
struct RibbonTableau {
    std::vector<Partition> chain;
    std::vector<int> weight;
    long long spin2 = 0;
};

struct StripInfo {
    int ribbons = 0;
    long long spin2 = 0;
};

/// Statistics of the unique admissible r-ribbon tiling of a skew shape, or
/// nullopt when the shape is not a horizontal r-ribbon strip. A tiling is
/// admissible when no ribbon's root has a cell of a different ribbon
/// directly below it; horizontal strips are exactly the shapes with one
/// admissible tiling. Found by peeling the ribbon rooted at the top of the
/// rightmost remaining column.
std::optional<StripInfo> horizontal_strip_tiling(const SkewShape& skew, int r);

/// Every r-ribbon tableau of the shape with entries <= max_entry, each
/// exactly once, deterministic order. Requires an empty r-core.
std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& shape, int r, int max_entry);

/// Doubled maximal spin over all r-ribbon tableaux of the shape.
long long max_spin2(const Partition& shape, int r);

/// Full weight-vector coordinates of the spin generating function: weight
/// (length max_entry, trailing zeros kept) -> sum of q^spin over tableaux.
std::map<std::vector<int>, LaurentPoly> llt_weight_map(const Partition& shape, int r, int max_entry);

/// Cospin LLT polynomial in the Schur basis: coefficient of s_nu is
/// sum_T q^{maxspin - spin(T)}, an honest polynomial with nonnegative
/// integer exponents. Specializes at q = 1 to the Schur product of the
/// r-quotient components. Requires an empty r-core.
SchurExpansion llt_cospin(const Partition& shape, int r, int n);

/// Cospin q-analogue of the Littlewood-Richardson coefficient: coefficient
/// of s_nu in llt_cospin of the partition with empty core and the given
/// quotient tuple (r = tuple length).
LaurentPoly q_lr_cospin(const Partition& nu, const std::vector<Partition>& factors, int n);

/// H-function: llt_cospin(r*mu) bar-reversed at the maximal spin, i.e. the
/// spin-normalized generating function. For r >= length(mu) this equals the
/// modified Hall-Littlewood function Q'_mu.
SchurExpansion h_function(const Partition& mu, int r, int n);

/// Q'_mu = sum_lambda K_{lambda,mu}(q) s_lambda restricted to length <= n.
SchurExpansion modified_hall_littlewood(const Partition& mu, int n);

}  // namespace ribbonfusion
