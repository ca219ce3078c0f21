#pragma once

#include <string_view>
#include <vector>

#include "maedalab/exact.hpp"

namespace maedalab {

struct TowerSpec {
  unsigned d = 1;
  std::vector<unsigned> degrees;  // strictly increasing, each >= max(5, 2d)

  /// Throws kPrecondition unless the tower invariants hold.
  void validate() const;
};

struct TowerDensity {
  std::vector<Rational> point;               // delta = 0 at every step
  std::vector<RationalInterval> guaranteed;  // worst-case |delta_n|
  std::vector<Rational> a_terms;             // a(floor(N_n / d))
  std::vector<Rational> delta_bounds;
};

struct EffectiveBoundReport {
  unsigned d = 1;
  unsigned weight_bound = 0;
  std::vector<unsigned> weights_used;
  TowerSpec tower;
  Rational lower_bound;
  Rational point_estimate;
  RationalInterval final_interval;
};

enum class GroupLabel { kPSL2, kPGL2 };

std::string_view to_string(GroupLabel label);

inline unsigned tower_floor(unsigned d) { return d * 2 > 5 ? d * 2 : 5; }

/// dim S_k(SL_2(Z)) from the valence formula.
unsigned dim_cusp_level1(unsigned k);

struct MaedaTower {
  TowerSpec tower;
  std::vector<unsigned> weights;
};

/// Record subsequence of d_k over even k <= weight_bound, floored at
/// max(5, 2d). Throws kEmptyTower when nothing qualifies.
MaedaTower build_maeda_tower(unsigned d, unsigned weight_bound);

TowerDensity tower_density(const TowerSpec& tower, unsigned enclosure_terms);

EffectiveBoundReport effective_lower_bound(unsigned d, unsigned weight_bound,
                                           unsigned enclosure_terms);

GroupLabel target_group_label(unsigned d);

}  // namespace maedalab
