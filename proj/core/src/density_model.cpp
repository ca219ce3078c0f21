#include "maedalab/density_model.hpp"

#include <string>

#include "maedalab/error.hpp"
#include "maedalab/sequences.hpp"

namespace maedalab {

void TowerSpec::validate() const {
  require(d >= 1, ErrorCode::kValidation, "tower needs d >= 1");
  require(!degrees.empty(), ErrorCode::kEmptyTower, "tower has no fields");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    require(degrees[i] >= tower_floor(d), ErrorCode::kPrecondition,
            "tower degree " + std::to_string(degrees[i]) + " below max(5, 2d)");
    require(i == 0 || degrees[i - 1] < degrees[i], ErrorCode::kPrecondition,
            "tower degrees must be strictly increasing");
  }
}

std::string_view to_string(GroupLabel label) {
  return label == GroupLabel::kPSL2 ? "PSL2" : "PGL2";
}

unsigned dim_cusp_level1(unsigned k) {
  if (k % 2 == 1 || k < 12) return 0;
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

MaedaTower build_maeda_tower(unsigned d, unsigned weight_bound) {
  require(d >= 1, ErrorCode::kValidation, "d must be >= 1");
  MaedaTower out;
  out.tower.d = d;
  unsigned record = 0;
  for (unsigned k = 4; k <= weight_bound; k += 2) {
    const unsigned dk = dim_cusp_level1(k);
    if (dk > record && dk >= tower_floor(d)) {
      out.tower.degrees.push_back(dk);
      out.weights.push_back(k);
    }
    if (dk > record) record = dk;
  }
  require(!out.tower.degrees.empty(), ErrorCode::kEmptyTower,
          "no even weight <= " + std::to_string(weight_bound) + " has d_k >= " +
              std::to_string(tower_floor(d)));
  return out;
}

TowerDensity tower_density(const TowerSpec& tower, unsigned enclosure_terms) {
  tower.validate();
  TowerDensity out;
  Rational point(0);
  RationalInterval guaranteed = RationalInterval::point(Rational(0));
  const unsigned i_max = tower.degrees.back() / tower.d;
  const auto seq = a_recursive(tower.d, i_max);
  for (unsigned degree : tower.degrees) {
    const Rational& a = seq.a(degree / tower.d);
    Rational bound = delta_bound(tower.d, degree, enclosure_terms);
    point = point + a - a * point;
    guaranteed = include_exclude_step(guaranteed, a, bound);
    out.point.push_back(point);
    out.guaranteed.push_back(guaranteed);
    out.a_terms.push_back(a);
    out.delta_bounds.push_back(std::move(bound));
  }
  return out;
}

EffectiveBoundReport effective_lower_bound(unsigned d, unsigned weight_bound,
                                           unsigned enclosure_terms) {
  auto built = build_maeda_tower(d, weight_bound);
  const auto density = tower_density(built.tower, enclosure_terms);
  EffectiveBoundReport report;
  report.d = d;
  report.weight_bound = weight_bound;
  report.weights_used = std::move(built.weights);
  report.tower = std::move(built.tower);
  report.final_interval = density.guaranteed.back();
  report.lower_bound = report.final_interval.lo;
  report.point_estimate = density.point.back();
  return report;
}

GroupLabel target_group_label(unsigned d) {
  require(d >= 1, ErrorCode::kValidation, "d must be >= 1");
  return d % 2 == 0 ? GroupLabel::kPSL2 : GroupLabel::kPGL2;
}

}  // namespace maedalab
