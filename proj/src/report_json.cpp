#include "grank/report_json.hpp"

namespace grank {

Json int_to_json(const Int& v) {
  if (fits_int64(v)) return v.convert_to<int64_t>();
  return v.str();
}

Json tensor_json(const Tensor3& t, const std::optional<std::string>& catalog_id) {
  Json j;
  j["dims"] = {t.dims()[0], t.dims()[1], t.dims()[2]};
  j["entries"] = t.entry_count();
  j["catalog"] = catalog_id ? Json(*catalog_id) : Json(nullptr);
  return j;
}

Json mlranks_json(const MlRanks& ml) {
  return Json{{"A", ml.ml_a}, {"B", ml.ml_b}, {"C", ml.ml_c}};
}

Json flags_json(const GenericityFlags& fl) {
  Json j;
  j["concise"] = fl.concise;
  if (fl.applicable) {
    j["one_A"] = fl.one_a;
    j["one_B"] = fl.one_b;
    j["one_C"] = fl.one_c;
    j["one_star"] = fl.one_star;
    j["one_generic"] = fl.one_generic;
    j["probabilistic"] = fl.probabilistic;
  } else {
    j["one_star"] = nullptr;  // defined for cubes only
  }
  return j;
}

Json gr_json(const GRReport& rep) {
  Json j;
  j["gr"] = rep.gr ? Json(*rep.gr) : Json(nullptr);
  j["certified"] = rep.certified;
  for (const auto& [pr, v] : rep.gr_pairing) j[std::string("gr_") + pairing_name(pr)] = v;
  Json slopes;
  for (const auto& [pr, fit] : rep.pairing_fits) {
    Json s;
    s["dimension"] = fit.dimension;
    s["certified"] = fit.certified;
    s["slopes"] = fit.slope_estimates;
    slopes[pairing_name(pr)] = s;
  }
  j["fits"] = slopes;
  j["primes"] = rep.primes_used;
  if (!rep.primes_dropped.empty()) j["primes_dropped"] = rep.primes_dropped;
  Json sd;
  for (const auto& [ax, m] : rep.strata_dims) {
    Json per;
    for (const auto& [jj, dim] : m) per[std::to_string(jj)] = dim;
    sd[axis_name(ax)] = per;
  }
  j["strata_dims"] = sd;
  if (rep.max_stratum)
    j["max_stratum"] = Json{{"axis", axis_name(rep.max_stratum->first)},
                            {"j", rep.max_stratum->second}};
  j["flag_excess"] = rep.flag_excess ? Json(*rep.flag_excess) : Json(nullptr);
  if (!rep.warnings.empty()) j["warnings"] = rep.warnings;
  return j;
}

Json strata_json(const GRReport& rep, const Tensor3& t) {
  const auto& d = t.dims();
  Json j;
  for (const auto& [ax, per_prime] : rep.profiles) {
    Json ja;
    for (const auto& [p, prof] : per_prime) {
      Json counts;
      for (const auto& [r, c] : prof.counts) counts[std::to_string(r)] = int_to_json(c);
      Json node;
      node["counts"] = counts;
      Json sh;
      if (ax == Axis::A) {
        sh["ab"] = int_to_json(sigma_hat_from_profile(prof, d[1]));
        sh["ac"] = int_to_json(sigma_hat_from_profile(prof, d[2]));
      } else if (ax == Axis::B) {
        sh["ab"] = int_to_json(sigma_hat_from_profile(prof, d[0]));
        sh["bc"] = int_to_json(sigma_hat_from_profile(prof, d[2]));
      } else {
        sh["ac"] = int_to_json(sigma_hat_from_profile(prof, d[0]));
        sh["bc"] = int_to_json(sigma_hat_from_profile(prof, d[1]));
      }
      node["sigma_hat"] = sh;
      ja[std::to_string(p)] = node;
    }
    j[axis_name(ax)] = ja;
  }
  return j;
}

Json bounds_json(const BoundReport& rep) {
  Json j;
  Json arr = Json::array();
  for (const auto& b : rep.bounds) {
    Json e;
    e["value"] = b.value;
    e["source"] = bound_source_name(b.source);
    e["witness"] = b.witness;
    e["conditional"] = b.conditional;
    arr.push_back(e);
  }
  j["bounds"] = arr;
  j["best"] = rep.best ? Json(*rep.best) : Json(nullptr);
  j["known_rank"] = rep.known_rank ? Json(*rep.known_rank) : Json(nullptr);
  j["consistent"] = rep.consistent;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

Json classification_json(const GR2Class& cls) {
  Json j;
  j["variant"] = gr2_variant_name(cls.variant);
  if (cls.bounded_axis) j["bounded_axis"] = axis_name(*cls.bounded_axis);
  j["factor_perm"] = cls.factor_perm;
  if (cls.witness) {
    auto mat_json = [](const RatMatrix& m) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < m.cols(); ++jj) row.push_back(rat_to_string(m.at(i, jj)));
        rows.push_back(row);
      }
      return rows;
    };
    j["witness"] = Json{{"g_a", mat_json(cls.witness->g_a)},
                        {"g_b", mat_json(cls.witness->g_b)},
                        {"g_c", mat_json(cls.witness->g_c)}};
  }
  return j;
}

std::string emit_report(const Json& report) {
  return report.dump(2) + "\n";
}

}  // namespace grank
