#include "weingarten/residual.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace weingarten::numgeom {

namespace {
double relation_defect(const WeingartenRelation& rel, const CurvatureSample& c) {
  const double a = to_double(*rel.a);
  const double b = to_double(*rel.b);
  const double cc = to_double(*rel.c);
  return std::abs(a * c.H + b * c.K - cc);
}
}  // namespace

ResidualReport weingarten_residual(const JetSource& jets,
                                   const WeingartenRelation& relation,
                                   const GridSpec& grid) {
  if (!relation.fully_numeric())
    throw ConfigError("residual sampling needs a fully numeric relation");
  relation.validate();
  grid.validate();

  ResidualReport out;
  out.grid = grid;
  out.min_W = std::numeric_limits<double>::infinity();
  double sum = 0;
  for (int i = 0; i < grid.nu; ++i) {
    for (int j = 0; j < grid.nv; ++j) {
      const double u = grid.u(i), v = grid.v(j);
      try {
        const FundamentalForms forms = fundamental_forms(jets(u, v));
        out.min_W = std::min(out.min_W, forms.W);
        const double res = relation_defect(relation, curvatures(forms));
        sum += res;
        if (res >= out.max) {
          out.max = res;
          out.argmax_u = u;
          out.argmax_v = v;
        }
      } catch (const DegenerateJetError& err) {
        std::ostringstream os;
        os << err.what() << " at (u, v) = (" << u << ", " << v << ")";
        throw DegenerateJetError(os.str());
      }
    }
  }
  out.mean = sum / (double(grid.nu) * double(grid.nv));
  return out;
}

std::string ResidualReport::to_json(const WeingartenRelation& relation,
                                    double tolerance) const {
  nlohmann::json doc = {
      {"report", "residual"},
      {"relation",
       {{"a", relation.a ? to_string(*relation.a) : "a"},
        {"b", relation.b ? to_string(*relation.b) : "b"},
        {"c", relation.c ? to_string(*relation.c) : "c"}}},
      {"grid",
       {{"u", {grid.u0, grid.u1}},
        {"v", {grid.v0, grid.v1}},
        {"nu", grid.nu},
        {"nv", grid.nv}}},
      {"max", max},
      {"mean", mean},
      {"argmax", {{"u", argmax_u}, {"v", argmax_v}}},
      {"min-W", min_W},
  };
  if (tolerance > 0) {
    doc["tolerance"] = tolerance;
    doc["pass"] = max < tolerance;
  }
  return doc.dump(2);
}

std::string residual_csv(const JetSource& jets, const WeingartenRelation& relation,
                         const GridSpec& grid) {
  if (!relation.fully_numeric())
    throw ConfigError("residual sampling needs a fully numeric relation");
  grid.validate();
  std::ostringstream os;
  os.precision(17);
  os << "u,v,H,K,residual\n";
  for (int i = 0; i < grid.nu; ++i) {
    for (int j = 0; j < grid.nv; ++j) {
      const double u = grid.u(i), v = grid.v(j);
      const CurvatureSample c = curvatures(jets(u, v));
      os << u << "," << v << "," << c.H << "," << c.K << ","
         << relation_defect(relation, c) << "\n";
    }
  }
  return os.str();
}

}  // namespace weingarten::numgeom
