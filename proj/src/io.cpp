#include "geomed/io.hpp"

#include <fstream>
#include <ostream>

namespace geomed {

using nlohmann::json;

namespace {

json vec_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Eigen::VectorXd vec_from_json(const json& arr) {
  if (!arr.is_array()) fail(ErrorCode::ParseError, "expected a number array");
  Eigen::VectorXd v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number())
      fail(ErrorCode::ParseError, "coordinate " + std::to_string(i) +
                                      " is not a number");
    v[i] = arr[i].get<double>();
  }
  return v;
}

Family family_from_string(const std::string& s) {
  if (s == "euclidean") return Family::Euclidean;
  if (s == "sphere") return Family::Sphere;
  if (s == "hyperbolic") return Family::Hyperbolic;
  fail(ErrorCode::ParseError, "unknown manifold family '" + s + "'");
}

}  // namespace

json instance_to_json(const Instance& inst) {
  const ManifoldSpec& m = inst.ball.center.manifold;
  json j;
  j["manifold"] = {{"family", family_name(m.family)},
                   {"dimension", m.dimension},
                   {"curvature", m.curvature}};
  json ball;
  ball["center"] = vec_to_json(inst.ball.center.coords);
  ball["rho"] = inst.ball.rho;
  if (inst.ball.bounds.delta != m.curvature)
    ball["delta"] = inst.ball.bounds.delta;
  if (inst.ball.bounds.Delta != m.curvature)
    ball["Delta"] = inst.ball.bounds.Delta;
  j["ball"] = std::move(ball);
  json atoms = json::array();
  for (const Atom& a : inst.measure.atoms)
    atoms.push_back({{"coords", vec_to_json(a.point.coords)},
                     {"weight", a.weight}});
  j["atoms"] = std::move(atoms);
  if (!inst.name.empty()) j["name"] = inst.name;
  if (inst.seed != 0) j["seed"] = inst.seed;
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.contains("manifold") || !j.contains("ball") || !j.contains("atoms"))
    fail(ErrorCode::ParseError,
         "instance needs 'manifold', 'ball' and 'atoms' fields");
  const json& jm = j["manifold"];
  ManifoldSpec m;
  m.family = family_from_string(jm.at("family").get<std::string>());
  m.dimension = jm.at("dimension").get<int>();
  m.curvature = jm.at("curvature").get<double>();
  m.validate();

  const json& jb = j["ball"];
  Point center = make_point(m, vec_from_json(jb.at("center")));
  double rho = jb.at("rho").get<double>();
  Instance inst;
  if (jb.contains("delta") || jb.contains("Delta")) {
    double delta = jb.value("delta", m.curvature);
    double Delta = jb.value("Delta", m.curvature);
    inst.ball = make_ball(std::move(center), rho, delta, Delta);
  } else {
    inst.ball = make_ball(std::move(center), rho);
  }

  for (std::size_t i = 0; i < j["atoms"].size(); ++i) {
    const json& ja = j["atoms"][i];
    if (!ja.contains("coords") || !ja.contains("weight"))
      fail(ErrorCode::ParseError,
           "atom " + std::to_string(i) + " needs 'coords' and 'weight'");
    inst.measure.atoms.push_back(
        {make_point(m, vec_from_json(ja["coords"])),
         ja["weight"].get<double>()});
  }
  inst.name = j.value("name", std::string{});
  inst.seed = j.value("seed", std::uint64_t{0});
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for write");
  out << instance_to_json(inst).dump(2) << '\n';
}

json solve_result_to_json(const SolveResult& result, std::uint64_t seed) {
  json j;
  j["median"] = vec_to_json(result.median.coords);
  j["f"] = result.f;
  j["h_norm"] = result.h_norm;
  j["atom_weight"] = result.atom_weight;
  j["status"] = terminal_status_name(result.trace.status);
  j["iterations"] = result.trace.iterations;
  j["schedule"] = {{"kind", schedule_kind_name(result.trace.schedule.kind)},
                   {"beta", result.trace.schedule.beta},
                   {"ak_power", result.trace.schedule.ak_power}};
  j["seed"] = seed;
  return j;
}

json trace_record_to_json(const TraceRecord& rec) {
  json j;
  j["k"] = rec.k;
  j["x"] = vec_to_json(rec.x.coords);
  j["f"] = rec.f;
  j["h_norm"] = rec.h_norm;
  j["atom_weight"] = rec.atom_weight;
  j["t"] = rec.t;
  j["r_x"] = rec.r_x;
  if (!rec.fundamental_slack.empty()) {
    double mn = rec.fundamental_slack[0];
    for (double s : rec.fundamental_slack) mn = std::min(mn, s);
    j["min_slack"] = mn;
  }
  return j;
}

void write_trace_jsonl(const IterateTrace& trace, std::ostream& os) {
  for (const TraceRecord& rec : trace.records)
    os << trace_record_to_json(rec).dump() << '\n';
}

json grid_result_to_json(const GridOracleResult& res) {
  json j;
  j["m_ref"] = vec_to_json(res.m_ref.coords);
  j["f_ref"] = res.f_ref;
  j["spacing"] = res.spacing;
  j["coverage_bound"] = res.coverage_bound;
  return j;
}

json domination_report_to_json(const DominationReport& rep) {
  json j;
  j["provenance"] = provenance_name(rep.provenance);
  j["certified"] = rep.certified;
  j["checked"] = rep.checked;
  j["min_margin"] = rep.min_margin;
  json v = json::array();
  for (const auto& viol : rep.violations)
    v.push_back({{"k", viol.k}, {"bound", viol.bound},
                 {"realized", viol.realized}});
  j["violations"] = std::move(v);
  return j;
}

}  // namespace geomed
