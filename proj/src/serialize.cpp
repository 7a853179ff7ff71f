#include "focklat/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace focklat {

namespace {

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw std::domain_error("complex entry must be an object {\"re\":..,\"im\":..}");
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

Json row_to_json(const Eigen::RowVectorXcd& row) {
  Json out = Json::array();
  for (int c = 0; c < row.size(); ++c) out.push_back(complex_to_json(row(c)));
  return out;
}

Eigen::RowVectorXcd row_from_json(const Json& j) {
  Eigen::RowVectorXcd row(j.size());
  for (size_t c = 0; c < j.size(); ++c) row(static_cast<int>(c)) = complex_from_json(j[c]);
  return row;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string point_to_csv(const VectorXcd& p) {
  std::ostringstream os;
  os.precision(17);
  for (int j = 0; j < p.size(); ++j) {
    if (j) os << ';';
    os << p(j).real() << (p(j).imag() < 0 ? "" : "+") << p(j).imag() << 'i';
  }
  return os.str();
}

Json point_to_json(const VectorXcd& p) {
  Json out = Json::array();
  for (int j = 0; j < p.size(); ++j) out.push_back(complex_to_json(p(j)));
  return out;
}

}  // namespace

Json lattice_to_json(const ComplexLattice& lat) {
  Json gen = Json::array();
  for (int r = 0; r < lat.dim(); ++r) gen.push_back(row_to_json(lat.generator.row(r)));
  return Json{{"dim", lat.dim()}, {"generator", gen}};
}

ComplexLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generator"))
    throw std::domain_error("lattice JSON must have \"dim\" and \"generator\"");
  const int d = j.at("dim").get<int>();
  const Json& gen = j.at("generator");
  if (!gen.is_array() || static_cast<int>(gen.size()) != d)
    throw std::domain_error("lattice JSON: generator must be a dim x dim array, got " +
                            std::to_string(gen.size()) + " rows for dim " +
                            std::to_string(d));
  MatrixXcd a(d, d);
  for (int r = 0; r < d; ++r) {
    if (static_cast<int>(gen[r].size()) != d)
      throw std::domain_error("lattice JSON: generator row " + std::to_string(r) +
                              " has wrong length");
    for (int c = 0; c < d; ++c) a(r, c) = complex_from_json(gen[r][c]);
  }
  return ComplexLattice(a);
}

Json fn_to_json(const LatticeFn& fn) {
  Json factors = Json::array();
  for (const FnFactor& f : fn.factors)
    factors.push_back(Json{{"kind", f.kind == FnFactor::Kind::kSigma ? "sigma" : "tau"},
                           {"row", row_to_json(f.row)},
                           {"offset", complex_to_json(f.offset)},
                           {"shift", complex_to_json(f.shift)}});
  return Json{{"dim", fn.dim},
              {"factors", factors},
              {"pre_linear", fn.pre_linear.size() > 0
                                 ? row_to_json(fn.pre_linear)
                                 : row_to_json(Eigen::RowVectorXcd::Zero(fn.dim))},
              {"pre_const", complex_to_json(fn.pre_const)},
              {"meta", fn.meta}};
}

LatticeFn fn_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("factors"))
    throw std::domain_error("function JSON must have \"dim\" and \"factors\"");
  LatticeFn fn;
  fn.dim = j.at("dim").get<int>();
  if (fn.dim < 1) throw std::domain_error("function JSON: dim must be >= 1");
  for (const Json& jf : j.at("factors")) {
    FnFactor f;
    const std::string kind = jf.at("kind").get<std::string>();
    if (kind == "sigma")
      f.kind = FnFactor::Kind::kSigma;
    else if (kind == "tau")
      f.kind = FnFactor::Kind::kTau;
    else
      throw std::domain_error("function JSON: unknown factor kind \"" + kind + "\"");
    f.row = row_from_json(jf.at("row"));
    if (f.row.size() != fn.dim)
      throw std::domain_error("function JSON: factor row length != dim");
    f.offset = complex_from_json(jf.at("offset"));
    f.shift = complex_from_json(jf.at("shift"));
    fn.factors.push_back(std::move(f));
  }
  if (j.contains("pre_linear")) {
    fn.pre_linear = row_from_json(j.at("pre_linear"));
    if (fn.pre_linear.size() != fn.dim)
      throw std::domain_error("function JSON: pre_linear length != dim");
  } else {
    fn.pre_linear = Eigen::RowVectorXcd::Zero(fn.dim);
  }
  if (j.contains("pre_const")) fn.pre_const = complex_from_json(j.at("pre_const"));
  if (j.contains("meta")) fn.meta = j.at("meta").get<std::string>();
  return fn;
}

Json report_to_json(const VanishingReport& rep) {
  return Json{{"type", "vanishing"},
              {"lattice_radius", rep.lattice_radius},
              {"checked_points", rep.checked_points},
              {"max_normalized_residual", rep.max_normalized_residual},
              {"worst_point", point_to_json(rep.worst_point)}};
}

Json report_to_json(const InterpolationReport& rep) {
  return Json{{"type", "interpolation"},
              {"lattice_radius", rep.lattice_radius},
              {"checked_points", rep.checked_points},
              {"origin_log_mag", rep.origin_value.log_mag},
              {"origin_phase", rep.origin_value.phase},
              {"origin_nonzero", rep.origin_nonzero},
              {"max_offorigin_residual", rep.max_offorigin_residual},
              {"worst_point", point_to_json(rep.worst_point)},
              {"diagnostic", rep.diagnostic}};
}

Json report_to_json(const GrowthProfile& prof) {
  return Json{{"type", "growth"},
              {"grid_step", prof.grid_step},
              {"radii", prof.radii},
              {"sup_normalized", prof.sup_normalized}};
}

Json report_to_json(const LagrangeTrace& trace) {
  Json sums = Json::array();
  for (const Complex& s : trace.partial_sums) sums.push_back(complex_to_json(s));
  return Json{{"type", "lagrange_trace"}, {"radii", trace.radii}, {"partial_sums", sums}};
}

Json report_to_json(const BargmannBridge& bridge) {
  return Json{{"type", "bargmann"},
              {"quadrature", bridge.quadrature},
              {"closed_form", bridge.closed_form},
              {"discrepancy", bridge.discrepancy()}};
}

std::string report_to_csv(const VanishingReport& rep) {
  std::ostringstream os;
  os << "lattice_radius,checked_points,max_normalized_residual,worst_point\n"
     << csv_number(rep.lattice_radius) << ',' << rep.checked_points << ','
     << csv_number(rep.max_normalized_residual) << ',' << point_to_csv(rep.worst_point)
     << '\n';
  return os.str();
}

std::string report_to_csv(const InterpolationReport& rep) {
  std::ostringstream os;
  os << "lattice_radius,checked_points,origin_log_mag,origin_nonzero,"
        "max_offorigin_residual,worst_point\n"
     << csv_number(rep.lattice_radius) << ',' << rep.checked_points << ','
     << csv_number(rep.origin_value.log_mag) << ',' << (rep.origin_nonzero ? 1 : 0)
     << ',' << csv_number(rep.max_offorigin_residual) << ','
     << point_to_csv(rep.worst_point) << '\n';
  return os.str();
}

std::string report_to_csv(const GrowthProfile& prof) {
  std::ostringstream os;
  os << "radius,sup_normalized\n";
  for (size_t k = 0; k < prof.radii.size(); ++k)
    os << csv_number(prof.radii[k]) << ',' << csv_number(prof.sup_normalized[k]) << '\n';
  return os.str();
}

std::string report_to_csv(const LagrangeTrace& trace) {
  std::ostringstream os;
  os << "radius,partial_re,partial_im\n";
  for (size_t k = 0; k < trace.radii.size(); ++k)
    os << csv_number(trace.radii[k]) << ',' << csv_number(trace.partial_sums[k].real())
       << ',' << csv_number(trace.partial_sums[k].imag()) << '\n';
  return os.str();
}

std::string report_to_csv(const BargmannBridge& bridge) {
  std::ostringstream os;
  os << "quadrature,closed_form,discrepancy\n"
     << csv_number(bridge.quadrature) << ',' << csv_number(bridge.closed_form) << ','
     << csv_number(bridge.discrepancy()) << '\n';
  return os.str();
}

std::string growth_plot(const GrowthProfile& prof) {
  std::ostringstream os;
  for (size_t k = 0; k < prof.radii.size(); ++k)
    os << prof.radii[k] << ' ' << prof.sup_normalized[k] << '\n';
  return os.str();
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << body;
  if (!out) throw std::runtime_error("write failed: " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::domain_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace focklat
