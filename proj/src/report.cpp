#include "report.hpp"

#include <json.hpp>

#include <sstream>

#include "localcoh.hpp"

#ifndef DRINFILT_VERSION
#define DRINFILT_VERSION "0.0.0"
#endif

namespace drinfilt {

namespace {

std::vector<std::pair<long long, long long>> kernel_mass_by_degree(int d, int subquotient_j,
                                                                   const Weight& lambda,
                                                                   const ModuleDescriptor& seed,
                                                                   long long bound) {
  int jk = d - subquotient_j;  // kernel index
  Character ker = verma_kernel_character(d, jk, lambda, seed, bound);
  std::map<long long, long long> by_degree;
  for (const auto& [w, m] : ker.terms) {
    long long s = 0;
    for (int c = 0; c <= jk; ++c) s += w[c];
    by_degree[s] += m;
  }
  return {by_degree.begin(), by_degree.end()};
}

}  // namespace

ReportDocument build_report_document(int d, const Weight& lambda, long long pole_bound) {
  ReportDocument doc;
  doc.tool_name = "drinfilt";
  doc.tool_version = DRINFILT_VERSION;
  doc.filtration = build_filtration_report(d, lambda);
  doc.pole_bound = pole_bound;
  for (const auto& sq : doc.filtration.subquotients) {
    if (pole_bound > 0) {
      doc.kernel_masses.push_back(
          kernel_mass_by_degree(d, sq.j, lambda, sq.analytic_part.module, pole_bound));
    } else {
      doc.kernel_masses.push_back(std::nullopt);
    }
  }
  doc.notes.push_back("subquotient j stores the generating module N_{d-j}");
  doc.notes.push_back("infinite-dimensional constituents are tagged, their finite invariants listed");
  if (pole_bound > 0)
    doc.notes.push_back("kernel masses use the full direct-sum generating module as seed, grouped by the sum of the first d-j+1 coordinates");
  else
    doc.notes.push_back("kernel summaries skipped (pole bound 0)");
  return doc;
}

namespace {

nlohmann::ordered_json weight_json(const Weight& w) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (long long e : w.entries) a.push_back(e);
  return a;
}

}  // namespace

std::string render_report_json(const ReportDocument& doc) {
  using json = nlohmann::ordered_json;
  const FiltrationReport& fr = doc.filtration;
  json out;
  out["tool"] = {{"name", doc.tool_name}, {"version", doc.tool_version}};
  out["input"] = {{"d", fr.d}, {"lambda", weight_json(fr.lambda)}, {"pole_bound", doc.pole_bound}};
  out["bott_index"] = {{"i0", fr.index.i0}, {"case", to_string(fr.index.kind)}};
  json coh;
  coh["present"] = fr.cohomology.present();
  if (fr.cohomology.present()) {
    coh["degree"] = *fr.cohomology.degree;
    coh["highest_weight"] = weight_json(*fr.cohomology.highest_weight);
    coh["dimension"] = fr.cohomology.dimension;
  }
  out["cohomology"] = coh;
  out["floor"] = {{"w0_dimension", fr.floor_dimension}};

  json arr = json::array();
  for (size_t si = 0; si < fr.subquotients.size(); ++si) {
    const SubquotientDescriptor& sq = fr.subquotients[si];
    json e;
    e["j"] = sq.j;
    e["parabolic_blocks"] = sq.parabolic.blocks;
    if (sq.algebraic_part) {
      json alg;
      alg["tag"] = sq.algebraic_part->tag;
      alg["parabolic_blocks"] = sq.algebraic_part->parabolic_blocks;
      alg["coefficient_dimension"] = sq.algebraic_part->coefficient_dimension;
      alg["dimension"] = "infinite";
      e["algebraic_part"] = alg;
    } else {
      e["algebraic_part"] = nullptr;
    }
    json an;
    an["module_index"] = sq.analytic_part.module_index;
    json weights = json::array();
    json summands = json::array();
    for (const auto& s : sq.analytic_part.module.summands) {
      weights.push_back(weight_json(s.weight()));
      json sj;
      json bw = json::array();
      for (const auto& b : s.block_weights) bw.push_back(weight_json(b));
      sj["block_weights"] = bw;
      sj["multiplicity"] = s.multiplicity;
      sj["dimension"] = s.dimension;
      summands.push_back(sj);
    }
    an["weights"] = weights;
    an["summands"] = summands;
    an["total_dimension"] = sq.analytic_part.module.total_dimension;
    json st;
    st["tag"] = sq.analytic_part.steinberg_tag;
    if (sq.analytic_part.steinberg_infinite)
      st["dimension"] = "infinite";
    else
      st["dimension"] = 1;
    an["steinberg_factor"] = st;
    json ker;
    ker["index"] = sq.analytic_part.kernel_index;
    ker["seed"] = "N_" + std::to_string(sq.analytic_part.kernel_index);
    ker["u_degree_bound"] = doc.pole_bound;
    ker["computed"] = doc.kernel_masses[si].has_value();
    json masses = json::array();
    if (doc.kernel_masses[si])
      for (const auto& [deg, mass] : *doc.kernel_masses[si])
        masses.push_back({{"degree", deg}, {"mass", mass}});
    ker["mass_by_degree"] = masses;
    an["kernel_character"] = ker;
    an["induced_dimension"] = "infinite";
    e["analytic_part"] = an;
    arr.push_back(e);
  }
  out["subquotients"] = arr;
  out["notes"] = doc.notes;
  return out.dump(2) + "\n";
}

std::string render_report_text(const ReportDocument& doc) {
  const FiltrationReport& fr = doc.filtration;
  std::ostringstream os;
  os << doc.tool_name << " " << doc.tool_version << "\n";
  os << "input: d=" << fr.d << " lambda=" << fr.lambda.str() << " pole_bound=" << doc.pole_bound
     << "\n";
  os << "bott index: i0=" << fr.index.i0 << " (" << to_string(fr.index.kind) << ")\n";
  if (fr.cohomology.present()) {
    os << "cohomology: H^" << *fr.cohomology.degree << " with highest weight "
       << fr.cohomology.highest_weight->str() << ", dim " << fr.cohomology.dimension << "\n";
  } else {
    os << "cohomology: all degrees vanish\n";
  }
  os << "floor W^0 = H^0: dim " << fr.floor_dimension << "\n";
  for (size_t si = 0; si < fr.subquotients.size(); ++si) {
    const SubquotientDescriptor& sq = fr.subquotients[si];
    os << "subquotient j=" << sq.j << " parabolic (" << sq.parabolic.blocks[0] << ","
       << sq.parabolic.blocks[1] << ")\n";
    if (sq.algebraic_part) {
      os << "  algebraic part: " << sq.algebraic_part->tag << " coefficient dim "
         << sq.algebraic_part->coefficient_dimension << " (infinite-dimensional)\n";
    } else {
      os << "  algebraic part: absent\n";
    }
    os << "  analytic part: N_" << sq.analytic_part.module_index << " (x) "
       << sq.analytic_part.steinberg_tag
       << (sq.analytic_part.steinberg_infinite ? " (infinite-dimensional factor)" : "") << "\n";
    for (const auto& s : sq.analytic_part.module.summands) {
      os << "    V" << s.weight().str_split(sq.parabolic.blocks[0]) << " dim " << s.dimension
         << "\n";
    }
    os << "    total module dim " << sq.analytic_part.module.total_dimension << "\n";
    os << "    kernel d_" << sq.analytic_part.kernel_index << " masses:";
    if (!doc.kernel_masses[si]) {
      os << " (skipped)";
    } else if (doc.kernel_masses[si]->empty()) {
      os << " none up to the bound";
    } else {
      for (const auto& [deg, mass] : *doc.kernel_masses[si])
        os << " [" << deg << "]=" << mass;
    }
    os << "\n";
  }
  for (const auto& n : doc.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace drinfilt
