#include "btk/render.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace btk {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string ratx_str(const RatX& v) { return v.str(); }

std::string point_str(const QVec& x) {
  std::string out;
  for (int i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += x[i].str();
  }
  return out;
}

ordered_json valueset_json(const ValueSet& s) {
  ordered_json j;
  j["text"] = s.str();
  return j;
}

std::string facet_entry_str(const RootSystem& rs, const Facet& f, int a) {
  const FacetEntry& e = f.entries[a];
  std::string out = root_name(rs, a) + ": ";
  if (e.wall) out += "Wall(" + e.k.str() + ")";
  else out += "Gap(" + e.lo.str() + ", " + e.hi.str() + ")";
  return out;
}

std::string facet_signature(const RootSystem& rs, const Facet& f) {
  // Compact one-line form: wall roots with levels, gaps elided.
  std::vector<int> walls = f.wall_roots();
  if (walls.empty()) return "alcove-like (no walls)";
  std::string out;
  for (int a : walls) {
    if (!out.empty()) out += " ";
    out += root_name(rs, a) + "=" + f.entries[a].k.str();
  }
  return "walls{" + out + "}";
}

ordered_json facet_json(const RootSystem& rs, const Facet& f) {
  ordered_json arr = ordered_json::array();
  for (int a = 0; a < rs.count(); ++a) {
    ordered_json e;
    e["root"] = root_name(rs, a);
    if (f.entries[a].wall) {
      e["wall"] = f.entries[a].k.str();
    } else {
      e["gap"] = {f.entries[a].lo.str(), f.entries[a].hi.str()};
    }
    arr.push_back(e);
  }
  return arr;
}

void describe_group(std::ostringstream& os, const GroupDescriptor& desc,
                    const ValuedRootDatum& vrd) {
  os << "group: " << desc.label << desc.rank << ", residue characteristic "
     << desc.residue_char << "\n";
  for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid)
    os << "ray orbit '" << vrd.orbit_name[oid]
       << "': " << vrd.orbit_case[oid].str() << "\n";
}

ordered_json group_json(const GroupDescriptor& desc, const ValuedRootDatum& vrd) {
  ordered_json g;
  g["label"] = desc.label + std::to_string(desc.rank);
  g["residue_char"] = desc.residue_char;
  ordered_json cases = ordered_json::array();
  for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid) {
    ordered_json o;
    o["orbit"] = vrd.orbit_name[oid];
    o["case"] = vrd.orbit_case[oid].str();
    cases.push_back(o);
  }
  g["rays"] = cases;
  return g;
}

}  // namespace

QVec parse_point(const std::string& text, int rank) {
  std::vector<Rat> coords;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      coords.push_back(Rat::parse(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) coords.push_back(Rat::parse(cur));
  if (static_cast<int>(coords.size()) != rank)
    throw std::invalid_argument("point has " + std::to_string(coords.size()) +
                                " coordinates; the rank is " +
                                std::to_string(rank));
  QVec x(rank);
  for (int i = 0; i < rank; ++i) x[i] = coords[i];
  return x;
}

std::vector<int> parse_index_set(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ') s += c;
  std::vector<int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      throw std::invalid_argument("malformed index set '" + text + "'");
    }
  }
  return out;
}

CommandResult run_apartment(const GroupDescriptor& desc, const Rat& window) {
  ValuedRootDatum vrd = build_valued_root_datum(desc);
  CoxeterDatum cd = alcove_basis(vrd);
  std::ostringstream os;
  ordered_json j;
  describe_group(os, desc, vrd);
  j["group"] = group_json(desc, vrd);

  os << "\nlevel sets per orbit:\n";
  ordered_json jorbits = ordered_json::array();
  for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid) {
    int rep = -1;
    for (int a = 0; a < vrd.rs.count(); ++a)
      if (vrd.orbit_of_root[a] == static_cast<int>(oid) &&
          !vrd.rs.divisible(a)) {
        rep = a;
        break;
      }
    ordered_json jo;
    jo["orbit"] = vrd.orbit_name[oid];
    jo["case"] = vrd.orbit_case[oid].str();
    os << "  " << vrd.orbit_name[oid] << ": Gamma' = " << vrd.gp(rep).str();
    jo["gamma_prime"] = valueset_json(vrd.gp(rep));
    os << ", Gamma = " << vrd.gamma_full[rep].str();
    jo["gamma"] = valueset_json(vrd.gamma_full[rep]);
    if (auto da = vrd.rs.twice(rep)) {
      os << ", Gamma_2a = " << vrd.gp(*da).str();
      jo["gamma_2a"] = valueset_json(vrd.gp(*da));
    }
    os << "\n";
    jorbits.push_back(jo);
  }
  j["orbits"] = jorbits;

  os << "\nwall positions within [-" << window.str() << ", " << window.str()
     << "] per positive ray:\n";
  ordered_json jwalls = ordered_json::array();
  for (int ray : vrd.rs.positive_nondivisible()) {
    os << "  " << root_name(vrd.rs, ray) << ":";
    ordered_json jr;
    jr["ray"] = root_name(vrd.rs, ray);
    ordered_json pos = ordered_json::array();
    for (const Rat& p : vrd.wall_positions(ray).members_in(-window, window)) {
      os << " " << p.str();
      pos.push_back(p.str());
    }
    jr["positions"] = pos;
    jwalls.push_back(jr);
    os << "\n";
  }
  j["walls"] = jwalls;

  os << "\naffine Weyl group: " << cd.gens.size() << " simple reflections\n";
  ordered_json jgens = ordered_json::array();
  for (size_t i = 0; i < cd.gens.size(); ++i) {
    os << "  s" << i << ": wall " << root_name(vrd.rs, cd.gen_ray[i]) << "(x) = "
       << cd.gen_level[i].str() << "\n";
    ordered_json jg;
    jg["ray"] = root_name(vrd.rs, cd.gen_ray[i]);
    jg["level"] = cd.gen_level[i].str();
    jgens.push_back(jg);
  }
  j["generators"] = jgens;
  os << "Coxeter matrix (0 = infinity):\n";
  ordered_json jcox = ordered_json::array();
  for (int i = 0; i < cd.coxeter.rows(); ++i) {
    ordered_json row = ordered_json::array();
    os << " ";
    for (int k = 0; k < cd.coxeter.cols(); ++k) {
      os << " " << cd.coxeter(i, k);
      row.push_back(cd.coxeter(i, k));
    }
    os << "\n";
    jcox.push_back(row);
  }
  j["coxeter_matrix"] = jcox;
  os << "affine Weyl group lifts canonically into the Iwahori-Weyl group: "
     << (cd.canonical_lift ? "yes" : "unknown") << "\n";
  j["canonical_lift"] = cd.canonical_lift;

  CommandResult res;
  res.text = os.str();
  res.json = j.dump(2) + "\n";
  return res;
}

CommandResult run_facet(const GroupDescriptor& desc, const QVec& point) {
  ValuedRootDatum vrd = build_valued_root_datum(desc);
  Facet f = locate_facet(vrd, point);
  ConcaveFn ff = facet_fn(vrd, f);
  ConcaveFn fs = star_fn(vrd, ff);
  LeviDescriptor levi = phi_f(vrd, ff);

  std::ostringstream os;
  ordered_json j;
  describe_group(os, desc, vrd);
  j["group"] = group_json(desc, vrd);
  os << "\nfacet at x = (" << point_str(point) << "):\n";
  j["point"] = point_str(point);
  for (int a = 0; a < vrd.rs.count(); ++a)
    os << "  " << facet_entry_str(vrd.rs, f, a) << "\n";
  j["facet"] = facet_json(vrd.rs, f);

  os << "\nfacet function f, strict successor f*:\n";
  ordered_json jf = ordered_json::array();
  for (int a = 0; a < vrd.rs.count(); ++a) {
    os << "  f(" << root_name(vrd.rs, a) << ") = " << ratx_str(ff[a])
       << ",  f*(" << root_name(vrd.rs, a) << ") = " << ratx_str(fs[a]) << "\n";
    ordered_json e;
    e["root"] = root_name(vrd.rs, a);
    e["f"] = ratx_str(ff[a]);
    e["f_star"] = ratx_str(fs[a]);
    jf.push_back(e);
  }
  j["f"] = jf;

  ConcavityReport conc = concavity_check(vrd, ff);
  os << "\nconcavity (C0-C2) of f: " << (conc.ok() ? "ok" : "VIOLATED") << "\n";
  for (const auto& finding : conc.findings)
    os << "  " << finding.describe(vrd.rs) << "\n";
  j["concavity_ok"] = conc.ok();

  os << "\nPhi_f roots:";
  ordered_json jroots = ordered_json::array();
  for (int a : levi.roots) {
    os << " " << root_name(vrd.rs, a);
    jroots.push_back(root_name(vrd.rs, a));
  }
  if (levi.roots.empty()) os << " (none)";
  os << "\nreductive quotient: " << levi.str() << "\n";
  j["phi_f"] = jroots;
  j["levi"] = levi.str();

  CommandResult res;
  res.text = os.str();
  res.json = j.dump(2) + "\n";
  return res;
}

CommandResult run_star(const GroupDescriptor& desc, const QVec& point) {
  ValuedRootDatum vrd = build_valued_root_datum(desc);
  Facet f = locate_facet(vrd, point);
  CorrespondenceReport rep = parabolic_correspondence(vrd, f);

  std::ostringstream os;
  ordered_json j;
  describe_group(os, desc, vrd);
  j["group"] = group_json(desc, vrd);
  os << "\nstar of the facet at x = (" << point_str(point) << "): "
     << rep.rows.size() << " facets\n";
  os << "Phi_F:";
  for (int a : rep.phi_f_roots) os << " " << root_name(vrd.rs, a);
  if (rep.phi_f_roots.empty()) os << " (empty)";
  os << "\nparabolic subsets of Phi_F: " << rep.parabolic_count << "\n\n";
  j["point"] = point_str(point);
  j["star_size"] = rep.rows.size();
  j["parabolic_count"] = rep.parabolic_count;

  ordered_json jrows = ordered_json::array();
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    os << "  facet " << i << ": " << facet_signature(vrd.rs, row.facet)
       << "  ->  P = {";
    ordered_json jp = ordered_json::array();
    for (size_t k = 0; k < row.parabolic.size(); ++k) {
      if (k) os << ", ";
      os << root_name(vrd.rs, row.parabolic[k]);
      jp.push_back(root_name(vrd.rs, row.parabolic[k]));
    }
    os << "}\n";
    ordered_json jrow;
    jrow["facet"] = facet_signature(vrd.rs, row.facet);
    jrow["parabolic"] = jp;
    jrows.push_back(jrow);
  }
  j["rows"] = jrows;

  os << "\nbijective onto the parabolic subsets: "
     << (rep.bijective ? "yes" : "NO") << "\n";
  os << "order-reversing (closure containment <-> reverse inclusion): "
     << (rep.order_reversing ? "yes" : "NO") << "\n";
  for (const auto& msg : rep.failures) os << "  failure: " << msg << "\n";
  j["bijective"] = rep.bijective;
  j["order_reversing"] = rep.order_reversing;
  j["failures"] = rep.failures;

  CommandResult res;
  res.text = os.str();
  res.json = j.dump(2) + "\n";
  res.exit_code = rep.ok() ? 0 : 2;
  return res;
}

CommandResult run_cosets(const GroupDescriptor& desc, const std::vector<int>& J,
                         const std::vector<int>& Jp, long long bound) {
  ValuedRootDatum vrd = build_valued_root_datum(desc);
  CoxeterDatum cd = alcove_basis(vrd);
  auto cosets = double_cosets(cd, J, Jp, bound);
  auto all = enumerate_elements(cd, bound);

  std::ostringstream os;
  ordered_json j;
  describe_group(os, desc, vrd);
  j["group"] = group_json(desc, vrd);
  auto set_str = [](const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "}";
  };
  os << "\ndouble cosets W_J \\ W_af / W_J' with J = " << set_str(J)
     << ", J' = " << set_str(Jp) << ", length bound " << bound << "\n";
  os << "elements enumerated: " << all.size() << "\n";
  os << "cosets: " << cosets.size() << "\n\n";
  os << "  word            length  size<=L  truncated\n";
  j["J"] = J;
  j["Jp"] = Jp;
  j["bound"] = bound;
  j["elements"] = all.size();
  ordered_json jrows = ordered_json::array();
  for (const auto& dc : cosets) {
    std::string w = word_str(dc.word);
    os << "  " << w;
    for (size_t pad = w.size(); pad < 16; ++pad) os << ' ';
    os << dc.len << "       " << dc.size_within_bound << "        "
       << (dc.truncated ? "yes" : "no") << "\n";
    ordered_json r;
    r["word"] = w;
    r["length"] = dc.len;
    r["size_within_bound"] = dc.size_within_bound;
    r["truncated"] = dc.truncated;
    jrows.push_back(r);
  }
  j["cosets"] = jrows;

  CommandResult res;
  res.text = os.str();
  res.json = j.dump(2) + "\n";
  return res;
}

CommandResult run_verify(const GroupDescriptor& desc, unsigned long long seed) {
  ValuedRootDatum vrd = build_valued_root_datum(desc);
  std::ostringstream os;
  ordered_json j;
  describe_group(os, desc, vrd);
  j["group"] = group_json(desc, vrd);
  os << "\nvaluation axiom verification (seed " << seed << ")\n";
  j["seed"] = seed;
  ordered_json jreps = ordered_json::array();
  bool all_ok = true;
  for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid) {
    os << "\n[orbit '" << vrd.orbit_name[oid] << "' — case "
       << vrd.orbit_case[oid].str() << "]\n";
    auto realization = make_realization(vrd.orbit_case[oid], desc.residue_char);
    ordered_json jr;
    jr["orbit"] = vrd.orbit_name[oid];
    jr["case"] = vrd.orbit_case[oid].str();
    if (!realization) {
      os << "  no exact realization shipped for this case; skipped\n";
      jr["skipped"] = true;
      jreps.push_back(jr);
      continue;
    }
    AxiomOptions opt;
    opt.seed = seed;
    AxiomReport rep = axiom_report(*realization, opt);
    os << "  realization: " << rep.realization << "\n";
    jr["realization"] = rep.realization;
    ordered_json jlines = ordered_json::array();
    for (const auto& line : rep.lines) {
      os << "  " << (line.failures == 0 ? "[ok]  " : "[FAIL]") << " "
         << line.name << "  (" << line.instances << " checks";
      if (line.failures) os << ", " << line.failures << " failures: " << line.detail;
      os << ")\n";
      ordered_json jl;
      jl["name"] = line.name;
      jl["instances"] = line.instances;
      jl["failures"] = line.failures;
      jlines.push_back(jl);
    }
    jr["lines"] = jlines;
    jreps.push_back(jr);
    all_ok = all_ok && rep.ok();
  }
  j["reports"] = jreps;
  j["ok"] = all_ok;
  os << "\noverall: " << (all_ok ? "all axiom checks passed" : "FAILURES") << "\n";

  CommandResult res;
  res.text = os.str();
  res.json = j.dump(2) + "\n";
  res.exit_code = all_ok ? 0 : 2;
  return res;
}

CommandResult run_compare(const GroupDescriptor& desc, const Rat& window) {
  if (!desc.compare)
    throw std::invalid_argument("descriptor has no [compare] section");
  ValuedRootDatum vrd = build_valued_root_datum(desc);

  TransportResult tr;
  if (desc.compare->mode == "exotic") {
    std::map<std::string, long long> degrees = desc.compare->degrees;
    for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid)
      if (!degrees.count(vrd.orbit_name[oid]))
        degrees[vrd.orbit_name[oid]] = vrd.orbit_case[oid].e2;
    tr = exotic_transport(vrd, degrees);
  } else {
    tr = bc_transport(vrd);
  }
  WallsReport walls = walls_equal(vrd, tr.point_map, tr.vrd, window);

  std::ostringstream os;
  ordered_json j;
  describe_group(os, desc, vrd);
  j["group"] = group_json(desc, vrd);
  os << "\ncomparison mode: " << desc.compare->mode << "\n";
  os << "target: " << tr.vrd.rs.label << tr.vrd.rs.rank << "\n";
  os << "normalization: " << tr.note << " (value scale " << tr.value_scale.str()
     << ")\n";
  j["mode"] = desc.compare->mode;
  j["target"] = tr.vrd.rs.label + std::to_string(tr.vrd.rs.rank);
  j["note"] = tr.note;
  os << "identification matrix on dual coordinates:\n";
  for (int i = 0; i < tr.point_map.rows(); ++i) {
    os << " ";
    for (int k = 0; k < tr.point_map.cols(); ++k)
      os << " " << tr.point_map(i, k).str();
    os << "\n";
  }
  os << "\ntarget level sets per orbit:\n";
  for (size_t oid = 0; oid < tr.vrd.orbit_case.size(); ++oid) {
    int rep = -1;
    for (int a = 0; a < tr.vrd.rs.count(); ++a)
      if (tr.vrd.orbit_of_root[a] == static_cast<int>(oid) &&
          !tr.vrd.rs.divisible(a)) {
        rep = a;
        break;
      }
    os << "  " << tr.vrd.orbit_name[oid] << ": Gamma' = " << tr.vrd.gp(rep).str()
       << "\n";
  }

  os << "\nwall comparison (window [-" << window.str() << ", " << window.str()
     << "]):\n";
  ordered_json jrays = ordered_json::array();
  for (const auto& rr : walls.rays) {
    os << "  " << rr.source_ray << " -> " << rr.target_ray << " (scale "
       << rr.scale.str() << ", period " << rr.period.str() << "): "
       << (rr.equal ? "walls agree" : "MISMATCH") << "\n";
    os << "    transported:";
    for (const Rat& p : rr.source_positions) os << " " << p.str();
    os << "\n    target:     ";
    for (const Rat& p : rr.target_positions) os << " " << p.str();
    os << "\n";
    if (!rr.equal) os << "    " << rr.discrepancy << "\n";
    ordered_json jr;
    jr["source"] = rr.source_ray;
    jr["target"] = rr.target_ray;
    jr["scale"] = rr.scale.str();
    jr["period"] = rr.period.str();
    jr["equal"] = rr.equal;
    jrays.push_back(jr);
  }
  if (!walls.failure.empty()) os << "  failure: " << walls.failure << "\n";
  os << "\nwall arrangements "
     << (walls.equal ? "coincide under the identification" : "DIFFER") << "\n";
  j["rays"] = jrays;
  j["equal"] = walls.equal;

  CommandResult res;
  res.text = os.str();
  res.json = j.dump(2) + "\n";
  res.exit_code = walls.equal ? 0 : 2;
  return res;
}

}  // namespace btk
