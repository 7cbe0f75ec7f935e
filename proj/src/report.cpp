#include "alexlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace alexlab {

const char* version() { return ALEXLAB_VERSION; }

Json to_json(const Rational& q) { return to_string(q); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const GradedDims& d) { return Json{{"start", d.start}, {"values", d.values}}; }

Json to_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string());
  return Json{{"ring", ideal.ring->describe()}, {"generators", gens}};
}

Json to_json(const ModulePresentation& m) {
  Json rels = Json::array();
  for (const auto& col : m.relations) {
    Json c = Json::array();
    for (const auto& x : col) c.push_back(x.to_string());
    rels.push_back(c);
  }
  Json out{{"ring", m.ring->describe()}, {"generators", m.num_generators}, {"relations", rels}};
  if (!m.degrees.empty()) out["degrees"] = m.degrees;
  return out;
}

Json to_json(const GroupAlgebraMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.entries) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.to_string());
    rows.push_back(row);
  }
  return Json{{"ring", m.ring->describe()}, {"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

Json to_json(const CyclotomicField::Elem& v, int conductor) {
  Json c = Json::array();
  for (const auto& q : v) c.push_back(to_json(q));
  return Json{{"conductor", conductor}, {"coefficients", c}};
}

Json to_json(const CharacterPoint& chi) {
  Json free = Json::array();
  for (const auto& v : chi.free) {
    Json c = Json::array();
    for (const auto& q : v) c.push_back(to_json(q));
    free.push_back(c);
  }
  return Json{{"conductor", chi.conductor}, {"free", free}, {"torsion", chi.torsion}};
}

Json to_json(const CupData& cd) {
  Json cols = Json::array();
  const int b = cd.b1;
  for (const auto& c : cd.nabla) {
    Json col = Json::array();
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j) {
        const Rational& v = c[pair_index(i, j, b)];
        if (v != 0) col.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coefficient", to_json(v)}});
      }
    cols.push_back(col);
  }
  return Json{{"b1", b}, {"nabla", cols}};
}

Json to_json(const AbelianizationData& ab) {
  Json tors = Json::array();
  for (const auto& d : ab.torsion_divisors) tors.push_back(integer_json(d));
  return Json{{"rank", ab.free_rank}, {"torsion", tors}};
}

Json to_json(const FiniteModule& m) {
  Json acts = Json::array();
  for (const auto& a : m.actions) acts.push_back(a);
  return Json{{"p", m.p}, {"b", m.b}, {"dimension", m.dimension}, {"actions", acts}};
}

Json to_json(const ActionMatrix& a) {
  Json rows = Json::array();
  for (const auto& r : a.entries) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(to_json(x));
    rows.push_back(row);
  }
  return rows;
}

namespace {

Json actions_json(const std::vector<ActionMatrix>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(to_json(a));
  return out;
}

}  // namespace

Json to_json(const ExtensionReport& r) {
  Json out;
  out["actions"] = Json{{"int", actions_json(r.int_actions)}, {"rat", actions_json(r.rat_actions)}};
  for (const auto& [p, v] : r.modp_actions) out["actions"]["mod_" + std::to_string(p)] = actions_json(v);
  out["ab_exact_split"] = r.ab_exact_split;
  out["abf_exact_split"] = r.abf_exact_split;
  Json pe = Json::object();
  for (const auto& [p, v] : r.p_exact_split) pe[std::to_string(p)] = v;
  out["p_exact_split"] = pe;
  Json tables = Json::array();
  for (const auto& t : r.tables) {
    Json row{{"p", t.p},
             {"theta_kernel", t.kernel.values},
             {"theta_extension", t.total.values},
             {"verdict", to_string(t.verdict)},
             {"mismatches", t.mismatches},
             {"leq_holds", t.leq_holds}};
    tables.push_back(row);
  }
  out["transfer"] = tables;
  out["consistent"] = r.consistent;
  return out;
}

Json envelope(const std::string& verb, const std::string& canonical_input, const Json& result) {
  Json out{{"schema", kSchema}, {"version", version()}, {"verb", verb}, {"input", canonical_input}};
  for (auto it = result.begin(); it != result.end(); ++it) out[it.key()] = it.value();
  return out;
}

std::string to_table(const Json& report) {
  std::size_t width = 0;
  for (auto it = report.begin(); it != report.end(); ++it) width = std::max(width, it.key().size());
  std::ostringstream os;
  for (auto it = report.begin(); it != report.end(); ++it) {
    os << it.key() << std::string(width - it.key().size() + 2, ' ');
    const Json& v = it.value();
    if (v.is_string())
      os << v.get<std::string>();
    else
      os << v.dump();
    os << '\n';
  }
  return os.str();
}

}  // namespace alexlab
