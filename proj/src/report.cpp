#include "ghwlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace ghwlab {

Json params_json(const DefiningSet& d) {
  Json j;
  std::visit(
      [&j](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Class1Params>) {
          j = Json{{"q", p.q}, {"m", p.m}, {"k", p.k}, {"h", p.h}};
          Json thetas = Json::array();
          for (const auto& t : p.thetas) thetas.push_back(t.to_string());
          j["thetas"] = thetas;
        } else if constexpr (std::is_same_v<T, Class2Params>) {
          j = Json{{"q", p.q}, {"m", p.m}, {"s", p.s}, {"k", p.k}, {"l", p.l}, {"exceptional", p.exceptional}};
        } else if constexpr (std::is_same_v<T, Class3Params>) {
          j = Json{{"m", p.m}, {"pattern", p.pattern.to_string()}};
        } else {
          j = Json{{"q", p.q}, {"m", p.m}};
        }
      },
      d.params());
  return j;
}

namespace {

Json fields_json(const DefiningSet& d) {
  Json f = Json::array();
  f.push_back(d.first_field()->describe());
  if (d.bivariate()) f.push_back(d.second_field()->describe());
  return f;
}

Json class_json(const DefiningSet& d) {
  const int id = d.class_id();
  return id == 0 ? Json("custom") : Json(id);
}

}  // namespace

Json defining_set_json(const DefiningSet& d) {
  Json elems = Json::array();
  for (const auto& p : d.points()) {
    if (p.y) {
      elems.push_back(Json::array({p.x.to_string(), p.y->to_string()}));
    } else {
      elems.push_back(p.x.to_string());
    }
  }
  return Json{{"class", class_json(d)},
              {"params", params_json(d)},
              {"fields", fields_json(d)},
              {"size", d.size()},
              {"elements", elems}};
}

Json code_json(const CodeInstance& c, const WeightDistribution& wd) {
  Json dist = Json::object();
  for (const auto& [w, count] : wd) dist[std::to_string(w)] = count;
  return Json{{"class", class_json(*c.defining_set)},
              {"params", params_json(*c.defining_set)},
              {"n", c.length},
              {"dim", c.code_dim},
              {"d", min_distance(wd)},
              {"weight_distribution", dist}};
}

std::string generator_text(const CodeInstance& c) {
  std::string out;
  for (Eigen::Index i = 0; i < c.generator.rows(); ++i) {
    out += to_digits(c.generator.row(i));
    out.push_back('\n');
  }
  return out;
}

std::string hierarchy_string(const std::vector<std::int64_t>& h) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) os << ", ";
    os << "wt_" << i + 1 << '=' << h[i];
  }
  os << '}';
  return os.str();
}

Json report_json(const HierarchyReport& rep, bool deterministic) {
  const DefiningSet& d = *rep.defining_set;
  Json methods = Json::array();
  if (rep.methods.support) methods.push_back("support");
  if (rep.methods.dual) methods.push_back("dual");
  if (rep.methods.formula) methods.push_back("formula");

  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r{{"r", row.r}};
    if (row.d_support) r["d_support"] = *row.d_support;
    if (row.d_dual) r["d_dual"] = *row.d_dual;
    if (row.d_formula) r["d_formula"] = *row.d_formula;
    if (row.witness) r["witness"] = *row.witness;
    if (row.witness_support) r["witness_support"] = *row.witness_support;
    r["agree"] = row.agree;
    rows.push_back(std::move(r));
  }

  Json checks{{"monotone", rep.monotone}, {"singleton", rep.singleton}, {"full_support", rep.full_support}};
  if (rep.lemmas) {
    Json lemmas = Json::array();
    for (const auto& c : rep.lemmas->checks) {
      Json lc{{"name", c.name}, {"description", c.description}, {"cases", c.cases}, {"passed", c.passed()}};
      if (!c.witness.empty()) lc["witness"] = c.witness;
      if (!c.violations.empty()) lc["violations"] = c.violations;
      lemmas.push_back(std::move(lc));
    }
    checks["lemma_checks"] = lemmas;
  } else {
    checks["lemma_checks"] = nullptr;
  }
  if (rep.reference) {
    Json ref{{"name", rep.reference->name}};
    if (!rep.reference->hierarchy.empty()) {
      ref["expected"] = Json{{"n", rep.reference->length},
                             {"dim", rep.reference->dim},
                             {"d", rep.reference->distance},
                             {"hierarchy", rep.reference->hierarchy}};
      ref["match"] = rep.reference_match;
    } else {
      ref["flag"] = "parameter-inconsistency";
    }
    if (!rep.reference->note.empty()) ref["note"] = rep.reference->note;
    checks["reference"] = ref;
  }

  const auto h = rep.hierarchy();
  Json j{{"class", class_json(d)},
         {"params", params_json(d)},
         {"fields", fields_json(d)},
         {"n", rep.length},
         {"dim", rep.dim},
         {"message_dim", rep.message_dim},
         {"kernel_dim", rep.kernel_dim}};
  j["d"] = h.empty() ? Json(nullptr) : Json(h.front());
  j["methods"] = methods;
  j["formula"] = rep.formula_status;
  j["rows"] = rows;
  j["hierarchy"] = h;
  j["checks"] = checks;
  j["notes"] = rep.notes;
  j["status"] = rep.failed() ? "FAILED" : "PASS";
  if (!deterministic) {
    Json t = Json::object();
    for (const auto& [name, ms] : rep.timings_ms) t[name] = ms;
    j["timings"] = t;
  }
  return j;
}

std::string report_csv(const HierarchyReport& rep) {
  std::ostringstream os;
  os << "r,d_support,d_dual,d_formula,agree\n";
  auto cell = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& row : rep.rows) {
    os << row.r << ',' << cell(row.d_support) << ',' << cell(row.d_dual) << ',' << cell(row.d_formula) << ','
       << (row.agree ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::string report_table(const HierarchyReport& rep) {
  std::ostringstream os;
  const auto h = rep.hierarchy();
  os << rep.defining_set->label() << '\n';
  os << "code [" << rep.length << ", " << rep.dim;
  if (!h.empty()) os << ", " << h.front();
  os << "]\n";
  auto cell = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << std::setw(4) << "r" << std::setw(10) << "support" << std::setw(10) << "dual" << std::setw(10) << "formula"
     << std::setw(7) << "agree" << '\n';
  for (const auto& row : rep.rows) {
    os << std::setw(4) << row.r << std::setw(10) << cell(row.d_support) << std::setw(10) << cell(row.d_dual)
       << std::setw(10) << cell(row.d_formula) << std::setw(7) << (row.agree ? "yes" : "NO") << '\n';
  }
  os << "hierarchy: " << hierarchy_string(h) << '\n';
  os << "checks: monotone=" << (rep.monotone ? "yes" : "no") << " singleton=" << (rep.singleton ? "yes" : "no")
     << " full_support=" << (rep.full_support ? "yes" : "no");
  if (rep.lemmas) os << " structural=" << (rep.lemmas->passed() ? "ok" : "VIOLATED");
  if (rep.reference && !rep.reference->hierarchy.empty()) {
    os << " reference=" << (rep.reference_match ? "match" : "MISMATCH");
  }
  os << '\n';
  for (const auto& n : rep.notes) os << "note: " << n << '\n';
  os << "status: " << (rep.failed() ? "FAILED" : "PASS") << '\n';
  return os.str();
}

}  // namespace ghwlab
