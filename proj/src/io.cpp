#include "qpr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qpr/errors.hpp"

namespace qpr {

using nlohmann::json;

namespace {

json quat_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(quat_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).w);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

// Walks the document with JSON-pointer locations for error messages.
class Reader {
 public:
  const json& field(const json& obj, const std::string& key, const std::string& where) const {
    if (!obj.is_object()) throw ParseError(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + "/" + key, "missing field");
    return *it;
  }

  std::size_t count(const json& v, const std::string& where) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      throw ParseError(where, "expected a non-negative integer");
    return v.get<std::size_t>();
  }

  const json& array(const json& v, const std::string& where, std::optional<std::size_t> len) const {
    if (!v.is_array()) throw ParseError(where, "expected an array");
    if (len && v.size() != *len)
      throw ParseError(where, "expected " + std::to_string(*len) + " items, got " +
                                  std::to_string(v.size()));
    return v;
  }

  double real(const json& v, const std::string& where) const {
    if (!v.is_number()) throw ParseError(where, "expected a number");
    return v.get<double>();
  }

  Quaternion quaternion(const json& v, const std::string& where) const {
    array(v, where, 4);
    return {real(v[0], where + "/0"), real(v[1], where + "/1"), real(v[2], where + "/2"),
            real(v[3], where + "/3")};
  }
};

std::optional<bool> optional_bool(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_boolean()) throw ParseError(where + "/" + key, "expected a boolean");
  return it->get<bool>();
}

}  // namespace

std::string serialize_rep_file(const RepFile& file) {
  const WeakProjectiveRep& rep = file.rep;
  const FiniteGroup& g = rep.group();
  json doc;
  doc["format"] = "qpr-rep";
  doc["version"] = kRepFileVersion;
  if (!file.name.empty()) doc["name"] = file.name;
  doc["group"] = {{"order", g.order()}, {"labels", g.labels()}, {"cayley", g.cayley()}};
  json mats = json::array();
  for (const auto& m : rep.matrices()) mats.push_back(matrix_to_json(m));
  doc["representation"] = {{"dim", rep.dim()}, {"matrices", std::move(mats)}};
  if (!file.expected.empty()) {
    json e = json::object();
    const auto& x = file.expected;
    if (x.structure_case) e["case"] = std::string(to_string(*x.structure_case));
    if (x.strong_complex) e["strong_complex"] = *x.strong_complex;
    if (x.strong_quaternionic) e["strong_quaternionic"] = *x.strong_quaternionic;
    if (x.multicentral) e["multicentral"] = *x.multicentral;
    if (x.central) e["central"] = *x.central;
    doc["expected"] = std::move(e);
  }
  return doc.dump(1) + "\n";
}

RepFile parse_rep_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_col(text, e.byte), e.what());
  }
  const Reader rd;
  if (!doc.is_object()) throw ParseError("/", "expected a JSON object");
  if (auto it = doc.find("format"); it != doc.end() && *it != "qpr-rep")
    throw ParseError("/format", "unknown format");
  const auto version = rd.count(rd.field(doc, "version", ""), "/version");
  if (version != kRepFileVersion)
    throw ParseError("/version", "unsupported version " + std::to_string(version));

  const json& gj = rd.field(doc, "group", "");
  const std::size_t order = rd.count(rd.field(gj, "order", "/group"), "/group/order");
  if (order == 0) throw ParseError("/group/order", "order must be positive");
  std::vector<std::string> labels;
  if (auto it = gj.find("labels"); it != gj.end()) {
    rd.array(*it, "/group/labels", order);
    for (std::size_t i = 0; i < order; ++i) {
      if (!(*it)[i].is_string()) throw ParseError("/group/labels/" + std::to_string(i), "expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
  }
  const json& cj = rd.array(rd.field(gj, "cayley", "/group"), "/group/cayley", order);
  std::vector<std::vector<Element>> cayley(order);
  for (std::size_t b = 0; b < order; ++b) {
    const std::string row_where = "/group/cayley/" + std::to_string(b);
    rd.array(cj[b], row_where, order);
    for (std::size_t a = 0; a < order; ++a)
      cayley[b].push_back(rd.count(cj[b][a], row_where + "/" + std::to_string(a)));
  }

  const json& rj = rd.field(doc, "representation", "");
  const std::size_t dim = rd.count(rd.field(rj, "dim", "/representation"), "/representation/dim");
  if (dim == 0) throw ParseError("/representation/dim", "dimension must be positive");
  const json& mj = rd.array(rd.field(rj, "matrices", "/representation"),
                            "/representation/matrices", order);
  std::vector<QMatrix> mats;
  for (std::size_t a = 0; a < order; ++a) {
    const std::string mw = "/representation/matrices/" + std::to_string(a);
    rd.array(mj[a], mw, dim);
    QMatrix m(dim, dim);
    for (std::size_t f = 0; f < dim; ++f) {
      const std::string rw = mw + "/" + std::to_string(f);
      rd.array(mj[a][f], rw, dim);
      for (std::size_t g = 0; g < dim; ++g) m(f, g) = rd.quaternion(mj[a][f][g], rw + "/" + std::to_string(g));
    }
    mats.push_back(std::move(m));
  }

  RepFile out{doc.value("name", std::string()),
              WeakProjectiveRep(FiniteGroup(std::move(labels), std::move(cayley)), dim, std::move(mats)),
              {}};
  if (auto it = doc.find("expected"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("/expected", "expected an object");
    if (auto c = it->find("case"); c != it->end()) {
      const auto parsed = c->is_string() ? parse_structure_case(c->get<std::string>()) : std::nullopt;
      if (!parsed) throw ParseError("/expected/case", "unknown case tag");
      out.expected.structure_case = parsed;
    }
    out.expected.strong_complex = optional_bool(*it, "strong_complex", "/expected");
    out.expected.strong_quaternionic = optional_bool(*it, "strong_quaternionic", "/expected");
    out.expected.multicentral = optional_bool(*it, "multicentral", "/expected");
    out.expected.central = optional_bool(*it, "central", "/expected");
  }
  return out;
}

RepFile read_rep_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_rep_file(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ":" + e.where(), e.what());
  }
}

void write_rep_file(const std::filesystem::path& path, const RepFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_rep_file(file);
}

std::string classification_report(const WeakProjectiveRep& rep,
                                  const ClassificationOutcome& outcome,
                                  const IdentityReport& identities) {
  json doc;
  doc["case"] = std::string(to_string(outcome.kind));
  if (!outcome.reason.empty()) doc["reason"] = outcome.reason;
  doc["residual"] = outcome.residual;
  doc["irreducible"] = outcome.irreducible;
  doc["commutant_dimension"] = outcome.commutant_dimension;
  doc["identities"] = {{"operator_form", identities.operator_form},
                       {"associativity", identities.associativity},
                       {"spectral", identities.spectral}};
  json witness = json::array();
  for (const auto& q : outcome.witness.phases) witness.push_back(quat_to_json(q));
  doc["witness_reraying"] = std::move(witness);
  if (outcome.case3) {
    json sigma = json::array(), real = json::array();
    for (Element a = 0; a < rep.order(); ++a) {
      sigma.push_back({{"element", rep.group().label(a)},
                       {"sigma", quat_to_json(outcome.case3->phase_part[a])}});
      real.push_back(real_matrix_to_json(outcome.case3->real_part[a]));
    }
    doc["case3"] = {{"sigma", std::move(sigma)}, {"real_part", std::move(real)}};
  }
  return doc.dump(1) + "\n";
}

std::string scan_report(const ScanReport& report) {
  auto counts = [](const ScanCounts& c) {
    return json{{"multicentral_central", c.multicentral_central},
                {"multicentral_not_central", c.multicentral_not_central},
                {"not_multicentral_central", c.not_multicentral_central},
                {"not_multicentral_not_central", c.not_multicentral_not_central},
                {"total", c.total()}};
  };
  json doc;
  const auto& o = report.options;
  doc["options"] = {{"seed", o.seed},           {"trials", o.trials}, {"max_order", o.max_order},
                    {"max_dim", o.max_dim},     {"eps", o.eps}};
  doc["counts"] = counts(report.counts);
  json by = json::object();
  for (const auto& [name, c] : report.by_generator) by[name] = counts(c);
  doc["by_generator"] = std::move(by);
  json v = json::array();
  for (const auto& t : report.violations)
    v.push_back({{"trial", t.index}, {"generator", t.generator}, {"order", t.order}, {"dim", t.dim}});
  doc["violations"] = std::move(v);
  return doc.dump(1) + "\n";
}

}  // namespace qpr
