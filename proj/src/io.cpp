#include "lefcalc/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace lefcalc {

using nlohmann::json;

namespace {

json int_to_json(const Int& v) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (v >= kMin && v <= kMax) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

json class_to_json(const HomologyClass& v) {
  json arr = json::array();
  for (const Int& x : v) arr.push_back(int_to_json(x));
  return arr;
}

HomologyClass class_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected class vector");
  HomologyClass v;
  for (const json& x : j) v.push_back(int_from_json(x));
  return v;
}

json matrix_to_json(const SympMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SympMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected matrix");
  const std::size_t n = j.size();
  SympMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    for (std::size_t k = 0; k < n; ++k) m.at(i, k) = int_from_json(j[i][k]);
  }
  return m;
}

json surface_to_json(const SurfaceSig& s) {
  return json{{"genus", s.genus}, {"boundary", s.boundary_components}};
}

SurfaceSig surface_from_json(const json& j) {
  return make_surface(j.at("genus").get<int>(), j.at("boundary").get<int>());
}

json word_to_json(const TwistWord& w) {
  json letters = json::array();
  for (const TwistLetter& l : w.letters) {
    letters.push_back(json::array({l.curve, l.exponent}));
  }
  return json{{"system", w.system}, {"letters", std::move(letters)}};
}

TwistWord word_from_json(const json& j) {
  TwistWord w;
  w.system = j.at("system").get<std::string>();
  for (const json& l : j.at("letters")) {
    int e = l.at(1).get<int>();
    if (e != 1 && e != -1) throw std::invalid_argument("exponent must be +-1");
    w.letters.push_back({l.at(0).get<std::string>(), e});
  }
  return w;
}

}  // namespace

json system_to_json(const GeneratorSystem& sys) {
  json curves = json::array();
  for (const auto& [name, curve] : sys.curves) {
    curves.push_back(json{{"name", name}, {"class", class_to_json(curve.cls)}});
  }
  json pairs = json::array();
  for (const auto& [a, b] : sys.disjoint_pairs) {
    pairs.push_back(json::array({a, b}));
  }
  return json{{"id", sys.id},
              {"surface", surface_to_json(sys.surface)},
              {"curves", std::move(curves)},
              {"disjoint", std::move(pairs)}};
}

GeneratorSystem system_from_json(const json& j) {
  GeneratorSystem sys;
  sys.id = j.value("id", std::string("custom"));
  sys.surface = surface_from_json(j.at("surface"));
  for (const json& c : j.at("curves")) {
    std::string name = c.at("name").get<std::string>();
    sys.curves[name] = Curve{name, class_from_json(c.at("class")), sys.surface};
  }
  for (const json& p : j.value("disjoint", json::array())) {
    sys.add_disjoint(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  }
  return sys;
}

json fibration_to_json(const LefschetzData& lf) {
  json j;
  j["base"] = lf.base == Base::Sphere ? "sphere" : "disk";
  j["fiber"] = surface_to_json(lf.fiber);
  j["label"] = lf.label;

  // builtin systems serialize by name when untouched
  if (lf.system == torus_system()) {
    j["system"] = "torus";
  } else if (lf.fiber.genus >= 2 &&
             lf.system == humphries_system(lf.fiber.genus,
                                           lf.fiber.boundary_components == 1)) {
    j["system"] = "humphries";
  } else {
    j["system"] = system_to_json(lf.system);
  }

  json cycles = json::array();
  for (const Curve& c : lf.cycles) {
    if (lf.system.has_curve(c.name) && lf.system.curve(c.name).cls == c.cls) {
      cycles.push_back(json{{"name", c.name}});
    } else {
      cycles.push_back(json{{"name", c.name}, {"class", class_to_json(c.cls)}});
    }
  }
  j["cycles"] = std::move(cycles);
  return j;
}

LefschetzData fibration_from_json(const json& j) {
  std::string base_s = j.at("base").get<std::string>();
  Base base;
  if (base_s == "sphere") {
    base = Base::Sphere;
  } else if (base_s == "disk") {
    base = Base::Disk;
  } else {
    throw std::invalid_argument("base must be \"sphere\" or \"disk\"");
  }
  SurfaceSig fiber = surface_from_json(j.at("fiber"));

  GeneratorSystem sys;
  const json& sj = j.at("system");
  if (sj.is_string()) {
    std::string name = sj.get<std::string>();
    if (name == "torus") {
      sys = torus_system();
    } else if (name == "humphries") {
      sys = humphries_system(fiber.genus, fiber.boundary_components == 1);
    } else {
      throw std::invalid_argument("unknown builtin system '" + name + "'");
    }
  } else {
    sys = system_from_json(sj);
  }

  std::vector<Curve> cycles;
  std::size_t anon = 0;
  for (const json& c : j.at("cycles")) {
    if (c.is_string()) {
      cycles.push_back(sys.curve(c.get<std::string>()));
    } else if (c.is_array()) {
      std::string name = "v" + std::to_string(anon++);
      cycles.push_back(Curve{name, class_from_json(c), fiber});
    } else if (c.is_object()) {
      if (c.contains("class")) {
        std::string name = c.value("name", "v" + std::to_string(anon++));
        cycles.push_back(Curve{name, class_from_json(c.at("class")), fiber});
      } else {
        cycles.push_back(sys.curve(c.at("name").get<std::string>()));
      }
    } else {
      throw std::invalid_argument("cycle must be a name or a class vector");
    }
  }
  return make_fibration(base, fiber, std::move(sys), std::move(cycles),
                        j.value("label", std::string()));
}

json certificate_to_json(const EmbeddingCertificate& cert) {
  json j;
  j["fidelity"] = cert.fidelity;

  json target;
  target["kind"] = cert.target.kind == TargetKind::ClosedPencil
                       ? "closed-pencil"
                       : "weinstein-dl3";
  target["fiber"] = surface_to_json(cert.target.fiber);
  target["reference"] = json{{"name", cert.target.reference_cycle.name},
                             {"class", class_to_json(cert.target.reference_cycle.cls)}};
  target["conjugatable"] = system_to_json(cert.target.conjugatable);
  j["target"] = std::move(target);

  json entries = json::array();
  for (const CertificateEntry& e : cert.entries) {
    json entry;
    entry["index"] = e.index;
    entry["class"] = class_to_json(e.cycle_class);
    entry["conjugator"] = matrix_to_json(e.conjugator);
    if (e.word) entry["word"] = word_to_json(*e.word);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);

  json flex;
  flex["caveat"] = cert.flexibility.caveat;
  flex["all_full"] = cert.flexibility.all_full;
  json primes = json::array();
  for (const FlexibilityEntry& e : cert.flexibility.entries) {
    primes.push_back(json{{"p", e.prime},
                          {"order", e.result.order},
                          {"expected", int_to_json(e.expected_order)},
                          {"full", e.result.full},
                          {"inconclusive", e.result.inconclusive}});
  }
  flex["primes"] = std::move(primes);

  j["global"] = json{{"closure_identity", cert.closure_identity},
                     {"genus", cert.fiber_genus},
                     {"genus_warning", cert.genus_warning},
                     {"flexibility", std::move(flex)}};
  return j;
}

EmbeddingCertificate certificate_from_json(const json& j) {
  EmbeddingCertificate cert;
  cert.fidelity = j.at("fidelity").get<std::string>();

  const json& tj = j.at("target");
  std::string kind = tj.at("kind").get<std::string>();
  if (kind == "closed-pencil") {
    cert.target.kind = TargetKind::ClosedPencil;
  } else if (kind == "weinstein-dl3") {
    cert.target.kind = TargetKind::WeinsteinDL3;
  } else {
    throw std::invalid_argument("unknown target kind '" + kind + "'");
  }
  cert.target.fiber = surface_from_json(tj.at("fiber"));
  cert.target.reference_cycle =
      Curve{tj.at("reference").at("name").get<std::string>(),
            class_from_json(tj.at("reference").at("class")), cert.target.fiber};
  cert.target.conjugatable = system_from_json(tj.at("conjugatable"));

  for (const json& ej : j.at("entries")) {
    CertificateEntry e;
    e.index = ej.at("index").get<std::size_t>();
    e.cycle_class = class_from_json(ej.at("class"));
    e.conjugator = matrix_from_json(ej.at("conjugator"));
    if (ej.contains("word")) e.word = word_from_json(ej.at("word"));
    cert.entries.push_back(std::move(e));
  }

  const json& gj = j.at("global");
  cert.closure_identity = gj.at("closure_identity").get<bool>();
  cert.fiber_genus = gj.at("genus").get<int>();
  cert.genus_warning = gj.at("genus_warning").get<bool>();

  const json& fj = gj.at("flexibility");
  cert.flexibility.caveat = fj.at("caveat").get<std::string>();
  cert.flexibility.all_full = fj.at("all_full").get<bool>();
  for (const json& pj : fj.at("primes")) {
    FlexibilityEntry e;
    e.prime = pj.at("p").get<unsigned>();
    e.result.order = pj.at("order").get<std::uint64_t>();
    e.expected_order = int_from_json(pj.at("expected"));
    e.result.full = pj.at("full").get<bool>();
    e.result.inconclusive = pj.at("inconclusive").get<bool>();
    cert.flexibility.any_inconclusive =
        cert.flexibility.any_inconclusive || e.result.inconclusive;
    cert.flexibility.entries.push_back(std::move(e));
  }
  return cert;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is a 1-based byte offset into the input
    std::size_t line = 1, col = 1;
    std::size_t limit = e.byte > 0 ? e.byte - 1 : 0;
    for (std::size_t i = 0; i < limit && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, e.what());
  }
}

std::string dump_document(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace lefcalc
