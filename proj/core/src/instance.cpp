#include "gruss/instance.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gruss {
namespace {

using nlohmann::json;

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

double read_number(const json& node, const std::string& path) {
  if (!node.is_number()) throw ParseError(path, "expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw ParseError(path, "number is not finite");
  return v;
}

Scalar read_scalar(const json& node, const std::string& path, Field field) {
  if (node.is_number()) return read_number(node, path);
  if (node.is_array() && node.size() == 2) {
    const double re = read_number(node[0], child(path, 0));
    const double im = read_number(node[1], child(path, 1));
    if (field == Field::Real && im != 0.0) {
      throw ParseError(path, "complex value in a real space");
    }
    return {re, im};
  }
  throw ParseError(path, "expected a number or a [re, im] pair");
}

Vector read_vector(const json& node, const std::string& path, const Space& space) {
  if (!node.is_array()) throw ParseError(path, "expected an array of coordinates");
  if (node.size() != space.dim()) {
    throw ParseError(path, "vector has " + std::to_string(node.size()) +
                               " coordinates, space dimension is " + std::to_string(space.dim()));
  }
  std::vector<Scalar> coords;
  coords.reserve(node.size());
  for (std::size_t k = 0; k < node.size(); ++k) {
    coords.push_back(read_scalar(node[k], child(path, k), space.field()));
  }
  return Vector(std::move(coords));
}

std::vector<Vector> read_vectors(const json& node, const std::string& path, const Space& space,
                                 std::size_t n) {
  if (!node.is_array()) throw ParseError(path, "expected an array of vectors");
  if (node.size() != n) {
    throw ParseError(path, "sequence has " + std::to_string(node.size()) +
                               " terms, weights have " + std::to_string(n));
  }
  std::vector<Vector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(read_vector(node[i], child(path, i), space));
  return out;
}

Space read_space(const json& node, const std::string& path) {
  if (!node.is_object()) throw ParseError(path, "expected an object");
  if (!node.contains("dim")) throw ParseError(child(path, "dim"), "missing");
  const json& dim = node["dim"];
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) {
    throw ParseError(child(path, "dim"), "expected a positive integer");
  }
  Field field = Field::Real;
  if (node.contains("field")) {
    const json& f = node["field"];
    if (f == "real") {
      field = Field::Real;
    } else if (f == "complex") {
      field = Field::Complex;
    } else {
      throw ParseError(child(path, "field"), "expected \"real\" or \"complex\"");
    }
  }
  std::vector<double> metric;
  if (node.contains("metric")) {
    const json& m = node["metric"];
    const std::string mpath = child(path, "metric");
    if (!m.is_array()) throw ParseError(mpath, "expected an array");
    for (std::size_t k = 0; k < m.size(); ++k) metric.push_back(read_number(m[k], child(mpath, k)));
  }
  try {
    return Space(dim.get<std::size_t>(), field, std::move(metric));
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

std::optional<Enclosure> read_enclosure(const json& node, const std::string& path,
                                        const char* lo_key, const char* hi_key,
                                        const Space& space) {
  const bool has_lo = node.contains(lo_key), has_hi = node.contains(hi_key);
  if (!has_lo && !has_hi) return std::nullopt;
  if (has_lo != has_hi) {
    throw ParseError(child(path, has_lo ? hi_key : lo_key), "missing partner endpoint");
  }
  Vector lo = read_vector(node[lo_key], child(path, lo_key), space);
  Vector hi = read_vector(node[hi_key], child(path, hi_key), space);
  if (lo == hi) throw ParseError(child(path, hi_key), "enclosure endpoints coincide");
  return Enclosure(std::move(lo), std::move(hi));
}

json write_scalar(Scalar s, Field field) {
  if (field == Field::Real) return s.real();
  return json::array({s.real(), s.imag()});
}

json write_vector(const Vector& v, Field field) {
  json out = json::array();
  for (const Scalar& c : v.coords()) out.push_back(write_scalar(c, field));
  return out;
}

json write_vectors(const std::vector<Vector>& vs, Field field) {
  json out = json::array();
  for (const Vector& v : vs) out.push_back(write_vector(v, field));
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("", "top level must be an object");

  Instance inst;
  if (!doc.contains("space")) throw ParseError("/space", "missing");
  inst.space = read_space(doc["space"], "/space");

  if (!doc.contains("weights")) throw ParseError("/weights", "missing");
  const json& w = doc["weights"];
  if (!w.is_array() || w.empty()) throw ParseError("/weights", "expected a non-empty array");
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double v = read_number(w[i], child("/weights", i));
    if (v < 0.0) throw ParseError(child("/weights", i), "weight is negative");
    inst.weights.push_back(v);
  }
  const std::size_t n = inst.weights.size();
  const Field field = inst.space.field();

  if (doc.contains("sequences")) {
    const json& seq = doc["sequences"];
    if (!seq.is_object()) throw ParseError("/sequences", "expected an object");
    if (seq.contains("xs")) inst.xs = read_vectors(seq["xs"], "/sequences/xs", inst.space, n);
    if (seq.contains("ys")) inst.ys = read_vectors(seq["ys"], "/sequences/ys", inst.space, n);
    if (seq.contains("zs")) inst.zs = read_vectors(seq["zs"], "/sequences/zs", inst.space, n);
    if (seq.contains("alphas")) {
      const json& a = seq["alphas"];
      if (!a.is_array() || a.size() != n) {
        throw ParseError("/sequences/alphas", "expected an array of " + std::to_string(n) + " scalars");
      }
      for (std::size_t i = 0; i < n; ++i) {
        inst.alphas.push_back(read_scalar(a[i], child("/sequences/alphas", i), field));
      }
    }
  }

  if (doc.contains("enclosures")) {
    const json& e = doc["enclosures"];
    const std::string path = "/enclosures";
    if (!e.is_object()) throw ParseError(path, "expected an object");
    inst.x_enclosure = read_enclosure(e, path, "x_lo", "x_hi", inst.space);
    inst.y_enclosure = read_enclosure(e, path, "y_lo", "y_hi", inst.space);
    inst.gradient_enclosure = read_enclosure(e, path, "m", "M", inst.space);
    inst.z_enclosure = read_enclosure(e, path, "z_lo", "z_hi", inst.space);
    if (e.contains("a") || e.contains("A")) {
      if (!e.contains("a") || !e.contains("A")) {
        throw ParseError(child(path, e.contains("a") ? "A" : "a"), "missing partner endpoint");
      }
      const Scalar a = read_scalar(e["a"], child(path, "a"), field);
      const Scalar big_a = read_scalar(e["A"], child(path, "A"), field);
      if (a == big_a) throw ParseError(child(path, "A"), "disc endpoints coincide");
      inst.alpha_disc = ScalarDisc{a, big_a};
    }
  }

  if (doc.contains("oracle")) {
    if (!doc["oracle"].is_string()) throw ParseError("/oracle", "expected a string");
    inst.oracle = doc["oracle"].get<std::string>();
  }
  if (doc.contains("holder_p")) {
    const json& h = doc["holder_p"];
    if (h == "inf") {
      inst.holder = HolderExponent::infinity();
    } else {
      const double p = read_number(h, "/holder_p");
      if (!(p > 1.0)) throw ParseError("/holder_p", "must exceed 1");
      inst.holder = HolderExponent{p};
    }
  }
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst, int indent) {
  const Field field = inst.space.field();
  json doc;
  json space = {{"dim", inst.space.dim()}, {"field", field == Field::Real ? "real" : "complex"}};
  if (!inst.space.metric().empty()) space["metric"] = inst.space.metric();
  doc["space"] = space;
  doc["weights"] = inst.weights;

  json seq = json::object();
  if (!inst.xs.empty()) seq["xs"] = write_vectors(inst.xs, field);
  if (!inst.ys.empty()) seq["ys"] = write_vectors(inst.ys, field);
  if (!inst.alphas.empty()) {
    json a = json::array();
    for (const Scalar& s : inst.alphas) a.push_back(write_scalar(s, field));
    seq["alphas"] = a;
  }
  if (!inst.zs.empty()) seq["zs"] = write_vectors(inst.zs, field);
  doc["sequences"] = seq;

  json encl = json::object();
  auto put = [&](const std::optional<Enclosure>& e, const char* lo, const char* hi) {
    if (!e) return;
    encl[lo] = write_vector(e->lo(), field);
    encl[hi] = write_vector(e->hi(), field);
  };
  put(inst.x_enclosure, "x_lo", "x_hi");
  put(inst.y_enclosure, "y_lo", "y_hi");
  put(inst.gradient_enclosure, "m", "M");
  put(inst.z_enclosure, "z_lo", "z_hi");
  if (inst.alpha_disc) {
    encl["a"] = write_scalar(inst.alpha_disc->lo, field);
    encl["A"] = write_scalar(inst.alpha_disc->hi, field);
  }
  if (!encl.empty()) doc["enclosures"] = encl;
  if (inst.oracle) doc["oracle"] = *inst.oracle;
  if (inst.holder) {
    if (inst.holder->is_infinite()) {
      doc["holder_p"] = "inf";
    } else {
      doc["holder_p"] = inst.holder->p;
    }
  }
  return doc.dump(indent);
}

void write_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << serialize_instance(instance) << '\n';
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace gruss
