#include "glskit/certificate_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace gls {

namespace {

// Field order in the output matches the documented layout.
using json = nlohmann::ordered_json;

std::int64_t to_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) {
    throw CertificateParseError("certificate " + what + " is not an integer");
  }
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw CertificateParseError("certificate " + what + " is out of range");
  }
  return v.get<std::int64_t>();
}

std::int64_t get_int(const json& j, const std::string& field) {
  if (!j.contains(field)) {
    throw CertificateParseError("certificate is missing field '" + field + "'");
  }
  return to_int(j.at(field), "field '" + field + "'");
}

CliqueCount get_count(const json& j, const std::string& field) {
  std::int64_t raw = get_int(j, field);
  if (raw < 0) {
    throw CertificateParseError("certificate field '" + field +
                                "' must be nonnegative");
  }
  return CliqueCount(raw);
}

Vertex get_vertex(std::int64_t raw, std::int64_t n, const std::string& where) {
  if (raw < 0 || raw >= n) {
    throw CertificateParseError("certificate " + where + " index " +
                                std::to_string(raw) +
                                " is outside the vertex range [0, " +
                                std::to_string(n) + ")");
  }
  return static_cast<Vertex>(raw);
}

}  // namespace

std::string certificate_to_string(const Certificate& cert) {
  json j;
  j["n"] = cert.params.n;
  j["delta"] = cert.params.delta;
  j["t"] = cert.params.t;
  j["a"] = cert.params.a;
  j["b"] = cert.params.b;
  j["k_t"] = cert.k_t.value();
  j["bound"] = cert.bound.value();
  j["steps"] = json::array();
  for (const CertificateStep& step : cert.steps) {
    json s;
    s["vertex"] = static_cast<std::int64_t>(step.vertex);
    s["degree"] = step.degree_at_step;
    s["t_count"] = step.t_count.value();
    s["removed"] = json::array();
    for (Vertex v : step.removed) {
      s["removed"].push_back(static_cast<std::int64_t>(v));
    }
    j["steps"].push_back(std::move(s));
  }
  return j.dump(2) + "\n";
}

Certificate certificate_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateParseError(std::string("certificate is not valid JSON: ") +
                                e.what());
  }
  if (!j.is_object()) {
    throw CertificateParseError("certificate must be a JSON object");
  }

  Certificate cert;
  cert.params.n = get_int(j, "n");
  cert.params.delta = get_int(j, "delta");
  cert.params.t = get_int(j, "t");
  cert.params.a = get_int(j, "a");
  cert.params.b = get_int(j, "b");
  try {
    cert.params.validate();
  } catch (const std::invalid_argument& e) {
    throw CertificateParseError(std::string("certificate parameters: ") +
                                e.what());
  }
  cert.k_t = get_count(j, "k_t");
  cert.bound = get_count(j, "bound");

  if (!j.contains("steps") || !j.at("steps").is_array()) {
    throw CertificateParseError("certificate needs a 'steps' array");
  }
  for (const json& s : j.at("steps")) {
    if (!s.is_object()) {
      throw CertificateParseError("certificate steps must be objects");
    }
    CertificateStep step;
    step.vertex = get_vertex(get_int(s, "vertex"), cert.params.n, "step vertex");
    step.degree_at_step = get_int(s, "degree");
    if (step.degree_at_step < 0) {
      throw CertificateParseError("certificate step degree must be nonnegative");
    }
    step.t_count = get_count(s, "t_count");
    if (!s.contains("removed") || !s.at("removed").is_array()) {
      throw CertificateParseError("certificate step needs a 'removed' array");
    }
    std::vector<Vertex> removed;
    removed.reserve(s.at("removed").size());
    for (const json& r : s.at("removed")) {
      removed.push_back(get_vertex(to_int(r, "removed entry"), cert.params.n,
                                   "removed vertex"));
    }
    VertexSet set{std::move(removed)};
    if (set.size() != s.at("removed").size()) {
      throw CertificateParseError("a step's removed list repeats a vertex");
    }
    step.removed = std::move(set);
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

void save_certificate_file(const std::string& path, const Certificate& cert) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << certificate_to_string(cert);
  if (!out) {
    throw std::runtime_error("failed writing certificate to '" + path + "'");
  }
}

Certificate load_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open certificate file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return certificate_from_string(buffer.str());
}

}  // namespace gls
