#ifndef PDET_TOOLS_REPORT_HPP
#define PDET_TOOLS_REPORT_HPP

#include <pdet/charpoly.hpp>
#include <pdet/exact.hpp>
#include <pdet/selftest.hpp>

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdet::cli {

using Json = nlohmann::ordered_json;

struct VerdictLine {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string lhs;
  std::string rhs;
  std::string note;
};

/*
 * One command's output. Exact values are always strings ("p/q" or an
 * integer), polynomials ascending arrays of such strings. Serialized as
 * {command, inputs, results, verdicts, duration_ms}.
 */
struct ResultReport {
  std::string command;
  Json inputs = Json::array();
  Json results = Json::object();
  std::vector<VerdictLine> verdicts;
  long long duration_ms = 0;

  bool any_failure() const {
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const VerdictLine& v) { return v.verdict == Verdict::fail; });
  }

  void add_verdict(std::string name, bool ok, std::string lhs, std::string rhs,
                   std::string note = {}) {
    verdicts.push_back({std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(lhs),
                        std::move(rhs), std::move(note)});
  }

  void add_skipped(std::string name, std::string note) {
    verdicts.push_back({std::move(name), Verdict::skipped_budget, "", "", std::move(note)});
  }

  Json to_json() const {
    Json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["results"] = results;
    Json vs = Json::array();
    for (const auto& v : verdicts) {
      Json line;
      line["name"] = v.name;
      line["verdict"] = verdict_name(v.verdict);
      line["lhs"] = v.lhs;
      line["rhs"] = v.rhs;
      if (!v.note.empty()) line["note"] = v.note;
      vs.push_back(std::move(line));
    }
    out["verdicts"] = std::move(vs);
    out["duration_ms"] = duration_ms;
    return out;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "command: " << command << '\n';
    for (const auto& in : inputs)
      out << "input: " << in["path"].get<std::string>() << " (sha256 "
          << in["sha256"].get<std::string>() << ")\n";
    for (const auto& [key, value] : results.items()) {
      if (value.is_string())
        out << key << ": " << value.get<std::string>() << '\n';
      else
        out << key << ": " << value.dump() << '\n';
    }
    for (const auto& v : verdicts) {
      out << "[" << verdict_name(v.verdict) << "] " << v.name;
      if (!v.lhs.empty() || !v.rhs.empty())
        out << ": " << v.lhs << (v.verdict == Verdict::fail ? " != " : " = ") << v.rhs;
      if (!v.note.empty()) out << " (" << v.note << ")";
      out << '\n';
    }
    out << "duration_ms: " << duration_ms << '\n';
    return out.str();
  }
};

inline Json scalar_json(const Scalar& x) { return to_string(x); }

inline Json polynomial_json(const Polynomial<Scalar>& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs) arr.push_back(to_string(c));
  return arr;
}

inline Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void record_input(ResultReport& report, const std::string& path,
                         const std::string& contents) {
  report.inputs.push_back(Json{{"path", path}, {"sha256", sha256_hex(contents)}});
}

}  // namespace pdet::cli

#endif  // PDET_TOOLS_REPORT_HPP
