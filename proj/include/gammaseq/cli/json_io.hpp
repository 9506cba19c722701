#pragma once

#include "gammaseq/cli/group_expr.hpp"
#include "gammaseq/gamma/sequence.hpp"
#include "gammaseq/rings/invariants.hpp"
#include "gammaseq/search/survey.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <string>
#include <string_view>

namespace gammaseq {

using Json = nlohmann::ordered_json;

/// Input that does not match the sequence schema; `path` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : Error((path.empty() ? std::string("/") : path) + ": " + message), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

inline Json integer_json(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw CapExceeded("integer " + v.str() + " does not fit the JSON output format");
  return static_cast<std::int64_t>(v);
}

/// Row-major array of rows.
inline Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json sequence_json(const GammaSequence& s) {
  Json j;
  j["h_top"] = s.h_top.to_string();
  j["h_mid"] = s.h_mid.to_string();
  j["h_bot"] = s.h_bot.to_string();
  j["pi"] = s.pi.to_string();
  j["b"] = matrix_json(s.b.matrix());
  j["i"] = matrix_json(s.i.matrix());
  j["h"] = matrix_json(s.h.matrix());
  return j;
}

namespace detail {

inline bool is_flat(const Json& j) {
  if (!j.is_array()) return j.is_primitive();
  for (const auto& e : j)
    if (e.is_structured() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); })))
      return false;
  return true;
}

inline void write_pretty(std::string& out, const Json& j, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (is_flat(j) || j.empty()) {
    out += j.dump();
    return;
  }
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  std::size_t n = 0;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    write_pretty(out, it.value(), indent + 2);
    out += ++n < j.size() ? ",\n" : "\n";
  }
  out += std::string(indent, ' ') + (object ? "}" : "]");
}

}  // namespace detail

/// Indented JSON with matrices and other flat arrays kept on one line.
inline std::string to_text(const Json& j) {
  std::string out;
  detail::write_pretty(out, j, 0);
  return out + "\n";
}

namespace detail {

template <class J>
FgAbGroup group_from_json(const J& j, const std::string& key) {
  const std::string path = "/" + key;
  if (!j.contains(key)) throw SchemaError(path, "missing group expression");
  const auto& v = j.at(key);
  if (!v.is_string()) throw SchemaError(path, "expected a group expression string");
  const std::string text = v.template get<std::string>();
  std::vector<Integer> terms;
  try {
    terms = parse_group_terms(text);
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
  const FgAbGroup g = terms.empty() ? FgAbGroup() : canonicalize(diagonal(terms));
  // matrices refer to the written generators, so only invariant-factor form is accepted
  if (terms != g.factors())
    throw SchemaError(path, "\"" + text + "\" is not in invariant-factor form; write \"" + g.to_string() + "\"");
  return g;
}

template <class J>
IntMatrix matrix_from_json(const J& j, const std::string& key, std::size_t rows, std::size_t cols) {
  const std::string path = "/" + key;
  if (!j.contains(key)) throw SchemaError(path, "missing matrix");
  const auto& v = j.at(key);
  if (!v.is_array()) throw SchemaError(path, "expected an array of rows");
  if (v.size() != rows) throw SchemaError(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = v.at(r);
    const std::string rp = path + "/" + std::to_string(r);
    if (!row.is_array()) throw SchemaError(rp, "expected an array of integers");
    if (row.size() != cols)
      throw SchemaError(rp, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = row.at(c);
      if (!e.is_number_integer()) throw SchemaError(rp + "/" + std::to_string(c), "expected an integer");
      m(r, c) = e.template get<std::int64_t>();
    }
  }
  return m;
}

template <class J>
Homomorphism hom_from_json(const J& j, const std::string& key, const FgAbGroup& from, const FgAbGroup& to) {
  IntMatrix m = matrix_from_json(j, key, to.num_factors(), from.num_factors());
  if (!validate_hom(from, to, m))
    throw SchemaError("/" + key, "not a homomorphism " + from.to_string() + " -> " + to.to_string());
  return Homomorphism(from, to, std::move(m));
}

}  // namespace detail

/// Reads {"h_top", "h_mid", "h_bot", "pi", "b", "i", "h"}. Groups are
/// invariant-factor expressions and matrices are given on the printed
/// generators: b is (h_bot (x) Z/2) x h_top, i is pi x (h_bot (x) Z/2), h is
/// h_mid x pi, each as an array of rows.
template <class J>
GammaSequence sequence_from_json(const J& j) {
  if (!j.is_object()) throw SchemaError("", "expected an object");
  GammaSequence s{detail::group_from_json(j, "h_top"), detail::group_from_json(j, "h_mid"),
                  detail::group_from_json(j, "h_bot"), detail::group_from_json(j, "pi"),
                  Homomorphism::zero(FgAbGroup(), FgAbGroup()), Homomorphism::zero(FgAbGroup(), FgAbGroup()),
                  Homomorphism::zero(FgAbGroup(), FgAbGroup())};
  const FgAbGroup t = s.tensor();
  s.b = detail::hom_from_json(j, "b", s.h_top, t);
  s.i = detail::hom_from_json(j, "i", t, s.pi);
  s.h = detail::hom_from_json(j, "h", s.pi, s.h_mid);
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "h_top" && key != "h_mid" && key != "h_bot" && key != "pi" && key != "b" && key != "i" && key != "h")
      throw SchemaError("/" + key, "unknown field");
  }
  return s;
}

inline GammaSequence sequence_from_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  return sequence_from_json(j);
}

inline Json invariants_json(const RingInvariants& inv) {
  Json j;
  j["order"] = inv.order;
  j["characteristic"] = inv.characteristic;
  j["commutative"] = inv.is_commutative;
  j["unit_count"] = inv.unit_count;
  j["idempotent_count"] = inv.idempotent_count;
  j["additive_invariant_factors"] = inv.additive_invariant_factors;
  return j;
}

inline Json validation_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid();
  j["degenerate"] = r.degenerate;
  j["signature_errors"] = r.signature_errors;
  Json issues = Json::array();
  for (auto i : r.issues) issues.push_back(to_string(i));
  j["issues"] = issues;
  return j;
}

inline Json bounds_json(const SearchBounds& b) {
  Json j;
  j["max_bot_order"] = b.max_bot_order;
  j["max_mid_order"] = b.max_mid_order;
  j["primes"] = b.primes;
  j["dedupe"] = b.dedupe;
  return j;
}

inline Json survey_json(const SurveyReport& r) {
  Json j;
  j["bounds"] = bounds_json(r.bounds);
  j["mode"] = r.bounds.dedupe ? "one sequence per isomorphism class" : "all extension classes";
  j["sequences_examined"] = r.sequences_examined;
  j["iso_classes"] = r.iso_classes ? Json(*r.iso_classes) : Json();
  Json hist = Json::array();
  for (const auto& [inv, n] : r.ring_fingerprint_histogram) {
    Json e;
    e["invariants"] = invariants_json(inv);
    e["count"] = n;
    hist.push_back(std::move(e));
  }
  j["ring_fingerprint_histogram"] = hist;
  Json hits = Json::array();
  for (const auto& h : r.fp3_hits) {
    Json e;
    e["p"] = h.p;
    e["sequence"] = h.record.descriptor();
    e["invariants"] = invariants_json(h.invariants);
    hits.push_back(std::move(e));
  }
  j["fp3_hits"] = hits;
  Json trivial = Json::array();
  for (const auto& t : r.trivial_aut_sequences) {
    Json e;
    e["sequence"] = t.record.descriptor();
    e["degenerate"] = t.degenerate;
    trivial.push_back(std::move(e));
  }
  j["trivial_aut_sequences"] = trivial;
  return j;
}

/// One line per fingerprint: order, characteristic, commutative, units,
/// idempotents, additive factors joined by ';', count.
inline std::string histogram_csv(const SurveyReport& r) {
  std::string out = "order,characteristic,commutative,unit_count,idempotent_count,additive_invariant_factors,count\n";
  for (const auto& [inv, n] : r.ring_fingerprint_histogram) {
    std::string add;
    for (auto d : inv.additive_invariant_factors) add += (add.empty() ? "" : ";") + std::to_string(d);
    out += std::to_string(inv.order) + "," + std::to_string(inv.characteristic) + "," +
           (inv.is_commutative ? "1" : "0") + "," + std::to_string(inv.unit_count) + "," +
           std::to_string(inv.idempotent_count) + "," + add + "," + std::to_string(n) + "\n";
  }
  return out;
}

inline Json fp2_json(const Fp2Report& r) {
  Json j;
  j["max_order"] = r.max_order;
  j["primes"] = r.primes;
  j["groups_checked"] = r.groups_checked;
  j["rings_materialized"] = r.rings_materialized;
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Json e;
    e["group"] = h.group.to_string();
    e["p"] = h.p;
    hits.push_back(std::move(e));
  }
  j["hits"] = hits;
  return j;
}

}  // namespace gammaseq
