#include "wreg/document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wreg {

// ---------------------------------------------------------------------------
// polynomial grammar
// ---------------------------------------------------------------------------

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;
  int nvars;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  unsigned long long parse_nat(const char* what) {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(std::string("expected ") + what);
    unsigned long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long long>(peek() - '0');
      if (v > (1ull << 62)) fail("number too large");
      ++pos;
    }
    return v;
  }

  // factor := "x" index ["^" nat]
  void parse_factor(Exponents& e) {
    if (peek() != 'x') fail("expected a factor 'x<index>'");
    ++pos;
    unsigned long long idx = parse_nat("variable index after 'x'");
    if (idx >= static_cast<unsigned long long>(nvars))
      fail("variable index " + std::to_string(idx) + " out of range (have " +
           std::to_string(nvars) + " variables)");
    long long exp = 1;
    if (peek() == '^') {
      ++pos;
      exp = static_cast<long long>(parse_nat("exponent after '^'"));
    }
    e[idx] += exp;
  }

  // term := [sign] [rational "*"] factor ("*" factor)*
  void parse_term(WeightedPoly& out) {
    Rat coeff = 1;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') coeff = -1;
      ++pos;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Int num(static_cast<unsigned long>(parse_nat("numerator")));
      Int den = 1;
      if (peek() == '/') {
        ++pos;
        den = Int(static_cast<unsigned long>(parse_nat("denominator after '/'")));
        if (den == 0) fail("zero denominator");
      }
      coeff *= Rat(num, den);
      coeff.canonicalize();
      if (peek() != '*') fail("expected '*' after the coefficient");
      ++pos;
    }
    Exponents e(nvars, 0);
    parse_factor(e);
    while (peek() == '*') {
      ++pos;
      parse_factor(e);
    }
    out += WeightedPoly::monomial(std::move(e), coeff);
  }

  WeightedPoly parse() {
    if (s == "0") return WeightedPoly::zero();
    WeightedPoly out;
    parse_term(out);
    while (!done()) {
      if (peek() != '+') fail("expected '+' between terms");
      ++pos;
      parse_term(out);
    }
    return out;
  }
};

}  // namespace

WeightedPoly parse_poly(const std::string& text, int nvars) {
  PolyParser p{text, 0, nvars};
  return p.parse();
}

std::string poly_to_string(const WeightedPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    if (!first) os << '+';
    first = false;
    bool negative = c < 0;
    Rat mag = negative ? Rat(-c) : c;
    if (negative) os << '-';
    bool any_factor = std::any_of(e.begin(), e.end(), [](long long x) { return x > 0; });
    if (mag != 1 || !any_factor) {
      os << to_string(mag) << '*';
      if (!any_factor) {
        os << "x0^0";
        continue;
      }
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << 'x' << i;
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// documents
// ---------------------------------------------------------------------------

namespace {

void require_keys(const Json& j, std::initializer_list<const char*> keys,
                  const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys)
      if (it.key() == k) known = true;
    if (!known) throw DocumentError("unknown key \"" + it.key() + "\" in " + where);
  }
  for (const char* k : keys)
    if (!j.contains(k)) throw DocumentError("missing key \"" + std::string(k) + "\" in " + where);
}

std::vector<long long> int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + " must be an array of integers");
  std::vector<long long> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw DocumentError(where + " must contain integers only");
    out.push_back(v.get<long long>());
  }
  return out;
}

std::vector<std::vector<WeightedPoly>> poly_matrix(const Json& j, int nvars,
                                                   const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + " must be an array of rows");
  std::vector<std::vector<WeightedPoly>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw DocumentError(where + " rows must be arrays of strings");
    std::vector<WeightedPoly> r;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw DocumentError(where + " entries must be polynomial strings");
      r.push_back(parse_poly(cell.get<std::string>(), nvars));
    }
    out.push_back(std::move(r));
  }
  return out;
}

SheafExpr parse_expr(const Json& j, const Weights& w) {
  if (!j.is_object()) throw DocumentError("sheaf expression must be an object");
  if (!j.contains("type") || !j["type"].is_string())
    throw DocumentError("sheaf expression needs a \"type\" string");
  std::string type = j["type"].get<std::string>();
  if (type == "split") {
    require_keys(j, {"type", "twists"}, "split expression");
    return SheafExpr::split(w, int_array(j["twists"], "\"twists\""));
  }
  if (type == "monad") {
    require_keys(j, {"type", "A", "B", "C", "alpha", "beta"}, "monad expression");
    SplitBundle a{int_array(j["A"], "\"A\"")};
    SplitBundle b{int_array(j["B"], "\"B\"")};
    SplitBundle c{int_array(j["C"], "\"C\"")};
    Monad m = make_monad(w, a, b, c, poly_matrix(j["alpha"], w.vars(), "\"alpha\""),
                         poly_matrix(j["beta"], w.vars(), "\"beta\""));
    return SheafExpr::monad(std::move(m));
  }
  if (type == "twist") {
    require_keys(j, {"type", "of", "by"}, "twist expression");
    if (!j["by"].is_number_integer()) throw DocumentError("\"by\" must be an integer");
    return parse_expr(j["of"], w).twisted(j["by"].get<long long>());
  }
  if (type == "sum") {
    require_keys(j, {"type", "of"}, "sum expression");
    if (!j["of"].is_array()) throw DocumentError("\"of\" must be an array");
    std::vector<SheafExpr> parts;
    for (const auto& part : j["of"]) parts.push_back(parse_expr(part, w));
    if (parts.empty()) return SheafExpr::split(w, {});
    return SheafExpr::sum(std::move(parts));
  }
  throw DocumentError("unknown expression type \"" + type + "\"");
}

Json twists_json(const std::vector<long long>& v) {
  Json out = Json::array();
  for (long long d : v) out.push_back(d);
  return out;
}

Json matrix_json(const GradedMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entry) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(poly_to_string(p));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json monad_json(const Monad& m) {
  Json out;
  out["type"] = "monad";
  out["A"] = twists_json(m.a.twists);
  out["B"] = twists_json(m.b.twists);
  out["C"] = twists_json(m.c.twists);
  out["alpha"] = matrix_json(m.alpha);
  out["beta"] = matrix_json(m.beta);
  return out;
}

}  // namespace

SheafExpr parse_document(const Json& doc) {
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  require_keys(doc, {"weights", "sheaf"}, "document");
  Weights w = weight_data(int_array(doc["weights"], "\"weights\""));
  return parse_expr(doc["sheaf"], w);
}

SheafExpr parse_document_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw DocumentError(std::string("invalid JSON: ") + err.what());
  }
  return parse_document(doc);
}

Json serialize_document(const SheafExpr& e) {
  std::vector<Json> parts;
  if (!e.split_twists().empty()) {
    Json split;
    split["type"] = "split";
    split["twists"] = twists_json(e.split_twists());
    parts.push_back(std::move(split));
  }
  for (const auto& leaf : e.monad_leaves()) {
    Json node = monad_json(*leaf.monad);
    if (leaf.shift != 0) {
      Json tw;
      tw["type"] = "twist";
      tw["of"] = std::move(node);
      tw["by"] = leaf.shift;
      node = std::move(tw);
    }
    parts.push_back(std::move(node));
  }

  Json sheaf;
  if (parts.empty()) {
    sheaf["type"] = "split";
    sheaf["twists"] = Json::array();
  } else if (parts.size() == 1) {
    sheaf = std::move(parts.front());
  } else {
    sheaf["type"] = "sum";
    sheaf["of"] = Json::array();
    for (auto& p : parts) sheaf["of"].push_back(std::move(p));
  }

  Json doc;
  doc["weights"] = twists_json(e.weights().w);
  doc["sheaf"] = std::move(sheaf);
  return doc;
}

// ---------------------------------------------------------------------------
// result serialization
// ---------------------------------------------------------------------------

Json to_json(const Int& v) {
  if (fits_i64(v)) return to_i64(v);
  return v.get_str();
}

Json to_json(const CohomologyTable& t) {
  Json out;
  out["weights"] = twists_json(t.w.w);
  out["t_min"] = t.t_min;
  out["t_max"] = t.t_max;
  out["rows"] = Json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Json row;
    row["t"] = t.t_min + static_cast<long long>(r);
    row["h"] = Json::array();
    for (const Int& v : t.rows[r]) row["h"].push_back(to_json(v));
    out["rows"].push_back(std::move(row));
  }
  out["certification"] = t.certification;
  return out;
}

std::string to_csv(const CohomologyTable& t) {
  std::ostringstream os;
  os << "t";
  for (int i = 0; i <= t.w.dim(); ++i) os << ",h" << i;
  os << "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (t.t_min + static_cast<long long>(r));
    for (const Int& v : t.rows[r]) os << ',' << to_string(v);
    os << "\n";
  }
  return os.str();
}

Json to_json(const RegularityReport& r) {
  Json out;
  out["kind"] = r.kind;
  out["m"] = r.m;
  out["verdict"] = r.verdict;
  out["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) {
    Json j;
    j["i"] = w.i;
    j["twist"] = w.twist;
    j["value"] = to_json(w.value);
    out["witnesses"].push_back(std::move(j));
  }
  out["windows"] = Json::array();
  for (const auto& c : r.windows) {
    Json j;
    j["i"] = c.i;
    j["kind"] = c.kind;
    j["from"] = c.from;
    if (c.width > 0) j["width"] = c.width;
    out["windows"].push_back(std::move(j));
  }
  if (r.h0_value) out["h0_at_twist"] = to_json(*r.h0_value);
  return out;
}

Json to_json(const MonadValidity& v) {
  Json out;
  out["composition_zero"] = v.composition_zero;
  out["alpha_injective"] = to_string(v.alpha_injective);
  out["beta_surjective"] = to_string(v.beta_surjective);
  out["pointwise_bundle"] = to_string(v.pointwise_bundle);
  out["minimal"] = v.minimal;
  if (v.beta_surjective == Cert::proven && v.beta_window_width > 0) {
    out["beta_stable_from"] = v.beta_stable_from;
    out["beta_window_width"] = v.beta_window_width;
  }
  return out;
}

Json to_json(const PullbackRegReport& r) {
  Json out;
  out["bound"] = r.bound;
  out["actual"] = r.actual;
  out["holds"] = r.holds;
  return out;
}

Json to_json(const RestrictReport& r) {
  Json out;
  out["z"] = r.z;
  out["k_sub"] = r.k_sub;
  out["target_m"] = r.target_m;
  out["verdict"] = r.verdict;
  out["report"] = to_json(r.details);
  return out;
}

Json to_json(const MonadBoundReport& r) {
  Json out;
  out["rhs"] = r.rhs;
  out["m"] = r.m;
  out["wregular"] = r.wreg_check.verdict;
  out["report"] = to_json(r.wreg_check);
  return out;
}

Json to_json(const GgCertificate& c) {
  Json out;
  out["verdict"] = c.verdict;
  out["criterion"] = "per-chart divisibility of residue-compatible monomials";
  if (!c.verdict) {
    out["witness_chart"] = c.witness_chart;
    out["witness_summand"] = c.witness_summand;
    out["witness_monomial"] = twists_json(c.witness_monomial);
  }
  return out;
}

Json to_json(const HorrocksShape& s) {
  Json out;
  out["C"] = twists_json(s.c_twists);
  out["A"] = twists_json(s.a_twists);
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out;
  out["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["source"] = c.source;
    j["expected"] = c.expected;
    j["engine"] = c.engine;
    j["agreement"] = c.agreement;
    out["checks"].push_back(std::move(j));
  }
  out["total"] = r.checks.size();
  out["mismatches"] = r.mismatches();
  out["paper_inconsistent"] = r.paper_inconsistencies();
  return out;
}

VerificationReport verification_report_from_json(const Json& j) {
  VerificationReport r;
  for (const auto& c : j.at("checks")) {
    VerifyCheck v;
    v.name = c.at("name").get<std::string>();
    v.source = c.at("source").get<std::string>();
    v.expected = c.at("expected").get<std::string>();
    v.engine = c.at("engine").get<std::string>();
    v.agreement = c.at("agreement").get<std::string>();
    r.checks.push_back(std::move(v));
  }
  return r;
}

}  // namespace wreg
