#include "cwe/report.hpp"

#include <sstream>

#include "json.hpp"

namespace cwe {

std::string method_name(ComputeMethod m) {
  switch (m) {
    case ComputeMethod::Brute: return "brute";
    case ComputeMethod::Formula: return "formula";
    default: return "both";
  }
}

ComputeMethod method_from_name(const std::string& name) {
  if (name == "brute") return ComputeMethod::Brute;
  if (name == "formula") return ComputeMethod::Formula;
  if (name == "both") return ComputeMethod::Both;
  throw ParameterError("unknown method '" + name + "'");
}

RunReport build_report(const FieldContext& ctx, const CodeSpec& spec,
                       const CompleteWeightEnumerator& cwe, ComputeMethod method,
                       std::optional<bool> match, std::int64_t elapsed_ms) {
  RunReport r;
  r.p = spec.p;
  r.m = spec.m;
  r.d = spec.d;
  r.variant = spec.variant;
  r.length = cwe.length();
  r.dimension = cwe.measured_dimension(spec.p);
  r.method = method;
  for (const auto& [c, mult] : cwe.terms()) r.cwe.emplace_back(c.counts, mult);
  for (const auto& [w, count] : weight_distribution(cwe).entries)
    r.weight_distribution.emplace_back(w, count);
  r.match = match;
  r.elapsed_ms = elapsed_ms;
  r.modulus = ctx.modulus();
  return r;
}

std::string render_cwe_monomials(
    const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>& terms) {
  std::ostringstream out;
  bool first_term = true;
  for (const auto& [comp, mult] : terms) {
    if (!first_term) out << " + ";
    first_term = false;
    std::ostringstream mono;
    bool empty = true;
    for (size_t j = 0; j < comp.size(); ++j) {
      if (comp[j] == 0) continue;
      if (!empty) mono << ' ';
      empty = false;
      mono << 'w' << j;
      if (comp[j] != 1) mono << '^' << comp[j];
    }
    if (mult != 1) {
      out << mult;
      if (!empty) out << ' ' << mono.str();
    } else {
      out << (empty ? "1" : mono.str());
    }
  }
  return out.str();
}

std::string render_weight_enumerator(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& wd) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, count] : wd) {
    if (!first) out << " + ";
    first = false;
    if (w == 0) {
      out << count;
    } else if (count == 1) {
      out << "z^" << w;
    } else {
      out << count << " z^" << w;
    }
  }
  return out.str();
}

std::string render_text(const RunReport& r) {
  std::ostringstream out;
  out << "code " << variant_name(r.variant) << "  p=" << r.p << " m=" << r.m << " d=" << r.d
      << "\n";
  out << "length " << r.length << "\n";
  out << "dimension " << r.dimension << "\n";
  out << "method " << method_name(r.method) << "\n";
  if (r.match.has_value()) out << "match " << (*r.match ? "OK" : "MISMATCH") << "\n";
  out << "cwe: " << render_cwe_monomials(r.cwe) << "\n";
  out << "weight enumerator: " << render_weight_enumerator(r.weight_distribution) << "\n";
  out << "weights:\n";
  for (const auto& [w, count] : r.weight_distribution)
    out << "  " << w << ": " << count << "\n";
  out << "meta: modulus=[";
  for (size_t i = 0; i < r.modulus.size(); ++i) out << (i ? "," : "") << r.modulus[i];
  out << "] elapsed_ms=" << r.elapsed_ms << "\n";
  return out.str();
}

std::string render_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["m"] = r.m;
  j["d"] = r.d;
  j["code"] = variant_name(r.variant);
  j["length"] = r.length;
  j["dimension"] = r.dimension;
  j["method"] = method_name(r.method);
  auto& terms = j["cwe"] = nlohmann::ordered_json::array();
  for (const auto& [comp, mult] : r.cwe)
    terms.push_back({{"composition", comp}, {"multiplicity", mult}});
  auto& wd = j["weight_distribution"] = nlohmann::ordered_json::array();
  for (const auto& [w, count] : r.weight_distribution)
    wd.push_back({{"weight", w}, {"count", count}});
  if (r.match.has_value())
    j["match"] = *r.match;
  else
    j["match"] = nullptr;
  j["meta"] = {{"elapsed_ms", r.elapsed_ms}, {"modulus", r.modulus}};
  return j.dump(2) + "\n";
}

RunReport parse_report_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RunReport r;
  r.p = j.at("p").get<std::int64_t>();
  r.m = j.at("m").get<int>();
  r.d = j.at("d").get<std::int64_t>();
  const std::string code = j.at("code").get<std::string>();
  if (code == "C_D")
    r.variant = CodeVariant::CD;
  else if (code == "C_Db")
    r.variant = CodeVariant::CDb;
  else
    throw ParameterError("unknown code variant '" + code + "'");
  r.length = j.at("length").get<std::int64_t>();
  r.dimension = j.at("dimension").get<int>();
  r.method = method_from_name(j.at("method").get<std::string>());
  for (const auto& t : j.at("cwe"))
    r.cwe.emplace_back(t.at("composition").get<std::vector<std::int64_t>>(),
                       t.at("multiplicity").get<std::int64_t>());
  for (const auto& t : j.at("weight_distribution"))
    r.weight_distribution.emplace_back(t.at("weight").get<std::int64_t>(),
                                       t.at("count").get<std::int64_t>());
  if (j.at("match").is_null())
    r.match = std::nullopt;
  else
    r.match = j.at("match").get<bool>();
  r.elapsed_ms = j.at("meta").at("elapsed_ms").get<std::int64_t>();
  r.modulus = j.at("meta").at("modulus").get<std::vector<std::int32_t>>();
  return r;
}

std::string render_latex(const RunReport& r) {
  std::ostringstream out;
  out << "% " << variant_name(r.variant) << " p=" << r.p << " m=" << r.m << " d=" << r.d
      << " length=" << r.length << " dimension=" << r.dimension << "\n";
  out << "\\[\n\\mathrm{CWE} = ";
  bool first = true;
  for (const auto& [comp, mult] : r.cwe) {
    if (!first) out << " + ";
    first = false;
    if (mult != 1) out << mult;
    bool empty = true;
    for (size_t j = 0; j < comp.size(); ++j) {
      if (comp[j] == 0) continue;
      empty = false;
      out << "w_{" << j << "}^{" << comp[j] << "}";
    }
    if (mult == 1 && empty) out << "1";
  }
  out << "\n\\]\n\\[\nW(z) = ";
  first = true;
  for (const auto& [w, count] : r.weight_distribution) {
    if (!first) out << " + ";
    first = false;
    if (w == 0) {
      out << count;
    } else {
      if (count != 1) out << count;
      out << "z^{" << w << "}";
    }
  }
  out << "\n\\]\n";
  return out.str();
}

std::string render_term_diff(const CompleteWeightEnumerator& brute,
                             const CompleteWeightEnumerator& formula) {
  std::ostringstream out;
  auto comp_str = [](const CompositionVector& c) {
    std::ostringstream s;
    s << '(';
    for (size_t i = 0; i < c.counts.size(); ++i) s << (i ? "," : "") << c.counts[i];
    s << ')';
    return s.str();
  };
  if (brute.length() != formula.length())
    out << "length: brute=" << brute.length() << " formula=" << formula.length() << "\n";
  auto bi = brute.terms().begin();
  auto fi = formula.terms().begin();
  CompleteWeightEnumerator::DescendingLex before;
  while (bi != brute.terms().end() || fi != formula.terms().end()) {
    if (fi == formula.terms().end() ||
        (bi != brute.terms().end() && before(bi->first, fi->first))) {
      out << comp_str(bi->first) << ": brute=" << bi->second << " formula=absent\n";
      ++bi;
    } else if (bi == brute.terms().end() || before(fi->first, bi->first)) {
      out << comp_str(fi->first) << ": brute=absent formula=" << fi->second << "\n";
      ++fi;
    } else {
      if (bi->second != fi->second)
        out << comp_str(bi->first) << ": brute=" << bi->second << " formula=" << fi->second
            << "\n";
      ++bi;
      ++fi;
    }
  }
  return out.str();
}

std::string render_table_text(const WeightDistribution& wd) {
  std::ostringstream out;
  out << "Weight  Multiplicity\n";
  for (const auto& [w, count] : wd.entries) out << w << "  " << count << "\n";
  return out.str();
}

std::string render_table_csv(const WeightDistribution& wd) {
  std::ostringstream out;
  out << "weight,count";
  for (const auto& [w, count] : wd.entries) out << "\n" << w << "," << count;
  return out.str();
}

std::string render_table_latex(const WeightDistribution& wd) {
  std::ostringstream out;
  out << "\\begin{tabular}{|l|l|}\n\\hline\nWeight $i$ & Multiplicity $A_i$ \\\\\n\\hline\n";
  for (const auto& [w, count] : wd.entries) out << w << " & " << count << " \\\\\n\\hline\n";
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace cwe
