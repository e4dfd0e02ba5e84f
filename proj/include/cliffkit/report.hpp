#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliffkit/approx.hpp"
#include "cliffkit/identities.hpp"
#include "cliffkit/text_format.hpp"

namespace cliffkit {

inline nlohmann::json to_json(const ReportValue &v) {
  return std::visit([](const auto &x) { return nlohmann::json(x); }, v);
}

inline std::string to_text(const ReportValue &v) {
  return std::visit(
      [](const auto &x) -> std::string {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, std::string>)
          return x;
        else if constexpr (std::is_same_v<X, double>)
          return detail::format_number(x);
        else
          return std::to_string(x);
      },
      v);
}

// {identity, params, computed, expected, pass}
inline nlohmann::json to_json(const IdentityReport &r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto &[key, value] : r.params)
    params[key] = value;
  return {{"identity", r.identity},
          {"params", params},
          {"computed", to_json(r.computed)},
          {"expected", to_json(r.expected)},
          {"pass", r.pass}};
}

inline void write_reports_json(std::ostream &os, const std::vector<IdentityReport> &reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &r : reports)
    arr.push_back(to_json(r));
  os << arr.dump(2) << '\n';
}

namespace detail {
inline std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}
} // namespace detail

// identity,params,computed,expected,pass with params as "key=value;..."
inline void write_reports_csv(std::ostream &os, const std::vector<IdentityReport> &reports) {
  os << "identity,params,computed,expected,pass\n";
  for (const auto &r : reports) {
    std::string params;
    for (const auto &[key, value] : r.params)
      params += (params.empty() ? "" : ";") + key + "=" + std::to_string(value);
    os << detail::csv_field(r.identity) << ',' << detail::csv_field(params) << ','
       << detail::csv_field(to_text(r.computed)) << ',' << detail::csv_field(to_text(r.expected))
       << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

// One row of the approximation table. component_mask is empty for the
// combined row of a degree.
struct ApproxRow {
  std::string target;
  Signature signature;
  int degree;
  std::optional<BladeMask> component_mask;
  double sup_error;
};

inline std::vector<ApproxRow> approx_rows(const std::string &target, const Signature &sig,
                                          const std::vector<approx::ApproxResult> &results) {
  std::vector<ApproxRow> rows;
  for (const auto &r : results) {
    for (const auto &c : r.component_errors)
      rows.push_back({target, sig, r.degree, c.mask, c.sup_error});
    rows.push_back({target, sig, r.degree, std::nullopt, r.combined_error});
  }
  return rows;
}

// target,signature,degree,component_mask,sup_error; the combined row per
// degree has component_mask "combined".
inline void write_approx_csv(std::ostream &os, const std::vector<ApproxRow> &rows) {
  os << "target,signature,degree,component_mask,sup_error\n";
  for (const auto &r : rows)
    os << detail::csv_field(r.target) << ',' << detail::csv_field(to_string(r.signature)) << ','
       << r.degree << ',' << (r.component_mask ? std::to_string(r.component_mask->bits) : "combined")
       << ',' << detail::format_number(r.sup_error) << '\n';
}

inline void write_approx_json(std::ostream &os, const std::vector<ApproxRow> &rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &r : rows) {
    nlohmann::json row = {{"target", r.target},
                          {"signature", to_string(r.signature)},
                          {"degree", r.degree},
                          {"sup_error", r.sup_error}};
    if (r.component_mask)
      row["component_mask"] = r.component_mask->bits;
    else
      row["component_mask"] = "combined";
    arr.push_back(row);
  }
  os << arr.dump(2) << '\n';
}

} // namespace cliffkit
