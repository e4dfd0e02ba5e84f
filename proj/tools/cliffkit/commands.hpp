#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffkit/cliffkit.hpp"

namespace cliffkit::cli {

enum class OutputFormat { csv, json };

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr int kDefaultSamples = 1000;
// Random Theorem 1 samples per signature above n = 8, where one sandwich
// sum costs 4^n blade products.
inline constexpr int kLargeNSamples = 16;
inline constexpr int kMaxTableN = 6;

struct RunConfig {
  std::optional<Signature> signature;
  int max_n = 8;
  std::vector<int> degrees = {4, 8, 16, 32, 64};
  std::string target = "clifford-exp";
  std::string out_path; // empty: stdout
  std::optional<OutputFormat> format;
  std::uint64_t seed = kDefaultSeed;
  int samples = kDefaultSamples;
};

// Thrown for configurations that are invalid before any work starts.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <typename Writer> void emit(const std::string &path, std::ostream &fallback, Writer write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw std::runtime_error("cannot open output file '" + path + "'");
  write(file);
  if (!file)
    throw std::runtime_error("failed writing '" + path + "'");
}

} // namespace detail

// Identity sweeps. Returns 0 iff every check passes.
inline int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &log) {
  std::vector<Signature> sigs;
  int lemma_n = cfg.max_n;
  if (cfg.signature) {
    sigs = {*cfg.signature};
    lemma_n = cfg.signature->n();
  } else {
    if (cfg.max_n < 1 || cfg.max_n > kMaxN)
      throw UsageError("--max-n must be in [1, " + std::to_string(kMaxN) + "]");
    sigs = signatures_up_to(cfg.max_n);
  }
  if (cfg.samples < 1)
    throw UsageError("--samples must be positive");

  std::vector<Signature> small;
  std::vector<Signature> large;
  for (const auto &s : sigs)
    (s.n() <= 8 ? small : large).push_back(s);

  std::vector<IdentityReport> reports = lemma1_reports(lemma_n);
  auto append = [&reports](std::vector<IdentityReport> more) {
    std::move(more.begin(), more.end(), std::back_inserter(reports));
  };
  append(lemma2_reports(lemma_n));
  append(lemma3_reports(sigs));
  append(lemma4_reports(sigs));
  append(theorem1_reports(small, cfg.samples, cfg.seed));
  append(theorem1_reports(large, std::min(cfg.samples, kLargeNSamples), cfg.seed));
  append(remark_reports(sigs, cfg.samples, cfg.seed));

  std::size_t failures = 0;
  for (const auto &r : reports)
    failures += r.pass ? 0 : 1;

  const OutputFormat fmt = cfg.format.value_or(OutputFormat::json);
  detail::emit(cfg.out_path, out, [&](std::ostream &os) {
    if (fmt == OutputFormat::json)
      write_reports_json(os, reports);
    else
      write_reports_csv(os, reports);
  });
  log << reports.size() << " checks, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

// Degree sweep for a built-in target.
inline int cmd_approx(const RunConfig &cfg, std::ostream &out, std::ostream &log) {
  const approx::TargetInfo *info = nullptr;
  try {
    info = &approx::target_info(cfg.target);
  } catch (const std::invalid_argument &e) {
    std::string names;
    for (const auto &t : approx::targets())
      names += (names.empty() ? "" : ", ") + t.name;
    throw UsageError(std::string(e.what()) + " (known: " + names + ")");
  }
  if (cfg.degrees.empty())
    throw UsageError("--degrees must not be empty");
  for (const int m : cfg.degrees)
    if (m < 1)
      throw UsageError("degrees must be at least 1");

  const Signature sig = cfg.signature.value_or(info->default_signature);
  if (sig.n() < info->min_n)
    throw UsageError("target '" + info->name + "' needs n >= " + std::to_string(info->min_n));
  const auto f = approx::make_target(info->name, sig);

  std::vector<approx::ApproxResult> results;
  for (const int m : cfg.degrees) {
    results.push_back(approx::approximate(f, m));
    log << info->name << " [" << to_string(sig) << "] degree " << m
        << ": combined sup error " << results.back().combined_error << '\n';
  }
  const auto rows = approx_rows(info->name, sig, results);
  const OutputFormat fmt = cfg.format.value_or(OutputFormat::csv);
  detail::emit(cfg.out_path, out, [&](std::ostream &os) {
    if (fmt == OutputFormat::csv)
      write_approx_csv(os, rows);
    else
      write_approx_json(os, rows);
  });
  return 0;
}

// Cayley table of blade_product in canonical blade order.
inline std::string cayley_table(const Signature &sig) {
  if (sig.n() > kMaxTableN)
    throw UsageError("table display needs n <= " + std::to_string(kMaxTableN));
  const std::uint32_t count = static_cast<std::uint32_t>(sig.blade_count());
  std::size_t width = 0;
  for (std::uint32_t i = 0; i < count; ++i)
    width = std::max(width, blade_name(BladeMask(i)).size() + 1);
  width += 1;

  std::ostringstream os;
  os << std::setw(static_cast<int>(width)) << "";
  for (std::uint32_t b = 0; b < count; ++b)
    os << std::setw(static_cast<int>(width)) << blade_name(BladeMask(b));
  os << '\n';
  for (std::uint32_t a = 0; a < count; ++a) {
    os << std::setw(static_cast<int>(width)) << blade_name(BladeMask(a));
    for (std::uint32_t b = 0; b < count; ++b) {
      const SignedBlade sb = blade_product(sig, BladeMask(a), BladeMask(b));
      os << std::setw(static_cast<int>(width))
         << std::string(sb.sign > 0 ? "+" : "-") + blade_name(sb.blade);
    }
    os << '\n';
  }
  return os.str();
}

inline int cmd_table(const RunConfig &cfg, std::ostream &out, std::ostream &) {
  if (!cfg.signature)
    throw UsageError("table needs --signature p,q");
  const std::string table = cayley_table(*cfg.signature);
  detail::emit(cfg.out_path, out, [&](std::ostream &os) {
    os << "R_{" << cfg.signature->p() << "," << cfg.signature->q() << "}\n" << table;
  });
  return 0;
}

} // namespace cliffkit::cli
