#pragma once

// The ulrichgr command line. run_cli() takes its streams as arguments so the
// tests can drive it in-process.
//
// Exit codes: 0 success / Ulrich, 1 not Ulrich or a failed check,
// 2 parse error, 3 invalid weight, 4 search too large.

#include "ugr/classification.hpp"
#include "ugr/cohomology.hpp"
#include "ugr/enumeration.hpp"
#include "ugr/io.hpp"
#include "ugr/irr.hpp"
#include "ugr/reproduce.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ugr {

enum ExitCode : int {
  exit_ok = 0,
  exit_negative = 1,
  exit_parse = 2,
  exit_invalid_weight = 3,
  exit_too_large = 4,
};

inline constexpr int json_schema_version = 1;

namespace cli {

using Json = nlohmann::ordered_json;

inline Json variety_json(const IsotropicGrassmannian& x) {
  Json j;
  j["family"] = std::string(1, family_letter(x.family()));
  j["n"] = x.rank();
  j["k"] = isotropic_dimension(x);
  if (x.component() == SpinorComponent::none) {
    j["component"] = nullptr;
  } else {
    j["component"] = component_name(x.component());
  }
  return j;
}

inline Json weight_json(const Weight& w) { return Json(w.doubled()); }

// Quoted so the commas inside a weight survive.
inline std::string csv_field(const std::string& s) { return "\"" + s + "\""; }

struct WeightRow {
  Weight lambda;
  BigInt rank;
  BigInt h0;
  std::string provenance;
};

inline WeightRow weight_row(const IsotropicGrassmannian& x, const Weight& w, std::string provenance) {
  const auto h = cohomology(x, w);
  const BigInt h0 = (!h.vanishes() && h.group->degree == 0) ? h.group->dim : BigInt(0);
  return {w, bundle_rank(x, w), h0, std::move(provenance)};
}

enum class Format { text, json, csv };

// Left-aligned columns, two spaces apart, sized to the widest cell.
inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << r[i];
      if (i + 1 < r.size()) out << std::string(width[i] + 2 - r[i].size(), ' ');
    }
    out << "\n";
  }
}

inline void print_weight_rows(std::ostream& out, const IsotropicGrassmannian& x,
                              const std::vector<WeightRow>& rows, Format fmt, Json extra = {}) {
  if (fmt == Format::json) {
    Json j;
    j["schema_version"] = json_schema_version;
    j["variety"] = variety_json(x);
    j["weights"] = Json::array();
    for (const auto& r : rows) {
      j["weights"].push_back({{"coords_doubled", weight_json(r.lambda)},
                              {"coords", format_weight(r.lambda)},
                              {"rank", r.rank.str()},
                              {"h0", r.h0.str()},
                              {"provenance", r.provenance}});
    }
    for (auto& [key, value] : extra.items()) j[key] = value;
    out << j.dump(2) << "\n";
    return;
  }
  if (fmt == Format::csv) {
    out << "variety";
    for (int i = 1; i <= x.rank(); ++i) out << ",lambda" << i;
    out << ",rank,h0,provenance\n";
    for (const auto& r : rows) {
      out << descriptor(x);
      for (int i = 0; i < x.rank(); ++i) out << "," << r.lambda[i].str();
      out << "," << r.rank.str() << "," << r.h0.str() << "," << r.provenance << "\n";
    }
    return;
  }
  out << variety_name(x) << "  [" << descriptor(x) << "]  dim " << dimension(x) << ", degree "
      << degree(x).str() << "\n";
  if (rows.empty()) {
    out << "no irreducible equivariant Ulrich bundles\n";
    return;
  }
  std::vector<std::vector<std::string>> table{{"lambda", "rank", "h0", "provenance"}};
  for (const auto& r : rows) {
    table.push_back({format_weight(r.lambda), r.rank.str(), r.h0.str(), r.provenance});
  }
  print_table(out, table);
}

struct Args {
  std::string variety;
  std::string weight;
  std::string twists = "0..0";
  bool json = false;
  bool csv = false;
  bool verify = false;
  bool force = false;
  bool published = false;
  bool closed = false;
  bool inject_printed_b = false;
  unsigned threads = 1;

  Format format() const { return json ? Format::json : csv ? Format::csv : Format::text; }
};

inline int cmd_cohomology(const Args& a, std::ostream& out) {
  const auto x = parse_variety(a.variety);
  const Weight lambda = parse_weight(a.weight, x);
  require_L_dominant(x, lambda);
  const auto [lo, hi] = parse_range(a.twists);
  const Weight omega = x.omega();
  Json rows = Json::array();
  if (a.format() == Format::csv) out << "t,degree,highest_weight,dim\n";
  std::vector<std::vector<std::string>> table{{"t", "degree", "highest_weight", "dim"}};
  for (std::int64_t t = lo; t <= hi; ++t) {
    const Weight mu = lambda + omega.scaled(t);
    const auto h = cohomology(x, mu);
    Json row{{"t", t}};
    if (h.vanishes()) {
      row["vanishes"] = true;
      row["degree"] = nullptr;
      row["highest_weight"] = nullptr;
      row["dim"] = "0";
    } else {
      row["vanishes"] = false;
      row["degree"] = h.group->degree;
      row["highest_weight"] = weight_json(h.group->highest_weight);
      row["dim"] = h.group->dim.str();
    }
    switch (a.format()) {
      case Format::json: rows.push_back(row); break;
      case Format::csv:
        if (h.vanishes()) {
          out << t << ",,,0\n";
        } else {
          out << t << "," << h.group->degree << ","
              << csv_field(format_weight(h.group->highest_weight)) << "," << h.group->dim.str()
              << "\n";
        }
        break;
      case Format::text:
        if (h.vanishes()) {
          table.push_back({std::to_string(t), "-", "-", "0"});
        } else {
          table.push_back({std::to_string(t), std::to_string(h.group->degree),
                           format_weight(h.group->highest_weight), h.group->dim.str()});
        }
        break;
    }
  }
  if (a.format() == Format::json) {
    Json j;
    j["schema_version"] = json_schema_version;
    j["variety"] = variety_json(x);
    j["weight"] = weight_json(lambda);
    j["twists"] = rows;
    out << j.dump(2) << "\n";
  } else if (a.format() == Format::text) {
    out << variety_name(x) << "  lambda = " << format_weight(lambda) << "\n";
    print_table(out, table);
  }
  return exit_ok;
}

// Shared by irr and is-ulrich; returns the verdict.
inline bool print_certificate(const Args& a, std::ostream& out, bool closed) {
  const auto x = parse_variety(a.variety);
  const Weight lambda = parse_weight(a.weight, x);
  require_L_dominant(x, lambda);
  const auto cert = closed ? irr_closed(x, lambda) : irr_generic(x, lambda);
  if (a.format() == Format::json) {
    Json j;
    j["schema_version"] = json_schema_version;
    j["variety"] = variety_json(x);
    j["weight"] = weight_json(lambda);
    j["d"] = cert.d;
    j["method"] = closed ? "closed" : "generic";
    j["irr_values"] = cert.irr_values;
    j["contributions"] = Json::array();
    for (const auto& c : cert.contributions) {
      j["contributions"].push_back({{"value", c.value}, {"source", c.source}});
    }
    j["is_ulrich"] = cert.is_ulrich;
    out << j.dump(2) << "\n";
    return cert.is_ulrich;
  }
  if (a.format() == Format::csv) {
    out << "value,source\n";
    for (const auto& c : cert.contributions) out << c.value << "," << c.source << "\n";
    return cert.is_ulrich;
  }
  out << variety_name(x) << "  lambda = " << format_weight(lambda) << "  d = " << cert.d << "\n";
  out << "Irr = {";
  for (std::size_t i = 0; i < cert.irr_values.size(); ++i) {
    out << (i ? ", " : "") << cert.irr_values[i];
  }
  out << "}\n";
  for (const auto& c : cert.contributions) out << "  " << c.value << " <- " << c.source << "\n";
  out << (cert.is_ulrich ? "Ulrich" : "not Ulrich") << "\n";
  return cert.is_ulrich;
}

inline int cmd_irr(const Args& a, std::ostream& out) {
  print_certificate(a, out, a.closed);
  return exit_ok;
}

inline int cmd_is_ulrich(const Args& a, std::ostream& out) {
  return print_certificate(a, out, false) ? exit_ok : exit_negative;
}

inline int cmd_classify(const Args& a, std::ostream& out) {
  const auto x = parse_variety(a.variety);
  const auto listed = classify(x, a.published ? Catalogue::published : Catalogue::complete);
  std::vector<WeightRow> rows;
  Json extra;
  bool match = true;
  if (a.verify) {
    const auto found = enumerate_ulrich(x, {a.force, a.threads});
    for (const auto& w : listed) {
      const bool both = std::find(found.begin(), found.end(), w) != found.end();
      match = match && both;
      rows.push_back(weight_row(x, w, both ? "both" : "closed-form"));
    }
    for (const auto& w : found) {
      if (std::find(listed.begin(), listed.end(), w) != listed.end()) continue;
      match = false;
      rows.push_back(weight_row(x, w, "enumerated"));
    }
    extra["verify"] = match ? "MATCH" : "MISMATCH";
  } else {
    for (const auto& w : listed) rows.push_back(weight_row(x, w, "closed-form"));
  }
  print_weight_rows(out, x, rows, a.format(), extra);
  if (a.verify && a.format() == Format::text) out << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? exit_ok : exit_negative;
}

inline int cmd_enumerate(const Args& a, std::ostream& out) {
  const auto x = parse_variety(a.variety);
  std::vector<WeightRow> rows;
  for (const auto& w : enumerate_ulrich(x, {a.force, a.threads})) {
    rows.push_back(weight_row(x, w, "enumerated"));
  }
  print_weight_rows(out, x, rows, a.format());
  return exit_ok;
}

inline int cmd_reproduce(const Args& a, std::ostream& out) {
  ReproduceOptions opt;
  opt.threads = a.threads;
  if (a.inject_printed_b) opt.dimension_formula = printed_b_dimension;
  if (a.format() != Format::json) {
    opt.on_result = [&out](const CriterionOutcome& r) {
      out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  ("
          << std::fixed << std::setprecision(2) << r.seconds << " s)";
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n" << std::flush;
    };
  }
  const auto results = run_reproduction(opt);
  const auto passed = std::count_if(results.begin(), results.end(),
                                    [](const CriterionOutcome& r) { return r.passed; });
  const bool all = passed == static_cast<std::ptrdiff_t>(results.size());
  if (a.format() == Format::json) {
    Json j;
    j["schema_version"] = json_schema_version;
    j["criteria"] = Json::array();
    for (const auto& r : results) {
      j["criteria"].push_back({{"id", r.id},
                               {"name", r.name},
                               {"passed", r.passed},
                               {"detail", r.detail},
                               {"seconds", r.seconds},
                               {"budget_seconds", r.budget_seconds}});
    }
    j["passed"] = passed;
    j["total"] = results.size();
    j["all_passed"] = all;
    out << j.dump(2) << "\n";
  } else {
    out << passed << "/" << results.size() << " criteria passed\n";
  }
  return all ? exit_ok : exit_negative;
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borel-Bott-Weil cohomology and Ulrich bundles on isotropic Grassmannians",
               "ulrichgr"};
  app.require_subcommand(1);
  cli::Args a;

  const auto add_variety = [&a](CLI::App* sub) {
    sub->add_option("variety", a.variety,
                    "C:n=4:k=2, IGr(2,8), LGr(2,4), OGr(3,10), OGr(4,8):minus or Q5")
        ->required();
  };
  const auto add_weight = [&a](CLI::App* sub) {
    sub->add_option("--weight,-w", a.weight, "coordinates (1/2,1/2,-1/2) or w:c1,...,cn")
        ->required()
        ->allow_extra_args(false);
  };
  const auto add_format = [&a](CLI::App* sub) {
    auto* json = sub->add_flag("--json", a.json, "JSON output");
    sub->add_flag("--csv", a.csv, "CSV output")->excludes(json);
  };
  const auto add_search = [&a](CLI::App* sub) {
    sub->add_flag("--force", a.force, "run the enumeration beyond the size guard");
    sub->add_option("--threads", a.threads, "worker threads for the enumeration")
        ->check(CLI::PositiveNumber);
  };

  auto* coh = app.add_subcommand("cohomology", "cohomology of U^(lambda + t omega_k) per twist t");
  add_variety(coh);
  add_weight(coh);
  coh->add_option("--twists", a.twists, "twist range a..b (default 0..0)");
  add_format(coh);

  auto* irr = app.add_subcommand("irr", "the Irr multiset with the root behind each value");
  add_variety(irr);
  add_weight(irr);
  irr->add_flag("--closed", a.closed, "use the closed alpha/beta form instead of the root scan");
  add_format(irr);

  auto* ulr = app.add_subcommand("is-ulrich", "decide the Ulrich property (exit 0 yes, 1 no)");
  add_variety(ulr);
  add_weight(ulr);
  add_format(ulr);

  auto* cls = app.add_subcommand("classify", "closed-form list of Ulrich weights");
  add_variety(cls);
  cls->add_flag("--verify", a.verify, "cross-check against the enumerator");
  cls->add_flag("--published", a.published,
                "report only the published lists, without the weights found by search");
  add_search(cls);
  add_format(cls);

  auto* enu = app.add_subcommand("enumerate", "exhaustive search for Ulrich weights");
  add_variety(enu);
  add_search(enu);
  add_format(enu);

  auto* rep = app.add_subcommand("reproduce", "run the full acceptance suite");
  rep->add_flag("--json", a.json, "JSON report");
  rep->add_option("--threads", a.threads, "worker threads for the enumerations")
      ->check(CLI::PositiveNumber);
  rep->add_flag("--inject-printed-b-dimension", a.inject_printed_b,
                "test hook: use the uncorrected type B dimension formula")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::CallForVersion& e) {
    out << "ulrichgr\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }

  try {
    if (*coh) return cli::cmd_cohomology(a, out);
    if (*irr) return cli::cmd_irr(a, out);
    if (*ulr) return cli::cmd_is_ulrich(a, out);
    if (*cls) return cli::cmd_classify(a, out);
    if (*enu) return cli::cmd_enumerate(a, out);
    if (*rep) return cli::cmd_reproduce(a, out);
  } catch (const SearchTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return exit_too_large;
  } catch (const InvalidWeight& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_weight;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_parse;
}

}  // namespace ugr
