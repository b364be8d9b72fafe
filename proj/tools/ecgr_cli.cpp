// Command-line driver: orbital structures, closures, product classification,
// the catalog census, and graph export, with JSON (default) or table output.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecgr/catalog.hpp"

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kMaxExtraListed = 100;

/// Split on commas that sit outside any parentheses.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(')
      ++depth;
    else if (c == ')')
      --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

bool looks_like_cycles(const std::string& spec) {
  for (char c : spec) {
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    return c == '(';
  }
  return false;
}

/// A spec is either a catalog name ("cyclic(3)") or a comma-separated list of
/// cycle-notation generators ("(0 1 2), (0 1)"), the latter needing a degree.
ecgr::PermGroup resolve_group(const std::string& spec, unsigned degree) {
  if (!looks_like_cycles(spec))
    return ecgr::make(spec).group;
  if (degree == 0)
    throw ecgr::ParseError("cycle-notation group specs need --degree");
  std::vector<ecgr::Permutation> gens;
  for (const std::string& part : split_top_level(spec))
    gens.push_back(ecgr::Permutation::parse_cycles(part, degree));
  return ecgr::generate(std::move(gens));
}

ecgr::Limits limits_from_environment() {
  ecgr::Limits limits;
  if (const char* text = std::getenv("ECGR_AUT_LIMIT")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(text, &end, 10);
    if (end == text || *end != '\0' || value == 0 || value > 4096)
      throw ecgr::ParseError("ECGR_AUT_LIMIT must be a positive vertex count");
    limits.max_aut_vertices = static_cast<unsigned>(value);
  }
  return limits;
}

std::string pair_text(const ecgr::PointPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

// --- orbitals ---------------------------------------------------------------

void print_orbitals(const ecgr::OrbitalStructure& s, bool pretty) {
  if (pretty) {
    std::cout << "degree " << s.degree << ", " << s.or_orbitals.size()
              << " orbital(s) on ordered pairs, " << s.nor_orbitals.size()
              << " on unordered pairs\n";
    for (unsigned i = 0; i < s.or_orbitals.size(); ++i) {
      std::cout << "O" << i << " -> O" << s.pairing[i]
                << (s.is_self_paired(i) ? " (self-paired)" : "") << " size "
                << s.or_orbitals[i].size() << ":";
      for (const auto& p : s.or_orbitals[i])
        std::cout << " " << pair_text(p);
      std::cout << "\n";
    }
    for (unsigned i = 0; i < s.nor_orbitals.size(); ++i) {
      std::cout << "N" << i << " size " << s.nor_orbitals[i].size() << ":";
      for (const auto& p : s.nor_orbitals[i])
        std::cout << " " << pair_text(p);
      std::cout << "\n";
    }
    return;
  }
  ordered_json j;
  j["schema"] = 1;
  j["degree"] = s.degree;
  j["or_orbitals"] = ordered_json::array();
  for (unsigned i = 0; i < s.or_orbitals.size(); ++i) {
    ordered_json o;
    o["index"] = i;
    o["paired_with"] = s.pairing[i];
    o["self_paired"] = s.is_self_paired(i);
    o["pairs"] = s.or_orbitals[i];
    j["or_orbitals"].push_back(std::move(o));
  }
  j["nor_orbitals"] = s.nor_orbitals;
  std::cout << j.dump() << "\n";
}

// --- closure ----------------------------------------------------------------

void print_closure(const ecgr::ClosureResult& r, bool pretty) {
  const char* kind =
      r.kind == ecgr::ClosureKind::graph ? "graph" : "digraph";
  const bool in_class = r.extra.empty();
  if (pretty) {
    std::cout << "kind: " << kind << "\n"
              << "degree: " << r.original.degree() << "\n"
              << "original order: " << r.original.order() << "\n"
              << "closure order: " << r.closure.order() << "\n"
              << "extra elements: " << r.extra.size() << "\n";
    for (std::size_t i = 0; i < r.extra.size() && i < kMaxExtraListed; ++i)
      std::cout << "  " << r.extra[i].cycles() << "\n";
    if (r.extra.size() > kMaxExtraListed)
      std::cout << "  ... (" << r.extra.size() - kMaxExtraListed << " more)\n";
    std::cout << "group equals its closure: " << (in_class ? "yes" : "no")
              << "\n";
    return;
  }
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = kind;
  j["degree"] = r.original.degree();
  j["original_order"] = r.original.order();
  j["closure_order"] = r.closure.order();
  j["extra_size"] = r.extra.size();
  auto extra = ordered_json::array();
  for (std::size_t i = 0; i < r.extra.size() && i < kMaxExtraListed; ++i)
    extra.push_back(r.extra[i].cycles());
  j["extra"] = std::move(extra);
  j["extra_truncated"] = r.extra.size() > kMaxExtraListed;
  j["in_class"] = in_class;
  std::cout << j.dump() << "\n";
}

// --- classify ---------------------------------------------------------------

void print_report(const ecgr::ClassificationReport& report,
                  std::optional<bool> checked, bool pretty) {
  if (pretty) {
    std::cout << "a: " << ecgr::to_string(report.a_status) << "\n"
              << "b: " << ecgr::to_string(report.b_status) << "\n"
              << "product in DGR: " << (report.product_in_dgr ? "yes" : "no")
              << "\n"
              << "product in GR: " << (report.product_in_gr ? "yes" : "no")
              << "\n"
              << "case: " << ecgr::to_string(report.case_fired) << "\n";
    if (report.pairing_a)
      std::cout << "a pairing element: "
                << (*report.pairing_a ? (*report.pairing_a)->cycles() : "none")
                << "\n";
    if (report.pairing_b)
      std::cout << "b pairing element: "
                << (*report.pairing_b ? (*report.pairing_b)->cycles() : "none")
                << "\n";
    if (report.non_self_paired_orbital)
      std::cout << "non-self-paired orbital: O"
                << *report.non_self_paired_orbital << " (factor "
                << (report.swapped ? "a" : "b") << ")\n";
    if (checked)
      std::cout << "cross-check: " << (*checked ? "agree" : "DISAGREE")
                << "\n";
    return;
  }
  ordered_json j;
  j["schema"] = 1;
  const ordered_json body = report.to_json();
  for (const auto& [key, value] : body.items())
    j[key] = value;
  if (checked)
    j["cross_check"] = *checked;
  std::cout << j.dump() << "\n";
}

// --- census -----------------------------------------------------------------

void print_entry_row(const ecgr::CensusEntryRow& row, bool pretty) {
  if (!pretty) {
    std::cout << row.to_json().dump() << "\n";
    return;
  }
  std::cout << "[entry] " << row.name << " degree=" << row.degree
            << " order=" << row.order << " status=" << row.status;
  std::cout << " tags=";
  for (std::size_t i = 0; i < row.tags.size(); ++i)
    std::cout << (i ? "," : "") << row.tags[i];
  if (row.tags.empty())
    std::cout << "-";
  if (row.pairing_scanned)
    std::cout << " pairing="
              << (row.pairing_element ? *row.pairing_element : "none");
  std::cout << "\n";
}

void print_pair_row(const ecgr::CensusPairRow& row, bool pretty) {
  if (!pretty) {
    std::cout << row.to_json().dump() << "\n";
    return;
  }
  std::cout << "[pair] " << row.a << " x " << row.b
            << " degree=" << row.product_degree;
  if (row.report)
    std::cout << " in_dgr=" << (row.report->product_in_dgr ? "yes" : "no")
              << " in_gr=" << (row.report->product_in_gr ? "yes" : "no")
              << " case=" << ecgr::to_string(row.report->case_fired);
  if (!row.note.empty())
    std::cout << " note=\"" << row.note << "\"";
  std::cout << " oracle=\"" << row.oracle << "\"\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides membership in the edge-colored graph and digraph "
               "automorphism-group classes and classifies direct products."};
  app.require_subcommand(1);

  std::string spec, spec_a, spec_b, kind = "graph", format = "dot";
  unsigned degree = 0, degree_a = 0, degree_b = 0, budget = 12;
  bool pretty = false, do_cross_check = false;
  std::vector<std::string> additions;

  auto add_pretty = [&](CLI::App* sub) {
    sub->add_flag("--pretty", pretty, "human-readable table output");
  };

  CLI::App* orbitals = app.add_subcommand(
      "orbitals", "print the orbital structure of a group");
  orbitals->add_option("-g,--group", spec, "group spec")->required();
  orbitals->add_option("--degree", degree, "degree for cycle-notation specs");
  add_pretty(orbitals);

  CLI::App* closure = app.add_subcommand(
      "closure", "print the closure of a group inside one class");
  closure->add_option("-g,--group", spec, "group spec")->required();
  closure->add_option("--degree", degree, "degree for cycle-notation specs");
  closure->add_option("--kind", kind, "graph or digraph")
      ->check(CLI::IsMember({"graph", "digraph"}));
  add_pretty(closure);

  CLI::App* classify = app.add_subcommand(
      "classify", "classify the direct product of two groups");
  classify->add_option("-a", spec_a, "first factor spec")->required();
  classify->add_option("-b", spec_b, "second factor spec")->required();
  classify->add_option("--degree-a", degree_a,
                       "degree for a cycle-notation first factor");
  classify->add_option("--degree-b", degree_b,
                       "degree for a cycle-notation second factor");
  classify->add_flag("--cross-check", do_cross_check,
                     "also verify against the explicit product closures");
  add_pretty(classify);

  CLI::App* census = app.add_subcommand(
      "census", "classify every catalog group and catalog pair");
  census->add_option("--budget", budget,
                     "largest product degree that gets classified");
  census->add_option("--add", additions,
                     "extra catalog entries (named specs); repeatable");
  add_pretty(census);

  CLI::App* exporter = app.add_subcommand(
      "export", "emit the colored graph or digraph built from a group");
  exporter->add_option("-g,--group", spec, "group spec")->required();
  exporter->add_option("--degree", degree, "degree for cycle-notation specs");
  exporter->add_option("--kind", kind, "graph or digraph")
      ->check(CLI::IsMember({"graph", "digraph"}));
  exporter->add_option("--format", format, "dot or edges")
      ->check(CLI::IsMember({"dot", "edges"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const ecgr::Limits limits = limits_from_environment();

    if (orbitals->parsed()) {
      print_orbitals(ecgr::compute_orbitals(resolve_group(spec, degree)),
                     pretty);
    } else if (closure->parsed()) {
      const ecgr::PermGroup group = resolve_group(spec, degree);
      const ecgr::ClosureResult& result =
          kind == "graph" ? ecgr::star_closure(group, limits)
                          : ecgr::two_closure(group, limits);
      print_closure(result, pretty);
    } else if (classify->parsed()) {
      const ecgr::PermGroup a = resolve_group(spec_a, degree_a);
      const ecgr::PermGroup b = resolve_group(spec_b, degree_b);
      const ecgr::ClassificationReport report =
          ecgr::classify_product_gr(a, b, limits);
      std::optional<bool> checked;
      if (do_cross_check)
        checked = ecgr::cross_check(a, b, limits);
      print_report(report, checked, pretty);
    } else if (census->parsed()) {
      std::vector<ecgr::CatalogEntry> catalog = ecgr::default_catalog();
      for (const std::string& extra : additions) {
        if (looks_like_cycles(extra))
          throw ecgr::ParseError("--add takes named specs only");
        catalog.push_back(ecgr::make(extra));
      }
      ecgr::run_census(
          catalog, budget, limits,
          [&](const ecgr::CensusEntryRow& row) { print_entry_row(row, pretty); },
          [&](const ecgr::CensusPairRow& row) { print_pair_row(row, pretty); });
    } else if (exporter->parsed()) {
      const ecgr::PermGroup group = resolve_group(spec, degree);
      if (kind == "graph") {
        const ecgr::ColoredGraph g = ecgr::build_g(group);
        std::cout << (format == "dot" ? ecgr::to_dot(g)
                                      : ecgr::to_edge_list(g));
      } else {
        const ecgr::ColoredDigraph g = ecgr::build_gr(group);
        std::cout << (format == "dot" ? ecgr::to_dot(g)
                                      : ecgr::to_edge_list(g));
      }
    }
  } catch (const ecgr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ecgr::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
