#pragma once

// The medlat command line: check, countermodel, report, verify, enumerate, export.
// Exit codes: 0 valid / pass / found, 1 invalid / none found, 2 error or unknown.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "medlat/io.hpp"
#include "medlat/logic.hpp"
#include "medlat/parser.hpp"
#include "medlat/selector.hpp"
#include "medlat/validity.hpp"
#include "medlat/verify.hpp"

namespace medlat::cli {

enum Exit : int { ok = 0, negative = 1, error = 2 };

namespace detail {

inline std::string describe_countermodel(const Countermodel& cm, const BrouwerAlgebra& a) {
  std::string out;
  for (const auto& [var, v] : cm.assignment) out += (out.empty() ? "" : ", ") + var + " = " + a.label(v);
  if (out.empty()) out = "(no variables)";
  return out + "; value " + a.label(cm.value);
}

inline void print_report(std::ostream& out, const ValidityReport& r, const BrouwerAlgebra& a) {
  out << "formula: " << render(r.formula) << "\n"
      << "algebra: " << r.algebra << " (" << a.size() << " elements)\n"
      << "verdict: " << to_string(r.verdict) << (r.sampled ? " (sampled)" : "") << "\n"
      << "valuations checked: " << r.valuations_checked << "\n";
  if (r.countermodel) out << "countermodel: " << describe_countermodel(*r.countermodel, a) << "\n";
}

struct Common {
  bool json = false;
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;
  bool designate_top = false;

  ValidityOptions options() const {
    ValidityOptions o;
    o.workers = workers;
    o.sample_seed = seed;
    if (designate_top) o.designated = Designation::top;
    return o;
  }
};

inline void add_common(CLI::App* cmd, Common& c, bool validity) {
  cmd->add_flag("--json", c.json, "Print JSON");
  cmd->add_option("--parallel", c.workers, "Worker threads")->check(CLI::Range(1U, 64U));
  if (validity) {
    cmd->add_option("--sample-seed", c.seed, "Sample valuations with this seed when over budget");
    cmd->add_flag("--designate-top", c.designate_top, "Designate the top element (strict mode)");
  }
}

inline int cmd_check(std::ostream& out, const std::string& text, const std::string& spec, const Common& c) {
  const auto f = parse(text);
  const auto a = resolve_algebra(spec, c.workers);
  const auto r = is_valid(f, a, c.options());
  if (c.json)
    out << report_to_json(r, *a).dump() << "\n";
  else
    print_report(out, r, *a);
  switch (r.verdict) {
    case Verdict::valid: return Exit::ok;
    case Verdict::invalid: return Exit::negative;
    case Verdict::unknown: return Exit::error;
  }
  return Exit::error;
}

inline int cmd_countermodel(std::ostream& out, const std::string& text, std::size_t max_size, const Common& c) {
  const auto f = parse(text);
  const auto s = countermodel_search(f, max_size, c.options());
  if (!s.found) {
    if (c.json)
      out << json{{"formula", render(f)}, {"found", false}, {"bound", s.bound},
                  {"posets_examined", s.posets_examined}}.dump()
          << "\n";
    else
      out << "none within bound " << s.bound << " (" << s.posets_examined << " posets examined)\n";
    return Exit::negative;
  }
  const auto& hit = *s.found;
  if (c.json) {
    out << json{{"formula", render(f)},
                {"found", true},
                {"posets_examined", s.posets_examined},
                {"poset", poset_to_json(hit.poset)},
                {"countermodel", countermodel_to_json(*hit.report.countermodel, *hit.algebra)}}
               .dump()
        << "\n";
  } else {
    out << "refuted in B(" << hit.poset.name() << "), " << hit.poset.size() << "-element poset, after "
        << s.posets_examined << " posets\n"
        << poset_to_dot(hit.poset)
        << "countermodel: " << describe_countermodel(*hit.report.countermodel, *hit.algebra) << "\n";
  }
  return Exit::ok;
}

inline int cmd_report(std::ostream& out, const std::string& spec, const Common& c) {
  const auto a = resolve_algebra(spec, c.workers);
  const auto opt = c.options();
  json rows = json::array();
  std::ostringstream table;
  table << std::left << std::setw(13) << "axiom" << std::setw(9) << "verdict" << "countermodel\n";
  for (const auto& e : axiom_catalogue) {
    const std::string name(e.name);
    json row{{"axiom", name}};
    table << std::setw(13) << name;
    try {
      const auto r = is_valid(axiom(name), a, opt);
      row["verdict"] = to_string(r.verdict);
      row["valuations_checked"] = r.valuations_checked;
      row["countermodel"] = r.countermodel ? countermodel_to_json(*r.countermodel, *a) : json(nullptr);
      table << std::setw(9) << to_string(r.verdict)
            << (r.countermodel ? describe_countermodel(*r.countermodel, *a) : "") << "\n";
    } catch (const resource_error& ex) {
      row["verdict"] = "unknown";
      row["error"] = ex.what();
      table << std::setw(9) << "unknown" << "budget: " << ex.what() << "\n";
    }
    rows.push_back(std::move(row));
  }
  const auto width = max_antichain_size(*a);
  const auto negs = all_negations_meet_irreducible(*a);
  if (c.json) {
    out << json{{"algebra", a->provenance()},
                {"size", a->size()},
                {"max_antichain", width},
                {"all_negations_meet_irreducible", negs.ok},
                {"axioms", rows}}
               .dump()
        << "\n";
  } else {
    out << "algebra: " << a->provenance() << "\n"
        << table.str() << "size " << a->size() << ", max antichain " << width
        << ", all negations meet-irreducible: " << (negs.ok ? "yes" : "no") << "\n";
  }
  return Exit::ok;
}

inline int cmd_verify(std::ostream& out, const std::string& suite, std::size_t max_poset, bool as_json) {
  if (max_poset == 0 || max_poset > 6) throw input_error("--max-poset must be in 1..6");
  const auto results = verify::run_suite(suite, max_poset);
  bool all_ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    all_ok = all_ok && r.ok;
    if (as_json) {
      arr.push_back({{"check", r.name}, {"ok", r.ok}, {"checked", r.checked},
                     {"witness", r.ok ? json(nullptr) : json(r.witness)}});
    } else {
      out << (r.ok ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked)";
      if (!r.ok) out << ": " << r.witness;
      out << "\n";
    }
  }
  if (as_json)
    out << json{{"suite", suite}, {"ok", all_ok}, {"checks", arr}}.dump() << "\n";
  else
    out << results.size() << " checks, " << std::count_if(results.begin(), results.end(),
                                                          [](const CheckResult& r) { return !r.ok; })
        << " failed\n";
  return all_ok ? Exit::ok : Exit::negative;
}

inline int cmd_enumerate(std::ostream& out, const std::string& what, std::size_t n, bool as_json) {
  if (what != "posets" && what != "algebras") throw input_error("enumerate: expected 'posets' or 'algebras'");
  const auto posets = enumerate_posets(n);
  json arr = json::array();
  for (const auto& p : posets) {
    if (what == "posets") {
      if (as_json)
        arr.push_back(poset_to_json(p));
      else
        out << p.name() << ": " << p.strict_pairs().size() << " strict pairs\n";
    } else {
      const auto a = from_poset(p);
      if (as_json) {
        arr.push_back({{"poset", p.name()},
                       {"size", a->size()},
                       {"max_antichain", max_antichain_size(*a)},
                       {"all_negations_meet_irreducible", all_negations_meet_irreducible(*a).ok}});
      } else {
        out << "B(" << p.name() << "): " << a->size() << " elements, max antichain "
            << max_antichain_size(*a) << "\n";
      }
    }
  }
  if (as_json)
    out << arr.dump() << "\n";
  else
    out << posets.size() << " " << what << " from posets of size " << n << "\n";
  return Exit::ok;
}

inline int cmd_export(std::ostream& out, const std::string& spec, bool dot, unsigned workers) {
  const auto a = resolve_algebra(spec, workers);
  if (dot)
    out << algebra_to_dot(*a);
  else
    out << algebra_to_json(*a).dump() << "\n";
  return Exit::ok;
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Brouwer algebras and intermediate logics", "medlat"};
  app.require_subcommand(1);

  detail::Common common;
  std::string formula, spec, suite, what;
  std::size_t max_size = 7, max_poset = 5, n = 0;
  bool dot = false, as_json = false;

  auto* check = app.add_subcommand("check", "Decide validity of a formula in an algebra");
  check->add_option("formula", formula, "Formula")->required();
  check->add_option("--algebra", spec, "Algebra selector")->required();
  detail::add_common(check, common, true);

  auto* cm = app.add_subcommand("countermodel", "Search B(P) for small posets P");
  cm->add_option("formula", formula, "Formula")->required();
  cm->add_option("--max-size", max_size, "Largest poset size (<= 7)")->check(CLI::Range(1, 7));
  detail::add_common(cm, common, true);

  auto* report = app.add_subcommand("report", "Axiom table for an algebra");
  report->add_option("--algebra", spec, "Algebra selector")->required();
  detail::add_common(report, common, true);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite, "iso | arrow | factor | hom | kp | free | all")->required();
  ver->add_option("--max-poset", max_poset, "Largest poset size for enumeration checks");
  ver->add_flag("--json", as_json, "Print JSON");

  auto* en = app.add_subcommand("enumerate", "List posets or their algebras up to isomorphism");
  en->add_option("what", what, "posets | algebras")->required();
  en->add_option("n", n, "Poset size (<= 7)")->required()->check(CLI::Range(1, 7));
  en->add_flag("--json", as_json, "Print JSON");

  auto* ex = app.add_subcommand("export", "Write an algebra as DOT or JSON");
  ex->add_option("--algebra", spec, "Algebra selector")->required();
  auto* dot_flag = ex->add_flag("--dot", dot, "Hasse diagram in DOT");
  auto* json_flag = ex->add_flag("--json", as_json, "Operation tables in JSON");
  dot_flag->excludes(json_flag);
  ex->add_option("--parallel", common.workers, "Worker threads")->check(CLI::Range(1U, 64U));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return Exit::error;
  }

  try {
    if (*check) return detail::cmd_check(out, formula, spec, common);
    if (*cm) return detail::cmd_countermodel(out, formula, max_size, common);
    if (*report) return detail::cmd_report(out, spec, common);
    if (*ver) return detail::cmd_verify(out, suite, max_poset, as_json);
    if (*en) return detail::cmd_enumerate(out, what, n, as_json);
    if (*ex) {
      if (!dot && !as_json) throw input_error("export: pass --dot or --json");
      return detail::cmd_export(out, spec, dot, common.workers);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Exit::error;
  }
  return Exit::error;
}

}  // namespace medlat::cli
