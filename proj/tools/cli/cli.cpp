#include "cli/cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treewalk/oracles.hpp"
#include "treewalk/recurrence.hpp"
#include "treewalk/series.hpp"
#include "treewalk/verify.hpp"

namespace treewalk::cli {

namespace {

enum class Format { plain, csv, json, bfile };

struct Globals {
  Format format = Format::plain;
  std::optional<bool> parity_filter;
  std::uint64_t max_states = default_max_states;
};

/// A sequence of (n, value) pairs plus the metadata JSON output carries.
struct Emission {
  nlohmann::ordered_json meta;
  std::vector<std::uint64_t> index;
  std::vector<Rat> values;
};

std::vector<std::uint32_t> selected_n(std::uint32_t i, std::uint32_t n_max, bool filter) {
  std::vector<std::uint32_t> ns;
  for (std::uint32_t n = filter ? i : 0; n <= n_max; n += filter ? 2 : 1) ns.push_back(n);
  return ns;
}

void emit(const Emission& e, Format format, std::ostream& out) {
  switch (format) {
    case Format::plain: {
      for (std::size_t k = 0; k < e.values.size(); ++k) {
        if (k != 0) out << ' ';
        out << e.values[k];
      }
      out << '\n';
      break;
    }
    case Format::csv: {
      out << "n,value\n";
      for (std::size_t k = 0; k < e.values.size(); ++k) out << e.index[k] << ',' << e.values[k] << '\n';
      break;
    }
    case Format::bfile: {
      for (std::size_t k = 0; k < e.values.size(); ++k) out << e.index[k] << ' ' << e.values[k] << '\n';
      break;
    }
    case Format::json: {
      nlohmann::ordered_json j = e.meta;
      auto ns = nlohmann::ordered_json::array();
      auto vs = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < e.values.size(); ++k) {
        ns.push_back(std::to_string(e.index[k]));
        vs.push_back(e.values[k].to_string());
      }
      j["n"] = std::move(ns);
      j["values"] = std::move(vs);
      out << j.dump() << '\n';
      break;
    }
  }
}

void require_feasible(const Nat& need, std::uint64_t cap, const std::string& what) {
  if (need > Nat(cap)) {
    throw error(errc::feasibility, what + " needs " + need.to_string() +
                                       " states, above --max-states " + std::to_string(cap));
  }
}

// --- walks --------------------------------------------------------------------

struct WalksArgs {
  std::uint32_t m = 0;
  std::uint32_t i = 0;
  std::uint32_t n_max = 0;
  std::string method = "dp";
};

std::vector<Rat> tree_values(std::uint32_t m, std::uint32_t i, const std::vector<std::uint32_t>& ns,
                             const std::string& method, std::uint64_t max_states) {
  if (m == 0) throw error(errc::invalid_degree, "tree degree must be at least 1, got 0");
  const std::uint32_t top = ns.empty() ? 0 : ns.back();
  std::vector<Rat> values;
  if (method == "dp") {
    const WalkTable table = build_table(tree_weights(m), top);
    for (auto n : ns) values.push_back(table.at(i, n));
  } else if (method == "gf") {
    const PowerSeries s = gf_f(m, i, top);
    for (auto n : ns) values.push_back(s[n]);
  } else {
    require_feasible(TruncatedTree::vertex_count(m, top), max_states, "tree oracle");
    for (auto n : ns) values.push_back(Rat(tree_walk_count(m, i, n, max_states)));
  }
  return values;
}

void cmd_walks(const WalksArgs& a, const Globals& g, std::ostream& out) {
  const bool filter = g.parity_filter.value_or(false);
  Emission e;
  e.meta["m"] = std::to_string(a.m);
  e.meta["i"] = std::to_string(a.i);
  e.meta["method"] = a.method;
  const auto ns = selected_n(a.i, a.n_max, filter);
  e.values = tree_values(a.m, a.i, ns, a.method, g.max_states);
  e.index.assign(ns.begin(), ns.end());
  emit(e, g.format, out);
}

// --- dyck ---------------------------------------------------------------------

struct DyckArgs {
  std::string c1, c2, c3;
  std::uint32_t i = 0;
  std::uint32_t n_max = 0;
  std::string method = "dp";
};

void cmd_dyck(const DyckArgs& a, const Globals& g, std::ostream& out) {
  const WeightConfig w{Rat::parse(a.c1), Rat::parse(a.c2), Rat::parse(a.c3), std::nullopt};
  const bool filter = g.parity_filter.value_or(false);
  const auto ns = selected_n(a.i, a.n_max, filter);
  const std::uint32_t top = ns.empty() ? 0 : ns.back();

  Emission e;
  e.meta["weights"] = {{"c1", w.c1.to_string()}, {"c2", w.c2.to_string()}, {"c3", w.c3.to_string()}};
  e.meta["i"] = std::to_string(a.i);
  e.meta["method"] = a.method;
  if (a.method == "dp") {
    const WalkTable table = build_table(w, top);
    for (auto n : ns) e.values.push_back(table.at(a.i, n));
  } else if (a.method == "gf") {
    const PowerSeries s = gf_d_i(w, a.i, top);
    for (auto n : ns) e.values.push_back(s[n]);
  } else {
    require_feasible(pow(Nat(2), top), g.max_states, "Dyck enumeration");
    for (auto n : ns) e.values.push_back(enumerate_dyck(w, a.i, n, g.max_states));
  }
  e.index.assign(ns.begin(), ns.end());
  emit(e, g.format, out);
}

// --- bfile --------------------------------------------------------------------

struct BfileArgs {
  std::uint32_t m = 0;
  std::uint32_t i = 0;
  std::uint32_t count = 0;
  std::uint64_t start = 0;
  std::string method = "dp";
};

void cmd_bfile(const BfileArgs& a, const Globals& g, std::ostream& out) {
  if (a.m < 2) {
    throw error(errc::invalid_degree, "bfile export needs m >= 2, got " + std::to_string(a.m));
  }
  // Parity filtering is on by default here, matching the even-length indexing
  // of the published sequences.
  const bool filter = g.parity_filter.value_or(true);
  std::vector<std::uint32_t> ns;
  for (std::uint32_t k = 0; k < a.count; ++k) ns.push_back(filter ? a.i + 2 * k : k);

  Emission e;
  e.meta["m"] = std::to_string(a.m);
  e.meta["i"] = std::to_string(a.i);
  e.meta["method"] = a.method;
  e.values = tree_values(a.m, a.i, ns, a.method, g.max_states);
  for (std::uint32_t k = 0; k < a.count; ++k) e.index.push_back(a.start + k);
  // bfile is the native format of this command; --format only switches to json/csv.
  emit(e, g.format == Format::plain ? Format::bfile : g.format, out);
}

// --- verify -------------------------------------------------------------------

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  const auto results = run_verification(opts);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      out << "PASS " << r.name << '\n';
    } else {
      ++failed;
      out << "FAIL " << r.name << ": " << r.counterexample << '\n';
    }
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact walk counts on regular trees and weighted Dyck paths", "treewalk"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  const std::map<std::string, Format> formats{
      {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}, {"bfile", Format::bfile}};
  app.add_option("--format", g.format, "Output format: plain, csv, json, bfile")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  bool parity_on = false;
  bool parity_off = false;
  auto* pf = app.add_flag("--parity-filter", parity_on, "Emit only n with n = i (mod 2), n >= i");
  auto* npf = app.add_flag("--no-parity-filter", parity_off, "Emit every n");
  pf->excludes(npf);
  app.add_option("--max-states", g.max_states, "Ceiling on oracle enumeration size")
      ->check(CLI::PositiveNumber);

  WalksArgs walks;
  auto* walks_cmd = app.add_subcommand("walks", "A_m(i,n) on the m-regular tree for n = 0..n_max");
  walks_cmd->add_option("-m,--degree", walks.m, "Tree degree m")->required();
  walks_cmd->add_option("-i,--distance", walks.i, "Distance i of the end vertex");
  walks_cmd->add_option("-n,--n-max", walks.n_max, "Largest walk length")->required();
  walks_cmd->add_option("--method", walks.method, "dp, gf or tree")
      ->check(CLI::IsMember({"dp", "gf", "tree"}));

  DyckArgs dyck;
  auto* dyck_cmd = app.add_subcommand("dyck", "A(i,n) for step weights c1 c2 c3");
  dyck_cmd->add_option("c1", dyck.c1, "Up-step weight")->required();
  dyck_cmd->add_option("c2", dyck.c2, "Down-step weight above the axis")->required();
  dyck_cmd->add_option("c3", dyck.c3, "Down-step weight landing on the axis")->required();
  dyck_cmd->add_option("-i,--distance", dyck.i, "Final height i");
  dyck_cmd->add_option("-n,--n-max", dyck.n_max, "Largest path length")->required();
  dyck_cmd->add_option("--method", dyck.method, "dp, gf or enum")
      ->check(CLI::IsMember({"dp", "gf", "enum"}));

  std::string scope = "all";
  VerifyOptions vopts;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every method against the others");
  verify_cmd->add_option("scope", scope, "tree, dyck, freegroup or all")
      ->check(CLI::IsMember({"tree", "dyck", "freegroup", "all"}));
  verify_cmd->add_option("-n,--n-max", vopts.n_max, "Largest length checked");
  verify_cmd->add_option("--m-max", vopts.m_max, "Largest tree degree checked");

  BfileArgs bfile;
  auto* bfile_cmd = app.add_subcommand("bfile", "A_m(i, i+2k) for k < count as an OEIS b-file");
  bfile_cmd->add_option("-m,--degree", bfile.m, "Tree degree m")->required();
  bfile_cmd->add_option("-i,--distance", bfile.i, "Distance i of the end vertex");
  bfile_cmd->add_option("-c,--count", bfile.count, "Number of terms")->required();
  bfile_cmd->add_option("-s,--start", bfile.start, "First b-file index");
  bfile_cmd->add_option("--method", bfile.method, "dp, gf or tree")
      ->check(CLI::IsMember({"dp", "gf", "tree"}));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  if (parity_on) g.parity_filter = true;
  if (parity_off) g.parity_filter = false;

  // Library errors are buffered so a refused command never leaves partial output.
  std::ostringstream buffer;
  try {
    int code = kOk;
    if (*walks_cmd) {
      cmd_walks(walks, g, buffer);
    } else if (*dyck_cmd) {
      cmd_dyck(dyck, g, buffer);
    } else if (*bfile_cmd) {
      cmd_bfile(bfile, g, buffer);
    } else if (*verify_cmd) {
      vopts.scope = *parse_scope(scope);
      vopts.max_states = g.max_states;
      code = cmd_verify(vopts, buffer);
    }
    out << buffer.str();
    return code;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == errc::feasibility ? kInfeasible : kUsage;
  }
}

}  // namespace treewalk::cli
